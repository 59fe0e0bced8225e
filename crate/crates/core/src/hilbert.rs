//! Hilbert functions, h-polynomials and Hilbert coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::TruncModule;
use crate::ring::binomial;

/// Hilbert data of a module read off its truncated model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `H[n] = ℓ(M / m^{n+1} M)` for `n = 0..=window`.
    #[serde(rename = "H")]
    pub hilbert_samuel: Vec<u64>,
    /// `L[n] = ℓ(m^n M / m^{n+1} M)` for `n = 0..=window`.
    #[serde(rename = "L")]
    pub graded_lengths: Vec<u64>,
    /// Dimension of the module.
    pub r: u32,
    pub h_coeffs: Vec<i64>,
    /// `e_0 ..= e_r`.
    pub e: Vec<i64>,
    pub mu: u64,
}

impl HilbertData {
    pub fn multiplicity(&self) -> i64 {
        self.e[0]
    }
}

/// `H[n] = ℓ(M / m^{n+1} M)` for `n = 0..=window`.
pub fn hilbert_function(m: &TruncModule, window: u32) -> Result<Vec<u64>> {
    if window + 1 > m.cap() {
        return Err(Error::cap(format!("window {window} needs cap at least {}", window + 1)));
    }
    Ok((0..=window).map(|n| m.level_dim(n + 1) as u64).collect())
}

/// Dimension and h-polynomial from the graded lengths `L_0..=L_w`.
///
/// `r` is the least `k` for which `(1 - z)^k sum L_n z^n` has vanishing
/// coefficients at `w - 1` and `w`, i.e. the `k`-th differences of `H` are
/// constant on the last three points.
pub fn h_from_lengths(lengths: &[u64], max_dim: u32) -> Result<(u32, Vec<i64>)> {
    if lengths.len() < 3 {
        return Err(Error::cap("window too small to detect the dimension"));
    }
    let w = lengths.len() - 1;
    let mut series: Vec<i64> = lengths.iter().map(|&l| l as i64).collect();
    for k in 0..=max_dim {
        if series[w - 1] == 0 && series[w] == 0 {
            let h = zpoly::trim(series);
            if zpoly::eval_one(&h) <= 0 {
                return Err(Error::assertion(format!("h-polynomial {h:?} has h(1) <= 0")));
            }
            return Ok((k, h));
        }
        series = zpoly::times_one_minus_z(&series);
    }
    Err(Error::cap(format!(
        "Hilbert function not eventually polynomial within a window of {} terms",
        w + 1
    )))
}

/// Dimension, h-polynomial and Hilbert coefficients of `M`, using the
/// graded lengths up to `window` (default `cap - 1`, the last exact one).
pub fn h_polynomial(m: &TruncModule, window: Option<u32>) -> Result<HilbertData> {
    let w = window.unwrap_or(m.cap() - 1);
    if w + 1 > m.cap() {
        return Err(Error::cap(format!("window {w} needs cap at least {}", w + 1)));
    }
    let graded_lengths: Vec<u64> = (0..=w).map(|n| m.graded_length(n) as u64).collect();
    let (r, h_coeffs) = h_from_lengths(&graded_lengths, m.spec().nvars() as u32)?;
    let e = hilbert_coefficients(&h_coeffs, r);
    Ok(HilbertData {
        hilbert_samuel: hilbert_function(m, w)?,
        mu: graded_lengths[0],
        graded_lengths,
        r,
        h_coeffs,
        e,
    })
}

/// `e_i = h^{(i)}(1) / i! = sum_j C(j, i) h_j` for `i = 0..=r`.
pub fn hilbert_coefficients(h: &[i64], r: u32) -> Vec<i64> {
    (0..=r as u64)
        .map(|i| {
            h.iter()
                .enumerate()
                .map(|(j, &c)| binomial(j as u64, i) as i64 * c)
                .sum()
        })
        .collect()
}

/// Integer polynomials in `z` as coefficient vectors, lowest degree first.
pub mod zpoly {
    use std::fmt::Write;

    pub fn trim(mut p: Vec<i64>) -> Vec<i64> {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    pub fn eval_one(p: &[i64]) -> i64 {
        p.iter().sum()
    }

    /// `(1 - z) p`, keeping the length of `p` (a truncated product).
    pub fn times_one_minus_z(p: &[i64]) -> Vec<i64> {
        (0..p.len()).map(|i| p[i] - if i > 0 { p[i - 1] } else { 0 }).collect()
    }

    pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect())
    }

    pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
        let nb: Vec<i64> = b.iter().map(|c| -c).collect();
        add(a, &nb)
    }

    pub fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    /// `(1 - z)^k`.
    pub fn one_minus_z_pow(k: u32) -> Vec<i64> {
        let mut p = vec![1];
        for _ in 0..k {
            p.push(0);
            p = times_one_minus_z(&p);
        }
        p
    }

    /// Render as `4 + 6z^2 - 4z^3 + z^4`.
    pub fn format(p: &[i64]) -> String {
        let mut s = String::new();
        for (i, &c) in p.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let a = c.unsigned_abs();
            if s.is_empty() {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            match (i, a) {
                (0, _) => write!(s, "{a}").unwrap(),
                (_, 1) => {}
                _ => write!(s, "{a}").unwrap(),
            }
            match i {
                0 => {}
                1 => s.push('z'),
                _ => write!(s, "z^{i}").unwrap(),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::module::Presentation;
    use crate::ring::{parse_poly, RingSpec, TruncPoly};
    use std::sync::Arc;

    fn xyzt() -> Arc<RingSpec> {
        let names = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        RingSpec::new(names, PrimeField::default(), 24).unwrap()
    }

    fn build(rows: &[&[&str]], f: &str, cap: u32) -> TruncModule {
        let r = xyzt();
        let phi = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_poly(s, &r).unwrap()).collect())
            .collect();
        let p = Presentation::new(&r, phi, parse_poly(f, &r).unwrap(), "t").unwrap();
        TruncModule::build(&p, cap).unwrap()
    }

    #[test]
    fn ring_a() {
        let m = build(&[&["x^2*(x-y)"]], "x^2*(x-y)", 7);
        let hd = h_polynomial(&m, None).unwrap();
        assert_eq!(hd.r, 3);
        assert_eq!(hd.h_coeffs, [1, 1, 1]);
        assert_eq!(hd.e, [3, 3, 1, 0]);
        assert_eq!(&hd.hilbert_samuel[..4], &[1, 5, 15, 34]);
    }

    #[test]
    fn regular_ring_proxy() {
        // an equation of order past the window behaves like Q itself
        let m = build(&[&["x^9"]], "x^9", 8);
        let h = hilbert_function(&m, 6).unwrap();
        for (n, &v) in h.iter().enumerate() {
            assert_eq!(v, binomial(n as u64 + 4, 4));
        }
    }

    #[test]
    fn residue_field() {
        let r = xyzt();
        let cols: Vec<Vec<TruncPoly>> =
            ["x", "y", "z", "t"].iter().map(|s| vec![parse_poly(s, &r).unwrap()]).collect();
        let m = TruncModule::from_columns(&r, 1, &cols, 6, "k").unwrap();
        assert!(hilbert_function(&m, 5).unwrap().iter().all(|&h| h == 1));
        let hd = h_polynomial(&m, None).unwrap();
        assert_eq!((hd.r, hd.h_coeffs.clone()), (0, vec![1]));
    }

    #[test]
    fn cohen_macaulay_example() {
        let m = build(
            &[&["x", "0", "0", "0"], &["0", "x^2", "0", "0"], &["0", "0", "x^2", "0"], &["0", "0", "0", "x^2"]],
            "x^2*(x-y)",
            7,
        );
        let hd = h_polynomial(&m, None).unwrap();
        assert_eq!((hd.r, hd.h_coeffs.clone(), hd.mu), (3, vec![4, 3], 4));
    }

    #[test]
    fn depth_zero_example() {
        let m = build(
            &[&["x", "y", "z", "t"], &["x^2", "x^2", "0", "0"], &["0", "0", "x^2", "0"], &["0", "0", "0", "x^2"]],
            "x^2*(x-y)",
            7,
        );
        let hd = h_polynomial(&m, None).unwrap();
        assert_eq!(hd.h_coeffs, [4, 0, 6, -4, 1]);
        assert_eq!(zpoly::sub(&[3, 4], &zpoly::one_minus_z_pow(4).iter().map(|c| -c).collect::<Vec<_>>()), hd.h_coeffs);
    }

    #[test]
    fn coefficients() {
        assert_eq!(hilbert_coefficients(&[1, 1, 1], 2), [3, 3, 1]);
        assert_eq!(hilbert_coefficients(&[4], 3), [4, 0, 0, 0]);
        assert_eq!(hilbert_coefficients(&[4, 0, 2], 2)[2], 2);
    }

    #[test]
    fn small_window_is_a_cap_error() {
        let m = build(&[&["x^2*(x-y)"]], "x^2*(x-y)", 4);
        assert!(matches!(h_polynomial(&m, None), Err(Error::CapTooSmall(_))));
        assert!(hilbert_function(&m, 4).is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(zpoly::format(&[4, 0, 6, -4, 1]), "4 + 6z^2 - 4z^3 + z^4");
        assert_eq!(zpoly::format(&[4, 1]), "4 + z");
        assert_eq!(zpoly::format(&[0, -2]), "-2z");
        assert_eq!(zpoly::format(&[]), "0");
        assert_eq!(zpoly::one_minus_z_pow(2), [1, -2, 1]);
        assert_eq!(zpoly::mul(&[1, -1], &[1, 1]), [1, 0, -1]);
    }
}
