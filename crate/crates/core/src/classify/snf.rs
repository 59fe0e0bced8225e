//! Smith normal form over `k[[y]] / (y^cap)`.

use crate::arith::PrimeField;
use crate::error::{Error, Result};

/// Truncated univariate series, coefficient `i` of `y^i`.
type Series = Vec<u32>;

fn order(s: &[u32]) -> Option<usize> {
    s.iter().position(|&c| c != 0)
}

fn mul(f: &PrimeField, a: &[u32], b: &[u32]) -> Series {
    let n = a.len();
    let mut out = vec![0; n];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Inverse of a unit series.
fn inverse(f: &PrimeField, u: &[u32]) -> Series {
    let n = u.len();
    let inv0 = f.inv(u[0]);
    let mut out = vec![0; n];
    out[0] = inv0;
    for k in 1..n {
        let mut s = 0;
        for j in 1..=k {
            s = f.add(s, f.mul(u[j], out[k - j]));
        }
        out[k] = f.neg(f.mul(s, inv0));
    }
    out
}

/// `a / b` when `order(a) >= order(b)`.
fn exact_div(f: &PrimeField, a: &[u32], b: &[u32]) -> Series {
    let n = a.len();
    let ob = order(b).expect("nonzero divisor");
    let shift = |s: &[u32]| -> Series {
        let mut v = s[ob..].to_vec();
        v.resize(n, 0);
        v
    };
    mul(f, &shift(a), &inverse(f, &shift(b)))
}

fn sub_scaled(f: &PrimeField, a: &mut [u32], q: &[u32], b: &[u32]) {
    let qb = mul(f, q, b);
    for (x, y) in a.iter_mut().zip(qb) {
        *x = f.sub(*x, y);
    }
}

/// Orders of the Smith normal form diagonal of a square matrix of series,
/// sorted ascending. Errors if the matrix is singular below the truncation.
pub fn smith_orders(f: &PrimeField, mut a: Vec<Vec<Series>>) -> Result<Vec<u32>> {
    let t = a.len();
    let mut orders = Vec::with_capacity(t);
    for k in 0..t {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().skip(k) {
                if let Some(o) = order(e) {
                    if best.is_none_or(|(b, _, _)| o < b) {
                        best = Some((o, i, j));
                    }
                }
            }
        }
        let Some((o, i, j)) = best else {
            return Err(Error::cap("artinian reduction is singular below the ring cap"));
        };
        a.swap(k, i);
        for row in a.iter_mut() {
            row.swap(k, j);
        }
        let pivot = a[k][k].clone();
        for i in k + 1..t {
            if order(&a[i][k]).is_some() {
                let q = exact_div(f, &a[i][k], &pivot);
                let (top, bottom) = a.split_at_mut(i);
                for (x, y) in bottom[0].iter_mut().zip(&top[k]).skip(k) {
                    sub_scaled(f, x, &q, y);
                }
            }
        }
        for j in k + 1..t {
            if order(&a[k][j]).is_some() {
                let q = exact_div(f, &a[k][j], &pivot);
                for row in a.iter_mut().skip(k) {
                    let rk = row[k].clone();
                    sub_scaled(f, &mut row[j], &q, &rk);
                }
            }
        }
        orders.push(o as u32);
    }
    orders.sort_unstable();
    Ok(orders)
}
