use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{h_from_lengths, h_polynomial, zpoly};
use crate::module::{Submodule, TruncModule};

/// Ratliff–Rush filtration `m̃^n M = ∪_i (m^{n+i} M : m^i)` within the cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RRReport {
    /// `m̃^n M` for `n = 1..=rr_subspaces.len()`.
    #[serde(skip)]
    pub rr_subspaces: Vec<Submodule>,
    /// `ℓ(m̃^n M / m^n M)` for `n = 0..=N`; the last entry is 0.
    pub excess: Vec<usize>,
    /// `r_M(z) = sum ℓ(m̃^{n+1} M / m^{n+1} M) z^n`.
    pub r_coeffs: Vec<i64>,
    pub h_tilde: Vec<i64>,
    /// For each `n`, the first `i` with `U_i = U_{i+1}`.
    pub stabilized_at: Vec<u32>,
}

impl RRReport {
    /// `ℓ(m̃^n M / m^n M)`, zero past the computed range.
    pub fn excess_at(&self, n: usize) -> usize {
        self.excess.get(n).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.r_coeffs.is_empty()
    }
}

/// `m̃^n M` and the `i` at which the colon chain stabilized.
fn rr_power(m: &TruncModule, n: u32) -> Result<(Submodule, u32)> {
    let cap = m.cap();
    let mut current = m.power(n)?;
    let mut i = 0;
    while n + i + 2 < cap {
        let target = m.power(n + i + 1)?;
        let next = m.lower(&m.colon_ideal_power(&target, i + 1)?, n)?;
        if next == current {
            return Ok((current, i));
        }
        current = next;
        i += 1;
    }
    Err(Error::cap(format!("Ratliff–Rush colons for n = {n} do not stabilize below cap {cap}")))
}

/// Ratliff–Rush filtration, `r_M(z)` and `h̃_M(z)`, with the identity
/// `h = h̃ + (1 - z)^{r+1} r_M` checked before returning.
pub fn rr_filtration(m: &TruncModule, window: Option<u32>) -> Result<RRReport> {
    let hd = h_polynomial(m, window)?;
    if hd.r == 0 {
        return Err(Error::Precondition("Ratliff–Rush filtration needs a module of positive depth".into()));
    }
    let top = m.cap().saturating_sub(3);
    if top < 2 {
        return Err(Error::cap("cap too small for the Ratliff–Rush filtration"));
    }
    let mut rr_subspaces = Vec::new();
    let mut stabilized_at = Vec::new();
    let mut excess = vec![0usize];
    for n in 1..=top {
        let (u, i) = rr_power(m, n)?;
        excess.push(u.space().dim());
        rr_subspaces.push(u);
        stabilized_at.push(i);
    }
    if *excess.last().unwrap() != 0 {
        return Err(Error::cap("Ratliff–Rush filtration still differs from the m-adic one at the cap"));
    }
    // filtration check: m * m̃^n ⊆ m̃^{n+1}
    let vars = m.variable_forms();
    for n in 1..rr_subspaces.len() {
        let prod = m.ideal_times(&vars, &rr_subspaces[n - 1], n as u32 + 1)?;
        if !m.contains(&rr_subspaces[n], &prod)? {
            return Err(Error::assertion(format!("m m̃^{n}M is not inside m̃^{}M", n + 1)));
        }
    }
    let excess_at = |n: usize| excess.get(n).copied().unwrap_or(0) as i64;
    let w = hd.graded_lengths.len();
    let tilde = (0..w)
        .map(|n| {
            let l = hd.graded_lengths[n] as i64 + excess_at(n) - excess_at(n + 1);
            u64::try_from(l).map_err(|_| Error::assertion("negative Ratliff–Rush graded length"))
        })
        .collect::<Result<Vec<u64>>>()?;
    let (rt, h_tilde) = h_from_lengths(&tilde, hd.r)?;
    if rt != hd.r {
        return Err(Error::assertion("Ratliff–Rush Hilbert series has the wrong dimension"));
    }
    let r_coeffs = zpoly::trim((0..excess.len() - 1).map(|n| excess_at(n + 1)).collect());
    let rhs = zpoly::add(&h_tilde, &zpoly::mul(&zpoly::one_minus_z_pow(hd.r + 1), &r_coeffs));
    if rhs != hd.h_coeffs {
        return Err(Error::assertion(format!(
            "h = {} but h̃ + (1-z)^(r+1) r_M = {}",
            zpoly::format(&hd.h_coeffs),
            zpoly::format(&rhs)
        )));
    }
    Ok(RRReport {
        rr_subspaces,
        excess,
        r_coeffs,
        h_tilde,
        stabilized_at,
    })
}
