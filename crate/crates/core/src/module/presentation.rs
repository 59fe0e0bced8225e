use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{eliminate_linear_form, RingSpec, Substitution, TruncPoly};

/// A minimal square presentation `0 -> Q^t --phi--> Q^t -> M -> 0` of a
/// module over the hypersurface `A = Q/(f)`. Columns of `phi` are the
/// relations among the generators `e_1..e_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    spec: Arc<RingSpec>,
    /// Row-major entries.
    phi: Vec<Vec<TruncPoly>>,
    f: TruncPoly,
    label: String,
}

/// Invariants read off a minimal presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresInvariants {
    pub mu: usize,
    pub i_m: u32,
    pub det_order: u32,
    /// `mu * i(M)`, the lower bound for `e(M)`.
    pub e_bound: u32,
}

impl Presentation {
    pub fn new(spec: &Arc<RingSpec>, phi: Vec<Vec<TruncPoly>>, f: TruncPoly, label: impl Into<String>) -> Result<Self> {
        let t = phi.len();
        if t == 0 {
            return Err(Error::validation("presentation matrix is empty"));
        }
        for row in &phi {
            if row.len() != t {
                return Err(Error::validation(format!(
                    "presentation matrix must be square, found a row of length {} in a {t}-row matrix",
                    row.len()
                )));
            }
        }
        for p in phi.iter().flatten().chain(std::iter::once(&f)) {
            if **p.spec() != **spec {
                return Err(Error::SpecMismatch("entry from a different ring".into()));
            }
        }
        if let Some((i, j)) = (0..t)
            .flat_map(|i| (0..t).map(move |j| (i, j)))
            .find(|&(i, j)| phi[i][j].order() == Some(0))
        {
            return Err(Error::validation(format!(
                "presentation is not minimal: entry ({}, {}) = {} is a unit",
                i + 1,
                j + 1,
                phi[i][j]
            )));
        }
        match f.order() {
            None => return Err(Error::validation("hypersurface equation is zero")),
            Some(o) if o < 2 => {
                return Err(Error::validation(format!(
                    "hypersurface equation must lie in n^2, `{f}` has order {o}"
                )))
            }
            _ => {}
        }
        Ok(Presentation {
            spec: spec.clone(),
            phi,
            f,
            label: label.into(),
        })
    }

    /// The 1x1 presentation `(f)` of `A` itself.
    pub fn ring_itself(spec: &Arc<RingSpec>, f: TruncPoly, label: impl Into<String>) -> Result<Self> {
        Presentation::new(spec, vec![vec![f.clone()]], f, label)
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.phi.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &TruncPoly {
        &self.phi[i][j]
    }

    pub fn rows(&self) -> &[Vec<TruncPoly>] {
        &self.phi
    }

    /// Column `j`, the `j`-th relation.
    pub fn column(&self, j: usize) -> Vec<TruncPoly> {
        self.phi.iter().map(|row| row[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<TruncPoly>> {
        (0..self.rank()).map(|j| self.column(j)).collect()
    }

    pub fn f(&self) -> &TruncPoly {
        &self.f
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `i(M)`: the least order of a nonzero entry.
    pub fn entry_order(&self) -> Result<u32> {
        self.phi
            .iter()
            .flatten()
            .filter_map(|p| p.order())
            .min()
            .ok_or_else(|| Error::validation("presentation matrix is zero"))
    }

    /// Determinant, truncated at the ring cap (cofactor expansion).
    pub fn determinant(&self) -> TruncPoly {
        let idx: Vec<usize> = (0..self.rank()).collect();
        det_rec(&self.phi, 0, &idx, &self.spec)
    }

    pub fn invariants(&self) -> Result<PresInvariants> {
        let i_m = self.entry_order()?;
        let det = self.determinant();
        let det_order = det.order().ok_or_else(|| {
            Error::cap(format!(
                "determinant vanishes below ring cap {}; raise the cap",
                self.spec.cap()
            ))
        })?;
        let mu = self.rank();
        Ok(PresInvariants {
            mu,
            i_m,
            det_order,
            e_bound: mu as u32 * i_m,
        })
    }

    /// Presentation of `M / xM` over `Q / (x)` for a linear form `x`.
    pub fn quotient_by_form(&self, form: &TruncPoly) -> Result<(Presentation, Substitution)> {
        let (target, sub) = eliminate_linear_form(&self.spec, form)?;
        let phi = self
            .phi
            .iter()
            .map(|row| row.iter().map(|p| sub.apply(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let f = sub.apply(&self.f)?;
        if f.is_zero() {
            return Err(Error::Precondition(format!(
                "`{form}` divides the hypersurface equation below the cap"
            )));
        }
        let label = format!("{}/({})", self.label, form);
        let pres = Presentation::new(&target, phi, f, label).map_err(|e| match e {
            Error::Validation(msg) => Error::Precondition(format!("form `{form}` is not generic enough: {msg}")),
            other => other,
        })?;
        Ok((pres, sub))
    }
}

fn det_rec(m: &[Vec<TruncPoly>], row: usize, cols: &[usize], spec: &Arc<RingSpec>) -> TruncPoly {
    if cols.is_empty() {
        return TruncPoly::constant(spec, 1);
    }
    let mut acc = TruncPoly::zero(spec);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, row + 1, &rest, spec);
        let term = entry.mul(&minor).expect("same ring");
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }.expect("same ring");
    }
    acc
}
