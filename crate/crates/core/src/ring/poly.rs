use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::{monomials_of_degree, Monomial};
use crate::arith::PrimeField;
use crate::error::{Error, Result};

/// The truncated power series ring `F_p[[x_1..x_v]] / n^cap`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    names: Vec<String>,
    field: PrimeField,
    cap: u32,
}

impl RingSpec {
    pub fn new(names: Vec<String>, field: PrimeField, cap: u32) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::validation("ring needs at least one variable"));
        }
        if cap < 2 {
            return Err(Error::validation(format!("truncation cap {cap} must be at least 2")));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::validation(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::validation(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Arc::new(RingSpec { names, field, cap }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_cap(&self, cap: u32) -> Result<Arc<Self>> {
        RingSpec::new(self.names.clone(), self.field, cap)
    }

    /// Monomials of total degree `d` in basis order.
    pub fn graded_basis(&self, d: u32) -> Result<Vec<Monomial>> {
        if d >= self.cap {
            return Err(Error::cap(format!("degree {d} is not below cap {}", self.cap)));
        }
        Ok(monomials_of_degree(self.nvars(), d))
    }
}

/// Element of a [`RingSpec`]: a finite map from monomials of degree below
/// the cap to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncPoly {
    spec: Arc<RingSpec>,
    terms: BTreeMap<Monomial, u32>,
}

impl TruncPoly {
    pub fn zero(spec: &Arc<RingSpec>) -> Self {
        TruncPoly {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(spec: &Arc<RingSpec>, c: u32) -> Self {
        let mut p = Self::zero(spec);
        p.add_term(Monomial::one(spec.nvars()), c);
        p
    }

    pub fn var(spec: &Arc<RingSpec>, i: usize) -> Self {
        let mut p = Self::zero(spec);
        p.add_term(Monomial::var(spec.nvars(), i), 1);
        p
    }

    /// The linear form `sum c_i x_i`.
    pub fn linear(spec: &Arc<RingSpec>, coeffs: &[u32]) -> Result<Self> {
        if coeffs.len() != spec.nvars() {
            return Err(Error::DimensionMismatch {
                expected: spec.nvars(),
                found: coeffs.len(),
            });
        }
        let mut p = Self::zero(spec);
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(spec.nvars(), i), c % spec.field.p());
        }
        Ok(p)
    }

    pub fn from_terms(spec: &Arc<RingSpec>, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let mut p = Self::zero(spec);
        for (m, c) in terms {
            assert_eq!(m.nvars(), spec.nvars());
            p.add_term(m, c);
        }
        p
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// `v_Q`: least degree of a term, `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|m| m.degree() == 1)
    }

    /// Coefficients of the degree one part, indexed by variable.
    pub fn linear_coefficients(&self) -> Vec<u32> {
        (0..self.spec.nvars())
            .map(|i| self.coeff(&Monomial::var(self.spec.nvars(), i)))
            .collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u32) {
        if c == 0 || m.degree() >= self.spec.cap {
            return;
        }
        let f = self.spec.field;
        let e = self.terms.entry(m);
        match e {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_spec(&self, other: &TruncPoly) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!(
                "{:?} vs {:?}",
                self.spec.names, other.spec.names
            )))
        }
    }

    pub fn add(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> TruncPoly {
        let f = self.spec.field;
        TruncPoly {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> TruncPoly {
        let f = self.spec.field;
        let mut out = TruncPoly::zero(&self.spec);
        for (m, &a) in &self.terms {
            out.add_term(m.clone(), f.mul(a, c));
        }
        out
    }

    /// Product with every term of degree `>= cap` discarded.
    pub fn mul(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.check_spec(other)?;
        let f = self.spec.field;
        let cap = self.spec.cap;
        let mut out = TruncPoly::zero(&self.spec);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                // terms iterate by ascending degree
                if ma.degree() + mb.degree() >= cap {
                    break;
                }
                out.add_term(ma.mul(mb), f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> TruncPoly {
        let mut acc = TruncPoly::constant(&self.spec, 1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Image under the projection to a smaller cap of the same ring.
    pub fn truncate(&self, cap: u32) -> TruncPoly {
        let spec = self.spec.with_cap(cap.min(self.spec.cap)).expect("valid cap");
        TruncPoly::from_terms(
            &spec,
            self.terms.iter().filter(|(m, _)| m.degree() < cap).map(|(m, &c)| (m.clone(), c)),
        )
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.spec.field;
        let mut first = true;
        for (m, &c) in &self.terms {
            let s = field.to_signed(c);
            let (neg, a) = (s < 0, s.unsigned_abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = m.display_with(&self.spec.names);
            match (a, m.degree()) {
                (_, 0) => write!(f, "{a}")?,
                (1, _) => write!(f, "{mono}")?,
                _ => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncPoly({self})")
    }
}
