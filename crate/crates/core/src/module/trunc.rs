use std::collections::HashMap;
use std::sync::Arc;

use super::presentation::Presentation;
use crate::arith::{echelonize, kernel, Echelon, Matrix, PrimeField, Subspace};
use crate::error::{Error, Result};
use crate::ring::{Monomial, RingSpec, TruncPoly};

/// Finite-dimensional model of `M / m^cap M` for `M = coker(phi)`.
///
/// The relations are echelonized in `Q^t / n^cap Q^t` with coordinates
/// ordered by ascending degree, so every relation's pivot is its lowest-degree
/// coordinate. The non-pivot ("standard") coordinates then form a basis of
/// `M / m^cap M` in which `m^n M` is exactly the span of the standard
/// coordinates of degree `>= n`. Multiplication by each variable is stored as
/// a sparse matrix in standard coordinates.
#[derive(Debug, Clone)]
pub struct TruncModule {
    spec: Arc<RingSpec>,
    label: String,
    t: usize,
    cap: u32,
    ambient_dim: usize,
    relations_rank: usize,
    std: Vec<(usize, Monomial)>,
    degrees: Vec<u32>,
    level_dims: Vec<usize>,
    /// `mult[var][col]`: sparse column `(row, value)` of multiplication by
    /// that variable.
    mult: Vec<Vec<Vec<(u32, u32)>>>,
}

/// A submodule `U` of `M` with `m^level M ⊆ U`, stored as its image in
/// `M / m^level M`, i.e. a subspace of the first `level_dim(level)`
/// standard coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    level: u32,
    space: Subspace,
}

impl Submodule {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }
}

struct Reduced {
    index: HashMap<Monomial, usize>,
    std_pos: Vec<Option<u32>>,
    /// For pivot coordinates: `e_a = -sum r_s e_s` over standard `s`.
    rows: Vec<Option<Vec<(u32, u32)>>>,
}

impl TruncModule {
    /// Build the model of `coker(phi)` truncated at `cap`, checking that `f`
    /// annihilates it.
    pub fn build(pres: &Presentation, cap: u32) -> Result<Self> {
        if cap > pres.spec().cap() {
            return Err(Error::Precondition(format!(
                "module cap {cap} exceeds ring cap {}",
                pres.spec().cap()
            )));
        }
        let (module, reduced) =
            Self::assemble(pres.spec(), pres.rank(), &pres.columns(), cap, pres.label())?;
        for i in 0..pres.rank() {
            let v: Vec<(usize, u32)> = pres
                .f()
                .terms()
                .iter()
                .filter(|(m, _)| m.degree() < cap)
                .map(|(m, &c)| (reduced.index[m] * pres.rank() + i, c))
                .collect();
            if !module.normal_form_sparse(&reduced, &v).iter().all(|&(_, c)| c == 0) {
                return Err(Error::validation(format!(
                    "`{}` does not annihilate generator e{} of {}",
                    pres.f(),
                    i + 1,
                    pres.label()
                )));
            }
        }
        Ok(module)
    }

    /// Model of the cokernel of an arbitrary `t x s` matrix given by its
    /// columns. No hypersurface is checked.
    pub fn from_columns(spec: &Arc<RingSpec>, t: usize, columns: &[Vec<TruncPoly>], cap: u32, label: &str) -> Result<Self> {
        if cap > spec.cap() {
            return Err(Error::Precondition(format!("module cap {cap} exceeds ring cap {}", spec.cap())));
        }
        for c in columns {
            if c.len() != t {
                return Err(Error::DimensionMismatch { expected: t, found: c.len() });
            }
        }
        Ok(Self::assemble(spec, t, columns, cap, label)?.0)
    }

    fn assemble(spec: &Arc<RingSpec>, t: usize, columns: &[Vec<TruncPoly>], cap: u32, label: &str) -> Result<(Self, Reduced)> {
        if cap < 2 {
            return Err(Error::Precondition("module cap must be at least 2".into()));
        }
        let field = *spec.field();
        let p = field.p() as u64;
        let v = spec.nvars();
        let mut monos: Vec<Monomial> = Vec::new();
        for d in 0..cap {
            monos.extend(spec.graded_basis(d)?);
        }
        let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let ambient = monos.len() * t;

        // forward elimination, pivots at the lowest coordinate
        let mut pivot_rows: Vec<Option<Vec<(u32, u32)>>> = vec![None; ambient];
        let mut acc = vec![0u64; ambient];
        let mut rank = 0usize;
        for col in columns {
            let Some(ord) = col.iter().filter_map(|e| e.order()).min() else {
                continue;
            };
            for alpha in monos.iter().take_while(|m| m.degree() + ord < cap) {
                let mut lo = ambient;
                for (i, entry) in col.iter().enumerate() {
                    for (beta, &c) in entry.terms() {
                        if alpha.degree() + beta.degree() >= cap {
                            break;
                        }
                        let a = index[&alpha.mul(beta)] * t + i;
                        acc[a] += c as u64;
                        lo = lo.min(a);
                    }
                }
                let mut c = lo;
                while c < ambient {
                    let val = acc[c] % p;
                    acc[c] = 0;
                    if val == 0 {
                        c += 1;
                        continue;
                    }
                    if let Some(row) = &pivot_rows[c] {
                        let m = p - val;
                        for &(j, b) in row {
                            acc[j as usize] += m * b as u64;
                        }
                        c += 1;
                        continue;
                    }
                    let inv = field.inv(val as u32) as u64;
                    let mut row = Vec::new();
                    for (j, a) in acc.iter_mut().enumerate().skip(c + 1) {
                        if *a != 0 {
                            let r = (*a % p) * inv % p;
                            if r != 0 {
                                row.push((j as u32, r as u32));
                            }
                            *a = 0;
                        }
                    }
                    pivot_rows[c] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }

        let mut std_pos = vec![None; ambient];
        let mut std = Vec::new();
        for a in 0..ambient {
            if pivot_rows[a].is_none() {
                std_pos[a] = Some(std.len() as u32);
                std.push((a % t, monos[a / t].clone()));
            }
        }

        // back substitution: express every pivot coordinate in standard ones
        let mut reduced: Vec<Option<Vec<(u32, u32)>>> = vec![None; ambient];
        for c in (0..ambient).rev() {
            let Some(row) = &pivot_rows[c] else { continue };
            for &(j, b) in row {
                let j = j as usize;
                match std_pos[j] {
                    Some(s) => acc[s as usize] += b as u64,
                    None => {
                        let m = p - b as u64;
                        for &(s, r) in reduced[j].as_ref().expect("reduced earlier") {
                            acc[s as usize] += m * r as u64;
                        }
                    }
                }
            }
            let mut out = Vec::new();
            for (s, a) in acc.iter_mut().enumerate().take(std.len()) {
                if *a != 0 {
                    let r = *a % p;
                    if r != 0 {
                        out.push((s as u32, r as u32));
                    }
                    *a = 0;
                }
            }
            reduced[c] = Some(out);
        }
        drop(pivot_rows);
        let red = Reduced { index, std_pos, rows: reduced };

        let degrees: Vec<u32> = std.iter().map(|(_, m)| m.degree()).collect();
        let level_dims: Vec<usize> = (0..=cap).map(|k| degrees.partition_point(|&d| d < k)).collect();

        let mut module = TruncModule {
            spec: spec.clone(),
            label: label.to_string(),
            t,
            cap,
            ambient_dim: ambient,
            relations_rank: rank,
            std,
            degrees,
            level_dims,
            mult: Vec::new(),
        };
        let mut mult = vec![Vec::with_capacity(module.std.len()); v];
        for (k, mk) in mult.iter_mut().enumerate() {
            let xk = Monomial::var(v, k);
            for (gen, mono) in &module.std {
                if mono.degree() + 1 >= cap {
                    mk.push(Vec::new());
                    continue;
                }
                let a = red.index[&mono.mul(&xk)] * t + gen;
                mk.push(module.normal_form_sparse(&red, &[(a, 1)]));
            }
        }
        module.mult = mult;
        Ok((module, red))
    }

    fn normal_form_sparse(&self, red: &Reduced, v: &[(usize, u32)]) -> Vec<(u32, u32)> {
        let field = *self.spec.field();
        let mut acc: HashMap<u32, u32> = HashMap::new();
        for &(a, c) in v {
            match red.std_pos[a] {
                Some(s) => {
                    let e = acc.entry(s).or_insert(0);
                    *e = field.add(*e, c);
                }
                None => {
                    for &(s, r) in red.rows[a].as_ref().expect("pivot row") {
                        let e = acc.entry(s).or_insert(0);
                        *e = field.sub(*e, field.mul(c, r));
                    }
                }
            }
        }
        let mut out: Vec<(u32, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable();
        out
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    pub fn field(&self) -> &PrimeField {
        self.spec.field()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> usize {
        self.t
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Dimension of `Q^t / n^cap Q^t`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the image of `phi` in `Q^t / n^cap Q^t`.
    pub fn relations_rank(&self) -> usize {
        self.relations_rank
    }

    /// `ℓ(M / m^cap M)`.
    pub fn dim(&self) -> usize {
        self.std.len()
    }

    /// `ℓ(M / m^k M)`, exact for `k <= cap`.
    pub fn level_dim(&self, k: u32) -> usize {
        self.level_dims[k.min(self.cap) as usize]
    }

    /// `ℓ(m^n M / m^{n+1} M)` for `n < cap`.
    pub fn graded_length(&self, n: u32) -> usize {
        assert!(n < self.cap);
        self.level_dims[n as usize + 1] - self.level_dims[n as usize]
    }

    pub fn standard_basis(&self) -> &[(usize, Monomial)] {
        &self.std
    }

    pub fn degree_of(&self, s: usize) -> u32 {
        self.degrees[s]
    }

    fn check_level(&self, level: u32) -> Result<()> {
        if level > self.cap {
            Err(Error::cap(format!("level {level} exceeds module cap {}", self.cap)))
        } else {
            Ok(())
        }
    }

    /// Coefficients of a linear form in this module's ring.
    pub fn form_coefficients(&self, x: &TruncPoly) -> Result<Vec<u32>> {
        if **x.spec() != *self.spec && x.spec().names() != self.spec.names() {
            return Err(Error::SpecMismatch(format!(
                "form over {:?}, module over {:?}",
                x.spec().names(),
                self.spec.names()
            )));
        }
        if !x.is_linear_form() {
            return Err(Error::Precondition(format!("`{x}` is not a linear form")));
        }
        Ok(x.linear_coefficients())
    }

    /// Multiplication by the linear form with coefficients `form` on
    /// `M / m^level M`.
    pub fn multiplication_matrix(&self, form: &[u32], level: u32) -> Matrix {
        let field = self.field();
        let n = self.level_dim(level);
        let mut m = Matrix::zeros(n, n);
        for (k, &ck) in form.iter().enumerate() {
            if ck == 0 {
                continue;
            }
            for s in 0..n {
                for &(r, v) in &self.mult[k][s] {
                    let r = r as usize;
                    if r < n {
                        let cur = m.get(r, s);
                        m.set(r, s, field.add(cur, field.mul(ck, v)));
                    }
                }
            }
        }
        m
    }

    fn unit_form(&self, k: usize) -> Vec<u32> {
        let mut f = vec![0; self.spec.nvars()];
        f[k] = 1;
        f
    }

    /// `m^n M`.
    pub fn power(&self, n: u32) -> Result<Submodule> {
        self.check_level(n)?;
        Ok(Submodule {
            level: n,
            space: Subspace::zero(self.level_dim(n)),
        })
    }

    /// Submodule generated by `m^level M` and the given vectors of
    /// `M / m^level M`.
    pub fn submodule(&self, level: u32, vectors: &[Vec<u32>]) -> Result<Submodule> {
        self.check_level(level)?;
        Ok(Submodule {
            level,
            space: echelonize(self.field(), vectors, self.level_dim(level))?,
        })
    }

    /// Same submodule represented at a higher level.
    pub fn lift(&self, u: &Submodule, level: u32) -> Result<Submodule> {
        self.check_level(level)?;
        if level < u.level {
            return self.lower(u, level);
        }
        let lo = self.level_dim(u.level);
        let hi = self.level_dim(level);
        let mut basis: Vec<Vec<u32>> = Vec::with_capacity(u.space.dim() + hi - lo);
        let mut pivots = Vec::with_capacity(u.space.dim() + hi - lo);
        for (row, &piv) in u.space.basis().iter().zip(u.space.pivots()) {
            let mut r = row.clone();
            r.resize(hi, 0);
            basis.push(r);
            pivots.push(piv);
        }
        for s in lo..hi {
            let mut r = vec![0; hi];
            r[s] = 1;
            basis.push(r);
            pivots.push(s);
        }
        Ok(Submodule {
            level,
            space: Subspace::from_rref_parts(hi, basis, pivots),
        })
    }

    /// Represent at a lower level; requires `m^level M ⊆ U`.
    pub fn lower(&self, u: &Submodule, level: u32) -> Result<Submodule> {
        if level >= u.level {
            return self.lift(u, level);
        }
        let lo = self.level_dim(level);
        let hi = self.level_dim(u.level);
        let field = self.field();
        for s in lo..hi {
            let mut e = vec![0; hi];
            e[s] = 1;
            if !u.space.contains(field, &e) {
                return Err(Error::Precondition(format!(
                    "submodule does not contain m^{level} M"
                )));
            }
        }
        let vectors: Vec<Vec<u32>> = u.space.basis().iter().map(|r| r[..lo].to_vec()).collect();
        Ok(Submodule {
            level,
            space: echelonize(field, &vectors, lo)?,
        })
    }

    /// Smallest level at which `U` can be represented.
    pub fn normalize(&self, u: &Submodule) -> Submodule {
        let mut cur = u.clone();
        while cur.level > 0 {
            match self.lower(&cur, cur.level - 1) {
                Ok(next) => cur = next,
                Err(_) => break,
            }
        }
        cur
    }

    fn common(&self, a: &Submodule, b: &Submodule) -> Result<(Submodule, Submodule)> {
        let level = a.level.max(b.level);
        Ok((self.lift(a, level)?, self.lift(b, level)?))
    }

    pub fn contains(&self, big: &Submodule, small: &Submodule) -> Result<bool> {
        let (b, s) = self.common(big, small)?;
        Ok(s.space.is_subspace_of(self.field(), &b.space))
    }

    pub fn equal(&self, a: &Submodule, b: &Submodule) -> Result<bool> {
        let (a, b) = self.common(a, b)?;
        Ok(a.space == b.space)
    }

    /// `ℓ(M / U)`.
    pub fn colength(&self, u: &Submodule) -> usize {
        self.level_dim(u.level) - u.space.dim()
    }

    /// `ℓ(big / small)`; errors unless `small ⊆ big`.
    pub fn length(&self, big: &Submodule, small: &Submodule) -> Result<usize> {
        let (b, s) = self.common(big, small)?;
        if !s.space.is_subspace_of(self.field(), &b.space) {
            return Err(Error::assertion("length of a non-inclusion"));
        }
        Ok(b.space.dim() - s.space.dim())
    }

    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        let (a, b) = self.common(a, b)?;
        let space = crate::arith::subspace_combine(self.field(), &a.space, &b.space, crate::arith::Combine::Sum)?;
        Ok(Submodule { level: a.level, space })
    }

    pub fn intersect(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        let (a, b) = self.common(a, b)?;
        let space =
            crate::arith::subspace_combine(self.field(), &a.space, &b.space, crate::arith::Combine::Intersect)?;
        Ok(Submodule { level: a.level, space })
    }

    /// `(U :_M J) = { v : x v ∈ U for every x in forms }`, computed in
    /// `M / m^level M`, which is exact because `m^level M ⊆ U`.
    pub fn colon_forms(&self, u: &Submodule, forms: &[Vec<u32>]) -> Result<Submodule> {
        let field = self.field();
        let p = field.p() as u64;
        let n = self.level_dim(u.level);
        let ann = u.space.annihilator(field);
        let mut eqs: Vec<Vec<u32>> = Vec::with_capacity(ann.len() * forms.len());
        for form in forms {
            let x = self.multiplication_matrix(form, u.level);
            for f in &ann {
                let mut acc = vec![0u64; n];
                for (i, &fi) in f.iter().enumerate() {
                    if fi == 0 {
                        continue;
                    }
                    for (a, &m) in acc.iter_mut().zip(x.row(i)) {
                        *a += fi as u64 * m as u64;
                    }
                }
                eqs.push(acc.into_iter().map(|a| (a % p) as u32).collect());
            }
        }
        let ker = kernel(field, &eqs, n);
        Ok(Submodule {
            level: u.level,
            space: echelonize(field, &ker, n)?,
        })
    }

    /// `(U :_M x)` for a linear form.
    pub fn colon_element(&self, u: &Submodule, x: &TruncPoly) -> Result<Submodule> {
        let c = self.form_coefficients(x)?;
        self.colon_forms(u, &[c])
    }

    /// `(U :_M m)`.
    pub fn colon_max(&self, u: &Submodule) -> Result<Submodule> {
        let forms: Vec<Vec<u32>> = (0..self.spec.nvars()).map(|k| self.unit_form(k)).collect();
        self.colon_forms(u, &forms)
    }

    /// `(U :_M m^i)`, as `((U : m) : m) ...`.
    pub fn colon_ideal_power(&self, u: &Submodule, i: u32) -> Result<Submodule> {
        let mut cur = u.clone();
        for _ in 0..i {
            cur = self.colon_max(&cur)?;
        }
        Ok(cur)
    }

    /// `J U + m^level M` for the ideal `J` generated by `forms`. Equals `J U`
    /// whenever `m^level M ⊆ J U`; callers choose `level` accordingly.
    pub fn ideal_times(&self, forms: &[Vec<u32>], u: &Submodule, level: u32) -> Result<Submodule> {
        self.check_level(level)?;
        let field = self.field();
        let lifted = if u.level <= level { self.lift(u, level)? } else { u.clone() };
        let n = self.level_dim(level);
        let basis_at_level: Vec<Vec<u32>> = if lifted.level == level {
            lifted.space.basis().to_vec()
        } else {
            // U represented above the target level: project (images of the
            // coordinates we drop land in m^level M anyway)
            lifted.space.basis().iter().map(|r| r[..n].to_vec()).collect()
        };
        let mut vectors = Vec::new();
        for form in forms {
            let x = self.multiplication_matrix(form, level);
            for b in &basis_at_level {
                vectors.push(x.apply(field, b));
            }
        }
        Ok(Submodule {
            level,
            space: echelonize(field, &vectors, n)?,
        })
    }

    /// `dim ker(x)` on `M / m^level M`, i.e. `ℓ((m^level M : x) / m^level M)`.
    pub fn multiplication_kernel_dim(&self, form: &[u32], level: u32) -> Result<usize> {
        self.check_level(level)?;
        let n = self.level_dim(level);
        let x = self.multiplication_matrix(form, level);
        let mut e = Echelon::new(*self.field(), n);
        for r in 0..n {
            let row = x.row(r);
            if row.iter().any(|&v| v != 0) {
                e.insert(row);
            }
        }
        Ok(n - e.rank())
    }

    /// `b_n(x, M) = ℓ((m^{n+1}M : x) / m^n M)` for `n` in `range`, exact
    /// while `n + 1 <= cap`.
    pub fn b_values(&self, form: &[u32], range: std::ops::RangeInclusive<u32>) -> Result<Vec<usize>> {
        range
            .map(|n| {
                let k = self.multiplication_kernel_dim(form, n + 1)?;
                Ok(k - self.graded_length(n))
            })
            .collect()
    }

    /// Reduction number of `M` with respect to the ideal generated by
    /// `forms`: the least `l` with `m^{l+1} M = J m^l M`, detected as
    /// `m^{l+1} M ⊆ J m^l M + m^{l+2} M` (Nakayama).
    pub fn reduction_number(&self, forms: &[Vec<u32>]) -> Result<u32> {
        for l in 0..=self.cap.saturating_sub(2) {
            let jf = self.ideal_times(forms, &self.power(l)?, l + 2)?;
            if self.contains(&jf, &self.power(l + 1)?)? {
                return Ok(l);
            }
        }
        Err(Error::cap(format!("reduction number exceeds cap {} - 2", self.cap)))
    }

    /// `J m^n M`, represented at the level `max(n, red) + 1` it contains.
    pub fn ideal_times_power(&self, forms: &[Vec<u32>], n: u32, red: u32) -> Result<Submodule> {
        let level = n.max(red) + 1;
        self.ideal_times(forms, &self.power(n)?, level)
    }

    /// `ℓ(m^{n+1} M / J m^n M)` given `red = red_J(M)`.
    pub fn next_power_over_product(&self, forms: &[Vec<u32>], n: u32, red: u32) -> Result<usize> {
        if n >= red {
            return Ok(0);
        }
        let jf = self.ideal_times_power(forms, n, red)?;
        self.length(&self.power(n + 1)?, &jf)
    }

    pub fn variable_forms(&self) -> Vec<Vec<u32>> {
        (0..self.spec.nvars()).map(|k| self.unit_form(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::ring::{binomial, parse_poly};

    fn ring(names: &[&str]) -> Arc<RingSpec> {
        RingSpec::new(names.iter().map(|s| s.to_string()).collect(), PrimeField::default(), 24).unwrap()
    }

    fn pres(r: &Arc<RingSpec>, rows: &[&[&str]], f: &str) -> Presentation {
        let phi = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_poly(s, r).unwrap()).collect())
            .collect();
        Presentation::new(r, phi, parse_poly(f, r).unwrap(), "test").unwrap()
    }

    fn xyzt() -> Arc<RingSpec> {
        ring(&["x", "y", "z", "t"])
    }

    #[test]
    fn ring_a_lengths() {
        let r = xyzt();
        let m = TruncModule::build(&pres(&r, &[&["x^2*(x-y)"]], "x^2*(x-y)"), 6).unwrap();
        // no relations in degree <= 1: four variables plus one
        assert_eq!(m.level_dim(2), 5);
        // h_A = 1 + z + z^2 over dim 3: L = 1, 4, 10, 19, ...
        let lens: Vec<usize> = (0..6).map(|n| m.graded_length(n)).collect();
        assert_eq!(&lens[..4], &[1, 4, 10, 19]);
    }

    #[test]
    fn coordinate_hyperplane() {
        let r = xyzt();
        let m = TruncModule::build(&pres(&r, &[&["x"]], "x^3"), 7).unwrap();
        for n in 0..7 {
            assert_eq!(m.graded_length(n) as u64, binomial(n as u64 + 2, 2));
        }
    }

    #[test]
    fn residue_field_from_columns() {
        let r = xyzt();
        let cols: Vec<Vec<TruncPoly>> =
            ["x", "y", "z", "t"].iter().map(|s| vec![parse_poly(s, &r).unwrap()]).collect();
        let m = TruncModule::from_columns(&r, 1, &cols, 6, "k").unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.graded_length(0), 1);
    }

    #[test]
    fn example_four_has_four_generators() {
        let r = xyzt();
        let p = pres(
            &r,
            &[&["x", "0", "0", "0"], &["0", "x^2", "0", "0"], &["0", "0", "x^2", "0"], &["0", "0", "0", "x^2"]],
            "x^2*(x-y)",
        );
        let m = TruncModule::build(&p, 6).unwrap();
        assert_eq!(m.level_dim(1), 4);
    }

    #[test]
    fn non_annihilating_equation_is_rejected() {
        let r = xyzt();
        let p = pres(&r, &[&["x^2"]], "x*y^2");
        assert!(matches!(TruncModule::build(&p, 6), Err(Error::Validation(_))));
    }

    #[test]
    fn powers_and_colons() {
        let r = xyzt();
        let m = TruncModule::build(&pres(&r, &[&["x^2*(x-y)"]], "x^2*(x-y)"), 7).unwrap();
        let f0 = m.power(0).unwrap();
        assert_eq!(m.colength(&f0), 0);
        let fcap = m.power(7).unwrap();
        assert_eq!(m.colength(&fcap), m.dim());
        let f2 = m.power(2).unwrap();
        let f3 = m.power(3).unwrap();
        assert_eq!(m.length(&f2, &f3).unwrap(), 10);
        // target = M gives M
        let whole = m.colon_element(&f0, &parse_poly("x+2*y", &r).unwrap()).unwrap();
        assert!(m.equal(&whole, &f0).unwrap());
        // (m^3 A : m) = m^2 A
        let c = m.colon_ideal_power(&f3, 1).unwrap();
        assert!(m.equal(&c, &f2).unwrap());
        assert!(m.equal(&m.colon_ideal_power(&f3, 0).unwrap(), &f3).unwrap());
    }

    #[test]
    fn x_annihilates_q_mod_x() {
        let r = xyzt();
        let m = TruncModule::build(&pres(&r, &[&["x"]], "x^3"), 6).unwrap();
        let f2 = m.power(2).unwrap();
        let c = m.colon_element(&f2, &parse_poly("x", &r).unwrap()).unwrap();
        assert!(m.equal(&c, &m.power(0).unwrap()).unwrap());
    }

    #[test]
    fn lift_and_lower_round_trip() {
        let r = xyzt();
        let m = TruncModule::build(&pres(&r, &[&["x^2*(x-y)"]], "x^2*(x-y)"), 6).unwrap();
        let f2 = m.power(2).unwrap();
        let up = m.lift(&f2, 5).unwrap();
        assert_eq!(up.space().dim(), m.level_dim(5) - m.level_dim(2));
        assert_eq!(m.lower(&up, 2).unwrap(), f2);
        assert!(m.lower(&f2, 1).is_err());
        assert_eq!(m.normalize(&up), f2);
    }

    #[test]
    fn ideal_times_maximal_ideal_is_next_power() {
        let r = xyzt();
        let m = TruncModule::build(&pres(&r, &[&["x^2*(x-y)"]], "x^2*(x-y)"), 6).unwrap();
        let f1 = m.power(1).unwrap();
        let mf1 = m.ideal_times(&m.variable_forms(), &f1, 5).unwrap();
        assert!(m.equal(&mf1, &m.power(2).unwrap()).unwrap());
    }
}
