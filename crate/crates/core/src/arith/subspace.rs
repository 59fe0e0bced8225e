use std::fmt;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Dense matrix over `F_p` representing a linear map `F^cols -> F^rows`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<u32>], rows: usize) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn apply(&self, field: &PrimeField, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let acc: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64 % p)
                    .sum();
                (acc % p) as u32
            })
            .collect()
    }
}

/// Incremental Gaussian elimination. Rows are stored normalized (pivot = 1)
/// and zero to the left of their pivot; reduction accumulates in `u64` and
/// reduces once per row.
pub(crate) struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    /// (pivot column, index into rows), sorted by column.
    order: Vec<(usize, usize)>,
}

impl Echelon {
    pub(crate) fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            order: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_acc(&self, acc: &mut [u64]) {
        let p = self.field.p() as u64;
        for &(col, ri) in &self.order {
            let c = acc[col] % p;
            if c == 0 {
                acc[col] = 0;
                continue;
            }
            let m = p - c;
            let row = &self.rows[ri];
            for (a, &b) in acc[col..].iter_mut().zip(&row[col..]) {
                *a += m * b as u64;
            }
        }
    }

    /// Reduce `v` against the current rows; returns the residual (zero iff
    /// `v` lies in the span).
    pub(crate) fn residual(&self, v: &[u32]) -> Vec<u32> {
        let p = self.field.p() as u64;
        let mut acc: Vec<u64> = v.iter().map(|&x| x as u64).collect();
        self.reduce_acc(&mut acc);
        acc.iter().map(|&a| (a % p) as u32).collect()
    }

    /// Insert a vector; returns true if it increased the rank.
    pub(crate) fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        let mut r = self.residual(v);
        let Some(piv) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(r[piv]);
        if inv != 1 {
            for x in r[piv..].iter_mut() {
                *x = self.field.mul(*x, inv);
            }
        }
        let idx = self.rows.len();
        self.rows.push(r);
        let pos = self.order.partition_point(|&(c, _)| c < piv);
        self.order.insert(pos, (piv, idx));
        true
    }

    /// Fully reduced row-echelon basis, sorted by pivot column.
    pub(crate) fn into_rref(self) -> (Vec<Vec<u32>>, Vec<usize>) {
        let p = self.field.p() as u64;
        let mut rows = self.rows;
        let order = self.order;
        let pivots: Vec<usize> = order.iter().map(|&(c, _)| c).collect();
        let mut sorted: Vec<Vec<u32>> = order
            .iter()
            .map(|&(_, ri)| std::mem::take(&mut rows[ri]))
            .collect();
        for i in (0..sorted.len()).rev() {
            let start = pivots[i];
            let mut acc: Option<Vec<u64>> = None;
            for j in i + 1..sorted.len() {
                let c = sorted[i][pivots[j]];
                if c == 0 {
                    continue;
                }
                let acc = acc.get_or_insert_with(|| sorted[i].iter().map(|&x| x as u64).collect());
                let m = p - c as u64;
                let rj = &sorted[j];
                for (a, &b) in acc[pivots[j]..].iter_mut().zip(&rj[pivots[j]..]) {
                    *a += m * b as u64;
                }
            }
            if let Some(acc) = acc {
                let row = &mut sorted[i];
                for (x, a) in row[start..].iter_mut().zip(&acc[start..]) {
                    *x = (*a % p) as u32;
                }
            }
        }
        (sorted, pivots)
    }
}

/// A subspace of `F_p^n`, stored as its reduced row-echelon basis. The
/// representation is canonical, so structural equality is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F^{}, pivots {:?})",
            self.dim(),
            self.ambient_dim,
            self.pivots
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Intersect,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, 0..ambient_dim)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut pivots: Vec<usize> = indices.into_iter().collect();
        pivots.sort_unstable();
        pivots.dedup();
        let basis = pivots
            .iter()
            .map(|&i| {
                let mut v = vec![0; ambient_dim];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    /// Caller guarantees `basis` is in reduced row-echelon form with the
    /// given pivots.
    pub(crate) fn from_rref_parts(ambient_dim: usize, basis: Vec<Vec<u32>>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.len(), pivots.len());
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub(crate) fn from_echelon(e: Echelon) -> Self {
        let ambient_dim = e.ncols;
        let (basis, pivots) = e.into_rref();
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction against the basis.
    pub fn reduce(&self, field: &PrimeField, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (row, &piv) in self.basis.iter().zip(&self.pivots) {
            let c = out[piv];
            if c == 0 {
                continue;
            }
            let m = field.neg(c);
            for (o, &b) in out[piv..].iter_mut().zip(&row[piv..]) {
                if b != 0 {
                    *o = field.add(*o, field.mul(m, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, field: &PrimeField, v: &[u32]) -> bool {
        self.reduce(field, v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, field: &PrimeField, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() <= other.dim()
            && self.basis.iter().all(|v| other.contains(field, v))
    }

    /// Linear functionals whose common kernel is this subspace, one per
    /// non-pivot coordinate `q`: `v -> v_q - sum_p basis_p[q] v_p`.
    pub fn annihilator(&self, field: &PrimeField) -> Vec<Vec<u32>> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim)
            .filter(|&q| !is_pivot[q])
            .map(|q| {
                let mut f = vec![0; self.ambient_dim];
                f[q] = 1;
                for (row, &piv) in self.basis.iter().zip(&self.pivots) {
                    f[piv] = field.neg(row[q]);
                }
                f
            })
            .collect()
    }
}

/// Reduced row-echelon basis of the span of `vectors`.
pub fn echelonize(field: &PrimeField, vectors: &[Vec<u32>], ambient_dim: usize) -> Result<Subspace> {
    let mut e = Echelon::new(*field, ambient_dim);
    for v in vectors {
        if v.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        if e.rank() < ambient_dim {
            e.insert(v);
        }
    }
    Ok(Subspace::from_echelon(e))
}

pub fn subspace_combine(field: &PrimeField, a: &Subspace, b: &Subspace, mode: Combine) -> Result<Subspace> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    match mode {
        Combine::Sum => {
            let (big, small) = if a.dim() >= b.dim() { (a, b) } else { (b, a) };
            let mut e = Echelon::new(*field, a.ambient_dim);
            for v in big.basis.iter().chain(&small.basis) {
                if e.rank() == a.ambient_dim {
                    break;
                }
                e.insert(v);
            }
            Ok(Subspace::from_echelon(e))
        }
        Combine::Intersect => {
            if a.dim() == 0 || b.dim() == 0 {
                return Ok(Subspace::zero(a.ambient_dim));
            }
            // coefficients c with sum c_i a_i in b
            let eqs: Vec<Vec<u32>> = {
                let ann = b.annihilator(field);
                ann.iter()
                    .map(|f| a.basis.iter().map(|v| dot(field, f, v)).collect())
                    .collect()
            };
            let coeffs = kernel(field, &eqs, a.dim());
            let vectors: Vec<Vec<u32>> = coeffs
                .iter()
                .map(|c| combine_rows(field, c, &a.basis, a.ambient_dim))
                .collect();
            echelonize(field, &vectors, a.ambient_dim)
        }
    }
}

/// `{ v : map(v) in target }`.
pub fn map_preimage(field: &PrimeField, map: &Matrix, target: &Subspace) -> Result<Subspace> {
    let (rows, cols) = map.shape();
    if rows != target.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: rows,
            found: target.ambient_dim,
        });
    }
    let p = field.p() as u64;
    let ann = target.annihilator(field);
    let eqs: Vec<Vec<u32>> = ann
        .iter()
        .map(|f| {
            let mut acc = vec![0u64; cols];
            for (i, &fi) in f.iter().enumerate() {
                if fi == 0 {
                    continue;
                }
                for (a, &m) in acc.iter_mut().zip(map.row(i)) {
                    *a += fi as u64 * m as u64 % p;
                }
            }
            acc.into_iter().map(|a| (a % p) as u32).collect()
        })
        .collect();
    let ker = kernel(field, &eqs, cols);
    // kernel vectors come out in echelon-compatible form but not reduced
    echelonize(field, &ker, cols)
}

/// Basis of `{ v : E v = 0 }` for the equation rows `E`.
pub fn kernel(field: &PrimeField, equations: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut e = Echelon::new(*field, ncols);
    for eq in equations {
        if e.rank() == ncols {
            break;
        }
        e.insert(eq);
    }
    let (rows, pivots) = e.into_rref();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&q| !is_pivot[q])
        .map(|q| {
            let mut v = vec![0; ncols];
            v[q] = 1;
            for (row, &piv) in rows.iter().zip(&pivots) {
                v[piv] = field.neg(row[q]);
            }
            v
        })
        .collect()
}

pub(crate) fn dot(field: &PrimeField, a: &[u32], b: &[u32]) -> u32 {
    let p = field.p() as u64;
    let s: u64 = a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64 % p).sum();
    (s % p) as u32
}

pub(crate) fn combine_rows(field: &PrimeField, coeffs: &[u32], rows: &[Vec<u32>], n: usize) -> Vec<u32> {
    let p = field.p() as u64;
    let mut acc = vec![0u64; n];
    for (&c, r) in coeffs.iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (a, &b) in acc.iter_mut().zip(r) {
            *a += c as u64 * b as u64 % p;
        }
    }
    acc.into_iter().map(|a| (a % p) as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn echelonize_examples() {
        let z = echelonize(&f(), &[], 5).unwrap();
        assert_eq!(z.dim(), 0);

        let full = echelonize(&f(), &[vec![1, 0], vec![1, 1]], 2).unwrap();
        assert_eq!(full, Subspace::full(2));

        let line = echelonize(&f(), &[vec![2, 4], vec![1, 2]], 2).unwrap();
        assert_eq!(line.dim(), 1);
        assert_eq!(line.basis(), &[vec![1, 2]]);
    }

    #[test]
    fn echelonize_rejects_ragged_input() {
        assert!(matches!(
            echelonize(&f(), &[vec![1, 2], vec![1]], 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn echelonize_is_idempotent() {
        let s = echelonize(&f(), &[vec![3, 1, 4], vec![1, 5, 9], vec![4, 6, 13]], 3).unwrap();
        let again = echelonize(&f(), s.basis(), 3).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn combine_examples() {
        let fld = f();
        let e1 = Subspace::coordinate(2, [0]);
        let e2 = Subspace::coordinate(2, [1]);
        assert_eq!(subspace_combine(&fld, &e1, &e2, Combine::Sum).unwrap().dim(), 2);
        assert_eq!(subspace_combine(&fld, &e1, &e2, Combine::Intersect).unwrap().dim(), 0);
        assert_eq!(subspace_combine(&fld, &e1, &e1, Combine::Sum).unwrap(), e1);
        assert_eq!(subspace_combine(&fld, &e1, &e1, Combine::Intersect).unwrap(), e1);
        assert!(subspace_combine(&fld, &e1, &Subspace::zero(3), Combine::Sum).is_err());
    }

    #[test]
    fn preimage_examples() {
        let fld = f();
        let t = echelonize(&fld, &[vec![1, 1, 0]], 3).unwrap();
        assert_eq!(map_preimage(&fld, &Matrix::identity(3), &t).unwrap(), t);
        assert_eq!(
            map_preimage(&fld, &Matrix::zeros(3, 3), &Subspace::zero(3)).unwrap(),
            Subspace::full(3)
        );
        let proj = Matrix::from_rows(&[vec![1, 0, 0]], 3).unwrap();
        let ker = map_preimage(&fld, &proj, &Subspace::zero(1)).unwrap();
        assert_eq!(ker, Subspace::coordinate(3, [1, 2]));
        assert!(map_preimage(&fld, &proj, &Subspace::zero(2)).is_err());
    }

    #[test]
    fn annihilator_cuts_out_subspace() {
        let fld = f();
        let s = echelonize(&fld, &[vec![1, 2, 3, 4], vec![0, 1, 1, 7]], 4).unwrap();
        let ann = s.annihilator(&fld);
        assert_eq!(ann.len(), 2);
        for a in &ann {
            for b in s.basis() {
                assert_eq!(dot(&fld, a, b), 0);
            }
        }
    }
}
