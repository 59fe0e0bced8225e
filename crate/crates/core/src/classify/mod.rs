//! Artinian reduction, free summands and the table of Hilbert series for
//! `μ(M) = 4`, `e(A) = 3`.

mod snf;

use serde::{Deserialize, Serialize};

pub use snf::smith_orders;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_coefficients, zpoly, HilbertData};
use crate::module::Presentation;
use crate::superficial::SuperficialChain;

/// Sorted orders `a_1 <= ... <= a_t` of the Smith form of a presentation
/// over a one-variable ring, so `M ≅ ⊕ k[[y]]/(y^{a_i})`.
pub fn artinian_decompose(pres: &Presentation) -> Result<Vec<u32>> {
    let spec = pres.spec();
    if spec.nvars() != 1 {
        return Err(Error::Precondition(format!(
            "artinian decomposition needs a one-variable ring, found {}",
            spec.nvars()
        )));
    }
    let cap = spec.cap() as usize;
    let series = |p: &crate::ring::TruncPoly| -> Vec<u32> {
        let mut s = vec![0; cap];
        for (m, &c) in p.terms() {
            if let Some(slot) = s.get_mut(m.degree() as usize) {
                *slot = c;
            }
        }
        s
    };
    let a = pres.rows().iter().map(|row| row.iter().map(series).collect()).collect();
    smith_orders(spec.field(), a)
}

/// Artinian reduction `M_d` of a full chain, with `sum a_i = ℓ(M_d)` checked.
pub fn chain_a_tuple(chain: &SuperficialChain) -> Result<Vec<u32>> {
    let last = chain.stages.last().expect("chain has a stage");
    let a = artinian_decompose(&last.pres)?;
    let total: u32 = a.iter().sum();
    if total as usize != last.module.dim() {
        return Err(Error::assertion(format!(
            "Smith orders sum to {total} but ℓ(M_d) = {}",
            last.module.dim()
        )));
    }
    Ok(a)
}

/// h-polynomial of `⊕ k[[y]]/(y^{a_i})`: coefficient `k` counts `a_i > k`.
pub fn artinian_h(a: &[u32]) -> Vec<i64> {
    let top = a.iter().copied().max().unwrap_or(0);
    zpoly::trim((0..top).map(|k| a.iter().filter(|&&ai| ai > k).count() as i64).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FreeSplit {
    pub free_rank: usize,
    /// Presentation of the complement; `None` when `M` is free.
    pub complement: Option<Presentation>,
}

/// Peel off summands `A` visible as an entry `c·f` whose row and column
/// are otherwise zero.
pub fn split_free_summand(pres: &Presentation) -> Result<FreeSplit> {
    let f = pres.f();
    let field = pres.spec().field();
    let (lead, lead_c) = f.terms().iter().next().map(|(m, &c)| (m.clone(), c)).expect("f is nonzero");
    let is_multiple_of_f = |p: &crate::ring::TruncPoly| {
        let c = field.mul(p.coeff(&lead), field.inv(lead_c));
        c != 0 && *p == f.scale(c)
    };
    let mut rows: Vec<Vec<_>> = pres.rows().to_vec();
    let mut free_rank = 0;
    loop {
        let t = rows.len();
        let hit = (0..t).flat_map(|i| (0..t).map(move |j| (i, j))).find(|&(i, j)| {
            is_multiple_of_f(&rows[i][j])
                && (0..t).all(|k| k == j || rows[i][k].is_zero())
                && (0..t).all(|k| k == i || rows[k][j].is_zero())
        });
        let Some((i, j)) = hit else { break };
        free_rank += 1;
        rows.remove(i);
        for row in rows.iter_mut() {
            row.remove(j);
        }
        if rows.is_empty() {
            return Ok(FreeSplit { free_rank, complement: None });
        }
    }
    let complement = if free_rank == 0 {
        pres.clone()
    } else {
        Presentation::new(pres.spec(), rows, f.clone(), format!("{}/free", pres.label()))?
    };
    Ok(FreeSplit {
        free_rank,
        complement: Some(complement),
    })
}

/// One row of the classification table: `e(M)`, `h_M` and `depth G(M)` as
/// `dim A` minus a codepth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub case_id: &'static str,
    pub e: i64,
    pub h: &'static [i64],
    pub codepth: u32,
}

pub const TABLE: &[TableRow] = &[
    TableRow { case_id: "1", e: 4, h: &[4], codepth: 0 },
    TableRow { case_id: "2a", e: 5, h: &[4, 1], codepth: 0 },
    TableRow { case_id: "2b", e: 5, h: &[4, 0, 1], codepth: 1 },
    TableRow { case_id: "3a", e: 6, h: &[4, 2], codepth: 0 },
    TableRow { case_id: "3b", e: 6, h: &[4, 1, 1], codepth: 1 },
    TableRow { case_id: "3b", e: 6, h: &[4, 0, 2], codepth: 1 },
    TableRow { case_id: "3c", e: 6, h: &[4, 0, 3, -1], codepth: 2 },
    TableRow { case_id: "4a", e: 7, h: &[4, 3], codepth: 0 },
    TableRow { case_id: "4b", e: 7, h: &[4, 2, 1], codepth: 1 },
    TableRow { case_id: "4c", e: 7, h: &[4, 1, 3, -1], codepth: 2 },
    TableRow { case_id: "4d", e: 7, h: &[4, 0, 6, -4, 1], codepth: 3 },
    TableRow { case_id: "5", e: 8, h: &[4, 4], codepth: 0 },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub a_tuple: Vec<u32>,
    pub e_m: i64,
    pub h: Vec<i64>,
    pub depth: u32,
    pub case_id: String,
    /// `e`, `h` and depth all match the row, and `h_{M_d}` matches `a`.
    pub theorem_ok: bool,
}

/// Place already-computed invariants in the table. Requires `μ = 4`,
/// `ord f = 3` and no free summand (`a_i < 3`).
pub fn classify_mu4_e3(
    pres: &Presentation,
    a_tuple: &[u32],
    hilbert: &HilbertData,
    artinian: &HilbertData,
    depth: u32,
) -> Result<ClassificationRecord> {
    let d = pres.spec().nvars() as u32 - 1;
    let ord_f = pres.f().order().unwrap_or(0);
    if pres.rank() != 4 || ord_f != 3 {
        return Err(Error::Precondition(format!(
            "classification needs μ = 4 and e(A) = 3, found μ = {} and ord f = {ord_f}",
            pres.rank()
        )));
    }
    if a_tuple.iter().any(|&a| a >= ord_f) {
        return Err(Error::Precondition("module has a free summand".into()));
    }
    let e_m = hilbert_coefficients(&hilbert.h_coeffs, hilbert.r)[0];
    let row = TABLE
        .iter()
        .find(|r| r.e == e_m && r.h == hilbert.h_coeffs.as_slice() && d.checked_sub(r.codepth) == Some(depth));
    let artinian_ok = artinian.h_coeffs == artinian_h(a_tuple);
    let e_ok = e_m == a_tuple.iter().map(|&a| a as i64).sum::<i64>();
    let case_id = match row {
        Some(r) => r.case_id.to_string(),
        None => {
            return Err(Error::assertion(format!(
                "no table row has e = {e_m}, h = {}, depth = {depth}",
                zpoly::format(&hilbert.h_coeffs)
            )))
        }
    };
    Ok(ClassificationRecord {
        a_tuple: a_tuple.to_vec(),
        e_m,
        h: hilbert.h_coeffs.clone(),
        depth,
        case_id,
        theorem_ok: artinian_ok && e_ok,
    })
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::corpus::{corpus, presentation};
    use crate::rr_depth::{chain_hilbert, depth_from_chain};
    use crate::superficial::superficial_chain;

    #[test]
    fn artinian_h_counts() {
        assert_eq!(artinian_h(&[1, 2, 2, 2]), [4, 3]);
        assert_eq!(artinian_h(&[1, 1, 1, 1]), [4]);
        assert_eq!(artinian_h(&[3, 1]), [2, 1, 1]);
    }

    #[test]
    fn table_rows_are_consistent() {
        for r in TABLE {
            assert_eq!(zpoly::eval_one(r.h), r.e, "{}", r.case_id);
        }
    }

    #[test]
    fn free_summands() {
        for (name, s) in [("free", 4), ("split", 1), ("ex4", 0), ("ulrich", 0)] {
            let split = split_free_summand(&presentation(name).unwrap()).unwrap();
            assert_eq!(split.free_rank, s, "{name}");
            assert_eq!(split.complement.is_none(), s == 4);
        }
        let split = split_free_summand(&presentation("split").unwrap()).unwrap();
        assert_eq!(split.complement.unwrap().rank(), 3);
    }

    #[test]
    fn corpus_classifies() {
        for e in corpus() {
            let Some(case) = e.expect.case_id else { continue };
            let p = e.presentation();
            let chain = superficial_chain(&p, 3, 7, &mut ChaCha8Rng::seed_from_u64(42), 50).unwrap();
            let hil = chain_hilbert(&chain, None).unwrap();
            let dep = depth_from_chain(&chain, &hil).unwrap();
            let a = chain_a_tuple(&chain).unwrap();
            assert_eq!(Some(a.as_slice()), e.expect.a_tuple, "{}", e.name);
            let rec = classify_mu4_e3(&p, &a, &hil[0], &hil[3], dep.depth).unwrap();
            assert_eq!(rec.case_id, case, "{}", e.name);
            assert!(rec.theorem_ok, "{}", e.name);
        }
    }

    #[test]
    fn free_module_is_not_classified() {
        let p = presentation("free").unwrap();
        let chain = superficial_chain(&p, 3, 7, &mut ChaCha8Rng::seed_from_u64(42), 50).unwrap();
        let a = chain_a_tuple(&chain).unwrap();
        assert_eq!(a, [3, 3, 3, 3]);
        let hil = chain_hilbert(&chain, None).unwrap();
        assert!(matches!(
            classify_mu4_e3(&p, &a, &hil[0], &hil[3], 3),
            Err(Error::Precondition(_))
        ));
    }
}
