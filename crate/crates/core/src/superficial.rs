//! Randomized search for superficial sequences, b-vectors, ρ-vectors and
//! Singh's equality.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{h_polynomial, hilbert_coefficients, zpoly, HilbertData};
use crate::module::{Presentation, TruncModule};
use crate::ring::{embed_by_names, TruncPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperficialChecks {
    pub colon_stabilizes: bool,
    pub entry_orders_preserved: bool,
    pub det_order_preserved: bool,
}

impl SuperficialChecks {
    pub fn all(&self) -> bool {
        self.colon_stabilizes && self.entry_orders_preserved && self.det_order_preserved
    }
}

#[derive(Debug, Clone)]
pub struct SuperficialWitness {
    /// The form in the ring of the module it cuts.
    pub form: TruncPoly,
    /// The same form over the original ring.
    pub lifted: TruncPoly,
    /// `b_n(x, M)` for `n = 0..cap`.
    pub b_vector: Vec<usize>,
    pub checks: SuperficialChecks,
    pub trials_used: usize,
}

/// One module of a superficial chain `M_c = M / (x_1..x_c) M`, together with
/// the ring `A_c` it lives over.
#[derive(Debug, Clone)]
pub struct Stage {
    pub pres: Presentation,
    pub module: TruncModule,
    pub ring: TruncModule,
}

/// `M_0, ..., M_count` and the witnesses `x_1..x_count` between them.
#[derive(Debug, Clone)]
pub struct SuperficialChain {
    pub stages: Vec<Stage>,
    pub witnesses: Vec<SuperficialWitness>,
}

impl SuperficialChain {
    /// Witness forms lifted to the ring of `M_0`.
    pub fn lifted_forms(&self) -> Vec<TruncPoly> {
        self.witnesses.iter().map(|w| w.lifted.clone()).collect()
    }

    /// Lifted witnesses `x_{from+1}..` expressed over the ring of stage `from`.
    pub fn forms_over_stage(&self, from: usize) -> Result<Vec<Vec<u32>>> {
        let spec = self.stages[from].pres.spec();
        self.witnesses[from..]
            .iter()
            .map(|w| Ok(embed_by_names(&w.form, spec)?.linear_coefficients()))
            .collect()
    }
}

fn stage(pres: Presentation, cap: u32) -> Result<Stage> {
    let module = TruncModule::build(&pres, cap)?;
    let ring_pres = Presentation::ring_itself(pres.spec(), pres.f().clone(), "A")?;
    let ring = TruncModule::build(&ring_pres, cap)?;
    Ok(Stage { pres, module, ring })
}

fn random_form(pres: &Presentation, rng: &mut ChaCha8Rng) -> Result<TruncPoly> {
    let p = pres.spec().field().p();
    let coeffs: Vec<u32> = (0..pres.spec().nvars()).map(|_| rng.gen_range(0..p)).collect();
    TruncPoly::linear(pres.spec(), &coeffs)
}

fn orders_preserved(a: &Presentation, b: &Presentation) -> bool {
    let t = a.rank();
    (0..t).all(|i| (0..t).all(|j| a.entry(i, j).order() == b.entry(i, j).order())) && a.f().order() == b.f().order()
}

/// Test `x` on a stage; `Ok(None)` means rejected.
fn examine(st: &Stage, x: &TruncPoly) -> Result<Option<(Presentation, Vec<usize>, SuperficialChecks)>> {
    let cap = st.module.cap();
    let (next, _) = match st.pres.quotient_by_form(x) {
        Ok(q) => q,
        Err(Error::Precondition(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let entry_orders_preserved = orders_preserved(&st.pres, &next);
    let det_order_preserved = st.pres.invariants()?.det_order == next.invariants()?.det_order;
    if !(entry_orders_preserved && det_order_preserved) {
        return Ok(None);
    }
    let c = x.linear_coefficients();
    let tail = cap - 2..=cap - 1;
    let colon_stabilizes = st.ring.b_values(&c, tail.clone())?.iter().all(|&b| b == 0)
        && st.module.b_values(&c, tail)?.iter().all(|&b| b == 0);
    if !colon_stabilizes {
        return Ok(None);
    }
    let b = st.module.b_values(&c, 0..=cap - 1)?;
    Ok(Some((
        next,
        b,
        SuperficialChecks {
            colon_stabilizes,
            entry_orders_preserved,
            det_order_preserved,
        },
    )))
}

/// Build `M_0..M_count` by repeatedly drawing uniformly random linear forms
/// until one passes the superficiality checks on the current quotient.
pub fn superficial_chain(
    pres: &Presentation,
    count: usize,
    cap: u32,
    rng: &mut ChaCha8Rng,
    max_trials: usize,
) -> Result<SuperficialChain> {
    let dim_a = pres.spec().nvars() - 1;
    if count > dim_a {
        return Err(Error::Precondition(format!(
            "requested {count} superficial elements but dim A = {dim_a}"
        )));
    }
    let root = pres.spec().clone();
    let mut stages = vec![stage(pres.clone(), cap)?];
    let mut witnesses = Vec::with_capacity(count);
    for _ in 0..count {
        let cur = stages.last().unwrap();
        let mut found = None;
        for trial in 1..=max_trials {
            let x = random_form(&cur.pres, rng)?;
            if x.is_zero() {
                continue;
            }
            if let Some((next, b, checks)) = examine(cur, &x)? {
                found = Some((x, next, b, checks, trial));
                break;
            }
        }
        let Some((form, next, b_vector, checks, trials_used)) = found else {
            return Err(Error::SearchExhausted { trials: max_trials });
        };
        witnesses.push(SuperficialWitness {
            lifted: embed_by_names(&form, &root)?,
            form,
            b_vector,
            checks,
            trials_used,
        });
        stages.push(stage(next, cap)?);
    }
    Ok(SuperficialChain { stages, witnesses })
}

/// Seeded front end of [`superficial_chain`] returning the witnesses.
pub fn find_phi_superficial(
    pres: &Presentation,
    count: usize,
    cap: u32,
    seed: u64,
    max_trials: usize,
) -> Result<Vec<SuperficialWitness>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(superficial_chain(pres, count, cap, &mut rng, max_trials)?.witnesses)
}

/// `b_n(x, M)` for `n = 0..=window` (default `cap - 1`). The support must end
/// before the window does.
pub fn b_vector(m: &TruncModule, x: &TruncPoly, window: Option<u32>) -> Result<Vec<usize>> {
    let w = window.unwrap_or(m.cap() - 1);
    if w + 1 > m.cap() {
        return Err(Error::cap(format!("window {w} needs cap at least {}", w + 1)));
    }
    let b = m.b_values(&m.form_coefficients(x)?, 0..=w)?;
    if b.last() != Some(&0) {
        return Err(Error::cap("b-vector support reaches the window edge"));
    }
    Ok(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoVector {
    /// `ρ_n = ℓ(m^{n+1} M / x m^n M)` for `n = 0..=red`, the last being 0.
    pub rho: Vec<usize>,
}

impl RhoVector {
    /// `μ + sum_{i>=1} (ρ_{i-1} - ρ_i) z^i`.
    pub fn h_polynomial(&self, mu: u64) -> Vec<i64> {
        let mut h = vec![mu as i64];
        for i in 1..self.rho.len() {
            h.push(self.rho[i - 1] as i64 - self.rho[i] as i64);
        }
        zpoly::trim(h)
    }
}

/// ρ-vector of a one-dimensional module, checked against its h-polynomial.
pub fn rho_vector(m: &TruncModule, x: &TruncPoly) -> Result<RhoVector> {
    let hd = h_polynomial(m, None)?;
    if hd.r != 1 {
        return Err(Error::Precondition(format!("ρ-vector needs dim M = 1, found {}", hd.r)));
    }
    let forms = [m.form_coefficients(x)?];
    let red = m.reduction_number(&forms)?;
    let rho = (0..=red)
        .map(|n| m.next_power_over_product(&forms, n, red))
        .collect::<Result<Vec<_>>>()?;
    let out = RhoVector { rho };
    let rebuilt = out.h_polynomial(hd.mu);
    if rebuilt != hd.h_coeffs {
        return Err(Error::assertion(format!(
            "ρ reconstruction {} differs from h = {}",
            zpoly::format(&rebuilt),
            zpoly::format(&hd.h_coeffs)
        )));
    }
    Ok(out)
}

/// Both sides of Singh's equality and the coefficient relations it implies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SinghCheck {
    pub h_m: Vec<i64>,
    pub h_n: Vec<i64>,
    pub b: Vec<usize>,
    /// `h_N - (1 - z)^r b(z)`.
    pub rhs: Vec<i64>,
    pub equality: bool,
    /// `e_i(M) = e_i(N)` for `i < r`.
    pub lower_coefficients_agree: bool,
    /// `e_r(M) = e_r(N) - (-1)^r sum b_n`.
    pub top_coefficient_relation: bool,
    /// `b ≡ 0` exactly when `h_M = h_N`.
    pub vanishing_criterion: bool,
}

impl SinghCheck {
    pub fn holds(&self) -> bool {
        self.equality && self.lower_coefficients_agree && self.top_coefficient_relation && self.vanishing_criterion
    }
}

pub fn singh_check(hm: &HilbertData, hn: &HilbertData, b: &[usize]) -> SinghCheck {
    let r = hm.r;
    let bz: Vec<i64> = zpoly::trim(b.iter().map(|&v| v as i64).collect());
    let rhs = zpoly::sub(&hn.h_coeffs, &zpoly::mul(&zpoly::one_minus_z_pow(r), &bz));
    let em = hilbert_coefficients(&hm.h_coeffs, r);
    let en = hilbert_coefficients(&hn.h_coeffs, r);
    let sum_b: i64 = bz.iter().sum();
    let sign = if r % 2 == 0 { 1 } else { -1 };
    SinghCheck {
        h_m: hm.h_coeffs.clone(),
        h_n: hn.h_coeffs.clone(),
        b: b.to_vec(),
        equality: rhs == hm.h_coeffs,
        rhs,
        lower_coefficients_agree: em[..r as usize] == en[..r as usize],
        top_coefficient_relation: em[r as usize] == en[r as usize] - sign * sum_b,
        vanishing_criterion: bz.is_empty() == (hm.h_coeffs == hn.h_coeffs),
    }
}

/// Singh's equality for `M` and `N = M / xM` at truncation `cap`.
pub fn verify_singh(pres: &Presentation, x: &TruncPoly, cap: u32) -> Result<SinghCheck> {
    let m = TruncModule::build(pres, cap)?;
    let (npres, _) = pres.quotient_by_form(x)?;
    let n = TruncModule::build(&npres, cap)?;
    let hm = h_polynomial(&m, None)?;
    let hn = h_polynomial(&n, None)?;
    if hn.r + 1 != hm.r {
        return Err(Error::Precondition(format!(
            "`{x}` is not a parameter on M (dim {} -> {})",
            hm.r, hn.r
        )));
    }
    let b = b_vector(&m, x, None)?;
    let check = singh_check(&hm, &hn, &b);
    if !check.holds() {
        return Err(Error::assertion(format!(
            "Singh's equality fails: h_M = {}, h_N - (1-z)^r b = {}",
            zpoly::format(&check.h_m),
            zpoly::format(&check.rhs)
        )));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::ring::{parse_poly, RingSpec};
    use std::sync::Arc;

    fn xyzt() -> Arc<RingSpec> {
        let names = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        RingSpec::new(names, PrimeField::default(), 32).unwrap()
    }

    fn pres(rows: &[&[&str]], f: &str) -> Presentation {
        let r = xyzt();
        let phi = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_poly(s, &r).unwrap()).collect())
            .collect();
        Presentation::new(&r, phi, parse_poly(f, &r).unwrap(), "t").unwrap()
    }

    const EX1: [&[&str]; 4] = [&["x", "y", "z", "t"], &["x^2", "x^2", "0", "0"], &["0", "0", "x^2", "0"], &["0", "0", "0", "x^2"]];
    const EX2: [&[&str]; 4] = [&["x", "y", "z", "0"], &["x^2", "x^2", "0", "0"], &["0", "0", "x^2", "0"], &["0", "0", "0", "x^2"]];
    const EX4: [&[&str]; 4] = [&["x", "0", "0", "0"], &["0", "x^2", "0", "0"], &["0", "0", "x^2", "0"], &["0", "0", "0", "x^2"]];

    #[test]
    fn chain_on_cohen_macaulay_example() {
        let p = pres(&EX4, "x^2*(x-y)");
        let ws = find_phi_superficial(&p, 3, 7, 42, 50).unwrap();
        assert_eq!(ws.len(), 3);
        for w in &ws {
            assert!(w.checks.all());
            assert_eq!(w.b_vector[0], 0);
            assert!(w.b_vector.iter().all(|&b| b == 0));
        }
        assert_eq!(ws[2].form.spec().nvars(), 2);
    }

    #[test]
    fn too_many_elements() {
        let p = pres(&EX4, "x^2*(x-y)");
        assert!(matches!(find_phi_superficial(&p, 4, 7, 1, 50), Err(Error::Precondition(_))));
    }

    #[test]
    fn t_is_regular_on_example_two() {
        let p = pres(&EX2, "x^2*(x-y)");
        let m = TruncModule::build(&p, 7).unwrap();
        let t = parse_poly("t", p.spec()).unwrap();
        assert!(b_vector(&m, &t, None).unwrap().iter().all(|&b| b == 0));
        let s = verify_singh(&p, &t, 7).unwrap();
        assert_eq!(s.h_m, s.h_n);
    }

    #[test]
    fn generic_form_on_example_one_has_nonzero_b() {
        let p = pres(&EX1, "x^2*(x-y)");
        let ws = find_phi_superficial(&p, 1, 7, 42, 50).unwrap();
        assert!(ws[0].b_vector.iter().any(|&b| b > 0));
        let s = verify_singh(&p, &ws[0].form, 7).unwrap();
        assert!(s.holds());
        assert_eq!(s.h_n, [4, 1, 3, -1]);
    }

    #[test]
    fn rho_of_a_one_dimensional_reduction() {
        let p = pres(&EX4, "x^2*(x-y)");
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let chain = superficial_chain(&p, 3, 7, &mut rng, 50).unwrap();
        let m2 = &chain.stages[2].module;
        let rho = rho_vector(m2, &chain.witnesses[2].form).unwrap();
        // h = 4 + 3z over dim 1: rho_0 = 3, then 0
        assert_eq!(rho.rho, [3, 0]);
    }

    #[test]
    fn rho_vanishes_for_ulrich() {
        let p = pres(&[&["x", "0", "0", "0"], &["0", "x", "0", "0"], &["0", "0", "x", "0"], &["0", "0", "0", "x"]], "x^3");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let chain = superficial_chain(&p, 3, 7, &mut rng, 50).unwrap();
        let rho = rho_vector(&chain.stages[2].module, &chain.witnesses[2].form).unwrap();
        assert!(rho.rho.iter().all(|&r| r == 0));
        assert!(rho_vector(&chain.stages[1].module, &chain.witnesses[1].form).is_err());
    }

    #[test]
    fn singh_identity_on_known_values() {
        let mk = |h: Vec<i64>, r| HilbertData {
            hilbert_samuel: vec![],
            graded_lengths: vec![],
            r,
            e: hilbert_coefficients(&h, r),
            mu: h[0] as u64,
            h_coeffs: h,
        };
        let c = singh_check(&mk(vec![4, 0, 3, -1], 2), &mk(vec![4, 1, 1], 1), &[0, 1]);
        assert!(c.holds());
        let c = singh_check(&mk(vec![4, 1, 3, -1], 2), &mk(vec![4, 2, 1], 1), &[0, 1]);
        assert!(c.holds());
    }
}
