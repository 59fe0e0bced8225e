use serde::{Deserialize, Serialize};

use super::rr::RRReport;
use crate::error::{Error, Result};
use crate::superficial::SuperficialChain;

/// Five-term sequence for a two-dimensional module with `J = (x, y)`:
/// `ℓ((F_n:J)/F_{n-1}) - b_{n-1} + b_n - ℓ(F_{n+1}/J F_n) + ℓ(F̄_{n+1}/y F̄_n) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiveTermCheck {
    pub n: u32,
    pub terms: [usize; 5],
    pub alternating_sum: i64,
}

/// `ℓ(F_2 / J F_1) = b_1(x_1) + ℓ(F̄_2 / J̄ F̄_1)` on stage `stage`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeTermCheck {
    pub stage: usize,
    pub middle: usize,
    pub b1: usize,
    pub quotient: usize,
    pub holds: bool,
}

/// Ratliff–Rush sequence inequalities on stage `stage`, degree `n`, with
/// `R_n = ℓ(m̃^n M / m^n M)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RRSequenceCheck {
    pub stage: usize,
    pub n: u32,
    pub b: usize,
    pub r_m: usize,
    pub r_m_next: usize,
    /// `R_{n+1}` of the quotient, when it has positive dimension.
    pub r_n_next: Option<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSequenceReport {
    pub five_term: Vec<FiveTermCheck>,
    pub three_term: Vec<ThreeTermCheck>,
    pub rr_sequences: Vec<RRSequenceCheck>,
}

impl ExactSequenceReport {
    pub fn all_hold(&self) -> bool {
        self.five_term.iter().all(|c| c.alternating_sum == 0)
            && self.three_term.iter().all(|c| c.holds)
            && self.rr_sequences.iter().all(|c| c.holds)
    }
}

/// Length identities along a superficial chain. `rr[c]` is the
/// Ratliff–Rush report of stage `c` for every stage of positive dimension.
pub fn verify_exact_sequences(chain: &SuperficialChain, rr: &[RRReport]) -> Result<ExactSequenceReport> {
    let d = chain.witnesses.len();
    let mut report = ExactSequenceReport::default();

    if d >= 2 {
        let s = d - 2;
        let m = &chain.stages[s].module;
        let bar = &chain.stages[s + 1].module;
        let forms = chain.forms_over_stage(s)?;
        let j = &forms[..2];
        let y_bar = [chain.witnesses[s + 1].form.linear_coefficients()];
        let b = &chain.witnesses[s].b_vector;
        let red_j = m.reduction_number(j)?;
        let red_y = bar.reduction_number(&y_bar)?;
        for n in 1..m.cap() - 1 {
            let colon = m.colon_forms(&m.power(n)?, j)?;
            let a = m.length(&colon, &m.power(n - 1)?)?;
            let terms = [
                a,
                b[n as usize - 1],
                b[n as usize],
                m.next_power_over_product(j, n, red_j)?,
                bar.next_power_over_product(&y_bar, n, red_y)?,
            ];
            let alternating_sum =
                terms[0] as i64 - terms[1] as i64 + terms[2] as i64 - terms[3] as i64 + terms[4] as i64;
            report.five_term.push(FiveTermCheck { n, terms, alternating_sum });
        }
    }

    for c in 0..d {
        let m = &chain.stages[c].module;
        let n = &chain.stages[c + 1].module;
        let j = chain.forms_over_stage(c)?;
        let j_bar = chain.forms_over_stage(c + 1)?;
        let middle = m.next_power_over_product(&j, 1, m.reduction_number(&j)?)?;
        let quotient = n.next_power_over_product(&j_bar, 1, n.reduction_number(&j_bar)?)?;
        let b1 = chain.witnesses[c].b_vector[1];
        report.three_term.push(ThreeTermCheck {
            stage: c,
            middle,
            b1,
            quotient,
            holds: middle == b1 + quotient,
        });
    }

    if rr.len() < d {
        return Err(Error::Precondition(format!(
            "need Ratliff–Rush data for {d} stages, got {}",
            rr.len()
        )));
    }
    for c in 0..d {
        let b = &chain.witnesses[c].b_vector;
        let quotient_rr = if c + 1 < d { Some(&rr[c + 1]) } else { None };
        let top = rr[c].excess.len().max(quotient_rr.map_or(0, |q| q.excess.len()));
        for n in 0..top.min(b.len()) {
            let bn = b[n];
            let r_m = rr[c].excess_at(n);
            let r_m_next = rr[c].excess_at(n + 1);
            let r_n_next = quotient_rr.map(|q| q.excess_at(n + 1));
            let injective = bn <= r_m;
            let middle_exact =
                r_m <= bn + r_m_next && r_n_next.is_none_or(|rn| r_m_next + bn <= rn + r_m);
            report.rr_sequences.push(RRSequenceCheck {
                stage: c,
                n: n as u32,
                b: bn,
                r_m,
                r_m_next,
                r_n_next,
                holds: injective && middle_exact,
            });
        }
    }
    Ok(report)
}

/// Hilbert series `μ + αz + βz^2` of `G(M) / (x*) G(M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSeries {
    pub mu: usize,
    pub alpha: usize,
    pub beta: usize,
}

/// `(ℓ(M/mM), ℓ(mM/(m²M + JM)), ℓ(m²M/(m³M + J mM)))` for `J` generated by
/// `forms`. When `red_J(M) <= 2` the inequalities `β <= α <= μ` are
/// enforced.
pub fn graded_quotient_series(m: &crate::module::TruncModule, forms: &[Vec<u32>]) -> Result<QuotientSeries> {
    let jm = m.ideal_times(forms, &m.power(0)?, 2)?;
    let jf1 = m.ideal_times(forms, &m.power(1)?, 3)?;
    let s = QuotientSeries {
        mu: m.level_dim(1),
        alpha: m.length(&m.power(1)?, &jm)?,
        beta: m.length(&m.power(2)?, &jf1)?,
    };
    if m.reduction_number(forms)? <= 2 && !(s.beta <= s.alpha && s.alpha <= s.mu) {
        return Err(Error::assertion(format!(
            "graded quotient series ({}, {}, {}) violates β <= α <= μ",
            s.mu, s.alpha, s.beta
        )));
    }
    Ok(s)
}
