//! Full analysis of one instance at a fixed cap, and its guarded version.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{chain_a_tuple, classify_mu4_e3, split_free_summand, ClassificationRecord};
use crate::config::{guarded, Config, Guarded};
use crate::error::{Error, Result};
use crate::hilbert::HilbertData;
use crate::module::{PresInvariants, Presentation};
use crate::rr_depth::{
    chain_hilbert, delta_vv, depth_from_chain, graded_quotient_series, rr_filtration, verify_exact_sequences,
    DeltaReport, DepthReport, ExactSequenceReport, QuotientSeries, RRReport,
};
use crate::superficial::{superficial_chain, SuperficialChain};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub label: String,
    pub invariants: PresInvariants,
    /// `e(M) >= μ(M) i(M)`.
    pub e_bound_ok: bool,
    pub hilbert: HilbertData,
    pub depth: DepthReport,
    /// Trials each superficial element needed.
    pub trials: Vec<usize>,
    /// Ratliff–Rush data of `M_0 .. M_{d-1}`.
    pub ratliff_rush: Vec<RRReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<DeltaReport>,
    /// `δ <= 2` forces `depth G(M) >= d - δ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_bound_ok: Option<bool>,
    pub exact_sequences: ExactSequenceReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_series: Option<QuotientSeries>,
    pub a_tuple: Vec<u32>,
    pub free_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationRecord>,
}

/// Quantities that must not move when the cap grows.
pub type AnalysisKey = (Vec<Vec<i64>>, u32, Vec<u32>, Vec<i64>, Vec<Vec<i64>>, Option<usize>);

impl Analysis {
    pub fn key(&self) -> AnalysisKey {
        (
            self.depth.h_chain.clone(),
            self.depth.depth,
            self.a_tuple.clone(),
            self.hilbert.e.clone(),
            self.ratliff_rush.iter().map(|r| r.r_coeffs.clone()).collect(),
            self.delta.as_ref().map(|d| d.delta),
        )
    }
}

/// Superficial chain of length `dim A` from `seed`.
pub fn chain_at(pres: &Presentation, cap: u32, seed: u64, max_trials: usize) -> Result<SuperficialChain> {
    let d = pres.spec().nvars() - 1;
    superficial_chain(pres, d, cap, &mut ChaCha8Rng::seed_from_u64(seed), max_trials)
}

/// Everything at one cap, with every internal identity enforced.
pub fn analyze_at(pres: &Presentation, cap: u32, config: &Config) -> Result<Analysis> {
    let window = config.window_at(cap);
    let invariants = pres.invariants()?;
    let chain = chain_at(pres, cap, config.seed, config.max_trials)?;
    let d = chain.witnesses.len();
    let hil = chain_hilbert(&chain, window)?;
    let depth = depth_from_chain(&chain, &hil)?;
    let e0 = hil[0].multiplicity();
    let e_bound_ok = e0 >= invariants.e_bound as i64;
    if !e_bound_ok {
        return Err(Error::assertion(format!("e(M) = {e0} is below μ·i(M) = {}", invariants.e_bound)));
    }

    let ratliff_rush = chain.stages[..d]
        .iter()
        .map(|s| rr_filtration(&s.module, window))
        .collect::<Result<Vec<_>>>()?;
    let exact_sequences = verify_exact_sequences(&chain, &ratliff_rush)?;
    if !exact_sequences.all_hold() {
        return Err(Error::assertion("a length identity along the superficial chain fails"));
    }

    let (delta, delta_bound_ok, quotient_series) = if d > 0 {
        let forms = chain.forms_over_stage(0)?;
        let m = &chain.stages[0].module;
        let delta = delta_vv(m, &forms)?;
        let ok = delta.delta > 2 || depth.depth as usize + delta.delta >= d;
        if !ok {
            return Err(Error::assertion(format!(
                "δ = {} but depth G(M) = {} < {d} - δ",
                delta.delta, depth.depth
            )));
        }
        (Some(delta), Some(ok), Some(graded_quotient_series(m, &forms)?))
    } else {
        (None, None, None)
    };

    let a_tuple = chain_a_tuple(&chain)?;
    let free_rank = split_free_summand(pres)?.free_rank;
    let classification = match classify_mu4_e3(pres, &a_tuple, &hil[0], &hil[d], depth.depth) {
        Ok(c) => Some(c),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e),
    };

    Ok(Analysis {
        label: pres.label().to_string(),
        invariants,
        e_bound_ok,
        hilbert: hil[0].clone(),
        trials: chain.witnesses.iter().map(|w| w.trials_used).collect(),
        depth,
        ratliff_rush,
        delta,
        delta_bound_ok,
        exact_sequences,
        quotient_series,
        a_tuple,
        free_rank,
        classification,
    })
}

/// [`analyze_at`] under the guarded cap protocol.
pub fn analyze(pres: &Presentation, config: &Config) -> Result<Guarded<Analysis>> {
    config.validate()?;
    guarded(config, |cap| analyze_at(pres, cap, config), Analysis::key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::presentation;

    #[test]
    fn ex2_full_analysis() {
        let cfg = Config::default().with_seed(42);
        let g = analyze(&presentation("ex2").unwrap(), &cfg).unwrap();
        assert_eq!(g.cap, 7);
        let a = g.value;
        assert_eq!(a.depth.depth, 1);
        assert_eq!(a.classification.unwrap().case_id, "4c");
        assert_eq!(a.free_rank, 0);
        assert!(a.delta_bound_ok.unwrap());
    }

    #[test]
    fn free_module_has_no_classification() {
        let cfg = Config::default().with_seed(42);
        let a = analyze(&presentation("free").unwrap(), &cfg).unwrap().value;
        assert_eq!(a.free_rank, 4);
        assert!(a.classification.is_none());
        assert_eq!(a.depth.depth, 3);
    }
}
