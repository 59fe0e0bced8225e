use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{h_polynomial, HilbertData};
use crate::module::{Presentation, TruncModule};
use crate::superficial::{singh_check, superficial_chain, SinghCheck, SuperficialChain};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub depth: u32,
    /// `h_{M_0}, ..., h_{M_d}`.
    pub h_chain: Vec<Vec<i64>>,
    /// Superficial sequence over the original ring.
    pub witnesses: Vec<String>,
    /// `b_n(x_1, M)`.
    pub b_first: Vec<usize>,
    /// The h-chain and b-vector criteria agree at every stage.
    pub method_agreement: bool,
    /// Singh's equality for each step `M_c -> M_{c+1}`.
    pub singh: Vec<SinghCheck>,
}

/// Hilbert data of every stage; stage `c` must have dimension `d - c`.
pub fn chain_hilbert(chain: &SuperficialChain, window: Option<u32>) -> Result<Vec<HilbertData>> {
    let d = chain.stages.len() - 1;
    let mut out = Vec::with_capacity(d + 1);
    for (c, st) in chain.stages.iter().enumerate() {
        let hd = h_polynomial(&st.module, window)?;
        if hd.r as usize != d - c {
            return Err(if c == 0 {
                Error::validation(format!(
                    "module has dimension {} but dim A = {d}; it is not maximal Cohen-Macaulay",
                    hd.r
                ))
            } else {
                Error::assertion(format!("stage {c} has dimension {}, expected {}", hd.r, d - c))
            });
        }
        out.push(hd);
    }
    Ok(out)
}

/// Depth of `G(M)` from a full superficial chain: the first `c` where the
/// h-polynomial changes, cross-checked against the b-vectors.
pub fn depth_from_chain(chain: &SuperficialChain, hilbert: &[HilbertData]) -> Result<DepthReport> {
    let d = chain.witnesses.len();
    let h_chain: Vec<Vec<i64>> = hilbert.iter().map(|h| h.h_coeffs.clone()).collect();
    let depth = (0..d).find(|&c| h_chain[c] != h_chain[c + 1]).unwrap_or(d) as u32;
    let mut singh = Vec::with_capacity(d);
    let mut method_agreement = true;
    for c in 0..d {
        let b = &chain.witnesses[c].b_vector;
        let check = singh_check(&hilbert[c], &hilbert[c + 1], b);
        method_agreement &= check.vanishing_criterion;
        if !check.holds() {
            return Err(Error::assertion(format!("Singh's equality fails at stage {c}")));
        }
        singh.push(check);
    }
    if !method_agreement {
        return Err(Error::assertion("h-chain and b-vector depth criteria disagree"));
    }
    Ok(DepthReport {
        depth,
        h_chain,
        witnesses: chain.lifted_forms().iter().map(|f| f.to_string()).collect(),
        b_first: chain.witnesses.first().map(|w| w.b_vector.clone()).unwrap_or_default(),
        method_agreement,
        singh,
    })
}

/// Depth of `G(M)` by Sally descent along a random superficial sequence of
/// length `dim A`.
pub fn depth_assoc_graded(
    pres: &Presentation,
    cap: u32,
    seed: u64,
    max_trials: usize,
    window: Option<u32>,
) -> Result<DepthReport> {
    let d = pres.spec().nvars() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chain = superficial_chain(pres, d, cap, &mut rng, max_trials)?;
    let hilbert = chain_hilbert(&chain, window)?;
    depth_from_chain(&chain, &hilbert)
}

/// Valabrega–Valla sum `δ = sum_n ℓ(m^{n+1}M ∩ JM / J m^n M)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub delta: usize,
    /// Summands for `n = 0..red_J(M)`; all later ones vanish.
    pub per_n: Vec<usize>,
    pub reduction_number: u32,
}

pub fn delta_vv(m: &TruncModule, forms: &[Vec<u32>]) -> Result<DeltaReport> {
    let red = m.reduction_number(forms)?;
    let level = red + 1;
    let jm = m.ideal_times(forms, &m.power(0)?, level)?;
    let mut per_n = Vec::with_capacity(red as usize);
    for n in 0..red {
        let jf = m.ideal_times(forms, &m.power(n)?, level)?;
        let meet = m.intersect(&m.power(n + 1)?, &jm)?;
        per_n.push(m.length(&meet, &jf)?);
    }
    Ok(DeltaReport {
        delta: per_n.iter().sum(),
        per_n,
        reduction_number: red,
    })
}
