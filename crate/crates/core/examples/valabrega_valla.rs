// The sum δ, the graded quotient series and exact-sequence identities.

use gradedepth::analysis::chain_at;
use gradedepth::corpus::presentation;
use gradedepth::rr_depth::{delta_vv, graded_quotient_series, rr_filtration, verify_exact_sequences};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["ex3", "ex4"] {
        let chain = chain_at(&presentation(name)?, 7, 42, 50)?;
        let m = &chain.stages[0].module;
        let forms = chain.forms_over_stage(0)?;
        let delta = delta_vv(m, &forms)?;
        let series = graded_quotient_series(m, &forms)?;
        println!(
            "{name}: δ = {} (per n {:?}), quotient series {} + {}z + {}z^2",
            delta.delta, delta.per_n, series.mu, series.alpha, series.beta
        );
        let rr = chain.stages[..3]
            .iter()
            .map(|s| rr_filtration(&s.module, None))
            .collect::<Result<Vec<_>, _>>()?;
        let seq = verify_exact_sequences(&chain, &rr)?;
        assert!(seq.all_hold());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("valabrega_valla example");
}
