// μ(M), i(M), order of det φ and the bound e(M) >= μ·i(M).

use gradedepth::corpus::corpus;
use gradedepth::hilbert::h_polynomial;
use gradedepth::module::TruncModule;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for entry in corpus() {
        let pres = entry.presentation();
        let inv = pres.invariants()?;
        let e = h_polynomial(&TruncModule::build(&pres, 7)?, None)?.multiplicity();
        println!(
            "{:<18} mu {} i {} ord det {} e {} (bound {})",
            entry.name, inv.mu, inv.i_m, inv.det_order, e, inv.e_bound
        );
        assert!(e >= inv.e_bound as i64);
        assert_eq!(e, inv.det_order as i64);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("presentation_invariants example");
}
