// The guarded protocol: a result is accepted once caps c and c + 1 agree.

use gradedepth::config::{guarded, Config};
use gradedepth::corpus::presentation;
use gradedepth::hilbert::h_polynomial;
use gradedepth::module::TruncModule;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pres = presentation("ex1")?;
    let config = Config { cap: 5, ..Config::default() };
    let g = guarded(
        &config,
        |cap| h_polynomial(&TruncModule::build(&pres, cap)?, None),
        |h| h.h_coeffs.clone(),
    )?;
    println!("h = {:?} confirmed at cap {} after {} escalations", g.value.h_coeffs, g.cap, g.escalations);
    assert!(g.escalations >= 1);
    assert!(g.cap <= 9);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("guarded_caps example");
}
