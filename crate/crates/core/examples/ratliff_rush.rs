// Ratliff–Rush filtration and the identity h = h~ + (1-z)^(r+1) r_M.

use gradedepth::corpus::presentation;
use gradedepth::hilbert::zpoly;
use gradedepth::module::TruncModule;
use gradedepth::rr_depth::rr_filtration;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = TruncModule::build(&presentation("ex1")?, 7)?;
    let rr = rr_filtration(&m, None)?;
    println!("R_n = {:?}", rr.excess);
    println!("r_M = {}, h~ = {}", zpoly::format(&rr.r_coeffs), zpoly::format(&rr.h_tilde));
    assert!(!rr.is_trivial());

    let cm = TruncModule::build(&presentation("ex4")?, 7)?;
    assert!(rr_filtration(&cm, None)?.is_trivial());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ratliff_rush example");
}
