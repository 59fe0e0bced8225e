// Hilbert–Samuel function, h-polynomial and Hilbert coefficients.

use gradedepth::corpus::presentation;
use gradedepth::hilbert::{h_polynomial, zpoly};
use gradedepth::module::TruncModule;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = TruncModule::build(&presentation("ringA")?, 7)?;
    let ha = h_polynomial(&ring, None)?;
    println!("A: h = {}, e = {:?}", zpoly::format(&ha.h_coeffs), ha.e);
    assert_eq!(ha.h_coeffs, [1, 1, 1]);
    assert_eq!(&ha.e[..3], &[3, 3, 1]);

    let m = TruncModule::build(&presentation("ex1")?, 7)?;
    let hm = h_polynomial(&m, None)?;
    println!("ex1: H = {:?}, h = {}", hm.hilbert_samuel, zpoly::format(&hm.h_coeffs));
    assert_eq!(zpoly::format(&hm.h_coeffs), "4 + 6z^2 - 4z^3 + z^4");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hilbert_series example");
}
