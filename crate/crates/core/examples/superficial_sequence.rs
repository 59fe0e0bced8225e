// Seeded search for a superficial sequence, b-vectors and Singh's equality.

use gradedepth::corpus::presentation;
use gradedepth::superficial::{find_phi_superficial, verify_singh};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pres = presentation("ex2")?;
    let witnesses = find_phi_superficial(&pres, 3, 7, 42, 50)?;
    for (i, w) in witnesses.iter().enumerate() {
        println!("x_{} = {}  (trial {})  b = {:?}", i + 1, w.lifted, w.trials_used, w.b_vector);
        assert!(w.checks.all());
    }
    // ex2 has depth 1: x_1 is regular on G(M)
    assert!(witnesses[0].b_vector.iter().all(|&b| b == 0));

    let singh = verify_singh(&pres, &witnesses[0].form, 7)?;
    println!("h_M = {:?}, h_N - (1-z)^r b = {:?}", singh.h_m, singh.rhs);
    assert!(singh.holds());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("superficial_sequence example");
}
