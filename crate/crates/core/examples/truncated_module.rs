// The finite model M / m^cap M: powers, colons and lengths.

use gradedepth::corpus::presentation;
use gradedepth::module::TruncModule;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = TruncModule::build(&presentation("ex4")?, 7)?;
    let lengths: Vec<usize> = (0..6).map(|n| m.graded_length(n)).collect();
    println!("ℓ(m^n M / m^(n+1) M) for n < 6: {lengths:?}");
    assert_eq!(&lengths[..3], &[4, 15, 33]);

    // (m^3 M : m) contains m^2 M
    let f3 = m.power(3)?;
    let colon = m.colon_max(&f3)?;
    assert!(m.contains(&colon, &m.power(2)?)?);
    println!("ℓ((m^3 M : m) / m^2 M) = {}", m.length(&colon, &m.power(2)?)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("truncated_module example");
}
