// Parsing power-series expressions and cutting by a linear form.

use gradedepth::arith::PrimeField;
use gradedepth::ring::{eliminate_linear_form, parse_poly, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let names = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
    let spec = RingSpec::new(names, PrimeField::new(32003)?, 12)?;
    let f = parse_poly("x^2*(x - y)", &spec)?;
    println!("f = {f}, order {:?}", f.order());
    assert_eq!(f.order(), Some(3));

    let form = parse_poly("y - 2*z + t", &spec)?;
    let (smaller, sub) = eliminate_linear_form(&spec, &form)?;
    let g = sub.apply(&f)?;
    println!("eliminated {}, f becomes {g} over {:?}", sub.eliminated_variable(), smaller.names());
    assert_eq!(smaller.nvars(), 3);
    assert_eq!(g.order(), Some(3));

    assert!(parse_poly("x + w", &spec).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ring_parsing example");
}
