// depth G(M) for the four worked examples.

use gradedepth::corpus::presentation;
use gradedepth::hilbert::zpoly;
use gradedepth::rr_depth::depth_assoc_graded;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, expected) in [("ex1", 0), ("ex2", 1), ("ex3", 2), ("ex4", 3)] {
        let rep = depth_assoc_graded(&presentation(name)?, 7, 42, 50, None)?;
        let chain: Vec<String> = rep.h_chain.iter().map(|h| zpoly::format(h)).collect();
        println!("{name}: depth {}  h-chain {}", rep.depth, chain.join(" | "));
        assert_eq!(rep.depth, expected);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("depth_of_associated_graded example");
}
