// Reading, validating and writing JSON instance files.

use gradedepth::instance::InstanceFile;

const TEXT: &str = r#"{
  "label": "demo",
  "variables": ["x", "y", "z", "t"],
  "f": "x^2*(x - y)",
  "phi": [["x", "0", "0", "0"], ["0", "x^2", "0", "0"], ["0", "0", "x^2", "0"], ["0", "0", "0", "x*(x-y)"]]
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = InstanceFile::from_json(TEXT)?;
    assert_eq!(inst.p, 32003);
    let pres = inst.to_presentation(None)?;
    println!("{}: rank {}, det order {}", pres.label(), pres.rank(), pres.invariants()?.det_order);
    assert_eq!(InstanceFile::from_json(&inst.to_json())?, inst);

    let mut bad = inst.clone();
    bad.phi[1][1] = "x^2 +".into();
    let err = bad.to_presentation(None).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("instance_files example");
}
