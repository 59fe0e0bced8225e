// Artinian a-tuples, free summands and the μ = 4, e(A) = 3 table.

use gradedepth::analysis::analyze;
use gradedepth::classify::split_free_summand;
use gradedepth::config::Config;
use gradedepth::corpus::corpus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = Config::default().with_seed(42);
    for entry in corpus().iter().filter(|e| e.expect.case_id.is_some()) {
        let a = analyze(&entry.presentation(), &config)?.value;
        let rec = a.classification.expect("classifiable");
        println!("{:<18} a = {:?}  case {}", entry.name, a.a_tuple, rec.case_id);
        assert_eq!(Some(rec.case_id.as_str()), entry.expect.case_id);
        assert!(rec.theorem_ok);
    }
    let split = split_free_summand(&gradedepth::corpus::presentation("split")?)?;
    println!("split: free rank {}", split.free_rank);
    assert_eq!(split.free_rank, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classification example");
}
