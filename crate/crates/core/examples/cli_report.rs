// Driving the command-line layer in-process and round-tripping its JSON.

use clap::Parser;
use gradedepth::cli::{execute, Cli, Report};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cli = Cli::try_parse_from(["gradedepth", "depth", "ex3", "--seed", "42"])?;
    let report = execute(&cli.command)?;
    print!("{}", report.to_table());
    assert_eq!(report.depth.as_ref().map(|d| d.depth), Some(2));

    let json = report.to_json();
    assert_eq!(Report::from_json(&json)?, report);
    assert!(!json.contains("classification"));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli_report example");
}
