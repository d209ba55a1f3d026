//! The built-in cross-check suite on a seeded random corpus.
//!
//! `cargo run --example cross_check`

use symreg::check::{check_all, random_corpus, DEFAULT_SEED};
use symreg::Field;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = random_corpus(DEFAULT_SEED, 10, 4, 4);
    let mut passed = 0;
    for x in &corpus {
        let report = check_all(x, Field::Gf2)?;
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        println!(
            "{x}: {}",
            if failed.is_empty() {
                "ok".to_string()
            } else {
                failed.join(", ")
            }
        );
        passed += usize::from(report.passed);
    }
    println!("{passed} of {} ideals passed every check", corpus.len());
    if passed != corpus.len() {
        return Err("cross-check failures".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
