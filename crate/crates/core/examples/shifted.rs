//! Symmetric shiftedness against linear resolutions for ideals generated in
//! one degree.
//!
//! `cargo run --example shifted`

use symreg::check::all_single_degree;
use symreg::powers::{has_linear_resolution, is_symmetric_shifted, is_symmetric_strongly_shifted};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (n, degree) = (3, 4);
    let mut linear = 0;
    let all = all_single_degree(n, degree);
    for x in &all {
        let shifted = is_symmetric_shifted(x);
        let lin = has_linear_resolution(x)?;
        assert_eq!(shifted, lin);
        linear += usize::from(lin);
        println!(
            "{x}: shifted {shifted}, strongly shifted {}, linear {lin}",
            is_symmetric_strongly_shifted(x)
        );
    }
    println!(
        "{linear} of {} antichains of degree {degree} in {n} variables are linear",
        all.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
