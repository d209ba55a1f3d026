//! Powers of a single orbit: generators via ball packing, exact regularity
//! and the eventual linear formula `d|w| + b(w)`.
//!
//! `cargo run --example powers`

use symreg::part;
use symreg::powers::{
    b_const, bp_feasible, power_reg_rows, powers_support, BallPackingProblem, StaircaseProfile,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w = part![2, 1];
    let n = 4;
    for d in 1..=3 {
        let support = powers_support(&w, d, n)?;
        let shown: Vec<String> = support.iter().map(ToString::to_string).collect();
        println!("X_w^{d}: {}", shown.join(" "));
    }

    let problem = BallPackingProblem::new(n, 2, w.clone(), part![3, 3], 1)?;
    match bp_feasible(&problem) {
        Some(a) => println!(
            "BP(2, (3,3); (2,1)) is 1-feasible, bin loads {:?}",
            a.loads(&w)
        ),
        None => println!("BP(2, (3,3); (2,1)) is not 1-feasible"),
    }

    for (w, n) in [(part![3, 1], 4), (part![3, 2], 2), (part![2, 1, 1], 3)] {
        let s = StaircaseProfile::new(&w, n)?;
        println!(
            "w = {w}, n = {n}: w' = {}, b = {}",
            s.conjugate(),
            b_const(&w, n)?
        );
        for row in power_reg_rows(&w, n, 1..=n + 2)? {
            let flag = if row.agrees {
                ""
            } else {
                "  (before stabilization)"
            };
            println!(
                "  d = {}: reg {} vs d|w| + b = {}{flag}",
                row.d, row.exact, row.asymptotic
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
