//! Cohen–Macaulay tests and the sequentially Cohen–Macaulay filtration by
//! saturations.
//!
//! `cargo run --example cohen_macaulay`

use symreg::ext::{is_cohen_macaulay, sequentially_cm_filtration};
use symreg::{part, IdealSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ideals = [
        IdealSpec::new(3, [part![2, 2]])?,
        IdealSpec::new(4, [part![2, 2, 2]])?,
        IdealSpec::new(3, [part![2, 1, 1], part![4, 2]])?,
    ];
    for x in &ideals {
        let r = is_cohen_macaulay(x)?;
        println!(
            "{x}: CM {}, flat generators {}, single l {}, unmixed {}, dim {}",
            r.cohen_macaulay, r.flat_generators, r.equidimensional_zset, r.unmixed, r.dim
        );
    }
    let x = &ideals[2];
    println!("filtration of {x}:");
    for (i, step) in sequentially_cm_filtration(x)?.iter().enumerate() {
        println!("  X^:{i} = {step}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
