//! Betti tables computed by the lcm-lattice oracle, in two characteristics.
//!
//! `cargo run --example betti_tables`

use symreg::betti::{betti_numbers, betti_table_of, MonomialIdealExplicit};
use symreg::chains::truncate_to_n;
use symreg::{part, ExponentVector, Field, IdealSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = IdealSpec::new(3, [part![2, 1, 1], part![4, 2]])?;
    for field in [Field::Gf2, Field::Prime(32003)] {
        let t = betti_table_of(&x, field)?;
        println!(
            "{x} over {field}: reg {}, pdim {}\n{}",
            t.reg(),
            t.pdim(),
            t.render()
        );
    }

    let chain = truncate_to_n(&[part![2, 1, 1], part![3, 3]], 4)?;
    println!("{chain}:\n{}", betti_table_of(&chain, Field::Gf2)?.render());

    // Any monomial ideal, not only symmetric ones.
    let gens = [[2, 0, 0], [1, 1, 0], [0, 1, 1]].map(|v| ExponentVector::from_usize(&v));
    let ideal = MonomialIdealExplicit::new(3, gens)?;
    println!(
        "(x^2, xy, yz):\n{}",
        betti_numbers(&ideal, Field::Rational)?.render()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
