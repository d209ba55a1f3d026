//! Partitions and the lattice of symmetric monomial ideals.
//!
//! `cargo run --example partitions`

use symreg::{part, IdealSpec, Partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = part![4, 2, 1];
    println!("x = {x}, |x| = {}, x' = {}", x.size(), x.conjugate());
    println!(
        "x(2) = {}, x - x(2) = {}",
        x.truncate_columns(2),
        x.strip_columns(2)
    );
    println!(
        "orbit of x in 4 variables has {} monomials",
        x.orbit_size(4)
    );
    println!(
        "(3,3,1) dominated by x: {}",
        part![3, 3, 1].dominance_leq(&x)
    );

    let a = IdealSpec::new(3, [part![2, 1, 1], part![4, 2]])?;
    let b = IdealSpec::new(3, [part![3]])?;
    println!("I = {a}, J = {b}");
    println!("I + J = {}", a.sum(&b)?);
    println!("I ∩ J = {}", a.intersection(&b)?);
    for p in 0..=3 {
        println!("I : I_{p}^∞ = {}", a.saturate(p));
    }
    let dims = a.small_dimension_data()?;
    println!("dim S/I = {}, codim = {}", dims.dim, dims.codim);
    println!("HF(S/I) up to degree 8: {:?}", a.hilbert_function(8));

    let raw = [part![2, 1, 1], part![4, 2], Partition::new(vec![5, 2])?];
    let m = IdealSpec::minimalize_report(3, raw)?;
    println!("minimalizing drops {:?}, leaving {}", m.removed, m.ideal);
    println!("I + (5,2) = I: {}", a.with_generator(part![5, 2])? == a);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
