//! Regularity and projective dimension from the Z-set, checked against the
//! Betti-number oracle.
//!
//! `cargo run --example regularity`

use symreg::betti::{expand_orbits, oracle_invariants};
use symreg::ext::invariants;
use symreg::ideal::LoadedIdeal;
use symreg::zset::{z_set, z_set_singleton};
use symreg::{part, Field, IdealSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let LoadedIdeal { ideal: x, warnings } =
        IdealSpec::from_json_str(r#"{"n": 3, "generators": [[4,2],[2,1,1]]}"#)?;
    assert!(warnings.is_empty());
    println!("X = {x}");
    for pair in z_set(&x)? {
        println!(
            "  {pair}: |z| + l + 1 = {}, n - 1 - l = {}",
            pair.reg_term(),
            pair.pdim_term(x.n())
        );
    }
    let r = invariants(&x)?;
    println!(
        "reg(I) = {}, pdim(I) = {}, depth(S/I) = {}",
        r.reg, r.pdim, r.depth
    );
    let oracle = oracle_invariants(&expand_orbits(&x)?, Field::Gf2)?;
    println!("oracle over GF(2): {oracle:?}");

    // A single orbit: reg = n(x_1 - 1) + x'_{x_1}.
    let y = part![3, 3, 1];
    let n = 4;
    println!(
        "Z({{{y}}}) in {n} variables has {} pairs",
        z_set_singleton(&y, n)?.len()
    );
    let r = invariants(&IdealSpec::new(n, [y])?)?;
    println!("reg = {}, pdim = {}", r.reg, r.pdim);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
