//! Multigraded Ext characters, regularity read off them, and the
//! decomposition of the map induced by an inclusion of ideals.
//!
//! `cargo run --example ext_characters`

use symreg::ext::{
    ext_character_jzl, ext_character_quotient, ext_map_decomposition, quotient_reg_from_characters,
};
use symreg::{part, IdealSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ch = ext_character_jzl(&part![1, 1], 0, 2, 2)?;
    println!(
        "Ext^2(J_((1,1),0), S), |v| <= 2, window [{}, {}]:",
        ch.lo, ch.hi
    );
    for (deg, mult) in &ch.terms {
        println!("  {mult} x e^{:?}", deg.0);
    }

    let x = IdealSpec::new(3, [part![2, 1, 1], part![4, 2]])?;
    for j in 0..=x.n() {
        let ch = ext_character_quotient(&x, j, 1)?;
        match ch.min_total_degree() {
            Some(r) => println!(
                "Ext^{j}(S/I, S): lowest degree {r}, {} terms",
                ch.terms.len()
            ),
            None => println!("Ext^{j}(S/I, S) = 0"),
        }
    }
    println!(
        "reg(S/I) from characters: {:?}",
        quotient_reg_from_characters(&x, 0)?
    );

    let y = x.saturate(1);
    for j in 0..=x.n() {
        let d = ext_map_decomposition(&x, &y, j)?;
        if d.ker.is_empty() && d.im.is_empty() && d.coker.is_empty() {
            continue;
        }
        println!(
            "j = {j}: ker {:?}, im {:?}, coker {:?}",
            show(&d.ker),
            show(&d.im),
            show(&d.coker)
        );
    }
    Ok(())
}

fn show(pairs: &[symreg::ZPair]) -> Vec<String> {
    pairs.iter().map(ToString::to_string).collect()
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
