//! Regularity along a chain `I_{X_n}` as the number of variables grows.
//!
//! `cargo run --example chains`

use symreg::chains::{chain_profile, reg_chain, ChainStrategy};
use symreg::part;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = [part![2, 1, 1], part![3, 3]];
    let p = chain_profile(&x)?;
    println!("m = {}, w = {}, W = {}, Y = {:?}", p.m, p.w, p.big_w, p.y);
    println!("C = {}, formula valid from n = {}", p.c, p.threshold);
    for n in p.m..=p.threshold + 3 {
        let exact = reg_chain(&p, n, ChainStrategy::Exact)?;
        let auto = reg_chain(&p, n, ChainStrategy::Auto)?;
        println!(
            "n = {n}: exact {}, reported {} ({:?}), (w-1)n + C = {}",
            exact.reg,
            auto.reg,
            auto.mode,
            p.formula(n)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
