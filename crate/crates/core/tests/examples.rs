//! Every example runs to completion.

#[allow(dead_code)]
#[path = "../examples/partitions.rs"]
mod partitions;

#[test]
fn partitions_runs() {
    partitions::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/regularity.rs"]
mod regularity;

#[test]
fn regularity_runs() {
    regularity::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/ext_characters.rs"]
mod ext_characters;

#[test]
fn ext_characters_runs() {
    ext_characters::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/cohen_macaulay.rs"]
mod cohen_macaulay;

#[test]
fn cohen_macaulay_runs() {
    cohen_macaulay::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/powers.rs"]
mod powers;

#[test]
fn powers_runs() {
    powers::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/chains.rs"]
mod chains;

#[test]
fn chains_runs() {
    chains::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/betti_tables.rs"]
mod betti_tables;

#[test]
fn betti_tables_runs() {
    betti_tables::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/shifted.rs"]
mod shifted;

#[test]
fn shifted_runs() {
    shifted::run_example().expect("example runs");
}

#[allow(dead_code)]
#[path = "../examples/cross_check.rs"]
mod cross_check;

#[test]
fn cross_check_runs() {
    cross_check::run_example().expect("example runs");
}
