//! Cross-checks between the `Z`-set calculus and independent computations,
//! plus the seeded random corpus they run on.
//!
//! Each `check_*` function returns `Ok(())` or a
//! [`Error::ConsistencyViolation`] describing the first disagreement.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::betti::{betti_table_of, expand_orbits, oracle_invariants};
use crate::error::{Error, Result};
use crate::ext::{
    ext_character_quotient, hilbert_function_jzl, invariants, is_cohen_macaulay,
    quotient_reg_from_characters, sequentially_cm_filtration,
};
use crate::ideal::IdealSpec;
use crate::linalg::Field;
use crate::partition::{enumerate_box_partitions, partitions_of, Partition};
use crate::powers::{has_linear_resolution, is_symmetric_shifted};
use crate::zset::{
    admits_socle_embedding, z_set, z_set_total, zpair_member, zpair_member_via_lattice, ZPair,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonempty partition with at most `max_len` parts, each at most
/// `max_part`.
pub fn random_partition(rng: &mut impl Rng, max_part: usize, max_len: usize) -> Partition {
    let len = rng.gen_range(1..=max_len);
    let parts: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    Partition::from_unsorted(parts)
}

/// A proper nonzero ideal in `n` variables with up to `max_gens` random
/// generators.
pub fn random_ideal(rng: &mut impl Rng, n: usize, max_part: usize, max_gens: usize) -> IdealSpec {
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<Partition> = (0..k).map(|_| random_partition(rng, max_part, n)).collect();
    IdealSpec::new(n, gens).expect("generated partitions fit")
}

/// `count` random ideals with `n` drawn from `1..=max_n`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize, max_part: usize) -> Vec<IdealSpec> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_n);
            random_ideal(&mut r, n, max_part, 4)
        })
        .collect()
}

/// A random antichain of partitions of `degree` with at most `n` parts.
pub fn random_single_degree(rng: &mut impl Rng, n: usize, degree: usize) -> IdealSpec {
    let mut pool = partitions_of(degree, n);
    pool.shuffle(rng);
    let k = rng.gen_range(1..=pool.len().min(4));
    IdealSpec::new(n, pool.into_iter().take(k)).expect("partitions fit")
}

/// Every nonempty antichain of partitions of `degree` with at most `n` parts.
pub fn all_single_degree(n: usize, degree: usize) -> Vec<IdealSpec> {
    let pool = partitions_of(degree, n);
    assert!(
        pool.len() < 20,
        "too many partitions of {degree} for an exhaustive sweep"
    );
    (1u32..1 << pool.len())
        .map(|mask| {
            let gens = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| p.clone());
            IdealSpec::new(n, gens).expect("partitions fit")
        })
        .collect()
}

fn fail(msg: String) -> Result<()> {
    Err(Error::violation(msg))
}

/// Membership by definition and through `Y_{z,l}` agree on every flat
/// candidate pair.
pub fn check_lattice_agreement(x: &IdealSpec) -> Result<()> {
    let n = x.n();
    let w = x.max_first_part();
    for c in 0..=w {
        for l in 0..n {
            for z in enumerate_box_partitions(c, n, if c == 0 { 0 } else { l + 1 }) {
                let pair = ZPair::new(z, l);
                let direct = zpair_member(&pair, x);
                let lattice = zpair_member_via_lattice(&pair, x)?;
                if direct != lattice {
                    return fail(format!(
                        "{pair} vs {x}: definition {direct}, lattice {lattice}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// `reg`/`pdim` from `Z(X)` equal those read off the Betti table.
pub fn check_oracle(x: &IdealSpec, field: Field) -> Result<()> {
    let report = invariants(x)?;
    let oracle = oracle_invariants(&expand_orbits(x)?, field)?;
    if (report.reg, report.pdim) != oracle {
        return fail(format!(
            "{x}: Z-set gives (reg, pdim) = ({}, {}), oracle over {field} gives {oracle:?}",
            report.reg, report.pdim
        ));
    }
    Ok(())
}

/// `Σ_{(z,l) ∈ Z(X)} HF(J_{z,l}) = HF(S/I_X)` in degrees up to `bound`.
pub fn check_filtration_hilbert(x: &IdealSpec, bound: usize) -> Result<()> {
    let n = x.n();
    let mut sum = vec![0u64; bound + 1];
    for p in z_set_total(x) {
        for (acc, v) in sum
            .iter_mut()
            .zip(hilbert_function_jzl(&p.z, p.l, n, bound)?)
        {
            *acc += v;
        }
    }
    let direct = x.hilbert_function(bound);
    if sum != direct {
        return fail(format!(
            "{x}: J-filtration gives {sum:?}, direct count {direct:?}"
        ));
    }
    Ok(())
}

/// `Z(X^{:p}) = {(z, l) ∈ Z(X) : l >= p}` for every `p`.
pub fn check_saturation_slice(x: &IdealSpec) -> Result<()> {
    let full = z_set_total(x);
    for p in 0..=x.n() {
        let sat = z_set_total(&x.saturate(p));
        let slice: Vec<ZPair> = full.iter().filter(|q| q.l >= p).cloned().collect();
        if sat != slice {
            return fail(format!(
                "{x}, p = {p}: Z(X^:p) = {sat:?}, slice = {slice:?}"
            ));
        }
    }
    Ok(())
}

/// Consecutive terms of the saturation filtration differ by pairs with a
/// single `l`.
pub fn check_scm_purity(x: &IdealSpec) -> Result<()> {
    let chain = sequentially_cm_filtration(x)?;
    for (i, pair) in chain.windows(2).enumerate() {
        if !pair[0].leq(&pair[1])? {
            return fail(format!("filtration of {x} decreases at step {i}"));
        }
        let upper = z_set_total(&pair[1]);
        let diff: Vec<ZPair> = z_set_total(&pair[0])
            .into_iter()
            .filter(|q| !upper.contains(q))
            .collect();
        if let Some(bad) = diff.iter().find(|q| q.l != i) {
            return fail(format!("{x}: step {i} of the filtration contains {bad}"));
        }
    }
    Ok(())
}

/// The Cohen–Macaulay criteria agree, and a Cohen–Macaulay quotient has
/// `pdim(S/I) = codim` according to the oracle.
pub fn check_cm(x: &IdealSpec, field: Field) -> Result<bool> {
    let report = is_cohen_macaulay(x)?;
    if report.cohen_macaulay {
        let (_, pdim) = oracle_invariants(&expand_orbits(x)?, field)?;
        if pdim + 1 != report.codim {
            return Err(Error::violation(format!(
                "{x} is Cohen–Macaulay but the oracle gives pdim(S/I) = {} against codim {}",
                pdim + 1,
                report.codim
            )));
        }
    }
    Ok(report.cohen_macaulay)
}

/// Walks from `I_X` up to the unit ideal, each time adding a `z` whose
/// `J_{z,l}` embeds in the current quotient, and checks that exactly
/// `(z, l)` leaves the `Z`-set. Returns the pairs in the order removed.
pub fn check_deletion_recursion(x: &IdealSpec) -> Result<Vec<ZPair>> {
    let mut current = x.clone();
    let mut removed = Vec::new();
    let total = z_set_total(x).len();
    while !current.is_unit() {
        let zs = z_set_total(&current);
        let mut next = None;
        for p in &zs {
            if admits_socle_embedding(&p.z, p.l, &current)? {
                next = Some(p.clone());
                break;
            }
        }
        let Some(p) = next else {
            return Err(Error::violation(format!(
                "no pair of Z({current}) embeds in the quotient"
            )));
        };
        let bigger = current.with_generator(p.z.clone())?;
        let expected: Vec<ZPair> = zs.iter().filter(|q| **q != p).cloned().collect();
        let got = z_set_total(&bigger);
        if got != expected {
            return Err(Error::violation(format!(
                "adding {} to {current} gives Z = {got:?}, expected {expected:?}",
                p.z
            )));
        }
        removed.push(p);
        current = bigger;
    }
    if removed.len() != total {
        return Err(Error::violation(format!(
            "walk from {x} took {} steps for {total} pairs",
            removed.len()
        )));
    }
    Ok(removed)
}

/// `Ext^j(S/I_X, S)` vanishes off `{n - l}` and the character-based
/// regularity equals `reg(I_X) - 1`.
pub fn check_characters(x: &IdealSpec, vbound: usize) -> Result<()> {
    let n = x.n();
    let pairs = z_set(x)?;
    for j in 0..=n {
        let ch = ext_character_quotient(x, j, vbound)?;
        let expected = pairs.iter().any(|p| p.l + j == n);
        if ch.is_zero() == expected {
            return fail(format!(
                "{x}: Ext^{j} nonvanishing is {}, expected {expected}",
                !ch.is_zero()
            ));
        }
    }
    let reg = invariants(x)?.reg as i64;
    let from_chars = quotient_reg_from_characters(x, vbound)?;
    if from_chars != Some(reg - 1) {
        return fail(format!(
            "{x}: characters give reg(S/I) = {from_chars:?}, expected {}",
            reg - 1
        ));
    }
    Ok(())
}

/// For ideals generated in one degree: shifted iff linear, and linear iff
/// the oracle's Betti table has a single row.
pub fn check_shifted_linear(x: &IdealSpec, field: Field) -> Result<()> {
    let Some(r) = x.single_degree() else {
        return Ok(());
    };
    let shifted = is_symmetric_shifted(x);
    let linear = has_linear_resolution(x)?;
    let table = betti_table_of(x, field)?;
    let oracle_linear = table.reg() == r;
    if shifted != linear || linear != oracle_linear {
        return fail(format!(
            "{x}: shifted {shifted}, linear by Z-set {linear}, linear by oracle {oracle_linear}"
        ));
    }
    Ok(())
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub ideal: IdealSpec,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
}

/// Runs every check on `x`. A resource error aborts the run; violations are
/// recorded and make the report fail.
pub fn check_all(x: &IdealSpec, field: Field) -> Result<CheckReport> {
    let mut checks = Vec::new();
    let mut record = |name: &'static str, r: Result<()>| -> Result<()> {
        match r {
            Ok(()) => checks.push(CheckLine {
                name,
                passed: true,
                detail: None,
            }),
            Err(e @ Error::ResourceLimit(_)) => return Err(e),
            Err(e) => checks.push(CheckLine {
                name,
                passed: false,
                detail: Some(e.to_string()),
            }),
        }
        Ok(())
    };
    record("lattice_membership", check_lattice_agreement(x))?;
    record("oracle_reg_pdim", check_oracle(x, field))?;
    if field != Field::Prime(32003) {
        record(
            "oracle_reg_pdim_gf32003",
            check_oracle(x, Field::Prime(32003)),
        )?;
    }
    record("filtration_hilbert", check_filtration_hilbert(x, 10))?;
    record("saturation_slice", check_saturation_slice(x))?;
    record("scm_purity", check_scm_purity(x))?;
    record("cohen_macaulay", check_cm(x, field).map(|_| ()))?;
    record(
        "deletion_recursion",
        check_deletion_recursion(x).map(|_| ()),
    )?;
    record("ext_characters", check_characters(x, 2))?;
    record("shifted_linear", check_shifted_linear(x, field))?;
    let passed = checks.iter().all(|c| c.passed);
    Ok(CheckReport {
        ideal: x.clone(),
        passed,
        checks,
    })
}
