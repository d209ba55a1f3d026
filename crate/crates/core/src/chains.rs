//! Chains `I_{X_n}`, `n = 1, 2, ...`, of ideals generated by a fixed set of
//! partitions, and the eventually linear formula `reg = (w - 1) n + C`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext::invariants;
use crate::ideal::IdealSpec;
use crate::partition::Partition;

/// Width of the window `[m, m + 3]` on which `C` is checked to be constant.
const C_AUDIT_WINDOW: usize = 4;

/// `X_n = {x ∈ X : x has at most n parts}`, minimalized.
pub fn truncate_to_n(x: &[Partition], n: usize) -> Result<IdealSpec> {
    IdealSpec::new(n, x.iter().filter(|p| p.fits(n)).cloned())
}

/// Constants attached to a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainProfile {
    pub x: Vec<Partition>,
    /// Largest number of parts.
    pub m: usize,
    /// Smallest `x_1`.
    pub w: usize,
    /// Largest `x_1`.
    #[serde(rename = "W")]
    pub big_w: usize,
    /// `{x - x(w - 1)}`, minimalized.
    pub y: Vec<Partition>,
    /// `reg(I_{Y_n})` for `n >= m`.
    #[serde(rename = "C")]
    pub c: usize,
    /// `max(m, (m - 1)(W - w + 2) - C)`.
    pub threshold: usize,
}

pub fn chain_profile(x: &[Partition]) -> Result<ChainProfile> {
    if x.is_empty() {
        return Err(Error::precondition("a chain needs at least one partition"));
    }
    if x.iter().any(Partition::is_empty) {
        return Err(Error::UnitIdeal);
    }
    for (i, a) in x.iter().enumerate() {
        for b in &x[i + 1..] {
            if a.leq(b) || b.leq(a) {
                return Err(Error::precondition(format!("{a} and {b} are comparable")));
            }
        }
    }
    let m = x.iter().map(Partition::len).max().expect("nonempty");
    let w = x.iter().map(Partition::first).min().expect("nonempty");
    let big_w = x.iter().map(Partition::first).max().expect("nonempty");
    let y_ideal = IdealSpec::new(m, x.iter().map(|p| p.strip_columns(w - 1)))?;
    let y: Vec<Partition> = y_ideal.generators().to_vec();
    let c = invariants(&y_ideal)?.reg;
    for n in m + 1..m + C_AUDIT_WINDOW {
        let other = invariants(&truncate_to_n(&y, n)?)?.reg;
        if other != c {
            return Err(Error::violation(format!(
                "reg(I_Y) is {c} at n = {m} but {other} at n = {n}"
            )));
        }
    }
    let bound = ((m - 1) * (big_w - w + 2)).saturating_sub(c);
    Ok(ChainProfile {
        x: x.to_vec(),
        m,
        w,
        big_w,
        y,
        c,
        threshold: m.max(bound),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainMode {
    Exact,
    Formula,
}

/// How [`reg_chain`] chooses between the formula and the `Z`-set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChainStrategy {
    /// The formula at or past the threshold, the `Z`-set before it.
    #[default]
    Auto,
    /// Always the `Z`-set.
    Exact,
    /// Like `Auto`, but past the threshold also evaluate the `Z`-set and
    /// fail on disagreement.
    Verify,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReg {
    pub n: usize,
    pub reg: usize,
    pub mode: ChainMode,
}

impl ChainProfile {
    /// `(w - 1) n + C`.
    pub fn formula(&self, n: usize) -> usize {
        (self.w - 1) * n + self.c
    }
}

/// `reg(I_{X_n})`. Undefined below `n = m`.
pub fn reg_chain(profile: &ChainProfile, n: usize, strategy: ChainStrategy) -> Result<ChainReg> {
    if n < profile.m {
        return Err(Error::precondition(format!(
            "reg of the chain is undefined for n = {n} < m = {}",
            profile.m
        )));
    }
    let exact = || -> Result<usize> { Ok(invariants(&truncate_to_n(&profile.x, n)?)?.reg) };
    let past = n >= profile.threshold;
    let (reg, mode) = match strategy {
        ChainStrategy::Exact => (exact()?, ChainMode::Exact),
        ChainStrategy::Auto if past => (profile.formula(n), ChainMode::Formula),
        ChainStrategy::Verify if past => {
            let (f, e) = (profile.formula(n), exact()?);
            if f != e {
                return Err(Error::violation(format!(
                    "chain formula gives {f} at n = {n} but the Z-set gives {e}"
                )));
            }
            (f, ChainMode::Formula)
        }
        _ => (exact()?, ChainMode::Exact),
    };
    Ok(ChainReg { n, reg, mode })
}
