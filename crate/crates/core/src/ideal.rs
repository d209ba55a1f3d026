//! The lattice of `S_n`-invariant monomial ideals.
//!
//! An invariant ideal in `n` variables is determined by the partitions `x`
//! with `e^x` in the ideal; its canonical description is the antichain of
//! componentwise-minimal such partitions. The zero ideal has no generators
//! and the unit ideal is generated by the empty partition.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, ExponentVector, Partition};

/// `I_X` in `n` variables, with `X` kept as a canonical antichain.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdealSpec {
    n: usize,
    gens: Vec<Partition>,
}

/// Result of [`IdealSpec::minimalize_report`]: the canonical ideal plus the
/// input partitions that were redundant.
#[derive(Clone, Debug)]
pub struct Minimalized {
    pub ideal: IdealSpec,
    pub removed: Vec<Partition>,
}

impl IdealSpec {
    /// Canonical ideal generated by the orbits of `raw`.
    pub fn new(n: usize, raw: impl IntoIterator<Item = Partition>) -> Result<Self> {
        Ok(Self::minimalize_report(n, raw)?.ideal)
    }

    /// Like [`IdealSpec::new`] but also returns the generators that were
    /// dropped because another generator lies below them.
    pub fn minimalize_report(
        n: usize,
        raw: impl IntoIterator<Item = Partition>,
    ) -> Result<Minimalized> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "ambient dimension must be positive".into(),
            ));
        }
        let unique: BTreeSet<Partition> = raw.into_iter().collect();
        for x in &unique {
            x.check_fits(n)?;
        }
        let mut gens = Vec::new();
        let mut removed = Vec::new();
        for y in &unique {
            if unique.iter().any(|x| x != y && x.leq(y)) {
                removed.push(y.clone());
            } else {
                gens.push(y.clone());
            }
        }
        gens.reverse();
        removed.reverse();
        Ok(Minimalized {
            ideal: IdealSpec { n, gens },
            removed,
        })
    }

    pub fn unit(n: usize) -> Self {
        IdealSpec {
            n,
            gens: vec![Partition::empty()],
        }
    }

    pub fn zero(n: usize) -> Self {
        IdealSpec {
            n,
            gens: Vec::new(),
        }
    }

    /// The square-free ideal `I_p`, generated by all square-free monomials of
    /// degree `p`.
    pub fn squarefree(n: usize, p: usize) -> Result<Self> {
        Self::new(n, [Partition::rectangle(1, p)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Generators in lexicographically decreasing order.
    pub fn generators(&self) -> &[Partition] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Partition::is_empty)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    fn same_ambient(&self, other: &IdealSpec) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.n, other.n))
        }
    }

    /// Largest `x_1` over the generators (`W`).
    pub fn max_first_part(&self) -> usize {
        self.gens.iter().map(Partition::first).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.gens.iter().map(Partition::size).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.gens.iter().map(Partition::size).min().unwrap_or(0)
    }

    /// Whether every generator has the same total degree.
    pub fn single_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.size();
        self.gens.iter().all(|x| x.size() == d).then_some(d)
    }

    /// Whether `e^x` lies in the ideal, for a partition `x` with at most `n`
    /// parts.
    pub fn contains_partition(&self, x: &Partition) -> bool {
        x.fits(self.n) && self.gens.iter().any(|g| g.leq(x))
    }

    /// Whether the monomial `e^u` lies in the ideal.
    pub fn contains_monomial(&self, u: &ExponentVector) -> bool {
        u.len() == self.n && u.is_nonnegative() && self.contains_partition(&u.sorted_partition())
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &IdealSpec) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.gens.iter().all(|x| other.contains_partition(x)))
    }

    pub fn sum(&self, other: &IdealSpec) -> Result<IdealSpec> {
        self.same_ambient(other)?;
        IdealSpec::new(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `I_X ∩ I_Y`, generated by the pairwise sups that still fit in `n`
    /// parts.
    pub fn intersection(&self, other: &IdealSpec) -> Result<IdealSpec> {
        self.same_ambient(other)?;
        let sups = self
            .gens
            .iter()
            .flat_map(|x| other.gens.iter().map(move |y| x.sup(y)))
            .filter(|s| s.fits(self.n));
        IdealSpec::new(self.n, sups)
    }

    /// Adds one partition to the generating set.
    pub fn with_generator(&self, x: Partition) -> Result<IdealSpec> {
        IdealSpec::new(self.n, self.gens.iter().cloned().chain([x]))
    }

    /// `I : I_p^∞`, computed by deleting from every generator the columns of
    /// height at most `p`.
    pub fn saturate(&self, p: usize) -> IdealSpec {
        let stripped = self.gens.iter().map(|x| {
            let c = x.conjugate().parts().partition_point(|&h| h > p);
            x.truncate_columns(c)
        });
        IdealSpec::new(self.n, stripped).expect("saturation keeps part counts")
    }

    /// `p = min x'_1`, `dim(S/I) = p - 1` and `codim = n - p + 1`.
    pub fn small_dimension_data(&self) -> Result<DimensionData> {
        self.require_proper()?;
        let p = self
            .gens
            .iter()
            .map(Partition::len)
            .min()
            .expect("nonzero ideal");
        Ok(DimensionData {
            p,
            dim: p - 1,
            codim: self.n - p + 1,
        })
    }

    /// Hilbert function of `S/I` in degrees `0..=degree_bound`.
    pub fn hilbert_function(&self, degree_bound: usize) -> Vec<u64> {
        (0..=degree_bound)
            .map(|t| {
                partitions_of(t, self.n)
                    .into_iter()
                    .filter(|x| !self.contains_partition(x))
                    .map(|x| x.orbit_size(self.n))
                    .sum()
            })
            .collect()
    }
}

/// Dimension data of `S/I_X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionData {
    /// Smallest number of parts of a generator.
    pub p: usize,
    pub dim: usize,
    pub codim: usize,
}

/// Minimal generators of `I_{succ(z,l)}`: the smallest partitions above `z`
/// that exceed it in some row `i > l` (1-indexed).
pub fn succ_set(z: &Partition, l: usize, n: usize) -> Result<IdealSpec> {
    z.check_fits(n)?;
    if l >= n {
        return Err(Error::precondition(format!(
            "l = {l} must be below n = {n}"
        )));
    }
    let zp = z.padded(n);
    // Raising row i (0-indexed) to z_i + 1 forces every earlier row to at
    // least that value.
    let bumps = (l..n).map(|i| {
        let target = zp[i] + 1;
        let parts: Vec<usize> = zp
            .iter()
            .enumerate()
            .map(|(j, &v)| if j <= i { v.max(target) } else { v })
            .collect();
        Partition::new(parts).expect("raising a row prefix keeps the order")
    });
    IdealSpec::new(n, bumps)
}

/// `(Y_{z,l}, Y'_{z,l})`. `Y'` holds the rectangles `((z_i+1)^i)` for rows
/// `i > l+1` where `z` steps down, plus row `i = l+2` unconditionally; `Y`
/// adds `((z_1+1)^{l+1})`.
///
/// Without the row `l+2` rectangle, `Y'` cannot see generators with
/// `x'_{c+1} > l+1` when `z_{l+2} = z_1`, and `(∅, 0)` would wrongly pass for
/// `X = {(2,1,1), (4,2)}`. The extra rectangle lies above `((z_1+1)^{l+1})`,
/// so `I_Y` is unchanged.
pub fn y_family(z: &Partition, l: usize, n: usize) -> Result<(IdealSpec, IdealSpec)> {
    check_flat_prefix(z, l, n)?;
    let zp = z.padded(n);
    let steps: Vec<Partition> = (l + 2..=n)
        .filter(|&i| i == l + 2 || zp[i - 2] > zp[i - 1])
        .map(|i| Partition::rectangle(zp[i - 1] + 1, i))
        .collect();
    let head = Partition::rectangle(z.first() + 1, l + 1);
    let y = IdealSpec::new(n, steps.iter().cloned().chain([head]))?;
    let y_prime = IdealSpec::new(n, steps)?;
    Ok((y, y_prime))
}

/// Checks `l < n`, `z` fits and `z_1 = ... = z_{l+1}`.
pub(crate) fn check_flat_prefix(z: &Partition, l: usize, n: usize) -> Result<()> {
    z.check_fits(n)?;
    if l >= n {
        return Err(Error::precondition(format!(
            "l = {l} must be below n = {n}"
        )));
    }
    if z.part(l) != z.first() {
        return Err(Error::precondition(format!(
            "{z} does not satisfy z_1 = ... = z_{}",
            l + 1
        )));
    }
    Ok(())
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (n={})", self.n);
        }
        write!(f, "I{{")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}} (n={})", self.n)
    }
}

impl fmt::Debug for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Wire form: `{"n": 3, "generators": [[2,1,1],[4,2]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealSpecJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub generators: Vec<Vec<usize>>,
}

/// An ideal read from JSON, with the warnings produced while canonicalizing
/// it.
#[derive(Clone, Debug)]
pub struct LoadedIdeal {
    pub ideal: IdealSpec,
    pub warnings: Vec<String>,
}

impl IdealSpec {
    /// Parses the wire form. Generators are sorted into partitions and
    /// minimalized; each adjustment is reported as a warning.
    pub fn from_json_str(text: &str) -> Result<LoadedIdeal> {
        let raw: IdealSpecJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("ideal JSON: {e}")))?;
        let n = raw
            .n
            .ok_or_else(|| Error::InvalidInput("ideal JSON is missing \"n\"".into()))?;
        Self::from_wire(n, raw.generators)
    }

    pub(crate) fn from_wire(n: usize, generators: Vec<Vec<usize>>) -> Result<LoadedIdeal> {
        let mut warnings = Vec::new();
        let mut parts = Vec::with_capacity(generators.len());
        for g in generators {
            let p = Partition::from_unsorted(g.clone());
            if p.parts() != &g[..g.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1)] {
                warnings.push(format!("generator {g:?} reordered to {p}"));
            }
            parts.push(p);
        }
        let report = Self::minimalize_report(n, parts)?;
        if !report.removed.is_empty() {
            let removed: Vec<String> = report.removed.iter().map(|p| p.to_string()).collect();
            warnings.push(format!(
                "input was not an antichain; dropped redundant generators {}",
                removed.join(", ")
            ));
        }
        Ok(LoadedIdeal {
            ideal: report.ideal,
            warnings,
        })
    }

    pub fn to_json(&self) -> IdealSpecJson {
        IdealSpecJson {
            n: Some(self.n),
            generators: self.gens.iter().map(|g| g.parts().to_vec()).collect(),
        }
    }
}

impl Serialize for IdealSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
