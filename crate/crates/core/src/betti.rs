//! Brute-force graded Betti numbers of monomial ideals.
//!
//! For a multidegree `b`, `β_{i,b}(I) = dim H̃_{i-1}(K^b)` where
//! `K^b = {γ ⊆ supp(b) squarefree : e^{b-γ} ∈ I}`. Only multidegrees in the
//! lcm lattice of the generators can contribute, so the lattice is built by
//! closure and each of its elements is examined.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::IdealSpec;
use crate::linalg::{rank, Field};
use crate::partition::ExponentVector;

/// Default cap on the number of lcm-lattice elements.
pub const DEFAULT_LATTICE_CAP: usize = 1 << 20;

/// A monomial ideal given by explicit minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialIdealExplicit {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdealExplicit {
    /// Minimalizes under divisibility; generators are kept sorted.
    pub fn new(n: usize, raw: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let mut all: Vec<ExponentVector> = raw.into_iter().collect();
        if let Some(bad) = all.iter().find(|g| g.len() != n || !g.is_nonnegative()) {
            return Err(Error::InvalidInput(format!(
                "{:?} is not a nonnegative exponent vector of length {n}",
                bad.0
            )));
        }
        all.sort();
        all.dedup();
        let gens = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Ok(MonomialIdealExplicit { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }
}

/// The union of the orbits of the generators of `I_X`.
pub fn expand_orbits(x: &IdealSpec) -> Result<MonomialIdealExplicit> {
    if x.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut all = Vec::new();
    for g in x.generators() {
        all.extend(g.orbit(x.n())?);
    }
    MonomialIdealExplicit::new(x.n(), all)
}

/// Graded Betti numbers of an ideal: `entries[(i, j)] = β_{i,i+j}`, placed in
/// row `j` and column `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Largest row index.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Largest column index.
    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(k, _)| k.0 == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Builds a table from rows written as in a printed Betti diagram:
    /// `(row, [β_0, β_1, ...])` with zeros for blanks.
    pub fn from_rows(field: Field, rows: &[(usize, &[u64])]) -> Self {
        let mut entries = BTreeMap::new();
        for &(j, vals) in rows {
            for (i, &v) in vals.iter().enumerate() {
                if v != 0 {
                    entries.insert((i, j), v);
                }
            }
        }
        BettiTable { field, entries }
    }

    /// Macaulay2-style diagram: a `total:` line, then one line per row from
    /// the lowest to the highest nonzero row, with `.` for zero.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return String::from("(zero table)\n");
        }
        let cols = self.pdim() + 1;
        let lo = self.entries.keys().map(|&(_, j)| j).min().unwrap_or(0);
        let hi = self.reg();
        let cell = |v: u64| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..cols).map(|i| i.to_string()).collect()));
        grid.push((
            "total:".into(),
            (0..cols).map(|i| self.total(i).to_string()).collect(),
        ));
        for j in lo..=hi {
            grid.push((
                format!("{j}:"),
                (0..cols).map(|i| cell(self.get(i, j))).collect(),
            ));
        }
        let label_w = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..cols)
            .map(|i| grid.iter().map(|(_, c)| c[i].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in &grid {
            let _ = write!(out, "{label:>label_w$}");
            for (c, w) in cells.iter().zip(&col_w) {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            rank: u64,
        }
        #[derive(Serialize)]
        struct Wire {
            field: u64,
            reg: usize,
            pdim: usize,
            entries: Vec<Entry>,
        }
        Wire {
            field: self.field.characteristic(),
            reg: self.reg(),
            pdim: self.pdim(),
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &rank)| Entry { i, j, rank })
                .collect(),
        }
        .serialize(s)
    }
}

fn require_proper(ideal: &MonomialIdealExplicit) -> Result<()> {
    if ideal.gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.gens.iter().any(|g| g.total_degree() == 0) {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// All lcms of nonempty subsets of the generators.
pub fn lcm_lattice(ideal: &MonomialIdealExplicit, cap: usize) -> Result<Vec<ExponentVector>> {
    let mut seen: HashSet<ExponentVector> = ideal.gens.iter().cloned().collect();
    let mut frontier: Vec<ExponentVector> = ideal.gens.clone();
    while let Some(m) = frontier.pop() {
        for g in &ideal.gens {
            let l = m.lcm(g);
            if !seen.contains(&l) {
                if seen.len() >= cap {
                    return Err(Error::ResourceLimit(format!(
                        "lcm lattice exceeds {cap} elements"
                    )));
                }
                seen.insert(l.clone());
                frontier.push(l);
            }
        }
    }
    let mut out: Vec<ExponentVector> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Reduced homology ranks `dim H̃_k` for `k = -1, 0, 1, ...` (index `k + 1`)
/// of the complex whose faces are the given vertex bitmasks.
fn reduced_homology(faces: &[u32], field: Field) -> Result<Vec<u64>> {
    if faces.is_empty() {
        return Ok(Vec::new());
    }
    let top = faces
        .iter()
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0);
    // by_dim[k] holds faces with k vertices, i.e. of dimension k - 1.
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_dim[f.count_ones() as usize].push(f);
    }
    for layer in &mut by_dim {
        layer.sort_unstable();
    }
    // ranks[k] = rank of the boundary from k-vertex faces to (k-1)-vertex faces.
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let index: BTreeMap<u32, usize> = by_dim[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let rows: Vec<Vec<i64>> = by_dim[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_dim[k - 1].len()];
                let mut sign = 1;
                for v in 0..32 {
                    if f & (1 << v) != 0 {
                        row[index[&(f & !(1 << v))]] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        ranks[k] = rank(&rows, field)?;
    }
    Ok((0..=top)
        .map(|k| (by_dim[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect())
}

/// `β_{i,b}(I)` for every multidegree with a nonzero value, keyed by
/// `(i, b)`.
pub fn multigraded_betti(
    ideal: &MonomialIdealExplicit,
    field: Field,
    cap: usize,
) -> Result<BTreeMap<(usize, ExponentVector), u64>> {
    require_proper(ideal)?;
    let n = ideal.n;
    if n > 31 {
        return Err(Error::ResourceLimit(format!(
            "{n} variables is too many for the oracle"
        )));
    }
    let mut out = BTreeMap::new();
    for b in lcm_lattice(ideal, cap)? {
        let support: u32 = (0..n).filter(|&j| b.0[j] > 0).fold(0, |m, j| m | (1 << j));
        let mut faces = Vec::new();
        let mut gamma = support;
        loop {
            let mut shifted = b.clone();
            for j in 0..n {
                if gamma & (1 << j) != 0 {
                    shifted.0[j] -= 1;
                }
            }
            if ideal.contains(&shifted) {
                faces.push(gamma);
            }
            if gamma == 0 {
                break;
            }
            gamma = (gamma - 1) & support;
        }
        for (k, h) in reduced_homology(&faces, field)?.into_iter().enumerate() {
            // index k is H̃_{k-1}, which gives β_k.
            if h > 0 {
                out.insert((k, b.clone()), h);
            }
        }
    }
    Ok(out)
}

pub fn betti_numbers(ideal: &MonomialIdealExplicit, field: Field) -> Result<BettiTable> {
    betti_numbers_capped(ideal, field, DEFAULT_LATTICE_CAP)
}

pub fn betti_numbers_capped(
    ideal: &MonomialIdealExplicit,
    field: Field,
    cap: usize,
) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    for ((i, b), v) in multigraded_betti(ideal, field, cap)? {
        let j = b.total_degree() as usize - i;
        *entries.entry((i, j)).or_insert(0) += v;
    }
    Ok(BettiTable { field, entries })
}

/// `(reg, pdim)` of the ideal read off its Betti table.
pub fn oracle_invariants(ideal: &MonomialIdealExplicit, field: Field) -> Result<(usize, usize)> {
    let t = betti_numbers(ideal, field)?;
    Ok((t.reg(), t.pdim()))
}

/// Betti table of `I_X`.
pub fn betti_table_of(x: &IdealSpec, field: Field) -> Result<BettiTable> {
    betti_numbers(&expand_orbits(x)?, field)
}
