//! Powers `I_w^d` of a principal invariant ideal, the ball-packing problem
//! that controls their `Z`-sets, and shiftedness tests.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext::invariants;
use crate::ideal::IdealSpec;
use crate::partition::{partitions_of, Partition};

/// `w' = (n^{a_0}, h_1^{a_1}, ..., h_k^{a_k})` with `n > h_1 > ... > h_k > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StaircaseProfile {
    pub n: usize,
    pub a0: usize,
    /// `(h_t, a_t)` for `t = 1..=k`.
    pub steps: Vec<(usize, usize)>,
}

impl StaircaseProfile {
    pub fn new(w: &Partition, n: usize) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::precondition(
                "the staircase of the empty partition is undefined",
            ));
        }
        w.check_fits(n)?;
        let conj = w.conjugate();
        let a0 = conj.parts().iter().filter(|&&h| h == n).count();
        let mut steps: Vec<(usize, usize)> = Vec::new();
        for &h in conj.parts().iter().filter(|&&h| h < n) {
            match steps.last_mut() {
                Some((last, a)) if *last == h => *a += 1,
                _ => steps.push((h, 1)),
            }
        }
        Ok(StaircaseProfile { n, a0, steps })
    }

    /// Rebuilds `w'`.
    pub fn conjugate(&self) -> Partition {
        let mut parts = vec![self.n; self.a0];
        for &(h, a) in &self.steps {
            parts.extend(std::iter::repeat_n(h, a));
        }
        Partition::new(parts).expect("heights decrease")
    }

    /// `b(w) = Σ_{t=1}^k (h_{t-1} - h_t)(a_t - 1) + (h_k - 1)(a_k - 1)`
    /// with `h_0 = n`; zero when `k = 0`.
    pub fn b(&self) -> usize {
        let Some(&(hk, ak)) = self.steps.last() else {
            return 0;
        };
        let mut prev = self.n;
        let mut b = 0;
        for &(h, a) in &self.steps {
            b += (prev - h) * (a - 1);
            prev = h;
        }
        b + (hk - 1) * (ak - 1)
    }
}

/// The constant `b(w)` in `reg(I_w^d) = d|w| + b(w)` for `d ≫ 0`.
pub fn b_const(w: &Partition, n: usize) -> Result<usize> {
    Ok(StaircaseProfile::new(w, n)?.b())
}

/// `BP(d, C; w)`: distribute `d` balls of each weight `w_1, ..., w_n` into
/// `n` bins of exactly `d` balls each so that bin `i` has total weight at
/// most `C_i` for every `i > r` (1-indexed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallPackingProblem {
    pub n: usize,
    pub d: usize,
    pub weights: Partition,
    pub capacities: Partition,
    pub r: usize,
}

/// `counts[i][j]` balls of weight `w_j` in bin `i`; every row and column sums
/// to `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinAssignment {
    pub counts: Vec<Vec<usize>>,
}

impl BinAssignment {
    /// Total weight of each bin.
    pub fn loads(&self, weights: &Partition) -> Vec<usize> {
        let n = self.counts.len();
        let w = weights.padded(n);
        self.counts
            .iter()
            .map(|row| row.iter().zip(&w).map(|(c, x)| c * x).sum())
            .collect()
    }

    /// Checks the row/column sums and the capacity constraints of `p`.
    pub fn satisfies(&self, p: &BallPackingProblem) -> bool {
        let n = p.n;
        if self.counts.len() != n || self.counts.iter().any(|r| r.len() != n) {
            return false;
        }
        let rows_ok = self.counts.iter().all(|r| r.iter().sum::<usize>() == p.d);
        let cols_ok = (0..n).all(|j| self.counts.iter().map(|r| r[j]).sum::<usize>() == p.d);
        let caps = p.capacities.padded(n);
        let loads_ok = self
            .loads(&p.weights)
            .iter()
            .zip(&caps)
            .skip(p.r)
            .all(|(l, c)| l <= c);
        rows_ok && cols_ok && loads_ok
    }
}

impl BallPackingProblem {
    pub fn new(
        n: usize,
        d: usize,
        weights: Partition,
        capacities: Partition,
        r: usize,
    ) -> Result<Self> {
        weights.check_fits(n)?;
        capacities.check_fits(n)?;
        if r > n {
            return Err(Error::precondition(format!("r = {r} exceeds n = {n}")));
        }
        Ok(BallPackingProblem {
            n,
            d,
            weights,
            capacities,
            r,
        })
    }
}

/// Whether `p` is feasible, with a witness when it is.
pub fn bp_feasible(p: &BallPackingProblem) -> Option<BinAssignment> {
    Packer::new(p, false).solve()
}

/// Whether the balls can be packed so that bin `i` has weight exactly `C_i`
/// for every `i`; `r` is ignored.
pub fn bp_exact_fill(p: &BallPackingProblem) -> Option<BinAssignment> {
    Packer::new(p, true).solve()
}

/// Depth-first search over bins, choosing how many balls of each distinct
/// weight go into the current bin. Failed `(bin, stock)` states are
/// memoized.
struct Packer {
    n: usize,
    d: usize,
    exact: bool,
    r: usize,
    /// Distinct weights, decreasing.
    values: Vec<usize>,
    /// Columns of the weight vector holding each distinct value.
    columns: Vec<Vec<usize>>,
    caps: Vec<usize>,
    /// `suffix_caps[i] = Σ_{k >= i} caps[k]`.
    suffix_caps: Vec<usize>,
    failed: HashSet<(usize, Vec<usize>)>,
}

impl Packer {
    fn new(p: &BallPackingProblem, exact: bool) -> Self {
        let n = p.n;
        let w = p.weights.padded(n);
        let mut values: Vec<usize> = w.clone();
        values.dedup();
        let columns = values
            .iter()
            .map(|&v| (0..n).filter(|&j| w[j] == v).collect())
            .collect();
        let caps = p.capacities.padded(n);
        let mut suffix_caps = vec![0; n + 1];
        for i in (0..n).rev() {
            suffix_caps[i] = suffix_caps[i + 1] + caps[i];
        }
        Packer {
            n,
            d: p.d,
            exact,
            r: if exact { 0 } else { p.r },
            values,
            columns,
            caps,
            suffix_caps,
            failed: HashSet::new(),
        }
    }

    fn solve(mut self) -> Option<BinAssignment> {
        let stock: Vec<usize> = self.columns.iter().map(|c| c.len() * self.d).collect();
        let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(self.n);
        if !self.fill(0, stock, &mut chosen) {
            return None;
        }
        Some(self.witness(&chosen))
    }

    fn fill(&mut self, bin: usize, stock: Vec<usize>, chosen: &mut Vec<Vec<usize>>) -> bool {
        if bin == self.n {
            return true;
        }
        if bin >= self.r {
            let remaining: usize = stock.iter().zip(&self.values).map(|(s, v)| s * v).sum();
            let ok = if self.exact {
                remaining == self.suffix_caps[bin]
            } else {
                remaining <= self.suffix_caps[bin]
            };
            if !ok {
                return false;
            }
        }
        if self.failed.contains(&(bin, stock.clone())) {
            return false;
        }
        let limit = (bin >= self.r).then_some(self.caps[bin]);
        let mut options = Vec::new();
        compositions(&stock, self.d, 0, &mut vec![0; stock.len()], &mut options);
        for take in options {
            let load: usize = take.iter().zip(&self.values).map(|(k, v)| k * v).sum();
            let fits = match limit {
                None => true,
                Some(c) if self.exact => load == c,
                Some(c) => load <= c,
            };
            if !fits {
                continue;
            }
            let next: Vec<usize> = stock.iter().zip(&take).map(|(s, k)| s - k).collect();
            chosen.push(take);
            if self.fill(bin + 1, next, chosen) {
                return true;
            }
            chosen.pop();
        }
        self.failed.insert((bin, stock));
        false
    }

    /// Spreads each bin's per-value counts over the columns sharing that
    /// value, filling columns in order.
    fn witness(&self, chosen: &[Vec<usize>]) -> BinAssignment {
        let mut counts = vec![vec![0; self.n]; self.n];
        let mut col_left = vec![self.d; self.n];
        for (i, take) in chosen.iter().enumerate() {
            for (vi, &k) in take.iter().enumerate() {
                let mut k = k;
                for &j in &self.columns[vi] {
                    let t = k.min(col_left[j]);
                    counts[i][j] += t;
                    col_left[j] -= t;
                    k -= t;
                }
                debug_assert_eq!(k, 0);
            }
        }
        BinAssignment { counts }
    }
}

/// Every way to take exactly `left` balls from `stock`, taking as many of
/// the heaviest values as possible first.
fn compositions(
    stock: &[usize],
    left: usize,
    idx: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if idx == stock.len() {
        if left == 0 {
            out.push(current.clone());
        }
        return;
    }
    let rest: usize = stock[idx + 1..].iter().sum();
    let hi = left.min(stock[idx]);
    let lo = left.saturating_sub(rest);
    for k in (lo..=hi).rev() {
        current[idx] = k;
        compositions(stock, left - k, idx + 1, current, out);
    }
    current[idx] = 0;
}

/// The dominant representatives of all sums of `d` elements of the orbit of
/// `w`, lexicographically decreasing. Each member is re-derived as an
/// exact-fill packing; a mismatch is a consistency violation.
pub fn powers_support(w: &Partition, d: usize, n: usize) -> Result<Vec<Partition>> {
    if d == 0 {
        return Err(Error::precondition("powers need d >= 1"));
    }
    let orbit = w.orbit(n)?;
    let mut current: BTreeSet<Partition> = BTreeSet::from([w.clone()]);
    for _ in 1..d {
        let mut next = BTreeSet::new();
        for p in &current {
            let base = p.padded(n);
            for v in &orbit {
                let sum = base
                    .iter()
                    .zip(&v.0)
                    .map(|(&a, &b)| a + b as usize)
                    .collect();
                next.insert(Partition::from_unsorted(sum));
            }
        }
        current = next;
    }
    for x in &current {
        let problem = BallPackingProblem::new(n, d, w.clone(), x.clone(), 0)?;
        if bp_exact_fill(&problem).is_none() {
            return Err(Error::violation(format!(
                "{x} is an orbit sum of {d} copies of {w} but admits no exact packing"
            )));
        }
    }
    Ok(current.into_iter().rev().collect())
}

/// `I_w^d` as an invariant ideal.
pub fn power_ideal(w: &Partition, d: usize, n: usize) -> Result<IdealSpec> {
    IdealSpec::new(n, powers_support(w, d, n)?)
}

/// `reg(I_w^d)` from the `Z`-set of the support.
pub fn reg_power_exact(w: &Partition, d: usize, n: usize) -> Result<usize> {
    Ok(invariants(&power_ideal(w, d, n)?)?.reg)
}

/// `d|w| + b(w)`. This agrees with [`reg_power_exact`] only for large `d`.
pub fn asymptotic_reg(w: &Partition, n: usize, d: usize) -> Result<usize> {
    Ok(d * w.size() + b_const(w, n)?)
}

/// Exact and asymptotic regularity of one power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerRegRow {
    pub d: usize,
    pub exact: usize,
    pub asymptotic: usize,
    pub agrees: bool,
}

pub fn power_reg_rows(
    w: &Partition,
    n: usize,
    ds: impl IntoIterator<Item = usize>,
) -> Result<Vec<PowerRegRow>> {
    ds.into_iter()
        .map(|d| {
            let exact = reg_power_exact(w, d, n)?;
            let asymptotic = asymptotic_reg(w, n, d)?;
            Ok(PowerRegRow {
                d,
                exact,
                asymptotic,
                agrees: exact == asymptotic,
            })
        })
        .collect()
}

/// `x` with one unit moved from row `t` to row `k` (0-indexed), re-sorted.
fn shift(x: &[usize], t: usize, k: usize) -> Partition {
    let mut v = x.to_vec();
    v[t] -= 1;
    v[k] += 1;
    Partition::from_unsorted(v)
}

/// For every minimal generator `x` and every `k` with `x_1 - x_k >= 2`,
/// `e^x · e_k / e_1` lies in the ideal.
pub fn is_symmetric_shifted(x: &IdealSpec) -> bool {
    let n = x.n();
    x.generators().iter().all(|g| {
        let v = g.padded(n);
        (1..n)
            .filter(|&k| v[0] >= v[k] + 2)
            .all(|k| x.contains_partition(&shift(&v, 0, k)))
    })
}

/// For every monomial `e^x` of the ideal in the generating degrees and every
/// `t < k` with `x_t > x_k`, `e^x · e_k / e_t` lies in the ideal.
pub fn is_symmetric_strongly_shifted(x: &IdealSpec) -> bool {
    let n = x.n();
    if x.is_zero() || x.is_unit() {
        return true;
    }
    (x.min_degree()..=x.max_degree()).all(|s| {
        partitions_of(s, n)
            .into_iter()
            .filter(|p| x.contains_partition(p))
            .all(|p| {
                let v = p.padded(n);
                (0..n).all(|t| {
                    (t + 1..n)
                        .filter(|&k| v[t] > v[k])
                        .all(|k| x.contains_partition(&shift(&v, t, k)))
                })
            })
    })
}

/// All generators share one degree `r` and `reg(I_X) = r`.
pub fn has_linear_resolution(x: &IdealSpec) -> Result<bool> {
    let report = invariants(x)?;
    Ok(x.single_degree() == Some(report.reg))
}
