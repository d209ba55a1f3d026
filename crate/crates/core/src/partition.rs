//! Integer partitions and exponent vectors.
//!
//! A [`Partition`] carries no ambient dimension: it is the weakly decreasing
//! sequence of its nonzero parts. Every comparison zero-pads to the longer
//! length, so `(2,1)` and `(2,1,0,0)` are the same object. Where the number
//! of variables matters (orbits, membership in `P_n`) it is passed in
//! explicitly.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary nonnegative vector into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(b^a)`: `a` parts all equal to `b`.
    pub fn rectangle(b: usize, a: usize) -> Self {
        if b == 0 {
            return Self::empty();
        }
        Partition { parts: vec![b; a] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, i.e. `x'_1`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|x|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The 0-indexed part, zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `x_1`, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// `x'_i` for a 1-indexed column `i`: the number of parts that are `>= i`.
    /// By convention `x'_0` is the number of parts (as is `x'_1`).
    pub fn column_height(&self, i: usize) -> usize {
        let i = i.max(1);
        self.parts.partition_point(|&p| p >= i)
    }

    /// Parts zero-padded to length `n`. Panics if there are more than `n`
    /// parts.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(
            self.len() <= n,
            "partition {self} does not fit in {n} parts"
        );
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    pub fn fits(&self, n: usize) -> bool {
        self.len() <= n
    }

    pub(crate) fn check_fits(&self, n: usize) -> Result<()> {
        if self.fits(n) {
            Ok(())
        } else {
            Err(Error::TooManyParts {
                partition: self.to_string(),
                parts: self.len(),
                n,
            })
        }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        Partition {
            parts: (1..=width).map(|i| self.column_height(i)).collect(),
        }
    }

    /// `x(c)`: every part capped at `c`, i.e. the first `c` columns of the
    /// Young diagram.
    pub fn truncate_columns(&self, c: usize) -> Partition {
        if c == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p.min(c)).collect(),
        }
    }

    /// `x - x(r)`: the Young diagram with its first `r` columns removed.
    pub fn strip_columns(&self, r: usize) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > r)
                .map(|&p| p - r)
                .collect(),
        }
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise `self >= other`.
    pub fn geq(&self, other: &Partition) -> bool {
        other.leq(self)
    }

    /// Componentwise maximum.
    pub fn sup(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i).max(other.part(i))).collect(),
        }
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Every part multiplied by `d`.
    pub fn scale(&self, d: usize) -> Partition {
        if d == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p * d).collect(),
        }
    }

    /// True iff every prefix sum of `self` is at most the matching prefix sum
    /// of `other` (`self` is dominated by `other`). Sizes are not compared.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// All distinct rearrangements of `x` zero-padded to length `n`, in
    /// increasing lexicographic order.
    pub fn orbit(&self, n: usize) -> Result<Vec<ExponentVector>> {
        self.check_fits(n)?;
        let mut current: Vec<usize> = self.padded(n);
        current.reverse();
        let mut out = vec![ExponentVector::from_usize(&current)];
        while next_permutation(&mut current) {
            out.push(ExponentVector::from_usize(&current));
        }
        Ok(out)
    }

    /// `n! / prod(m_i!)`, the number of distinct rearrangements in `n` slots.
    pub fn orbit_size(&self, n: usize) -> u64 {
        let padded = self.padded(n);
        let mut size: u64 = 1;
        let mut placed: u64 = 0;
        let mut i = 0;
        while i < padded.len() {
            let mut j = i;
            while j < padded.len() && padded[j] == padded[i] {
                j += 1;
            }
            for k in 1..=(j - i) as u64 {
                placed += 1;
                size = size * placed / k;
            }
            i = j;
        }
        size
    }
}

/// In-place next lexicographic permutation; false when `v` was the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Ord for Partition {
    /// Lexicographic on zero-padded parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for writing partitions in code and tests: `part![4, 2, 1]`.
#[macro_export]
macro_rules! part {
    () => {
        $crate::partition::Partition::empty()
    };
    ($($x:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($x),+]).expect("weakly decreasing parts")
    };
}

/// A vector of integers of ambient length `n`. Monomial exponents are
/// nonnegative; character degrees may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn from_usize(v: &[usize]) -> Self {
        ExponentVector(v.iter().map(|&x| x as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Number of nonzero entries.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    /// Sorted into a partition. Panics on a negative entry.
    pub fn sorted_partition(&self) -> Partition {
        assert!(self.is_nonnegative(), "negative exponent in {:?}", self.0);
        Partition::from_unsorted(self.0.iter().map(|&x| x as usize).collect())
    }

    /// `self` divides `other` as monomials.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }
}

/// All partitions with at most `max_len` parts, every part at most
/// `max_part`, and the first `forced_prefix` parts equal to `max_part`, in
/// lexicographically decreasing order.
pub fn enumerate_box_partitions(
    max_part: usize,
    max_len: usize,
    forced_prefix: usize,
) -> Vec<Partition> {
    assert!(
        forced_prefix <= max_len,
        "forced prefix longer than the box"
    );
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(max_len);
    fill_box(max_part, max_len, forced_prefix, &mut current, &mut out);
    out
}

fn fill_box(
    max_part: usize,
    max_len: usize,
    forced_prefix: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let bound = current.last().copied().unwrap_or(max_part);
    if current.len() == max_len || bound == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let lowest = if current.len() < forced_prefix {
        max_part
    } else {
        0
    };
    for p in (lowest..=bound).rev() {
        if p == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
        } else {
            current.push(p);
            fill_box(max_part, max_len, forced_prefix, current, out);
            current.pop();
        }
    }
}

/// All partitions of `size` with at most `max_len` parts, lexicographically
/// decreasing.
pub fn partitions_of(size: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    parts_of(size, size, max_len, &mut current, &mut out);
    out
}

fn parts_of(
    remaining: usize,
    bound: usize,
    max_len: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=bound.min(remaining)).rev() {
        current.push(p);
        parts_of(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![4, 2, 1].conjugate(), part![3, 2, 1, 1]);
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![3, 3].conjugate(), part![2, 2, 2]);
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(part![4, 2, 1].truncate_columns(2), part![2, 2, 1]);
        assert_eq!(part![4, 2, 1].truncate_columns(0), part![]);
        assert_eq!(part![2, 1, 1].truncate_columns(1), part![1, 1, 1]);
    }

    #[test]
    fn strip_examples() {
        assert_eq!(part![3, 3].strip_columns(1), part![2, 2]);
        assert_eq!(part![2, 1, 1].strip_columns(1), part![1]);
        assert_eq!(part![5, 2].strip_columns(0), part![5, 2]);
        // conjugate identity v'_i = u'_{i+r}
        let u = part![2, 1, 1];
        let v = u.strip_columns(1);
        assert_eq!(v.conjugate().parts(), &u.conjugate().parts()[1..]);
    }

    #[test]
    fn order_examples() {
        assert!(part![1, 1].leq(&part![2, 1]));
        assert!(!part![2].leq(&part![1, 1]));
        assert!(!part![1, 1].leq(&part![2]));
        assert!(part![].leq(&part![3, 1]));
        assert_eq!(part![3, 1].sup(&part![2, 2]), part![3, 2]);
        assert_eq!(part![3, 1].sup(&part![]), part![3, 1]);
        assert_eq!(part![2, 1, 1].sup(&part![4, 2]), part![4, 2, 1]);
    }

    #[test]
    fn dominance_examples() {
        assert!(part![3, 3].dominance_leq(&part![6, 3]));
        assert!(!part![6, 3].dominance_leq(&part![3, 3]));
        assert!(part![4, 1].dominance_leq(&part![4, 1]));
    }

    #[test]
    fn column_heights() {
        let x = part![4, 2, 1];
        assert_eq!(x.column_height(1), 3);
        assert_eq!(x.column_height(2), 2);
        assert_eq!(x.column_height(3), 1);
        assert_eq!(x.column_height(5), 0);
    }

    #[test]
    fn orbit_examples() {
        let o = part![1, 1].orbit(3).unwrap();
        let set: HashSet<_> = o.iter().map(|v| v.0.clone()).collect();
        let expected: HashSet<Vec<i64>> = [vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]
            .into_iter()
            .collect();
        assert_eq!(set, expected);
        assert_eq!(part![2, 1, 1].orbit(3).unwrap().len(), 3);
        assert_eq!(part![].orbit(2).unwrap(), vec![ExponentVector(vec![0, 0])]);
        assert!(part![1, 1, 1].orbit(2).is_err());
    }

    #[test]
    fn orbit_matches_brute_force_permutations() {
        // every permutation of the padded vector, deduplicated
        fn perms(v: &[usize]) -> HashSet<Vec<usize>> {
            if v.len() <= 1 {
                return [v.to_vec()].into_iter().collect();
            }
            let mut out = HashSet::new();
            for i in 0..v.len() {
                let mut rest = v.to_vec();
                let head = rest.remove(i);
                for mut tail in perms(&rest) {
                    tail.insert(0, head);
                    out.insert(tail);
                }
            }
            out
        }
        for x in enumerate_box_partitions(3, 4, 0) {
            let fast: HashSet<Vec<usize>> = x
                .orbit(4)
                .unwrap()
                .into_iter()
                .map(|v| v.0.iter().map(|&e| e as usize).collect())
                .collect();
            assert_eq!(fast, perms(&x.padded(4)), "orbit of {x}");
            assert_eq!(x.orbit_size(4), fast.len() as u64);
        }
    }

    #[test]
    fn box_enumeration_examples() {
        assert_eq!(
            enumerate_box_partitions(1, 2, 1),
            vec![part![1, 1], part![1]]
        );
        assert_eq!(enumerate_box_partitions(0, 3, 0), vec![part![]]);
        assert_eq!(enumerate_box_partitions(0, 3, 2), vec![part![]]);
        assert_eq!(enumerate_box_partitions(2, 2, 2), vec![part![2, 2]]);
        let all = enumerate_box_partitions(2, 2, 0);
        assert_eq!(
            all,
            vec![
                part![2, 2],
                part![2, 1],
                part![2],
                part![1, 1],
                part![1],
                part![]
            ]
        );
    }

    #[test]
    fn partitions_of_size() {
        assert_eq!(partitions_of(4, 4).len(), 5);
        assert_eq!(
            partitions_of(4, 2),
            vec![part![4], part![3, 1], part![2, 2]]
        );
        assert_eq!(partitions_of(0, 3), vec![part![]]);
    }

    #[test]
    fn dominance_is_partial_order_on_equal_sizes() {
        for size in 0..=9 {
            let ps = partitions_of(size, 4);
            for a in &ps {
                assert!(a.dominance_leq(a));
                for b in &ps {
                    if a.dominance_leq(b) && b.dominance_leq(a) {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if a.dominance_leq(b) && b.dominance_leq(c) {
                            assert!(a.dominance_leq(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn serde_shape() {
        let x = part![4, 2, 1];
        assert_eq!(serde_json::to_string(&x).unwrap(), "[4,2,1]");
        assert_eq!(serde_json::to_string(&part![]).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,3,0]").unwrap();
        assert_eq!(back, part![3, 3]);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
