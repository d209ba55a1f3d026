//! The set `Z(X)` of pairs `(z, l)` that governs every homological invariant
//! of `I_X`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{check_flat_prefix, succ_set, y_family, IdealSpec};
use crate::partition::{enumerate_box_partitions, Partition};

/// A pair `(z, l)`; `c = z_1` is derived.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZPair {
    pub z: Partition,
    pub l: usize,
}

impl ZPair {
    pub fn new(z: Partition, l: usize) -> Self {
        ZPair { z, l }
    }

    pub fn c(&self) -> usize {
        self.z.first()
    }

    /// `|z| + l + 1`, this pair's contribution to `reg(I_X)`.
    pub fn reg_term(&self) -> usize {
        self.z.size() + self.l + 1
    }

    /// `n - 1 - l`, this pair's contribution to `pdim(I_X)`.
    pub fn pdim_term(&self, n: usize) -> usize {
        n - 1 - self.l
    }
}

/// Ordered by `(c, l, z)` with `z` compared lexicographically.
impl Ord for ZPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.c(), self.l, &self.z).cmp(&(other.c(), other.l, &other.z))
    }
}

impl PartialOrd for ZPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.z.is_empty() {
            write!(f, "(∅, {})", self.l)
        } else {
            write!(f, "({}, {})", self.z, self.l)
        }
    }
}

impl fmt::Debug for ZPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Whether `(z, l)` satisfies both defining conditions of `Z(X)` with
/// `c = z_1`: some generator `x` has `x(c) <= z` and `x'_{c+1} <= l + 1`, and
/// every such generator has `x'_{c+1} = l + 1`.
pub fn zpair_member(pair: &ZPair, x: &IdealSpec) -> bool {
    let n = x.n();
    if pair.l >= n || !pair.z.fits(n) {
        return false;
    }
    let c = pair.c();
    let mut found = false;
    for g in x.generators() {
        let h = g.column_height(c + 1);
        if h <= pair.l + 1 && g.truncate_columns(c).leq(&pair.z) {
            if h != pair.l + 1 {
                return false;
            }
            found = true;
        }
    }
    found
}

/// Search-space knobs for [`z_set_with`]. The defaults give the production
/// enumeration; the others exist so tests can confirm the restrictions lose
/// nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZSetSearch {
    /// Extra values of `c` beyond `W - 1`.
    pub widen_c: usize,
    /// Drop the `z_1 = ... = z_{l+1}` restriction on candidates.
    pub unrestricted: bool,
}

/// `Z(X)` in `(c, l, z)` order.
pub fn z_set(x: &IdealSpec) -> Result<Vec<ZPair>> {
    z_set_with(x, ZSetSearch::default())
}

pub fn z_set_with(x: &IdealSpec, search: ZSetSearch) -> Result<Vec<ZPair>> {
    if x.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let pairs = enumerate(x, search);
    if search.unrestricted {
        if let Some(bad) = pairs.iter().find(|p| p.z.part(p.l) != p.c()) {
            return Err(Error::violation(format!(
                "{bad} is in Z(X) but z is not flat on its first l+1 rows"
            )));
        }
    }
    Ok(pairs)
}

/// `Z(X)`, empty for the unit ideal.
pub(crate) fn z_set_total(x: &IdealSpec) -> Vec<ZPair> {
    enumerate(x, ZSetSearch::default())
}

fn enumerate(x: &IdealSpec, search: ZSetSearch) -> Vec<ZPair> {
    let n = x.n();
    // Condition (2) needs x'_{c+1} = l + 1 >= 1 for some generator, so
    // c <= W - 1.
    let c_end = x.max_first_part() + search.widen_c;
    let mut out = Vec::new();
    for c in 0..c_end {
        for l in 0..n {
            let forced = match (search.unrestricted, c) {
                (_, 0) => 0,
                (true, _) => 1,
                (false, _) => l + 1,
            };
            for z in enumerate_box_partitions(c, n, forced) {
                let pair = ZPair::new(z, l);
                if zpair_member(&pair, x) {
                    out.push(pair);
                }
            }
        }
    }
    out.sort();
    out
}

/// `Z({x})` built directly: for each `c < x_1`, `l = x'_{c+1} - 1` and `z`
/// ranges over partitions with `z_1 = c` and `z >= x(c)`.
pub fn z_set_singleton(x: &Partition, n: usize) -> Result<Vec<ZPair>> {
    if x.is_empty() {
        return Err(Error::precondition(
            "singleton Z-set needs a nonempty partition",
        ));
    }
    x.check_fits(n)?;
    let mut out = Vec::new();
    for c in 0..x.first() {
        let l = x.column_height(c + 1) - 1;
        let floor = x.truncate_columns(c);
        let forced = if c == 0 { 0 } else { l + 1 };
        out.extend(
            enumerate_box_partitions(c, n, forced)
                .into_iter()
                .filter(|z| floor.leq(z))
                .map(|z| ZPair::new(z, l)),
        );
    }
    out.sort();
    Ok(out)
}

/// Membership through the lattice: `I_X ⊆ I_Y` and `I_X ⊄ I_{Y'}` for
/// `(Y, Y') = y_family(z, l)`.
pub fn zpair_member_via_lattice(pair: &ZPair, x: &IdealSpec) -> Result<bool> {
    let (y, y_prime) = y_family(&pair.z, pair.l, x.n())?;
    Ok(x.leq(&y)? && !x.leq(&y_prime)?)
}

/// Whether `J_{z,l}` embeds equivariantly in `S/I_X`, i.e.
/// `I_{Y_{z,l}} ⊇ I_X ⊇ I_{succ(z,l)}`.
pub fn admits_socle_embedding(z: &Partition, l: usize, x: &IdealSpec) -> Result<bool> {
    check_flat_prefix(z, l, x.n())?;
    let (y, _) = y_family(z, l, x.n())?;
    let succ = succ_set(z, l, x.n())?;
    Ok(x.leq(&y)? && succ.leq(x)?)
}

/// One line of the serialized `Z(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZSetEntry {
    pub z: Partition,
    pub l: usize,
    pub reg_term: usize,
    pub pdim_term: usize,
}

pub fn z_set_entries(pairs: &[ZPair], n: usize) -> Vec<ZSetEntry> {
    pairs
        .iter()
        .map(|p| ZSetEntry {
            z: p.z.clone(),
            l: p.l,
            reg_term: p.reg_term(),
            pdim_term: p.pdim_term(n),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn ex12() -> IdealSpec {
        IdealSpec::new(3, [part![2, 1, 1], part![4, 2]]).unwrap()
    }

    fn zp(z: Partition, l: usize) -> ZPair {
        ZPair::new(z, l)
    }

    fn ex12_z() -> Vec<ZPair> {
        let mut v = vec![
            zp(part![], 1),
            zp(part![1, 1], 1),
            zp(part![1, 1, 1], 0),
            zp(part![2, 2], 0),
            zp(part![3, 2], 0),
            zp(part![3, 3], 0),
        ];
        v.sort();
        v
    }

    #[test]
    fn membership_examples() {
        assert!(zpair_member(&zp(part![1, 1], 1), &ex12()));
        assert!(zpair_member(&zp(part![2, 2], 0), &ex12()));
        let i = IdealSpec::new(2, [part![1, 1]]).unwrap();
        assert!(!zpair_member(&zp(part![1], 0), &i));
    }

    #[test]
    fn z_set_examples() {
        assert_eq!(z_set(&ex12()).unwrap(), ex12_z());
        let i = IdealSpec::new(2, [part![2, 1]]).unwrap();
        assert_eq!(z_set(&i).unwrap(), vec![zp(part![], 1), zp(part![1, 1], 0)]);
        let i = IdealSpec::new(2, [part![1, 1]]).unwrap();
        assert_eq!(z_set(&i).unwrap(), vec![zp(part![], 1)]);
        let bigger = ex12().with_generator(part![1, 1, 1]).unwrap();
        let expected: Vec<_> = ex12_z()
            .into_iter()
            .filter(|p| *p != zp(part![1, 1, 1], 0))
            .collect();
        assert_eq!(z_set(&bigger).unwrap(), expected);
        assert_eq!(z_set(&IdealSpec::unit(3)), Err(Error::UnitIdeal));
        assert!(z_set(&IdealSpec::zero(3)).unwrap().is_empty());
    }

    #[test]
    fn order_is_c_then_l_then_z() {
        let z = z_set(&ex12()).unwrap();
        let shown: Vec<String> = z.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            [
                "(∅, 1)",
                "((1,1,1), 0)",
                "((1,1), 1)",
                "((2,2), 0)",
                "((3,2), 0)",
                "((3,3), 0)"
            ]
        );
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(
            z_set_singleton(&part![2, 1], 2).unwrap(),
            vec![zp(part![], 1), zp(part![1, 1], 0)]
        );
        for p in 1..=4 {
            for n in p..=5 {
                assert_eq!(
                    z_set_singleton(&Partition::rectangle(1, p), n).unwrap(),
                    vec![zp(part![], p - 1)]
                );
            }
        }
        // (W^p): every (z, p-1) with z flat on p rows and z_1 <= W-1.
        let (w, p, n) = (3, 2, 3);
        let got = z_set_singleton(&Partition::rectangle(w, p), n).unwrap();
        let mut expected: Vec<ZPair> = (0..w)
            .flat_map(|c| enumerate_box_partitions(c, n, if c == 0 { 0 } else { p }))
            .map(|z| zp(z, p - 1))
            .collect();
        expected.sort();
        assert_eq!(got, expected);
        assert!(z_set_singleton(&part![], 2).is_err());
    }

    #[test]
    fn lattice_examples() {
        assert!(zpair_member_via_lattice(&zp(part![1, 1, 1], 0), &ex12()).unwrap());
        let x = ex12().with_generator(part![2, 2]).unwrap();
        assert!(!zpair_member_via_lattice(&zp(part![2, 2], 0), &x).unwrap());
        let i = IdealSpec::new(2, [part![1, 1]]).unwrap();
        assert!(zpair_member_via_lattice(&zp(part![], 1), &i).unwrap());
        assert!(zpair_member_via_lattice(&zp(part![2, 1], 1), &i).is_err());
    }

    #[test]
    fn socle_examples() {
        assert!(admits_socle_embedding(&part![1, 1, 1], 0, &ex12()).unwrap());
        assert!(!admits_socle_embedding(&part![2, 2], 0, &ex12()).unwrap());
        for p in 1..=3 {
            let x = IdealSpec::squarefree(3, p).unwrap();
            assert!(admits_socle_embedding(&part![], p - 1, &x).unwrap());
        }
    }

    #[test]
    fn widening_the_search_adds_nothing() {
        for n in 1..=3 {
            for x in enumerate_box_partitions(3, n, 0)
                .into_iter()
                .filter(|x| !x.is_empty())
            {
                for y in enumerate_box_partitions(3, n, 0)
                    .into_iter()
                    .filter(|y| !y.is_empty())
                {
                    let i = IdealSpec::new(n, [x.clone(), y]).unwrap();
                    let base = z_set(&i).unwrap();
                    let wide = z_set_with(
                        &i,
                        ZSetSearch {
                            widen_c: 2,
                            unrestricted: true,
                        },
                    )
                    .unwrap();
                    assert_eq!(base, wide, "{i}");
                }
            }
        }
    }

    #[test]
    fn json_entries() {
        let entries = z_set_entries(&z_set(&ex12()).unwrap(), 3);
        let last = serde_json::to_string(entries.last().unwrap()).unwrap();
        assert_eq!(last, r#"{"z":[3,3],"l":0,"reg_term":7,"pdim_term":2}"#);
        assert_eq!(
            serde_json::to_string(&zp(part![3, 3], 0)).unwrap(),
            r#"{"z":[3,3],"l":0}"#
        );
    }
}
