//! Regularity, projective dimension, Ext characters and Cohen–Macaulay
//! structure, all read off `Z(X)`.
//!
//! Public `reg`/`pdim` numbers refer to the ideal `I_X`. For the quotient,
//! `reg(S/I_X) = reg - 1` and `pdim(S/I_X) = pdim + 1`.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{check_flat_prefix, IdealSpec};
use crate::partition::{ExponentVector, Partition};
use crate::zset::{z_set, z_set_total, ZPair};

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}

/// Regularity, projective dimension and depth, with the pairs of `Z(X)`
/// attaining each maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    /// `reg(I_X)`.
    pub reg: usize,
    /// `pdim(I_X)`.
    pub pdim: usize,
    /// `depth(S/I_X) = n - pdim(S/I_X)`.
    pub depth: usize,
    pub reg_witnesses: Vec<ZPair>,
    pub pdim_witnesses: Vec<ZPair>,
}

impl InvariantReport {
    pub fn quotient_reg(&self) -> usize {
        self.reg - 1
    }

    pub fn quotient_pdim(&self) -> usize {
        self.pdim + 1
    }
}

pub fn invariants(x: &IdealSpec) -> Result<InvariantReport> {
    x.require_proper()?;
    let n = x.n();
    let pairs = z_set(x)?;
    let reg = pairs
        .iter()
        .map(ZPair::reg_term)
        .max()
        .ok_or_else(|| Error::violation(format!("Z(X) is empty for the proper ideal {x}")))?;
    let pdim = pairs
        .iter()
        .map(|p| p.pdim_term(n))
        .max()
        .expect("nonempty");
    Ok(InvariantReport {
        n,
        reg,
        pdim,
        depth: n - (pdim + 1),
        reg_witnesses: pairs
            .iter()
            .filter(|p| p.reg_term() == reg)
            .cloned()
            .collect(),
        pdim_witnesses: pairs
            .iter()
            .filter(|p| p.pdim_term(n) == pdim)
            .cloned()
            .collect(),
    })
}

/// `(reg, pdim)` of the module `J_{z,l}`: `(|z| + l, n - l)`.
pub fn jzl_invariants(z: &Partition, l: usize, n: usize) -> Result<(usize, usize)> {
    check_flat_prefix(z, l, n)?;
    Ok((z.size() + l, n - l))
}

/// Number of leading parts of `z` equal to `z_1`, counted in `n` slots; `n`
/// for the empty partition.
fn flat_width(z: &Partition, n: usize) -> usize {
    if z.is_empty() {
        n
    } else {
        z.parts().iter().take_while(|&&v| v == z.first()).count()
    }
}

/// A truncated `Z^n`-graded character `Σ mult · e^deg`.
///
/// Terms are complete for total degrees in `[lo, hi]` and nothing outside
/// that window is stored. The empty sum is complete everywhere; it carries
/// the window `[0, 0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedCharacter {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    pub terms: BTreeMap<ExponentVector, u64>,
}

impl MultigradedCharacter {
    pub fn zero(n: usize) -> Self {
        MultigradedCharacter {
            n,
            lo: 0,
            hi: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, deg: &ExponentVector) -> u64 {
        self.terms.get(deg).copied().unwrap_or(0)
    }

    /// Sum of multiplicities in total degree `t`.
    pub fn total_in_degree(&self, t: i64) -> u64 {
        self.terms
            .iter()
            .filter(|(d, _)| d.total_degree() == t)
            .map(|(_, m)| m)
            .sum()
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(ExponentVector::total_degree).min()
    }

    /// Sum of two characters. The result is complete up to the smaller of the
    /// two upper bounds; terms above it are dropped.
    pub fn merge(&self, other: &MultigradedCharacter) -> MultigradedCharacter {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let hi = self.hi.min(other.hi);
        let mut terms = BTreeMap::new();
        for (d, m) in self.terms.iter().chain(&other.terms) {
            if d.total_degree() <= hi {
                *terms.entry(d.clone()).or_insert(0) += m;
            }
        }
        MultigradedCharacter {
            n: self.n,
            lo: self.lo.min(other.lo),
            hi,
            terms,
        }
    }
}

impl Serialize for MultigradedCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            deg: &'a ExponentVector,
            mult: u64,
        }
        let terms: Vec<Term<'_>> = self
            .terms
            .iter()
            .map(|(deg, &mult)| Term { deg, mult })
            .collect();
        let mut st = s.serialize_struct("MultigradedCharacter", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("lo", &self.lo)?;
        st.serialize_field("hi", &self.hi)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Character of `Ext^{n-l}(S/I_{l+1}, S)`, complete for `|t| <= vbound`.
pub fn ext_character_ip(l: usize, n: usize, vbound: usize) -> Result<MultigradedCharacter> {
    ext_character_jzl(&Partition::empty(), l, n, vbound)
}

/// Character of `Ext^{n-l}(J_{z,l}, S)`: the sum over `u` in the orbit of
/// `z` and `v >= 0` supported on `Λ_u = {j : u_j = z_1}` with at most `l`
/// nonzero entries of `C(p-1-p_v, l-p_v) · e^{v-u-(1^n)}`, truncated at
/// `|v| <= vbound`.
pub fn ext_character_jzl(
    z: &Partition,
    l: usize,
    n: usize,
    vbound: usize,
) -> Result<MultigradedCharacter> {
    check_flat_prefix(z, l, n)?;
    let p = flat_width(z, n);
    let top = z.first() as i64;
    let base = -(z.size() as i64) - n as i64;
    let mut terms = BTreeMap::new();
    let mut shifts = Vec::new();
    bounded_vectors(p, vbound, l, &mut vec![0; p], 0, &mut shifts);
    for u in z.orbit(n)? {
        let lambda: Vec<usize> = (0..n).filter(|&j| u.0[j] == top).collect();
        debug_assert_eq!(lambda.len(), p);
        for v in &shifts {
            let pv = v.iter().filter(|&&e| e != 0).count() as i64;
            let mult = binomial(p as i64 - 1 - pv, l as i64 - pv);
            if mult == 0 {
                continue;
            }
            let mut deg: Vec<i64> = u.0.iter().map(|&e| -e - 1).collect();
            for (&j, &e) in lambda.iter().zip(v) {
                deg[j] += e;
            }
            *terms.entry(ExponentVector(deg)).or_insert(0) += mult;
        }
    }
    Ok(MultigradedCharacter {
        n,
        lo: base,
        hi: base + vbound as i64,
        terms,
    })
}

/// All `v` in `Z_{>=0}^len` with `|v| <= budget` and at most `max_support`
/// nonzero entries.
fn bounded_vectors(
    len: usize,
    budget: usize,
    max_support: usize,
    current: &mut Vec<i64>,
    pos: usize,
    out: &mut Vec<Vec<i64>>,
) {
    if pos == len {
        out.push(current.clone());
        return;
    }
    bounded_vectors(len, budget, max_support, current, pos + 1, out);
    if max_support == 0 {
        return;
    }
    for e in 1..=budget {
        current[pos] = e as i64;
        bounded_vectors(len, budget - e, max_support - 1, current, pos + 1, out);
    }
    current[pos] = 0;
}

/// Character of `Ext^j(S/I_X, S)`: the sum of the `J_{z,l}` characters over
/// pairs of `Z(X)` with `n - l = j`.
pub fn ext_character_quotient(
    x: &IdealSpec,
    j: usize,
    vbound: usize,
) -> Result<MultigradedCharacter> {
    let pairs = z_set(x)?;
    let n = x.n();
    let mut acc = MultigradedCharacter::zero(n);
    for p in pairs.iter().filter(|p| p.l + j == n) {
        acc = acc.merge(&ext_character_jzl(&p.z, p.l, n, vbound)?);
    }
    Ok(acc)
}

/// `reg(S/I_X) = max{-r - j : Ext^j(S/I_X, S)_r ≠ 0}` evaluated on the
/// truncated characters. Every `J_{z,l}` character attains its minimum total
/// degree at `v = 0`, so any `vbound` gives the exact value.
pub fn quotient_reg_from_characters(x: &IdealSpec, vbound: usize) -> Result<Option<i64>> {
    let n = x.n();
    let mut best = None;
    for j in 0..=n {
        let ch = ext_character_quotient(x, j, vbound)?;
        if let Some(r) = ch.min_total_degree() {
            let v = -r - j as i64;
            best = Some(best.map_or(v, |b: i64| b.max(v)));
        }
    }
    Ok(best)
}

/// The map `Ext^j(S/I_Y, S) -> Ext^j(S/I_X, S)` induced by `I_X ⊆ I_Y`,
/// split into the summands indexed by `Z(X)` and `Z(Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtMapDecomposition {
    pub ker: Vec<ZPair>,
    pub im: Vec<ZPair>,
    pub coker: Vec<ZPair>,
}

pub fn ext_map_decomposition(
    x: &IdealSpec,
    y: &IdealSpec,
    j: usize,
) -> Result<ExtMapDecomposition> {
    if !x.leq(y)? {
        return Err(Error::precondition(format!("{x} is not contained in {y}")));
    }
    let n = x.n();
    let zx = z_set_total(x);
    let zy = z_set_total(y);
    let in_degree = |p: &&ZPair| p.l + j == n;
    Ok(ExtMapDecomposition {
        ker: zy
            .iter()
            .filter(in_degree)
            .filter(|p| !zx.contains(p))
            .cloned()
            .collect(),
        im: zy
            .iter()
            .filter(in_degree)
            .filter(|p| zx.contains(p))
            .cloned()
            .collect(),
        coker: zx
            .iter()
            .filter(in_degree)
            .filter(|p| !zy.contains(p))
            .cloned()
            .collect(),
    })
}

/// The two equivalent Cohen–Macaulay criteria, evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub cohen_macaulay: bool,
    /// Every generator satisfies `x_1 = ... = x_p`, `p = min x'_1`.
    pub flat_generators: bool,
    /// Every `(z, l)` in `Z(X)` has `l = dim(S/I_X)`.
    pub equidimensional_zset: bool,
    /// `X^{:p-1} = X`.
    pub unmixed: bool,
    pub dim: usize,
    pub codim: usize,
    /// Distinct `l` values in `Z(X)`, increasing.
    pub l_values: Vec<usize>,
}

pub fn is_cohen_macaulay(x: &IdealSpec) -> Result<CmReport> {
    let dims = x.small_dimension_data()?;
    let p = dims.p;
    let flat = x.generators().iter().all(|g| g.part(p - 1) == g.first());
    let pairs = z_set(x)?;
    let mut l_values: Vec<usize> = pairs.iter().map(|q| q.l).collect();
    l_values.sort_unstable();
    l_values.dedup();
    let equi = l_values.iter().all(|&l| l == dims.dim);
    let unmixed = x.saturate(p - 1) == *x;
    if flat != equi || flat != unmixed {
        return Err(Error::violation(format!(
            "Cohen–Macaulay criteria disagree on {x}: generators {flat}, Z-set {equi}, unmixed {unmixed}"
        )));
    }
    Ok(CmReport {
        cohen_macaulay: flat,
        flat_generators: flat,
        equidimensional_zset: equi,
        unmixed,
        dim: dims.dim,
        codim: dims.codim,
        l_values,
    })
}

/// `[X^{:0}, X^{:1}, ..., X^{:p}]`, ending at the unit ideal.
pub fn sequentially_cm_filtration(x: &IdealSpec) -> Result<Vec<IdealSpec>> {
    let p = x.small_dimension_data()?.p;
    Ok((0..=p).map(|i| x.saturate(i)).collect())
}

/// Hilbert function of `J_{z,l}` in degrees `0..=degree_bound`: each of the
/// orbit elements of `z` contributes the monomials of degree `t - |z|` in
/// `p` variables with support of size at most `l`.
pub fn hilbert_function_jzl(
    z: &Partition,
    l: usize,
    n: usize,
    degree_bound: usize,
) -> Result<Vec<u64>> {
    z.check_fits(n)?;
    let p = flat_width(z, n);
    if l >= p {
        return Err(Error::precondition(format!(
            "l = {l} must be below the {p} leading equal parts of {z}"
        )));
    }
    let orbit = z.orbit_size(n);
    let size = z.size();
    Ok((0..=degree_bound)
        .map(|t| {
            if t < size {
                return 0;
            }
            let s = (t - size) as i64;
            let local: u64 = if s == 0 {
                1
            } else {
                (1..=l.min(p) as i64)
                    .map(|k| binomial(p as i64, k) * binomial(s - 1, k - 1))
                    .sum()
            };
            orbit * local
        })
        .collect())
}
