//! Exact matrix rank over `GF(2)`, `GF(p)` and `Q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field, identified by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub enum Field {
    #[default]
    Gf2,
    /// `GF(p)` for an odd prime `p < 2^31`.
    Prime(u64),
    Rational,
}

impl Field {
    pub fn from_char(p: u64) -> Result<Self> {
        match p {
            0 => Ok(Field::Rational),
            2 => Ok(Field::Gf2),
            p if p < (1 << 31) && is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::InvalidInput(format!(
                "field characteristic must be 0 or a prime below 2^31, got {p}"
            ))),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Gf2 => 2,
            Field::Prime(p) => p,
            Field::Rational => 0,
        }
    }
}

impl TryFrom<u64> for Field {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Field::from_char(p)
    }
}

impl From<Field> for u64 {
    fn from(f: Field) -> u64 {
        f.characteristic()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => write!(f, "GF(2)"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "QQ"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Rank of an integer matrix given by rows, reduced into `field`.
pub fn rank(rows: &[Vec<i64>], field: Field) -> Result<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::violation("ragged matrix passed to rank"));
    }
    if cols == 0 {
        return Ok(0);
    }
    match field {
        Field::Gf2 => Ok(rank_gf2(rows, cols)),
        Field::Prime(p) => Ok(rank_mod_p(rows, cols, p)),
        Field::Rational => rank_bareiss(rows, cols),
    }
}

fn rank_gf2(rows: &[Vec<i64>], cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut bits = vec![0u64; words];
            for (j, &v) in r.iter().enumerate() {
                if v.rem_euclid(2) == 1 {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][w] & bit != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[w] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(rows: &[Vec<i64>], cols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            let f = row[col];
            if i != rank && f != 0 {
                for (a, &b) in row.iter_mut().zip(&pivot_row) {
                    *a = (*a + p - f * b % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination; every intermediate entry is a minor of the
/// input, so overflow is reported rather than wrapped.
fn rank_bareiss(rows: &[Vec<i64>], cols: usize) -> Result<usize> {
    let overflow = || Error::ResourceLimit("i128 overflow during Bareiss elimination".into());
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let piv = m[rank][col];
        for i in rank + 1..m.len() {
            let (top, bottom) = m.split_at_mut(i);
            let row = &mut bottom[0];
            let f = row[col];
            for (x, &r) in row.iter_mut().zip(&top[rank]) {
                let a = x.checked_mul(piv).ok_or_else(overflow)?;
                let b = f.checked_mul(r).ok_or_else(overflow)?;
                *x = a.checked_sub(b).ok_or_else(overflow)? / prev;
            }
        }
        prev = piv;
        rank += 1;
    }
    Ok(rank)
}
