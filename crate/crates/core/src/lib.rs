//! Regularity, projective dimension, Ext modules and Betti numbers of
//! `S_n`-invariant monomial ideals.
//!
//! An invariant monomial ideal `I_X` in `n` variables is described by an
//! antichain `X` of partitions ([`IdealSpec`]). Its homological invariants
//! are read off the finite set `Z(X)` of pairs `(z, l)` ([`zset`]):
//!
//! ```
//! use symreg::{ext::invariants, part, IdealSpec};
//!
//! let x = IdealSpec::new(3, [part![2, 1, 1], part![4, 2]]).unwrap();
//! let report = invariants(&x).unwrap();
//! assert_eq!((report.reg, report.pdim), (7, 2));
//! ```
//!
//! [`betti`] computes Betti tables of arbitrary monomial ideals by brute
//! force and serves as the independent reference for everything else.

pub mod betti;
pub mod chains;
pub mod check;
pub mod cli;
pub mod error;
pub mod ext;
pub mod ideal;
pub mod linalg;
pub mod partition;
pub mod powers;
pub mod zset;

pub use error::{Error, ErrorKind, Result};
pub use ideal::{succ_set, y_family, DimensionData, IdealSpec};
pub use linalg::Field;
pub use partition::{ExponentVector, Partition};
pub use zset::{z_set, ZPair};
