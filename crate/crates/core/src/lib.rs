//! Exact-arithmetic toolkit for graded characters of symmetric-group and
//! current-algebra modules.
//!
//! The crate computes Kostka polynomials by three independent routes and
//! cross-checks them:
//!
//! - the hook-product formula for column content `(1^N)` ([`kostka::kostka_hook`]),
//! - the charge statistic on semistandard tableaux ([`kostka::charge_kostka`]),
//! - graded traces on Garsia-Procesi quotient rings ([`gpring::rmu_decompose`]).
//!
//! On top of these sit the graded tensor product (fusion product) of
//! symmetric-power evaluation modules ([`fusion`]), the reduced wedge product
//! ([`wedge`]), and the large-`N` character limits ([`winf`]).  Everything is
//! exact: integer or rational arithmetic throughout, no floating point.

pub mod error;
pub mod fusion;
pub mod gpring;
pub mod kostka;
pub mod multipoly;
pub mod partition;
pub mod qpoly;
pub mod report;
pub mod slice;
pub mod slnmod;
pub mod symgroup;
pub mod tableau;
pub mod verify;
pub mod wedge;
pub mod winf;

pub use error::{Error, Result};
pub use partition::Partition;
pub use qpoly::{q_pochhammer, QPoly, QSeries};
