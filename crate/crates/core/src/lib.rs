//! Exact idempotent-product factorization of matrices over commutative rings.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`ring`]: exact arithmetic over the rationals, the integers modulo `n`
//!   and multivariate polynomials over the rationals;
//! * [`matrix`]: dense matrices over one of those rings, together with
//!   elementary, permutation and quasi matrices;
//! * [`factor`]: constructive factorizations of matrices into products of
//!   idempotent matrices, each one certified by exact re-multiplication;
//! * [`oracle`]: brute-force ground truth over small finite matrix rings;
//! * [`tnn`]: exact total-nonnegativity and nonnegative stabilizer checks.

#![no_std]

extern crate alloc;

pub mod error;
pub mod factor;
pub mod matrix;
pub mod oracle;
pub mod ring;
pub mod tnn;

pub use error::{Error, Result};
pub use factor::{Diagnosis, Factorization, Route, RouteTag};
pub use matrix::{Elementary, Matrix, Permutation, QuasiKind};
pub use ring::{Elem, Ring, RingDescriptor, RingElement};
