//! Exact enumeration of p-th order Fibonacci cubes and Fibonacci p-cubes.
//!
//! Every closed form here (p-nomial coefficients, weight enumerators, cube
//! and distance cube polynomials, maximal cube counts, generating
//! functions) has a brute-force counterpart built on explicit graphs, so
//! the two can be diffed against each other. The crate is `no_std` and
//! only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod formulas;
pub mod graphs;
pub mod numbers;
pub mod oracle;
pub mod poly;
pub mod series;
pub mod strings;

pub use error::{Error, Result};
pub use graphs::{Family, FamilySpec, Graph};
pub use num_bigint::BigInt;
pub use oracle::InducedHypercube;
pub use poly::{BiPolynomial, IntPolynomial, TPolynomial};
pub use series::{GfName, RationalGF};
pub use strings::BitString;
