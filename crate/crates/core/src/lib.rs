//! Exact algebraic combinatorics of shifted parking functions.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`):
//!
//! - [`partition`]: partitions, permutations, cycle types and `z_λ`
//! - [`counting`]: Catalan, Schröder, Kreweras and odd Kreweras numbers
//! - [`symfunc`]: symmetric functions in the power-sum basis, shiftification,
//!   the `P`/`V`/`R` families and the expansion into `{V_λ : λ odd}`
//! - [`parking`]: parking functions, naive shifted parking functions and
//!   Schröder paths
//! - [`shifted`]: matching paths, garages and odd shifted parking functions
//! - [`characters`]: class functions, Frobenius and spin characteristics and
//!   brute-force trace oracles
//! - [`clifford`]: the Clifford algebra over `ℚ(i, √2)` and the double-cover
//!   embedding
//!
//! IO, file formats and the command-line driver live in the `shpf` crate.

#![no_std]

extern crate alloc;

pub mod characters;
pub mod clifford;
pub mod counting;
mod error;
pub mod parking;
pub mod partition;
pub mod quadratic;
pub mod shifted;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Partition, PartitionFilter, Permutation};
pub use quadratic::Sqrt2Rational;
pub use symfunc::{SymFunc, TPoly, TSymFunc};

/// Exact rational scalar used for every coefficient.
pub type Rational = num_rational::BigRational;
