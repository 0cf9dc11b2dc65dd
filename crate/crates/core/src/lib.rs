//! Exact root enumerators, higher Lie characters and irreducible character
//! tables for the hyperoctahedral groups `B_n`, their index-2 subgroups
//! (`D_n`, `Z₂ ≀ A(S_n)`, `A(B_n)`) and the symmetric groups `S_n`.
//!
//! Everything here is pure computation over exact integers and rationals;
//! the only floating-point path is the brute-force evaluation of induced
//! characters in [`hlc`], which rounds with an explicit tolerance check and
//! is always cross-checked against the exact generating-function route.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod chartables;
pub mod classfn;
pub mod combinatorics;
pub mod error;
pub mod group;
pub mod hlc;
pub mod rootcount;
pub mod series;

pub use bounds::Bounds;
pub use classfn::{ClassFunction, GroupTag};
pub use combinatorics::{Bipartition, Partition, Sign};
pub use error::{Error, Result};
pub use group::{SignedPermutation, Subgroup};
pub use rootcount::Twist;
