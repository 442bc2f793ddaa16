//! Exact computation of the characters of the symmetric group `S_n` that
//! depend only on the number of cycles.
//!
//! The crate is organized bottom-up:
//!
//! - [`rational`], [`partition`], [`combinatorics`], [`permutation`],
//!   [`matrix`]: exact arithmetic and enumerative combinatorics.
//! - [`oracle`]: irreducible characters by Murnaghan-Nakayama and
//!   brute-force permutation modules; the independent ground truth.
//! - [`basis`]: the Foulkes characters `phi_i` and the bases `gamma`,
//!   `psi`, `omega` of the class functions depending only on cycle count.
//! - [`lattice`]: the lattices `X < Y < Z`, the parametrization of all
//!   length-dependent characters and the fundamental domain.
//! - [`product`]: products of Foulkes characters and the inner product for
//!   which they are orthonormal.

pub mod basis;
pub mod combinatorics;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod permutation;
pub mod product;
pub mod rational;

pub use error::{Error, Result};
pub use partition::Partition;
pub use rational::Rational;
