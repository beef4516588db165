//! Exact computations for Iwahori-Hecke algebras of type A at roots of unity.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`arith`]: rationals, univariate rational functions with factored
//!   denominators, cyclotomic numbers and Laurent polynomials.
//! * [`tableaux`]: partitions, standard (skew) tableaux, rim hooks and cores.
//! * [`hecke`]: the generic Hecke algebra in the `T_w` basis, the seminormal
//!   representation, Murphy elements, permutation and tensor modules, and
//!   Specht-module Gram ranks.
//! * [`idempotents`]: Lagrange eigenprojections, path and orbit idempotents,
//!   evaluability certificates and rank vectors.
//! * [`alcove`]: dot action, blocks, critical points, path orbits and the
//!   reduced-path bounds on decomposition numbers.
//! * [`diamond`]: straight and special skew tableaux, big diamond elements and
//!   the embedding of the k-row quotient of `H_m(x^l)`.
//! * [`llt`]: canonical bases of the level-one Fock space, used as the
//!   decomposition-number oracle.

#![no_std]

extern crate alloc;

pub mod alcove;
pub mod arith;
pub mod diamond;
pub mod error;
pub mod hecke;
pub mod idempotents;
pub mod llt;
pub mod tableaux;

pub use error::{Error, Result};
