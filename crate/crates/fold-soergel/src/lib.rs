//! Exact computer algebra for the `Z/2`-equivariantization of the diagrammatic
//! Hecke category of type A1xA1 (the "folded" category).
//!
//! The crate is `no_std` (it needs `alloc`).  Modules, bottom-up:
//!
//! * [`polyring`] — the polynomial ring `Q[a_s, a_t]`, reflections, `tau`,
//!   Demazure operators, and Laurent polynomials in `v`.
//! * [`bimod`] — Bott-Samelson bimodules as free left modules with a computed
//!   right action; all two-colour generators as exact matrices.
//! * [`equiv`] — equivariant objects and morphisms, the five indecomposables,
//!   induction/restriction, both adjunctions and splittings.
//! * [`foldcat`] — the folded diagram language: generators, expressions, a
//!   parser, the evaluation functor, the relation catalog and idempotent suites.
//! * [`homsolve`] — graded Hom spaces by exact linear algebra.
//! * [`grring`] — the Grothendieck ring and its specializations.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bimod;
pub mod equiv;
pub mod error;
pub mod foldcat;
pub mod grring;
pub mod homsolve;
pub mod linalg;
pub mod polyring;

pub use error::{Error, Result};
