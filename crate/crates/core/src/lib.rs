//! vstlab: exact algebra for the virtual singular twin monoid `VSTM_n` and
//! group `VST_n`.
//!
//! The crate provides:
//!
//! * exact scalars: arbitrary-precision rationals, Gaussian rationals, and
//!   integer Laurent polynomials ([`ring`]);
//! * dense square matrices over either ring, with exact determinants, rank,
//!   kernels, and the 2-local block embedding ([`linalg`]);
//! * free words over the standard, twin, reduced, and connecting-string
//!   alphabets, with the permutation projection onto `S_n` ([`words`]);
//! * the six presentation catalogs, single-step rewriting, machine-checkable
//!   rewrite traces, and a bounded bidirectional equivalence search
//!   ([`presentations`]);
//! * every homogeneous 2-local representation family of `VST_n`, with
//!   symbolic relation checking and diagonal conjugation ([`reps`]);
//! * exact irreducibility decisions at Gaussian-rational specializations via
//!   the matrix-algebra span test ([`irreducibility`]).
//!
//! All arithmetic is exact; there is no floating point anywhere. With the
//! default `parallel` feature, relation checking, algebra-span closure, and
//! search frontier expansion fan out through rayon; disabling the feature
//! yields an identical sequential build.

pub mod error;
pub mod irreducibility;
pub mod linalg;
mod par;
pub mod presentations;
pub mod reps;
pub mod ring;
pub mod words;

pub use error::{Error, Result};
