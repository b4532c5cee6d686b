//! Exact combinatorics of category O for the rational Cherednik algebras of the
//! complex reflection groups `G(ℓ,1,n)`.
//!
//! The crate works in the regime where the parameter lies on a single aspherical
//! hyperplane and is otherwise Weil generic. In that regime everything of interest
//! becomes finite combinatorics with exact arithmetic:
//!
//! * [`parameters`] — the scalar field `ℚ + ℚκ + ℚκ⁻¹`, the four parameter systems
//!   `(c0, d)`, `(κ, h)`, `(κ, s)` and the hyperplane form `(i, j, m, t)`, the maps
//!   to quiver-variety parameters, and the Dunkl–Griffeth aspherical test;
//! * [`multipartition`] — ℓ-partitions, boxes, charged contents, c-functions and the
//!   two orders `⪯_c` and `≤_c`;
//! * [`crystal`] — z-classes, signatures, the crystal operators `ẽ_z`, `f̃_z`, depth by
//!   descent and the Fock-space operators `e_z`, `f_z`;
//! * [`supports`] — closed-form depths (support dimensions) and singular families;
//! * [`quiver`] — Tits form, root classification, Crawley-Boevey criteria, slice
//!   quivers and the restricted parameter `λ̂`;
//! * [`ideals`] — chains of two-sided ideals in twisted differential operators on
//!   Grassmannians and in the spherical Cherednik algebra, annihilated simples.
//!
//! The [`cli`] module implements the batch command-line front end used by the
//! `aspherical` binary.

pub mod cli;
pub mod crystal;
pub mod error;
pub mod ideals;
pub mod multipartition;
pub mod parameters;
pub mod quiver;
pub mod rational;
pub mod supports;

pub use error::{Error, Result};
pub use multipartition::{Cell, MultiPartition, Partition};
pub use parameters::{CParams, ExactScalar, HParams, HyperplaneParams, KappaMode, SParams};
