//! Coherent minimally intersecting filling pairs on closed surfaces, studied
//! through their `[1,1]`-origamis.
//!
//! A pair of simple closed curves `(α, β)` on the genus-`g` surface that
//! intersect coherently and fill with the minimum number of crossings
//! (`2g − 1` for `g ≥ 3`) is the same thing as a square-tiled surface built
//! from `n = 2g − 1` unit squares, glued left-to-right in one horizontal
//! cycle and bottom-to-top along a single vertical `n`-cycle `p`, such that
//! all square corners collapse to one point.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: permutations, cycle notation and difference sequences.
//! - [`origami`]: vertex classes, genus, stratum, the validity test and the
//!   relabelling symmetries used for deduplication.
//! - [`menage`]: ménage permutations, Touchard's count and rotation classes.
//! - [`polygon`]: the `4(2g − 1)`-gon model, the three-step construction of
//!   origamis from ménage classes, and the origami-to-polygon trace.
//! - [`census`]: brute-force and constructive enumeration per genus.
//! - [`bounds`]: exact and asymptotic upper bounds on the class count.
//!
//! Everything here is `no_std` (with `alloc`); IO, parallel orchestration
//! and the command-line surface live in the `origami-census` crate.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod census;
mod error;
pub mod menage;
pub mod origami;
pub mod perm;
pub mod polygon;

pub use error::{Error, Result};
pub use origami::{Origami, SymmetryGroup};
pub use perm::{CycleSeq, DiffSeq, Perm};
