//! Exact arithmetic for the ring of set maps and umbral calculus, with the
//! chromatic polynomial as the main worked example.
//!
//! A *set map* assigns a value to every subset of a small ground set. Subsets
//! are `u32` bit masks and a set map is a dense table indexed by mask. The
//! crate provides:
//!
//! - [`setmap`]: sum, product (disjoint-union convolution), composition with
//!   sequences, multiplicative inverse, and the decomposition lemmas.
//! - [`umbral`]: polynomials over the rationals, linear functionals with the
//!   umbral product, and the binomial-type families used as expansion bases.
//! - [`graph`]: simple graphs, the chromatic polynomial set map, and
//!   brute-force counting oracles.
//! - [`expansions`]: expansion of a binomial-type polynomial set map in any
//!   binomial-type family, plus the chromatic verification suites.
//! - [`abel`]: the Abel polynomial set map and tail-forest counting.
//!
//! Everything is exact; there is no floating point anywhere. The crate is
//! `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abel;
pub mod arith;
mod caps;
mod error;
pub mod expansions;
pub mod graph;
pub mod poly;
pub mod setmap;
pub mod umbral;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::Poly;
pub use setmap::{GroundSet, Mask, RingValue, Sequence, SetMap, SetPartition};
pub use umbral::{BinomialFamily, Functional};

/// The scalar field: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
