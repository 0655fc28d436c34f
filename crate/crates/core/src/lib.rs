//! Numerical semigroup rings, radical chains, and the homological algebra of
//! their endomorphism orders.
//!
//! The pipeline: build a numerical semigroup, grow a radical chain above it
//! (lazily, greedily, or by hand), assemble the endomorphism order of the
//! chain as a grid of fractional ideals, then resolve the simple modules of
//! the order by iterated projective covers and syzygy kernels. Projective and
//! global dimensions fall out of the resolutions, and every resolution comes
//! with exactness and minimality certificates computed by exact linear
//! algebra over a truncated degree window.
//!
//! All arithmetic is exact: value sets are bit tables with symbolic tails,
//! coefficients live in ℚ by default (a prime-field mode exists for speed
//! cross-checks), and nothing is ever rounded.

pub mod chain;
pub mod homology;
pub mod ideal;
pub mod order;
pub mod semigroup;
pub mod valueset;

pub use chain::{greedy_chain, lazy_chain, validate_chain, ChainError, ChainKind, RadicalChain};
pub use ideal::{colon, scaled_ideal_identity_check, IdealError, RelativeIdeal};
pub use order::{build_order, EndomorphismOrder, ProjectiveDescriptor, SimpleDescriptor};
pub use semigroup::{family_ring, NumericalSemigroup, SemigroupError};
pub use valueset::ValueSet;
