//! Exact models of 2-Selmer signature images for number fields of even degree.
//!
//! The crate is organised bottom-up:
//!
//! - [`vector`], [`subspace`], [`space`], [`decompose`]: symmetric bilinear
//!   spaces over F2, canonical vectors, isometry classes and orthogonal
//!   decompositions.
//! - [`enumerate`]: exhaustive enumeration and uniform sampling of maximal
//!   totally isotropic subspaces, with isotropy-rank histograms.
//! - [`distributions`]: q-Pochhammer symbols and the closed-form counts and
//!   isotropy-rank laws.
//! - [`masses`]: splitting symbols, partitions and local mass polynomials.
//! - [`euler`]: truncated Euler products with certified tail bounds.
//! - [`qtype`], [`density`]: Q-imprimitive types, their generating
//!   subspaces, type densities and class-group predictions.

pub mod decompose;
pub mod density;
pub mod distributions;
pub mod enumerate;
pub mod error;
pub mod euler;
mod linalg;
pub mod masses;
pub mod qtype;
pub mod rational;
pub mod space;
pub mod subspace;
pub mod vector;

pub use decompose::{orthogonal_decomposition, BlockKind, Decomposition, Embedded};
pub use density::{
    abcde, class_moments, class_rank_distribution, narrow_avg_2torsion, trivial_type_density,
    type_density_table, Abcde, TypeDensity,
};
pub use distributions::{
    b_count, c_delta, d_count, isotropy_distribution, q_pochhammer, q_pochhammer_limit,
    Distribution,
};
pub use enumerate::{
    enumerate_mti, enumerate_mti_with_cap, rank_histogram, rank_histogram_with_cap,
    sample_uniform_mti, MtiSampler, RankHistogram, DEFAULT_ENUMERATION_CAP,
};
pub use error::{Error, Result};
pub use euler::{Certified, PrimeSet, DEFAULT_PRIME_BOUND};
pub use masses::{MassPoly, Partition, SplittingSymbol};
pub use qtype::{classify_type, sq_basis, QImprimitiveType, SelmerFlags, SqModel, TypeFamily};
pub use space::{BilinearSpace, CanonicalKind, IsometryClass};
pub use subspace::Subspace;
pub use vector::F2Vector;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
