//! Exact computational algebra for zero-dimensional S_n-symmetric ideals in
//! `Q[x1, ..., xn]`.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinat`]: partitions, tableaux, permutations, Kostka numbers, characters.
//! * [`poly`]: sparse exact-rational polynomials, the S_n action, apolarity.
//! * [`specht`]: Vandermonde, Specht and higher Specht polynomials.
//! * [`ideals`]: Groebner bases, normal forms, colength, intersections, `gr`.
//! * [`equivariant`]: isotypic decompositions and equivariant tangent spaces.
//! * [`tanisaki`]: Tanisaki ideals and the Specht-type ideals between them.
//! * [`classification`]: homogeneous symmetric ideals of colength at most `2n`
//!   for `3 <= n <= 5`, with their modules and expected smoothness.

pub mod classification;
pub mod combinat;
pub mod equivariant;
pub mod ideals;
pub mod linalg;
pub mod poly;
pub mod specht;
pub mod tanisaki;

/// Version string embedded in every serialized report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("ideal is not S_n-stable")]
    NotSymmetric,
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
