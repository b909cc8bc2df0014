//! fusionkit: exact computation with fusion rings and modular data.
//!
//! Everything is exact. Dimensions are certified real algebraic numbers
//! (minimal polynomial plus isolating interval), S- and T-matrix entries are
//! cyclotomic numbers over the rationals, and every equality or integrality
//! test downstream of those types is decided, never approximated.
//!
//! The crate is organized around the data it computes with:
//!
//! * [`exact`] — algebraic reals, cyclotomic numbers, and the generic
//!   polynomial/matrix machinery underneath them;
//! * [`group`] — finite groups as multiplication tables;
//! * [`ring`] — fusion rings, axiom validation, dimensions, type signatures;
//! * [`structure`] — subrings, gradings, orbits, nilpotency, products,
//!   and factorizations;
//! * [`constructors`] — group rings, Tambara-Yamagami and Ising rings, and
//!   recognizers for their generalizations;
//! * [`modular`] — (S, T) data, Verlinde consistency, centralizers, metric
//!   groups;
//! * [`classify`] — enumeration-driven verification of the structure theorems
//!   and the classification of modular data of dimension q^3;
//! * [`io`] — the versioned JSON file format used by the CLI.

pub mod classify;
pub mod constructors;
pub mod corpus;
pub mod exact;
pub mod group;
pub mod io;
pub mod modular;
pub mod ring;
pub mod structure;

use thiserror::Error as ThisError;

/// Concrete scalar instantiations of the generic core.
pub type IntPoly = exact::Polynomial<num_bigint::BigInt>;
pub type RatPoly = exact::Polynomial<num_rational::BigRational>;
pub type IntMatrix = exact::Matrix<num_bigint::BigInt>;
pub type RatMatrix = exact::Matrix<num_rational::BigRational>;

pub use exact::{AlgebraicReal, Cyclotomic};
pub use group::FiniteGroup;
pub use ring::{AxiomViolation, FusionRing, Integrality, TypeSignature};
pub use structure::{Grading, OrbitData, Subring};

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("the group must be abelian")]
    NonAbelianGroup,
    #[error("degenerate metric group")]
    DegenerateMetricGroup,
    #[error("inconsistent grading: {0}")]
    InconsistentGrading(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
