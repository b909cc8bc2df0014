//! Exact arithmetic: generic polynomials and matrices over any scalar,
//! certified real algebraic numbers, and cyclotomic numbers.

mod algebraic;
mod cyclotomic;
mod factor;
mod matrix;
mod poly;

pub use algebraic::AlgebraicReal;
pub use cyclotomic::Cyclotomic;
pub use factor::{distinct_factors, factor, is_irreducible};
pub use matrix::{rank_field, solve_rational, Matrix};
pub use poly::{interpolate, Polynomial};
pub(crate) use cyclotomic::{cyclotomic_poly_sparse, euler_phi, raw as raw_cyclotomic};
