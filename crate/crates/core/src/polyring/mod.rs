//! Exact integer polynomials and polynomial matrices.

mod matrix;
mod poly;

pub use matrix::{MatrixError, PolyMatrix};
pub use poly::{IntPolynomial, PolyParseError};
