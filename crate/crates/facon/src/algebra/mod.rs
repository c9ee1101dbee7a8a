//! Exact arithmetic kernel.
//!
//! Sparse multivariate polynomials over arbitrary-precision rationals,
//! Laurent polynomials in a distinguished curve parameter `u`, and exact
//! linear algebra (fraction-free rank, rational nullspaces). Everything here
//! is exact; no floating point.

mod laurent;
mod linalg;
mod poly;

pub use laurent::ULaurentPoly;
pub use linalg::{nullspace, primitive_vector, rank_exact};
pub use poly::{Monomial, MultiPoly, VarSpace};

/// Arbitrary-precision rational number. Always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by the kernel on contract violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Binary operation on polynomials living in different variable spaces.
    SpaceMismatch(VarSpace, VarSpace),
    /// Evaluation point does not cover every variable of the polynomial.
    PointLength { needed: usize, got: usize },
    /// `primitive_vector` of the zero vector.
    ZeroVector,
}

impl std::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraError::SpaceMismatch(a, b) => {
                write!(f, "polynomials live in different spaces: {a:?} vs {b:?}")
            }
            AlgebraError::PointLength { needed, got } => {
                write!(f, "evaluation point of length {got} but variable index {needed} is used")
            }
            AlgebraError::ZeroVector => write!(f, "primitive vector of the zero vector"),
        }
    }
}

impl std::error::Error for AlgebraError {}
