//! Exact arithmetic: ℚ(i) scalars, polynomials, truncated series, z-expansions,
//! rational functions and dense linear algebra.

pub mod expr;
pub mod fit;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod ratfunc;
pub mod rfmatrix;
pub mod scalar;
pub mod series;
pub mod zexp;

pub use expr::{parse_poly, parse_rational};
pub use fit::rational_from_series;
pub use linalg::{Matrix, Subspace, Vector};
pub use monomial::MultiIndex;
pub use poly::Poly;
pub use ratfunc::{RationalFunction, ResidueConvention};
pub use rfmatrix::{RfMatrix, RfVector};
pub use scalar::Scalar;
pub use series::{series_mul, Coeff, TruncatedSeries, Truncation};
pub use zexp::ZExpansion;
