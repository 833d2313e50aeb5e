//! Exact algebra support: gaussian rationals, univariate polynomials over Q
//! with real-root isolation, and sparse multivariate polynomials over Q(i).

pub mod gaussian;
pub mod mpoly;
pub mod unipoly;

pub use gaussian::GaussRat;
pub use mpoly::MPoly;
pub use unipoly::UniPoly;
