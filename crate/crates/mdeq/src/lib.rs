//! Exact q-expansion arithmetic and apparent-singularity analysis for
//! second-order modular differential equations `y''(z) = Q(z) y(z)` on
//! `SL(2,Z)`.
//!
//! The crate is organized around one exact series engine and a family of
//! analyses built on top of it:
//!
//! - [`qseries`]: truncated q-expansions with exact rational coefficients on a
//!   fractional exponent lattice; Eisenstein series, `Delta`, `j`, eta powers,
//!   hauptmoduln, logarithmic derivatives, normalized Schwarz derivatives.
//! - [`nearly`]: nearly holomorphic forms (polynomials in `1/(z - zbar)` with
//!   q-series coefficients) and the weight-raising derivative towers used for
//!   power-series expansions at points in the upper half-plane.
//! - [`cusp`]: Frobenius analysis at the cusp in the variable `q`, including
//!   the obstruction that decides whether the cusp is apparent.
//! - [`elliptic`]: power-series expansions in the disk coordinate
//!   `w = (z - z0)/(z - conj(z0))` at the elliptic points, indicial equations,
//!   and apparentness obstruction polynomials in the free accessory parameter.
//! - [`sphere`]: exact Fuchsian operators on the sphere with movable singular
//!   points, their apparentness polynomials, and small Bezout-style solves.
//! - [`monodromy`]: closed-form unitarizability criteria for rank-two local
//!   systems with three marked angles, and the derived existence tests for
//!   invariant constant-curvature metrics.
//! - [`cover`]: permutation certificates for the branched coverings backing
//!   the existence arguments (cycle types, transitivity, Riemann-Hurwitz).
//! - [`weight_neg2`]: construction of the weight `-2` combination
//!   `F = y_-^2 + c y_+^2` together with its polynomial in `j`.
//! - [`suites`]: end-to-end verification suites wired into the CLI.

pub mod algebra;
pub mod cover;
pub mod cusp;
pub mod elliptic;
pub mod monodromy;
pub mod nearly;
pub mod qseries;
pub mod rational;
pub mod report;
pub mod sphere;
pub mod suites;
pub mod weight_neg2;

pub use qseries::QSeries;
pub use rational::QRat;
