//! Exact-arithmetic construction and verification of three polynomial
//! families on [-1, 1]:
//!
//! * Legendre polynomials `L_n`, built by the three-term recurrence
//!   `(n+1) L_{n+1} = (2n+1) x L_n - n L_{n-1}`;
//! * PIPCIR polynomials `Q_n = -int_x^1 L_{n-1}(t) dt` (polynomials whose
//!   inflection points coincide with their interior roots), orthogonal under
//!   the weight `1/(1-x^2)`;
//! * polar Legendre polynomials `P_n` with `(n+1) Q_{n+1}(x) = (x-1) P_n(x)`,
//!   orthogonal under the weight `(1-x)/(1+x)`.
//!
//! All core computation is exact over `BigRational`: inner products under the
//! singular weights are reduced to polynomial integrals by exact division,
//! root counts come from Sturm sequences, and the extremal problem
//! `min ||f||^2` subject to `f(1) = 1` is solved in closed form and
//! cross-checked by an exact Lagrange solve. Floating point appears only in
//! the quadrature backends (Gauss-Legendre and tanh-sinh in arbitrary
//! precision), which numerically confirm identities whose exact value is
//! already known.
//!
//! The `claims` module audits a registry of stated identities about these
//! families against ground truth computed independently, and renders a
//! machine-readable PASS/FAIL report.

pub mod claims;
pub mod cli;
pub mod composed;
pub mod extremal;
pub mod families;
pub mod kernels;
pub mod numeric;
pub mod poly;
pub mod quadrature;
pub mod weighted_ip;

pub use num::bigint::BigInt;
pub use num::rational::BigRational;

/// Dense polynomial over the exact rational scalar field.
pub type Polynomial = poly::Polynomial<BigRational>;

/// Interval with exact rational endpoints.
pub type Interval = poly::Interval<BigRational>;
