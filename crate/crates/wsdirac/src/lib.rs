//! Bound states of the generalized Woods-Saxon potential.
//!
//! The crate solves the radial Dirac equation (and its Klein-Gordon and
//! Schroedinger limits) for the four-parameter potential
//!
//! ```text
//!             -V0 exp(-(r - R0)/a)
//! V(r) = ------------------------------
//!         1 + q exp(-(r - R0)/a)
//! ```
//!
//! under spin or pseudospin symmetry of the mass/vector couplings. Energies
//! come from a parametric quadratic obtained by mapping the radial equation
//! onto a hypergeometric template; wavefunctions are Jacobi-polynomial
//! expressions in the variable `y = exp(-(r - R0)/a)`.
//!
//! Modules:
//! - [`potential`]: potential evaluation and the Pekeris-style approximation
//!   of the centrifugal term.
//! - [`nu`]: the generic second-order template solver (constants `c4..c13`,
//!   key polynomials, quantization residual, template eigenfunctions).
//! - [`spectra`]: closed-form energy levels for spin / pseudospin / s-wave /
//!   Klein-Gordon / nonrelativistic cases, plus diagnostic flags.
//! - [`wavefunctions`]: Jacobi and terminating-hypergeometric evaluation,
//!   upper/lower spinor components, normalization by quadrature and by series.
//! - [`oracle`]: an independent shooting-method eigensolver used to
//!   cross-check the closed forms, plus a first-order-system residual check.

pub mod nu;
pub mod oracle;
pub mod potential;
pub mod spectra;
pub mod wavefunctions;
