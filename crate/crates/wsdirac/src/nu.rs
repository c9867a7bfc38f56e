//! Parametric solver for second-order equations of hypergeometric type.
//!
//! The engine handles equations brought to the template form
//!
//! ```text
//! u''(z) + (c1 - c2*z) / (z*(1 - c3*z)) * u'(z)
//!        + (-B1*z^2 + B2*z - B3) / (z*(1 - c3*z))^2 * u(z) = 0,
//! ```
//!
//! deriving the ten working constants `c4..c13`, the key linear polynomials
//! (`pi`, `tau`) and scalar `k`, the quantization residual whose roots pick
//! out polynomial solutions, and the solutions themselves,
//! `u_n(z) = z^{c12} (1 - c3 z)^{c13} P_n^{(c10, c11)}(1 - 2 c3 z)`.
//!
//! The radial problem for the generalized Woods-Saxon well maps onto this
//! template with `c1 = 1`, `c2 = c3 = q` and energy-dependent `B` values;
//! see [`crate::spectra::ws_template`].

use thiserror::Error;

/// Six-coefficient template of the generalized hypergeometric-type equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuTemplate {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

/// The derived constants `c4..c13`, plus the template's `c3` carried along
/// so that downstream evaluation (wavefunction assembly) is self-contained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuConstants {
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
    /// First Jacobi parameter of the polynomial part; must exceed -1.
    pub c10: f64,
    /// Second Jacobi parameter of the polynomial part; must exceed -1.
    pub c11: f64,
    /// Exponent of the `z` boundary factor; positive for bound solutions.
    pub c12: f64,
    /// Exponent of the `(1 - c3 z)` boundary factor; positive for bound
    /// solutions.
    pub c13: f64,
}

/// Errors from template derivation and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NuError {
    /// `c3 = 0` collapses the template (the `(1 - c3 z)` factor degenerates).
    #[error("degenerate template: c3 must be nonzero (got {c3})")]
    DegenerateTemplate { c3: f64 },
    /// `c8 < 0` or `c9 < 0`: the square roots in the constant block are
    /// complex, so no real polynomial solution exists for these values.
    #[error("negative discriminant: c8 = {c8}, c9 = {c9} must both be nonnegative")]
    NegativeDiscriminant { c8: f64, c9: f64 },
    /// Evaluation point outside the template interval `c3*z in [0, 1]`,
    /// or a negative `z` that would make `z^{c12}` complex.
    #[error("evaluation point outside template domain: z = {z}")]
    Domain { z: f64 },
    /// A Jacobi parameter (`c10` or `c11`) is at or below -1.
    #[error("{name} = {value} violates the > -1 Jacobi parameter bound")]
    ParameterOutOfRange { name: &'static str, value: f64 },
}

/// Derives `c4..c13` from a template.
///
/// # Errors
///
/// [`NuError::DegenerateTemplate`] if `c3 = 0`;
/// [`NuError::NegativeDiscriminant`] if `c8 < 0` or `c9 < 0`.
pub fn derive_nu_constants(t: &NuTemplate) -> Result<NuConstants, NuError> {
    if t.c3 == 0.0 {
        return Err(NuError::DegenerateTemplate { c3: t.c3 });
    }
    let c4 = 0.5 * (1.0 - t.c1);
    let c5 = 0.5 * (t.c2 - 2.0 * t.c3);
    let c6 = c5 * c5 + t.b1;
    let c7 = 2.0 * c4 * c5 - t.b2;
    let c8 = c4 * c4 + t.b3;
    let c9 = t.c3 * (c7 + t.c3 * c8) + c6;
    if c8 < 0.0 || c9 < 0.0 {
        return Err(NuError::NegativeDiscriminant { c8, c9 });
    }
    // Principal (nonnegative) square roots throughout.
    let s8 = c8.sqrt();
    let s9 = c9.sqrt();
    let c10 = t.c1 + 2.0 * c4 + 2.0 * s8 - 1.0;
    let c11 = 1.0 - t.c1 - 2.0 * c4 + 2.0 / t.c3 * s9;
    let c12 = c4 + s8;
    let c13 = -c4 + (s9 - c5) / t.c3;
    Ok(NuConstants { c3: t.c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13 })
}

/// Linear key polynomials of the template:
/// `pi(z) = pi_const + pi_slope*z` and `tau(z) = tau_const + tau_slope*z`,
/// plus the scalar `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyPolynomials {
    pub pi_const: f64,
    pub pi_slope: f64,
    pub k_value: f64,
    pub tau_const: f64,
    pub tau_slope: f64,
    /// `tau_slope < 0`, the admissibility condition for a polynomial
    /// eigenfunction family.
    pub slope_admissible: bool,
}

/// Assembles `pi(z)`, `k` and `tau(z)` from derived constants.
pub fn key_polynomials(t: &NuTemplate, k: &NuConstants) -> KeyPolynomials {
    let s8 = k.c8.sqrt();
    let s9 = k.c9.sqrt();
    let pi_const = k.c4 + s8;
    let pi_slope = k.c5 - (s9 + t.c3 * s8);
    let k_value = -(k.c7 + 2.0 * t.c3 * k.c8) - 2.0 * (k.c8 * k.c9).sqrt();
    let tau_const = 1.0 + 2.0 * s8;
    let tau_slope = -(t.c2 - 2.0 * k.c5) - 2.0 * (s9 + t.c3 * s8);
    KeyPolynomials {
        pi_const,
        pi_slope,
        k_value,
        tau_const,
        tau_slope,
        slope_admissible: tau_slope < 0.0,
    }
}

/// Branch-rationalized quantization residual at radial index `n`.
///
/// The quantization condition reads `U + sqrt(c8)*V = 0` with
///
/// ```text
/// U = (c2 - c3)*n + c3*n^2 - (2n+1)*c5 + (2n+1)*sqrt(c9) + c7 + 2*c3*c8,
/// V = (2n+1)*c3 + 2*sqrt(c9),
/// ```
///
/// where `sqrt(c8)` carries the physical root's sign ambiguity. The product
/// of both sign branches, `U^2 - c8*V^2`, is returned: it vanishes exactly
/// at roots of either branch and is polynomial in the embedded energy, which
/// keeps root diagnostics smooth. For `c8 = 0` it reduces to the square of
/// the literal condition.
pub fn nu_energy_residual(t: &NuTemplate, k: &NuConstants, n: u32) -> f64 {
    let nf = f64::from(n);
    let s9 = k.c9.sqrt();
    let u = (t.c2 - t.c3) * nf + t.c3 * nf * nf - (2.0 * nf + 1.0) * k.c5
        + (2.0 * nf + 1.0) * s9
        + k.c7
        + 2.0 * t.c3 * k.c8;
    let v = (2.0 * nf + 1.0) * t.c3 + 2.0 * s9;
    u * u - k.c8 * v * v
}

/// Unnormalized template eigenfunction
/// `u_n(z) = z^{c12} (1 - c3 z)^{c13} P_n^{(c10, c11)}(1 - 2 c3 z)`.
///
/// # Errors
///
/// [`NuError::Domain`] if `c3*z` lies outside `[0, 1]` or `z < 0`;
/// [`NuError::ParameterOutOfRange`] if a Jacobi parameter is at or
/// below -1.
pub fn nu_wavefunction(k: &NuConstants, n: u32, z: f64) -> Result<f64, NuError> {
    let s = k.c3 * z;
    if !(0.0..=1.0).contains(&s) || z < 0.0 {
        return Err(NuError::Domain { z });
    }
    if k.c10 <= -1.0 {
        return Err(NuError::ParameterOutOfRange { name: "c10", value: k.c10 });
    }
    if k.c11 <= -1.0 {
        return Err(NuError::ParameterOutOfRange { name: "c11", value: k.c11 });
    }
    let poly = crate::wavefunctions::jacobi(n, k.c10, k.c11, 1.0 - 2.0 * s)
        .expect("parameter bounds checked above");
    Ok(z.powf(k.c12) * (1.0 - s).powf(k.c13) * poly)
}
