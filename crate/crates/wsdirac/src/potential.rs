//! Generalized Woods-Saxon potential and the Pekeris-style centrifugal
//! approximation.
//!
//! The well is
//!
//! ```text
//! V(r) = -V0 * y / (1 + q*y),    y = exp(-(r - R0)/a),
//! ```
//!
//! with depth `V0`, deformation `q != 0`, surface thickness `a > 0` and
//! radius `R0 >= 0`. For `q < 0` the denominator vanishes at
//! `r = R0 + a*ln(-q)`, which is a genuine pole of the potential; all
//! evaluation guards against it.
//!
//! The centrifugal term `1/r^2 = (1+x)^{-2}/R0^2` (with `x = (r-R0)/R0`) is
//! approximated by a quadratic in the shape function
//! `g(x) = -exp(-a*x*R0/a)/(1 + q*exp(..))`; two coefficient sets are
//! provided: a fixed closed-form variant ([`pekeris_paper`]) kept for
//! reproducing historical tabulations, and the Taylor-matching derivation
//! ([`pekeris_taylor`]) that makes the approximant tangent to second order
//! at `x = 0`. The Taylor set is the default everywhere else in the crate.

use thiserror::Error;

/// Tolerance used to detect the `1 + q*y = 0` pole of the potential.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Parameters of the generalized Woods-Saxon well plus the unit scale.
///
/// Energies are measured in the same unit as `v0` and `hbar_c / length`;
/// with `hbar_c = 1` (the default) lengths are inverse energies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    /// Well depth `V0` (energy). Sign unrestricted.
    pub v0: f64,
    /// Dimensionless deformation parameter `q`. Must be nonzero.
    pub q: f64,
    /// Surface thickness `a` (length). Must be positive.
    pub a: f64,
    /// Well radius `R0` (length). Must be nonnegative.
    pub r0: f64,
    /// Unit scale `hbar*c` (energy times length). Defaults to 1.
    pub hbar_c: f64,
}

/// Errors raised by potential evaluation and the Pekeris machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PotentialError {
    /// Surface thickness `a` must be positive and finite.
    #[error("a = {0}: surface thickness must be positive and finite")]
    BadThickness(f64),
    /// Well radius `R0` must be nonnegative and finite.
    #[error("R0 = {0}: well radius must be nonnegative and finite")]
    BadRadius(f64),
    /// Deformation `q` must be nonzero and finite.
    #[error("q = {0}: deformation parameter must be nonzero and finite")]
    BadShape(f64),
    /// Depth `V0` must be finite.
    #[error("V0 = {0}: well depth must be finite")]
    BadDepth(f64),
    /// Unit scale `hbar_c` must be positive and finite.
    #[error("hbar_c = {0}: unit scale must be positive and finite")]
    BadUnitScale(f64),
    /// The denominator `1 + q*y` vanished within [`POLE_TOLERANCE`].
    #[error("potential pole at r = {r}: 1 + q*exp(-(r-R0)/a) vanishes")]
    Pole { r: f64 },
    /// Taylor matching is impossible at `q = -1`: the expansion point
    /// `x = 0` sits exactly on the pole of the shape function.
    #[error("Taylor matching system is singular at q = -1")]
    SingularSystem,
    /// A requested interval touches the centrifugal singularity at `x = -1`.
    #[error("interval touches the coordinate singularity at x = -1 (got {x})")]
    Domain { x: f64 },
}

impl PotentialParams {
    /// Builds a parameter set in natural units (`hbar_c = 1`), validating
    /// every field.
    pub fn new(v0: f64, q: f64, a: f64, r0: f64) -> Result<Self, PotentialError> {
        Self::with_hbar_c(v0, q, a, r0, 1.0)
    }

    /// Builds a parameter set with an explicit `hbar*c` unit scale.
    pub fn with_hbar_c(
        v0: f64,
        q: f64,
        a: f64,
        r0: f64,
        hbar_c: f64,
    ) -> Result<Self, PotentialError> {
        let p = Self { v0, q, a, r0, hbar_c };
        p.validate()?;
        Ok(p)
    }

    /// Checks all field invariants.
    pub fn validate(&self) -> Result<(), PotentialError> {
        if !(self.a > 0.0) || !self.a.is_finite() {
            return Err(PotentialError::BadThickness(self.a));
        }
        if !(self.r0 >= 0.0) || !self.r0.is_finite() {
            return Err(PotentialError::BadRadius(self.r0));
        }
        if self.q == 0.0 || !self.q.is_finite() {
            return Err(PotentialError::BadShape(self.q));
        }
        if !self.v0.is_finite() {
            return Err(PotentialError::BadDepth(self.v0));
        }
        if !(self.hbar_c > 0.0) || !self.hbar_c.is_finite() {
            return Err(PotentialError::BadUnitScale(self.hbar_c));
        }
        Ok(())
    }

    /// Dimensionless steepness `alpha = R0 / a`.
    pub fn alpha(&self) -> f64 {
        self.r0 / self.a
    }

    /// The decay variable `y = exp(-(r - R0)/a)`.
    pub fn decay_variable(&self, r: f64) -> f64 {
        ((self.r0 - r) / self.a).exp()
    }

    /// Radius at which `1 + q*y` vanishes, when one exists (`q < 0`).
    ///
    /// The returned radius may be negative (off the physical half-line)
    /// when `|q| * exp(R0/a) < 1`.
    pub fn pole_radius(&self) -> Option<f64> {
        if self.q < 0.0 {
            Some(self.r0 + self.a * (-self.q).ln())
        } else {
            None
        }
    }

    /// Pole radius restricted to the physical half-line `r > 0`.
    pub fn pole_on_half_line(&self) -> Option<f64> {
        self.pole_radius().filter(|&r| r > 0.0)
    }
}

/// Evaluates `V(r) = -V0*y/(1+q*y)` at radius `r`.
///
/// # Errors
///
/// [`PotentialError::Pole`] when `|1 + q*y| < POLE_TOLERANCE` (possible only
/// for `q < 0`).
pub fn eval_gws(p: &PotentialParams, r: f64) -> Result<f64, PotentialError> {
    let y = p.decay_variable(r);
    if y.is_infinite() {
        // Deep below the surface the ratio y/(1+q*y) saturates at 1/q.
        return Ok(-p.v0 / p.q);
    }
    let den = 1.0 + p.q * y;
    if den.abs() < POLE_TOLERANCE {
        return Err(PotentialError::Pole { r });
    }
    Ok(-p.v0 * y / den)
}

/// The shape function `g(x) = -exp(-alpha*x) / (1 + q*exp(-alpha*x))` with
/// `x = (r - R0)/R0`, the expansion variable of the centrifugal
/// approximation.
///
/// # Errors
///
/// [`PotentialError::Pole`] when the denominator vanishes (maps the pole
/// radius into `x`).
pub fn shape_g(p: &PotentialParams, x: f64) -> Result<f64, PotentialError> {
    let e = (-p.alpha() * x).exp();
    if e.is_infinite() {
        return Ok(-1.0 / p.q);
    }
    let den = 1.0 + p.q * e;
    if den.abs() < POLE_TOLERANCE {
        return Err(PotentialError::Pole { r: p.r0 * (1.0 + x) });
    }
    Ok(-e / den)
}

/// Origin of a Pekeris coefficient set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PekerisSource {
    /// Fixed closed-form expressions, retained verbatim for reproducing
    /// historical tabulations. Known to be internally degenerate in its
    /// linear coefficient; see [`PekerisDiscrepancy`].
    PaperFormula,
    /// Coefficients from matching value, first and second derivative of
    /// `(1+x)^{-2}` at `x = 0`. Default.
    TaylorMatched,
}

/// Quadratic-in-`g` approximation coefficients for the centrifugal term:
/// `(1+x)^{-2} ~ D0 + D1*g(x) + D2*g(x)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PekerisCoefficients {
    pub d0: f64,
    pub d1: f64,
    pub d2: f64,
    pub source: PekerisSource,
}

/// Sup-norm report of the centrifugal approximation error on an interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentrifugalErrorReport {
    /// `sup |approx - exact| / exact` over the evaluation grid.
    pub sup_rel_error: f64,
    /// Grid point achieving the supremum (first one on ties).
    pub argmax_x: f64,
}

/// Side-by-side comparison of the two coefficient derivations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PekerisDiscrepancy {
    /// `sup |approx_fixed - approx_taylor| / exact` over the grid.
    pub max_rel_diff: f64,
    /// Grid point achieving the supremum.
    pub argmax_x: f64,
    /// Coefficient-wise differences `(fixed - taylor)` for `(D0, D1, D2)`.
    pub delta_d: [f64; 3],
    /// The fixed closed form for `D1` repeats one bracket factor in both of
    /// its terms, so they collapse to a single `-alpha * bracket` multiple;
    /// this structural degeneracy is why the Taylor set is the default.
    pub paper_d1_collapsed: bool,
}

/// Fixed closed-form coefficient set.
///
/// The exponent arguments are read as `alpha = R0/a` throughout (the
/// dimensionally consistent choice). `D1` is evaluated with its two printed
/// bracket terms coded separately even though they collapse; see
/// [`PekerisDiscrepancy::paper_d1_collapsed`].
pub fn pekeris_paper(p: &PotentialParams) -> PekerisCoefficients {
    let alpha = p.alpha();
    let em = (-alpha).exp();
    let ep = alpha.exp();
    // t is the bracket factor (1 + e^{-alpha})/alpha shared by all three
    // coefficients.
    let t = (1.0 + em) / alpha;
    let d0 = 1.0 - t * t * (4.0 * alpha / (1.0 + em) - 3.0 - alpha);
    let d1 = 2.0 * (ep + 1.0) * (3.0 * t - (3.0 + alpha) * t);
    let d2 = (ep + 1.0) * (ep + 1.0) * t * t * (3.0 + alpha - 2.0 * alpha / (1.0 + em));
    PekerisCoefficients { d0, d1, d2, source: PekerisSource::PaperFormula }
}

/// Derivatives of the shape function at `x = 0`: `(g(0), g'(0), g''(0))`.
fn shape_g_derivatives(p: &PotentialParams) -> (f64, f64, f64) {
    let alpha = p.alpha();
    let s = 1.0 + p.q;
    let g0 = -1.0 / s;
    let g1 = alpha / (s * s);
    let g2 = -alpha * alpha * (1.0 - p.q) / (s * s * s);
    (g0, g1, g2)
}

/// Taylor-matched coefficient set: the unique `(D0, D1, D2)` making
/// `D0 + D1*g + D2*g^2` agree with `(1+x)^{-2}` in value, first and second
/// derivative at `x = 0`.
///
/// # Errors
///
/// [`PotentialError::SingularSystem`] at `q = -1`, where `g(0)` diverges.
pub fn pekeris_taylor(p: &PotentialParams) -> Result<PekerisCoefficients, PotentialError> {
    if (1.0 + p.q).abs() < POLE_TOLERANCE {
        return Err(PotentialError::SingularSystem);
    }
    let (g0, g1, g2) = shape_g_derivatives(p);
    // Targets: (1+x)^{-2} has value 1, slope -2 and curvature 6 at x = 0.
    let d2 = (3.0 + g2 / g1) / (g1 * g1);
    let d1 = -2.0 / g1 - 2.0 * g0 * d2;
    let d0 = 1.0 - d1 * g0 - d2 * g0 * g0;
    Ok(PekerisCoefficients { d0, d1, d2, source: PekerisSource::TaylorMatched })
}

/// Residuals of the three matching equations for a coefficient set:
/// value, slope and curvature of the approximant minus the targets
/// `(1, -2, 6)` at `x = 0`. Taylor-matched sets satisfy all three to
/// `1e-12`.
pub fn matching_residuals(
    p: &PotentialParams,
    d: &PekerisCoefficients,
) -> Result<[f64; 3], PotentialError> {
    if (1.0 + p.q).abs() < POLE_TOLERANCE {
        return Err(PotentialError::SingularSystem);
    }
    let (g0, g1, g2) = shape_g_derivatives(p);
    Ok([
        d.d0 + d.d1 * g0 + d.d2 * g0 * g0 - 1.0,
        d.d1 * g1 + 2.0 * d.d2 * g0 * g1 + 2.0,
        d.d1 * g2 + 2.0 * d.d2 * (g1 * g1 + g0 * g2) - 6.0,
    ])
}

/// Number of grid points used by [`centrifugal_error`] and
/// [`pekeris_discrepancy`]. Uniform grid, endpoints included.
pub const ERROR_GRID_POINTS: usize = 2001;

fn check_x_interval(x_lo: f64, x_hi: f64) -> Result<(), PotentialError> {
    if !(x_lo > -1.0) {
        return Err(PotentialError::Domain { x: x_lo });
    }
    if !(x_lo < x_hi) {
        return Err(PotentialError::Domain { x: x_hi });
    }
    Ok(())
}

/// Supremum of the relative centrifugal approximation error over a uniform
/// grid on `[x_lo, x_hi]`.
///
/// # Errors
///
/// [`PotentialError::Domain`] if the interval touches `x = -1`;
/// [`PotentialError::Pole`] if the shape function has a pole inside the
/// interval (`q < 0` with the pole radius in range).
pub fn centrifugal_error(
    p: &PotentialParams,
    d: &PekerisCoefficients,
    x_lo: f64,
    x_hi: f64,
) -> Result<CentrifugalErrorReport, PotentialError> {
    check_x_interval(x_lo, x_hi)?;
    let mut sup = f64::NEG_INFINITY;
    let mut argmax = x_lo;
    for i in 0..ERROR_GRID_POINTS {
        let x = x_lo + (x_hi - x_lo) * (i as f64) / ((ERROR_GRID_POINTS - 1) as f64);
        let g = shape_g(p, x)?;
        let approx = d.d0 + d.d1 * g + d.d2 * g * g;
        let exact = (1.0 + x).powi(-2);
        let rel = (approx - exact).abs() / exact;
        if rel > sup {
            sup = rel;
            argmax = x;
        }
    }
    Ok(CentrifugalErrorReport { sup_rel_error: sup, argmax_x: argmax })
}

/// Compares the fixed closed-form coefficients against the Taylor-matched
/// set on a uniform grid, for the `pekeris` report.
///
/// # Errors
///
/// Propagates [`pekeris_taylor`] and grid-domain errors.
pub fn pekeris_discrepancy(
    p: &PotentialParams,
    x_lo: f64,
    x_hi: f64,
) -> Result<PekerisDiscrepancy, PotentialError> {
    check_x_interval(x_lo, x_hi)?;
    let dp = pekeris_paper(p);
    let dt = pekeris_taylor(p)?;
    let mut sup = f64::NEG_INFINITY;
    let mut argmax = x_lo;
    for i in 0..ERROR_GRID_POINTS {
        let x = x_lo + (x_hi - x_lo) * (i as f64) / ((ERROR_GRID_POINTS - 1) as f64);
        let g = shape_g(p, x)?;
        let hp = dp.d0 + dp.d1 * g + dp.d2 * g * g;
        let ht = dt.d0 + dt.d1 * g + dt.d2 * g * g;
        let exact = (1.0 + x).powi(-2);
        let rel = (hp - ht).abs() / exact;
        if rel > sup {
            sup = rel;
            argmax = x;
        }
    }
    Ok(PekerisDiscrepancy {
        max_rel_diff: sup,
        argmax_x: argmax,
        delta_d: [dp.d0 - dt.d0, dp.d1 - dt.d1, dp.d2 - dt.d2],
        paper_d1_collapsed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn table2(q: f64) -> PotentialParams {
        PotentialParams::new(2.2, q, 1.425, 14.25).unwrap()
    }

    #[test]
    fn validation_rejects_bad_fields() {
        assert_eq!(
            PotentialParams::new(2.2, 1.0, 0.0, 14.25),
            Err(PotentialError::BadThickness(0.0))
        );
        assert_eq!(
            PotentialParams::new(2.2, 1.0, 1.425, -1.0),
            Err(PotentialError::BadRadius(-1.0))
        );
        assert_eq!(PotentialParams::new(2.2, 0.0, 1.425, 14.25), Err(PotentialError::BadShape(0.0)));
        assert!(matches!(
            PotentialParams::new(f64::NAN, 1.0, 1.425, 14.25),
            Err(PotentialError::BadDepth(_))
        ));
        assert_eq!(
            PotentialParams::with_hbar_c(2.2, 1.0, 1.425, 14.25, 0.0),
            Err(PotentialError::BadUnitScale(0.0))
        );
    }

    #[test]
    fn midpoint_value_is_half_depth_ratio() {
        let p = table2(1.0);
        assert_relative_eq!(eval_gws(&p, p.r0).unwrap(), -1.1, max_relative = 1e-15);
    }

    #[test]
    fn decays_to_zero_at_large_radius() {
        let p = table2(1.0);
        assert!(eval_gws(&p, p.r0 + 200.0 * p.a).unwrap().abs() < 1e-80);
    }

    #[test]
    fn origin_value_matches_reference() {
        // V0=2.2, q=1, a=1.425, R0=10a, r=0; reference from extended
        // precision arithmetic.
        let p = PotentialParams::new(2.2, 1.0, 1.425, 14.25).unwrap();
        assert_relative_eq!(
            eval_gws(&p, 0.0).unwrap(),
            -2.1999001246888546443,
            max_relative = 1e-15
        );
    }

    #[test]
    fn pole_detection_and_location() {
        let p = table2(-1.0);
        assert_eq!(p.pole_radius(), Some(p.r0));
        assert_eq!(eval_gws(&p, p.r0), Err(PotentialError::Pole { r: p.r0 }));
        assert!(eval_gws(&p, p.r0 + 1e-3).unwrap().is_finite());

        let p2 = table2(-2.0);
        let rp = p2.pole_radius().unwrap();
        assert_relative_eq!(rp, p2.r0 + p2.a * 2f64.ln(), max_relative = 1e-15);
        assert!(table2(1.0).pole_radius().is_none());
    }

    #[test]
    fn deep_interior_saturates() {
        // Huge alpha forces y to overflow; the ratio must saturate at -V0/q.
        let p = PotentialParams::new(2.2, 2.0, 1e-3, 10.0).unwrap();
        assert_relative_eq!(eval_gws(&p, 0.0).unwrap(), -1.1, max_relative = 1e-12);
    }

    #[test]
    fn shape_function_at_origin() {
        let p = table2(1.0);
        assert_relative_eq!(shape_g(&p, 0.0).unwrap(), -0.5, max_relative = 1e-15);
        let p2 = table2(3.0);
        assert_relative_eq!(shape_g(&p2, 0.0).unwrap(), -0.25, max_relative = 1e-15);
    }

    #[test]
    fn taylor_coefficients_exact_cases() {
        // q=1, alpha=5: exact rationals (0.68, 0.32, 1.92).
        let p = PotentialParams::new(2.2, 1.0, 1.0, 5.0).unwrap();
        let d = pekeris_taylor(&p).unwrap();
        assert_relative_eq!(d.d0, 0.68, max_relative = 1e-14);
        assert_relative_eq!(d.d1, 0.32, max_relative = 1e-14);
        assert_relative_eq!(d.d2, 1.92, max_relative = 1e-14);

        // q=-2, alpha=10: exact rationals (1.53, -0.86, 0.33).
        let p = PotentialParams::new(2.2, -2.0, 1.0, 10.0).unwrap();
        let d = pekeris_taylor(&p).unwrap();
        assert_relative_eq!(d.d0, 1.53, max_relative = 1e-14);
        assert_relative_eq!(d.d1, -0.86, max_relative = 1e-14);
        assert_relative_eq!(d.d2, 0.33, max_relative = 1e-14);

        // q=1, alpha=10.
        let p = PotentialParams::new(2.2, 1.0, 1.0, 10.0).unwrap();
        let d = pekeris_taylor(&p).unwrap();
        assert_relative_eq!(d.d0, 0.72, max_relative = 1e-14);
        assert_relative_eq!(d.d1, -0.32, max_relative = 1e-14);
        assert_relative_eq!(d.d2, 0.48, max_relative = 1e-14);
    }

    #[test]
    fn taylor_rejects_singular_shape() {
        let p = table2(-1.0);
        assert_eq!(pekeris_taylor(&p), Err(PotentialError::SingularSystem));
    }

    #[test]
    fn taylor_satisfies_matching_system() {
        for &(q, alpha) in &[(1.0, 5.0), (2.0, 7.5), (-2.0, 10.0), (0.5, 3.0), (-3.0, 8.0)] {
            let p = PotentialParams::new(2.2, q, 1.0, alpha).unwrap();
            let d = pekeris_taylor(&p).unwrap();
            for r in matching_residuals(&p, &d).unwrap() {
                assert!(r.abs() <= 1e-12, "residual {r} too large for q={q}, alpha={alpha}");
            }
        }
    }

    #[test]
    fn fixed_formula_reference_values() {
        // a=0.65, R0=1.285 (alpha = 1.97692...); reference values from
        // extended-precision evaluation of the fixed closed forms.
        let p = PotentialParams::new(2.2, 1.0, 0.65, 1.285).unwrap();
        let d = pekeris_paper(&p);
        assert_relative_eq!(d.d0, 0.34703694909443029363, max_relative = 1e-13);
        assert_relative_eq!(d.d1, -18.717973184305653382, max_relative = 1e-13);
        assert_relative_eq!(d.d2, 33.708603793243466688, max_relative = 1e-13);
        assert_eq!(d.source, PekerisSource::PaperFormula);
    }

    #[test]
    fn fixed_formula_d1_collapses() {
        // The two bracket terms of the fixed D1 differ only by their scalar
        // prefactors, so D1 = -2*(e^alpha + 1)*(1 + e^-alpha) exactly.
        let p = PotentialParams::new(2.2, 1.0, 0.65, 1.285).unwrap();
        let d = pekeris_paper(&p);
        let alpha = p.alpha();
        let collapsed = -2.0 * (alpha.exp() + 1.0) * (1.0 + (-alpha).exp());
        assert_relative_eq!(d.d1, collapsed, max_relative = 1e-14);
    }

    #[test]
    fn tiny_interval_error_reflects_tangency() {
        let p = PotentialParams::new(2.2, 1.0, 1.0, 5.0).unwrap();
        let d = pekeris_taylor(&p).unwrap();
        let rep = centrifugal_error(&p, &d, -1e-6, 1e-6).unwrap();
        assert!(rep.sup_rel_error < 1e-10, "sup = {}", rep.sup_rel_error);
    }

    #[test]
    fn moderate_interval_error_grows_with_alpha() {
        // Sharp wells strain the three-term replacement: the supremum of
        // the relative error on x in [-0.2, 0.2] rises with alpha and is
        // attained at the right endpoint.
        let p2 = PotentialParams::new(2.2, 1.0, 1.0, 2.0).unwrap();
        let d2 = pekeris_taylor(&p2).unwrap();
        let rep2 = centrifugal_error(&p2, &d2, -0.2, 0.2).unwrap();
        assert!(rep2.sup_rel_error < 0.05, "sup = {}", rep2.sup_rel_error);
        assert_relative_eq!(rep2.sup_rel_error, 0.0399, max_relative = 2e-2);
        assert_relative_eq!(rep2.argmax_x, 0.2, max_relative = 1e-12);

        let p5 = PotentialParams::new(2.2, 1.0, 1.0, 5.0).unwrap();
        let d5 = pekeris_taylor(&p5).unwrap();
        let rep5 = centrifugal_error(&p5, &d5, -0.2, 0.2).unwrap();
        assert_relative_eq!(rep5.sup_rel_error, 0.0578, max_relative = 2e-2);
        assert!(rep5.sup_rel_error > rep2.sup_rel_error);
        // At alpha = 5 the worst point flips to the left endpoint.
        assert_relative_eq!(rep5.argmax_x, -0.2, max_relative = 1e-12);
    }

    #[test]
    fn interval_touching_singularity_rejected() {
        let p = PotentialParams::new(2.2, 1.0, 1.0, 5.0).unwrap();
        let d = pekeris_taylor(&p).unwrap();
        assert!(matches!(
            centrifugal_error(&p, &d, -1.0, 0.2),
            Err(PotentialError::Domain { .. })
        ));
        assert!(matches!(
            centrifugal_error(&p, &d, 0.2, 0.2),
            Err(PotentialError::Domain { .. })
        ));
    }

    #[test]
    fn discrepancy_report_flags_collapse() {
        let p = PotentialParams::new(2.2, 1.0, 1.425, 14.25).unwrap();
        let rep = pekeris_discrepancy(&p, -0.2, 0.2).unwrap();
        assert!(rep.paper_d1_collapsed);
        assert!(rep.max_rel_diff.is_finite() && rep.max_rel_diff > 0.0);
        for delta in rep.delta_d {
            assert!(delta.is_finite());
        }
    }

    #[test]
    fn rescaled_form_is_identical() {
        // V0' = V0*e^{R0/a}, q' = q*e^{R0/a}, R0' = 0 reproduces the same
        // potential pointwise.
        let p = table2(2.0);
        let s = (p.r0 / p.a).exp();
        let p2 = PotentialParams::new(p.v0 * s, p.q * s, p.a, 0.0).unwrap();
        for i in 0..200 {
            let r = 0.05 + (i as f64) * 0.2;
            let v1 = eval_gws(&p, r).unwrap();
            let v2 = eval_gws(&p2, r).unwrap();
            assert_relative_eq!(v1, v2, max_relative = 1e-13);
        }
    }
}
