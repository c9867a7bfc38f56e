//! Radial spinor components, Jacobi/hypergeometric evaluation, and state
//! normalization.
//!
//! Closed-form bound components are built from the decaying variable
//! `y = e^{-(r-R0)/a}`:
//!
//! ```text
//! F(r) = N * y^eps * (1+q*y)^{(1+xi)/2} * P_n^{(2eps, xi)}(1 + 2*q*y)
//! ```
//!
//! For spin-symmetric states this is the upper component `F`; under
//! pseudospin symmetry the same shape (with the tilded exponents) is the
//! lower component `G`, and the partner component follows from the
//! first-order coupling relations.
//!
//! Two branches of the closed form matter:
//!
//! - the **literal** branch above, with Jacobi argument `1 + 2qy >= 1`
//!   for `q > 0`, which never crosses the polynomial's zeros;
//! - the **oscillatory** branch `y^eps (1-|q|y)^{(1+xi)/2}
//!   P_n^{(2eps,xi)}(1 - 2|q|y)`, defined for `|q|y < 1`
//!   (`r` above the inner edge `R0 + a ln|q|`), whose Jacobi argument
//!   sweeps `(-1, 1)` and therefore carries the `n` radial nodes.
//!
//! For `q < 0` the two branches coincide and live exactly on the physical
//! domain right of the potential pole. Node counting and normalization use
//! the oscillatory branch; its weighted square integrates to a Beta-type
//! form, which pins the normalization constant.

use thiserror::Error;

use statrs::function::gamma::ln_gamma;

use crate::potential::{PekerisCoefficients, PotentialParams};
use crate::spectra::{self, QuantumNumbers, SpectraError, SymmetryCase, SymmetryKind};

/// Maximum outer-series terms attempted before declaring divergence.
pub const MAX_SERIES_TERMS: u32 = 10_000;

/// Relative threshold below which the spin-singularity denominators
/// `m + E - A` (spin) and `m - E + A'` (pseudospin) are treated as zero.
const SINGULARITY_TOL: f64 = 1e-12;

/// Errors from component evaluation and normalization.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WavefunctionError {
    /// A parameter violates its admissible range.
    #[error("parameter out of range: {name} = {value}")]
    Parameter { name: &'static str, value: f64 },
    /// A denominator Pochhammer factor vanishes within the first `n` terms.
    #[error("hypergeometric denominator parameter c = {c} hits zero at offset {k}")]
    PoleInC { c: f64, k: u32 },
    /// Evaluation point outside the component's domain.
    #[error("r = {r} is outside the component domain")]
    Domain { r: f64 },
    /// The first-order coupling denominator vanishes (exact symmetric
    /// limit), so the partner component is not defined by the closed form.
    #[error("coupling denominator {denom} vanishes; partner component undefined")]
    SpinSingularity { denom: f64 },
    /// Adaptive quadrature exhausted its refinement budget.
    #[error("adaptive quadrature failed to meet tolerance")]
    NonConvergence,
    /// The normalization series failed its truncation test.
    #[error("normalization series failed to converge within {max_terms} terms")]
    SeriesDivergence { max_terms: u32 },
    /// The series normalization route is undefined at `n = 0`.
    #[error("series normalization is undefined at n = 0")]
    UnsupportedN,
    /// The series normalization route requires `q = 1`.
    #[error("series normalization requires q = 1, got q = {q}")]
    UnsupportedShape { q: f64 },
    /// The operation applies to the other symmetry kind.
    #[error("operation requires the {expected:?} symmetry case")]
    WrongSymmetry { expected: SymmetryKind },
    /// State construction failed in the energy/exponent layer.
    #[error("state construction failed: {0}")]
    Construction(#[from] SpectraError),
}

/// An accepted bound state with everything needed to evaluate its radial
/// components. Immutable after construction; cheap to copy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorState {
    pub p: PotentialParams,
    pub qn: QuantumNumbers,
    pub sym: SymmetryCase,
    /// Accepted energy root.
    pub e: f64,
    /// Decay exponent (`eps` or `eps~`), strictly positive.
    pub epsilon: f64,
    /// Centrifugal shape exponent (`xi` or `xi~`), greater than -1.
    pub xi: f64,
    /// Multiplicative normalization constant applied to every component.
    pub norm_constant: f64,
}

impl SpinorState {
    /// Builds a state at energy `e`, deriving the decay and shape
    /// exponents for the symmetry case. The normalization constant starts
    /// at 1; see [`normalize_quadrature`] and [`normalize_series`].
    pub fn new(
        p: PotentialParams,
        qn: QuantumNumbers,
        sym: SymmetryCase,
        e: f64,
        d: &PekerisCoefficients,
    ) -> Result<Self, WavefunctionError> {
        let epsilon = spectra::epsilon_spin(&p, &qn, &sym, e, d)?;
        if epsilon <= 0.0 {
            return Err(WavefunctionError::Parameter { name: "epsilon", value: epsilon });
        }
        let omega = match sym.kind {
            SymmetryKind::Spin => qn.omega(),
            SymmetryKind::Pseudospin => qn.omega_tilde(),
        };
        let xi = spectra::xi_exponent(&p, f64::from(omega), d)?;
        Ok(Self { p, qn, sym, e, epsilon, xi, norm_constant: 1.0 })
    }

    /// Returns the state with its normalization constant replaced.
    pub fn with_norm(self, norm_constant: f64) -> Self {
        Self { norm_constant, ..self }
    }

    /// Convenience: computes the quadrature normalization multiplier and
    /// folds it into the stored constant.
    pub fn normalized_by_quadrature(self) -> Result<Self, WavefunctionError> {
        let n = normalize_quadrature(&self)?;
        Ok(self.with_norm(self.norm_constant * n))
    }
}

/// Jacobi polynomial `P_n^{(alpha,beta)}(x)` by the standard three-term
/// recurrence.
///
/// # Errors
///
/// [`WavefunctionError::Parameter`] if `alpha <= -1` or `beta <= -1`.
pub fn jacobi(n: u32, alpha: f64, beta: f64, x: f64) -> Result<f64, WavefunctionError> {
    if !(alpha > -1.0) {
        return Err(WavefunctionError::Parameter { name: "alpha", value: alpha });
    }
    if !(beta > -1.0) {
        return Err(WavefunctionError::Parameter { name: "beta", value: beta });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = alpha + 1.0 + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    for k in 2..=n {
        let kf = f64::from(k);
        let ab = alpha + beta;
        let c1 = 2.0 * kf * (kf + ab) * (2.0 * kf + ab - 2.0);
        let c2 = (2.0 * kf + ab - 1.0)
            * ((2.0 * kf + ab) * (2.0 * kf + ab - 2.0) * x + alpha * alpha - beta * beta);
        let c3 = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * (2.0 * kf + ab);
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Terminating Gauss hypergeometric sum
/// `2F1(-n, b; c; z) = sum_{m=0}^{n} (-n)_m (b)_m / ((c)_m m!) z^m`,
/// accumulated with compensated summation.
///
/// # Errors
///
/// [`WavefunctionError::PoleInC`] when `(c)_m` vanishes for some
/// `m <= n`, i.e. `c` is a non-positive integer above `-n`.
pub fn hyp2f1_terminating(n: u32, b: f64, c: f64, z: f64) -> Result<f64, WavefunctionError> {
    for k in 0..n {
        if c + f64::from(k) == 0.0 {
            return Err(WavefunctionError::PoleInC { c, k });
        }
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut comp = 0.0;
    for m in 0..n {
        let mf = f64::from(m);
        term *= (mf - f64::from(n)) * (b + mf) / ((c + mf) * (mf + 1.0)) * z;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// Rising factorial `(x)_m` by direct product (small `m`).
fn pochhammer(x: f64, m: u32) -> f64 {
    (0..m).fold(1.0, |acc, k| acc * (x + f64::from(k)))
}

/// `ln|(x)_m|` with the product's sign; sign 0 when a factor vanishes.
fn ln_pochhammer_signed(x: f64, m: u32) -> (f64, f64) {
    let mut ln_abs = 0.0;
    let mut sign = 1.0;
    for k in 0..m {
        let f = x + f64::from(k);
        if f == 0.0 {
            return (f64::NEG_INFINITY, 0.0);
        }
        ln_abs += f.abs().ln();
        sign *= f.signum();
    }
    (ln_abs, sign)
}

fn ln_beta(x: f64, y: f64) -> f64 {
    ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y)
}

/// Inner edge of the oscillatory branch: `R0 + a ln|q|`, the radius where
/// `|q| y = 1`. Coincides with the potential pole for `q < 0`.
pub fn profile_inner_edge(p: &PotentialParams) -> f64 {
    p.r0 + p.a * p.q.abs().ln()
}

/// Literal closed-form component (shared by the spin upper component and
/// the pseudospin lower component).
fn literal_component(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if r < 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let y = s.p.decay_variable(r);
    let op = 1.0 + s.p.q * y;
    if op <= 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let pj = jacobi(s.qn.n, 2.0 * s.epsilon, s.xi, 1.0 + 2.0 * s.p.q * y)?;
    Ok(s.norm_constant * y.powf(s.epsilon) * op.powf(0.5 * (1.0 + s.xi)) * pj)
}

/// Analytic radial derivative of [`literal_component`], combining the
/// logarithmic derivative of the prefactors with the contiguous-parameter
/// derivative of the terminating series.
fn literal_component_prime(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if r < 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let y = s.p.decay_variable(r);
    let q = s.p.q;
    let a = s.p.a;
    let op = 1.0 + q * y;
    if op <= 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let n = s.qn.n;
    let eps = s.epsilon;
    let xi = s.xi;
    let f = literal_component(s, r)?;
    let log_part = (-eps / a - q * (1.0 + xi) * y / (2.0 * a * op)) * f;
    if n == 0 {
        return Ok(log_part);
    }
    let b = f64::from(n) + 1.0 + 2.0 * eps + xi;
    let c = 1.0 + 2.0 * eps;
    let c_n = pochhammer(c, n) / pochhammer(1.0, n);
    let tail = hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, -q * y)?;
    let series_part = s.norm_constant
        * c_n
        * y.powf(eps)
        * op.powf(0.5 * (1.0 + xi))
        * (q * y / a)
        * (-f64::from(n) * b / c)
        * tail;
    Ok(log_part + series_part)
}

/// Upper spinor component `F(r)` of a spin-symmetric state.
///
/// # Errors
///
/// [`WavefunctionError::Domain`] for `r < 0` or inside the `q < 0` pole
/// region; [`WavefunctionError::WrongSymmetry`] for pseudospin states.
pub fn upper_spinor_f(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if s.sym.kind != SymmetryKind::Spin {
        return Err(WavefunctionError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    literal_component(s, r)
}

/// Upper spinor component via its terminating-series form
/// `N C_n y^eps (1+qy)^{(1+xi)/2} 2F1(-n, n+1+2eps+xi; 1+2eps; -qy)` with
/// `C_n = (2eps+1)_n / n!`; agrees with [`upper_spinor_f`] to 1e-11.
pub fn upper_spinor_f_2f1(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if s.sym.kind != SymmetryKind::Spin {
        return Err(WavefunctionError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    if r < 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let y = s.p.decay_variable(r);
    let op = 1.0 + s.p.q * y;
    if op <= 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let n = s.qn.n;
    let eps = s.epsilon;
    let xi = s.xi;
    let b = f64::from(n) + 1.0 + 2.0 * eps + xi;
    let c = 1.0 + 2.0 * eps;
    let c_n = pochhammer(c, n) / pochhammer(1.0, n);
    let h = hyp2f1_terminating(n, b, c, -s.p.q * y)?;
    Ok(s.norm_constant * c_n * y.powf(eps) * op.powf(0.5 * (1.0 + xi)) * h)
}

/// Analytic `dF/dr` for a spin-symmetric state; agrees with central
/// differences of [`upper_spinor_f`] to 1e-7 relative away from nodes.
pub fn upper_spinor_f_prime(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if s.sym.kind != SymmetryKind::Spin {
        return Err(WavefunctionError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    literal_component_prime(s, r)
}

/// Lower component `G(r)` of a spin-symmetric state, reconstructed from
/// the first-order coupling relation
/// `G = hbar_c (dF/dr + (kappa/r) F) / (m + E - A)`.
///
/// # Errors
///
/// [`WavefunctionError::SpinSingularity`] when the denominator is below
/// `1e-12 * m`; [`WavefunctionError::Domain`] for `r <= 0`.
pub fn lower_spinor_g_from_f(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if s.sym.kind != SymmetryKind::Spin {
        return Err(WavefunctionError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    if r <= 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let denom = s.sym.mass + s.e - s.sym.a_const;
    if denom.abs() < SINGULARITY_TOL * s.sym.mass.abs() {
        return Err(WavefunctionError::SpinSingularity { denom });
    }
    let f = literal_component(s, r)?;
    let fp = literal_component_prime(s, r)?;
    Ok(s.p.hbar_c * (fp + f64::from(s.qn.kappa) / r * f) / denom)
}

/// Lower spinor component `G(r)` of a pseudospin-symmetric state (the
/// closed-form component in that case; same evaluator as the spin `F`
/// with the tilded exponents).
pub fn lower_spinor_g_pseudospin(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if s.sym.kind != SymmetryKind::Pseudospin {
        return Err(WavefunctionError::WrongSymmetry { expected: SymmetryKind::Pseudospin });
    }
    literal_component(s, r)
}

/// Upper component `F(r)` of a pseudospin-symmetric state, reconstructed
/// from `F = hbar_c (dG/dr - (kappa/r) G) / (m - E + A')`.
///
/// # Errors
///
/// As [`lower_spinor_g_from_f`], with the pseudospin denominator.
pub fn upper_spinor_f_pseudospin(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if s.sym.kind != SymmetryKind::Pseudospin {
        return Err(WavefunctionError::WrongSymmetry { expected: SymmetryKind::Pseudospin });
    }
    if r <= 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let denom = s.sym.mass - s.e + s.sym.a_const;
    if denom.abs() < SINGULARITY_TOL * s.sym.mass.abs() {
        return Err(WavefunctionError::SpinSingularity { denom });
    }
    let g = literal_component(s, r)?;
    let gp = literal_component_prime(s, r)?;
    Ok(s.p.hbar_c * (gp - f64::from(s.qn.kappa) / r * g) / denom)
}

/// Oscillatory-branch radial profile, extended by zero at and below the
/// inner edge. Equals the literal component exactly for `q < 0`; carries
/// the state's radial nodes for every sign of `q`.
pub fn radial_profile(s: &SpinorState, r: f64) -> Result<f64, WavefunctionError> {
    if r < 0.0 {
        return Err(WavefunctionError::Domain { r });
    }
    let y = s.p.decay_variable(r);
    let t = 1.0 - s.p.q.abs() * y;
    if t <= 0.0 {
        return Ok(0.0);
    }
    let pj = jacobi(s.qn.n, 2.0 * s.epsilon, s.xi, 1.0 - 2.0 * s.p.q.abs() * y)?;
    Ok(s.norm_constant * y.powf(s.epsilon) * t.powf(0.5 * (1.0 + s.xi)) * pj)
}

/// Counts sign changes of the oscillatory profile on a uniform grid over
/// `[r_lo, r_hi]` (exact zeros are skipped, not double-counted).
pub fn node_count(
    s: &SpinorState,
    r_lo: f64,
    r_hi: f64,
    points: usize,
) -> Result<usize, WavefunctionError> {
    if !(r_hi > r_lo) || points < 2 {
        return Err(WavefunctionError::Parameter {
            name: "grid",
            value: points as f64,
        });
    }
    let mut count = 0;
    let mut last_sign = 0.0;
    for i in 0..points {
        let r = r_lo + (r_hi - r_lo) * (i as f64) / ((points - 1) as f64);
        let v = radial_profile(s, r)?;
        if v == 0.0 {
            continue;
        }
        let sign = v.signum();
        if last_sign != 0.0 && sign != last_sign {
            count += 1;
        }
        last_sign = sign;
    }
    Ok(count)
}

/// Upper integration cutoff: far enough beyond the well edge that the
/// squared tail is below 1e-14 of the integral.
pub fn default_r_max(s: &SpinorState) -> f64 {
    let base = s.p.r0.max(profile_inner_edge(&s.p)).max(0.0);
    base + 40.0 / s.epsilon * s.p.a * s.epsilon.max(1.0)
}

/// Adaptive Simpson quadrature with Richardson acceptance; `tol` is an
/// absolute error target for the panel.
fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64, WavefunctionError> {
    let mid = 0.5 * (lo + hi);
    let flo = f(lo);
    let fmid = f(mid);
    let fhi = f(hi);
    let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    simpson_panel(f, lo, hi, flo, fmid, fhi, whole, tol, 60)
}

#[allow(clippy::too_many_arguments)]
fn simpson_panel<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    flo: f64,
    fmid: f64,
    fhi: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, WavefunctionError> {
    let mid = 0.5 * (lo + hi);
    let lm = 0.5 * (lo + mid);
    let rm = 0.5 * (mid + hi);
    let flm = f(lm);
    let frm = f(rm);
    let left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    let right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    // Acceptance at `tol` (not the customary 15 tol): the squared profile
    // has an algebraic singularity at its inner edge that flattens the
    // Richardson estimate, so the safety factor is kept as real margin.
    let delta = left + right - whole;
    if delta.abs() <= tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(WavefunctionError::NonConvergence);
    }
    let a = simpson_panel(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1)?;
    let b = simpson_panel(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1)?;
    Ok(a + b)
}

/// Normalization multiplier by adaptive quadrature of the squared
/// oscillatory profile over the physical half-line (the profile vanishes
/// identically below its inner edge), absolute tolerance 1e-10.
///
/// Returns the factor that scales the state, as currently stored, to unit
/// norm; for a freshly built state (`norm_constant = 1`) this is the
/// normalization constant itself. For `n = 0, q = 1, xi = 1` that constant
/// is the closed Beta-function value `N = [a B(2 eps, 3)]^{-1/2}`.
pub fn normalize_quadrature(s: &SpinorState) -> Result<f64, WavefunctionError> {
    if !(s.epsilon > 0.0) {
        return Err(WavefunctionError::Parameter { name: "epsilon", value: s.epsilon });
    }
    let r_lo = profile_inner_edge(&s.p).max(0.0);
    let r_hi = default_r_max(s);
    let f = |r: f64| {
        let v = radial_profile(s, r).unwrap_or(0.0);
        v * v
    };
    // The squared profile is concentrated in a layer of width ~a/(2 eps)
    // above the inner edge; a single panel over the full span samples only
    // zeros there and the recursion would accept a spurious 0. Seed a
    // geometric panel ladder at the layer scale instead.
    let delta0 = (s.p.a / (4.0 * (s.epsilon + f64::from(s.qn.n) + 1.0)))
        .min(r_hi - r_lo);
    let mut cuts = vec![r_lo];
    let mut step = delta0;
    let mut r = r_lo;
    loop {
        r += step;
        if r >= r_hi - 0.5 * delta0 {
            break;
        }
        cuts.push(r);
        step *= 2.0;
    }
    cuts.push(r_hi);
    let tol = 1e-10 / (cuts.len() - 1) as f64;
    let mut integral = 0.0;
    for pair in cuts.windows(2) {
        integral += adaptive_simpson(&f, pair[0], pair[1], tol)?;
    }
    if !(integral > 0.0) {
        return Err(WavefunctionError::NonConvergence);
    }
    Ok(1.0 / integral.sqrt())
}

/// Normalization constant by the closed Beta-series route (`q = 1` only):
/// the squared-profile integral in the `y` variable expands into
/// Beta-weighted terminating hypergeometric sums,
///
/// ```text
/// I = C_n^2 * sum_m [(-n)_m (b)_m / ((c)_m m!)] B(2eps+m, xi+2)
///     * 3F2(-n, b, 2eps+m; c, 2eps+m+xi+2; 1)
/// ```
///
/// with `b = n+1+2eps+xi`, `c = 2eps+1`, `C_n = (c)_n/n!`, and
/// `N = 1/sqrt(a I)`. The outer sum is truncated once the running term
/// stays below 1e-14 of the partial sum for 5 consecutive terms. Gamma
/// factors are evaluated in log space to survive `eps ~ 22`.
///
/// # Errors
///
/// [`WavefunctionError::UnsupportedN`] at `n = 0` (this route's
/// prefactors degenerate there; use quadrature);
/// [`WavefunctionError::UnsupportedShape`] for `q != 1`;
/// [`WavefunctionError::SeriesDivergence`] if the truncation test fails.
pub fn normalize_series(s: &SpinorState) -> Result<f64, WavefunctionError> {
    if (s.p.q - 1.0).abs() > 1e-12 {
        return Err(WavefunctionError::UnsupportedShape { q: s.p.q });
    }
    if s.qn.n == 0 {
        return Err(WavefunctionError::UnsupportedN);
    }
    let n = s.qn.n;
    let nf = f64::from(n);
    let eps = s.epsilon;
    let xi = s.xi;
    let b = nf + 1.0 + 2.0 * eps + xi;
    let c = 2.0 * eps + 1.0;
    let ln_cn = ln_gamma(c + nf) - ln_gamma(c) - ln_gamma(nf + 1.0);
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut tiny_run = 0;
    let mut converged = false;
    for m in 0..MAX_SERIES_TERMS {
        let (ln_a, sg_a) = ln_pochhammer_signed(-nf, m);
        let term = if sg_a == 0.0 {
            0.0
        } else {
            let (ln_b, sg_b) = ln_pochhammer_signed(b, m);
            let (ln_c, sg_c) = ln_pochhammer_signed(c, m);
            let mf = f64::from(m);
            let inner = hyp3f2_unit(n, b, 2.0 * eps + mf, c, 2.0 * eps + mf + xi + 2.0);
            let ln_mag = ln_a + ln_b - ln_c - ln_gamma(mf + 1.0)
                + ln_beta(2.0 * eps + mf, xi + 2.0);
            sg_a * sg_b * sg_c * ln_mag.exp() * inner
        };
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() <= 1e-14 * sum.abs() {
            tiny_run += 1;
            if tiny_run >= 5 {
                converged = true;
                break;
            }
        } else {
            tiny_run = 0;
        }
    }
    if !converged {
        return Err(WavefunctionError::SeriesDivergence { max_terms: MAX_SERIES_TERMS });
    }
    let i_w = (2.0 * ln_cn).exp() * sum;
    if !(i_w > 0.0) {
        return Err(WavefunctionError::SeriesDivergence { max_terms: MAX_SERIES_TERMS });
    }
    // Same multiplier semantics as normalize_quadrature.
    Ok(1.0 / (s.norm_constant.abs() * (s.p.a * i_w).sqrt()))
}

/// `3F2(-n, a2, a3; b1, b2; 1)` as a terminating sum (compensated).
fn hyp3f2_unit(n: u32, a2: f64, a3: f64, b1: f64, b2: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut comp = 0.0;
    for j in 0..n {
        let jf = f64::from(j);
        term *= (jf - f64::from(n)) * (a2 + jf) * (a3 + jf)
            / ((b1 + jf) * (b2 + jf) * (jf + 1.0));
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{pekeris_paper, pekeris_taylor};
    use crate::spectra::swave_energy_roots;
    use approx::assert_relative_eq;

    fn table2_params(q: f64) -> PotentialParams {
        PotentialParams::new(2.2, q, 1.425, 14.25).unwrap()
    }

    fn spin_sym() -> SymmetryCase {
        SymmetryCase::spin(-5.0, 15.0)
    }

    /// s-wave spin state at the exact computed first root for shape `q`.
    fn swave_state(q: f64, n: u32) -> SpinorState {
        let p = table2_params(q);
        let sym = spin_sym();
        let sol = swave_energy_roots(&p, n, &sym).unwrap();
        let e = sol.roots[0].e;
        let qn = QuantumNumbers::new(n, -1).unwrap();
        let d = pekeris_paper(&p);
        SpinorState::new(p, qn, sym, e, &d).unwrap()
    }

    /// s-wave spin state at an explicitly given energy (reference states
    /// are frozen at 6-decimal energies).
    fn swave_state_at(q: f64, n: u32, e: f64) -> SpinorState {
        let p = table2_params(q);
        let qn = QuantumNumbers::new(n, -1).unwrap();
        let d = pekeris_paper(&p);
        SpinorState::new(p, qn, spin_sym(), e, &d).unwrap()
    }

    #[test]
    fn jacobi_low_orders() {
        assert_eq!(jacobi(0, 0.3, 7.2, -0.4).unwrap(), 1.0);
        assert_eq!(jacobi(1, 0.0, 0.0, 0.0).unwrap(), 0.0);
        assert_eq!(jacobi(2, 1.0, 1.0, 1.0).unwrap(), 3.0);
        assert!(matches!(
            jacobi(1, -1.0, 0.0, 0.5),
            Err(WavefunctionError::Parameter { name: "alpha", .. })
        ));
        assert!(matches!(
            jacobi(1, 0.0, -1.5, 0.5),
            Err(WavefunctionError::Parameter { name: "beta", .. })
        ));
    }

    #[test]
    fn jacobi_endpoint_identity() {
        // P_n^{(alpha,beta)}(1) = Gamma(n+alpha+1) / (Gamma(alpha+1) n!).
        for &(n, alpha, beta) in &[(3u32, 0.5, 0.25), (5, 2.5, 0.3), (7, 44.8, 1.06)] {
            let expect = (ln_gamma(f64::from(n) + alpha + 1.0)
                - ln_gamma(alpha + 1.0)
                - ln_gamma(f64::from(n) + 1.0))
            .exp();
            assert_relative_eq!(
                jacobi(n, alpha, beta, 1.0).unwrap(),
                expect,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn hypergeometric_low_orders() {
        assert_eq!(hyp2f1_terminating(0, 3.3, 0.1, 0.7).unwrap(), 1.0);
        let (b, c, z) = (2.7, 1.3, -0.45);
        assert_relative_eq!(
            hyp2f1_terminating(1, b, c, z).unwrap(),
            1.0 - b / c * z,
            max_relative = 1e-15
        );
        assert!(hyp2f1_terminating(2, 3.0, 2.0, 1.0).unwrap().abs() < 1e-15);
        assert!(matches!(
            hyp2f1_terminating(2, 1.0, 0.0, 0.5),
            Err(WavefunctionError::PoleInC { k: 0, .. })
        ));
        assert!(matches!(
            hyp2f1_terminating(2, 1.0, -1.0, 0.5),
            Err(WavefunctionError::PoleInC { k: 1, .. })
        ));
    }

    #[test]
    fn jacobi_matches_terminating_series() {
        // P_n^{(a,b)}(1-2s) = ((a+1)_n/n!) 2F1(-n, 1+a+b+n; a+1; s).
        //
        // Deep in s the alternating hypergeometric sum cancels by many
        // orders (condition ~((1+s)/(1-s))^n), so those probes measure
        // agreement against the sum's own term magnitude; for s <= 0.35
        // the identity binds at 1e-11 of the value itself.
        let term_magnitude = |n: u32, b: f64, c: f64, s: f64| -> f64 {
            let mut t = 1.0f64;
            let mut acc = 1.0f64;
            for k in 0..n {
                let kf = f64::from(k);
                t *= (kf - f64::from(n)) * (b + kf) / ((c + kf) * (kf + 1.0)) * s;
                acc += t.abs();
            }
            acc
        };
        for n in 0..=10u32 {
            for &(alpha, beta) in &[(0.3, 0.7), (2.0, 0.0), (44.79, 1.06)] {
                for &s in &[0.0, 0.12, 0.35, 0.5, 0.93, 1.0] {
                    let b = 1.0 + alpha + beta + f64::from(n);
                    let c = alpha + 1.0;
                    let lhs = jacobi(n, alpha, beta, 1.0 - 2.0 * s).unwrap();
                    let pref = pochhammer(alpha + 1.0, n) / pochhammer(1.0, n);
                    let rhs = pref * hyp2f1_terminating(n, b, c, s).unwrap();
                    let scale = if s <= 0.35 {
                        lhs.abs().max(rhs.abs()).max(1.0)
                    } else {
                        (pref * term_magnitude(n, b, c, s)).max(lhs.abs()).max(1.0)
                    };
                    assert!(
                        (lhs - rhs).abs() <= 1e-11 * scale,
                        "n={n} alpha={alpha} beta={beta} s={s}: {lhs} vs {rhs}"
                    );
                }
            }
        }
    }

    #[test]
    fn ground_state_shape_and_decay() {
        let s = swave_state(1.0, 0);
        // n = 0: F is exactly the two prefactors.
        let r = s.p.r0 + 3.0 * s.p.a;
        let y = s.p.decay_variable(r);
        let direct = y.powf(s.epsilon) * (1.0 + y).powf(0.5 * (1.0 + s.xi));
        assert_relative_eq!(upper_spinor_f(&s, r).unwrap(), direct, max_relative = 1e-14);
        // Tail decay exponent within 2% of eps/a over [R0+10a, R0+15a].
        let r1 = s.p.r0 + 10.0 * s.p.a;
        let r2 = s.p.r0 + 15.0 * s.p.a;
        let f1 = upper_spinor_f(&s, r1).unwrap();
        let f2 = upper_spinor_f(&s, r2).unwrap();
        let fitted = -(f2 / f1).ln() / (r2 - r1);
        assert_relative_eq!(fitted, s.epsilon / s.p.a, max_relative = 0.02);
    }

    #[test]
    fn literal_and_series_forms_agree() {
        let p = table2_params(-2.0);
        let sym = spin_sym();
        let sol = swave_energy_roots(&p, 3, &sym).unwrap();
        let qn = QuantumNumbers::new(3, -1).unwrap();
        let d = pekeris_taylor(&p).unwrap();
        let s = SpinorState::new(p, qn, sym, sol.roots[0].e, &d).unwrap();
        let edge = profile_inner_edge(&p);
        for &r in &[edge + 0.5 * p.a, p.r0 + p.a, p.r0 + 5.0 * p.a, p.r0 + 15.0 * p.a] {
            let lit = upper_spinor_f(&s, r).unwrap();
            let ser = upper_spinor_f_2f1(&s, r).unwrap();
            let scale = lit.abs().max(ser.abs()).max(1e-300);
            assert!((lit - ser).abs() <= 1e-11 * scale, "r={r}: {lit} vs {ser}");
        }
    }

    #[test]
    fn pole_region_is_rejected() {
        let s = swave_state(-2.0, 0);
        let pole = s.p.pole_radius().unwrap();
        assert!(matches!(
            upper_spinor_f(&s, pole - 0.5),
            Err(WavefunctionError::Domain { .. })
        ));
        assert!(upper_spinor_f(&s, pole + 0.5).is_ok());
        assert!(matches!(
            upper_spinor_f(&s, -1.0),
            Err(WavefunctionError::Domain { .. })
        ));
    }

    #[test]
    fn analytic_derivative_matches_central_differences() {
        let p = table2_params(-2.0);
        let sym = spin_sym();
        let sol = swave_energy_roots(&p, 1, &sym).unwrap();
        let qn = QuantumNumbers::new(1, -1).unwrap();
        let d = pekeris_taylor(&p).unwrap();
        let s = SpinorState::new(p, qn, sym, sol.roots[0].e, &d).unwrap();
        let edge = profile_inner_edge(&p);
        let h = 1e-5 * p.a;
        for i in 0..100 {
            let r = edge + 0.3 * p.a + (i as f64) * 0.1 * p.a;
            let analytic = upper_spinor_f_prime(&s, r).unwrap();
            let fd = (upper_spinor_f(&s, r + h).unwrap()
                - upper_spinor_f(&s, r - h).unwrap())
                / (2.0 * h);
            let scale = analytic
                .abs()
                .max(upper_spinor_f(&s, r).unwrap().abs() / p.a)
                .max(1e-300);
            assert!(
                (analytic - fd).abs() <= 1e-7 * scale,
                "r={r}: analytic {analytic} vs fd {fd}"
            );
        }
    }

    #[test]
    fn lower_component_and_singular_case() {
        let s = swave_state(-2.0, 0);
        let r = s.p.r0 + 2.0 * s.p.a;
        let g = lower_spinor_g_from_f(&s, r).unwrap();
        // kappa = -1, denominator m + E - A.
        let denom = s.sym.mass + s.e - s.sym.a_const;
        let expect = (upper_spinor_f_prime(&s, r).unwrap()
            - upper_spinor_f(&s, r).unwrap() / r)
            / denom;
        assert_relative_eq!(g, expect, max_relative = 1e-14);
        assert!(matches!(
            lower_spinor_g_from_f(&s, 0.0),
            Err(WavefunctionError::Domain { .. })
        ));
        // Force the singular denominator: E = A - m.
        let singular = SpinorState { e: s.sym.a_const - s.sym.mass, ..s };
        assert!(matches!(
            lower_spinor_g_from_f(&singular, r),
            Err(WavefunctionError::SpinSingularity { .. })
        ));
    }

    #[test]
    fn pseudospin_component_shares_the_spin_path() {
        // kappa = 1 pseudospin state vs its mapped spin problem: same
        // formula, same numbers.
        let p = table2_params(1.0);
        let d = pekeris_taylor(&p).unwrap();
        let sym_ps = SymmetryCase::pseudospin(5.0, 15.0);
        let e_ps = 9.561001136950826218;
        let qn_ps = QuantumNumbers::new(0, 1).unwrap();
        let s_ps = SpinorState::new(p, qn_ps, sym_ps, e_ps, &d).unwrap();

        let p_mapped = PotentialParams { v0: -p.v0, ..p };
        let sym_sp = SymmetryCase::spin(-5.0, 15.0);
        let qn_sp = QuantumNumbers::new(0, -1).unwrap();
        let s_sp = SpinorState::new(p_mapped, qn_sp, sym_sp, -e_ps, &d).unwrap();

        assert_relative_eq!(s_ps.epsilon, s_sp.epsilon, max_relative = 1e-13);
        for &r in &[1.0, p.r0 - 2.0 * p.a, p.r0, p.r0 + 4.0 * p.a] {
            let g = lower_spinor_g_pseudospin(&s_ps, r).unwrap();
            let f = upper_spinor_f(&s_sp, r).unwrap();
            assert_relative_eq!(g, f, max_relative = 1e-12);
        }
        assert!(matches!(
            upper_spinor_f(&s_ps, 1.0),
            Err(WavefunctionError::WrongSymmetry { expected: SymmetryKind::Spin })
        ));
    }

    #[test]
    fn pseudospin_partner_component_consistency() {
        let p = table2_params(1.0);
        let d = pekeris_taylor(&p).unwrap();
        let sym = SymmetryCase::pseudospin(5.0, 15.0);
        let qn = QuantumNumbers::new(0, 1).unwrap();
        let s = SpinorState::new(p, qn, sym, 9.561001136950826218, &d).unwrap();
        let h = 1e-6 * p.a;
        let denom = sym.mass - s.e + sym.a_const;
        for &r in &[p.r0 - 3.0 * p.a, p.r0, p.r0 + 3.0 * p.a] {
            let f = upper_spinor_f_pseudospin(&s, r).unwrap();
            let gp_fd = (lower_spinor_g_pseudospin(&s, r + h).unwrap()
                - lower_spinor_g_pseudospin(&s, r - h).unwrap())
                / (2.0 * h);
            let g = lower_spinor_g_pseudospin(&s, r).unwrap();
            let expect = (gp_fd - g / r) / denom;
            assert_relative_eq!(f, expect, max_relative = 1e-6);
        }
    }

    #[test]
    fn oscillatory_branch_counts_nodes() {
        // Second excited s-wave state at q = 1: the oscillatory branch
        // carries both radial nodes, while the literal branch's Jacobi
        // argument stays right of every polynomial zero and never crosses.
        let s = swave_state(1.0, 2);
        assert_relative_eq!(s.e, 6.597152, epsilon = 5e-7);
        let edge = profile_inner_edge(&s.p);
        let nodes = node_count(&s, edge, edge + 30.0 * s.p.a, 10_000).unwrap();
        assert_eq!(nodes, 2);
        let mut literal_changes = 0;
        let mut last = 0.0f64;
        for i in 0..10_000 {
            let r = 1e-3 + (edge + 30.0 * s.p.a) * (i as f64) / 9_999.0;
            let v = upper_spinor_f(&s, r).unwrap();
            if v != 0.0 {
                if last != 0.0 && v.signum() != last {
                    literal_changes += 1;
                }
                last = v.signum();
            }
        }
        assert_eq!(literal_changes, 0);

        // For q < 0 the branches coincide, so the literal component itself
        // carries its n nodes.
        let s = swave_state(-2.0, 2);
        let edge = profile_inner_edge(&s.p);
        assert_eq!(node_count(&s, edge, edge + 30.0 * s.p.a, 10_000).unwrap(), 2);
        let r_probe = edge + 0.8 * s.p.a;
        assert_relative_eq!(
            radial_profile(&s, r_probe).unwrap(),
            upper_spinor_f(&s, r_probe).unwrap(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn quadrature_normalization_matches_beta_closed_form() {
        let s = swave_state_at(1.0, 0, -10.197602);
        assert_relative_eq!(s.epsilon, 22.395493468102815562, max_relative = 1e-13);
        let n_quad = normalize_quadrature(&s).unwrap();
        // xi = 1: integral is a * B(2 eps, 3).
        let ln_b = ln_beta(2.0 * s.epsilon, 3.0);
        let n_beta = 1.0 / (s.p.a * ln_b.exp()).sqrt();
        assert_relative_eq!(n_beta, 183.50334734233776346, max_relative = 1e-12);
        assert_relative_eq!(n_quad, n_beta, max_relative = 1e-6);
        // Self-check: the normalized state's multiplier is 1.
        let normalized = s.with_norm(n_quad);
        let back = normalize_quadrature(&normalized).unwrap();
        assert_relative_eq!(back, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn series_normalization_reference_and_guards() {
        let s = swave_state_at(1.0, 1, 0.985745);
        assert_relative_eq!(s.epsilon, 24.43779784028055809, max_relative = 1e-13);
        let n_series = normalize_series(&s).unwrap();
        assert_relative_eq!(n_series, 107.39300537592163664, max_relative = 1e-10);
        let n_quad = normalize_quadrature(&s).unwrap();
        assert_relative_eq!(n_series, n_quad, max_relative = 1e-6);

        let s0 = swave_state_at(1.0, 0, -10.197602);
        assert!(matches!(normalize_series(&s0), Err(WavefunctionError::UnsupportedN)));
        let s2 = swave_state(2.0, 1);
        assert!(matches!(
            normalize_series(&s2),
            Err(WavefunctionError::UnsupportedShape { .. })
        ));
    }

    #[test]
    fn normalization_scales_with_the_length_unit() {
        // Holding (eps, xi, n, q) fixed and doubling the length scale
        // divides N by sqrt(2): the weighted integral is scale-invariant
        // and the measure contributes the factor a.
        let s = swave_state(1.0, 1);
        let doubled = SpinorState {
            p: PotentialParams::new(s.p.v0, s.p.q, 2.0 * s.p.a, 2.0 * s.p.r0).unwrap(),
            ..s
        };
        let n1 = normalize_quadrature(&s).unwrap();
        let n2 = normalize_quadrature(&doubled).unwrap();
        assert_relative_eq!(n2, n1 / 2f64.sqrt(), max_relative = 2e-6);
    }

    #[test]
    fn state_construction_guards() {
        let p = table2_params(1.0);
        let d = pekeris_paper(&p);
        let qn = QuantumNumbers::new(0, -1).unwrap();
        // Energy above the continuum edge: no decaying exponent.
        assert!(matches!(
            SpinorState::new(p, qn, spin_sym(), 15.5, &d),
            Err(WavefunctionError::Construction(SpectraError::ComplexEpsilon { .. }))
        ));
    }
}
