//! Independent eigenvalue verification by direct integration of the
//! second-order radial equations.
//!
//! The integrated equation is exact (true `1/r^2` centrifugal term, no
//! Pekeris replacement):
//!
//! ```text
//! F'' = W(r) F,
//! W = omega/r^2 + (m + E - A)(m - E + Sigma(r)) / hbar_c^2     (spin)
//! W = omega/r^2 + (m - E + A')(m + E - Delta(r)) / hbar_c^2    (pseudospin)
//! ```
//!
//! where the generalized Woods-Saxon well plays the role of `Sigma`
//! (spin) or `Delta` (pseudospin). Shooting integrates outward from the
//! inner boundary and inward from `r_max`, matching logarithmic
//! derivatives. Eigenvalues are located primarily by bisection on the
//! outward node count (which is monotone in `E` and immune to the
//! log-derivative blow-ups that occur when the matching point falls in a
//! classically forbidden region), with sign-change bisection on the
//! mismatch as a fallback.
//!
//! For `q < 0` the potential has a pole at `R0 + a ln|q|`; the physical
//! domain is the half-line right of it and the outward start uses the
//! leading Frobenius behavior `F = x + c1 x^2/2` off the pole.

use thiserror::Error;

use crate::potential::{eval_gws, PotentialParams};
use crate::spectra::{
    pseudospin_energy_roots, spin_energy_roots, QuantumNumbers, SpectraError, SymmetryCase,
    SymmetryKind,
};
use crate::wavefunctions::{
    lower_spinor_g_from_f, upper_spinor_f, SpinorState, WavefunctionError,
};
use crate::potential::PekerisCoefficients;

/// Maximum integrator step, as a fraction of the surface thickness `a`.
const H_MAX_FRACTION: f64 = 0.125;

/// Minimum step before the run is declared stiff, as a fraction of `a`.
const H_MIN_FRACTION: f64 = 1e-14;

/// Offset of the outward start above a half-line pole, in units of `a`.
const POLE_OFFSET_FRACTION: f64 = 1e-9;

/// Magnitude at which the linear solution is rescaled mid-run.
const RENORM_THRESHOLD: f64 = 1e250;

/// Step-control descriptor for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepControl {
    /// Relative local error tolerance per step.
    pub rel_tol: f64,
}

impl Default for StepControl {
    fn default() -> Self {
        Self { rel_tol: 1e-12 }
    }
}

/// A configured shooting run: potential, symmetry, exact centrifugal
/// strength, radial domain, step control, and the energy bracket to
/// search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingProblem {
    pub p: PotentialParams,
    pub sym: SymmetryCase,
    /// Exact centrifugal strength (`omega` or `omega~`).
    pub omega: u32,
    pub r_min: f64,
    pub r_max: f64,
    pub step: StepControl,
    pub energy_bracket: (f64, f64),
    /// When set, the search locates the level with exactly this many
    /// interior nodes. When `None`, it settles on the first node-count
    /// transition inside the bracket, which can be the wrong level when
    /// the spacing shrinks below the bracket width.
    pub target_nodes: Option<usize>,
}

/// Converged shooting outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingResult {
    /// Eigenvalue, resolved to `1e-9 * m`.
    pub e: f64,
    /// Node count of the outward solution at the eigenvalue.
    pub nodes: usize,
    /// Normalized log-derivative mismatch at the matching radius, at the
    /// reported energy (diagnostic; small only when the matching point is
    /// classically allowed).
    pub mismatch: f64,
}

/// Pointwise residual survey of the first-order coupled pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheckReport {
    /// Largest absolute residual of the second coupling relation.
    pub max_residual: f64,
    /// Largest magnitude among the residual's constituent terms, for
    /// forming a relative figure.
    pub scale: f64,
}

/// Closed-form vs oracle comparison for one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleComparison {
    pub e_oracle: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub nodes: usize,
    /// Oracle node count equals the radial quantum number.
    pub node_match: bool,
    pub mismatch: f64,
    /// Half-width fraction of the bracket that finally captured the
    /// eigenvalue (starts at 0.05, geometrically widened to at most 0.25).
    pub bracket_fraction: f64,
}

/// One verified state: closed form, oracle outcome, and the domain used.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyRecord {
    pub n: u32,
    pub kappa: i32,
    pub omega: u32,
    pub r_min: f64,
    pub r_max: f64,
    pub closed: Result<f64, SpectraError>,
    pub oracle: Result<OracleComparison, OracleError>,
}

/// Errors from the shooting machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    /// Neither the node count nor the mismatch sign changes across the
    /// bracket: it contains no eigenvalue.
    #[error("no eigenvalue inside bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    /// Step control underflowed: the equation is too stiff at this
    /// tolerance.
    #[error("step size {h} underflowed during integration")]
    StiffFailure { h: f64 },
    /// The energy bracket is empty or not finite.
    #[error("invalid energy bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    /// The radial domain is degenerate for this potential.
    #[error("invalid radial domain: {what}")]
    InvalidDomain { what: &'static str },
    /// The operation applies to the other symmetry kind.
    #[error("operation requires the {expected:?} symmetry case")]
    WrongSymmetry { expected: SymmetryKind },
    /// The closed-form stage failed, so there is nothing to verify.
    #[error("closed-form stage failed: {0}")]
    ClosedForm(#[from] SpectraError),
    /// Component evaluation failed during the residual survey.
    #[error("component evaluation failed: {0}")]
    Component(#[from] WavefunctionError),
}

impl ShootingProblem {
    /// Standard problem around a candidate energy: domain
    /// `[inner boundary, R0 + 30a]`, default step control, bracket
    /// `e_center * (1 -+ frac)` intersected with the decay window.
    ///
    /// The inner boundary is just above the potential pole when one lies
    /// on the half-line, else a small positive radius. The decaying
    /// boundary condition at `r_max` only makes sense while `W` stays
    /// positive at infinity, so the bracket is clamped inside
    /// `(A - m, m)` (spin) or `(-m, m + A')` (pseudospin); an empty
    /// intersection is an invalid bracket.
    pub fn around(
        p: PotentialParams,
        sym: SymmetryCase,
        omega: u32,
        e_center: f64,
        frac: f64,
    ) -> Result<Self, OracleError> {
        if !e_center.is_finite() || !(frac > 0.0) {
            return Err(OracleError::InvalidBracket { lo: e_center, hi: e_center });
        }
        let r_min = match p.pole_radius() {
            Some(rp) if rp >= 0.0 => rp + POLE_OFFSET_FRACTION * p.a,
            _ => 1e-3 * p.a,
        };
        let r_max = p.r0 + 30.0 * p.a;
        if r_max <= r_min {
            return Err(OracleError::InvalidDomain { what: "r_max below inner boundary" });
        }
        let half = frac * e_center.abs().max(0.1 * sym.mass.abs());
        let margin = 1e-4 * sym.mass.abs();
        let (win_lo, win_hi) = match sym.kind {
            SymmetryKind::Spin => (sym.a_const - sym.mass, sym.mass),
            SymmetryKind::Pseudospin => (-sym.mass, sym.mass + sym.a_const),
        };
        let lo = (e_center - half).max(win_lo + margin);
        let hi = (e_center + half).min(win_hi - margin);
        if !(lo < hi) {
            return Err(OracleError::InvalidBracket { lo, hi });
        }
        Ok(Self {
            p,
            sym,
            omega,
            r_min,
            r_max,
            step: StepControl::default(),
            energy_bracket: (lo, hi),
            target_nodes: None,
        })
    }

    /// Matching radius: the well edge, pushed right when the pole domain
    /// starts above it.
    fn matching_radius(&self) -> f64 {
        match self.p.pole_radius() {
            Some(rp) if rp + self.p.a > self.p.r0 => rp + self.p.a,
            _ => self.p.r0,
        }
    }

    /// Exact coefficient `W(r)` of `F'' = W F` at energy `e`.
    fn weight(&self, e: f64, r: f64) -> f64 {
        let v = eval_gws(&self.p, r)
            .expect("integration domain excludes the potential pole");
        let hc2 = self.p.hbar_c * self.p.hbar_c;
        let m = self.sym.mass;
        let coupling = match self.sym.kind {
            SymmetryKind::Spin => (m + e - self.sym.a_const) * (m - e + v),
            SymmetryKind::Pseudospin => (m - e + self.sym.a_const) * (m + e - v),
        };
        f64::from(self.omega) / (r * r) + coupling / hc2
    }
}

/// State of one integration leg.
struct Leg {
    f: f64,
    fp: f64,
    nodes: usize,
}

/// Dormand-Prince 5(4) pair over `[r0, r1]` (either direction), counting
/// sign changes of `f` and rescaling to dodge overflow. Only ratios of
/// the returned pair are meaningful.
fn integrate_leg<W: Fn(f64) -> f64>(
    w: &W,
    r0: f64,
    r1: f64,
    f0: f64,
    fp0: f64,
    a_scale: f64,
    rel_tol: f64,
) -> Result<Leg, OracleError> {
    let dir = if r1 >= r0 { 1.0 } else { -1.0 };
    let h_max = H_MAX_FRACTION * a_scale;
    let h_min = H_MIN_FRACTION * a_scale;
    let mut r = r0;
    let mut y = [f0, fp0];
    let mut h = dir * h_max.min((r1 - r0).abs());
    let mut nodes = 0usize;
    let mut last_sign = if f0 == 0.0 { 0.0 } else { f0.signum() };
    let rhs = |r: f64, y: &[f64; 2]| [y[1], w(r) * y[0]];
    while (r1 - r) * dir > 0.0 {
        if (r1 - r).abs() < h.abs() {
            h = r1 - r;
        }
        let k1 = rhs(r, &y);
        let y2 = [y[0] + h * 0.2 * k1[0], y[1] + h * 0.2 * k1[1]];
        let k2 = rhs(r + 0.2 * h, &y2);
        let y3 = [
            y[0] + h * (0.075 * k1[0] + 0.225 * k2[0]),
            y[1] + h * (0.075 * k1[1] + 0.225 * k2[1]),
        ];
        let k3 = rhs(r + 0.3 * h, &y3);
        let (a41, a42, a43) = (44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0);
        let y4 = [
            y[0] + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
            y[1] + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1]),
        ];
        let k4 = rhs(r + 0.8 * h, &y4);
        let (a51, a52, a53, a54) = (
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
        );
        let y5 = [
            y[0] + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
            y[1] + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1]),
        ];
        let k5 = rhs(r + 8.0 / 9.0 * h, &y5);
        let (a61, a62, a63, a64, a65) = (
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
        );
        let y6 = [
            y[0] + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] + a65 * k5[0]),
            y[1] + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] + a65 * k5[1]),
        ];
        let k6 = rhs(r + h, &y6);
        let (b1, b3, b4, b5, b6) = (
            35.0 / 384.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        );
        let y_new = [
            y[0] + h * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] + b6 * k6[0]),
            y[1] + h * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] + b6 * k6[1]),
        ];
        let k7 = rhs(r + h, &y_new);
        // Embedded 4th-order differences.
        let (e1, e3, e4, e5, e6, e7) = (
            71.0 / 57600.0,
            -71.0 / 16695.0,
            71.0 / 1920.0,
            -17253.0 / 339200.0,
            22.0 / 525.0,
            -1.0 / 40.0,
        );
        let mut err: f64 = 0.0;
        for i in 0..2 {
            let est = h
                * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i]
                    + e7 * k7[i]);
            let scale = y[i].abs().max(y_new[i].abs()).max(1e-300);
            err = err.max((est / scale).abs());
        }
        if err <= rel_tol {
            if y_new[0] != 0.0 {
                let sign = y_new[0].signum();
                if last_sign != 0.0 && sign != last_sign {
                    nodes += 1;
                }
                last_sign = sign;
            }
            r += h;
            y = y_new;
            let mag = y[0].abs().max(y[1].abs());
            if mag > RENORM_THRESHOLD {
                y[0] /= mag;
                y[1] /= mag;
            }
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * (rel_tol / err).powf(0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h.abs() > h_max {
            h = dir * h_max;
        }
        if h.abs() < h_min {
            return Err(OracleError::StiffFailure { h: h.abs() });
        }
    }
    Ok(Leg { f: y[0], fp: y[1], nodes })
}

/// One full shot at energy `e`: outward and inward legs plus diagnostics.
struct Shot {
    nodes: usize,
    mismatch: f64,
}

fn single_shot(sp: &ShootingProblem, e: f64) -> Result<Shot, OracleError> {
    let w = |r: f64| sp.weight(e, r);
    let a = sp.p.a;
    let r_match = sp.matching_radius();
    // Outward initial data: Frobenius off a pole, power series otherwise.
    let (f0, fp0) = match sp.p.pole_radius() {
        Some(rp) if (sp.r_min - rp).abs() < 0.01 * a && rp >= 0.0 => {
            let x0 = sp.r_min - rp;
            let c1 = w(sp.r_min) * x0;
            (x0 * (1.0 + 0.5 * c1 * x0), 1.0 + c1 * x0)
        }
        _ => {
            let omega = f64::from(sp.omega);
            let l = 0.5 * ((1.0 + 4.0 * omega).sqrt() - 1.0);
            let r0 = sp.r_min;
            let c0 = w(r0) - omega / (r0 * r0);
            let beta = c0 / (4.0 * l + 6.0);
            (
                r0.powf(l + 1.0) * (1.0 + beta * r0 * r0),
                (l + 1.0) * r0.powf(l) + beta * (l + 3.0) * r0.powf(l + 2.0),
            )
        }
    };
    let out = integrate_leg(&w, sp.r_min, r_match, f0, fp0, a, sp.step.rel_tol)?;
    let tail = integrate_leg(&w, r_match, sp.r_max, out.f, out.fp, a, sp.step.rel_tol)?;
    // Inward leg: pure decaying start with the local exponent.
    let lambda = w(sp.r_max).max(1e-12).sqrt();
    let inw = integrate_leg(&w, sp.r_max, r_match, 1.0, -lambda, a, sp.step.rel_tol)?;
    let ld_out = out.fp / out.f;
    let ld_in = inw.fp / inw.f;
    let mut mismatch = (ld_out - ld_in) / (ld_out.abs() + ld_in.abs() + 1e-300);
    if !mismatch.is_finite() {
        mismatch = 1.0;
    }
    Ok(Shot { nodes: out.nodes + tail.nodes, mismatch })
}

/// Locates one eigenvalue inside `sp.energy_bracket`.
///
/// Primary search: bisection on the outward node count, which increments
/// exactly when `E` crosses an eigenvalue. With `target_nodes` set the
/// bisection homes in on the count boundary for that specific level and
/// requires the bracket to straddle it; otherwise it settles on the
/// first transition above the bracket floor, with a fallback bisection
/// on the sign of the log-derivative mismatch. Resolution `1e-9 * m`.
///
/// # Errors
///
/// [`OracleError::NoSignChange`] when no usable indicator changes across
/// the bracket; [`OracleError::InvalidBracket`];
/// [`OracleError::StiffFailure`].
pub fn shoot_eigenvalue(sp: &ShootingProblem) -> Result<ShootingResult, OracleError> {
    let (lo, hi) = sp.energy_bracket;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(OracleError::InvalidBracket { lo, hi });
    }
    let tol_e = 1e-9 * sp.sym.mass.abs().max(1.0);
    let shot_lo = single_shot(sp, lo)?;
    let shot_hi = single_shot(sp, hi)?;
    let node_target = match sp.target_nodes {
        // Several levels can fit inside the bracket when the spacing
        // collapses near the continuum edge; demand that the requested
        // count boundary itself is straddled.
        Some(n) => (shot_lo.nodes <= n && shot_hi.nodes > n).then_some(n),
        None => (shot_hi.nodes > shot_lo.nodes).then_some(shot_lo.nodes),
    };
    if let Some(target) = node_target {
        // The eigenvalue with `target` nodes sits at the count jump
        // from `<= target` to `> target`.
        let (mut e_lo, mut e_hi) = (lo, hi);
        while e_hi - e_lo > tol_e {
            let mid = 0.5 * (e_lo + e_hi);
            let s = single_shot(sp, mid)?;
            if s.nodes > target {
                e_hi = mid;
            } else {
                e_lo = mid;
            }
        }
        let e = 0.5 * (e_lo + e_hi);
        let s = single_shot(sp, e)?;
        return Ok(ShootingResult { e, nodes: target, mismatch: s.mismatch });
    }
    if sp.target_nodes.is_none() && shot_lo.mismatch * shot_hi.mismatch < 0.0 {
        let (mut e_lo, mut e_hi) = (lo, hi);
        let mut m_lo = shot_lo.mismatch;
        while e_hi - e_lo > tol_e {
            let mid = 0.5 * (e_lo + e_hi);
            let s = single_shot(sp, mid)?;
            if m_lo * s.mismatch <= 0.0 {
                e_hi = mid;
            } else {
                e_lo = mid;
                m_lo = s.mismatch;
            }
        }
        let e = 0.5 * (e_lo + e_hi);
        let s = single_shot(sp, e)?;
        return Ok(ShootingResult { e, nodes: s.nodes, mismatch: s.mismatch });
    }
    Err(OracleError::NoSignChange { lo, hi })
}

/// Surveys the residual of the second first-order coupling relation,
/// `hbar_c (G' - (kappa/r) G) - (m - E + Sigma(r)) F`, over a uniform
/// grid. `F` is the closed-form component, `G` is reconstructed from `F`
/// through the first coupling relation, and `G'` is taken by central
/// differences. Small residuals certify that the pair genuinely solves
/// the coupled system at this energy.
///
/// # Errors
///
/// [`OracleError::WrongSymmetry`] unless the state is spin-symmetric;
/// component evaluation errors pass through.
pub fn first_order_cross_check(
    s: &SpinorState,
    r_lo: f64,
    r_hi: f64,
    points: usize,
) -> Result<CrossCheckReport, OracleError> {
    if s.sym.kind != SymmetryKind::Spin {
        return Err(OracleError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    if !(r_hi > r_lo) || points < 2 {
        return Err(OracleError::InvalidDomain { what: "empty residual grid" });
    }
    let h = 1e-6 * s.p.a;
    let mut max_residual: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 0..points {
        let r = r_lo + (r_hi - r_lo) * (i as f64) / ((points - 1) as f64);
        let g_plus = lower_spinor_g_from_f(s, r + h)?;
        let g_minus = lower_spinor_g_from_f(s, r - h)?;
        let g = lower_spinor_g_from_f(s, r)?;
        let f = upper_spinor_f(s, r)?;
        let gp = (g_plus - g_minus) / (2.0 * h);
        let sigma = eval_gws(&s.p, r).map_err(|_| OracleError::InvalidDomain {
            what: "residual grid touches the potential pole",
        })?;
        let lhs = s.p.hbar_c * (gp - f64::from(s.qn.kappa) / r * g);
        let rhs = (s.sym.mass - s.e + sigma) * f;
        max_residual = max_residual.max((lhs - rhs).abs());
        scale = scale.max(lhs.abs()).max(rhs.abs());
    }
    Ok(CrossCheckReport { max_residual, scale })
}

/// Tunable knobs for [`verify_spectrum_with`].
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    /// Integrator relative tolerance.
    pub rel_tol: f64,
    /// Outer boundary, in thicknesses beyond `R0` (at least 25).
    pub r_max_extra: f64,
    /// Bracket half-width fractions, tried in order.
    pub bracket_fractions: Vec<f64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            r_max_extra: 30.0,
            bracket_fractions: vec![0.05, 0.10, 0.20, 0.25],
        }
    }
}

/// Runs the closed form for one state, then hunts the matching oracle
/// eigenvalue with a geometrically widened bracket (5%, 10%, 20%, 25%).
pub fn verify_spectrum(
    p: &PotentialParams,
    sym: &SymmetryCase,
    qn: &QuantumNumbers,
    d: &PekerisCoefficients,
) -> VerifyRecord {
    verify_spectrum_with(p, sym, qn, d, &VerifyOptions::default())
}

/// [`verify_spectrum`] with explicit step, domain and bracket knobs.
pub fn verify_spectrum_with(
    p: &PotentialParams,
    sym: &SymmetryCase,
    qn: &QuantumNumbers,
    d: &PekerisCoefficients,
    opts: &VerifyOptions,
) -> VerifyRecord {
    let (omega, closed_solution) = match sym.kind {
        SymmetryKind::Spin => (qn.omega(), spin_energy_roots(p, qn, sym, d)),
        SymmetryKind::Pseudospin => {
            (qn.omega_tilde(), pseudospin_energy_roots(p, qn, sym, d))
        }
    };
    let closed = closed_solution.and_then(|sol| sol.physical_energy());
    let (mut r_min, mut r_max) = (f64::NAN, f64::NAN);
    let oracle = match closed {
        Err(ref e) => Err(OracleError::ClosedForm(e.clone())),
        Ok(e_closed) => {
            let mut outcome = Err(OracleError::NoSignChange { lo: e_closed, hi: e_closed });
            for &frac in &opts.bracket_fractions {
                let sp = match ShootingProblem::around(*p, *sym, omega, e_closed, frac) {
                    Ok(mut sp) => {
                        sp.step.rel_tol = opts.rel_tol;
                        sp.r_max = p.r0 + opts.r_max_extra.max(25.0) * p.a;
                        sp.target_nodes = Some(qn.n as usize);
                        sp
                    }
                    Err(err) => {
                        outcome = Err(err);
                        break;
                    }
                };
                r_min = sp.r_min;
                r_max = sp.r_max;
                match shoot_eigenvalue(&sp) {
                    Ok(hit) => {
                        outcome = Ok(OracleComparison {
                            e_oracle: hit.e,
                            abs_diff: (hit.e - e_closed).abs(),
                            rel_diff: (hit.e - e_closed).abs()
                                / e_closed.abs().max(1e-300),
                            nodes: hit.nodes,
                            node_match: hit.nodes == qn.n as usize,
                            mismatch: hit.mismatch,
                            bracket_fraction: frac,
                        });
                        break;
                    }
                    Err(OracleError::NoSignChange { lo, hi }) => {
                        outcome = Err(OracleError::NoSignChange { lo, hi });
                    }
                    Err(err) => {
                        outcome = Err(err);
                        break;
                    }
                }
            }
            outcome
        }
    };
    VerifyRecord {
        n: qn.n,
        kappa: qn.kappa,
        omega,
        r_min,
        r_max,
        closed,
        oracle,
    }
}
