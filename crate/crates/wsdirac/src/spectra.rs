//! Closed-form bound-state energies for the generalized Woods-Saxon well.
//!
//! Every energy condition handled here is algebraically quadratic in `E`
//! after squaring the defining relation between the decay exponent and the
//! level index, so each solver returns both quadratic roots together with
//! per-root diagnostics:
//!
//! - `epsilon`: the dimensionless decay exponent, when its radicand is
//!   nonnegative (a bound state must have `epsilon > 0`);
//! - `presquare_consistent`: whether the root satisfies the un-squared,
//!   sign-carrying relation rather than only its square;
//! - `bound_window`: the prose window conditions on `E` for the given
//!   symmetry.
//!
//! Cases: spin symmetry (difference of vector and scalar couplings
//! constant, `Delta = A`), pseudospin symmetry (sum constant,
//! `Sigma = A'`, reached from the spin case by the mapping
//! `V0 -> -V0, A -> -A', omega -> omega_tilde, E -> -E`), the exact s-wave
//! specialization, the Klein-Gordon limit `A = 0`, the free limit
//! `V0 -> 0`, and the nonrelativistic limit.

use thiserror::Error;

use crate::nu::NuTemplate;
use crate::potential::{PekerisCoefficients, PotentialParams};

/// Radial index and spin-orbit quantum number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumNumbers {
    /// Radial quantum number `n >= 0`.
    pub n: u32,
    /// Spin-orbit coupling number `kappa` (any nonzero integer).
    pub kappa: i32,
}

impl QuantumNumbers {
    /// Builds a quantum-number pair, rejecting `kappa = 0`.
    pub fn new(n: u32, kappa: i32) -> Result<Self, SpectraError> {
        if kappa == 0 {
            return Err(SpectraError::InvalidKappa { kappa });
        }
        Ok(Self { n, kappa })
    }

    /// Spin-orbit strength `omega = kappa*(kappa+1)` (always nonnegative).
    pub fn omega(&self) -> u32 {
        let k = i64::from(self.kappa);
        (k * (k + 1)) as u32
    }

    /// Pseudospin strength `omega_tilde = kappa*(kappa-1)`.
    pub fn omega_tilde(&self) -> u32 {
        let k = i64::from(self.kappa);
        (k * (k - 1)) as u32
    }

    /// Orbital angular momentum `l` with `l(l+1) = kappa(kappa+1)`.
    pub fn l(&self) -> u32 {
        if self.kappa > 0 { self.kappa as u32 } else { (-self.kappa - 1) as u32 }
    }

    /// Pseudo orbital angular momentum `l~` with `l~(l~+1) = kappa(kappa-1)`.
    pub fn l_tilde(&self) -> u32 {
        if self.kappa > 0 { (self.kappa - 1) as u32 } else { (-self.kappa) as u32 }
    }
}

/// Which coupling combination is held constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    /// `Delta = V - S = A` constant.
    Spin,
    /// `Sigma = V + S = A'` constant.
    Pseudospin,
}

/// Symmetry selection plus the constant coupling value and rest energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryCase {
    pub kind: SymmetryKind,
    /// The constant `A` (spin) or `A'` (pseudospin), an energy.
    pub a_const: f64,
    /// Rest energy `m c^2`.
    pub mass: f64,
}

impl SymmetryCase {
    pub fn spin(a_const: f64, mass: f64) -> Self {
        Self { kind: SymmetryKind::Spin, a_const, mass }
    }

    pub fn pseudospin(a_const: f64, mass: f64) -> Self {
        Self { kind: SymmetryKind::Pseudospin, a_const, mass }
    }
}

/// One quadratic root with its validity diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootRecord {
    /// The energy root.
    pub e: f64,
    /// Decay exponent at this energy; `None` when its radicand is negative.
    pub epsilon: Option<f64>,
    /// `epsilon` exists and is strictly positive.
    pub epsilon_positive: bool,
    /// The root satisfies the sign-carrying (un-squared) quantization
    /// relation, not merely its square.
    pub presquare_consistent: bool,
    /// The root lies inside the bound-state energy window for its symmetry.
    pub bound_window: bool,
}

/// Both roots of an energy equation plus the physical-root selection.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergySolution {
    /// One or two roots, ordered by decreasing distance from the
    /// accumulation edge of the spectrum (so index 0 is the conventional
    /// "first" column of tabulated values).
    pub roots: Vec<RootRecord>,
    /// Index of the selected physical root, always one with
    /// `epsilon_positive = true`.
    pub physical: Option<usize>,
    /// The level combination `S = 1 + 2n + xi`.
    pub s_value: f64,
    /// The centrifugal shape exponent `xi` (1 exactly when `omega = 0`).
    pub xi: f64,
}

impl EnergySolution {
    /// Convenience accessor for the selected physical energy.
    pub fn physical_energy(&self) -> Result<f64, SpectraError> {
        self.physical
            .map(|i| self.roots[i].e)
            .ok_or(SpectraError::NoValidRoot)
    }
}

/// Nonrelativistic level with its binding diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonrelLevel {
    /// The closed-form energy.
    pub e: f64,
    /// Whether the level sits below the centrifugal offset (the binding
    /// condition).
    pub bound: bool,
    /// `S1 = 1 + 2n + xi1`.
    pub s1: f64,
    /// Centrifugal shape exponent `xi1`.
    pub xi1: f64,
}

/// One row of a spectrum sweep; errors annotate the row instead of
/// aborting the table.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub n: u32,
    pub kappa: i32,
    /// `omega` (spin) or `omega_tilde` (pseudospin) actually used.
    pub omega: u32,
    pub result: Result<EnergySolution, SpectraError>,
}

/// Errors for the energy solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    /// The quadratic in `E` has a negative discriminant.
    #[error("no real energy roots: quadratic discriminant = {discriminant}")]
    NoRealRoots { discriminant: f64 },
    /// `xi^2 < 0`: the centrifugal shape exponent is imaginary and the
    /// approximation scheme breaks down for these parameters.
    #[error("imaginary centrifugal exponent: xi^2 = {xi_squared}")]
    ImaginaryXi { xi_squared: f64 },
    /// Roots exist but none has a positive decay exponent.
    #[error("no root with a positive decay exponent")]
    NoValidRoot,
    /// The decay-exponent radicand is negative at the requested energy.
    #[error("complex decay exponent: radicand = {radicand}")]
    ComplexEpsilon { radicand: f64 },
    /// The free-limit radicand is negative: no bound state at this `n`.
    #[error("no bound state in the free limit for n = {n}")]
    NoBoundState { n: u32 },
    /// `kappa = 0` is not a valid spin-orbit quantum number.
    #[error("kappa = {kappa}: spin-orbit quantum number must be nonzero")]
    InvalidKappa { kappa: i32 },
    /// A sweep was requested with no `kappa` values.
    #[error("kappa list must not be empty")]
    EmptyKappaList,
    /// A centrifugal term with `omega != 0` needs a positive well radius.
    #[error("R0 = 0 is incompatible with a nonzero centrifugal strength")]
    RadiusRequired,
    /// The operation requires the other symmetry kind.
    #[error("operation requires {expected:?} symmetry")]
    WrongSymmetry { expected: SymmetryKind },
    /// Mapped and direct pseudospin quadratics disagreed (never expected;
    /// indicates a numerical pathology in the inputs).
    #[error("pseudospin cross-check failed: mapped {mapped} vs direct {direct}")]
    CrossCheckFailed { mapped: f64, direct: f64 },
}

/// Relative tolerance for the per-root sign-consistency flag.
const PRESQUARE_TOL: f64 = 1e-9;

/// Relative agreement required between the mapped and direct pseudospin
/// root computations.
const PSEUDOSPIN_CROSS_TOL: f64 = 1e-10;

/// Centrifugal shape exponent `xi = sqrt(1 + 4 omega a^2 D2 / (q R0)^2)`,
/// exactly 1 when `omega = 0` (no coefficients touched).
///
/// # Errors
///
/// [`SpectraError::RadiusRequired`] for `omega != 0` at `R0 = 0`;
/// [`SpectraError::ImaginaryXi`] when the radicand is negative.
pub fn xi_exponent(
    p: &PotentialParams,
    omega: f64,
    d: &PekerisCoefficients,
) -> Result<f64, SpectraError> {
    if omega == 0.0 {
        return Ok(1.0);
    }
    if p.r0 == 0.0 {
        return Err(SpectraError::RadiusRequired);
    }
    let xi2 = 1.0 + 4.0 * omega * p.a * p.a * d.d2 / (p.q * p.q * p.r0 * p.r0);
    if xi2 < 0.0 {
        return Err(SpectraError::ImaginaryXi { xi_squared: xi2 });
    }
    Ok(xi2.sqrt())
}

/// Internal quantities shared by the quadratic assembly and the flag
/// evaluation for the spin-symmetric equation (also used, after mapping,
/// for pseudospin).
struct SpinQuadratic {
    xi: f64,
    s: f64,
    /// `p = V0 / (hbar_c^2 * S)`.
    p_lin: f64,
    /// `u = p*(mass - A) + Q + R`.
    u_const: f64,
    /// `K = (a*hbar_c/q)^2`.
    k_big: f64,
    /// `hbar_c^2 * omega * D0 / R0^2` (zero when `omega = 0`).
    d0_term: f64,
}

fn spin_quadratic(
    p: &PotentialParams,
    n: u32,
    omega: f64,
    a_const: f64,
    mass: f64,
    d: &PekerisCoefficients,
) -> Result<SpinQuadratic, SpectraError> {
    let hc = p.hbar_c;
    let xi = xi_exponent(p, omega, d)?;
    let (d0_term, q_term) = if omega == 0.0 {
        // The centrifugal coefficients drop out entirely.
        (0.0, 0.0)
    } else {
        let r02 = p.r0 * p.r0;
        (
            hc * hc * omega * d.d0 / r02,
            omega * (p.q * d.d1 - d.d2) / (p.q * r02),
        )
    };
    let s = 1.0 + 2.0 * f64::from(n) + xi;
    let p_lin = p.v0 / (hc * hc * s);
    let u_const = p_lin * (mass - a_const) + q_term / s + p.q * s / (4.0 * p.a * p.a);
    let k_big = (p.a * hc / p.q) * (p.a * hc / p.q);
    Ok(SpinQuadratic { xi, s, p_lin, u_const, k_big, d0_term })
}

/// Solves `ca*E^2 + cb*E + cc = 0` with the numerically stable split,
/// returning roots in an unspecified order (one root if coincident).
fn solve_quadratic(ca: f64, cb: f64, cc: f64) -> Result<Vec<f64>, SpectraError> {
    let disc = cb * cb - 4.0 * ca * cc;
    if disc < 0.0 {
        return Err(SpectraError::NoRealRoots { discriminant: disc });
    }
    if disc == 0.0 {
        return Ok(vec![-cb / (2.0 * ca)]);
    }
    let sq = disc.sqrt();
    let qq = -0.5 * (cb + cb.signum() * sq);
    Ok(vec![qq / ca, cc / qq])
}

/// Decay exponent squared for the spin case at energy `e`
/// (`omega` already includes the Pekeris `D0` weight via `d0_term`).
fn spin_eps2(p: &PotentialParams, a_const: f64, mass: f64, d0_term: f64, e: f64) -> f64 {
    let hc = p.hbar_c;
    let a_over = p.a / hc;
    a_over * a_over * (mass * mass - e * e - a_const * (mass - e) + d0_term)
}

fn make_root_record(
    p: &PotentialParams,
    q: &SpinQuadratic,
    a_const: f64,
    mass: f64,
    e: f64,
) -> RootRecord {
    let eps2 = spin_eps2(p, a_const, mass, q.d0_term, e);
    let (epsilon, epsilon_positive) = if eps2 > 0.0 {
        (Some(eps2.sqrt()), true)
    } else if eps2 == 0.0 {
        (Some(0.0), false)
    } else {
        (None, false)
    };
    let presquare_consistent = match epsilon {
        Some(eps) => {
            let rhs = -(p.a * p.a / p.q) * (q.p_lin * e + q.u_const);
            (eps - rhs).abs() <= PRESQUARE_TOL * eps.abs().max(1.0)
        }
        None => false,
    };
    // Spin bound window: A < mass + E and E < mass.
    let bound_window = a_const < mass + e && e < mass;
    RootRecord { e, epsilon, epsilon_positive, presquare_consistent, bound_window }
}

/// Orders roots by decreasing distance from the accumulation edge and picks
/// the physical one: prefer roots passing every flag, then sign-consistent
/// ones, then any with positive decay exponent; ties go to the root farther
/// from the edge.
fn order_and_select(mut roots: Vec<RootRecord>, edge: f64) -> (Vec<RootRecord>, Option<usize>) {
    roots.sort_by(|a, b| {
        let da = (a.e - edge).abs();
        let db = (b.e - edge).abs();
        db.partial_cmp(&da).expect("finite energies")
    });
    let candidates: Vec<usize> =
        (0..roots.len()).filter(|&i| roots[i].epsilon_positive).collect();
    if candidates.is_empty() {
        return (roots, None);
    }
    let all_pass: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| roots[i].presquare_consistent && roots[i].bound_window)
        .collect();
    let consistent: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| roots[i].presquare_consistent)
        .collect();
    let pool = if !all_pass.is_empty() {
        all_pass
    } else if !consistent.is_empty() {
        consistent
    } else {
        candidates
    };
    // Roots are already sorted farthest-first, so the first pool entry wins.
    (roots, Some(pool[0]))
}

fn solve_spin_case(
    p: &PotentialParams,
    n: u32,
    omega: f64,
    a_const: f64,
    mass: f64,
    d: &PekerisCoefficients,
) -> Result<EnergySolution, SpectraError> {
    let q = spin_quadratic(p, n, omega, a_const, mass, d)?;
    let ca = 1.0 + q.k_big * q.p_lin * q.p_lin;
    let cb = -a_const + 2.0 * q.k_big * q.p_lin * q.u_const;
    let cc = a_const * mass - mass * mass - q.d0_term + q.k_big * q.u_const * q.u_const;
    let raw = solve_quadratic(ca, cb, cc)?;
    let records: Vec<RootRecord> =
        raw.into_iter().map(|e| make_root_record(p, &q, a_const, mass, e)).collect();
    let (roots, physical) = order_and_select(records, a_const - mass);
    if physical.is_none() {
        return Err(SpectraError::NoValidRoot);
    }
    Ok(EnergySolution { roots, physical, s_value: q.s, xi: q.xi })
}

/// Residual of the spin-symmetric energy equation at energy `e`:
/// `[m^2 - E^2 - A(m - E)] - [-hc^2 omega D0/R0^2 + K (pE + u)^2]`.
/// Accepted roots satisfy `|residual| <= 1e-9 * max(1, |LHS|)`.
pub fn spin_equation_residual(
    p: &PotentialParams,
    qn: &QuantumNumbers,
    sym: &SymmetryCase,
    d: &PekerisCoefficients,
    e: f64,
) -> Result<f64, SpectraError> {
    if sym.kind != SymmetryKind::Spin {
        return Err(SpectraError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    let q = spin_quadratic(p, qn.n, f64::from(qn.omega()), sym.a_const, sym.mass, d)?;
    let lhs = sym.mass * sym.mass - e * e - sym.a_const * (sym.mass - e);
    let bracket = q.p_lin * e + q.u_const;
    let rhs = -q.d0_term + q.k_big * bracket * bracket;
    Ok(lhs - rhs)
}

/// Both roots of the spin-symmetric energy equation.
///
/// # Errors
///
/// [`SpectraError::WrongSymmetry`] unless `sym.kind` is `Spin`;
/// [`SpectraError::ImaginaryXi`], [`SpectraError::NoRealRoots`],
/// [`SpectraError::NoValidRoot`], [`SpectraError::RadiusRequired`] as
/// applicable.
pub fn spin_energy_roots(
    p: &PotentialParams,
    qn: &QuantumNumbers,
    sym: &SymmetryCase,
    d: &PekerisCoefficients,
) -> Result<EnergySolution, SpectraError> {
    if sym.kind != SymmetryKind::Spin {
        return Err(SpectraError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    solve_spin_case(p, qn.n, f64::from(qn.omega()), sym.a_const, sym.mass, d)
}

/// Roots of the pseudospin-symmetric energy equation via the parameter
/// mapping `V0 -> -V0, A -> -A', omega -> omega_tilde`, with energies
/// negated afterwards. An independent direct assembly of the pseudospin
/// quadratic cross-checks every root to relative `1e-10`.
///
/// # Errors
///
/// As [`spin_energy_roots`], plus [`SpectraError::CrossCheckFailed`] if the
/// two assemblies disagree (not expected for finite inputs).
pub fn pseudospin_energy_roots(
    p: &PotentialParams,
    qn: &QuantumNumbers,
    sym: &SymmetryCase,
    d: &PekerisCoefficients,
) -> Result<EnergySolution, SpectraError> {
    if sym.kind != SymmetryKind::Pseudospin {
        return Err(SpectraError::WrongSymmetry { expected: SymmetryKind::Pseudospin });
    }
    let mapped_p = PotentialParams { v0: -p.v0, ..*p };
    let omega_t = f64::from(qn.omega_tilde());
    let mut sol = solve_spin_case(&mapped_p, qn.n, omega_t, -sym.a_const, sym.mass, d)?;
    for r in &mut sol.roots {
        r.e = -r.e;
    }
    let direct = pseudospin_direct_roots(p, qn, sym, d)?;
    for r in &sol.roots {
        let nearest = direct
            .iter()
            .copied()
            .min_by(|x, y| {
                (x - r.e).abs().partial_cmp(&(y - r.e).abs()).expect("finite roots")
            })
            .expect("direct quadratic returns roots");
        if (nearest - r.e).abs() > PSEUDOSPIN_CROSS_TOL * r.e.abs().max(1.0) {
            return Err(SpectraError::CrossCheckFailed { mapped: r.e, direct: nearest });
        }
    }
    Ok(sol)
}

/// Direct assembly of the pseudospin quadratic (no mapping), used as the
/// internal cross-check path and exposed for tests.
pub fn pseudospin_direct_roots(
    p: &PotentialParams,
    qn: &QuantumNumbers,
    sym: &SymmetryCase,
    d: &PekerisCoefficients,
) -> Result<Vec<f64>, SpectraError> {
    if sym.kind != SymmetryKind::Pseudospin {
        return Err(SpectraError::WrongSymmetry { expected: SymmetryKind::Pseudospin });
    }
    let hc = p.hbar_c;
    let omega_t = f64::from(qn.omega_tilde());
    let xi = xi_exponent(p, omega_t, d)?;
    let (d0_term, q_term) = if omega_t == 0.0 {
        (0.0, 0.0)
    } else {
        let r02 = p.r0 * p.r0;
        (
            hc * hc * omega_t * d.d0 / r02,
            omega_t * (p.q * d.d1 - d.d2) / (p.q * r02),
        )
    };
    let s = 1.0 + 2.0 * f64::from(qn.n) + xi;
    let pt = p.v0 / (hc * hc * s);
    let ut = -pt * (sym.mass + sym.a_const) + q_term / s + p.q * s / (4.0 * p.a * p.a);
    let k_big = (p.a * hc / p.q) * (p.a * hc / p.q);
    let ca = 1.0 + k_big * pt * pt;
    let cb = -sym.a_const + 2.0 * k_big * pt * ut;
    let cc = -sym.a_const * sym.mass - sym.mass * sym.mass - d0_term + k_big * ut * ut;
    solve_quadratic(ca, cb, cc)
}

/// Roots of the exact s-wave energy equation (`kappa = -1`, spin case).
///
/// This path expands the printed s-wave relation directly (independent of
/// the general solver): with `cE = a V0 / (q (1+n) hc^2)` and
/// `d0 = cE (mass - A) + (1+n)/a`,
///
/// ```text
/// mass^2 - E^2 - A(mass - E) = (hc^2/4) (cE*E + d0)^2.
/// ```
pub fn swave_energy_roots(
    p: &PotentialParams,
    n: u32,
    sym: &SymmetryCase,
) -> Result<EnergySolution, SpectraError> {
    if sym.kind != SymmetryKind::Spin {
        return Err(SpectraError::WrongSymmetry { expected: SymmetryKind::Spin });
    }
    let hc = p.hbar_c;
    let mass = sym.mass;
    let a_const = sym.a_const;
    let nf1 = f64::from(n) + 1.0;
    let c_e = p.a * p.v0 / (p.q * nf1 * hc * hc);
    let d0 = c_e * (mass - a_const) + nf1 / p.a;
    let quarter = hc * hc / 4.0;
    let ca = 1.0 + quarter * c_e * c_e;
    let cb = -a_const + 2.0 * quarter * c_e * d0;
    let cc = a_const * mass - mass * mass + quarter * d0 * d0;
    let raw = solve_quadratic(ca, cb, cc)?;
    let records: Vec<RootRecord> = raw
        .into_iter()
        .map(|e| {
            let rad = mass * mass - e * e - a_const * (mass - e);
            let (epsilon, epsilon_positive) = if rad > 0.0 {
                (Some(p.a / hc * rad.sqrt()), true)
            } else if rad == 0.0 {
                (Some(0.0), false)
            } else {
                (None, false)
            };
            let presquare_consistent = match epsilon {
                Some(eps) => {
                    let rhs = -(p.a / 2.0) * (c_e * e + d0);
                    (eps - rhs).abs() <= PRESQUARE_TOL * eps.abs().max(1.0)
                }
                None => false,
            };
            let bound_window = a_const < mass + e && e < mass;
            RootRecord { e, epsilon, epsilon_positive, presquare_consistent, bound_window }
        })
        .collect();
    let (roots, physical) = order_and_select(records, a_const - mass);
    if physical.is_none() {
        return Err(SpectraError::NoValidRoot);
    }
    Ok(EnergySolution { roots, physical, s_value: 2.0 * nf1, xi: 1.0 })
}

/// Residual of the s-wave equation at energy `e` (same normalization as
/// [`spin_equation_residual`]).
pub fn swave_equation_residual(
    p: &PotentialParams,
    n: u32,
    sym: &SymmetryCase,
    e: f64,
) -> f64 {
    let hc = p.hbar_c;
    let nf1 = f64::from(n) + 1.0;
    let c_e = p.a * p.v0 / (p.q * nf1 * hc * hc);
    let d0 = c_e * (sym.mass - sym.a_const) + nf1 / p.a;
    let lhs = sym.mass * sym.mass - e * e - sym.a_const * (sym.mass - e);
    let bracket = c_e * e + d0;
    lhs - hc * hc / 4.0 * bracket * bracket
}

/// Scans `[e_lo, e_hi]` for sign changes of the s-wave residual and bisects
/// each, as a bracketing cross-check on the closed quadratic solution.
pub fn swave_roots_by_scan(
    p: &PotentialParams,
    n: u32,
    sym: &SymmetryCase,
    e_lo: f64,
    e_hi: f64,
    steps: usize,
) -> Vec<f64> {
    let f = |e: f64| swave_equation_residual(p, n, sym, e);
    let mut roots = Vec::new();
    let mut prev_e = e_lo;
    let mut prev_f = f(e_lo);
    for i in 1..=steps {
        let e = e_lo + (e_hi - e_lo) * (i as f64) / (steps as f64);
        let fe = f(e);
        if prev_f == 0.0 {
            roots.push(prev_e);
        } else if prev_f * fe < 0.0 {
            let (mut lo, mut hi) = (prev_e, e);
            let mut flo = prev_f;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if flo * fm <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_e = e;
        prev_f = fe;
    }
    roots
}

/// Roots of the Klein-Gordon-limit equation (`A = 0`, equal scalar and
/// vector couplings), with the bound window replaced by
/// `E^2 <= mass^2 + omega hc^2 D0 / R0^2`.
pub fn kg_energy_roots(
    p: &PotentialParams,
    qn: &QuantumNumbers,
    mass: f64,
    d: &PekerisCoefficients,
) -> Result<EnergySolution, SpectraError> {
    let sym = SymmetryCase::spin(0.0, mass);
    let EnergySolution { mut roots, s_value, xi, .. } =
        spin_energy_roots(p, qn, &sym, d)?;
    let omega = f64::from(qn.omega());
    let threshold = if omega == 0.0 {
        mass * mass
    } else {
        mass * mass + p.hbar_c * p.hbar_c * omega * d.d0 / (p.r0 * p.r0)
    };
    for r in &mut roots {
        r.bound_window = r.e * r.e <= threshold;
    }
    let (roots, physical) = order_and_select(roots, -mass);
    if physical.is_none() {
        return Err(SpectraError::NoValidRoot);
    }
    Ok(EnergySolution { roots, physical, s_value, xi })
}

/// Free-limit energies `E = +-(1/2a) sqrt(4 a^2 mass^2 - hc^2 (n+1)^2)`,
/// evaluated in factored form so the `a = hbar_c / mass` anchor values are
/// exact in floating point.
///
/// # Errors
///
/// [`SpectraError::NoBoundState`] when the radicand is negative.
pub fn free_limit_energy(
    n: u32,
    mass: f64,
    a: f64,
    hbar_c: f64,
) -> Result<(f64, f64), SpectraError> {
    let s = 2.0 * a * mass;
    let t = hbar_c * (f64::from(n) + 1.0);
    let rad = (s - t) * (s + t);
    if rad < 0.0 {
        return Err(SpectraError::NoBoundState { n });
    }
    let e = rad.sqrt() / (2.0 * a);
    Ok((e, -e))
}

/// Exact s-wave nonrelativistic level (no centrifugal term):
/// `E_n = -(hbar^2 a^2 / 8 mu) [2 mu V0/(hbar^2 q (1+n)) + (1+n)/a^2]^2`.
///
/// Natural units with `c = 1`, so `hbar` is `p.hbar_c` numerically.
pub fn nonrel_swave_energy(p: &PotentialParams, n: u32, mu: f64) -> f64 {
    let hb = p.hbar_c;
    let nf1 = f64::from(n) + 1.0;
    let bracket = 2.0 * mu * p.v0 / (hb * hb * p.q * nf1) + nf1 / (p.a * p.a);
    -hb * hb * p.a * p.a / (8.0 * mu) * bracket * bracket
}

/// Nonrelativistic level for arbitrary `l` with the Pekeris-approximated
/// centrifugal term; reduces exactly to [`nonrel_swave_energy`] at `l = 0`.
///
/// # Errors
///
/// [`SpectraError::ImaginaryXi`], [`SpectraError::RadiusRequired`].
pub fn nonrel_energy(
    p: &PotentialParams,
    n: u32,
    l: u32,
    mu: f64,
    d: &PekerisCoefficients,
) -> Result<NonrelLevel, SpectraError> {
    let hb = p.hbar_c;
    let omega = f64::from(l) * (f64::from(l) + 1.0);
    let xi1 = xi_exponent(p, omega, d)?;
    let (offset, q_term) = if omega == 0.0 {
        (0.0, 0.0)
    } else {
        let r02 = p.r0 * p.r0;
        (
            hb * hb * omega * d.d0 / (2.0 * mu * r02),
            omega * (p.q * d.d1 - d.d2) / (p.q * p.q * r02),
        )
    };
    let s1 = 1.0 + 2.0 * f64::from(n) + xi1;
    let num = 2.0 * mu * p.v0 / (hb * hb * p.q) + q_term;
    let bracket = num / s1 + s1 / (4.0 * p.a * p.a);
    let e = offset - hb * hb * p.a * p.a / (2.0 * mu) * bracket * bracket;
    Ok(NonrelLevel { e, bound: e < offset, s1, xi1 })
}

/// Decay exponent for the nonrelativistic wavefunction at energy `e`:
/// `eps = a sqrt(-2 mu E / hbar^2 + l(l+1) D0 / R0^2)`.
pub fn epsilon_nonrel(
    p: &PotentialParams,
    l: u32,
    mu: f64,
    e: f64,
    d: &PekerisCoefficients,
) -> Result<f64, SpectraError> {
    let hb = p.hbar_c;
    let omega = f64::from(l) * (f64::from(l) + 1.0);
    let cent = if omega == 0.0 {
        0.0
    } else {
        if p.r0 == 0.0 {
            return Err(SpectraError::RadiusRequired);
        }
        omega * d.d0 / (p.r0 * p.r0)
    };
    let rad = -2.0 * mu * e / (hb * hb) + cent;
    if rad < 0.0 {
        return Err(SpectraError::ComplexEpsilon { radicand: rad });
    }
    Ok(p.a * rad.sqrt())
}

/// Decay exponent (`epsilon` or `epsilon_tilde`) at an arbitrary energy.
///
/// # Errors
///
/// [`SpectraError::ComplexEpsilon`] when the radicand is negative;
/// [`SpectraError::RadiusRequired`] for `omega != 0` at `R0 = 0`.
pub fn epsilon_spin(
    p: &PotentialParams,
    qn: &QuantumNumbers,
    sym: &SymmetryCase,
    e: f64,
    d: &PekerisCoefficients,
) -> Result<f64, SpectraError> {
    let hc = p.hbar_c;
    let (omega, coupling) = match sym.kind {
        SymmetryKind::Spin => (
            f64::from(qn.omega()),
            sym.mass * sym.mass - e * e - sym.a_const * (sym.mass - e),
        ),
        SymmetryKind::Pseudospin => (
            f64::from(qn.omega_tilde()),
            sym.mass * sym.mass - e * e + sym.a_const * (sym.mass + e),
        ),
    };
    let cent = if omega == 0.0 {
        0.0
    } else {
        if p.r0 == 0.0 {
            return Err(SpectraError::RadiusRequired);
        }
        omega * d.d0 / (p.r0 * p.r0)
    };
    let rad = (p.a / hc) * (p.a / hc) * coupling + p.a * p.a * cent;
    if rad < 0.0 {
        return Err(SpectraError::ComplexEpsilon { radicand: rad });
    }
    Ok(rad.sqrt())
}

/// Builds the hypergeometric-type template for the radial equation at a
/// candidate energy `e`, for handoff to [`crate::nu`].
pub fn ws_template(
    p: &PotentialParams,
    qn: &QuantumNumbers,
    sym: &SymmetryCase,
    d: &PekerisCoefficients,
    e: f64,
) -> Result<NuTemplate, SpectraError> {
    let hc = p.hbar_c;
    let a2 = p.a * p.a;
    let (omega, eps2_core, gamma) = match sym.kind {
        SymmetryKind::Spin => (
            f64::from(qn.omega()),
            sym.mass * sym.mass - e * e - sym.a_const * (sym.mass - e),
            a2 * p.v0 * (sym.mass + e - sym.a_const) / (hc * hc),
        ),
        SymmetryKind::Pseudospin => (
            f64::from(qn.omega_tilde()),
            sym.mass * sym.mass - e * e + sym.a_const * (sym.mass + e),
            -a2 * p.v0 * (sym.mass - e + sym.a_const) / (hc * hc),
        ),
    };
    let cent = if omega == 0.0 {
        0.0
    } else {
        if p.r0 == 0.0 {
            return Err(SpectraError::RadiusRequired);
        }
        omega * a2 / (p.r0 * p.r0)
    };
    let eps2 = a2 / (hc * hc) * eps2_core + cent * d.d0;
    let b1 = p.q * p.q * eps2 - p.q * gamma - cent * (p.q * d.d1 - d.d2);
    let b2 = 2.0 * p.q * eps2 - gamma - cent * d.d1;
    Ok(NuTemplate { c1: 1.0, c2: p.q, c3: p.q, b1, b2, b3: eps2 })
}

/// Dense `(n, kappa)` sweep with per-row error annotation; never aborts on
/// a per-cell failure. Rows are ordered by ascending `n`, then ascending
/// `kappa` (duplicates removed).
pub fn spectrum_table(
    p: &PotentialParams,
    sym: &SymmetryCase,
    n_max: u32,
    kappa_list: &[i32],
    d: &PekerisCoefficients,
) -> Result<Vec<SpectrumRow>, SpectraError> {
    if kappa_list.is_empty() {
        return Err(SpectraError::EmptyKappaList);
    }
    let mut kappas: Vec<i32> = kappa_list.to_vec();
    for &k in &kappas {
        if k == 0 {
            return Err(SpectraError::InvalidKappa { kappa: k });
        }
    }
    kappas.sort_unstable();
    kappas.dedup();
    let mut rows = Vec::with_capacity((n_max as usize + 1) * kappas.len());
    for n in 0..=n_max {
        for &kappa in &kappas {
            let qn = QuantumNumbers { n, kappa };
            let (omega, result) = match sym.kind {
                SymmetryKind::Spin => (qn.omega(), spin_energy_roots(p, &qn, sym, d)),
                SymmetryKind::Pseudospin => {
                    (qn.omega_tilde(), pseudospin_energy_roots(p, &qn, sym, d))
                }
            };
            rows.push(SpectrumRow { n, kappa, omega, result });
        }
    }
    Ok(rows)
}
