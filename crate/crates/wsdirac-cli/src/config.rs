//! Run configuration: strict JSON parsing plus field-level validation.
//!
//! Unknown keys are rejected everywhere so a typo in a physics parameter
//! cannot silently fall back to a default. Every validation failure names
//! the offending field as a JSON-pointer path together with the violated
//! bound.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use wsdirac::potential::{
    pekeris_paper, pekeris_taylor, PekerisCoefficients, PotentialError, PotentialParams,
};
use wsdirac::spectra::SymmetryCase;

/// `n_max` cap: keeps sweep sizes and factorial-scale intermediates sane.
pub const N_MAX_LIMIT: u32 = 200;

/// Default number of grid points for the `wavefunction` command.
pub const DEFAULT_GRID_POINTS: u32 = 400;

/// Whole-run configuration, one JSON document per run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub potential: PotentialBlock,
    pub symmetry: SymmetryBlock,
    pub quantum: QuantumBlock,
    #[serde(default)]
    pub pekeris_source: PekerisChoice,
    #[serde(default)]
    pub output: OutputBlock,
    /// Shooting-method overrides for the `verify` command.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
    /// State and grid selection for the `wavefunction` command.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wavefunction: Option<WavefunctionBlock>,
}

/// Well parameters. `R0` and `hbar_c` may be omitted; the defaults are
/// `10 a` (logged at warn level) and 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialBlock {
    #[serde(rename = "V0")]
    pub v0: f64,
    pub q: f64,
    pub a: f64,
    #[serde(rename = "R0", default, skip_serializing_if = "Option::is_none")]
    pub r0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hbar_c: Option<f64>,
}

/// Which coupling combination is held constant, and at what value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetryBlock {
    pub kind: SymmetryChoice,
    #[serde(rename = "A")]
    pub a_const: f64,
    pub mass: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryChoice {
    Spin,
    Pseudospin,
}

/// Quantum-number sweep for the `spectrum` and `verify` commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumBlock {
    pub n_max: u32,
    pub kappa_list: Vec<i32>,
}

/// Centrifugal coefficient derivation to feed the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PekerisChoice {
    /// Fixed closed-form set, kept for reproducing historical tabulations.
    Paper,
    /// Derivative-matched set (default).
    Taylor,
}

impl Default for PekerisChoice {
    fn default() -> Self {
        Self::Taylor
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default)]
    pub format: FormatChoice,
    /// Artifact path; stdout when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

impl Default for OutputBlock {
    fn default() -> Self {
        Self { format: FormatChoice::default(), path: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormatChoice {
    Csv,
    Json,
}

impl Default for FormatChoice {
    fn default() -> Self {
        Self::Csv
    }
}

/// Optional knobs for the shooting-method cross-check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleBlock {
    /// Integrator relative tolerance, in [1e-14, 1e-3].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel_tol: Option<f64>,
    /// Outer boundary beyond `R0`, in surface thicknesses, in [5, 200].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_max_extra: Option<f64>,
    /// Bracket half-width fractions tried in order, each in (0, 1).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket_fractions: Option<Vec<f64>>,
}

/// State selection and radial grid for the `wavefunction` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WavefunctionBlock {
    pub n: u32,
    pub kappa: i32,
    /// Grid start; defaults to the inner domain edge.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_min: Option<f64>,
    /// Grid end; defaults to a tail cutoff derived from the decay exponent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<u32>,
}

/// Configuration failures (exit code 2).
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Parse(String),
    #[error("{}", .0.join("; "))]
    Invalid(Vec<String>),
}

impl RunConfig {
    /// Field-level validation. Returns one message per violation, each a
    /// JSON-pointer path plus the violated bound.
    pub fn validate(&self) -> Vec<String> {
        let mut issues = Vec::new();
        let p = &self.potential;
        if !p.v0.is_finite() {
            issues.push(format!("/potential/V0: must be finite (got {})", p.v0));
        }
        if !p.q.is_finite() || p.q == 0.0 {
            issues.push(format!("/potential/q: must be finite and nonzero (got {})", p.q));
        }
        if !p.a.is_finite() || !(p.a > 0.0) {
            issues.push(format!("/potential/a: must be positive (got {})", p.a));
        }
        if let Some(r0) = p.r0 {
            if !r0.is_finite() || !(r0 >= 0.0) {
                issues.push(format!("/potential/R0: must be nonnegative (got {r0})"));
            }
        }
        if let Some(hc) = p.hbar_c {
            if !hc.is_finite() || !(hc > 0.0) {
                issues.push(format!("/potential/hbar_c: must be positive (got {hc})"));
            }
        }
        let s = &self.symmetry;
        if !s.mass.is_finite() || !(s.mass > 0.0) {
            issues.push(format!("/symmetry/mass: must be positive (got {})", s.mass));
        }
        if !s.a_const.is_finite() {
            issues.push(format!("/symmetry/A: must be finite (got {})", s.a_const));
        }
        let qb = &self.quantum;
        if qb.n_max > N_MAX_LIMIT {
            issues.push(format!(
                "/quantum/n_max: must be at most {N_MAX_LIMIT} (got {})",
                qb.n_max
            ));
        }
        if qb.kappa_list.is_empty() {
            issues.push("/quantum/kappa_list: must be nonempty".to_string());
        }
        for (i, &k) in qb.kappa_list.iter().enumerate() {
            if k == 0 {
                issues.push(format!("/quantum/kappa_list/{i}: kappa must be a nonzero integer"));
            }
        }
        if let Some(o) = &self.oracle {
            if let Some(t) = o.rel_tol {
                if !t.is_finite() || !(1e-14..=1e-3).contains(&t) {
                    issues.push(format!("/oracle/rel_tol: must lie in [1e-14, 1e-3] (got {t})"));
                }
            }
            if let Some(x) = o.r_max_extra {
                if !x.is_finite() || !(5.0..=200.0).contains(&x) {
                    issues.push(format!("/oracle/r_max_extra: must lie in [5, 200] (got {x})"));
                }
            }
            if let Some(fr) = &o.bracket_fractions {
                if fr.is_empty() {
                    issues.push("/oracle/bracket_fractions: must be nonempty".to_string());
                }
                for (i, &f) in fr.iter().enumerate() {
                    if !f.is_finite() || !(f > 0.0 && f < 1.0) {
                        issues.push(format!(
                            "/oracle/bracket_fractions/{i}: must lie in (0, 1) (got {f})"
                        ));
                    }
                }
            }
        }
        if let Some(w) = &self.wavefunction {
            if w.kappa == 0 {
                issues.push("/wavefunction/kappa: kappa must be a nonzero integer".to_string());
            }
            if w.n > N_MAX_LIMIT {
                issues.push(format!(
                    "/wavefunction/n: must be at most {N_MAX_LIMIT} (got {})",
                    w.n
                ));
            }
            if let Some(pts) = w.points {
                if pts < 2 {
                    issues.push(format!("/wavefunction/points: must be at least 2 (got {pts})"));
                }
            }
            if let Some(rm) = w.r_min {
                if !rm.is_finite() || !(rm >= 0.0) {
                    issues.push(format!("/wavefunction/r_min: must be nonnegative (got {rm})"));
                }
            }
            if let Some(rx) = w.r_max {
                if !rx.is_finite() || !(rx > 0.0) {
                    issues.push(format!("/wavefunction/r_max: must be positive (got {rx})"));
                }
            }
            if let (Some(rm), Some(rx)) = (w.r_min, w.r_max) {
                if !(rm < rx) {
                    issues.push(format!(
                        "/wavefunction/r_min: must be below r_max (got {rm} >= {rx})"
                    ));
                }
            }
        }
        if let Some(path) = &self.output.path {
            if path.is_empty() {
                issues.push("/output/path: must be nonempty when present".to_string());
            }
        }
        issues
    }

    /// Well parameters with defaults applied: `R0 = 10 a` when omitted
    /// (logged), `hbar_c = 1`.
    pub fn potential_params(&self) -> Result<PotentialParams, PotentialError> {
        let r0 = match self.potential.r0 {
            Some(r0) => r0,
            None => {
                let r0 = 10.0 * self.potential.a;
                log::warn!("potential.R0 missing; defaulting to 10*a = {r0}");
                r0
            }
        };
        PotentialParams::with_hbar_c(
            self.potential.v0,
            self.potential.q,
            self.potential.a,
            r0,
            self.potential.hbar_c.unwrap_or(1.0),
        )
    }

    pub fn symmetry_case(&self) -> SymmetryCase {
        match self.symmetry.kind {
            SymmetryChoice::Spin => SymmetryCase::spin(self.symmetry.a_const, self.symmetry.mass),
            SymmetryChoice::Pseudospin => {
                SymmetryCase::pseudospin(self.symmetry.a_const, self.symmetry.mass)
            }
        }
    }

    /// Coefficients from the configured source. The derivative-matched set
    /// fails at `q = -1`; the error carries the reason.
    pub fn pekeris(&self, p: &PotentialParams) -> Result<PekerisCoefficients, PotentialError> {
        match self.pekeris_source {
            PekerisChoice::Paper => Ok(pekeris_paper(p)),
            PekerisChoice::Taylor => pekeris_taylor(p),
        }
    }
}

/// Parses and validates a JSON configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let cfg: RunConfig =
        serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    let issues = cfg.validate();
    if issues.is_empty() {
        Ok(cfg)
    } else {
        Err(ConfigError::Invalid(issues))
    }
}

/// Reads and parses the configuration at `path`.
pub fn load_config(path: &Path) -> Result<RunConfig, ConfigError> {
    let text = fs::read_to_string(path)
        .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
    parse_config(&text)
}
