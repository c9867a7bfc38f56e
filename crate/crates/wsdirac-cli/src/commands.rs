//! Renderers for the five subcommands. Each returns the complete artifact
//! as a string; the caller decides where it goes.

use serde::Serialize;
use thiserror::Error;

use wsdirac::oracle::{verify_spectrum_with, OracleError, VerifyOptions, VerifyRecord};
use wsdirac::potential::{
    centrifugal_error, pekeris_discrepancy, pekeris_paper, pekeris_taylor, PotentialError,
    PotentialParams,
};
use wsdirac::spectra::{
    pseudospin_energy_roots, spectrum_table, spin_energy_roots, swave_energy_roots,
    QuantumNumbers, SpectraError, SpectrumRow, SymmetryKind,
};
use wsdirac::wavefunctions::{
    default_r_max, lower_spinor_g_from_f, lower_spinor_g_pseudospin, profile_inner_edge,
    upper_spinor_f, upper_spinor_f_pseudospin, SpinorState, WavefunctionError,
};

use crate::config::{FormatChoice, RunConfig, DEFAULT_GRID_POINTS};
use crate::format::{csv_line, fixed6, opt_sig9, sig9};

/// Numerical failures after a valid configuration (exit code 3).
#[derive(Debug, Error)]
pub enum RunError {
    #[error("potential: {0}")]
    Potential(#[from] PotentialError),
    #[error("spectra: {0}")]
    Spectra(#[from] SpectraError),
    #[error("wavefunction: {0}")]
    Wavefunction(#[from] WavefunctionError),
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}

/// Shape values swept by `swave-table`, in presentation order.
pub const SWAVE_TABLE_SHAPES: [f64; 4] = [1.0, 2.0, -1.0, -2.0];

/// Offset (in thicknesses) between the potential pole and the default
/// inner grid edge of the `wavefunction` command.
const GRID_POLE_OFFSET: f64 = 1e-3;

fn to_pretty<T: Serialize>(value: &T) -> Result<String, RunError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn finite_opt(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

#[derive(Serialize)]
struct RootJson {
    e: f64,
    epsilon: Option<f64>,
    epsilon_positive: bool,
    presquare_consistent: bool,
    bound_window: bool,
}

#[derive(Serialize)]
struct SpectrumRowJson {
    n: u32,
    kappa: i32,
    omega: u32,
    roots: Vec<RootJson>,
    physical: Option<usize>,
    s_value: Option<f64>,
    xi: Option<f64>,
    error: Option<String>,
}

fn spectrum_row_json(row: &SpectrumRow) -> SpectrumRowJson {
    match &row.result {
        Ok(sol) => SpectrumRowJson {
            n: row.n,
            kappa: row.kappa,
            omega: row.omega,
            roots: sol
                .roots
                .iter()
                .map(|r| RootJson {
                    e: r.e,
                    epsilon: r.epsilon,
                    epsilon_positive: r.epsilon_positive,
                    presquare_consistent: r.presquare_consistent,
                    bound_window: r.bound_window,
                })
                .collect(),
            physical: sol.physical,
            s_value: Some(sol.s_value),
            xi: Some(sol.xi),
            error: None,
        },
        Err(e) => SpectrumRowJson {
            n: row.n,
            kappa: row.kappa,
            omega: row.omega,
            roots: Vec::new(),
            physical: None,
            s_value: None,
            xi: None,
            error: Some(e.to_string()),
        },
    }
}

const SPECTRUM_HEADER: &str = "n,kappa,omega,E1,E2,eps1,eps2,eps_positive1,eps_positive2,\
presquare1,presquare2,window1,window2,physical,status";

fn spectrum_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from(SPECTRUM_HEADER);
    out.push('\n');
    for row in rows {
        let mut fields =
            vec![row.n.to_string(), row.kappa.to_string(), row.omega.to_string()];
        match &row.result {
            Ok(sol) => {
                let r1 = sol.roots.first();
                let r2 = sol.roots.get(1);
                fields.push(r1.map(|r| sig9(r.e)).unwrap_or_default());
                fields.push(r2.map(|r| sig9(r.e)).unwrap_or_default());
                fields.push(opt_sig9(r1.and_then(|r| r.epsilon)));
                fields.push(opt_sig9(r2.and_then(|r| r.epsilon)));
                for flag in [
                    r1.map(|r| r.epsilon_positive),
                    r2.map(|r| r.epsilon_positive),
                    r1.map(|r| r.presquare_consistent),
                    r2.map(|r| r.presquare_consistent),
                    r1.map(|r| r.bound_window),
                    r2.map(|r| r.bound_window),
                ] {
                    fields.push(flag.map(|b| b.to_string()).unwrap_or_default());
                }
                fields.push(sol.physical.map(|i| i.to_string()).unwrap_or_default());
                fields.push("ok".to_string());
            }
            Err(e) => {
                fields.extend(std::iter::repeat(String::new()).take(11));
                fields.push(e.to_string());
            }
        }
        out.push_str(&csv_line(&fields));
        out.push('\n');
    }
    out
}

/// Closed-form energy sweep over the configured `(n, kappa)` grid.
pub fn spectrum(cfg: &RunConfig) -> Result<String, RunError> {
    let p = cfg.potential_params()?;
    let sym = cfg.symmetry_case();
    let d = cfg.pekeris(&p)?;
    let rows = spectrum_table(&p, &sym, cfg.quantum.n_max, &cfg.quantum.kappa_list, &d)?;
    match cfg.output.format {
        FormatChoice::Csv => Ok(spectrum_csv(&rows)),
        FormatChoice::Json => {
            let rows: Vec<SpectrumRowJson> = rows.iter().map(spectrum_row_json).collect();
            to_pretty(&rows)
        }
    }
}

#[derive(Serialize)]
struct SwaveRowJson {
    n: u32,
    q: f64,
    #[serde(rename = "E1")]
    e1: Option<f64>,
    #[serde(rename = "E2")]
    e2: Option<f64>,
}

/// Four-shape s-wave energy table; rows are `n`, columns interleave the
/// two roots per shape, 6-decimal presentation. The configured shape is
/// superseded by the fixed sweep.
pub fn swave_table(cfg: &RunConfig) -> Result<String, RunError> {
    let base = cfg.potential_params()?;
    let sym = cfg.symmetry_case();
    if sym.kind != SymmetryKind::Spin {
        return Err(SpectraError::WrongSymmetry { expected: SymmetryKind::Spin }.into());
    }
    log::debug!("swave-table sweeps q over {SWAVE_TABLE_SHAPES:?}; potential.q is unused");
    let mut columns: Vec<Vec<(Option<f64>, Option<f64>)>> = Vec::new();
    for q in SWAVE_TABLE_SHAPES {
        let p = PotentialParams::with_hbar_c(base.v0, q, base.a, base.r0, base.hbar_c)?;
        let mut col = Vec::with_capacity(cfg.quantum.n_max as usize + 1);
        for n in 0..=cfg.quantum.n_max {
            let sol = swave_energy_roots(&p, n, &sym)?;
            col.push((sol.roots.first().map(|r| r.e), sol.roots.get(1).map(|r| r.e)));
        }
        columns.push(col);
    }
    match cfg.output.format {
        FormatChoice::Csv => {
            let mut out =
                String::from("n,E1_q1,E2_q1,E1_q2,E2_q2,E1_qm1,E2_qm1,E1_qm2,E2_qm2\n");
            for n in 0..=cfg.quantum.n_max {
                let mut fields = vec![n.to_string()];
                for col in &columns {
                    let (e1, e2) = col[n as usize];
                    fields.push(e1.map(fixed6).unwrap_or_default());
                    fields.push(e2.map(fixed6).unwrap_or_default());
                }
                out.push_str(&csv_line(&fields));
                out.push('\n');
            }
            Ok(out)
        }
        FormatChoice::Json => {
            let mut rows = Vec::new();
            for n in 0..=cfg.quantum.n_max {
                for (qi, q) in SWAVE_TABLE_SHAPES.iter().enumerate() {
                    let (e1, e2) = columns[qi][n as usize];
                    rows.push(SwaveRowJson { n, q: *q, e1, e2 });
                }
            }
            to_pretty(&rows)
        }
    }
}

#[derive(Serialize)]
struct WavefunctionPointJson {
    r: f64,
    #[serde(rename = "F")]
    f: f64,
    #[serde(rename = "G")]
    g: f64,
}

/// Radial spinor components of one state on a grid, normalized by
/// quadrature.
pub fn wavefunction(cfg: &RunConfig) -> Result<String, RunError> {
    let block = cfg
        .wavefunction
        .as_ref()
        .expect("the dispatcher requires the wavefunction block for this command");
    let p = cfg.potential_params()?;
    let sym = cfg.symmetry_case();
    let d = cfg.pekeris(&p)?;
    let qn = QuantumNumbers::new(block.n, block.kappa)?;
    let sol = match sym.kind {
        SymmetryKind::Spin => spin_energy_roots(&p, &qn, &sym, &d)?,
        SymmetryKind::Pseudospin => pseudospin_energy_roots(&p, &qn, &sym, &d)?,
    };
    let e = sol.physical_energy()?;
    let state = SpinorState::new(p, qn, sym, e, &d)?.normalized_by_quadrature()?;
    // Default grid: the inner edge of the oscillatory branch (nudged off
    // the pole for inverted shapes), matching the normalization domain.
    // The closed form grows without bound further in, and the lower
    // component carries a kappa/r term, so the start stays positive.
    let r_lo = block.r_min.unwrap_or_else(|| {
        let pole_shift = if p.q < 0.0 { GRID_POLE_OFFSET * p.a } else { 0.0 };
        (profile_inner_edge(&p) + pole_shift).max(GRID_POLE_OFFSET * p.a)
    });
    let r_hi = block.r_max.unwrap_or_else(|| default_r_max(&state));
    let points = block.points.unwrap_or(DEFAULT_GRID_POINTS).max(2);
    let mut samples = Vec::with_capacity(points as usize);
    for i in 0..points {
        let t = f64::from(i) / f64::from(points - 1);
        let r = r_lo + (r_hi - r_lo) * t;
        let (f, g) = match sym.kind {
            SymmetryKind::Spin => {
                (upper_spinor_f(&state, r)?, lower_spinor_g_from_f(&state, r)?)
            }
            SymmetryKind::Pseudospin => (
                upper_spinor_f_pseudospin(&state, r)?,
                lower_spinor_g_pseudospin(&state, r)?,
            ),
        };
        samples.push(WavefunctionPointJson { r, f, g });
    }
    match cfg.output.format {
        FormatChoice::Csv => {
            let mut out = String::from("r,F,G\n");
            for s in &samples {
                out.push_str(&csv_line(&[sig9(s.r), sig9(s.f), sig9(s.g)]));
                out.push('\n');
            }
            Ok(out)
        }
        FormatChoice::Json => to_pretty(&samples),
    }
}

#[derive(Serialize)]
struct VerifyRowJson {
    n: u32,
    kappa: i32,
    omega: u32,
    r_min: Option<f64>,
    r_max: Option<f64>,
    e_closed: Option<f64>,
    closed_failure: Option<String>,
    e_oracle: Option<f64>,
    abs_diff: Option<f64>,
    rel_diff: Option<f64>,
    nodes: Option<usize>,
    node_match: Option<bool>,
    mismatch: Option<f64>,
    bracket_fraction: Option<f64>,
    oracle_failure: Option<String>,
}

fn verify_row_json(rec: &VerifyRecord) -> VerifyRowJson {
    let (e_closed, closed_failure) = match &rec.closed {
        Ok(e) => (Some(*e), None),
        Err(err) => (None, Some(err.to_string())),
    };
    let (cmp, oracle_failure) = match &rec.oracle {
        Ok(c) => (Some(c), None),
        Err(err) => (None, Some(err.to_string())),
    };
    VerifyRowJson {
        n: rec.n,
        kappa: rec.kappa,
        omega: rec.omega,
        r_min: finite_opt(rec.r_min),
        r_max: finite_opt(rec.r_max),
        e_closed,
        closed_failure,
        e_oracle: cmp.map(|c| c.e_oracle),
        abs_diff: cmp.map(|c| c.abs_diff),
        rel_diff: cmp.map(|c| c.rel_diff),
        nodes: cmp.map(|c| c.nodes),
        node_match: cmp.map(|c| c.node_match),
        mismatch: cmp.map(|c| c.mismatch),
        bracket_fraction: cmp.map(|c| c.bracket_fraction),
        oracle_failure,
    }
}

const VERIFY_HEADER: &str = "n,kappa,omega,r_min,r_max,E_closed,E_oracle,abs_diff,rel_diff,\
nodes,node_match,mismatch,bracket_fraction,status";

fn verify_csv(rows: &[VerifyRowJson]) -> String {
    let mut out = String::from(VERIFY_HEADER);
    out.push('\n');
    for row in rows {
        let status = match (&row.closed_failure, &row.oracle_failure) {
            (None, None) => "ok".to_string(),
            (Some(c), _) => format!("closed: {c}"),
            (None, Some(o)) => format!("oracle: {o}"),
        };
        let fields = vec![
            row.n.to_string(),
            row.kappa.to_string(),
            row.omega.to_string(),
            opt_sig9(row.r_min),
            opt_sig9(row.r_max),
            opt_sig9(row.e_closed),
            opt_sig9(row.e_oracle),
            opt_sig9(row.abs_diff),
            opt_sig9(row.rel_diff),
            row.nodes.map(|v| v.to_string()).unwrap_or_default(),
            row.node_match.map(|v| v.to_string()).unwrap_or_default(),
            opt_sig9(row.mismatch),
            opt_sig9(row.bracket_fraction),
            status,
        ];
        out.push_str(&csv_line(&fields));
        out.push('\n');
    }
    out
}

/// Shooting-method cross-check of every configured `(n, kappa)` state.
pub fn verify(cfg: &RunConfig) -> Result<String, RunError> {
    let p = cfg.potential_params()?;
    let sym = cfg.symmetry_case();
    let d = cfg.pekeris(&p)?;
    let mut opts = VerifyOptions::default();
    if let Some(o) = &cfg.oracle {
        if let Some(t) = o.rel_tol {
            opts.rel_tol = t;
        }
        if let Some(x) = o.r_max_extra {
            opts.r_max_extra = x;
        }
        if let Some(fr) = &o.bracket_fractions {
            opts.bracket_fractions = fr.clone();
        }
    }
    let mut kappas = cfg.quantum.kappa_list.clone();
    kappas.sort_unstable();
    kappas.dedup();
    let mut rows = Vec::new();
    for n in 0..=cfg.quantum.n_max {
        for &kappa in &kappas {
            let qn = QuantumNumbers::new(n, kappa)?;
            rows.push(verify_row_json(&verify_spectrum_with(&p, &sym, &qn, &d, &opts)));
        }
    }
    match cfg.output.format {
        FormatChoice::Csv => Ok(verify_csv(&rows)),
        FormatChoice::Json => to_pretty(&rows),
    }
}

#[derive(Serialize)]
struct CoeffJson {
    d0: f64,
    d1: f64,
    d2: f64,
}

#[derive(Serialize)]
struct SupJson {
    sup_rel_error: f64,
    argmax_x: f64,
}

#[derive(Serialize)]
struct DiscrepancyJson {
    max_rel_diff: f64,
    argmax_x: f64,
    delta_d: [f64; 3],
    paper_d1_collapsed: bool,
}

#[derive(Serialize)]
struct PekerisReportJson {
    q: f64,
    alpha: f64,
    x_lo: f64,
    x_hi: f64,
    paper: CoeffJson,
    paper_sup: Option<SupJson>,
    paper_sup_failure: Option<String>,
    taylor: Option<CoeffJson>,
    taylor_failure: Option<String>,
    taylor_sup: Option<SupJson>,
    taylor_sup_failure: Option<String>,
    discrepancy: Option<DiscrepancyJson>,
    discrepancy_failure: Option<String>,
}

/// Evaluation window for the centrifugal-approximation report, in the
/// dimensionless radial offset `x = (r - R0)/R0`.
pub const PEKERIS_WINDOW: (f64, f64) = (-0.2, 0.2);

fn pekeris_report(p: &PotentialParams) -> PekerisReportJson {
    let (x_lo, x_hi) = PEKERIS_WINDOW;
    let dp = pekeris_paper(p);
    let (paper_sup, paper_sup_failure) = match centrifugal_error(p, &dp, x_lo, x_hi) {
        Ok(rep) => {
            (Some(SupJson { sup_rel_error: rep.sup_rel_error, argmax_x: rep.argmax_x }), None)
        }
        Err(e) => (None, Some(e.to_string())),
    };
    let (taylor, taylor_failure, taylor_sup, taylor_sup_failure) = match pekeris_taylor(p) {
        Ok(dt) => {
            let (sup, sup_failure) = match centrifugal_error(p, &dt, x_lo, x_hi) {
                Ok(rep) => (
                    Some(SupJson { sup_rel_error: rep.sup_rel_error, argmax_x: rep.argmax_x }),
                    None,
                ),
                Err(e) => (None, Some(e.to_string())),
            };
            (Some(CoeffJson { d0: dt.d0, d1: dt.d1, d2: dt.d2 }), None, sup, sup_failure)
        }
        Err(e) => (None, Some(e.to_string()), None, None),
    };
    let (discrepancy, discrepancy_failure) = match pekeris_discrepancy(p, x_lo, x_hi) {
        Ok(rep) => (
            Some(DiscrepancyJson {
                max_rel_diff: rep.max_rel_diff,
                argmax_x: rep.argmax_x,
                delta_d: rep.delta_d,
                paper_d1_collapsed: rep.paper_d1_collapsed,
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };
    PekerisReportJson {
        q: p.q,
        alpha: p.alpha(),
        x_lo,
        x_hi,
        paper: CoeffJson { d0: dp.d0, d1: dp.d1, d2: dp.d2 },
        paper_sup,
        paper_sup_failure,
        taylor,
        taylor_failure,
        taylor_sup,
        taylor_sup_failure,
        discrepancy,
        discrepancy_failure,
    }
}

fn pekeris_csv(rep: &PekerisReportJson) -> String {
    let mut out = String::from("quantity,paper,taylor\n");
    let mut push = |fields: &[String]| {
        out.push_str(&csv_line(fields));
        out.push('\n');
    };
    let t = rep.taylor.as_ref();
    push(&["q".to_string(), sig9(rep.q), String::new()]);
    push(&["alpha".to_string(), sig9(rep.alpha), String::new()]);
    push(&["x_lo".to_string(), sig9(rep.x_lo), String::new()]);
    push(&["x_hi".to_string(), sig9(rep.x_hi), String::new()]);
    push(&["d0".to_string(), sig9(rep.paper.d0), opt_sig9(t.map(|c| c.d0))]);
    push(&["d1".to_string(), sig9(rep.paper.d1), opt_sig9(t.map(|c| c.d1))]);
    push(&["d2".to_string(), sig9(rep.paper.d2), opt_sig9(t.map(|c| c.d2))]);
    push(&[
        "sup_rel_error".to_string(),
        opt_sig9(rep.paper_sup.as_ref().map(|s| s.sup_rel_error)),
        opt_sig9(rep.taylor_sup.as_ref().map(|s| s.sup_rel_error)),
    ]);
    push(&[
        "argmax_x".to_string(),
        opt_sig9(rep.paper_sup.as_ref().map(|s| s.argmax_x)),
        opt_sig9(rep.taylor_sup.as_ref().map(|s| s.argmax_x)),
    ]);
    if let Some(d) = &rep.discrepancy {
        push(&["max_rel_diff".to_string(), sig9(d.max_rel_diff), String::new()]);
        push(&["diff_argmax_x".to_string(), sig9(d.argmax_x), String::new()]);
        push(&["delta_d0".to_string(), sig9(d.delta_d[0]), String::new()]);
        push(&["delta_d1".to_string(), sig9(d.delta_d[1]), String::new()]);
        push(&["delta_d2".to_string(), sig9(d.delta_d[2]), String::new()]);
        push(&[
            "paper_d1_collapsed".to_string(),
            d.paper_d1_collapsed.to_string(),
            String::new(),
        ]);
    }
    for (name, failure) in [
        ("taylor_failure", &rep.taylor_failure),
        ("paper_sup_failure", &rep.paper_sup_failure),
        ("taylor_sup_failure", &rep.taylor_sup_failure),
        ("discrepancy_failure", &rep.discrepancy_failure),
    ] {
        if let Some(msg) = failure {
            push(&[name.to_string(), String::new(), msg.clone()]);
        }
    }
    out
}

/// Centrifugal-approximation report: both coefficient sets, each set's
/// sup-norm error on the fixed window, and their mutual discrepancy.
pub fn pekeris(cfg: &RunConfig) -> Result<String, RunError> {
    let p = cfg.potential_params()?;
    let rep = pekeris_report(&p);
    match cfg.output.format {
        FormatChoice::Csv => Ok(pekeris_csv(&rep)),
        FormatChoice::Json => to_pretty(&rep),
    }
}
