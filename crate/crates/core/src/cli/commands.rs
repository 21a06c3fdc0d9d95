use num_complex::Complex64;
use serde::Serialize;

use super::builtins::{builtin, ExpectedRow};
use super::config::ProblemConfig;
use crate::error::{Error, Result};
use crate::genseries::{det_p, exp_minus_one, extract_markers, log_expand, normalize_leading, CTable};
use crate::model::{
    asymptotic_residual, find_eigenvalues, resolvent_trace_exact, resolvent_trace_via_f, verify_logint, ModelProblem,
    ModelSpectrum,
};
use crate::singularity::{zeta_structure, SingularityReport};
use crate::symplectic::{decompose, validate_lagrangian, Validation, Verdict};

#[derive(Debug, Clone, Serialize)]
pub struct ValidateOutput {
    pub validation: Validation,
    pub decomposable: Option<bool>,
    pub split_angles: Option<Vec<f64>>,
    pub ok: bool,
}

pub fn validate(cfg: &ProblemConfig) -> Result<ValidateOutput> {
    let (spec, l) = cfg.problem()?;
    let validation = validate_lagrangian(&l, &spec)?;
    let ok = validation.verdict == Verdict::Ok;
    let (decomposable, split_angles) = if ok {
        let d = decompose(&l, &spec)?;
        (Some(d.decomposable), d.split_angles)
    } else {
        (None, None)
    };
    Ok(ValidateOutput { validation, decomposable, split_angles, ok })
}

pub fn structure(cfg: &ProblemConfig) -> Result<SingularityReport> {
    let (spec, l) = cfg.problem()?;
    zeta_structure(&l, &spec, cfg.options.xi_max, cfg.options.l_max)
}

pub fn eigs(cfg: &ProblemConfig) -> Result<ModelSpectrum> {
    let (spec, l) = cfg.problem()?;
    find_eigenvalues(&ModelProblem::new(spec, l)?, cfg.options.mu_max)
}

/// One row of a singularity ledger in table form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LedgerRow {
    pub location: f64,
    /// `pole`, `log` or `log0`.
    pub kind: &'static str,
    pub order_or_ell: i32,
    pub leading: Complex64,
    pub residue: Option<Complex64>,
    pub flags: Vec<&'static str>,
}

pub fn ledger_rows(r: &SingularityReport) -> Vec<LedgerRow> {
    let mut rows = Vec::new();
    if r.log_at_zero_coeff != 0 {
        rows.push(LedgerRow {
            location: 0.0,
            kind: "log0",
            order_or_ell: 0,
            leading: Complex64::new(r.log_at_zero_coeff as f64, 0.0),
            residue: None,
            flags: vec![],
        });
    }
    for p in &r.poles {
        let mut flags = vec![];
        if p.integer_flag {
            flags.push("integer");
        }
        if p.unreliable {
            flags.push("window");
        }
        rows.push(LedgerRow {
            location: p.location,
            kind: "pole",
            order_or_ell: p.order as i32,
            leading: p.leading,
            residue: p.combined_residue,
            flags,
        });
    }
    for l in &r.logs {
        rows.push(LedgerRow {
            location: l.location,
            kind: "log",
            order_or_ell: l.ell,
            leading: l.leading,
            residue: None,
            flags: if l.unreliable { vec!["window"] } else { vec![] },
        });
    }
    rows.sort_by(|a, b| b.location.total_cmp(&a.location).then(a.kind.cmp(b.kind)));
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub param: String,
    pub value: f64,
    pub reference: f64,
    pub error: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
    pub note: String,
}

impl CheckRow {
    fn new(check: &'static str, param: String, value: f64, reference: f64, tolerance: f64) -> Self {
        let error = (value - reference).abs();
        let status = if error <= tolerance { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { check, param, value, reference, error, tolerance, status, note: String::new() }
    }

    fn skipped(check: &'static str, param: String, note: String) -> Self {
        Self {
            check,
            param,
            value: f64::NAN,
            reference: f64::NAN,
            error: f64::NAN,
            tolerance: f64::NAN,
            status: CheckStatus::Skipped,
            note,
        }
    }
}

/// c_{ℓξ} as if every τ_j were multiplied by `factor`.
fn rescale_tau(ct: &CTable, factor: f64) -> CTable {
    let mut out = ct.clone();
    for e in &mut out.entries {
        let s = factor.powi(e.key.kvec.iter().sum());
        for t in &mut e.terms {
            t.1 *= s;
        }
    }
    out
}

/// Resolvent identity, asymptotic residual, Ei_k identity and log/exp round
/// trip on the configured problem. `tau_scale` ≠ 1 perturbs the τ values
/// used by the residual check.
pub fn verify(cfg: &ProblemConfig, tau_scale: f64) -> Result<Vec<CheckRow>> {
    let (spec, l) = cfg.problem()?;
    let p = ModelProblem::new(spec.clone(), l.clone())?;
    let o = &cfg.options;
    let mut rows = Vec::new();

    let spectrum = if p.real_coefficients { Some(find_eigenvalues(&p, o.mu_max)?) } else { None };
    for &x in &o.resolvent_x {
        let param = format!("x={x}");
        let Some(s) = &spectrum else {
            rows.push(CheckRow::skipped("resolvent", param, "complex coefficients".into()));
            continue;
        };
        match (resolvent_trace_exact(s, x, None), resolvent_trace_via_f(&p, x)) {
            (Ok(exact), Ok(via_f)) => {
                let mut row = CheckRow::new("resolvent", param, via_f, exact.value, exact.bound + o.resolvent_slack);
                row.note = format!("tail bound {:.3e}", exact.bound);
                rows.push(row);
            }
            (Err(e), _) | (_, Err(e)) => rows.push(CheckRow::skipped("resolvent", param, e.to_string())),
        }
    }

    let n = normalize_leading(&det_p(&l, &spec)?)?;
    let ct = extract_markers(log_expand(&n.tail, o.xi_max, o.l_max)?);
    let used = if tau_scale != 1.0 { rescale_tau(&ct, tau_scale) } else { ct.clone() };
    let table = asymptotic_residual(&p, &used, n.j0, n.alpha0.value, &o.asymptotic_x)?;
    for r in &table.rows {
        rows.push(CheckRow::new("asymptotic", format!("x={}", r.x), r.residual.re, r.predicted, o.asymptotic_tol));
    }

    let e = std::f64::consts::E;
    for &(c, s, k, t0) in &[(0.0, 1.0, 1u32, e), (0.0, 1.0, 2, e), (0.5, 0.7, 1, e * e)] {
        let r = verify_logint(c, s, k, t0)?;
        rows.push(CheckRow::new("logint", format!("c={c},s={s},k={k},t0={t0:.6}"), r.lhs, r.rhs, o.logint_tol));
    }

    let back = exp_minus_one(&ct.to_series(), o.xi_max, o.l_max)?;
    let limit = ct.window_limited_from.unwrap_or(f64::INFINITY);
    let mut worst: f64 = 0.0;
    for (ell, key, c) in n.tail.terms() {
        if key.value <= o.xi_max && key.value < limit && ell.abs() <= o.l_max {
            let err = (back.coeff(ell, &key.kvec) - c).norm() / c.norm().max(1.0);
            worst = worst.max(err);
        }
    }
    for (ell, key, c) in back.terms() {
        if key.value < limit && n.tail.coeff(ell, &key.kvec).norm() == 0.0 {
            worst = worst.max(c.norm());
        }
    }
    rows.push(CheckRow::new("roundtrip", "exp(log(1+T))-1".into(), worst, 0.0, o.roundtrip_tol));
    Ok(rows)
}

/// Closed-form ledger next to the computed one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub kind: &'static str,
    pub location: f64,
    pub expected_order: Option<i32>,
    pub computed_order: Option<i32>,
    pub expected: Option<Complex64>,
    pub computed: Option<Complex64>,
    pub error: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleOutput {
    pub name: &'static str,
    pub description: &'static str,
    pub report: SingularityReport,
    pub comparison: Vec<ComparisonRow>,
}

impl ExampleOutput {
    /// Largest relative mismatch over rows present on both sides, and whether
    /// every expected row was found with the right order.
    pub fn agreement(&self) -> (f64, bool) {
        let mut worst: f64 = 0.0;
        let mut complete = true;
        for r in &self.comparison {
            match (r.expected, r.computed) {
                (Some(e), Some(_)) => {
                    worst = worst.max(r.error.unwrap_or(0.0) / e.norm().max(1.0));
                    complete &= r.expected_order == r.computed_order;
                }
                (Some(_), None) => complete = false,
                _ => {}
            }
        }
        (worst, complete)
    }
}

fn compare(expected: &[ExpectedRow], computed: &[LedgerRow]) -> Vec<ComparisonRow> {
    let mut rows = Vec::new();
    let mut used = vec![false; computed.len()];
    for e in expected {
        let hit = computed
            .iter()
            .enumerate()
            .find(|(i, c)| !used[*i] && c.kind == e.kind && (c.location - e.location).abs() < 1e-9);
        match hit {
            Some((i, c)) => {
                used[i] = true;
                rows.push(ComparisonRow {
                    kind: e.kind,
                    location: e.location,
                    expected_order: Some(e.order_or_ell),
                    computed_order: Some(c.order_or_ell),
                    expected: Some(e.leading),
                    computed: Some(c.leading),
                    error: Some((c.leading - e.leading).norm()),
                });
            }
            None => rows.push(ComparisonRow {
                kind: e.kind,
                location: e.location,
                expected_order: Some(e.order_or_ell),
                computed_order: None,
                expected: Some(e.leading),
                computed: None,
                error: None,
            }),
        }
    }
    for (i, c) in computed.iter().enumerate() {
        if !used[i] {
            rows.push(ComparisonRow {
                kind: c.kind,
                location: c.location,
                expected_order: None,
                computed_order: Some(c.order_or_ell),
                expected: None,
                computed: Some(c.leading),
                error: None,
            });
        }
    }
    rows.sort_by(|a, b| b.location.total_cmp(&a.location).then(a.kind.cmp(b.kind)));
    rows
}

pub fn example(name: &str) -> Result<ExampleOutput> {
    let b = builtin(name).ok_or_else(|| {
        Error::InvalidInput(format!("unknown example '{name}'; choose one of {}", super::NAMES.join(", ")))
    })?;
    let report = structure(&b.config)?;
    let comparison = compare(&b.expected, &ledger_rows(&report));
    Ok(ExampleOutput { name: b.name, description: b.description, report, comparison })
}
