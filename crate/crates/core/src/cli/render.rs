//! Text, CSV and JSON output.

use std::fmt::Write;

use num_complex::Complex64;
use serde::Serialize;

use super::commands::{ledger_rows, CheckRow, ExampleOutput, ValidateOutput};
use crate::model::ModelSpectrum;
use crate::singularity::SingularityReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub const LEDGER_COLUMNS: &str = "location,kind,order_or_ell,leading_re,leading_im,residue_re,residue_im,flags";
pub const SPECTRUM_COLUMNS: &str = "mu,mu_squared,multiplicity,flagged";
pub const CHECK_COLUMNS: &str = "check,param,value,reference,error,tolerance,status";

fn e(x: f64) -> String {
    format!("{x:.17e}")
}

fn cplx(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.12e}", z.re)
    } else {
        format!("{:.12e}{:+.12e}i", z.re, z.im)
    }
}

pub fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

pub fn ledger_csv(r: &SingularityReport) -> String {
    let mut out = String::from(LEDGER_COLUMNS);
    out.push('\n');
    for row in ledger_rows(r) {
        let (rre, rim) = row.residue.map_or((String::new(), String::new()), |z| (e(z.re), e(z.im)));
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            e(row.location),
            row.kind,
            row.order_or_ell,
            e(row.leading.re),
            e(row.leading.im),
            rre,
            rim,
            row.flags.join(";")
        );
    }
    out
}

pub fn ledger_text(r: &SingularityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "j0 = {}, alpha0 = {}, truncation xi <= {}, |l| <= {}", r.j0, r.alpha0, r.xi_max, r.l_max);
    if let Some(w) = r.window_limited_from {
        let _ = writeln!(out, "note: entries from xi = {w} on may be incomplete (l window)");
    }
    if r.is_empty() {
        let _ = writeln!(out, "singular part: empty");
    }
    let _ = writeln!(out, "log s term: ({}) e^(-2s(log2-gamma)) log s", r.log_at_zero_coeff);
    for p in &r.poles {
        let _ = write!(out, "pole  s = {:<10.6} ({:>6}) order {:>2}  leading {}", p.location, p.label, p.order, cplx(p.leading));
        if let Some(c) = p.combined_residue {
            let _ = write!(out, "  residue {}", cplx(c));
        }
        if p.integer_flag {
            let _ = write!(out, "  [integer]");
        }
        if p.unreliable {
            let _ = write!(out, "  [window]");
        }
        out.push('\n');
    }
    for l in &r.logs {
        let _ = write!(out, "log   s = {:<10.6} ({:>6}) ell {:>2}    leading {}", l.location, l.label, l.ell, cplx(l.leading));
        if l.unreliable {
            let _ = write!(out, "  [window]");
        }
        out.push('\n');
    }
    if let Some(d) = &r.decomposable_view {
        let coeffs: Vec<String> = d.f_coeffs.iter().take(6).map(|c| cplx(*c)).collect();
        let _ = writeln!(out, "decomposable: f(s) = sum of c_k s^k, c = [{} ...]", coeffs.join(", "));
    }
    if let Some(s) = &r.split_view {
        let _ = writeln!(out, "split: angles {:?}, kappa {:?}", s.angles, s.kappas);
    }
    out
}

pub fn spectrum_csv(s: &ModelSpectrum) -> String {
    let mut out = String::from(SPECTRUM_COLUMNS);
    out.push('\n');
    for ev in &s.eigs {
        let _ = writeln!(out, "{},{},{},{}", e(ev.mu), e(ev.mu_squared), ev.multiplicity, ev.flagged);
    }
    out
}

pub fn spectrum_text(s: &ModelSpectrum) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} eigenvalues (mu <= {}), {} negative, density slope {:.6}",
        s.eigs.len(),
        s.scan_bound,
        s.negative_count,
        s.density_slope
    );
    for ev in &s.eigs {
        let _ = writeln!(
            out,
            "mu^2 = {:>22.14e}  mu = {:>20.14}  mult {}{}",
            ev.mu_squared,
            ev.mu,
            ev.multiplicity,
            if ev.flagged { "  [review]" } else { "" }
        );
    }
    for w in &s.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

pub fn checks_csv(rows: &[CheckRow]) -> String {
    let mut out = String::from(CHECK_COLUMNS);
    out.push('\n');
    for r in rows {
        let status = serde_json::to_value(r.status).expect("status").as_str().unwrap_or_default().to_string();
        let _ = writeln!(out, "{},{},{},{},{},{},{}", r.check, r.param, e(r.value), e(r.reference), e(r.error), e(r.tolerance), status);
    }
    out
}

pub fn checks_text(rows: &[CheckRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let status = serde_json::to_value(r.status).expect("status").as_str().unwrap_or_default().to_uppercase();
        let _ = write!(
            out,
            "{status:<7} {:<10} {:<32} value {:>20.12e}  ref {:>20.12e}  err {:.2e} (tol {:.1e})",
            r.check, r.param, r.value, r.reference, r.error, r.tolerance
        );
        if !r.note.is_empty() {
            let _ = write!(out, "  {}", r.note);
        }
        out.push('\n');
    }
    out
}

pub fn validate_text(v: &ValidateOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verdict: {:?} (rank {}, self-adjoint residual {:.3e}, conditioning {:.3e})",
        v.validation.verdict, v.validation.rank, v.validation.self_adjoint_residual, v.validation.conditioning
    );
    if let Some(w) = &v.validation.warning {
        let _ = writeln!(out, "warning: {w}");
    }
    if let Some(d) = v.decomposable {
        let _ = writeln!(out, "decomposable: {d}");
    }
    match &v.split_angles {
        Some(a) => {
            let _ = writeln!(out, "split angles: {a:?}");
        }
        None if v.ok => {
            let _ = writeln!(out, "split: no");
        }
        None => {}
    }
    out
}

pub fn example_text(x: &ExampleOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: {}", x.name, x.description);
    let _ = writeln!(out, "{:<5} {:>10} {:>8} {:>8} {:>22} {:>22} {:>10}", "kind", "s", "order", "computed", "expected", "computed", "abs err");
    let opt = |v: Option<Complex64>| v.map_or("-".to_string(), cplx);
    let ord = |v: Option<i32>| v.map_or("-".to_string(), |o| o.to_string());
    for r in &x.comparison {
        let _ = writeln!(
            out,
            "{:<5} {:>10.6} {:>8} {:>8} {:>22} {:>22} {:>10}",
            r.kind,
            r.location,
            ord(r.expected_order),
            ord(r.computed_order),
            opt(r.expected),
            opt(r.computed),
            r.error.map_or("-".to_string(), |e| format!("{e:.2e}"))
        );
    }
    if x.comparison.is_empty() {
        let _ = writeln!(out, "(empty ledger on both sides)");
    }
    out
}
