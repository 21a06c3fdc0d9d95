//! Large-x behaviour of d/dx log F(ix) against the log-expansion table.

use num_complex::Complex64;
use serde::Serialize;

use super::determinant::dlog_f_ix;
use super::ModelProblem;
use crate::bessel::{log_deriv_i_scaled_asymptotic, GAMMA_TILDE};
use crate::error::Result;
use crate::genseries::CTable;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualRow {
    pub x: f64,
    pub residual: Complex64,
    /// Next-order prediction for the residual.
    pub predicted: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualTable {
    pub rows: Vec<ResidualRow>,
    /// Slope of log|r| against log x (least squares).
    pub fit_exponent: f64,
    pub fit_constant: f64,
}

/// d/dx Σ c_{ℓξ} x^{−2ξ}(γ̃ − log x)^{−ℓ}.
pub fn c_series_derivative(ct: &CTable, x: f64) -> Complex64 {
    let g = GAMMA_TILDE - x.ln();
    let mut acc = Complex64::new(0.0, 0.0);
    for e in &ct.entries {
        let xi = e.xi();
        let px = x.powf(-2.0 * xi - 1.0);
        for &(l, c) in &e.terms {
            let lf = l as f64;
            acc += c * px * (lf * g.powi(-l - 1) - 2.0 * xi * g.powi(-l));
        }
    }
    acc
}

/// Remainder left after the log-expansion terms: the algebraic 1/x part
/// (Σν − 2α₀)/x plus the per-channel corrections of e^{−z}I_v(z).
pub fn predicted_remainder(p: &ModelProblem, alpha0: f64, x: f64) -> f64 {
    let r = p.spec.r;
    let sum_nu: f64 = p.spec.nus.iter().sum();
    let mut out = (sum_nu - 2.0 * alpha0) / x;
    for _ in 0..p.spec.q0 {
        out += r * log_deriv_i_scaled_asymptotic(0.0, x * r);
    }
    for &nu in &p.spec.nus {
        out += r * log_deriv_i_scaled_asymptotic(nu, x * r);
    }
    out
}

/// r(x) = d/dx log F(ix) − qR − (q₀ − j₀)/(x(log x − γ̃)) − d/dx Σ c_{ℓξ}…
/// at each x, with the prediction and a power-law fit of |r|.
pub fn asymptotic_residual(p: &ModelProblem, ct: &CTable, j0: i32, alpha0: f64, xs: &[f64]) -> Result<ResidualTable> {
    let q = p.spec.q() as f64;
    let q0 = p.spec.q0 as f64;
    let mut rows = Vec::with_capacity(xs.len());
    for &x in xs {
        let (d, _) = dlog_f_ix(p, x)?;
        let lead = q * p.spec.r + (q0 - j0 as f64) / (x * (x.ln() - GAMMA_TILDE));
        let residual = d - lead - c_series_derivative(ct, x);
        rows.push(ResidualRow { x, residual, predicted: predicted_remainder(p, alpha0, x) });
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.residual.norm() > 0.0)
        .map(|r| (r.x.ln(), r.residual.norm().ln()))
        .collect();
    let (fit_exponent, fit_constant) = if pts.len() >= 2 {
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        let slope = if sxx > 0.0 { sxy / sxx } else { f64::NAN };
        (slope, (my - slope * mx).exp())
    } else {
        (f64::NAN, f64::NAN)
    };
    Ok(ResidualTable { rows, fit_exponent, fit_constant })
}
