//! Resolvent and heat traces from a computed spectrum, and the resolvent
//! trace from the determinant.

use serde::Serialize;

use super::determinant::dlog_f_ix;
use super::spectrum::ModelSpectrum;
use super::ModelProblem;
use crate::error::{Error, Result};

/// A truncated spectral sum with its tail estimate and tail error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceValue {
    pub value: f64,
    pub tail: f64,
    pub bound: f64,
}

/// Offset δ in N(μ) ≈ ρμ + δ, averaged over the upper half of the scan.
fn counting_offset(s: &ModelSpectrum) -> f64 {
    let m = s.scan_bound;
    let samples = 400;
    let mut acc = 0.0;
    for i in 0..samples {
        let mu = 0.5 * m + 0.5 * m * (i as f64 + 0.5) / samples as f64;
        acc += s.count_up_to(mu) as f64 - s.density_slope * mu;
    }
    acc / samples as f64
}

/// Departure E(M) = N(M) − ρM − δ of the counting function at the scan bound.
fn edge_fluctuation(s: &ModelSpectrum) -> f64 {
    let m = s.scan_bound;
    s.count_up_to(m) as f64 - s.density_slope * m - counting_offset(s)
}

/// Σ_j mult_j/(μ_j² + x²) plus the density tail beyond the scan bound.
pub fn resolvent_trace_exact(s: &ModelSpectrum, x: f64, tol: Option<f64>) -> Result<TraceValue> {
    if let Some(neg) = s.most_negative() {
        if x * x <= -neg {
            return Err(Error::InvalidInput(format!(
                "x^2 = {} does not exceed |most negative eigenvalue| = {}",
                x * x,
                -neg
            )));
        }
    }
    let sum: f64 = s.eigs.iter().map(|e| e.multiplicity as f64 / (e.mu_squared + x * x)).sum();
    let m = s.scan_bound;
    let f_m = 1.0 / (m * m + x * x);
    let tail = s.density_slope * (std::f64::consts::FRAC_PI_2 - (m / x).atan()) / x - edge_fluctuation(s) * f_m;
    let d = 2.0 * s.channels as f64;
    let bound = d * f_m;
    if let Some(tol) = tol {
        if bound > tol {
            let need = (d / tol - x * x).max(0.0).sqrt();
            return Err(Error::Tolerance(format!(
                "resolvent tail bound {bound:.3e} exceeds {tol:.3e}; use mu_max >= {need:.1}"
            )));
        }
    }
    Ok(TraceValue { value: sum + tail, tail, bound })
}

/// Σ_j mult_j e^{−tμ_j²} plus the density tail beyond the scan bound.
pub fn heat_trace_partial(s: &ModelSpectrum, t: f64, tol: Option<f64>) -> Result<TraceValue> {
    if !(t > 0.0) {
        return Err(Error::InvalidInput(format!("t must be positive, got {t}")));
    }
    let sum: f64 = s.eigs.iter().map(|e| e.multiplicity as f64 * (-t * e.mu_squared).exp()).sum();
    let m = s.scan_bound;
    let e_m = (-t * m * m).exp();
    let tail = s.density_slope * std::f64::consts::PI.sqrt() / (2.0 * t.sqrt()) * libm::erfc(m * t.sqrt())
        - edge_fluctuation(s) * e_m;
    let d = 2.0 * s.channels as f64;
    let bound = d * e_m;
    if let Some(tol) = tol {
        if bound > tol {
            let need = ((d / tol).ln() / t).max(0.0).sqrt();
            return Err(Error::Tolerance(format!(
                "heat tail bound {bound:.3e} exceeds {tol:.3e}; use mu_max >= {need:.1}"
            )));
        }
    }
    Ok(TraceValue { value: sum + tail, tail, bound })
}

/// (1/(2x)) d/dx log F(ix).
pub fn resolvent_trace_via_f(p: &ModelProblem, x: f64) -> Result<f64> {
    let (d, stiffness) = dlog_f_ix(p, x)?;
    if !stiffness.is_finite() || stiffness > 1e6 {
        return Err(Error::InvalidInput(format!("resolvent pole proximity at x = {x}")));
    }
    Ok(d.re / (2.0 * x))
}
