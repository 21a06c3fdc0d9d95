//! The eigenvalue determinant F(μ) and its imaginary-axis form F(ix).

use num_complex::Complex64;

use super::ModelProblem;
use crate::bessel::{i_norm_scaled_route, j_norm, jtilde0, jtilde0_imag_scaled_route, Z_SWITCH};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// det [[A, B], [diag(u), diag(w)]].
fn block_det(p: &ModelProblem, u: &[f64], w: &[f64]) -> Complex64 {
    let q = p.spec.q();
    let mut m = CMatrix::zeros(2 * q, 2 * q);
    m.view_mut((0, 0), (q, 2 * q)).copy_from(&p.lagrangian.block());
    for i in 0..q {
        m[(q + i, i)] = re(u[i]);
        m[(q + i, q + i)] = re(w[i]);
    }
    linalg::det(&m)
}

/// F(μ) = det [[A, B], [J₊(μ), J₋(μ)]]. Even in μ; F(0) is the limit value.
pub fn f_mu(p: &ModelProblem, mu: f64) -> Complex64 {
    let r = p.spec.r;
    let mut u = Vec::with_capacity(p.spec.q());
    let mut w = Vec::with_capacity(p.spec.q());
    for _ in 0..p.spec.q0 {
        u.push(j_norm(0.0, mu, r));
        w.push(if mu == 0.0 { r.ln() } else { jtilde0(mu, r) });
    }
    for &nu in &p.spec.nus {
        u.push(j_norm(nu, mu, r));
        w.push(j_norm(-nu, mu, r));
    }
    block_det(p, &u, &w)
}

/// F(ix) = e^{log_scale} · mantissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    pub mantissa: Complex64,
    pub log_scale: f64,
}

impl ScaledValue {
    /// The plain value; may overflow for large arguments.
    pub fn value(&self) -> Complex64 {
        self.mantissa * self.log_scale.exp()
    }

    /// log |F|.
    pub fn log_abs(&self) -> f64 {
        self.mantissa.norm().ln() + self.log_scale
    }
}

/// The scaled determinant e^{−qxR} F(ix) with the Bessel route pinned.
pub(crate) fn scaled_det(p: &ModelProblem, x: f64, series: bool) -> Complex64 {
    let r = p.spec.r;
    let mut u = Vec::with_capacity(p.spec.q());
    let mut w = Vec::with_capacity(p.spec.q());
    for _ in 0..p.spec.q0 {
        u.push(i_norm_scaled_route(0.0, x, r, series));
        w.push(jtilde0_imag_scaled_route(x, r, series));
    }
    for &nu in &p.spec.nus {
        u.push(i_norm_scaled_route(nu, x, r, series));
        w.push(i_norm_scaled_route(-nu, x, r, series));
    }
    block_det(p, &u, &w)
}

/// F(ix) through the modified Bessel functions, returned log-scaled.
pub fn f_ix(p: &ModelProblem, x: f64) -> Result<ScaledValue> {
    if !(x > 0.0) {
        return Err(Error::InvalidInput(format!("F(ix) needs x > 0, got {x}")));
    }
    let log_scale = p.spec.q() as f64 * x * p.spec.r;
    if !log_scale.is_finite() || log_scale > 1e300 {
        return Err(Error::InvalidInput(format!("x = {x} is beyond the log-scaled range (need q*x*R < 1e300)")));
    }
    let mantissa = scaled_det(p, x, x * p.spec.r <= Z_SWITCH);
    Ok(ScaledValue { mantissa, log_scale })
}

/// d/dx log F(ix) and |x D′/D| (large values signal a nearby zero).
///
/// Central differences of the scaled determinant with step 1e−4·x and one
/// Richardson step; the Bessel route is fixed by the centre point.
pub fn dlog_f_ix(p: &ModelProblem, x: f64) -> Result<(Complex64, f64)> {
    if !(x > 0.0) {
        return Err(Error::InvalidInput(format!("d/dx log F(ix) needs x > 0, got {x}")));
    }
    let series = x * p.spec.r <= Z_SWITCH;
    let d = |t: f64| scaled_det(p, t, series);
    let h = 1e-4 * x;
    let d0 = d(x);
    let c1 = (d(x + h) - d(x - h)) / (2.0 * h);
    let c2 = (d(x + h / 2.0) - d(x - h / 2.0)) / h;
    let deriv = (c2 * 4.0 - c1) / 3.0;
    if d0.norm() == 0.0 {
        return Ok((Complex64::new(f64::INFINITY, 0.0), f64::INFINITY));
    }
    let ratio = deriv / d0;
    let total = ratio + p.spec.q() as f64 * p.spec.r;
    Ok((total, (ratio * x).norm()))
}
