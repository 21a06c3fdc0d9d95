//! Real-argument special functions: J_v, Y₀, I_v, K₀, J̃₀, Γ, τ(ν) and Ei_k.
//!
//! Every routine switches between an ascending series (argument at most
//! [`Z_SWITCH`]) and a large-argument expansion above it. The route-specific
//! entry points are public so callers can cross-check them.

mod expint;
mod gamma;
mod i;
mod j;

pub use expint::expint_k;
pub use gamma::{digamma_int, gamma, gamma_stirling, harmonic, tau, EULER_GAMMA};
pub use i::{
    bessel_i, bessel_i_asymptotic, bessel_i_eval, bessel_i_scaled, bessel_i_series, bessel_k0,
    bessel_k0_scaled, i_norm_scaled, i_norm_scaled_route, jtilde0_imag_scaled, jtilde0_imag_scaled_route,
    log_deriv_i_scaled_asymptotic, X_BIG,
};
pub use j::{
    bessel_j, bessel_j_eval, bessel_j_half, bessel_j_hankel, bessel_j_series, bessel_y0,
    bessel_y0_hankel, bessel_y0_series, j_norm, jtilde0, jtilde0_series, jtilde0_via_y0,
};

/// Argument at which all routines leave the ascending series.
pub const Z_SWITCH: f64 = 12.0;

/// log 2 − γ, the constant shift that appears next to `log x` in J̃₀(ix).
pub const GAMMA_TILDE: f64 = std::f64::consts::LN_2 - EULER_GAMMA;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Series,
    Asymptotic,
    ClosedHalfInteger,
    Quadrature,
    ContinuedFraction,
}

/// A function value together with the route used and an error estimate.
///
/// When `log_scaled` is set, `value` holds the natural log of the result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselEval {
    pub value: f64,
    pub method: Method,
    pub est_error: f64,
    pub log_scaled: bool,
}

impl BesselEval {
    pub(crate) fn new(value: f64, method: Method, est_error: f64) -> Self {
        Self { value, method, est_error, log_scaled: false }
    }
}

/// Hankel coefficient a_k(v) = Π_{j=1..k} (4v² − (2j−1)²) / (k! 8^k).
pub(crate) fn hankel_coeffs(v: f64, n: usize) -> Vec<f64> {
    let mu = 4.0 * v * v;
    let mut out = Vec::with_capacity(n + 1);
    let mut a = 1.0;
    out.push(a);
    for k in 1..=n {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0);
        out.push(a);
    }
    out
}
