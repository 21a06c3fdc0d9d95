//! Modified Bessel functions I_v and K₀.

use std::f64::consts::{LN_2, PI};

use super::gamma::{gamma, harmonic, EULER_GAMMA};
use super::j::ascending;
use super::{hankel_coeffs, BesselEval, Method, GAMMA_TILDE, Z_SWITCH};

/// Above this argument [`bessel_i_eval`] returns log I_v(x).
pub const X_BIG: f64 = 700.0;

/// I_v(x). Overflows to infinity past [`X_BIG`]; use [`bessel_i_eval`] there.
pub fn bessel_i(v: f64, x: f64) -> f64 {
    let e = bessel_i_eval(v, x);
    if e.log_scaled {
        e.value.exp()
    } else {
        e.value
    }
}

/// I_v(x) with route, error estimate and the overflow guard.
pub fn bessel_i_eval(v: f64, x: f64) -> BesselEval {
    debug_assert!(x > 0.0, "bessel_i needs x > 0");
    if x <= Z_SWITCH {
        return bessel_i_series(v, x);
    }
    let scaled = asymptotic_scaled(v, x);
    if x > X_BIG {
        BesselEval {
            value: x + scaled.value.ln(),
            method: Method::Asymptotic,
            est_error: scaled.est_error / scaled.value,
            log_scaled: true,
        }
    } else {
        let f = x.exp();
        BesselEval::new(f * scaled.value, Method::Asymptotic, f * scaled.est_error)
    }
}

/// Ascending series Σ (x/2)^{2k+v} / (k! Γ(k+v+1)); all terms positive.
pub fn bessel_i_series(v: f64, x: f64) -> BesselEval {
    let lead = (0.5 * x).powf(v) / gamma(v + 1.0);
    let (sum, err) = ascending(v, 0.25 * x * x);
    BesselEval::new(lead * sum, Method::Series, (lead * err).abs())
}

/// e^x/√(2πx) Σ (−1)^k a_k(v)/x^k, truncated at the smallest term.
pub fn bessel_i_asymptotic(v: f64, x: f64) -> BesselEval {
    let s = asymptotic_scaled(v, x);
    let f = x.exp();
    BesselEval::new(f * s.value, Method::Asymptotic, f * s.est_error)
}

fn asymptotic_scaled(v: f64, x: f64) -> BesselEval {
    let (sum, last) = hankel_sum(v, x, -1.0);
    let amp = 1.0 / (2.0 * PI * x).sqrt();
    BesselEval::new(amp * sum, Method::Asymptotic, amp * (last + f64::EPSILON))
}

/// Σ sign^k a_k(v)/x^k, stopping at the smallest term.
fn hankel_sum(v: f64, x: f64, sign: f64) -> (f64, f64) {
    let a = hankel_coeffs(v, 80);
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    let mut xpow = 1.0;
    let mut s = 1.0;
    for an in a {
        let term = an / xpow;
        if term == 0.0 {
            last = 0.0;
            break;
        }
        if term.abs() > last {
            break;
        }
        sum += s * term;
        last = term.abs();
        if last < 1e-17 {
            break;
        }
        s *= sign;
        xpow *= x;
    }
    (sum, last)
}

/// d/dz log(e^{−z} I_v(z)) from the large-argument expansion:
/// −1/(2z) + S′(z)/S(z) with S(z) = Σ (−1)^k a_k(v) z^{−k}.
pub fn log_deriv_i_scaled_asymptotic(v: f64, z: f64) -> f64 {
    let a = hankel_coeffs(v, 60);
    let mut s = 0.0;
    let mut ds = 0.0;
    let mut last = f64::INFINITY;
    let mut zpow = 1.0;
    let mut sign = 1.0;
    for (k, ak) in a.iter().enumerate() {
        let term = ak / zpow;
        if term == 0.0 || term.abs() > last {
            break;
        }
        s += sign * term;
        ds -= sign * k as f64 * term / z;
        last = term.abs();
        if last < 1e-18 {
            break;
        }
        sign = -sign;
        zpow *= z;
    }
    -0.5 / z + ds / s
}

/// e^{−x} I_v(x), finite for every x > 0.
pub fn bessel_i_scaled(v: f64, x: f64) -> f64 {
    if x <= Z_SWITCH {
        (-x).exp() * bessel_i_series(v, x).value
    } else {
        asymptotic_scaled(v, x).value
    }
}

/// K₀(x).
pub fn bessel_k0(x: f64) -> f64 {
    if x <= 2.0 {
        k0_series(x)
    } else {
        (-x).exp() * bessel_k0_scaled(x)
    }
}

/// e^{x} K₀(x).
pub fn bessel_k0_scaled(x: f64) -> f64 {
    debug_assert!(x > 0.0, "bessel_k0 needs x > 0");
    if x <= 2.0 {
        x.exp() * k0_series(x)
    } else if x <= Z_SWITCH {
        k0_trapezoid_scaled(x)
    } else {
        let (sum, _) = hankel_sum(0.0, x, 1.0);
        (PI / (2.0 * x)).sqrt() * sum
    }
}

/// K₀(x) = −(log(x/2) + γ) I₀(x) + Σ_{k≥1} H_k (x²/4)^k/(k!)².
fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let (i0, _) = ascending(0.0, q);
    let mut pow = 1.0;
    let mut h = 0.0;
    for k in 1..60 {
        pow *= q / (k as f64 * k as f64);
        let term = harmonic(k) * pow;
        h += term;
        if term < 1e-18 * h {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + h
}

/// e^x K₀(x) = ∫₀^∞ exp(−2x sinh²(t/2)) dt by the trapezoid rule, which
/// converges geometrically for this analytic, rapidly decaying integrand.
fn k0_trapezoid_scaled(x: f64) -> f64 {
    let h: f64 = 0.1;
    let mut sum = 0.5;
    let mut k: f64 = 1.0;
    loop {
        let s = (0.5 * k * h).sinh();
        let e = 2.0 * x * s * s;
        if e > 45.0 {
            break;
        }
        sum += (-e).exp();
        k += 1.0;
    }
    h * sum
}

/// 2^v Γ(1+v) x^{−v} I_v(xr) e^{−xr}, equal to r^v e^{−xr}(1 + O(x²)) near 0.
pub fn i_norm_scaled(v: f64, x: f64, r: f64) -> f64 {
    i_norm_scaled_route(v, x, r, x * r <= Z_SWITCH)
}

/// [`i_norm_scaled`] with the route pinned: ascending series when `series`
/// is set, large-argument expansion otherwise.
pub fn i_norm_scaled_route(v: f64, x: f64, r: f64, series: bool) -> f64 {
    let z = x * r;
    if series {
        return r.powf(v) * (-z).exp() * ascending(v, 0.25 * z * z).0;
    }
    let scaled = if (v.abs() - 0.5).abs() < 1e-15 {
        let e2 = (-2.0 * z).exp();
        let amp = 1.0 / (2.0 * PI * z).sqrt();
        if v > 0.0 {
            amp * (1.0 - e2)
        } else {
            amp * (1.0 + e2)
        }
    } else {
        asymptotic_scaled(v, z).value
    };
    (v * LN_2).exp() * gamma(1.0 + v) * x.powf(-v) * scaled
}

/// e^{−xr} J̃₀(ix, r) = −(log x − γ̃) e^{−xr} I₀(xr) − e^{−xr} K₀(xr).
pub fn jtilde0_imag_scaled(x: f64, r: f64) -> f64 {
    jtilde0_imag_scaled_route(x, r, x * r <= Z_SWITCH)
}

/// [`jtilde0_imag_scaled`] with the I₀ route pinned.
pub fn jtilde0_imag_scaled_route(x: f64, r: f64, series: bool) -> f64 {
    let z = x * r;
    if series {
        let q = 0.25 * z * z;
        let (i0, _) = ascending(0.0, q);
        let mut pow = 1.0;
        let mut h = 0.0;
        let mut k = 0usize;
        loop {
            k += 1;
            pow *= q / (k as f64 * k as f64);
            let term = harmonic(k) * pow;
            h += term;
            if term <= 1e-17 * h && (k as f64) > q.sqrt() {
                break;
            }
        }
        return (-z).exp() * (r.ln() * i0 - h);
    }
    let i0 = asymptotic_scaled(0.0, z).value;
    let k0 = (-2.0 * z).exp() * bessel_k0_scaled(z);
    -(x.ln() - GAMMA_TILDE) * i0 - k0
}
