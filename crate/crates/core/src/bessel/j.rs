//! Bessel functions of the first and second kind, and J̃₀.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::gamma::{gamma, harmonic, EULER_GAMMA};
use super::{hankel_coeffs, BesselEval, Method, Z_SWITCH};

/// J_v(z) with automatic route selection.
pub fn bessel_j(v: f64, z: f64) -> f64 {
    bessel_j_eval(v, z).value
}

/// J_v(z) with route and error estimate.
pub fn bessel_j_eval(v: f64, z: f64) -> BesselEval {
    debug_assert!(z > 0.0, "bessel_j needs z > 0");
    if z <= Z_SWITCH {
        bessel_j_series(v, z)
    } else {
        bessel_j_hankel(v, z)
    }
}

/// Ascending series Σ (−1)^k (z/2)^{2k+v} / (k! Γ(k+v+1)).
pub fn bessel_j_series(v: f64, z: f64) -> BesselEval {
    let lead = (0.5 * z).powf(v) / gamma(v + 1.0);
    let (sum, err) = ascending(v, -0.25 * z * z);
    BesselEval::new(lead * sum, Method::Series, (lead * err).abs())
}

/// Σ_k x^k / (k! (v+1)_k), the normalized ascending series, with its
/// rounding estimate.
pub(crate) fn ascending(v: f64, x: f64) -> (f64, f64) {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut peak: f64 = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= x / (k * (k + v));
        sum += term;
        peak = peak.max(term.abs());
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) && k > x.abs().sqrt() {
            break;
        }
        if k > 2000.0 {
            break;
        }
    }
    (sum, peak * f64::EPSILON * 2.0)
}

/// Sums P and Q of the Hankel expansion, stopping at the smallest term.
fn hankel_pq(v: f64, z: f64) -> (f64, f64, f64) {
    let a = hankel_coeffs(v, 80);
    let mut p = 0.0;
    let mut q = 0.0;
    let mut zpow = 1.0;
    let mut last = f64::INFINITY;
    for (n, an) in a.iter().enumerate() {
        let term = an / zpow;
        if term == 0.0 {
            // half-integer order: the series terminates
            last = 0.0;
            break;
        }
        if term.abs() > last {
            break;
        }
        let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if n % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        last = term.abs();
        if last < 1e-17 {
            break;
        }
        zpow *= z;
    }
    (p, q, last)
}

/// Large-argument Hankel expansion of J_v.
pub fn bessel_j_hankel(v: f64, z: f64) -> BesselEval {
    let (p, q, last) = hankel_pq(v, z);
    let chi = z - (0.5 * v + 0.25) * PI;
    let amp = (2.0 / (PI * z)).sqrt();
    BesselEval::new(
        amp * (p * chi.cos() - q * chi.sin()),
        Method::Asymptotic,
        amp * last + amp * f64::EPSILON * z,
    )
}

/// J_{±1/2}(z) from sin and cos.
pub fn bessel_j_half(v: f64, z: f64) -> BesselEval {
    let amp = (2.0 / (PI * z)).sqrt();
    let value = if v > 0.0 { amp * z.sin() } else { amp * z.cos() };
    BesselEval::new(value, Method::ClosedHalfInteger, f64::EPSILON * z * amp)
}

/// Y₀(z) with automatic route selection.
pub fn bessel_y0(z: f64) -> f64 {
    if z <= Z_SWITCH {
        bessel_y0_series(z).value
    } else {
        bessel_y0_hankel(z).value
    }
}

/// Y₀(z) = (2/π)[(log(z/2) + γ) J₀(z) + Σ_{k≥1} (−1)^{k+1} H_k (z²/4)^k/(k!)²].
pub fn bessel_y0_series(z: f64) -> BesselEval {
    let j0 = bessel_j_series(0.0, z);
    let (h, err) = harmonic_sum(-0.25 * z * z);
    let value = 2.0 / PI * (((0.5 * z).ln() + EULER_GAMMA) * j0.value - h);
    BesselEval::new(value, Method::Series, 2.0 / PI * (err + j0.est_error * z.ln().abs().max(1.0)))
}

/// Large-argument Hankel expansion of Y₀.
pub fn bessel_y0_hankel(z: f64) -> BesselEval {
    let (p, q, last) = hankel_pq(0.0, z);
    let chi = z - FRAC_PI_4;
    let amp = (2.0 / (PI * z)).sqrt();
    BesselEval::new(
        amp * (p * chi.sin() + q * chi.cos()),
        Method::Asymptotic,
        amp * last + amp * f64::EPSILON * z,
    )
}

/// Σ_{k≥1} H_k x^k/(k!)², with a rounding estimate.
fn harmonic_sum(x: f64) -> (f64, f64) {
    let mut pow = 1.0;
    let mut sum = 0.0;
    let mut peak: f64 = 0.0;
    let mut k = 0usize;
    loop {
        k += 1;
        pow *= x / (k as f64 * k as f64);
        let term = harmonic(k) * pow;
        sum += term;
        peak = peak.max(term.abs());
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) && (k as f64) > x.abs().sqrt() {
            break;
        }
        if k > 2000 {
            break;
        }
    }
    (sum, peak * f64::EPSILON * 2.0)
}

/// J̃₀(μ, r), the second-kind solution normalized so that it tends to
/// `log r` as μ → 0.
pub fn jtilde0(mu: f64, r: f64) -> f64 {
    let mu = mu.abs();
    if mu * r <= Z_SWITCH {
        jtilde0_series(mu, r)
    } else {
        jtilde0_via_y0(mu, r)
    }
}

/// (log r) J₀(μr) − Σ_{k≥1} H_k (−¼(μr)²)^k / (k!)². Depends on μ² only.
pub fn jtilde0_series(mu: f64, r: f64) -> f64 {
    let x = -0.25 * (mu * r) * (mu * r);
    let (j0, _) = ascending(0.0, x);
    let (h, _) = harmonic_sum(x);
    r.ln() * j0 - h
}

/// (π/2) Y₀(μr) − (log μ − log 2 + γ) J₀(μr).
pub fn jtilde0_via_y0(mu: f64, r: f64) -> f64 {
    let mu = mu.abs();
    FRAC_PI_2 * bessel_y0(mu * r) - (mu.ln() - std::f64::consts::LN_2 + EULER_GAMMA) * bessel_j(0.0, mu * r)
}

/// 2^v Γ(1+v) μ^{−v} J_v(μr), an entire even function of μ equal to r^v at 0.
pub fn j_norm(v: f64, mu: f64, r: f64) -> f64 {
    let mu = mu.abs();
    let z = mu * r;
    if z <= Z_SWITCH {
        r.powf(v) * ascending(v, -0.25 * z * z).0
    } else {
        let jv = if (v.abs() - 0.5).abs() < 1e-15 {
            bessel_j_half(v, z).value
        } else {
            bessel_j_hankel(v, z).value
        };
        (v * std::f64::consts::LN_2).exp() * gamma(1.0 + v) * mu.powf(-v) * jv
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_half_vanishes_at_pi() {
        assert!(bessel_j(0.5, PI).abs() < 1e-12);
        assert!(bessel_j_series(0.5, PI).value.abs() < 1e-12);
    }

    #[test]
    fn j0_small_argument() {
        assert!((bessel_j(0.0, 1e-9) - 1.0).abs() < 1e-15);
        assert!((bessel_j(0.0, 1.0) - 0.765_197_686_557_966_6).abs() < 1e-14);
    }

    #[test]
    fn normalized_limit_at_origin() {
        for &v in &[-0.7, -0.3, 0.2, 0.6] {
            let z: f64 = 1e-8;
            let got = z.powf(-v) * bessel_j(v, z);
            let want = 1.0 / ((v * std::f64::consts::LN_2).exp() * gamma(1.0 + v));
            assert!((got - want).abs() < 1e-12 * want.abs());
        }
    }

    #[test]
    fn half_integer_routes_agree() {
        for &z in &[0.3, 2.0, 7.5, 11.9, 12.5, 30.0, 200.0] {
            for &v in &[0.5, -0.5] {
                let closed = bessel_j_half(v, z).value;
                let generic = bessel_j(v, z);
                assert!((closed - generic).abs() < 1e-10, "v={v} z={z}");
            }
        }
    }

    #[test]
    fn series_and_hankel_overlap() {
        for &v in &[0.0, 0.25, -0.25, 0.7, -0.9] {
            for &z in &[11.0, 11.5, 12.0, 12.5, 13.0] {
                let s = bessel_j_series(v, z).value;
                let h = bessel_j_hankel(v, z).value;
                assert!((s - h).abs() < 1e-9, "v={v} z={z}: {s} vs {h}");
            }
        }
        for &z in &[11.0, 12.0, 13.0] {
            let s = bessel_y0_series(z).value;
            let h = bessel_y0_hankel(z).value;
            assert!((s - h).abs() < 1e-9);
        }
    }

    #[test]
    fn wronskian_order_zero() {
        for &z in &[0.5, 1.0, 5.0] {
            let h = 1e-5 * z;
            let dj = (bessel_j(0.0, z + h) - bessel_j(0.0, z - h)) / (2.0 * h);
            let dy = (bessel_y0(z + h) - bessel_y0(z - h)) / (2.0 * h);
            let w = bessel_j(0.0, z) * dy - dj * bessel_y0(z);
            assert!((w - 2.0 / (PI * z)).abs() < 1e-10, "z={z}: {w}");
        }
    }

    #[test]
    fn jtilde0_routes_and_limits() {
        let r = 1.3;
        let mu = 1.0 / r;
        assert!((jtilde0_series(mu, r) - jtilde0_via_y0(mu, r)).abs() < 1e-10);
        assert!((jtilde0(1e-9, r) - r.ln()).abs() < 1e-12);
        assert!((jtilde0_series(0.7, r) - jtilde0_series(-0.7, r)).abs() == 0.0);
        for &mu in &[8.0, 9.5, 10.0] {
            assert!((jtilde0_series(mu, r) - jtilde0_via_y0(mu, r)).abs() < 1e-9);
        }
    }

    #[test]
    fn j_norm_is_even_and_matches_definition() {
        let r = 2.0;
        for &v in &[0.0, 0.4, -0.4] {
            assert!((j_norm(v, 0.0, r) - r.powf(v)).abs() < 1e-15);
            for &mu in &[0.5f64, 3.0, 5.9, 6.1, 20.0] {
                let direct = (v * std::f64::consts::LN_2).exp() * gamma(1.0 + v) * mu.powf(-v) * bessel_j(v, mu * r);
                assert!((j_norm(v, mu, r) - direct).abs() < 1e-10);
                assert_eq!(j_norm(v, mu, r), j_norm(v, -mu, r));
            }
        }
    }
}
