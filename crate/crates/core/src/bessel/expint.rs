//! Exponential integral Ei_k(z) = ∫₁^∞ e^{−zu} u^{−k} du.

use super::gamma::{digamma_int, EULER_GAMMA};

/// Ei_k(z) for integer k ≥ 1 and z > 0.
///
/// Series with the ψ(k) term for z ≤ 1, modified Lentz continued fraction
/// above.
pub fn expint_k(k: u32, z: f64) -> f64 {
    assert!(k >= 1, "expint_k needs k >= 1");
    assert!(z > 0.0, "expint_k needs z > 0");
    if z <= 1.0 {
        series(k, z)
    } else {
        continued_fraction(k, z)
    }
}

/// Ei_k(z) = (−z)^{k−1}/(k−1)! (−log z + ψ(k)) − Σ_{m≠k−1} (−z)^m / ((m−k+1) m!).
fn series(k: u32, z: f64) -> f64 {
    let km1 = k as i64 - 1;
    let mut sum = if km1 != 0 { 1.0 / km1 as f64 } else { -z.ln() - EULER_GAMMA };
    let mut fact = 1.0;
    for m in 1..200i64 {
        fact *= -z / m as f64;
        let term = if m != km1 {
            -fact / (m - km1) as f64
        } else {
            fact * (-z.ln() + digamma_int(k))
        };
        sum += term;
        if term.abs() < 1e-17 * sum.abs() && m > km1 {
            break;
        }
    }
    sum
}

fn continued_fraction(k: u32, z: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let km1 = k as f64 - 1.0;
    let mut b = z + k as f64;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (km1 + i as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-z).exp()
}
