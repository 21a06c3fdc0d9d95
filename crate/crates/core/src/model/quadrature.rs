//! Adaptive Gauss–Kronrod quadrature and the Ei_k identity check.

use serde::Serialize;

use crate::bessel::expint_k;
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// Gauss weights on XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn g7k15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let s = f(c - h * XGK[i]) + f(c + h * XGK[i]);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// ∫_a^b f by adaptive bisection of G7K15 panels until the summed error
/// estimate is below `tol` (absolute).
pub fn integrate_g7k15<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
    let mut panels = vec![(a, b, g7k15(&f, a, b))];
    for _ in 0..2000 {
        let err: f64 = panels.iter().map(|p| p.2 .1).sum();
        if err <= tol {
            break;
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1))
            .expect("nonempty");
        let (lo, hi, _) = panels.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        panels.push((lo, mid, g7k15(&f, lo, mid)));
        panels.push((mid, hi, g7k15(&f, mid, hi)));
    }
    let value: f64 = panels.iter().map(|p| p.2 .0).sum();
    let err: f64 = panels.iter().map(|p| p.2 .1).sum();
    if !(err <= tol) || !value.is_finite() {
        return Err(Error::Tolerance(format!("quadrature did not converge: error estimate {err:.3e} > {tol:.3e}")));
    }
    Ok((value, err))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogIntCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub diff: f64,
}

/// ∫_{t₀}^∞ x^{−2s−1}(c − log x)^{−k} dx against
/// (−1)^k e^{−2sc} C^{1−k} Ei_k(2sC), C = log t₀ − c.
pub fn verify_logint(c: f64, s: f64, k: u32, t0: f64) -> Result<LogIntCheck> {
    if k == 0 || !(s > 0.0) || !(t0 > 0.0) {
        return Err(Error::InvalidInput(format!("need k >= 1, s > 0, t0 > 0 (got k={k}, s={s}, t0={t0})")));
    }
    let big_c = t0.ln() - c;
    if !(big_c > 0.0) {
        return Err(Error::InvalidInput(format!("log t0 = {} must exceed c = {c}", t0.ln())));
    }
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let l = t0.ln();
    // x = t₀ e^w, then w = v/(1 − v) maps (0, ∞) to (0, 1)
    let integrand = |v: f64| {
        if v >= 1.0 {
            return 0.0;
        }
        let w = v / (1.0 - v);
        let jac = 1.0 / ((1.0 - v) * (1.0 - v));
        (-2.0 * s * w).exp() * (big_c + w).powi(-(k as i32)) * jac
    };
    let scale = big_c.powi(-(k as i32)) / (2.0 * s);
    let (integral, _) = integrate_g7k15(integrand, 0.0, 1.0, 1e-14 * scale.max(1e-300))?;
    let lhs = sign * (-2.0 * s * l).exp() * integral;
    let rhs = sign * (-2.0 * s * c).exp() * big_c.powi(1 - k as i32) * expint_k(k, 2.0 * s * big_c);
    Ok(LogIntCheck { lhs, rhs, diff: (lhs - rhs).abs() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_kronrod_polynomials_and_exp() {
        let (v, _) = integrate_g7k15(|x| x.powi(10), 0.0, 2.0, 1e-13).unwrap();
        assert!((v - 2f64.powi(11) / 11.0).abs() < 1e-11);
        let (v, _) = integrate_g7k15(|x: f64| (-x).exp(), 0.0, 40.0, 1e-14).unwrap();
        assert!((v - (1.0 - (-40f64).exp())).abs() < 1e-13);
    }

    #[test]
    fn ei_identity_first_case() {
        let r = verify_logint(0.0, 1.0, 1, std::f64::consts::E).unwrap();
        assert!((r.rhs + 0.0489005).abs() < 1e-6);
        assert!(r.diff < 1e-10);
    }
}
