//! Worked examples with their closed-form singular ledgers.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::Serialize;

use super::config::{Options, ProblemConfig};
use crate::bessel::tau;
use crate::linalg::from_real;
use crate::symplectic::{from_angles, SpectralSpec};

/// ν used by the built-ins that have a −1/4 channel next to a ν channel.
pub const EXAMPLE_NU: f64 = 0.3;

pub const NAMES: [&str; 7] = ["fmp", "fmp-friedrichs", "lap-r2", "countk", "arb-order", "count3k", "split-theta"];

/// One closed-form ledger row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectedRow {
    pub kind: &'static str,
    pub location: f64,
    pub order_or_ell: i32,
    pub leading: Complex64,
}

pub struct Builtin {
    pub name: &'static str,
    pub description: &'static str,
    pub config: ProblemConfig,
    /// Rows with ξ ≤ Ξmax and |ℓ| ≤ Lmax under the default truncation.
    pub expected: Vec<ExpectedRow>,
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn fact(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn binom(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    fact(n) / (fact(k) * fact(n - k))
}

fn cfg(name: &str, q0: usize, nus: Vec<f64>, a: &[f64], b: &[f64]) -> ProblemConfig {
    let q = q0 + nus.len();
    let spec = SpectralSpec { q0, nus, r: 1.0 };
    ProblemConfig::new(Some(name), &spec, &from_real(q, q, a), &from_real(q, q, b))
}

fn log0(coeff: i32) -> ExpectedRow {
    ExpectedRow { kind: "log0", location: 0.0, order_or_ell: 0, leading: re(coeff as f64) }
}

pub fn builtin(name: &str) -> Option<Builtin> {
    let defaults = Options::default();
    let xi_max = defaults.xi_max;
    let l_max = defaults.l_max as u32;
    let nu = EXAMPLE_NU;
    let t = tau(nu);
    let ks = |nu: f64| (1..).take_while(move |&k| nu * k as f64 <= xi_max + 1e-12);
    let b = match name {
        "fmp" => {
            // ν = 1/2 gives τ = 1
            let (nu, alpha, beta) = (0.5, 1.0, 1.0);
            let ratio = tau(nu) * beta / alpha;
            let expected = ks(nu)
                .map(|k| ExpectedRow {
                    kind: "pole",
                    location: -nu * k as f64,
                    order_or_ell: 1,
                    leading: re(nu * ratio.powi(k as i32)),
                })
                .collect();
            Builtin {
                name: "fmp",
                description: "one channel, nu = 1/2, alpha = beta = 1: simple poles at -k/2",
                config: cfg(name, 0, vec![nu], &[alpha], &[beta]),
                expected,
            }
        }
        "fmp-friedrichs" => Builtin {
            name: "fmp-friedrichs",
            description: "one channel, nu = 1/2, alpha = 0 (Friedrichs): no singular part",
            config: cfg(name, 0, vec![0.5], &[0.0], &[1.0]),
            expected: vec![],
        },
        "lap-r2" => Builtin {
            name: "lap-r2",
            description: "single -1/4 channel, theta = 0: log s term with coefficient -1",
            config: cfg(name, 1, vec![], &[1.0], &[0.0]),
            expected: vec![log0(-1)],
        },
        "countk" => {
            let mut expected = vec![log0(-1)];
            for k in ks(nu).filter(|&k| k <= l_max) {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                expected.push(ExpectedRow {
                    kind: "log",
                    location: -nu * k as f64,
                    order_or_ell: k as i32,
                    leading: re(sign * t.powi(k as i32) * 2f64.powi(k as i32) * nu / fact(k - 1)),
                });
            }
            Builtin {
                name: "countk",
                description: "-1/4 and nu channels, A = [[0,1],[-1,0]], B = I: countably many log singularities",
                config: cfg(name, 1, vec![nu], &[0.0, 1.0, -1.0, 0.0], &[1.0, 0.0, 0.0, 1.0]),
                expected,
            }
        }
        "arb-order" => {
            let expected = ks(nu)
                .filter(|&k| k <= l_max)
                .map(|k| ExpectedRow {
                    kind: "pole",
                    location: -nu * k as f64,
                    order_or_ell: k as i32 + 1,
                    leading: re(pole_leading(nu, t, k)),
                })
                .collect();
            Builtin {
                name: "arb-order",
                description: "-1/4 and nu channels, A = [[-1,1],[0,0]], B = [[0,0],[1,-1]]: pole of order k+1 at -nu k",
                config: cfg(name, 1, vec![nu], &[-1.0, 1.0, 0.0, 0.0], &[0.0, 0.0, 1.0, -1.0]),
                expected,
            }
        }
        "count3k" => {
            let mut expected = vec![log0(-1)];
            for k in ks(nu).filter(|&k| k <= l_max) {
                let loc = -nu * k as f64;
                expected.push(ExpectedRow { kind: "pole", location: loc, order_or_ell: k as i32 + 1, leading: re(pole_leading(nu, t, k)) });
                expected.push(ExpectedRow { kind: "log", location: loc, order_or_ell: if k % 2 == 1 { 1 } else { 2 }, leading: re(count3k_log(nu, t, k)) });
            }
            Builtin {
                name: "count3k",
                description: "two -1/4 channels and one nu channel: poles of order k+1 and logs at -nu k",
                config: cfg(
                    name,
                    2,
                    vec![nu],
                    &[0.0, 1.0, -1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0],
                    &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0],
                ),
                expected,
            }
        }
        "split-theta" => {
            // (cos θ, sin θ) at θ = π/2, with the cosine rounding error removed
            let (a, b) = from_angles(&[FRAC_PI_2]);
            let a = a.map(|z| if z.norm() < 1e-15 { Complex64::new(0.0, 0.0) } else { z });
            let spec = SpectralSpec { q0: 1, nus: vec![], r: 1.0 };
            Builtin {
                name: "split-theta",
                description: "single -1/4 channel with theta = pi/2 (Friedrichs): no singular part",
                config: ProblemConfig::new(Some(name), &spec, &a, &b),
                expected: vec![],
            }
        }
        _ => return None,
    };
    Some(b)
}

/// (−1)^k τ^k k! ν / 2^k.
pub fn pole_leading(nu: f64, tau: f64, k: u32) -> f64 {
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    sign * tau.powi(k as i32) * fact(k) * nu / 2f64.powi(k as i32)
}

/// Leading g-coefficient at −νk for the three-channel example:
/// 2ν(−1)^{m+1}τ^k C(k, m+1), doubled for even k = 2m.
pub fn count3k_log(nu: f64, tau: f64, k: u32) -> f64 {
    let m = k / 2;
    let sign = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
    let base = 2.0 * nu * sign * tau.powi(k as i32) * binom(k, m + 1);
    if k % 2 == 1 {
        base
    } else {
        2.0 * base
    }
}
