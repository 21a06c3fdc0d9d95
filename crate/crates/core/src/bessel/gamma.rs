//! Gamma function, harmonic numbers and the `tau` constant.

use std::f64::consts::PI;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for real `x` (Lanczos approximation, g = 7).
///
/// Uses the reflection formula below 1/2. Poles at the non-positive
/// integers return `f64::NAN`.
pub fn gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}

/// Γ(x) through upward recurrence and the Stirling series.
///
/// Independent of [`gamma`]; used as a cross-check route. Valid for `x > 0`.
pub fn gamma_stirling(x: f64) -> f64 {
    assert!(x > 0.0, "gamma_stirling needs a positive argument");
    let mut z = x;
    let mut shift = 1.0;
    while z < 15.0 {
        shift *= z;
        z += 1.0;
    }
    let z2 = z * z;
    let series = 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2)
        - 1.0 / (1680.0 * z * z2 * z2 * z2)
        + 1.0 / (1188.0 * z * z2 * z2 * z2 * z2)
        - 691.0 / (360_360.0 * z * z2 * z2 * z2 * z2 * z2);
    let ln = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series;
    ln.exp() / shift
}

/// Digamma at a positive integer: ψ(k) = −γ + Σ_{j<k} 1/j.
pub fn digamma_int(k: u32) -> f64 {
    assert!(k >= 1, "digamma_int needs k >= 1");
    -EULER_GAMMA + harmonic(k as usize - 1)
}

const HARMONIC_TABLE_LEN: usize = 61;

const fn harmonic_table() -> [f64; HARMONIC_TABLE_LEN] {
    let mut table = [0.0; HARMONIC_TABLE_LEN];
    let mut k = 1;
    while k < HARMONIC_TABLE_LEN {
        table[k] = table[k - 1] + 1.0 / k as f64;
        k += 1;
    }
    table
}

static HARMONIC: [f64; HARMONIC_TABLE_LEN] = harmonic_table();

/// Harmonic number H_k = 1 + 1/2 + ⋯ + 1/k (H_0 = 0).
pub fn harmonic(k: usize) -> f64 {
    if k < HARMONIC_TABLE_LEN {
        return HARMONIC[k];
    }
    let mut h = HARMONIC[HARMONIC_TABLE_LEN - 1];
    for j in HARMONIC_TABLE_LEN..=k {
        h += 1.0 / j as f64;
    }
    h
}

/// τ(ν) = 2^{2ν} Γ(1+ν) / Γ(1−ν), for 0 < ν < 1.
pub fn tau(nu: f64) -> f64 {
    debug_assert!(nu > 0.0 && nu < 1.0, "tau needs 0 < nu < 1, got {nu}");
    (2.0 * nu).exp2() * gamma(1.0 + nu) / gamma(1.0 - nu)
}
