use std::f64::consts::PI;

use cone_zeta::bessel::*;
use cone_zeta::model::integrate_g7k15;

fn quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    integrate_g7k15(f, a, b, 1e-14).unwrap().0
}

#[test]
fn j0_against_bessel_integral() {
    for &z in &[0.3, 1.0, 4.0, 11.5, 12.5, 20.0, 60.0] {
        let oracle = quad(|t| (z * t.sin()).cos(), 0.0, PI) / PI;
        assert!((bessel_j(0.0, z) - oracle).abs() < 1e-10, "z = {z}");
    }
}

#[test]
fn y0_against_integral_representation() {
    for &z in &[0.5, 2.0, 11.0, 13.0, 30.0] {
        let oracle = 4.0 / (PI * PI)
            * quad(|t| (z * t.cos()).cos() * (EULER_GAMMA + (2.0 * z * t.sin().powi(2)).ln()), 0.0, PI / 2.0);
        assert!((bessel_y0(z) - oracle).abs() < 1e-9, "z = {z}");
    }
}

#[test]
fn i0_and_k0_against_integrals() {
    for &x in &[0.2, 1.0, 5.0, 12.5, 25.0] {
        let i0 = quad(|t| (x * (t.cos() - 1.0)).exp(), 0.0, PI) / PI;
        assert!((bessel_i_scaled(0.0, x) - i0).abs() < 1e-10 * i0, "x = {x}");
        let k0 = quad(|t| (-x * (t.cosh() - 1.0)).exp(), 0.0, 40.0);
        assert!((bessel_k0_scaled(x) - k0).abs() < 1e-10 * k0, "x = {x}");
    }
}

#[test]
fn half_order_closed_forms() {
    for &z in &[0.5, 3.0, 12.0, 40.0] {
        let j = (2.0 / (PI * z)).sqrt() * z.sin();
        assert!((bessel_j(0.5, z) - j).abs() < 1e-10);
        let i = (2.0 / (PI * z)).sqrt() * z.sinh();
        assert!((bessel_i(0.5, z) - i).abs() < 1e-10 * i);
    }
    assert!(bessel_j(0.5, PI).abs() < 1e-12);
    assert!((bessel_i(0.5, 1.0) - 0.937674).abs() < 1e-6);
}

#[test]
fn small_argument_normalization() {
    for &v in &[-0.7, -0.2, 0.0, 0.3, 0.9] {
        let z: f64 = 1e-6;
        let want = 1.0 / (2f64.powf(v) * gamma(1.0 + v));
        assert!((z.powf(-v) * bessel_j(v, z) - want).abs() < 1e-9);
    }
}

#[test]
fn jtilde0_limits() {
    let r = 0.7;
    assert!((jtilde0(1e-7, r) - r.ln()).abs() < 1e-10);
    assert!((jtilde0_series(1.0, 1.0) - jtilde0_via_y0(1.0, 1.0)).abs() < 1e-10);
}

#[test]
fn expint_quadrature_and_recurrence() {
    for k in 1..=4u32 {
        for &z in &[0.1, 1.0, 2.0, 7.0] {
            let oracle = quad(|u| (-z * u).exp() * u.powi(-(k as i32)), 1.0, 1.0 + 60.0 / z);
            assert!((expint_k(k, z) - oracle).abs() < 1e-10, "k = {k}, z = {z}");
        }
    }
    assert!((expint_k(1, 2.0) - 0.0489005).abs() < 1e-7);
    for k in 1..=5u32 {
        let lhs = k as f64 * expint_k(k + 1, 1.0);
        let rhs = (-1f64).exp() - expint_k(k, 1.0);
        assert!((lhs - rhs).abs() < 1e-10);
    }
    let mut prev = f64::INFINITY;
    for i in 1..40 {
        let v = expint_k(2, i as f64);
        assert!(v < prev && v > 0.0);
        prev = v;
    }
}

#[test]
fn tau_values() {
    assert!((tau(0.5) - 1.0).abs() < 1e-14);
    for &nu in &[0.1, 0.25, 0.6, 0.9] {
        let other = 4f64.powf(nu) * nu * gamma(nu) / gamma(1.0 - nu);
        assert!((tau(nu) - other).abs() < 1e-12 * other);
    }
}
