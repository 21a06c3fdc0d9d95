//! Acceptance criteria; prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::f64::consts::{E, FRAC_PI_2, PI};
use std::time::Instant;

use common::*;
use cone_zeta::bessel::{tau, GAMMA_TILDE};
use cone_zeta::cli;
use cone_zeta::genseries::{beta_coeffs, det_p, exp_minus_one, log_expand, normalize_leading, poly_p0, GenSeries};
use cone_zeta::linalg::CMatrix;
use cone_zeta::model::{
    asymptotic_residual, find_eigenvalues, resolvent_trace_exact, resolvent_trace_via_f, verify_logint, ModelProblem,
};
use cone_zeta::singularity::zeta_structure;
use cone_zeta::symplectic::{from_angles, SpectralSpec};
use num_complex::Complex64;
use rand::Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn fmp_residues() -> Outcome {
    let t = Instant::now();
    let b = cli::builtin("fmp").unwrap();
    let report = cli::structure(&b.config).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for k in 1..=5u32 {
        let xi = 0.5 * k as f64;
        let p = report
            .poles
            .iter()
            .find(|p| (p.location + xi).abs() < 1e-12)
            .ok_or(format!("no pole at -{xi}"))?;
        if p.order != 1 {
            return Err(format!("pole at -{xi} has order {}", p.order));
        }
        if k % 2 == 0 {
            if !p.integer_flag || p.combined_residue.is_some() {
                return Err(format!("integer pole at -{xi} not flagged"));
            }
        } else {
            let want = -0.5 * (0.5 * PI * k as f64).sin() / PI;
            let got = p.combined_residue.ok_or(format!("missing residue at -{xi}"))?;
            worst = worst.max((got - c(want)).norm());
        }
    }
    let secs = t.elapsed().as_secs_f64();
    check(worst <= 1e-12 && secs < 1.0, format!("max residue error {worst:.2e}, {secs:.3}s"))
}

fn arbitrary_order_poles() -> Outcome {
    let nu = cli::builtins::EXAMPLE_NU;
    let tau = tau(nu);
    let b = cli::builtin("count3k").unwrap();
    let report = cli::structure(&b.config).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for k in 1..=4u32 {
        let xi = nu * k as f64;
        let pole = report
            .poles
            .iter()
            .find(|p| (p.location + xi).abs() < 1e-9)
            .ok_or(format!("no pole at -{xi}"))?;
        if pole.order != k + 1 {
            return Err(format!("pole at -{xi}: order {} != {}", pole.order, k + 1));
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let fact: f64 = (1..=k).map(f64::from).product();
        let want = sign * tau.powi(k as i32) * fact * nu / 2f64.powi(k as i32);
        worst = worst.max((pole.leading - c(want)).norm() / want.abs().max(1.0));

        let log = report
            .logs
            .iter()
            .find(|l| (l.location + xi).abs() < 1e-9)
            .ok_or(format!("no log at -{xi}"))?;
        let ell = if k % 2 == 1 { 1 } else { 2 };
        if log.ell != ell {
            return Err(format!("log at -{xi}: ell {} != {ell}", log.ell));
        }
        let m = k / 2;
        let binom = (1..=m + 1).fold(1.0, |acc, i| acc * (k - m - 1 + i) as f64 / i as f64);
        let msign = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
        let mut g = 2.0 * nu * msign * tau.powi(k as i32) * binom;
        if k % 2 == 0 {
            g *= 2.0;
        }
        worst = worst.max((log.leading - c(g)).norm() / g.abs().max(1.0));
    }
    check(worst <= 1e-10, format!("max leading error {worst:.2e} over k = 1..4"))
}

fn resolvent_identity() -> Outcome {
    let t = Instant::now();
    let sine = sine();
    let mut worst_sine: f64 = 0.0;
    for &x in &[1.0f64, 2.0, 5.0, 10.0] {
        let via = resolvent_trace_via_f(&sine, x).map_err(|e| e.to_string())?;
        let closed = 1.0 / (2.0 * x * x.tanh()) - 1.0 / (2.0 * x * x);
        worst_sine = worst_sine.max((via - closed).abs());
    }
    let p = countk(cli::builtins::EXAMPLE_NU);
    let spectrum = find_eigenvalues(&p, 300.0).map_err(|e| e.to_string())?;
    let mut countk_ok = true;
    let mut countk_err: f64 = 0.0;
    for &x in &[5.0f64, 10.0] {
        let exact = resolvent_trace_exact(&spectrum, x, None).map_err(|e| e.to_string())?;
        let via = resolvent_trace_via_f(&p, x).map_err(|e| e.to_string())?;
        let err = (via - exact.value).abs();
        countk_err = countk_err.max(err);
        countk_ok &= err < exact.bound + 1e-6;
    }
    let secs = t.elapsed().as_secs_f64();
    check(
        worst_sine < 1e-7 && countk_ok && secs < 30.0,
        format!("sine max error {worst_sine:.2e}; countk max |via F - exact| {countk_err:.2e}; {secs:.2}s"),
    )
}

fn closed_form_spectra() -> Outcome {
    let mut worst: f64 = 0.0;
    for (p, shift) in [(sine(), 0.0), (cosine(), 0.5)] {
        let s = find_eigenvalues(&p, 30.0 * PI + 1.0).map_err(|e| e.to_string())?;
        let pos: Vec<_> = s.positive().collect();
        if pos.len() < 30 || s.negative_count != 0 || s.eigs.iter().any(|e| e.mu_squared == 0.0) {
            return Err(format!("found {} positive, {} negative", pos.len(), s.negative_count));
        }
        for (j, ev) in pos.iter().take(30).enumerate() {
            worst = worst.max((ev.mu - (j as f64 + 1.0 - shift) * PI).abs());
        }
    }
    check(worst <= 1e-10, format!("max |mu_j - closed form| {worst:.2e}"))
}

fn split_betas() -> Outcome {
    let mut rng = rng(5);
    let mut worst: f64 = 0.0;
    for trial in 0..20 {
        let q0 = 1 + trial % 3;
        let mut angles: Vec<f64> = (0..q0)
            .map(|_| loop {
                let t = rng.gen_range(0.0..PI);
                if (t - FRAC_PI_2).abs() > 0.2 {
                    break t;
                }
            })
            .collect();
        if trial % 4 == 3 {
            angles[0] = FRAC_PI_2;
        }
        let (a, b) = from_angles(&angles);
        let kappas: Vec<f64> =
            angles.iter().filter(|t| (*t - FRAC_PI_2).abs() > 1e-12).map(|t| GAMMA_TILDE - t.tan()).collect();
        let betas = beta_coeffs(&poly_p0(&a, &b), 10).map_err(|e| e.to_string())?;
        for (i, beta) in betas.iter().enumerate() {
            let want: f64 = kappas.iter().map(|k| k.powi(i as i32)).sum();
            let scale: f64 = kappas.iter().map(|k| k.abs().powi(i as i32)).sum::<f64>().max(1.0);
            worst = worst.max((beta - c(want)).norm() / scale);
        }
    }
    check(worst <= 1e-12, format!("max scaled beta error {worst:.2e} over 20 tuples"))
}

fn determinant_oracle() -> Outcome {
    let mut rng = rng(6);
    let mut worst: f64 = 0.0;
    for trial in 0..100 {
        let q = 1 + trial % 4;
        let q0 = rng.gen_range(0..=q);
        let nus = random_nus(&mut rng, q - q0);
        let spec = SpectralSpec::new(q0, nus.clone(), 1.0).unwrap();
        let l = if trial % 2 == 0 {
            random_complex_lagrangian(&mut rng, q0, q)
        } else {
            random_real_lagrangian(&mut rng, q0, q)
        };
        let p = det_p(&l, &spec).map_err(|e| e.to_string())?;
        let x = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-1.0..1.0));
        let y: f64 = rng.gen_range(0.3..2.0);
        let mut m = CMatrix::zeros(2 * q, 2 * q);
        m.view_mut((0, 0), (q, 2 * q)).copy_from(&l.block());
        for i in 0..q {
            m[(q + i, i)] = if i < q0 { x } else { c(tau(nus[i - q0]) * y.powf(2.0 * nus[i - q0])) };
            m[(q + i, q + i)] = c(1.0);
        }
        let direct = leibniz_det(&m);
        let scale: f64 = p.terms().map(|(ell, k, v)| v.norm() * x.norm().powi(ell) * y.powf(2.0 * k.value)).sum();
        let err = (p.evaluate(x, y) - direct).norm() / scale.max(direct.norm()).max(1e-300);
        worst = worst.max(err);
    }
    check(worst <= 1e-10, format!("max relative error {worst:.2e} over 100 Lagrangians"))
}

fn round_trip_error(p: &ModelProblem) -> Result<f64, String> {
    let d = det_p(&p.lagrangian, &p.spec).map_err(|e| e.to_string())?;
    let n = normalize_leading(&d).map_err(|e| e.to_string())?;
    let (xi_max, l_max) = (6.0, 12);
    let ct = log_expand(&n.tail, xi_max, l_max).map_err(|e| e.to_string())?;
    let back: GenSeries = exp_minus_one(&ct.to_series(), xi_max, l_max).map_err(|e| e.to_string())?;
    let limit = ct.window_limited_from.unwrap_or(f64::INFINITY);
    let mut worst: f64 = 0.0;
    for (ell, key, v) in n.tail.terms().chain(back.terms()) {
        if key.value <= xi_max && key.value < limit && ell.abs() <= l_max {
            let err = (back.coeff(ell, &key.kvec) - n.tail.coeff(ell, &key.kvec)).norm() / v.norm().max(1.0);
            worst = worst.max(err);
        }
    }
    Ok(worst)
}

fn log_exp_round_trip() -> Outcome {
    let nu = cli::builtins::EXAMPLE_NU;
    let mut worst: f64 = 0.0;
    for p in [fmp(nu, 1.0, 1.0), countk(nu), problem(2, &[nu], 1.0, &[0.0, 1.0, -1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0], &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0])] {
        worst = worst.max(round_trip_error(&p)?);
    }
    check(worst <= 1e-12, format!("max coefficient error {worst:.2e} (fmp, countk, count3k tails)"))
}

fn ei_identity() -> Outcome {
    let mut worst: f64 = 0.0;
    for &(cc, s, k, t0) in &[(0.0, 1.0, 1u32, E), (0.0, 1.0, 2, E), (0.5, 0.7, 1, E * E)] {
        let r = verify_logint(cc, s, k, t0).map_err(|e| e.to_string())?;
        worst = worst.max(r.diff);
    }
    check(worst < 1e-8, format!("max |lhs - rhs| {worst:.2e}"))
}

fn asymptotics() -> Outcome {
    let xs = [100.0, 141.4, 200.0, 282.8, 400.0];
    let mut details = Vec::new();
    let mut ok = true;
    for (name, p) in [("fmp", fmp(0.3, 1.0, 1.0)), ("theta", theta_problem(PI / 6.0))] {
        let n = normalize_leading(&det_p(&p.lagrangian, &p.spec).unwrap()).unwrap();
        let ct = log_expand(&n.tail, 6.0, 12).unwrap();
        let tab = asymptotic_residual(&p, &ct, n.j0, n.alpha0.value, &xs).map_err(|e| e.to_string())?;
        let mags: Vec<f64> = tab.rows.iter().map(|r| r.residual.norm()).collect();
        let at200 = &tab.rows[2];
        let bounded = at200.residual.norm() < 10.0 * at200.predicted.abs();
        ok &= bounded && strictly_decreasing(&mags);
        details.push(format!("{name}: |r(200)| = {:.3e} vs prediction {:.3e}, slope {:.3}", mags[2], at200.predicted, tab.fit_exponent));
    }
    check(ok, details.join("; "))
}

fn friedrichs_emptiness() -> Outcome {
    let f = fmp(0.3, 0.0, 1.0);
    let r1 = zeta_structure(&f.lagrangian, &f.spec, 6.0, 12).map_err(|e| e.to_string())?;
    let t = theta_problem(FRAC_PI_2);
    let r2 = zeta_structure(&t.lagrangian, &t.spec, 6.0, 12).map_err(|e| e.to_string())?;
    check(r1.is_empty() && r2.is_empty(), format!("alpha = 0 empty: {}; theta = pi/2 empty: {}", r1.is_empty(), r2.is_empty()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 fmp residues", fmp_residues),
        ("2 arbitrary-order poles", arbitrary_order_poles),
        ("3 resolvent identity", resolvent_identity),
        ("4 closed-form spectra", closed_form_spectra),
        ("5 split-type betas", split_betas),
        ("6 determinant oracle", determinant_oracle),
        ("7 log/exp round trip", log_exp_round_trip),
        ("8 Ei identity", ei_identity),
        ("9 asymptotic residual", asymptotics),
        ("10 Friedrichs emptiness", friedrichs_emptiness),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(d) => println!("PASS criterion {name}: {d}"),
            Err(d) => {
                failed += 1;
                println!("FAIL criterion {name}: {d}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
