mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use common::*;
use cone_zeta::linalg::{from_real, CMatrix};
use cone_zeta::symplectic::{decompose, from_angles, split_angles, validate_lagrangian, Lagrangian, SpectralSpec, Verdict};
use num_complex::Complex64;
use rand::Rng;

#[test]
fn example_verdicts() {
    let spec = SpectralSpec::new(1, vec![], 1.0).unwrap();
    for &t in &[0.0, 0.7, FRAC_PI_2, 3.0] {
        let l = Lagrangian::new(from_real(1, 1, &[t.cos()]), from_real(1, 1, &[t.sin()])).unwrap();
        assert_eq!(validate_lagrangian(&l, &spec).unwrap().verdict, Verdict::Ok);
    }
    let zero = Lagrangian::new(from_real(1, 1, &[0.0]), from_real(1, 1, &[0.0])).unwrap();
    assert_eq!(validate_lagrangian(&zero, &spec).unwrap().verdict, Verdict::RankDeficient);

    let spec = SpectralSpec::new(0, vec![0.3], 1.0).unwrap();
    let l = Lagrangian::new(from_real(1, 1, &[1.0]), CMatrix::from_element(1, 1, Complex64::i())).unwrap();
    assert_eq!(validate_lagrangian(&l, &spec).unwrap().verdict, Verdict::NotSelfAdjoint);
}

#[test]
fn verdict_invariant_under_row_operations() {
    let mut r = rng(11);
    for trial in 0..100 {
        let q = 1 + trial % 4;
        let q0 = r.gen_range(0..=q);
        let spec = SpectralSpec::new(q0, random_nus(&mut r, q - q0), 1.0).unwrap();
        let l = match trial % 3 {
            0 => random_complex_lagrangian(&mut r, q0, q),
            1 => random_real_lagrangian(&mut r, q0, q),
            _ => {
                // generic (A, B): usually not self-adjoint
                let f = |r: &mut rand_chacha::ChaCha8Rng| CMatrix::from_fn(q, q, |_, _| c(r.gen_range(-1.0..1.0)));
                let a = f(&mut r);
                Lagrangian::new(a, f(&mut r)).unwrap()
            }
        };
        let m = CMatrix::identity(q, q)
            + CMatrix::from_fn(q, q, |_, _| Complex64::new(r.gen_range(-0.3..0.3), r.gen_range(-0.3..0.3)));
        let lm = Lagrangian::new(&m * &l.block().columns(0, q), &m * &l.block().columns(q, q)).unwrap();
        let v1 = validate_lagrangian(&l, &spec).unwrap().verdict;
        let v2 = validate_lagrangian(&lm, &spec).unwrap().verdict;
        assert_eq!(v1, v2, "trial {trial}");
    }
}

#[test]
fn coupled_countk_not_decomposable() {
    let p = countk(0.3);
    assert!(!decompose(&p.lagrangian, &p.spec).unwrap().decomposable);
}

#[test]
fn block_diagonal_inputs_decompose() {
    let mut r = rng(12);
    for _ in 0..20 {
        let q0 = r.gen_range(1..=2);
        let q1 = r.gen_range(1..=2);
        let q = q0 + q1;
        let angles: Vec<f64> = (0..q0).map(|_| r.gen_range(0.0..PI)).collect();
        let (a0, b0) = from_angles(&angles);
        let l1 = random_real_lagrangian(&mut r, 0, q1);
        let mut a = CMatrix::zeros(q, q);
        let mut b = CMatrix::zeros(q, q);
        a.view_mut((0, 0), (q0, q0)).copy_from(&a0);
        b.view_mut((0, 0), (q0, q0)).copy_from(&b0);
        a.view_mut((q0, q0), (q1, q1)).copy_from(&l1.block().columns(0, q1));
        b.view_mut((q0, q0), (q1, q1)).copy_from(&l1.block().columns(q1, q1));
        let spec = SpectralSpec::new(q0, random_nus(&mut r, q1), 1.0).unwrap();
        let d = decompose(&Lagrangian::new(a, b).unwrap(), &spec).unwrap();
        assert!(d.decomposable);
        let mut got = d.split_angles.expect("diagonal L0 is split-type");
        got.sort_by(f64::total_cmp);
        let mut want = angles.clone();
        want.sort_by(f64::total_cmp);
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-10);
        }
    }
}

#[test]
fn angle_examples_and_round_trip() {
    let one = |a: f64, b: f64| split_angles(&from_real(1, 1, &[a]), &from_real(1, 1, &[b])).unwrap()[0];
    assert!(one(1.0, 0.0).abs() < 1e-15);
    assert!((one(0.0, 1.0) - FRAC_PI_2).abs() < 1e-15);
    assert!((one(1.0, 1.0) - FRAC_PI_4).abs() < 1e-15);

    let mut r = rng(13);
    for _ in 0..50 {
        let n = r.gen_range(1..=3);
        let angles: Vec<f64> = (0..n).map(|_| r.gen_range(0.0..PI)).collect();
        let (a, b) = from_angles(&angles);
        let got = split_angles(&a, &b).unwrap();
        for (g, w) in got.iter().zip(&angles) {
            assert!((g - w).abs() < 1e-12);
        }
    }
}
