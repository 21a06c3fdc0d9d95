#![allow(dead_code)]

use cone_zeta::linalg::{from_real, CMatrix};
use cone_zeta::model::ModelProblem;
use cone_zeta::symplectic::{Lagrangian, SpectralSpec};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn problem(q0: usize, nus: &[f64], r: f64, a: &[f64], b: &[f64]) -> ModelProblem {
    let q = q0 + nus.len();
    let spec = SpectralSpec::new(q0, nus.to_vec(), r).unwrap();
    ModelProblem::new(spec, Lagrangian::new(from_real(q, q, a), from_real(q, q, b)).unwrap()).unwrap()
}

pub fn sine() -> ModelProblem {
    problem(0, &[0.5], 1.0, &[0.0], &[1.0])
}

pub fn cosine() -> ModelProblem {
    problem(0, &[0.5], 1.0, &[1.0], &[0.0])
}

pub fn countk(nu: f64) -> ModelProblem {
    problem(1, &[nu], 1.0, &[0.0, 1.0, -1.0, 0.0], &[1.0, 0.0, 0.0, 1.0])
}

pub fn fmp(nu: f64, alpha: f64, beta: f64) -> ModelProblem {
    problem(0, &[nu], 1.0, &[alpha], &[beta])
}

pub fn theta_problem(theta: f64) -> ModelProblem {
    problem(1, &[], 1.0, &[theta.cos()], &[theta.sin()])
}

fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn random_real(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0))
}

/// Well-conditioned invertible matrix: identity plus a small perturbation.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    CMatrix::identity(n, n) + random_complex(rng, n) * Complex64::new(0.4 / n as f64, 0.0)
}

fn negate_leading_columns(a: &mut CMatrix, q0: usize) {
    for j in 0..q0 {
        let col = -a.column(j);
        a.set_column(j, &col);
    }
}

/// Random valid complex Lagrangian: A′ = M(I − U), B = iM(I + U), U unitary.
pub fn random_complex_lagrangian(rng: &mut ChaCha8Rng, q0: usize, q: usize) -> Lagrangian {
    let u = random_complex(rng, q).qr().q();
    let m = random_invertible(rng, q);
    let id = CMatrix::identity(q, q);
    let mut a = &m * (&id - &u);
    let b = &m * (&id + &u) * Complex64::new(0.0, 1.0);
    negate_leading_columns(&mut a, q0);
    Lagrangian::new(a, b).unwrap()
}

/// Random valid real Lagrangian: (A′ B) = M(cos Θ, sin Θ), Θ symmetric.
pub fn random_real_lagrangian(rng: &mut ChaCha8Rng, q0: usize, q: usize) -> Lagrangian {
    let g = random_real(rng, q);
    let theta = (&g + g.transpose()) * 0.8;
    let eig = theta.symmetric_eigen();
    let v = &eig.eigenvectors;
    let cos = v * DMatrix::from_diagonal(&eig.eigenvalues.map(f64::cos)) * v.transpose();
    let sin = v * DMatrix::from_diagonal(&eig.eigenvalues.map(f64::sin)) * v.transpose();
    let m = random_real(rng, q) * (0.4 / q as f64) + DMatrix::identity(q, q);
    let to_c = |x: &DMatrix<f64>| x.map(|v| Complex64::new(v, 0.0));
    let mut a = to_c(&(&m * cos));
    let b = to_c(&(&m * sin));
    negate_leading_columns(&mut a, q0);
    Lagrangian::new(a, b).unwrap()
}

/// Random ν values in (0, 1), kept away from each other and the ends.
pub fn random_nus(rng: &mut ChaCha8Rng, q1: usize) -> Vec<f64> {
    (0..q1).map(|j| 0.1 + 0.8 * (j as f64 + rng.gen_range(0.1..0.9)) / q1 as f64).collect()
}

/// Determinant by the Leibniz permutation sum, for small matrices.
pub fn leibniz_det(m: &CMatrix) -> Complex64 {
    let n = m.nrows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Complex64::new(0.0, 0.0);
    permute(m, &mut perm, 0, &mut total);
    total
}

fn permute(m: &CMatrix, perm: &mut Vec<usize>, k: usize, total: &mut Complex64) {
    let n = perm.len();
    if k == n {
        let mut sign = 1.0;
        let mut seen = vec![false; n];
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        let mut prod = Complex64::new(sign, 0.0);
        for i in 0..n {
            prod *= m[(i, perm[i])];
            if prod == Complex64::new(0.0, 0.0) {
                return;
            }
        }
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(m, perm, k + 1, total);
        perm.swap(k, i);
    }
}

pub fn strictly_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}
