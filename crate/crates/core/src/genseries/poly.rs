//! The determinant p(x, y), its normalization, and the q₀-block polynomial p₀(z).

use num_complex::Complex64;

use super::ctable::{log_expand, CTable};
use super::series::{ExponentKey, GenSeries, MERGE_TOL};
use crate::bessel::{tau, GAMMA_TILDE};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::symplectic::{Lagrangian, SpectralSpec};

/// Relative size below which a determinant coefficient counts as zero.
const DET_DROP: f64 = 1e-13;

/// p(x, y) = det [[A, B], [diag(x·Id_{q₀}, τ_j y^{2ν_j}), Id]], expanded
/// multilinearly over the symbolic lower rows.
pub fn det_p(l: &Lagrangian, spec: &SpectralSpec) -> Result<GenSeries> {
    let q = spec.q();
    if l.q() != q {
        return Err(Error::Dimension(format!("matrices are {0}x{0} but q = {q}", l.q())));
    }
    let taus: Vec<f64> = spec.nus.iter().map(|&nu| tau(nu)).collect();
    let top = l.block();
    // Hadamard bound of every minor, used as the absolute zero scale
    let row_norms: f64 = (0..q).map(|i| top.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()).product();
    let tau_scale: f64 = taus.iter().map(|t| t.max(1.0)).product();
    let scale = row_norms * tau_scale;

    let mut out = GenSeries::new(&spec.nus);
    let mut m = CMatrix::zeros(2 * q, 2 * q);
    m.view_mut((0, 0), (q, 2 * q)).copy_from(&top);
    for mask in 0u32..(1u32 << q) {
        for i in 0..q {
            m.row_mut(q + i).fill(Complex64::new(0.0, 0.0));
            let col = if mask & (1 << i) != 0 { i } else { q + i };
            m[(q + i, col)] = Complex64::new(1.0, 0.0);
        }
        let d = linalg::det(&m);
        if d.norm() <= DET_DROP * scale {
            continue;
        }
        let mut xpow = 0;
        let mut kvec = vec![0i32; spec.q1()];
        let mut factor = 1.0;
        for i in 0..q {
            if mask & (1 << i) != 0 {
                if i < spec.q0 {
                    xpow += 1;
                } else {
                    kvec[i - spec.q0] = 1;
                    factor *= taus[i - spec.q0];
                }
            }
        }
        out.add_term(xpow, kvec, d * factor);
    }
    out.merge_buckets();
    let top_coeff = out.max_abs();
    out.drop_below(DET_DROP * top_coeff.max(f64::MIN_POSITIVE));
    Ok(out)
}

/// p = a·x^{j₀}·y^{2α₀}·(1 + tail).
#[derive(Debug, Clone, PartialEq)]
pub struct Normalized {
    pub j0: i32,
    pub alpha0: ExponentKey,
    pub a: Complex64,
    pub tail: GenSeries,
}

/// Factors out the leading term: smallest ξ, then smallest x-power inside it.
pub fn normalize_leading(p: &GenSeries) -> Result<Normalized> {
    let keys = p.keys_by_value();
    let Some(first) = keys.first() else {
        return Err(Error::DegenerateDeterminant);
    };
    // keys are merged, so the minimal bucket has one representative
    let alpha0 = first.clone();
    let j0 = p
        .terms()
        .filter(|(_, k, _)| k.kvec == alpha0.kvec)
        .map(|(l, _, _)| l)
        .min()
        .expect("bucket is nonempty");
    let a = p.coeff(j0, &alpha0.kvec);
    let mut tail = GenSeries::new(p.nus());
    for (l, k, c) in p.terms() {
        if l == j0 && k.kvec == alpha0.kvec {
            continue;
        }
        let kv: Vec<i32> = k.kvec.iter().zip(&alpha0.kvec).map(|(x, y)| x - y).collect();
        tail.add_term(l - j0, kv, c / a);
    }
    tail.merge_buckets();
    debug_assert!(tail.terms().all(|(l, k, _)| k.value > MERGE_TOL || l > 0));
    Ok(Normalized { j0, alpha0, a, tail })
}

/// Coefficients (lowest degree first) of det [[A₀, B₀], [Id, (γ̃ − z) Id]].
pub fn poly_p0(a0: &CMatrix, b0: &CMatrix) -> Vec<Complex64> {
    let m = a0.nrows();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); m + 1];
    let mut mat = CMatrix::zeros(2 * m, 2 * m);
    mat.view_mut((0, 0), (m, m)).copy_from(a0);
    mat.view_mut((0, m), (m, m)).copy_from(b0);
    for mask in 0u32..(1u32 << m) {
        for i in 0..m {
            mat.row_mut(m + i).fill(Complex64::new(0.0, 0.0));
            if mask & (1 << i) != 0 {
                // the −z part of the row, with the sign pulled out below
                mat[(m + i, m + i)] = Complex64::new(1.0, 0.0);
            } else {
                mat[(m + i, i)] = Complex64::new(1.0, 0.0);
                mat[(m + i, m + i)] = Complex64::new(GAMMA_TILDE, 0.0);
            }
        }
        let k = mask.count_ones() as usize;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[k] += linalg::det(&mat) * sign;
    }
    coeffs
}

/// Degree of a coefficient list, ignoring negligible leading entries.
pub fn degree(p: &[Complex64]) -> Option<usize> {
    let top = p.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if top == 0.0 {
        return None;
    }
    (0..p.len()).rev().find(|&i| p[i].norm() > 1e-13 * top)
}

/// β₁..β_K with p₀′/p₀ = Σ β_k z^{−k}.
pub fn beta_coeffs(p0: &[Complex64], k_max: usize) -> Result<Vec<Complex64>> {
    let d = degree(p0).ok_or(Error::DegenerateDeterminant)?;
    let a = |i: i64| -> Complex64 {
        if i < 0 || i as usize > d {
            Complex64::new(0.0, 0.0)
        } else {
            p0[i as usize]
        }
    };
    let ad = p0[d];
    let di = d as i64;
    let mut beta: Vec<Complex64> = Vec::with_capacity(k_max);
    for k in 1..=k_max as i64 {
        let mut num = a(di - k + 1) * (di - k + 1) as f64;
        for j in 1..k {
            num -= a(di - k + j) * beta[(j - 1) as usize];
        }
        beta.push(num / ad);
    }
    Ok(beta)
}

/// The pure-y block: p₁(y), its normalization and log-expansion table.
pub fn poly_p1(a1: &CMatrix, b1: &CMatrix, nus: &[f64], xi_max: f64, l_max: i32) -> Result<(Normalized, CTable)> {
    let spec = SpectralSpec { q0: 0, nus: nus.to_vec(), r: 1.0 };
    let l = Lagrangian::new(a1.clone(), b1.clone())?;
    let p = det_p(&l, &spec)?;
    let n = normalize_leading(&p)?;
    let ct = log_expand(&n.tail, xi_max, l_max)?;
    Ok((n, ct))
}
