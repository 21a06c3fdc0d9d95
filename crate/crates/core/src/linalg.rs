//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Relative singular-value tolerance used for every rank decision.
pub const RANK_TOL: f64 = 1e-10;

/// Singular values of `m`, largest first.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Numerical rank: number of singular values above `RANK_TOL · σ_max`.
pub fn rank(m: &CMatrix) -> usize {
    let s = singular_values(m);
    match s.first() {
        Some(&smax) if smax > 0.0 => s.iter().filter(|&&x| x > RANK_TOL * smax).count(),
        _ => 0,
    }
}

/// Orthonormal basis (as columns) of {v : m v = 0}.
pub fn null_space(m: &CMatrix) -> CMatrix {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return CMatrix::zeros(0, 0);
    }
    // pad to a square matrix so the SVD returns a full set of right vectors
    let n = rows.max(cols);
    let mut padded = CMatrix::zeros(n, cols);
    padded.view_mut((0, 0), (rows, cols)).copy_from(m);
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("requested V");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cut = if smax > 0.0 { RANK_TOL * smax } else { f64::INFINITY };
    let picked: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| !(svd.singular_values[i] > cut))
        .collect();
    let mut out = CMatrix::zeros(cols, picked.len());
    for (j, &i) in picked.iter().enumerate() {
        for k in 0..cols {
            out[(k, j)] = vt[(i, k)].conj();
        }
    }
    out
}

/// Rows of `m` with the given indices, in order.
pub fn select_rows(m: &CMatrix, idx: &[usize]) -> CMatrix {
    CMatrix::from_fn(idx.len(), m.ncols(), |i, j| m[(idx[i], j)])
}

/// Determinant (LU); 1 for the empty matrix.
pub fn det(m: &CMatrix) -> Complex64 {
    if m.nrows() == 0 {
        return Complex64::new(1.0, 0.0);
    }
    m.clone().lu().determinant()
}

/// Frobenius norm.
pub fn fro(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Build a complex matrix from real entries.
pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> CMatrix {
    CMatrix::from_row_iterator(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)))
}
