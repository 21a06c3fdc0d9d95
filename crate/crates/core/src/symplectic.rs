//! Boundary data: spectral exponents, Lagrangian matrices, decomposability
//! and split-type angles.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, RANK_TOL};

/// q₀, the exponents ν_j and the interval length R.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralSpec {
    pub q0: usize,
    pub nus: Vec<f64>,
    #[serde(rename = "R")]
    pub r: f64,
}

impl SpectralSpec {
    pub fn new(q0: usize, nus: Vec<f64>, r: f64) -> Result<Self> {
        let spec = Self { q0, nus, r };
        spec.check()?;
        Ok(spec)
    }

    pub fn check(&self) -> Result<()> {
        if self.q() == 0 {
            return Err(Error::InvalidSpec("q0 + q1 must be at least 1".into()));
        }
        if let Some(nu) = self.nus.iter().find(|&&nu| !(nu > 0.0 && nu < 1.0)) {
            return Err(Error::InvalidSpec(format!("exponent {nu} is not in (0,1)")));
        }
        if !(self.r > 0.0 && self.r.is_finite()) {
            return Err(Error::InvalidSpec(format!("R = {} must be positive", self.r)));
        }
        Ok(())
    }

    pub fn q1(&self) -> usize {
        self.nus.len()
    }

    pub fn q(&self) -> usize {
        self.q0 + self.nus.len()
    }

    /// Coordinate indices of V₀ inside C^{2q}: the first q₀ entries of both halves.
    pub fn v0_indices(&self) -> Vec<usize> {
        let q = self.q();
        (0..self.q0).chain(q..q + self.q0).collect()
    }

    pub fn v1_indices(&self) -> Vec<usize> {
        let q = self.q();
        (self.q0..q).chain(q + self.q0..2 * q).collect()
    }
}

/// The pair (𝒜, ℬ); the extension's domain is the null space of (𝒜 ℬ).
#[derive(Debug, Clone, PartialEq)]
pub struct Lagrangian {
    pub a: CMatrix,
    pub b: CMatrix,
}

impl Lagrangian {
    pub fn new(a: CMatrix, b: CMatrix) -> Result<Self> {
        if !a.is_square() || a.shape() != b.shape() {
            return Err(Error::Dimension(format!(
                "A is {}x{}, B is {}x{}; both must be q x q",
                a.nrows(),
                a.ncols(),
                b.nrows(),
                b.ncols()
            )));
        }
        Ok(Self { a, b })
    }

    pub fn q(&self) -> usize {
        self.a.nrows()
    }

    /// The q × 2q block (A B).
    pub fn block(&self) -> CMatrix {
        let q = self.q();
        let mut m = CMatrix::zeros(q, 2 * q);
        m.view_mut((0, 0), (q, q)).copy_from(&self.a);
        m.view_mut((0, q), (q, q)).copy_from(&self.b);
        m
    }

    /// True if every entry of A and B is real.
    pub fn is_real(&self) -> bool {
        self.a.iter().chain(self.b.iter()).all(|z| z.im == 0.0)
    }

    /// A with its first q₀ columns negated.
    pub fn a_prime(&self, q0: usize) -> CMatrix {
        let mut a = self.a.clone();
        for j in 0..q0.min(a.ncols()) {
            a.column_mut(j).neg_mut();
        }
        a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Ok,
    RankDeficient,
    NotSelfAdjoint,
}

/// Result of [`validate_lagrangian`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Validation {
    pub verdict: Verdict,
    pub rank: usize,
    /// ‖A′B* − (A′B*)*‖ relative to ‖A‖·‖B‖ (or 1).
    pub self_adjoint_residual: f64,
    /// σ_min/σ_max of (A B).
    pub conditioning: f64,
    pub warning: Option<String>,
}

/// Checks rank(A B) = q and self-adjointness of A′B*.
pub fn validate_lagrangian(l: &Lagrangian, spec: &SpectralSpec) -> Result<Validation> {
    let q = spec.q();
    if l.q() != q {
        return Err(Error::Dimension(format!("matrices are {0}x{0} but q = {q}", l.q())));
    }
    let s = linalg::singular_values(&l.block());
    let smax = s.first().copied().unwrap_or(0.0);
    let rank = if smax > 0.0 { s.iter().filter(|&&x| x > RANK_TOL * smax).count() } else { 0 };
    let conditioning = if smax > 0.0 { s.last().copied().unwrap_or(0.0) / smax } else { 0.0 };
    let m = l.a_prime(spec.q0) * l.b.adjoint();
    let scale = (linalg::fro(&l.a) * linalg::fro(&l.b)).max(1.0);
    let residual = linalg::fro(&(&m - m.adjoint())) / scale;
    let verdict = if rank < q {
        Verdict::RankDeficient
    } else if residual > RANK_TOL {
        Verdict::NotSelfAdjoint
    } else {
        Verdict::Ok
    };
    let mut warning = None;
    if rank == q && conditioning < 1e3 * RANK_TOL {
        warning = Some(format!("(A B) is nearly rank deficient: sigma_min/sigma_max = {conditioning:.3e}"));
    } else if verdict == Verdict::Ok && residual > 1e-3 * RANK_TOL {
        warning = Some(format!("self-adjointness residual {residual:.3e} is close to tolerance"));
    }
    Ok(Validation { verdict, rank, self_adjoint_residual: residual, conditioning, warning })
}

/// Validates and turns a failing verdict into an error.
pub fn require_valid(l: &Lagrangian, spec: &SpectralSpec) -> Result<Validation> {
    let v = validate_lagrangian(l, spec)?;
    match v.verdict {
        Verdict::Ok => Ok(v),
        Verdict::RankDeficient => Err(Error::InvalidLagrangian(format!("rank(A B) = {} < q = {}", v.rank, spec.q()))),
        Verdict::NotSelfAdjoint => Err(Error::InvalidLagrangian(format!(
            "A'B* is not self-adjoint (residual {:.3e})",
            v.self_adjoint_residual
        ))),
    }
}

/// Output of [`decompose`].
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionResult {
    pub decomposable: bool,
    pub a0: Option<CMatrix>,
    pub b0: Option<CMatrix>,
    pub a1: Option<CMatrix>,
    pub b1: Option<CMatrix>,
    pub split_angles: Option<Vec<f64>>,
}

/// Decides whether L = (L ∩ V₀) ⊕ (L ∩ V₁) and, if so, returns the block
/// matrices describing each piece.
pub fn decompose(l: &Lagrangian, spec: &SpectralSpec) -> Result<DecompositionResult> {
    require_valid(l, spec)?;
    let q = spec.q();
    let n = linalg::null_space(&l.block());
    let i0 = spec.v0_indices();
    let i1 = spec.v1_indices();
    let w0 = intersection(&n, &i0, &i1);
    let w1 = intersection(&n, &i1, &i0);
    let decomposable = w0.ncols() + w1.ncols() == q;
    if !decomposable {
        return Ok(DecompositionResult {
            decomposable,
            a0: None,
            b0: None,
            a1: None,
            b1: None,
            split_angles: None,
        });
    }
    let (a0, b0) = block_from_basis(&w0, spec.q0);
    let (a1, b1) = block_from_basis(&w1, spec.q1());
    let split = if spec.q0 > 0 { split_angles(&a0, &b0) } else { None };
    Ok(DecompositionResult {
        decomposable,
        a0: Some(a0),
        b0: Some(b0),
        a1: Some(a1),
        b1: Some(b1),
        split_angles: split,
    })
}

/// Basis of {v ∈ span N : v vanishes on `off`}, restricted to the `keep` coordinates.
fn intersection(n: &CMatrix, keep: &[usize], off: &[usize]) -> CMatrix {
    let k = if off.is_empty() {
        CMatrix::identity(n.ncols(), n.ncols())
    } else {
        linalg::null_space(&linalg::select_rows(n, off))
    };
    linalg::select_rows(n, keep) * k
}

/// (A B) of size m × 2m whose null space is spanned by the columns of `w`.
fn block_from_basis(w: &CMatrix, m: usize) -> (CMatrix, CMatrix) {
    if m == 0 {
        return (CMatrix::zeros(0, 0), CMatrix::zeros(0, 0));
    }
    // rows r with r·w = 0 (bilinear): null space of wᵀ
    let rows = linalg::null_space(&w.transpose());
    let rt = rows.transpose();
    let a = rt.columns(0, m).into_owned();
    let b = rt.columns(m, m).into_owned();
    (a, b)
}

/// One angle θ_ℓ ∈ [0, π) per coordinate pair (ℓ, q₀+ℓ) when the null space of
/// (A₀ B₀) splits into those pairs; `None` otherwise.
pub fn split_angles(a0: &CMatrix, b0: &CMatrix) -> Option<Vec<f64>> {
    let m = a0.nrows();
    if m == 0 || a0.shape() != b0.shape() {
        return None;
    }
    let mut block = CMatrix::zeros(m, 2 * m);
    block.view_mut((0, 0), (m, m)).copy_from(a0);
    block.view_mut((0, m), (m, m)).copy_from(b0);
    let n = linalg::null_space(&block);
    if n.ncols() != m {
        return None;
    }
    let mut angles = Vec::with_capacity(m);
    for ell in 0..m {
        let pair = [ell, m + ell];
        let rest: Vec<usize> = (0..2 * m).filter(|i| !pair.contains(i)).collect();
        let w = intersection(&n, &pair, &rest);
        if w.ncols() != 1 {
            return None;
        }
        let (x, y) = (w[(0, 0)], w[(1, 0)]);
        angles.push(angle_of(y, -x));
    }
    Some(angles)
}

/// θ with (cos θ, sin θ) ∝ (a b̄, |b|²), folded into [0, π).
fn angle_of(a: Complex64, b: Complex64) -> f64 {
    let beta = b.norm_sqr();
    if beta <= RANK_TOL * a.norm_sqr() {
        return 0.0;
    }
    let alpha = (a * b.conj()).re;
    let norm = alpha.hypot(beta);
    let mut theta = (beta / norm).atan2(alpha / norm);
    if theta >= std::f64::consts::PI {
        theta -= std::f64::consts::PI;
    }
    theta
}

/// Block-diagonal diag(cos θ_ℓ), diag(sin θ_ℓ).
pub fn from_angles(angles: &[f64]) -> (CMatrix, CMatrix) {
    let m = angles.len();
    let a = CMatrix::from_fn(m, m, |i, j| if i == j { Complex64::new(angles[i].cos(), 0.0) } else { Complex64::new(0.0, 0.0) });
    let b = CMatrix::from_fn(m, m, |i, j| if i == j { Complex64::new(angles[i].sin(), 0.0) } else { Complex64::new(0.0, 0.0) });
    (a, b)
}
