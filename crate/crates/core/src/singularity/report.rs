use num_complex::Complex64;
use serde::Serialize;

use super::GAMMA_TILDE;
use crate::error::Result;
use crate::genseries::{
    beta_coeffs, det_p, extract_markers, log_expand, normalize_leading, poly_p0, poly_p1, CEntry, CTable,
    DEFAULT_L_MAX,
};
use crate::linalg::CMatrix;
use crate::symplectic::{decompose, require_valid, Lagrangian, SpectralSpec};

/// Number of β_k kept in the decomposable view by default.
pub const DEFAULT_K: usize = 12;

/// A pole of order |p_ξ| + 1 at s = −ξ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoleEntry {
    pub location: f64,
    pub label: String,
    pub order: u32,
    /// f_ξ(−ξ).
    pub leading: Complex64,
    /// sin(−πξ)/π · f_ξ(−ξ), for simple poles at non-integer ξ.
    pub combined_residue: Option<Complex64>,
    /// ξ is an integer, so the sine factor vanishes there.
    pub integer_flag: bool,
    /// The ℓ window may hide lower p_ξ.
    pub unreliable: bool,
}

/// A log(s + ξ) singularity whose coefficient g_ξ starts at (s + ξ)^{ℓ_ξ−1}.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogEntry {
    pub location: f64,
    pub label: String,
    pub ell: i32,
    pub leading: Complex64,
    pub unreliable: bool,
}

/// f(s) = Σ_k β_k (−2s)^{k−1}/(k−1)! and the c_ξ pole table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecomposableView {
    pub betas: Vec<Complex64>,
    /// Coefficient of s^{k−1} in f(s), k = 1..K.
    pub f_coeffs: Vec<Complex64>,
    /// (ξ, c_ξ).
    pub c_xi: Vec<(f64, Complex64)>,
}

impl DecomposableView {
    /// Truncated Taylor sum of f at s.
    pub fn f_at(&self, s: f64) -> Complex64 {
        self.f_coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * s + c)
    }
}

/// Angles of a split L₀ and κ_ℓ = γ̃ − tan θ_ℓ for θ_ℓ ≠ π/2.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitView {
    pub angles: Vec<f64>,
    pub kappas: Vec<f64>,
}

impl SplitView {
    pub fn new(angles: Vec<f64>) -> Self {
        let kappas = angles
            .iter()
            .filter(|t| (*t - std::f64::consts::FRAC_PI_2).abs() > 1e-10)
            .map(|t| GAMMA_TILDE - t.tan())
            .collect();
        Self { angles, kappas }
    }

    /// f(s) = Σ e^{−2sκ_ℓ}.
    pub fn f_at(&self, s: f64) -> f64 {
        self.kappas.iter().map(|k| (-2.0 * s * k).exp()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    General,
    Decomposable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularityReport {
    pub path: Path,
    pub q0: usize,
    pub j0: i32,
    /// ξ of the leading monomial y^{2α₀}.
    pub alpha0: f64,
    /// j₀ − q₀, the coefficient of e^{−2s(log 2 − γ)} log s.
    pub log_at_zero_coeff: i32,
    /// Sorted by location, descending.
    pub poles: Vec<PoleEntry>,
    pub logs: Vec<LogEntry>,
    pub xi_max: f64,
    pub l_max: i32,
    /// Entries at or beyond this ξ may be incomplete.
    pub window_limited_from: Option<f64>,
    pub decomposable_view: Option<DecomposableView>,
    pub split_view: Option<SplitView>,
    /// The c_{ℓξ} table behind the ledger.
    pub table: CTable,
}

impl SingularityReport {
    /// No poles, no logs, no log s term.
    pub fn is_empty(&self) -> bool {
        let f_zero = self
            .decomposable_view
            .as_ref()
            .map_or(true, |d| d.f_coeffs.iter().all(|c| c.norm() == 0.0));
        self.poles.is_empty() && self.logs.is_empty() && self.log_at_zero_coeff == 0 && f_zero
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn pole_from_entry(e: &CEntry) -> Option<PoleEntry> {
    let p = e.p?;
    let xi = e.xi();
    if xi <= 0.0 {
        return None;
    }
    let ap = p.unsigned_abs();
    let sign = if (ap + 1) % 2 == 0 { 1.0 } else { -1.0 };
    let leading = e.coeff(p) * (sign * xi * factorial(ap) / 2f64.powi(ap as i32));
    Some(simple_or_higher(xi, e.key.label(), ap + 1, leading, e.key.is_integer(), e.p_unreliable))
}

fn simple_or_higher(xi: f64, label: String, order: u32, leading: Complex64, integer: bool, unreliable: bool) -> PoleEntry {
    let combined_residue = if order == 1 && !integer {
        Some(leading * ((-std::f64::consts::PI * xi).sin() / std::f64::consts::PI))
    } else {
        None
    };
    PoleEntry { location: -xi, label, order, leading, combined_residue, integer_flag: integer, unreliable }
}

fn log_from_entry(e: &CEntry) -> Option<LogEntry> {
    let ell = e.ell?;
    let xi = e.xi();
    let scale = 2f64.powi(ell) / factorial((ell - 1) as u32);
    let leading = if e.key.is_zero() { e.coeff(ell) * scale } else { -e.coeff(ell) * xi * scale };
    Some(LogEntry { location: -xi, label: e.key.label(), ell, leading, unreliable: e.ell_unreliable })
}

fn sort_poles(poles: &mut [PoleEntry]) {
    poles.sort_by(|a, b| b.location.total_cmp(&a.location));
}

/// Ledger of a validated Lagrangian via p(x, y) → normalization → log table.
/// Decomposable and split views are attached when they apply.
pub fn zeta_structure(l: &Lagrangian, spec: &SpectralSpec, xi_max: f64, l_max: i32) -> Result<SingularityReport> {
    require_valid(l, spec)?;
    let p = det_p(l, spec)?;
    let n = normalize_leading(&p)?;
    let ct = extract_markers(log_expand(&n.tail, xi_max, l_max)?);
    let mut poles: Vec<PoleEntry> = ct.entries.iter().filter_map(pole_from_entry).collect();
    sort_poles(&mut poles);
    let logs: Vec<LogEntry> = ct.entries.iter().filter_map(log_from_entry).collect();

    let dec = decompose(l, spec)?;
    let mut decomposable_view = None;
    let mut split_view = None;
    if dec.decomposable {
        if let (Some(a0), Some(b0)) = (&dec.a0, &dec.b0) {
            if spec.q0 > 0 {
                decomposable_view = Some(f_view(a0, b0, DEFAULT_K, &[])?);
            }
        }
        split_view = dec.split_angles.map(SplitView::new);
    }
    Ok(SingularityReport {
        path: Path::General,
        q0: spec.q0,
        j0: n.j0,
        alpha0: n.alpha0.value,
        log_at_zero_coeff: n.j0 - spec.q0 as i32,
        poles,
        logs,
        xi_max,
        l_max,
        window_limited_from: ct.window_limited_from,
        decomposable_view,
        split_view,
        table: ct,
    })
}

fn f_view(a0: &CMatrix, b0: &CMatrix, k: usize, c_xi: &[(f64, Complex64)]) -> Result<DecomposableView> {
    let betas = beta_coeffs(&poly_p0(a0, b0), k)?;
    let mut f_coeffs = Vec::with_capacity(k);
    let mut fact = 1.0;
    for (i, b) in betas.iter().enumerate() {
        if i > 0 {
            fact *= i as f64;
        }
        f_coeffs.push(b * ((-2f64).powi(i as i32) / fact));
    }
    Ok(DecomposableView { betas, f_coeffs, c_xi: c_xi.to_vec() })
}

/// Ledger of L = L₀ ⊕ L₁ from the blocks: f(s) from β_k and simple poles
/// with f_ξ(−ξ) = −c_ξ ξ. The ξ = 0 logarithms are carried by f(s).
pub fn decomposable_structure(
    a0: &CMatrix,
    b0: &CMatrix,
    a1: &CMatrix,
    b1: &CMatrix,
    spec: &SpectralSpec,
    k: usize,
    xi_max: f64,
) -> Result<SingularityReport> {
    spec.check()?;
    let spec0 = SpectralSpec { q0: spec.q0, nus: vec![], r: spec.r };
    let (j0, betas_view, split_view) = if spec.q0 > 0 {
        let l0 = Lagrangian::new(a0.clone(), b0.clone())?;
        require_valid(&l0, &spec0)?;
        let n0 = normalize_leading(&det_p(&l0, &spec0)?)?;
        let view = f_view(a0, b0, k, &[])?;
        (n0.j0, Some(view), crate::symplectic::split_angles(a0, b0).map(SplitView::new))
    } else {
        (0, None, None)
    };
    let (alpha0, ct) = if spec.q1() > 0 {
        let spec1 = SpectralSpec { q0: 0, nus: spec.nus.clone(), r: spec.r };
        require_valid(&Lagrangian::new(a1.clone(), b1.clone())?, &spec1)?;
        let (n1, ct) = poly_p1(a1, b1, &spec.nus, xi_max, DEFAULT_L_MAX)?;
        (n1.alpha0.value, extract_markers(ct))
    } else {
        (0.0, CTable { nus: vec![], xi_max, l_max: DEFAULT_L_MAX, entries: vec![], window_limited_from: None })
    };
    let c_xi: Vec<(f64, Complex64)> = ct.entries.iter().map(|e| (e.xi(), e.coeff(0))).filter(|(_, c)| c.norm() > 0.0).collect();
    let mut poles: Vec<PoleEntry> = ct
        .entries
        .iter()
        .filter(|e| e.xi() > 0.0 && e.coeff(0).norm() > 0.0)
        .map(|e| simple_or_higher(e.xi(), e.key.label(), 1, -e.coeff(0) * e.xi(), e.key.is_integer(), e.p_unreliable))
        .collect();
    sort_poles(&mut poles);
    let decomposable_view = betas_view.map(|v| DecomposableView { c_xi: c_xi.clone(), ..v }).or_else(|| {
        Some(DecomposableView { betas: vec![], f_coeffs: vec![], c_xi: c_xi.clone() })
    });
    Ok(SingularityReport {
        path: Path::Decomposable,
        q0: spec.q0,
        j0,
        alpha0,
        log_at_zero_coeff: j0 - spec.q0 as i32,
        poles,
        logs: vec![],
        xi_max,
        l_max: DEFAULT_L_MAX,
        window_limited_from: ct.window_limited_from,
        decomposable_view,
        split_view,
        table: ct,
    })
}
