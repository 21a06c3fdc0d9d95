//! Eigenvalues of the model operator from the zeros of F.

use rayon::prelude::*;
use serde::Serialize;

use super::determinant::{f_mu, scaled_det};
use super::ModelProblem;
use crate::bessel::Z_SWITCH;
use crate::error::{Error, Result};

/// One eigenvalue μ². Negative eigenvalues −x² carry `mu = x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub mu: f64,
    pub mu_squared: f64,
    pub multiplicity: u32,
    /// Derivative test was inconclusive (possible higher-order zero).
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelSpectrum {
    /// Sorted by μ².
    pub eigs: Vec<Eigenvalue>,
    pub negative_count: usize,
    pub scan_bound: f64,
    pub negative_scan_bound: f64,
    /// Weyl slope q·R/π of the counting function in μ.
    pub density_slope: f64,
    /// Number of channels q, used for tail error bounds.
    pub channels: usize,
    pub warnings: Vec<String>,
}

impl ModelSpectrum {
    pub fn positive(&self) -> impl Iterator<Item = &Eigenvalue> {
        self.eigs.iter().filter(|e| e.mu_squared > 0.0)
    }

    /// Number of positive eigenvalues in (0, mu], with multiplicity.
    pub fn count_up_to(&self, mu: f64) -> u32 {
        self.positive().filter(|e| e.mu <= mu).map(|e| e.multiplicity).sum()
    }

    pub fn most_negative(&self) -> Option<f64> {
        self.eigs.iter().map(|e| e.mu_squared).filter(|&v| v < 0.0).reduce(f64::min)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    pub mu_max: f64,
    /// Negative eigenvalues are searched as −x² with x in (0, x_neg_max].
    pub x_neg_max: Option<f64>,
}

/// Eigenvalues with μ ≤ `mu_max` and all negative ones above −(50/R)².
pub fn find_eigenvalues(p: &ModelProblem, mu_max: f64) -> Result<ModelSpectrum> {
    find_eigenvalues_with(p, EigenOptions { mu_max, x_neg_max: None })
}

pub fn find_eigenvalues_with(p: &ModelProblem, opts: EigenOptions) -> Result<ModelSpectrum> {
    if !p.real_coefficients {
        return Err(Error::Unsupported(
            "the eigenvalue solver needs real (A, B); complex Lagrangians are limited to structure computations".into(),
        ));
    }
    if !(opts.mu_max > 0.0) {
        return Err(Error::InvalidInput(format!("mu_max must be positive, got {}", opts.mu_max)));
    }
    let r = p.spec.r;
    let q = p.spec.q();
    let step = std::f64::consts::PI / (8.0 * r * q as f64);
    let mut warnings = Vec::new();

    // zero modes: F(μ) ~ c μ^{2m} at the origin
    let f0 = f_mu(p, 0.0).re;
    let probe = (1..=4).map(|i| f_mu(p, i as f64 * step).re.abs()).fold(0.0, f64::max);
    let mut eigs = Vec::new();
    let zero_mode = f0.abs() <= 1e-10 * probe.max(f64::MIN_POSITIVE);
    let mut zero_mult = 0;
    if zero_mode {
        let eps = 1e-3 / r;
        let ratio = (f_mu(p, 2.0 * eps).re / f_mu(p, eps).re).abs();
        zero_mult = (ratio.ln() / 4f64.ln()).round().max(1.0) as u32;
        eigs.push(Eigenvalue { mu: 0.0, mu_squared: 0.0, multiplicity: zero_mult, flagged: false });
    }

    // positive eigenvalues
    let n = (opts.mu_max / step).ceil().max(1.0) as usize;
    let h = opts.mu_max / n as f64;
    let mut grid: Vec<f64> = (1..=n).map(|i| i as f64 * h).collect();
    if zero_mode {
        grid.insert(0, 1e-3 * h);
    } else {
        grid.insert(0, 0.0);
    }
    let g = |t: f64| f_mu(p, t).re;
    for (mu, mult, flagged) in scan_roots(&g, &grid) {
        if mu > 0.0 && mu <= opts.mu_max {
            eigs.push(Eigenvalue { mu, mu_squared: mu * mu, multiplicity: mult, flagged });
        }
    }

    // negative eigenvalues −x² from zeros of F(ix)
    let x_max = opts.x_neg_max.unwrap_or(50.0 / r);
    let nx = (x_max / step).ceil().max(1.0) as usize;
    let hx = x_max / nx as f64;
    // with a zero mode F(ix) ~ c x^{2m} is a cancelling difference near 0;
    // stop the geometric refinement before it drowns in rounding
    let x_floor = if zero_mode { hx * 1e-8f64.powf(1.0 / (2.0 * zero_mult as f64)) } else { 0.0 };
    let mut xgrid: Vec<f64> = (1..=40).rev().map(|k| hx * 0.5f64.powi(k)).filter(|&x| x >= x_floor).collect();
    xgrid.extend((1..=nx).map(|i| i as f64 * hx));
    if !zero_mode {
        xgrid.insert(0, 0.0);
    }
    let gx = |t: f64| {
        if t == 0.0 {
            f0
        } else {
            scaled_det(p, t, t * r <= Z_SWITCH).re
        }
    };
    let mut negative_count = 0;
    for (x, mult, flagged) in scan_roots(&gx, &xgrid) {
        if x > 0.0 {
            negative_count += mult as usize;
            eigs.push(Eigenvalue { mu: x, mu_squared: -x * x, multiplicity: mult, flagged });
        }
    }
    eigs.sort_by(|a, b| a.mu_squared.total_cmp(&b.mu_squared));

    let density_slope = q as f64 * r / std::f64::consts::PI;
    let spectrum = ModelSpectrum {
        eigs,
        negative_count,
        scan_bound: opts.mu_max,
        negative_scan_bound: x_max,
        density_slope,
        channels: q,
        warnings: Vec::new(),
    };
    let count = spectrum.count_up_to(opts.mu_max) as f64;
    let expected = density_slope * opts.mu_max;
    if (count - expected).abs() > 2.0 + q as f64 {
        warnings.push(format!(
            "found {count} eigenvalues below mu_max but the density slope predicts about {expected:.1}; roots may be missing"
        ));
    }
    if spectrum.eigs.iter().any(|e| e.flagged) {
        warnings.push("some zeros have a near-vanishing derivative; multiplicity needs review".into());
    }
    Ok(ModelSpectrum { warnings, ..spectrum })
}

/// Zeros of a real function sampled on an increasing grid: sign changes are
/// bisected; local minima of |g| without a sign change are resolved into a
/// pair of roots, a double root, or nothing.
pub(crate) fn scan_roots<G: Fn(f64) -> f64 + Sync>(g: &G, grid: &[f64]) -> Vec<(f64, u32, bool)> {
    let vals: Vec<f64> = grid.par_iter().map(|&t| g(t)).collect();
    let mut roots: Vec<(f64, u32, bool)> = Vec::new();
    for i in 0..grid.len().saturating_sub(1) {
        let (a, b) = (grid[i], grid[i + 1]);
        let (fa, fb) = (vals[i], vals[i + 1]);
        if fa == 0.0 {
            if i > 0 || a > 0.0 {
                roots.push((a, 1, false));
            }
            continue;
        }
        if fa * fb < 0.0 {
            let t = bisect(g, a, b, fa);
            let scale = fa.abs().max(fb.abs()) / (b - a);
            let dh = 1e-6 * (b - a);
            let slope = (g(t + dh) - g(t - dh)) / (2.0 * dh);
            roots.push((t, 1, slope.abs() < 1e-6 * scale));
        }
    }
    if let (Some(&t), Some(&v)) = (grid.last(), vals.last()) {
        if v == 0.0 {
            roots.push((t, 1, false));
        }
    }
    for i in 1..grid.len().saturating_sub(1) {
        let (fl, fm, fr) = (vals[i - 1], vals[i], vals[i + 1]);
        if fl * fm <= 0.0 || fm * fr <= 0.0 {
            continue;
        }
        if !(fm.abs() < fl.abs() && fm.abs() < fr.abs()) {
            continue;
        }
        let s = fm.signum();
        let (t, v) = golden_min(|t| s * g(t), grid[i - 1], grid[i + 1]);
        let scale = fl.abs().max(fr.abs());
        if v < 0.0 {
            let fa = g(grid[i - 1]);
            let t1 = bisect(g, grid[i - 1], t, fa);
            let t2 = bisect(g, t, grid[i + 1], v * s);
            roots.push((t1, 1, false));
            roots.push((t2, 1, false));
        } else if v <= 1e-9 * scale {
            roots.push((t, 2, true));
        }
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    roots
}

/// Bisection on a sign-changing bracket; `fa` is g(a).
fn bisect<G: Fn(f64) -> f64>(g: &G, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if b - a <= 1e-13 * b.abs().max(1e-300) || m == a || m == b {
            break;
        }
        let fm = g(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Golden-section minimum of `f` on [a, b].
fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> (f64, f64) {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a) <= 1e-14 * b.abs().max(1e-300) {
            break;
        }
        if fc < 0.0 {
            return (c, fc);
        }
        if fd < 0.0 {
            return (d, fd);
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_finds_simple_and_double_roots() {
        let g = |t: f64| (t - 1.0) * (t - 2.5).powi(2) * (t - 4.0);
        let grid: Vec<f64> = (0..=50).map(|i| i as f64 * 0.1 + 0.03).collect();
        let roots = scan_roots(&g, &grid);
        assert_eq!(roots.len(), 3);
        assert!((roots[0].0 - 1.0).abs() < 1e-12);
        assert_eq!(roots[1].1, 2);
        assert!((roots[1].0 - 2.5).abs() < 1e-6);
        assert!((roots[2].0 - 4.0).abs() < 1e-12);
    }

    #[test]
    fn scan_splits_close_pair() {
        let g = |t: f64| (t - 1.001) * (t - 1.003) + 0.0;
        let grid: Vec<f64> = (0..=20).map(|i| i as f64 * 0.1).collect();
        let roots = scan_roots(&g, &grid);
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 - 1.001).abs() < 1e-10);
        assert!((roots[1].0 - 1.003).abs() < 1e-10);
    }
}
