//! Evaluable L-dependent terms of the resolvent trace expansion.
//!
//! Terms live in the algebra coef·u^{−a}·(c − log u)^{−b} with u = −λ,
//! which is closed under d/dλ.

use num_complex::Complex64;
use serde::Serialize;

use super::report::{Path, SingularityReport};
use super::GAMMA_TILDE;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailTerm {
    pub coef: Complex64,
    pub a: f64,
    pub b: i32,
    pub c: f64,
}

impl TailTerm {
    pub fn eval(&self, lambda: f64) -> Complex64 {
        let u = -lambda;
        self.coef * u.powf(-self.a) * (self.c - u.ln()).powi(-self.b)
    }

    /// d/dλ, as up to two terms.
    pub fn derivative(&self) -> Vec<TailTerm> {
        let mut out = Vec::with_capacity(2);
        if self.a != 0.0 {
            out.push(TailTerm { coef: self.coef * self.a, a: self.a + 1.0, b: self.b, c: self.c });
        }
        if self.b != 0 {
            out.push(TailTerm { coef: self.coef * -(self.b as f64), a: self.a + 1.0, b: self.b + 1, c: self.c });
        }
        out
    }
}

fn differentiate(terms: Vec<TailTerm>, n: usize) -> Vec<TailTerm> {
    let mut cur = terms;
    for _ in 0..n {
        let mut next: Vec<TailTerm> = Vec::with_capacity(cur.len() * 2);
        for t in cur.iter().flat_map(|t| t.derivative()) {
            match next.iter_mut().find(|s| s.b == t.b && s.c == t.c && (s.a - t.a).abs() < 1e-12) {
                Some(s) => s.coef += t.coef,
                None => next.push(t),
            }
        }
        next.retain(|t| t.coef.norm() > 0.0);
        cur = next;
    }
    cur
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailEvaluation {
    pub n: usize,
    pub lambda: f64,
    pub value: Complex64,
    /// Differentiated terms, already divided by N!.
    pub terms: Vec<TailTerm>,
}

/// The L-dependent part of Tr(Δ_L − λ)^{−N−1} at large negative λ:
/// (1/N!) d^N {(q₀−j₀)/((−λ)(log(−λ) − 2γ̃))} − (1/N!) d^{N+1} {Σ 2^ℓ c_{ℓξ}(−λ)^{−ξ}(2γ̃ − log(−λ))^{−ℓ}},
/// with the β_k / c_ξ form used for reports built from decomposable blocks.
pub fn resolvent_tail_terms(report: &SingularityReport, n: usize, lambda: f64) -> Result<TailEvaluation> {
    if !(lambda < 0.0) {
        return Err(Error::InvalidInput(format!("lambda must be negative, got {lambda}")));
    }
    let c2 = 2.0 * GAMMA_TILDE;
    let mut first: Vec<TailTerm> = Vec::new();
    let mut second: Vec<TailTerm> = Vec::new();
    match report.path {
        Path::General => {
            let k = (report.q0 as i32 - report.j0) as f64;
            if k != 0.0 {
                // 1/(u(L − 2γ̃)) = −u^{−1}(2γ̃ − L)^{−1}
                first.push(TailTerm { coef: Complex64::new(-k, 0.0), a: 1.0, b: 1, c: c2 });
            }
            for e in &report.table.entries {
                for &(l, c) in &e.terms {
                    second.push(TailTerm { coef: c * 2f64.powi(l), a: e.xi(), b: l, c: c2 });
                }
            }
        }
        Path::Decomposable => {
            if let Some(view) = &report.decomposable_view {
                // (log u)^{−k} = (−1)^k (0 − log u)^{−k}
                for (i, beta) in view.betas.iter().enumerate() {
                    let k = i as i32 + 1;
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    first.push(TailTerm { coef: beta * (sign * 2f64.powi(k - 1)), a: 1.0, b: k, c: 0.0 });
                }
                for &(xi, c) in &view.c_xi {
                    second.push(TailTerm { coef: c, a: xi, b: 0, c: 0.0 });
                }
            }
        }
    }
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    let mut terms = differentiate(first, n);
    terms.extend(differentiate(second, n + 1).into_iter().map(|t| TailTerm { coef: -t.coef, ..t }));
    for t in &mut terms {
        t.coef /= fact;
    }
    let value = terms.iter().map(|t| t.eval(lambda)).sum();
    Ok(TailEvaluation { n, lambda, value, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_match_finite_differences() {
        let c2 = 2.0 * GAMMA_TILDE;
        for &(xi, l) in &[(0.5, 1), (1.0, -2)] {
            let t = TailTerm { coef: Complex64::new(1.0, 0.0), a: xi, b: l, c: c2 };
            let d = differentiate(vec![t], 1);
            let lam = -100.0;
            let h = 1e-3;
            let fd = (t.eval(lam + h) - t.eval(lam - h)) / (2.0 * h);
            let an: Complex64 = d.iter().map(|s| s.eval(lam)).sum();
            assert!((an - fd).norm() < 1e-7 * fd.norm().max(1e-3), "{an} vs {fd}");
        }
    }
}
