//! log(1 + T) in the term algebra and the c_{ℓξ} table.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use super::series::{ExponentKey, GenSeries, DROP_TOL, MERGE_TOL};
use crate::error::{Error, Result};

/// All c_{ℓξ} for one numerical ξ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CEntry {
    pub key: ExponentKey,
    /// (ℓ, c_{ℓξ}) with |ℓ| ≤ Lmax, sorted by ℓ.
    pub terms: Vec<(i32, Complex64)>,
    /// min ℓ ≤ 0 with c ≠ 0.
    pub p: Option<i32>,
    /// min ℓ > 0 with c ≠ 0.
    pub ell: Option<i32>,
    pub p_unreliable: bool,
    pub ell_unreliable: bool,
    /// Nonzero coefficients exist below −Lmax at this ξ.
    pub has_below: bool,
    /// Nonzero coefficients exist above Lmax at this ξ.
    pub has_above: bool,
}

impl CEntry {
    pub fn xi(&self) -> f64 {
        self.key.value
    }

    pub fn coeff(&self, ell: i32) -> Complex64 {
        self.terms.iter().find(|(l, _)| *l == ell).map(|(_, c)| *c).unwrap_or_default()
    }
}

/// The table c_{ℓξ} with markers p_ξ, ℓ_ξ and the sets 𝒫, ℒ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CTable {
    pub nus: Vec<f64>,
    pub xi_max: f64,
    pub l_max: i32,
    /// Sorted by ξ.
    pub entries: Vec<CEntry>,
    /// Smallest ξ at which terms outside the ℓ window were discarded; the
    /// table may be incomplete from there on.
    pub window_limited_from: Option<f64>,
}

impl CTable {
    pub fn entry(&self, kvec: &[i32]) -> Option<&CEntry> {
        self.entries.iter().find(|e| e.key.kvec == kvec)
    }

    /// c_{ℓξ} for the bucket with this key vector (0 if absent).
    pub fn get(&self, ell: i32, kvec: &[i32]) -> Complex64 {
        self.entry(kvec).map(|e| e.coeff(ell)).unwrap_or_default()
    }

    /// 𝒫 = {ξ : p_ξ defined}.
    pub fn p_set(&self) -> Vec<f64> {
        self.entries.iter().filter(|e| e.p.is_some()).map(|e| e.xi()).collect()
    }

    /// ℒ = {ξ : ℓ_ξ defined}.
    pub fn l_set(&self) -> Vec<f64> {
        self.entries.iter().filter(|e| e.ell.is_some()).map(|e| e.xi()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.iter().all(|e| e.terms.is_empty())
    }

    /// Σ c_{ℓξ} xˡ y^{2ξ} as a series.
    pub fn to_series(&self) -> GenSeries {
        let mut s = GenSeries::with_truncation(&self.nus, self.xi_max, self.l_max);
        for e in &self.entries {
            for &(l, c) in &e.terms {
                s.add_term(l, e.key.kvec.clone(), c);
            }
        }
        s
    }
}

/// Fills p_ξ, ℓ_ξ and their reliability flags from the listed terms.
pub fn extract_markers(mut ct: CTable) -> CTable {
    for e in &mut ct.entries {
        e.p = e.terms.iter().filter(|(l, _)| *l <= 0).map(|(l, _)| *l).min();
        e.ell = e.terms.iter().filter(|(l, _)| *l > 0).map(|(l, _)| *l).min();
        e.p_unreliable = e.has_below;
        e.ell_unreliable = e.ell.is_none() && e.has_above;
    }
    ct
}

/// Result of summing Σ a_m Tᵐ before windowing.
pub(crate) struct Composed {
    pub series: GenSeries,
    pub pruned_above: BTreeMap<Vec<i32>, ()>,
    pub pruned_below: BTreeMap<Vec<i32>, ()>,
}

/// Σ_{m≥1} a_m Tᵐ truncated to ξ ≤ Ξmax, dropping only powers whose
/// descendants can never return to |ℓ| ≤ Lmax.
pub(crate) fn compose(t: &GenSeries, coeff: impl Fn(usize) -> f64, xi_max: f64, l_max: i32) -> Composed {
    let nus = t.nus().to_vec();
    let mut base = GenSeries::with_truncation(&nus, xi_max, i32::MAX);
    for (l, k, c) in t.terms() {
        base.add_term(l, k.kvec, c);
    }
    // how fast ℓ can fall (resp. rise) per unit of ξ spent
    let mut r_down: f64 = 0.0;
    let mut r_up: f64 = 0.0;
    let mut has_flat = false;
    for (l, k, _) in base.terms() {
        if k.value < MERGE_TOL {
            has_flat = true;
        } else {
            r_down = r_down.max((-l).max(0) as f64 / k.value);
            r_up = r_up.max(l.max(0) as f64 / k.value);
        }
    }
    let lm = l_max as f64 + 1e-9;
    let mut acc = GenSeries::with_truncation(&nus, xi_max, i32::MAX);
    let mut pruned_above = BTreeMap::new();
    let mut pruned_below = BTreeMap::new();
    let mut power = base.clone();
    let mut m = 1usize;
    while !power.is_empty() && m < 100_000 {
        let mut removed = Vec::new();
        for (k, ell) in power.raw_terms().keys() {
            let slack = (xi_max - power.xi(k)).max(0.0);
            let l = *ell as f64;
            if l - slack * r_down > lm {
                pruned_above.insert(k.clone(), ());
                removed.push((k.clone(), *ell));
            } else if !has_flat && l + slack * r_up < -lm {
                pruned_below.insert(k.clone(), ());
                removed.push((k.clone(), *ell));
            }
        }
        let a = coeff(m);
        for ((k, l), c) in power.raw_terms() {
            // pruned terms still count at their own ξ; they are outside the window anyway
            *acc.raw_terms_mut().entry((k.clone(), *l)).or_default() += a * c;
        }
        for key in removed {
            power.raw_terms_mut().remove(&key);
        }
        if power.is_empty() {
            break;
        }
        power = power.mul(&base);
        m += 1;
    }
    acc.merge_buckets();
    acc.drop_small(DROP_TOL);
    Composed { series: acc, pruned_above, pruned_below }
}

/// Windows a composed series into a table with markers.
fn tabulate(composed: Composed, xi_max: f64, l_max: i32) -> CTable {
    let s = composed.series;
    let nus = s.nus().to_vec();
    let mut buckets: BTreeMap<Vec<i32>, CEntry> = BTreeMap::new();
    let mut limited: Option<f64> = None;
    let mut note = |xi: f64| limited = Some(limited.map_or(xi, |v: f64| v.min(xi)));
    for ((k, l), c) in s.raw_terms() {
        let e = buckets.entry(k.clone()).or_insert_with(|| CEntry {
            key: ExponentKey::new(k.clone(), &nus),
            terms: Vec::new(),
            p: None,
            ell: None,
            p_unreliable: false,
            ell_unreliable: false,
            has_below: false,
            has_above: false,
        });
        if *l > l_max {
            e.has_above = true;
            note(e.key.value);
        } else if *l < -l_max {
            e.has_below = true;
            note(e.key.value);
        } else {
            e.terms.push((*l, *c));
        }
    }
    for k in composed.pruned_above.keys() {
        if let Some(e) = buckets.get_mut(k) {
            e.has_above = true;
        }
        note(ExponentKey::new(k.clone(), &nus).value);
    }
    for k in composed.pruned_below.keys() {
        if let Some(e) = buckets.get_mut(k) {
            e.has_below = true;
        }
        note(ExponentKey::new(k.clone(), &nus).value);
    }
    let mut entries: Vec<CEntry> = buckets.into_values().collect();
    for e in &mut entries {
        e.terms.sort_by_key(|(l, _)| *l);
    }
    entries.sort_by(|a, b| a.key.value.total_cmp(&b.key.value).then_with(|| a.key.kvec.cmp(&b.key.kvec)));
    extract_markers(CTable { nus, xi_max, l_max, entries, window_limited_from: limited })
}

fn check_constant_free(t: &GenSeries) -> Result<()> {
    for (l, k, _) in t.terms() {
        if k.value < -MERGE_TOL || (k.value < MERGE_TOL && (l <= 0 || !k.is_zero())) {
            return Err(Error::InvalidInput(format!(
                "series has a term x^{l} y^(2*{}) that is not strictly above the constant term",
                k.label()
            )));
        }
    }
    Ok(())
}

/// Coefficients of log(1 + T) = Σ (−1)^{m−1}/m · Tᵐ.
pub fn log_expand(tail: &GenSeries, xi_max: f64, l_max: i32) -> Result<CTable> {
    check_constant_free(tail)?;
    let composed = compose(tail, |m| if m % 2 == 1 { 1.0 / m as f64 } else { -1.0 / m as f64 }, xi_max, l_max);
    Ok(tabulate(composed, xi_max, l_max))
}

/// exp(C) − 1 = Σ Cᵐ/m!, windowed like [`log_expand`].
pub fn exp_minus_one(c: &GenSeries, xi_max: f64, l_max: i32) -> Result<GenSeries> {
    check_constant_free(c)?;
    let composed = compose(
        c,
        |m| {
            let mut f = 1.0;
            for i in 2..=m {
                f *= i as f64;
            }
            1.0 / f
        },
        xi_max,
        l_max,
    );
    let mut out = GenSeries::with_truncation(c.nus(), xi_max, l_max);
    for (l, k, v) in composed.series.terms() {
        out.add_term(l, k.kvec, v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn single_power_log() {
        let nus = [0.3];
        let r = 0.7;
        let mut t = GenSeries::new(&nus);
        t.add_term(0, vec![1], c(-r));
        let ct = log_expand(&t, 6.0, 12).unwrap();
        assert_eq!(ct.entries.len(), 20);
        for k in 1..=20 {
            let want = -r.powi(k) / k as f64;
            assert!((ct.get(0, &[k]) - c(want)).norm() < 1e-15, "k={k}");
            let e = ct.entry(&[k]).unwrap();
            assert_eq!(e.p, Some(0));
            assert_eq!(e.ell, None);
            assert!(!e.p_unreliable && !e.ell_unreliable);
        }
        assert!(ct.l_set().is_empty());
        assert!(ct.window_limited_from.is_none());
    }

    #[test]
    fn constant_term_rejected() {
        let mut t = GenSeries::new(&[0.3]);
        t.add_term(0, vec![0], c(0.5));
        assert!(log_expand(&t, 6.0, 12).is_err());
        let mut t = GenSeries::new(&[0.3]);
        t.add_term(-1, vec![0], c(0.5));
        assert!(log_expand(&t, 6.0, 12).is_err());
    }

    #[test]
    fn pure_x_log_series() {
        // log(1 + x) = Σ (−1)^{m−1} x^m / m, cut at Lmax
        let mut t = GenSeries::new(&[0.5]);
        t.add_term(1, vec![0], c(1.0));
        let ct = log_expand(&t, 3.0, 7).unwrap();
        let e = ct.entry(&[0]).unwrap();
        assert_eq!(e.terms.len(), 7);
        assert!((e.coeff(4) + c(0.25)).norm() < 1e-15);
        assert_eq!(e.ell, Some(1));
        assert!(e.has_above);
    }

    #[test]
    fn window_overflow_is_flagged() {
        let mut t = GenSeries::new(&[0.3]);
        t.add_term(1, vec![1], c(2.0));
        let ct = log_expand(&t, 6.0, 12).unwrap();
        assert_eq!(ct.entry(&[12]).unwrap().ell, Some(12));
        assert!(ct.entry(&[13]).map(|e| e.terms.is_empty()).unwrap_or(true));
        assert!((ct.window_limited_from.unwrap() - 3.9).abs() < 1e-9);
    }
}
