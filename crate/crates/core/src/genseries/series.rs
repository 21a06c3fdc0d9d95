//! Terms c·xˡ·y^{2ξ} with ξ = Σ k_j ν_j carried exactly as integer vectors.

use std::collections::BTreeMap;

use num_complex::Complex64;

/// Two exponent values closer than this are the same ξ.
pub const MERGE_TOL: f64 = 1e-9;

/// Relative drop threshold inside one ξ bucket.
pub const DROP_TOL: f64 = 1e-14;

/// An exponent ξ = Σ k_j ν_j. Entries may be negative for differences of
/// exponents, as in the normalized tail.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ExponentKey {
    pub kvec: Vec<i32>,
    pub value: f64,
}

impl ExponentKey {
    pub fn new(kvec: Vec<i32>, nus: &[f64]) -> Self {
        let value = kvec.iter().zip(nus).map(|(&k, &nu)| k as f64 * nu).sum();
        Self { kvec, value }
    }

    pub fn zero(q1: usize) -> Self {
        Self { kvec: vec![0; q1], value: 0.0 }
    }

    pub fn is_zero(&self) -> bool {
        self.kvec.iter().all(|&k| k == 0)
    }

    /// True when ξ is a non-negative integer (within the merge tolerance).
    pub fn is_integer(&self) -> bool {
        (self.value - self.value.round()).abs() < MERGE_TOL
    }

    pub fn l1(&self) -> i32 {
        self.kvec.iter().map(|k| k.abs()).sum()
    }

    /// Readable label such as `2ν1+ν3`, or `0`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .kvec
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(j, &k)| match k {
                1 => format!("ν{}", j + 1),
                -1 => format!("-ν{}", j + 1),
                _ => format!("{k}ν{}", j + 1),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+").replace("+-", "-")
        }
    }
}

pub(crate) fn add_k(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A finite generalized polynomial Σ c_{ℓ,k} xˡ y^{2 k·ν}.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSeries {
    nus: Vec<f64>,
    terms: BTreeMap<(Vec<i32>, i32), Complex64>,
    pub xi_max: f64,
    pub l_max: i32,
}

impl GenSeries {
    /// Empty series with no truncation.
    pub fn new(nus: &[f64]) -> Self {
        Self { nus: nus.to_vec(), terms: BTreeMap::new(), xi_max: f64::INFINITY, l_max: i32::MAX }
    }

    pub fn with_truncation(nus: &[f64], xi_max: f64, l_max: i32) -> Self {
        Self { xi_max, l_max, ..Self::new(nus) }
    }

    pub fn nus(&self) -> &[f64] {
        &self.nus
    }

    pub fn q1(&self) -> usize {
        self.nus.len()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn key(&self, kvec: Vec<i32>) -> ExponentKey {
        ExponentKey::new(kvec, &self.nus)
    }

    pub fn xi(&self, kvec: &[i32]) -> f64 {
        kvec.iter().zip(&self.nus).map(|(&k, &nu)| k as f64 * nu).sum()
    }

    /// Adds `c` to the coefficient of xˡ y^{2k·ν}; out-of-window terms are ignored.
    pub fn add_term(&mut self, ell: i32, kvec: Vec<i32>, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        if self.xi(&kvec) > self.xi_max + MERGE_TOL || ell.unsigned_abs() > self.l_max.unsigned_abs() {
            return;
        }
        let key = (kvec, ell);
        let v = self.terms.get(&key).copied().unwrap_or_default() + c;
        if v == Complex64::new(0.0, 0.0) {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn coeff(&self, ell: i32, kvec: &[i32]) -> Complex64 {
        self.terms.get(&(kvec.to_vec(), ell)).copied().unwrap_or_default()
    }

    /// Terms as (ℓ, key, c), ordered by key vector then ℓ.
    pub fn terms(&self) -> impl Iterator<Item = (i32, ExponentKey, Complex64)> + '_ {
        self.terms.iter().map(|((k, l), c)| (*l, ExponentKey::new(k.clone(), &self.nus), *c))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<(Vec<i32>, i32), Complex64> {
        &self.terms
    }

    pub(crate) fn raw_terms_mut(&mut self) -> &mut BTreeMap<(Vec<i32>, i32), Complex64> {
        &mut self.terms
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Σ c xˡ y^{2ξ} at a numeric point.
    pub fn evaluate(&self, x: Complex64, y: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|((k, l), c)| c * x.powi(*l) * y.powf(2.0 * self.xi(k)))
            .sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out
    }

    /// Sum within the truncation of `self`.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((k, l), c) in &other.terms {
            out.add_term(*l, k.clone(), *c);
        }
        out.merge_buckets();
        out
    }

    /// Product, truncated to ξ ≤ `self.xi_max`; ℓ is left unbounded so that
    /// callers can decide what is reachable.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GenSeries::with_truncation(&self.nus, self.xi_max, i32::MAX);
        for ((ka, la), ca) in &self.terms {
            let xa = self.xi(ka);
            for ((kb, lb), cb) in &other.terms {
                if xa + other.xi(kb) > self.xi_max + MERGE_TOL {
                    continue;
                }
                let slot = out.terms.entry((add_k(ka, kb), la + lb)).or_default();
                *slot += ca * cb;
            }
        }
        out.merge_buckets();
        out.drop_small(DROP_TOL);
        out.l_max = self.l_max;
        out
    }

    /// Merges keys whose ξ values agree within [`MERGE_TOL`] into one
    /// representative: smallest L1 norm, then lexicographic.
    pub fn merge_buckets(&mut self) {
        let mut keys: Vec<(f64, Vec<i32>)> = Vec::new();
        for (k, _) in self.terms.keys() {
            if keys.last().map(|(_, last)| last != k).unwrap_or(true) {
                keys.push((self.xi(k), k.clone()));
            }
        }
        if keys.len() < 2 {
            return;
        }
        keys.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let mut remap: BTreeMap<Vec<i32>, Vec<i32>> = BTreeMap::new();
        let mut start = 0;
        while start < keys.len() {
            let mut end = start + 1;
            while end < keys.len() && keys[end].0 - keys[end - 1].0 < MERGE_TOL {
                end += 1;
            }
            if end - start > 1 {
                let rep = keys[start..end]
                    .iter()
                    .map(|(_, k)| k.clone())
                    .min_by(|a, b| {
                        let la: i32 = a.iter().map(|x| x.abs()).sum();
                        let lb: i32 = b.iter().map(|x| x.abs()).sum();
                        la.cmp(&lb).then_with(|| a.cmp(b))
                    })
                    .unwrap();
                for (_, k) in &keys[start..end] {
                    if *k != rep {
                        remap.insert(k.clone(), rep.clone());
                    }
                }
            }
            start = end;
        }
        if remap.is_empty() {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        for ((k, l), c) in old {
            let k = remap.get(&k).cloned().unwrap_or(k);
            *self.terms.entry((k, l)).or_default() += c;
        }
    }

    /// Removes terms with |c| < `rel` · (largest |c| in the same ξ bucket),
    /// and exact zeros.
    pub fn drop_small(&mut self, rel: f64) {
        let mut bucket_max: BTreeMap<Vec<i32>, f64> = BTreeMap::new();
        for ((k, _), c) in &self.terms {
            let m = bucket_max.entry(k.clone()).or_insert(0.0);
            *m = m.max(c.norm());
        }
        self.terms.retain(|(k, _), c| {
            let m = bucket_max[k];
            c.norm() > 0.0 && c.norm() >= rel * m
        });
    }

    /// Removes terms with |c| below an absolute threshold.
    pub fn drop_below(&mut self, abs: f64) {
        self.terms.retain(|_, c| c.norm() >= abs && c.norm() > 0.0);
    }

    /// Distinct key vectors, sorted by ξ value.
    pub fn keys_by_value(&self) -> Vec<ExponentKey> {
        let mut out: Vec<ExponentKey> = Vec::new();
        for (k, _) in self.terms.keys() {
            if out.last().map(|e| e.kvec != *k).unwrap_or(true) {
                out.push(self.key(k.clone()));
            }
        }
        out.sort_by(|a, b| a.value.total_cmp(&b.value).then_with(|| a.kvec.cmp(&b.kvec)));
        out
    }
}
