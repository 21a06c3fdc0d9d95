//! JSON problem definitions.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::genseries::{DEFAULT_L_MAX, DEFAULT_XI_MAX};
use crate::linalg::CMatrix;
use crate::singularity::DEFAULT_K;
use crate::symplectic::{Lagrangian, SpectralSpec};

/// A matrix entry, written `[re, im]` (a bare number is read as real).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry(pub Complex64);

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Pair([f64; 2]),
            Real(f64),
        }
        match Raw::deserialize(d).map_err(|_| serde::de::Error::custom("expected [re, im] or a number"))? {
            Raw::Pair([re, im]) => Ok(Entry(Complex64::new(re, im))),
            Raw::Real(re) => Ok(Entry(Complex64::new(re, 0.0))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    pub xi_max: f64,
    pub l_max: i32,
    pub mu_max: f64,
    #[serde(rename = "K")]
    pub k: usize,
    /// x values of the resolvent identity check.
    pub resolvent_x: Vec<f64>,
    /// Allowed |via F − exact| on top of the reported tail bound.
    pub resolvent_slack: f64,
    /// x values of the asymptotic residual check.
    pub asymptotic_x: Vec<f64>,
    pub asymptotic_tol: f64,
    pub logint_tol: f64,
    pub roundtrip_tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            xi_max: DEFAULT_XI_MAX,
            l_max: DEFAULT_L_MAX,
            mu_max: 100.0,
            k: DEFAULT_K,
            resolvent_x: vec![1.0, 2.0, 5.0, 10.0],
            resolvent_slack: 1e-6,
            asymptotic_x: vec![25.0, 50.0, 100.0],
            asymptotic_tol: 1e-8,
            logint_tol: 1e-8,
            roundtrip_tol: 1e-12,
            out: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub q0: usize,
    #[serde(default)]
    pub nus: Vec<f64>,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Entry>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Entry>>,
    #[serde(default)]
    pub options: Options,
}

fn to_rows(m: &CMatrix) -> Vec<Vec<Entry>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| Entry(m[(i, j)])).collect()).collect()
}

fn to_matrix(field: &str, rows: &[Vec<Entry>], q: usize) -> Result<CMatrix> {
    if rows.len() != q {
        return Err(Error::Config(format!("field {field}: expected {q} rows (q = q0 + len(nus)), found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != q {
            return Err(Error::Config(format!("field {field}[{i}]: expected {q} entries, found {}", row.len())));
        }
    }
    Ok(CMatrix::from_fn(q, q, |i, j| rows[i][j].0))
}

impl ProblemConfig {
    pub fn new(name: Option<&str>, spec: &SpectralSpec, a: &CMatrix, b: &CMatrix) -> Self {
        Self {
            name: name.map(String::from),
            q0: spec.q0,
            nus: spec.nus.clone(),
            r: spec.r,
            a: to_rows(a),
            b: to_rows(b),
            options: Options::default(),
        }
    }

    /// Parses JSON; syntax and type errors carry line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn spec(&self) -> Result<SpectralSpec> {
        SpectralSpec::new(self.q0, self.nus.clone(), self.r)
            .map_err(|e| Error::Config(format!("fields q0/nus/R: {e}")))
    }

    /// Spec and Lagrangian with matching dimensions (not yet validated).
    pub fn problem(&self) -> Result<(SpectralSpec, Lagrangian)> {
        let spec = self.spec()?;
        let q = spec.q();
        let a = to_matrix("A", &self.a, q)?;
        let b = to_matrix("B", &self.b, q)?;
        Ok((spec, Lagrangian::new(a, b)?))
    }
}
