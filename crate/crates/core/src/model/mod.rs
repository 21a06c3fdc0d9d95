//! The model operator −d²/dr² + A/r² on [0, R] with the boundary condition
//! at 0 fixed by a Lagrangian and Dirichlet at R.

mod asymptotics;
mod determinant;
mod quadrature;
mod spectrum;
mod trace;

pub use asymptotics::{asymptotic_residual, c_series_derivative, predicted_remainder, ResidualRow, ResidualTable};
pub use determinant::{dlog_f_ix, f_ix, f_mu, ScaledValue};
pub use quadrature::{integrate_g7k15, verify_logint, LogIntCheck};
pub use spectrum::{find_eigenvalues, find_eigenvalues_with, EigenOptions, Eigenvalue, ModelSpectrum};
pub use trace::{heat_trace_partial, resolvent_trace_exact, resolvent_trace_via_f, TraceValue};

use crate::error::Result;
use crate::symplectic::{require_valid, Lagrangian, SpectralSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct ModelProblem {
    pub spec: SpectralSpec,
    pub lagrangian: Lagrangian,
    pub real_coefficients: bool,
}

impl ModelProblem {
    /// Validates the Lagrangian against the spec.
    pub fn new(spec: SpectralSpec, lagrangian: Lagrangian) -> Result<Self> {
        spec.check()?;
        require_valid(&lagrangian, &spec)?;
        let real_coefficients = lagrangian.is_real();
        Ok(Self { spec, lagrangian, real_coefficients })
    }
}
