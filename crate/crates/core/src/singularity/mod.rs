//! Singular part of ζ(s, Δ_L): unusual poles, logarithmic branch points and
//! the log s term, plus the matching resolvent and heat expansion shapes.

mod heat;
mod report;
mod tail;

pub use heat::{heat_structure, HeatFamily, HeatLedger};
pub use report::{
    decomposable_structure, zeta_structure, DecomposableView, LogEntry, Path, PoleEntry, SingularityReport,
    SplitView, DEFAULT_K,
};
pub use tail::{resolvent_tail_terms, TailEvaluation, TailTerm};

pub use crate::bessel::GAMMA_TILDE;

/// Euler–Mascheroni constant γ.
pub const GAMMA: f64 = crate::bessel::EULER_GAMMA;
