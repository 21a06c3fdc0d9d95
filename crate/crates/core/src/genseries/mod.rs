//! Generalized polynomials Σ c·xˡ·y^{2ξ}, the determinant p(x, y) and its
//! logarithm table.

mod ctable;
mod poly;
mod series;

pub use ctable::{exp_minus_one, extract_markers, log_expand, CEntry, CTable};
pub use poly::{beta_coeffs, degree, det_p, normalize_leading, poly_p0, poly_p1, Normalized};
pub use series::{ExponentKey, GenSeries, DROP_TOL, MERGE_TOL};

/// Default ξ bound of the log expansion.
pub const DEFAULT_XI_MAX: f64 = 6.0;
/// Default |ℓ| bound of the log expansion.
pub const DEFAULT_L_MAX: i32 = 12;
