//! Singular structure of ζ-functions for self-adjoint extensions of conic
//! Laplace-type operators, with a numerical model on an interval.

pub mod bessel;
pub mod cli;
pub mod error;
pub mod genseries;
pub mod linalg;
pub mod model;
pub mod singularity;
pub mod symplectic;

pub use error::{Error, Result};
