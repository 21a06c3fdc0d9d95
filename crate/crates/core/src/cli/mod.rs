//! Command implementations behind the `cone-zeta` binary.

pub mod builtins;
pub mod config;
mod commands;
pub mod render;

pub use builtins::{builtin, Builtin, ExpectedRow, NAMES};
pub use commands::{
    example, eigs, ledger_rows, structure, validate, verify, CheckRow, CheckStatus, ComparisonRow, ExampleOutput,
    LedgerRow, ValidateOutput,
};
pub use config::{Entry, Options, ProblemConfig};
