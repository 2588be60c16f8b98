//! File formats and the command-line surface over `cvector-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod input;

pub use cli::{run, Outcome};
pub use error::{CliError, Result};
