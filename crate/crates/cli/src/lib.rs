//! Library surface of the `recgf` batch front end: JSON schemas and the
//! command implementations, exposed for integration tests.

pub mod commands;
pub mod error;
pub mod schema;

pub use commands::{cmd_expand, cmd_genfunc, cmd_green, cmd_solve, cmd_verify, load_problem};
pub use error::CliError;
