//! Command-line front end: line configuration, the expression grammar and
//! command dispatch.

pub mod commands;
pub mod config;
pub mod expr;

pub use commands::{exit_code, run, Outcome, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
pub use config::{load_config, parse_config, CONFIG_ENV};
pub use expr::{parse_ast, parse_expr, ExprAst};
