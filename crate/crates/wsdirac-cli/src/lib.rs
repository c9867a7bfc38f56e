//! Library surface of the `wsdirac` command-line tool: configuration
//! parsing, deterministic formatting, and the subcommand renderers. The
//! binary in `main.rs` is a thin argument-handling shell over these.

pub mod commands;
pub mod config;
pub mod format;
