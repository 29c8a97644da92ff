//! Command-line surface for the exact power-sum engine: argument
//! parsing, polynomial formatters, the cross-verification harness, and
//! the method benchmark. The binary in `main.rs` is a thin shell over
//! these modules.

pub mod args;
pub mod bench;
pub mod format;
pub mod verify;

pub use args::{parse_args, to_argv, Command};
