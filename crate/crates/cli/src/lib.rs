//! File formats, verification sweeps, plotting and the `orchard` command
//! line tool, built on `orchard-core`.

pub mod cli;
pub mod formats;
pub mod plot;
pub mod verify;

pub use cli::{run_args, Cli, Outcome};
