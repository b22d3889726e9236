//! File formats, figures, benchmark harness and command-line front end for
//! `circsep-core`.

pub mod bench;
pub mod cli;
pub mod error;
pub mod instance;
pub mod record;
pub mod snapshot;
pub mod svg;

pub use error::CliError;
