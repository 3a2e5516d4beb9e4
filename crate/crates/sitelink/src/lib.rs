//! Reading alignments, generating synthetic ones, writing results and the
//! `sitelink` command-line tool, on top of [`sitelink_core`].

pub mod cli;
pub mod config;
pub mod emit;
pub mod error;
pub mod generate;
pub mod parallel;
pub mod parse;
pub mod selfcheck;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use generate::{generate, Block, PlantedLink, SyntheticSpec};
pub use parallel::par_site_spectrum;
pub use parse::{parse_input, Format};

/// Version string written into every output header.
pub const TOOL_VERSION: &str = concat!("sitelink ", env!("CARGO_PKG_VERSION"));
