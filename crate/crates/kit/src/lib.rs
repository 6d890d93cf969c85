//! File formats, configuration and command implementations for the
//! `verlinde-kit` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod quiver;

pub use commands::{Report, SCHEMA};
pub use config::{Config, Format};
pub use error::{exit, KitError, KitResult};
pub use quiver::QuiverFile;
