//! Document ingestion, fixture library and command pipelines for the
//! `forge` binary.

pub mod builtin;
pub mod doc;
pub mod error;
pub mod export;
pub mod model;
pub mod report;
pub mod run;

pub use doc::Document;
pub use error::InputError;
pub use report::{Record, Report, Status};
pub use run::{run_document, COMMANDS};
