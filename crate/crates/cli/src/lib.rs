//! Command-line front end for `knotstate`: analysis reports, corpus
//! generation, DOT output and KnotInfo ingestion.

pub mod app;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod ingest;
pub mod input;
pub mod json;
pub mod report;

pub use app::run;
pub use error::CliError;
