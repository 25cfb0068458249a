//! Instance files, job execution and reports for the `semidirect` binary.

pub mod error;
pub mod instance;
pub mod jobs;
pub mod report;

pub use error::{CliError, Result};
pub use instance::{parse_rational, Instance};
pub use jobs::{run_jobs, JobOutcome, JobResult, Session};
pub use report::Summary;
