//! Suite runners binding the exact identities and the limit checks into JSON-lines reports.

mod config;
mod status;
mod suites;

pub use config::{Suite, SuiteConfig};
pub use status::{Check, Status};
pub use suites::{run_suite, summarize, thread_count, CaseRecord, Couplings, Summary};
