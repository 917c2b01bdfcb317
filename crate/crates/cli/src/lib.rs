//! Suite runner and report emitter.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{Format, JTilde, Params, SuiteConfig, SuiteId};
pub use report::{Record, Report, Residual, SCHEMA};
pub use suites::run;
