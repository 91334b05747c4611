//! Library side of the `numsgp` command-line tool.

pub mod query;
pub mod report;
pub mod sweep;
