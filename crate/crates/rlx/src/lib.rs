//! File formats, corpus cache, reports and the `rlx` command line.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod report;
