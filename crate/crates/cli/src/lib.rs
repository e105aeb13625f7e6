//! Library half of the `entwine` command-line tool, so the commands can be
//! driven in-process by tests.

pub mod commands;
pub mod modules;
pub mod report;
