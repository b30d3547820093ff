//! Surface syntax and command dispatch for the `tanglekit` binary.

pub mod app;
pub mod parse;
pub mod svg;
