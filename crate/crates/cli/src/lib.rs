//! Command-line front end for `qtcat-core`: computes the series, runs the
//! verification suites, emits the nested tables and caches results as JSON.

pub mod commands;
pub mod record;
