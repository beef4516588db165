//! Command-line layer over `hecke-core`: argument parsing, JSON/CSV/SVG
//! output and the verification suites.

pub mod commands;
pub mod parse;
pub mod suites;
pub mod svg;
