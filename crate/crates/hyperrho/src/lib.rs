//! Command-line front end, file format and acceptance suite for `hyperrho-core`.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod acceptance;
pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;
