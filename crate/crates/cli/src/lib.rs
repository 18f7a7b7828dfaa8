//! Support library for the `pure-spectra` binary: the ring-expression
//! parser, the JSON report schema, and the on-disk lattice cache.

pub mod cache;
pub mod parse;
pub mod report;
