//! Exact classification of rational functions on real plane curves:
//! regularity, membership in the seminormal and R-seminormal closures, and
//! integrality, with certificates.

pub mod arith;
pub mod classify;
pub mod curve;
pub mod error;
pub mod groebner;
pub mod parse;
pub mod report;

pub use error::{Error, Result};
