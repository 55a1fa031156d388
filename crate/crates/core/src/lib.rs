//! Exact classification of compact one-dimensional pieces of rational curves
//! as polynomial images of the interval, the circle and higher spheres.

pub mod error;
pub mod exact;
pub mod classify;
pub mod cli;
pub mod curve;
pub mod oracle;
pub mod param;
pub mod witness;

pub use error::{Error, Result};
