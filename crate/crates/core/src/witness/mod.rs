//! Polynomial and Laurent witnesses for positive classifications, and their
//! verification.

pub mod construct;
pub mod laurent;
pub mod realmap;
pub mod verify;

pub use construct::{force_interval_witness, witness_circle, witness_interval, witness_laurent, witness_sphere_k};
pub use laurent::{laurent_from_real, real_from_laurent, Gauss, LaurentPoly};
pub use realmap::{sphere_normal_form, RealPolyMap, Source};
pub use verify::{verify_witness, ExactCheck, MapCurve, VerifyReport, Witness};
