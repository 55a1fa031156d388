//! Properness, points at infinity, boundedness and implicitization.

pub mod coincidence;
pub mod implicit;
pub mod infinity;

pub use coincidence::{generic_fiber_degree, properness_check, CoincidenceData};
pub use implicit::{implicitize_plane, vanishes_on, PLANE_VARS};
pub use infinity::{infinity_fibers, is_real_trace_bounded, InfinityFiber, InfinityReport};
