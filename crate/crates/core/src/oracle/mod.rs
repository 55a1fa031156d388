//! Floating-point oracle: sampling, Hausdorff distances, winding numbers
//! and plots.

pub mod cloud;
pub mod hausdorff;
pub mod plot;
pub mod winding;

pub use cloud::{circle_curve, sample, Curve, FnCurve, ParamCurve, SampleCloud};
pub use hausdorff::{curve_hausdorff, directed_hausdorff, hausdorff, hausdorff_polyline, KdTree};
pub use plot::{emit_plot, render_csv, render_svg, PlotFormat};
pub use winding::{probe_bounded, projective_line_degree, winding_number};

use crate::param::SemialgInput;

/// Samples the semialgebraic set of an input.
pub fn sample_input(input: &SemialgInput, n: usize) -> crate::Result<SampleCloud> {
    sample(&ParamCurve::new(input.param(), input.mode()), n)
}
