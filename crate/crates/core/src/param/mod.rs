//! Projective parameterizations, reparameterization and the input model.

pub mod document;
pub mod form;
pub mod input;
pub mod mobius;
pub mod parse;
pub mod projparam;

pub use document::{param_from_json, param_to_json};
pub use form::HPoly2;
pub use input::{Mode, SemialgInput};
pub use mobius::Mobius;
pub use parse::{parse_poly, parse_poly_surd, print_poly};
pub use projparam::{conjugate_param, normalize_point, ProjParam, ProjPoint, PARAM_VARS};
