//! Exact arithmetic: rationals, quadratic surds, number fields, univariate,
//! bivariate and sparse multivariate polynomials, factorization and certified
//! root isolation.

pub mod bivariate;
pub mod factor;
pub mod field;
pub mod interval;
pub mod mpoly;
pub mod numfield;
pub mod poly;
pub mod quad;
pub mod roots;
pub mod sturm;

pub use bivariate::BPoly;
pub use factor::factor_rational;
pub use field::{parse_rat, rat, rat_int, rat_to_f64, rat_to_string, Field, Rat};
pub use mpoly::MPoly;
pub use numfield::NfElem;
pub use poly::{Poly, UPoly};
pub use quad::QuadExt;
pub use roots::{isolate_complex_roots, AlgPoint1, RatBox};
pub use sturm::{sturm_real_root_count, Ext};

use num_traits::Zero;

use crate::error::{Error, Result};

/// Monic gcd of two rational polynomials.
pub fn poly_gcd(f: &UPoly, g: &UPoly) -> UPoly {
    f.gcd(g)
}

/// Resultant in the Sylvester-determinant convention (rows of `f` first,
/// coefficients from the leading one).
pub fn resultant(f: &UPoly, g: &UPoly) -> Result<Rat> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly::sylvester_resultant(f.coeffs(), g.coeffs()))
}

/// `f / gcd(f, f')`, monic.
pub fn squarefree_part(f: &UPoly) -> Result<UPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.squarefree_part())
}

/// Refines an isolating box until its width and height are at most `width`.
pub fn refine_box(p: &AlgPoint1, width: &Rat) -> AlgPoint1 {
    p.refine(width)
}
