//! Explicit polynomial maps onto sets the classifier accepts.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::laurent::{laurent_from_real, LaurentPoly};
use super::realmap::{RealPolyMap, Source};
use crate::classify::{classify, CaseLabel, Classification};
use crate::error::{Error, Result};
use crate::exact::quad::sqrt_rat;
use crate::exact::{AlgPoint1, MPoly, Poly, QuadExt, Rat};
use crate::param::{HPoly2, Mobius, Mode, ProjParam, SemialgInput};

fn q(r: &Rat) -> QuadExt {
    QuadExt::from(r.clone())
}

fn unsupported(p: &AlgPoint1) -> Error {
    let minpoly = p.minpoly().map(|m| m.to_string()).unwrap_or_default();
    Error::UnsupportedExtension { degree: p.minpoly().map_or(0, |m| m.deg()), minpoly }
}

/// Components `Q_i(1, u(v)) / Q_0` with `u` the affine map of `[-1, 1]` onto
/// `[lo, hi]`, for a parameterization whose first component is constant.
fn affine_interval_map(qp: &ProjParam<QuadExt>, lo: &QuadExt, hi: &QuadExt) -> Result<RealPolyMap> {
    let q0 = qp.affine(0);
    if !q0.is_constant() {
        return Err(Error::Document("first component is not constant after reparameterization".into()));
    }
    let c = q0.coeff(0);
    let two = q(&Rat::from_integer(2.into()));
    let lin = Poly::new(vec![(hi.clone() + lo.clone()) / two.clone(), (hi.clone() - lo.clone()) / two]);
    let comps = (1..=qp.m())
        .map(|i| {
            let p = qp.affine(i).compose(&lin).scale(&(QuadExt::one() / c.clone()));
            MPoly::from_univariate(&p, 1, 0)
        })
        .collect();
    RealPolyMap::new(Source::Interval, comps)
}

fn ordered(a: QuadExt, b: QuadExt) -> (QuadExt, QuadExt) {
    if (a.clone() - b.clone()).signum() == Ordering::Greater {
        (b, a)
    } else {
        (a, b)
    }
}

/// The single parameter over the point at infinity, for `CASE1`.
fn case1_root(c: &Classification) -> &AlgPoint1 {
    &c.report.fibers[0].fiber[0]
}

/// Interval map for an arc `[a, b]` of a `CASE1` parameterization whose only
/// pole is `root`.
fn interval_on_arc(param: &ProjParam, a: &Rat, b: &Rat, root: &AlgPoint1) -> Result<RealPolyMap> {
    match root {
        AlgPoint1::Infinity => affine_interval_map(&param.map(q), &q(a), &q(b)),
        AlgPoint1::Finite { .. } => {
            let rho = root.to_quad().ok_or_else(|| unsupported(root))?;
            // u = 1 / (t - rho) sends the pole to infinity
            let m = Mobius::new(-rho, QuadExt::one(), QuadExt::one(), QuadExt::zero())?;
            let qp = param.apply_mobius(&m)?;
            let ua = m.apply_affine(&q(a)).ok_or(Error::InvalidArc)?;
            let ub = m.apply_affine(&q(b)).ok_or(Error::InvalidArc)?;
            let (lo, hi) = ordered(ua, ub);
            affine_interval_map(&qp, &lo, &hi)
        }
    }
}

fn require(ok: bool, why: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ClassifierNo(why.into()))
    }
}

/// A polynomial map `[-1, 1] -> R^m` onto an arc of a `CASE1` curve.
pub fn witness_interval(input: &SemialgInput) -> Result<RealPolyMap> {
    let c = classify(input)?;
    require(c.p_ball.is_one(), "the set is not a polynomial image of the interval")?;
    let Mode::Arc { a, b } = input.mode() else {
        unreachable!("a full trace is never an interval image")
    };
    interval_on_arc(input.param(), a, b, case1_root(&c))
}

/// The first coordinate of the source.
fn first_coordinate(source: Source) -> Vec<MPoly<QuadExt>> {
    vec![MPoly::var(source.nvars(), 0)]
}

/// A polynomial map `S^1 -> R^m` onto the set.
pub fn witness_circle(input: &SemialgInput) -> Result<RealPolyMap> {
    let c = classify(input)?;
    if !c.p_sphere1.is_one() {
        return Err(Error::ClassifierNo(c.failed_clause.clone().unwrap_or_default()));
    }
    match c.case_label {
        CaseLabel::Case1 => {
            let g = witness_interval(input)?;
            g.compose_source(Source::Sphere(1), &first_coordinate(Source::Sphere(1)))
        }
        CaseLabel::Case2 | CaseLabel::Case3 => conic_circle_map(input.param(), &c),
        CaseLabel::None => unreachable!("p_sphere1 = 1 implies a case"),
    }
}

/// For `P0 = lambda |t - rho|^(2p)`: reparameterize by `u = (t - alpha)/beta`
/// so that `Q0 = lambda (u0^2 + u1^2)^p`, then restrict `Q / lambda` to the
/// circle.
fn conic_circle_map(param: &ProjParam, c: &Classification) -> Result<RealPolyMap> {
    let roots: Vec<&AlgPoint1> = c.report.fibers.iter().flat_map(|f| f.fiber.iter()).collect();
    let upper = roots
        .iter()
        .find(|p| p.to_complex_f64().is_some_and(|(_, im)| im > 0.0))
        .expect("non-real roots come in pairs");
    let rho = upper.to_quad().ok_or_else(|| unsupported(upper))?;
    let d = rho.field().expect("non-real root");
    let alpha = q(rho.rational_part());
    let b = rho.surd_part().clone();
    let beta = sqrt_rat(&(b.clone() * b * Rat::from_integer((-d).into())));
    debug_assert!(beta.signum() == Ordering::Greater);
    let m = Mobius::new(beta, QuadExt::zero(), -alpha, QuadExt::one())?;
    let qp = param.apply_mobius(&m)?;

    let q0 = &qp.components()[0];
    let deg = q0.degree();
    let lambda = q0.coeffs()[0].clone();
    let sum = HPoly2::new(2, vec![QuadExt::one(), QuadExt::zero(), QuadExt::one()]);
    let mut expect = HPoly2::new(0, vec![lambda.clone()]);
    for _ in 0..deg / 2 {
        expect = mul_forms(&expect, &sum);
    }
    if deg % 2 != 0 || &expect != q0 {
        return Err(Error::Document("first component is not a power of u0^2 + u1^2".into()));
    }
    let inv = QuadExt::one() / lambda;
    let comps = qp.components()[1..].iter().map(|p| p.to_mpoly().scale(&inv)).collect();
    RealPolyMap::new(Source::Sphere(1), comps)
}

fn mul_forms(a: &HPoly2<QuadExt>, b: &HPoly2<QuadExt>) -> HPoly2<QuadExt> {
    let mut c = vec![QuadExt::zero(); a.degree() + b.degree() + 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            c[i + j] = c[i + j].clone() + x.clone() * y.clone();
        }
    }
    HPoly2::new(a.degree() + b.degree(), c)
}

/// A polynomial map `S^k -> R^m` onto an arc, `k >= 2`: the interval map
/// applied to the first coordinate.
pub fn witness_sphere_k(input: &SemialgInput, k: usize) -> Result<RealPolyMap> {
    if k < 2 {
        return Err(Error::Document(format!("sphere dimension must be at least 2, got {k}")));
    }
    let c = classify(input)?;
    require(c.p_sphere_k_ge2, "the set is not a polynomial image of higher spheres")?;
    let g = witness_interval(input)?;
    g.compose_source(Source::Sphere(k), &first_coordinate(Source::Sphere(k)))
}

/// The Laurent polynomial of the circle witness of a plane set.
pub fn witness_laurent(input: &SemialgInput) -> Result<LaurentPoly> {
    if input.param().m() != 2 {
        return Err(Error::NotPlane { m: input.param().m() });
    }
    laurent_from_real(&witness_circle(input)?)
}

/// The naive map `v -> P_i(1, t(v)) / lc(P0(1, t))` on the arc (or on
/// `[-1, 1]` for a full trace) without consulting the classifier. Its image is
/// generally not the set; used to exercise the checker.
pub fn force_interval_witness(input: &SemialgInput) -> Result<RealPolyMap> {
    let one = Rat::one();
    let (a, b) = match input.mode() {
        Mode::Arc { a, b } => (a.clone(), b.clone()),
        Mode::FullTrace => (-one.clone(), one),
    };
    let p = input.param();
    let lc = p.affine(0).lc();
    let lc = if lc.is_zero() { Rat::one() } else { lc };
    let two = Rat::from_integer(2.into());
    let lin = Poly::new(vec![(b.clone() + a.clone()) / two.clone(), (b - a) / two]);
    let comps = (1..=p.m())
        .map(|i| MPoly::from_univariate(&p.affine(i).compose(&lin).scale(&(Rat::one() / lc.clone())).map(q), 1, 0))
        .collect();
    RealPolyMap::new(Source::Interval, comps)
}
