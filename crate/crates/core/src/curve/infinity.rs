//! Points at infinity of the image curve and the parameter fibers over them.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::coincidence::{group_by_image, CrossSystem};
use crate::error::{Error, Result};
use crate::exact::interval::eval_upoly;
use crate::exact::sturm::{count_in, sturm_sequence, Ext};
use crate::exact::{factor_rational, isolate_complex_roots, rat, AlgPoint1, NfElem, QuadExt};
use crate::param::{normalize_point, ProjParam, ProjPoint};

#[derive(Clone, Debug, PartialEq)]
pub struct InfinityFiber {
    pub point: ProjPoint,
    /// Roots of `P0` mapped to `point`.
    pub fiber: Vec<AlgPoint1>,
    /// Multiplicity of each fiber root as a root of `P0`.
    pub multiplicities: Vec<usize>,
    pub is_real_point: bool,
    pub fiber_is_conjugate_pair: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfinityReport {
    pub fibers: Vec<InfinityFiber>,
    pub real_trace_bounded: bool,
    pub real_root_count_of_p0: usize,
}

/// Distinct real roots of `P0` on the projective line, `[0:1]` included.
pub fn real_root_count_of_p0(param: &ProjParam) -> usize {
    let p0 = &param.components()[0];
    let at_inf = usize::from(p0.t0_multiplicity() > 0);
    let sf = p0.dehomogenize().squarefree_part();
    if sf.is_constant() {
        return at_inf;
    }
    count_in(&sturm_sequence(&sf), &Ext::NegInf, &Ext::PosInf) + at_inf
}

/// The real trace is bounded iff `P0` has no real projective root.
pub fn is_real_trace_bounded(param: &ProjParam) -> bool {
    real_root_count_of_p0(param) == 0
}

/// Groups the roots of `P0` by their image. Rejects improper input.
pub fn infinity_fibers(param: &ProjParam) -> Result<InfinityReport> {
    let sys = CrossSystem::new(param);
    let generic_fiber_degree = sys.gcd().deg_s();
    if generic_fiber_degree != 1 {
        return Err(Error::Improper { generic_fiber_degree });
    }
    let p0 = &param.components()[0];
    let affine = p0.dehomogenize();
    let e = p0.t0_multiplicity();

    let mut points = Vec::new();
    let mut mults = Vec::new();
    if !affine.is_constant() {
        let factors = factor_rational(&affine)?;
        for pt in isolate_complex_roots(&affine.squarefree_part())? {
            let q = pt.minpoly().unwrap();
            mults.push(factors.iter().find(|(f, _)| f == q).expect("root of a factor").1);
            points.push(pt);
        }
    }
    if e > 0 {
        points.push(AlgPoint1::Infinity);
        mults.push(e);
    }

    let fibers = group_by_image(&sys, &points)
        .into_iter()
        .map(|g| {
            let fiber: Vec<AlgPoint1> = g.iter().map(|&i| points[i].clone()).collect();
            let closed = fiber.iter().all(|p| fiber.contains(&p.conj()));
            let pair = fiber.len() == 2 && !fiber[0].is_real() && fiber[1] == fiber[0].conj();
            InfinityFiber {
                point: image_point(param, &fiber),
                multiplicities: g.iter().map(|&i| mults[i]).collect(),
                fiber,
                is_real_point: closed,
                fiber_is_conjugate_pair: pair,
            }
        })
        .collect();
    let real = real_root_count_of_p0(param);
    Ok(InfinityReport { fibers, real_trace_bounded: real == 0, real_root_count_of_p0: real })
}

/// Image of a fiber, exact when its coordinates lie in `Q` or `Q(sqrt d)`.
pub fn image_point(param: &ProjParam, fiber: &[AlgPoint1]) -> ProjPoint {
    if fiber.iter().any(|p| p.is_infinity()) {
        return ProjPoint::Exact(normalize_point(&param.evaluate(&AlgPoint1::Infinity).exact()));
    }
    let rep = fiber.iter().min_by_key(|p| p.minpoly().unwrap().deg()).unwrap();
    let q = rep.minpoly().unwrap();
    let m = Arc::new(q.monic());
    let vals: Vec<NfElem> = (0..=param.m()).map(|i| NfElem::new(&m, &param.affine(i))).collect();
    let lead = vals.iter().find(|v| !v.is_zero()).expect("reduced parameterization").clone();
    let normed: Vec<NfElem> = vals.into_iter().map(|v| v / lead.clone()).collect();
    if normed.iter().all(|v| v.value().is_constant()) {
        return ProjPoint::Exact(normed.iter().map(|v| QuadExt::from(v.value().coeff(0))).collect());
    }
    if let Some(z) = rep.to_quad() {
        return ProjPoint::Exact(normalize_point(&param.eval_quad(&QuadExt::one(), &z)));
    }
    let fine = rep.refine(&rat(1, 1 << 20));
    let z = fine.civ().unwrap();
    ProjPoint::Approx((0..=param.m()).map(|i| eval_upoly(&param.affine(i), &z)).collect())
}

impl ProjPoint {
    /// Exact coordinates; panics on an enclosure.
    pub fn exact(&self) -> Vec<QuadExt> {
        match self {
            ProjPoint::Exact(v) => v.clone(),
            ProjPoint::Approx(_) => panic!("enclosure has no exact coordinates"),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ProjPoint::Exact(_))
    }
}

impl InfinityReport {
    /// `(point, fiber size, real, conjugate pair)` for every fiber, the data
    /// that does not depend on the parameterization chosen.
    pub fn signature(&self) -> Vec<(String, usize, bool, bool)> {
        let mut v: Vec<_> = self
            .fibers
            .iter()
            .map(|f| (point_key(&f.point), f.fiber.len(), f.is_real_point, f.fiber_is_conjugate_pair))
            .collect();
        v.sort();
        v
    }
}

fn point_key(p: &ProjPoint) -> String {
    match p {
        ProjPoint::Exact(v) => v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":"),
        ProjPoint::Approx(v) => format!("~{}", v.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> QuadExt {
        QuadExt::from(rat(a, 1))
    }

    #[test]
    fn line() {
        let p = ProjParam::from_strings(&["t0", "t1", "0"]).unwrap();
        let r = infinity_fibers(&p).unwrap();
        assert_eq!(r.fibers.len(), 1);
        let f = &r.fibers[0];
        assert_eq!(f.point, ProjPoint::Exact(vec![q(0), q(1), q(0)]));
        assert_eq!(f.fiber, vec![AlgPoint1::Infinity]);
        assert!(f.is_real_point && !f.fiber_is_conjugate_pair);
        assert!(!r.real_trace_bounded);
    }

    #[test]
    fn gerono() {
        let p = ProjParam::from_strings(&["(t0^2+t1^2)^2", "t1^4-t0^4", "2*t0*t1*(t1^2-t0^2)"]).unwrap();
        let r = infinity_fibers(&p).unwrap();
        assert_eq!(r.fibers.len(), 1);
        let f = &r.fibers[0];
        assert_eq!(f.point, ProjPoint::Exact(vec![q(0), q(0), q(1)]));
        assert_eq!(f.fiber.len(), 2);
        assert_eq!(f.multiplicities, vec![2, 2]);
        assert!(f.is_real_point && f.fiber_is_conjugate_pair);
        assert!(r.real_trace_bounded);
    }

    #[test]
    fn circle() {
        let p = ProjParam::from_strings(&["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]).unwrap();
        let r = infinity_fibers(&p).unwrap();
        assert_eq!(r.fibers.len(), 2);
        let i = QuadExt::sqrt(-1);
        let pts: Vec<_> = r.fibers.iter().map(|f| f.point.clone()).collect();
        assert!(pts.contains(&ProjPoint::Exact(vec![q(0), q(1), i.clone()])));
        assert!(pts.contains(&ProjPoint::Exact(vec![q(0), q(1), -i])));
        assert!(r.fibers.iter().all(|f| f.fiber.len() == 1 && !f.is_real_point));
        assert!(r.real_trace_bounded);
    }

    #[test]
    fn boundedness() {
        let b = |s: [&str; 3]| is_real_trace_bounded(&ProjParam::from_strings(&s).unwrap());
        assert!(b(["t0^2+t1^2", "t0*t1", "t1^2"]));
        assert!(!b(["t0^2", "t0*t1", "t1^2"]));
        assert!(!b(["t0^2-2*t1^2", "t0*t1", "t1^2"]));
    }

    #[test]
    fn improper_rejected() {
        let p = ProjParam::from_strings(&["t0^2", "t1^2", "0"]).unwrap();
        assert_eq!(infinity_fibers(&p), Err(Error::Improper { generic_fiber_degree: 2 }));
    }
}
