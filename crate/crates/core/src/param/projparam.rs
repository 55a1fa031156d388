use num_traits::{One, Zero};

use super::form::HPoly2;
use super::mobius::Mobius;
use super::parse::{parse_poly, print_poly};
use crate::error::{Error, Result};
use crate::exact::interval::{eval_upoly, CIv};
use crate::exact::{AlgPoint1, Field, Poly, QuadExt, Rat, UPoly};

pub const PARAM_VARS: [&str; 2] = ["t0", "t1"];

/// Projective parameterization `[P0 : ... : Pm]` by binary forms of a common
/// degree, reduced so the components have no common factor.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjParam<F = Rat> {
    comps: Vec<HPoly2<F>>,
}

impl<F: Field> ProjParam<F> {
    /// Divides the components by their gcd. Rejects unequal degrees, all-zero
    /// input, fewer than two components and constant maps.
    pub fn reduce(raw: Vec<HPoly2<F>>) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::Document("a parameterization needs at least two components".into()));
        }
        let d = raw[0].degree();
        if raw.iter().any(|p| p.degree() != d) {
            return Err(Error::UnequalDegrees);
        }
        if raw.iter().all(|p| p.is_zero()) {
            return Err(Error::AllZero);
        }
        if raw[0].is_zero() {
            return Err(Error::EmptyTrace);
        }
        let nonzero: Vec<&HPoly2<F>> = raw.iter().filter(|p| !p.is_zero()).collect();
        let g = nonzero.iter().fold(Poly::zero(), |acc, p| acc.gcd(&p.dehomogenize()));
        let e = nonzero.iter().map(|p| p.t0_multiplicity()).min().unwrap();
        let d2 = d - g.deg() - e;
        if d2 == 0 {
            return Err(Error::ConstantParam);
        }
        let comps = raw.iter().map(|p| HPoly2::from_affine(&p.dehomogenize().exact_quo(&g), d2)).collect();
        Ok(ProjParam { comps })
    }

    pub fn components(&self) -> &[HPoly2<F>] {
        &self.comps
    }

    /// Target dimension `m` (the number of components minus one).
    pub fn m(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.comps[0].degree()
    }

    /// `P_i(1, t)`.
    pub fn affine(&self, i: usize) -> Poly<F> {
        self.comps[i].dehomogenize()
    }

    pub fn eval(&self, t0: &F, t1: &F) -> Vec<F> {
        self.comps.iter().map(|p| p.eval(t0, t1)).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ProjParam<G> {
        ProjParam { comps: self.comps.iter().map(|p| p.map(&f)).collect() }
    }

    /// Postcomposition with the affine map `x -> A x + b` of the affine chart
    /// `x_i = P_i / P_0`.
    pub fn apply_affine_target(&self, a: &[Vec<F>], b: &[F]) -> Result<Self> {
        let m = self.m();
        assert!(a.len() == m && b.len() == m && a.iter().all(|r| r.len() == m));
        let mut comps = vec![self.comps[0].clone()];
        for i in 0..m {
            let mut c = self.comps[0].scale(&b[i]);
            for j in 0..m {
                c = c.add(&self.comps[j + 1].scale(&a[i][j]));
            }
            comps.push(c);
        }
        Self::reduce(comps)
    }
}

impl ProjParam<QuadExt> {
    /// Rational form when every coefficient is rational.
    pub fn to_rational(&self) -> Option<ProjParam<Rat>> {
        if self.comps.iter().all(|p| p.coeffs().iter().all(|c| c.is_rational())) {
            Some(self.map(|c| c.rational_part().clone()))
        } else {
            None
        }
    }
}

/// Coordinates of a point of the target, exact or as refinable enclosures.
#[derive(Clone, Debug, PartialEq)]
pub enum ProjPoint {
    Exact(Vec<QuadExt>),
    Approx(Vec<CIv>),
}

/// Divides by the first nonzero coordinate.
pub fn normalize_point(v: &[QuadExt]) -> Vec<QuadExt> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(l) => {
            let l = l.clone();
            v.iter().map(|c| c.clone() / l.clone()).collect()
        }
        None => v.to_vec(),
    }
}

impl ProjParam<Rat> {
    /// Parses homogeneous component strings in `t0, t1`.
    pub fn from_strings<S: AsRef<str>>(comps: &[S]) -> Result<Self> {
        let polys = comps.iter().map(|s| parse_poly(s.as_ref(), &PARAM_VARS)).collect::<Result<Vec<_>>>()?;
        let mut degree = None;
        for p in polys.iter().filter(|p| !p.is_zero()) {
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            let d = p.total_degree() as usize;
            if degree.is_some_and(|e| e != d) {
                return Err(Error::UnequalDegrees);
            }
            degree = Some(d);
        }
        let d = degree.ok_or(Error::AllZero)?;
        let forms = polys.iter().map(|p| HPoly2::from_mpoly(p, d)).collect::<Result<Vec<_>>>()?;
        Self::reduce(forms)
    }

    /// Homogenizes an affine map `t -> (n_1/d_1, ..., n_m/d_m)` by clearing
    /// denominators.
    pub fn from_affine(fracs: &[(UPoly, UPoly)]) -> Result<Self> {
        if fracs.iter().any(|(_, den)| den.is_zero()) {
            return Err(Error::Document("zero denominator in affine component".into()));
        }
        let mut lcm = UPoly::one();
        for (_, den) in fracs {
            let g = lcm.gcd(den);
            lcm = (&lcm * den).exact_quo(&g);
        }
        let mut polys = vec![lcm.clone()];
        for (num, den) in fracs {
            polys.push(&lcm.exact_quo(den) * num);
        }
        let d = polys.iter().map(|p| p.deg()).max().unwrap();
        if d == 0 {
            return Err(Error::ConstantParam);
        }
        Self::reduce(polys.iter().map(|p| HPoly2::from_affine(p, d)).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.comps.iter().map(|p| print_poly(&p.to_mpoly(), &PARAM_VARS)).collect()
    }

    /// Value at a point of the parameter line. Points whose minimal polynomial
    /// has degree at most two give exact coordinates, others enclosures at the
    /// resolution of their current box.
    pub fn evaluate(&self, p: &AlgPoint1) -> ProjPoint {
        match p {
            AlgPoint1::Infinity => ProjPoint::Exact(
                self.eval(&Rat::zero(), &Rat::one()).into_iter().map(QuadExt::from).collect(),
            ),
            AlgPoint1::Finite { bx, .. } => match p.to_quad() {
                Some(q) => ProjPoint::Exact(self.eval_quad(&QuadExt::one(), &q)),
                None => {
                    let z = bx.civ();
                    ProjPoint::Approx((0..=self.m()).map(|i| eval_upoly(&self.affine(i), &z)).collect())
                }
            },
        }
    }

    pub fn eval_quad(&self, t0: &QuadExt, t1: &QuadExt) -> Vec<QuadExt> {
        self.comps.iter().map(|p| p.map(|c| QuadExt::from(c.clone())).eval(t0, t1)).collect()
    }

    /// `P o M^-1`: the reparameterization whose parameter is `M` applied to
    /// the old one. The image curve is unchanged.
    pub fn apply_mobius(&self, m: &Mobius) -> Result<ProjParam<QuadExt>> {
        if m.det().is_zero() {
            return Err(Error::SingularMobius);
        }
        let inv = m.inverse();
        let (a, b, c, d) = (&inv.a, &inv.b, &inv.c, &inv.d);
        let comps = self
            .comps
            .iter()
            .map(|p| p.map(|x| QuadExt::from(x.clone())).substitute_linear(a, b, c, d))
            .collect();
        ProjParam::reduce(comps)
    }

    /// Möbius reparameterization by a rational matrix.
    pub fn apply_rational_mobius(&self, m: &Mobius) -> Result<ProjParam<Rat>> {
        assert!(m.is_rational(), "rational matrix expected");
        Ok(self.apply_mobius(m)?.to_rational().expect("rational coefficients"))
    }

    /// Complex conjugation acts trivially on rational coefficients.
    pub fn conjugate(&self) -> Self {
        self.clone()
    }
}

/// Complex conjugate of a parameterization.
pub fn conjugate_param(param: &ProjParam) -> ProjParam {
    param.conjugate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn circle() -> ProjParam {
        ProjParam::from_strings(&["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]).unwrap()
    }

    #[test]
    fn reduction_removes_common_factor() {
        let p = ProjParam::from_strings(&["t0*(t0^2+t1^2)", "2*t0^2*t1", "t0*(t1^2-t0^2)"]).unwrap();
        assert_eq!(p, circle());
        assert_eq!(p.degree(), 2);
        let g = ProjParam::from_strings(&["(t0^2+t1^2)^2", "t1^4-t0^4", "2*t0*t1*(t1^2-t0^2)"]).unwrap();
        assert_eq!(g.degree(), 4);
        assert_eq!(ProjParam::from_strings(&["t0^2", "2*t0^2"]), Err(Error::ConstantParam));
        assert_eq!(ProjParam::from_strings(&["t0^2", "t1"]), Err(Error::UnequalDegrees));
        assert_eq!(ProjParam::from_strings(&["0", "0"]), Err(Error::AllZero));
        assert_eq!(ProjParam::from_strings(&["0", "t0", "t1"]), Err(Error::EmptyTrace));
    }

    #[test]
    fn evaluation() {
        let p = circle();
        assert_eq!(p.eval(&rat(1, 1), &rat(1, 1)), vec![rat(2, 1), rat(2, 1), rat(0, 1)]);
        let line = ProjParam::from_strings(&["t0", "t1", "0"]).unwrap();
        let at_inf = line.evaluate(&AlgPoint1::Infinity);
        assert_eq!(at_inf, ProjPoint::Exact(vec![QuadExt::zero(), QuadExt::one(), QuadExt::zero()]));
    }

    #[test]
    fn mobius_swap() {
        let line = ProjParam::from_strings(&["t0", "t1", "0"]).unwrap();
        let swapped = line.apply_rational_mobius(&Mobius::swap()).unwrap();
        assert_eq!(swapped, ProjParam::from_strings(&["t1", "t0", "0"]).unwrap());
        assert_eq!(line.apply_rational_mobius(&Mobius::identity()).unwrap(), line);
    }

    #[test]
    fn affine_homogenization() {
        // t -> (1/t, t): [t : 1 : t^2]
        let p = ProjParam::from_affine(&[(UPoly::from_ints(&[1]), UPoly::from_ints(&[0, 1])), (UPoly::from_ints(&[0, 1]), UPoly::one())])
            .unwrap();
        assert_eq!(p.to_strings(), vec!["1*t0^1*t1^1", "1*t0^2", "1*t1^2"]);
    }
}
