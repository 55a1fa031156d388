//! Binary forms: homogeneous polynomials in `(t0, t1)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Field, MPoly, Poly};

/// Homogeneous form of degree `d`; `coeffs[k]` multiplies `t0^(d-k) t1^k`,
/// so the coefficient list is exactly the dehomogenization at `t0 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HPoly2<F> {
    degree: usize,
    coeffs: Vec<F>,
}

impl<F: Field> HPoly2<F> {
    pub fn new(degree: usize, mut coeffs: Vec<F>) -> Self {
        assert!(coeffs.len() <= degree + 1, "too many coefficients for the degree");
        coeffs.resize(degree + 1, F::zero());
        HPoly2 { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(degree, Vec::new())
    }

    /// Homogenizes an affine polynomial in `t = t1/t0` to degree `d`.
    pub fn from_affine(p: &Poly<F>, degree: usize) -> Self {
        assert!(p.degree().map_or(true, |k| k <= degree), "affine degree exceeds form degree");
        Self::new(degree, p.coeffs().to_vec())
    }

    /// From a two-variable polynomial in `(t0, t1)`; `None` degree for zero.
    pub fn from_mpoly(p: &MPoly<F>, degree: usize) -> Result<Self> {
        let mut c = vec![F::zero(); degree + 1];
        for (e, a) in p.terms() {
            if (e[0] + e[1]) as usize != degree {
                return Err(Error::NotHomogeneous);
            }
            c[e[1] as usize] = a.clone();
        }
        Ok(Self::new(degree, c))
    }

    pub fn to_mpoly(&self) -> MPoly<F> {
        let mut p = MPoly::zero(2);
        for (k, a) in self.coeffs.iter().enumerate() {
            p.add_term(vec![(self.degree - k) as u32, k as u32], a.clone());
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `P(1, t)`.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new(self.coeffs.clone())
    }

    /// Multiplicity of `t0` as a factor, i.e. of the root `[0:1]`.
    pub fn t0_multiplicity(&self) -> usize {
        match self.dehomogenize().degree() {
            Some(k) => self.degree - k,
            None => self.degree,
        }
    }

    /// Value at `(t0, t1)`.
    pub fn eval(&self, t0: &F, t1: &F) -> F {
        let mut acc = F::zero();
        let mut p1 = F::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            let mut p0 = F::one();
            for _ in 0..self.degree - k {
                p0 = p0 * t0.clone();
            }
            acc = acc + a.clone() * p0 * p1.clone();
            p1 = p1 * t1.clone();
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.degree, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        Self::new(self.degree, self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> HPoly2<G> {
        HPoly2::new(self.degree, self.coeffs.iter().map(f).collect())
    }

    /// `P(a*u0 + b*u1, c*u0 + d*u1)` as a form in `(u0, u1)`.
    pub fn substitute_linear(&self, a: &F, b: &F, c: &F, d: &F) -> Self {
        // Dehomogenize at u0 = 1: (a + b u)^(deg-k) (c + d u)^k.
        let l0 = Poly::new(vec![a.clone(), b.clone()]);
        let l1 = Poly::new(vec![c.clone(), d.clone()]);
        let mut acc = Poly::zero();
        for (k, coef) in self.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let term = &l0.pow((self.degree - k) as u32) * &l1.pow(k as u32);
            acc = &acc + &term.scale(coef);
        }
        Self::from_affine(&acc, self.degree)
    }
}
