//! Sparse multivariate polynomials with lexicographic term order.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{ExactRing, Field, Rat};
use super::poly::Poly;

/// Exponent vectors map to nonzero coefficients; variable 0 is the most
/// significant in the lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly<F> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exps: Vec<u32>, c: F) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms.get(exps).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: F) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// Largest term in lex order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &F)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            p.add_term(e.clone(), a.clone() * c.clone());
        }
        p
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        let mut p = MPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            p.add_term(e.clone(), f(a));
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, F::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                p.add_term(e2, a.clone() * F::from_int(e[i] as i64));
            }
        }
        p
    }

    /// Evaluation in any commutative ring the coefficients map into.
    pub fn eval_with<T>(&self, point: &[T], lift: impl Fn(&F) -> T) -> T
    where
        T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
    {
        let mut acc = T::zero();
        for (e, a) in &self.terms {
            let mut term = lift(a);
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn eval(&self, point: &[F]) -> F {
        self.eval_with(point, |a| a.clone())
    }

    /// Replaces variable `i` by `subs[i]` (all in a common ring of `nv` variables).
    pub fn compose(&self, subs: &[MPoly<F>]) -> MPoly<F> {
        let nv = subs.first().map(|p| p.nvars).unwrap_or(0);
        let mut acc = MPoly::zero(nv);
        let mut powers: Vec<Vec<MPoly<F>>> = subs.iter().map(|s| vec![MPoly::constant(nv, F::one()), s.clone()]).collect();
        for (e, a) in &self.terms {
            let mut term = MPoly::constant(nv, a.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Univariate view in variable `i` when no other variable occurs.
    pub fn to_univariate(&self, i: usize) -> Option<Poly<F>> {
        let mut c = vec![F::zero(); self.degree_in(i) as usize + 1];
        for (e, a) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return None;
            }
            c[e[i] as usize] = a.clone();
        }
        Some(Poly::new(c))
    }

    pub fn from_univariate(p: &Poly<F>, nvars: usize, i: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (k, a) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.add_term(e, a.clone());
        }
        out
    }

    /// Multiplies every term by `x_i^(d - deg)` to reach total degree `d`.
    pub fn homogenize(&self, i: usize, d: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            let deg: u32 = e.iter().sum();
            let mut e2 = e.clone();
            e2[i] += d - deg;
            out.add_term(e2, a.clone());
        }
        out
    }

    /// Quotient and remainder of division by `d` using lex leading terms; the
    /// quotient is exact when the remainder is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let (ld_e, ld_c) = d.leading_term().expect("division by zero polynomial");
        let (ld_e, ld_c) = (ld_e.clone(), ld_c.clone());
        let mut q = Self::zero(self.nvars);
        let mut r = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((e, c)) = p.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&ld_e).all(|(a, b)| a >= b) {
                let qe: Vec<u32> = e.iter().zip(&ld_e).map(|(a, b)| a - b).collect();
                let qc = c / ld_c.clone();
                let t = Self::monomial(qe.clone(), qc.clone());
                p = &p - &(&t * d);
                q.add_term(qe, qc);
            } else {
                p.terms.remove(&e);
                r.add_term(e, c);
            }
        }
        (q, r)
    }
}

impl<F: Field> Add for &MPoly<F> {
    type Output = MPoly<F>;
    fn add(self, o: &MPoly<F>) -> MPoly<F> {
        let mut p = self.clone();
        for (e, a) in &o.terms {
            p.add_term(e.clone(), a.clone());
        }
        p
    }
}

impl<F: Field> Sub for &MPoly<F> {
    type Output = MPoly<F>;
    fn sub(self, o: &MPoly<F>) -> MPoly<F> {
        let mut p = self.clone();
        for (e, a) in &o.terms {
            p.add_term(e.clone(), -a.clone());
        }
        p
    }
}

impl<F: Field> Mul for &MPoly<F> {
    type Output = MPoly<F>;
    fn mul(self, o: &MPoly<F>) -> MPoly<F> {
        let mut p = MPoly::zero(self.nvars);
        for (e1, a) in &self.terms {
            for (e2, b) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                p.add_term(e, a.clone() * b.clone());
            }
        }
        p
    }
}

impl<F: Field> Neg for &MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        self.scale(&(-F::one()))
    }
}

impl<F: Field> Neg for MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        -&self
    }
}

/// Rational polynomials in a fixed number `N` of variables; `Zero` and `One`
/// need the arity, which this wrapper pins for fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed<const N: usize>(pub MPoly<Rat>);

impl<const N: usize> Zero for Fixed<N> {
    fn zero() -> Self {
        Fixed(MPoly::zero(N))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<const N: usize> Add for Fixed<N> {
    type Output = Fixed<N>;
    fn add(self, o: Fixed<N>) -> Fixed<N> {
        Fixed(&self.0 + &o.0)
    }
}

impl<const N: usize> Mul for Fixed<N> {
    type Output = Fixed<N>;
    fn mul(self, o: Fixed<N>) -> Fixed<N> {
        Fixed(&self.0 * &o.0)
    }
}

impl<const N: usize> One for Fixed<N> {
    fn one() -> Self {
        Fixed(MPoly::constant(N, Rat::one()))
    }
}

impl<const N: usize> Neg for Fixed<N> {
    type Output = Fixed<N>;
    fn neg(self) -> Fixed<N> {
        Fixed(-&self.0)
    }
}

impl<const N: usize> ExactRing for Fixed<N> {
    fn ring_mul(&self, o: &Self) -> Self {
        Fixed(&self.0 * &o.0)
    }
    fn ring_sub(&self, o: &Self) -> Self {
        Fixed(&self.0 - &o.0)
    }
    fn exact_div(&self, o: &Self) -> Self {
        let (q, r) = self.0.div_rem(&o.0);
        assert!(r.is_zero(), "inexact multivariate division");
        Fixed(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::rat;

    fn v(i: usize) -> MPoly<Rat> {
        MPoly::var(2, i)
    }

    #[test]
    fn arithmetic_and_division() {
        let x = v(0);
        let y = v(1);
        let a = &(&x * &x) - &(&y * &y);
        let b = &x - &y;
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, &x + &y);
        assert_eq!(a.total_degree(), 2);
        assert!(a.is_homogeneous());
        assert_eq!(a.eval(&[rat(3, 1), rat(1, 1)]), rat(8, 1));
    }

    #[test]
    fn composition() {
        // x^2 + y with x -> x + y, y -> x y
        let x = v(0);
        let y = v(1);
        let p = &(&x * &x) + &y;
        let c = p.compose(&[&x + &y, &x * &y]);
        let expect = &(&(&x + &y) * &(&x + &y)) + &(&x * &y);
        assert_eq!(c, expect);
        assert_eq!(p.derivative(0), x.scale(&rat(2, 1)));
    }
}
