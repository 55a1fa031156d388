//! Polynomials in two variables `(t, s)`, stored as polynomials in `s` whose
//! coefficients are rational polynomials in `t`.

use num_traits::{One, Zero};

use super::field::{Field, Rat};
use super::interval::{eval_upoly, CIv, RatIv};
use super::poly::{sylvester_resultant, Poly, UPoly};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BPoly {
    c: Vec<UPoly>,
}

impl BPoly {
    pub fn new(mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        BPoly { c }
    }

    pub fn zero() -> Self {
        BPoly { c: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// A polynomial in `t` alone.
    pub fn from_t(p: UPoly) -> Self {
        Self::new(vec![p])
    }

    /// A polynomial in `s` alone.
    pub fn from_s(p: &UPoly) -> Self {
        Self::new(p.coeffs().iter().map(|a| UPoly::constant(a.clone())).collect())
    }

    /// `a(t) * b(s) - b(t) * a(s)`.
    pub fn cross_difference(a: &UPoly, b: &UPoly) -> Self {
        let n = a.coeffs().len().max(b.coeffs().len());
        Self::new((0..n).map(|k| &a.scale(&b.coeff(k)) - &b.scale(&a.coeff(k))).collect())
    }

    pub fn coeffs_s(&self) -> &[UPoly] {
        &self.c
    }

    pub fn deg_s(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn deg_t(&self) -> usize {
        self.c.iter().map(|p| p.deg()).max().unwrap_or(0)
    }

    pub fn lc_s(&self) -> UPoly {
        self.c.last().cloned().unwrap_or_else(UPoly::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| &self.get(k) + &o.get(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| &self.get(k) - &o.get(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![UPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Self::new(c)
    }

    pub fn scale_t(&self, p: &UPoly) -> Self {
        Self::new(self.c.iter().map(|a| a * p).collect())
    }

    fn get(&self, k: usize) -> UPoly {
        self.c.get(k).cloned().unwrap_or_else(UPoly::zero)
    }

    fn shift_s(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![UPoly::zero(); k];
        c.extend(self.c.iter().cloned());
        Self::new(c)
    }

    /// Exchanges the roles of `t` and `s`.
    pub fn swap(&self) -> Self {
        let n = self.deg_t() + 1;
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(
            (0..n)
                .map(|j| UPoly::new(self.c.iter().map(|p| p.coeff(j)).collect()))
                .collect(),
        )
    }

    /// Monic gcd over `Q[t]` of the coefficients.
    pub fn content(&self) -> UPoly {
        self.c.iter().fold(UPoly::zero(), |acc, p| acc.gcd(p))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        Self::new(self.c.iter().map(|p| p.exact_quo(&c)).collect())
    }

    /// `lc(b)^k * a mod b` with `k = deg a - deg b + 1` (pseudo-remainder in `s`).
    pub fn prem(&self, b: &Self) -> Self {
        assert!(!b.is_zero());
        let db = b.deg_s();
        let lb = b.lc_s();
        let mut r = self.clone();
        while !r.is_zero() && r.deg_s() >= db {
            let k = r.deg_s() - db;
            let lr = r.lc_s();
            r = r.scale_t(&lb).sub(&b.scale_t(&lr).shift_s(k));
        }
        r
    }

    /// Greatest common divisor over `Q[t, s]`, normalized so that the leading
    /// coefficient (in `s`, then in `t`) is 1.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive_part(), o.primitive_part());
        if a.deg_s() < b.deg_s() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive_part();
        }
        let g = if a.deg_s() == 0 { BPoly::from_t(UPoly::one()) } else { a.primitive_part() };
        g.scale_t(&c).normalized()
    }

    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc_s().lc();
        let inv = Rat::one() / l;
        Self::new(self.c.iter().map(|p| p.scale(&inv)).collect())
    }

    /// Quotient of an exact division in `Q[t][s]`; `None` if inexact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero());
        let dd = d.deg_s();
        let ld = d.lc_s();
        let mut r = self.clone();
        let mut q = vec![UPoly::zero(); (self.deg_s() + 1).saturating_sub(dd)];
        while !r.is_zero() && r.deg_s() >= dd {
            let k = r.deg_s() - dd;
            let (qk, rem) = r.lc_s().div_rem(&ld);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&d.scale_t(&qk).shift_s(k));
            q[k] = qk;
        }
        if !r.is_zero() {
            return None;
        }
        Some(Self::new(q))
    }

    /// `Res_s(self, o)` as a polynomial in `t` (Sylvester convention).
    pub fn resultant_s(&self, o: &Self) -> UPoly {
        assert!(!self.is_zero() && !o.is_zero());
        sylvester_resultant(&self.c, &o.c)
    }

    pub fn derivative_s(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, p)| p.scale(&Rat::from_integer((k as i64).into())))
                .collect(),
        )
    }

    /// Substitutes `t = alpha` given by `lift`, leaving a polynomial in `s`.
    pub fn specialize_t<F: Field>(&self, lift: impl Fn(&UPoly) -> F) -> Poly<F> {
        Poly::new(self.c.iter().map(lift).collect())
    }

    /// `self(t, s)` at exact rationals.
    pub fn eval(&self, t: &Rat, s: &Rat) -> Rat {
        let inner: Vec<Rat> = self.c.iter().map(|p| p.eval(t)).collect();
        UPoly::new(inner).eval(s)
    }

    /// Interval enclosure of `self(t, s)` over complex boxes.
    pub fn eval_box(&self, t: &CIv, s: &CIv) -> CIv {
        let mut acc = CIv { re: RatIv::point(Rat::zero()), im: RatIv::point(Rat::zero()) };
        for p in self.c.iter().rev() {
            acc = &(&acc * s) + &eval_upoly(p, t);
        }
        acc
    }
}
