//! Interval arithmetic with rational endpoints, real and complex.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::field::{rat_to_f64, Rat};
use super::poly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatIv {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatIv {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        RatIv { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatIv { lo: x.clone(), hi: x }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn to_f64_mid(&self) -> f64 {
        rat_to_f64(&self.mid())
    }
}

impl Add for &RatIv {
    type Output = RatIv;
    fn add(self, o: &RatIv) -> RatIv {
        RatIv { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }
}

impl Sub for &RatIv {
    type Output = RatIv;
    fn sub(self, o: &RatIv) -> RatIv {
        RatIv { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }
}

impl Neg for &RatIv {
    type Output = RatIv;
    fn neg(self) -> RatIv {
        RatIv { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }
}

impl Mul for &RatIv {
    type Output = RatIv;
    fn mul(self, o: &RatIv) -> RatIv {
        if self.lo == self.hi && o.lo == o.hi {
            return RatIv::point(&self.lo * &o.lo);
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for x in &c[1..] {
            if *x < lo {
                lo = x.clone();
            }
            if *x > hi {
                hi = x.clone();
            }
        }
        RatIv { lo, hi }
    }
}

/// Axis-parallel complex box `re x im`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIv {
    pub re: RatIv,
    pub im: RatIv,
}

impl CIv {
    pub fn real(x: Rat) -> Self {
        CIv { re: RatIv::point(x), im: RatIv::point(Rat::zero()) }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn scale(&self, r: &Rat) -> CIv {
        let p = RatIv::point(r.clone());
        CIv { re: &self.re * &p, im: &self.im * &p }
    }
}

impl Add for &CIv {
    type Output = CIv;
    fn add(self, o: &CIv) -> CIv {
        CIv { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &CIv {
    type Output = CIv;
    fn sub(self, o: &CIv) -> CIv {
        CIv { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &CIv {
    type Output = CIv;
    fn mul(self, o: &CIv) -> CIv {
        let re = &(&self.re * &o.re) - &(&self.im * &o.im);
        let im = &(&self.re * &o.im) + &(&self.im * &o.re);
        CIv { re, im }
    }
}

/// Horner evaluation of a rational polynomial over a complex box.
pub fn eval_upoly(p: &UPoly, z: &CIv) -> CIv {
    let mut acc = CIv::real(Rat::zero());
    for a in p.coeffs().iter().rev() {
        let prod = &acc * z;
        acc = CIv { re: &prod.re + &RatIv::point(a.clone()), im: prod.im };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::rat;

    #[test]
    fn box_evaluation_encloses_value() {
        // (t^2 + 1) around i
        let z = CIv {
            re: RatIv::new(rat(-1, 100), rat(1, 100)),
            im: RatIv::new(rat(99, 100), rat(101, 100)),
        };
        let v = eval_upoly(&UPoly::from_ints(&[1, 0, 1]), &z);
        assert!(v.contains_zero());
        let far = CIv::real(rat(2, 1));
        assert!(!eval_upoly(&UPoly::from_ints(&[1, 0, 1]), &far).contains_zero());
    }
}
