//! Elements of a quadratic field `Q(sqrt(d))`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{rat_to_f64, rat_to_string, Field, Rat};

/// `a + b*sqrt(d)` with `d` square-free and different from 0 and 1.
///
/// `d == 0` is reserved for values that have not yet met a surd (then `b == 0`);
/// combining such a value with one of `Q(sqrt(d))` adopts that `d`.
#[derive(Clone, Debug)]
pub struct QuadExt {
    d: i64,
    a: Rat,
    b: Rat,
}

impl QuadExt {
    pub fn new(a: Rat, b: Rat, d: i64) -> Self {
        assert!(is_squarefree_field_param(d), "sqrt({d}) is not a quadratic surd");
        QuadExt { d, a, b }
    }

    pub fn from_rational(a: Rat) -> Self {
        QuadExt { d: 0, a, b: Rat::zero() }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: i64) -> Self {
        Self::new(Rat::zero(), Rat::one(), d)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn surd_part(&self) -> &Rat {
        &self.b
    }

    /// The field parameter, `None` for a plain rational.
    pub fn field(&self) -> Option<i64> {
        if self.d == 0 {
            None
        } else {
            Some(self.d)
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Image under `sqrt(d) -> -sqrt(d)`; complex conjugation when `d < 0`.
    pub fn conj(&self) -> Self {
        QuadExt { d: self.d, a: self.a.clone(), b: -self.b.clone() }
    }

    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.b * &self.b * Rat::from_integer(BigInt::from(self.d))
    }

    /// Sign of a real element (`d > 0` or rational).
    pub fn signum(&self) -> Ordering {
        assert!(self.d >= 0 || self.b.is_zero(), "sign of a non-real quadratic number");
        let sa = self.a.cmp(&Rat::zero());
        let sb = self.b.cmp(&Rat::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rat::from_integer(BigInt::from(self.d));
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (re, im) = self.to_complex_f64();
        debug_assert!(im == 0.0);
        re
    }

    /// `(re, im)` of the complex embedding with `sqrt(d) = i*sqrt(-d)` for `d < 0`.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let a = rat_to_f64(&self.a);
        let b = rat_to_f64(&self.b);
        if self.b.is_zero() {
            (a, 0.0)
        } else if self.d > 0 {
            (a + b * (self.d as f64).sqrt(), 0.0)
        } else {
            (a, b * ((-self.d) as f64).sqrt())
        }
    }

    fn joint(&self, other: &Self) -> i64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (d1, d2) if d1 == d2 => d1,
            (d1, d2) => {
                if self.b.is_zero() {
                    d2
                } else if other.b.is_zero() {
                    d1
                } else {
                    panic!("mixing Q(sqrt({d1})) and Q(sqrt({d2}))")
                }
            }
        }
    }
}

pub fn is_squarefree_field_param(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let (s, _) = split_square(&BigInt::from(d));
    s.is_one()
}

/// Writes `n = s^2 * f` with `f` square-free and `s > 0`.
///
/// Trial division; inputs at this crate's scale have small discriminants.
pub fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let negative = n.is_negative();
    let mut rest = n.abs();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(10_000_000u64);
    while &p * &p <= rest && p <= limit {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            square *= r;
        } else {
            free *= rest;
        }
    }
    if negative {
        free = -free;
    }
    (square, free)
}

/// `sqrt(q)` for a rational `q`, as an element of `Q(sqrt(d))` (or `Q` if `q`
/// is a square).
pub fn sqrt_rat(q: &Rat) -> QuadExt {
    if q.is_zero() {
        return QuadExt::from_rational(Rat::zero());
    }
    // sqrt(n/m) = sqrt(n*m)/m
    let nm = q.numer() * q.denom();
    let (s, f) = split_square(&nm);
    let coeff = Rat::new(s, q.denom().clone());
    if f.is_one() {
        QuadExt::from_rational(coeff)
    } else {
        let d = f.to_i64().expect("surd parameter exceeds i64");
        QuadExt::new(Rat::zero(), coeff, d)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl Hash for QuadExt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        let d = self.joint(&o);
        QuadExt { d, a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        let d = self.joint(&o);
        QuadExt { d, a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { d: self.d, a: -self.a, b: -self.b }
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        let d = self.joint(&o);
        let dd = Rat::from_integer(BigInt::from(d));
        QuadExt {
            d,
            a: &self.a * &o.a + &self.b * &o.b * dd,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Div for QuadExt {
    type Output = QuadExt;
    fn div(self, o: QuadExt) -> QuadExt {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        let inv = QuadExt { d: o.d, a: &o.a / &n, b: -(&o.b / &n) };
        self * inv
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rational(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::from_rational(Rat::one())
    }
}

impl Field for QuadExt {
    fn from_rat(r: &Rat) -> Self {
        QuadExt::from_rational(r.clone())
    }
}

impl From<Rat> for QuadExt {
    fn from(r: Rat) -> Self {
        QuadExt::from_rational(r)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", rat_to_string(&self.a));
        }
        let surd = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if (-self.b.clone()).is_one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", rat_to_string(&self.b), self.d)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if surd.starts_with('-') {
            write!(f, "{}{}", rat_to_string(&self.a), surd)
        } else {
            write!(f, "{}+{}", rat_to_string(&self.a), surd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::rat;

    #[test]
    fn arithmetic_in_q_sqrt2() {
        let s = QuadExt::sqrt(2);
        assert_eq!(s.clone() * s.clone(), QuadExt::from(rat(2, 1)));
        let x = QuadExt::new(rat(1, 1), rat(1, 1), 2);
        let inv = QuadExt::one() / x.clone();
        assert_eq!(inv * x, QuadExt::one());
    }

    #[test]
    fn gaussian_rationals() {
        let i = QuadExt::sqrt(-1);
        assert_eq!(i.clone() * i.clone(), -QuadExt::one());
        assert_eq!(i.to_complex_f64(), (0.0, 1.0));
        assert_eq!(i.to_string(), "sqrt(-1)");
    }

    #[test]
    fn signs_of_real_surds() {
        // 1 - sqrt(2) < 0, 3/2 - sqrt(2) > 0
        assert_eq!(QuadExt::new(rat(1, 1), rat(-1, 1), 2).signum(), Ordering::Less);
        assert_eq!(QuadExt::new(rat(3, 2), rat(-1, 1), 2).signum(), Ordering::Greater);
    }

    #[test]
    fn square_splitting() {
        assert_eq!(split_square(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
        assert_eq!(split_square(&BigInt::from(-4)), (BigInt::from(2), BigInt::from(-1)));
        assert_eq!(sqrt_rat(&rat(9, 4)), QuadExt::from(rat(3, 2)));
        assert_eq!(sqrt_rat(&rat(1, 2)), QuadExt::new(rat(0, 1), rat(1, 2), 2));
        assert!(!is_squarefree_field_param(8));
    }
}
