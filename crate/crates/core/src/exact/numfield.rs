//! Arithmetic in a simple algebraic extension `Q[t]/(q)` with `q` irreducible.

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::field::{Field, Rat};
use super::poly::UPoly;

/// Residue class of a rational polynomial modulo an irreducible `q`.
///
/// Rationals carry no modulus and adopt one when combined with a field element.
#[derive(Clone, Debug)]
pub struct NfElem {
    modulus: Option<Arc<UPoly>>,
    v: UPoly,
}

impl NfElem {
    pub fn new(modulus: &Arc<UPoly>, v: &UPoly) -> Self {
        NfElem { modulus: Some(modulus.clone()), v: v.rem(modulus) }
    }

    /// The class of `t` itself.
    pub fn generator(modulus: &Arc<UPoly>) -> Self {
        Self::new(modulus, &UPoly::x())
    }

    pub fn rational(r: Rat) -> Self {
        NfElem { modulus: None, v: UPoly::constant(r) }
    }

    pub fn value(&self) -> &UPoly {
        &self.v
    }

    fn joint(&self, o: &Self) -> Option<Arc<UPoly>> {
        match (&self.modulus, &o.modulus) {
            (Some(a), Some(b)) => {
                debug_assert!(Arc::ptr_eq(a, b) || a == b, "mixing number fields");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn build(m: Option<Arc<UPoly>>, v: UPoly) -> Self {
        match m {
            Some(m) => {
                let v = v.rem(&m);
                NfElem { modulus: Some(m), v }
            }
            None => NfElem { modulus: None, v },
        }
    }
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        self.v == o.v
    }
}

impl Add for NfElem {
    type Output = NfElem;
    fn add(self, o: NfElem) -> NfElem {
        let m = self.joint(&o);
        NfElem::build(m, &self.v + &o.v)
    }
}

impl Sub for NfElem {
    type Output = NfElem;
    fn sub(self, o: NfElem) -> NfElem {
        let m = self.joint(&o);
        NfElem::build(m, &self.v - &o.v)
    }
}

impl Mul for NfElem {
    type Output = NfElem;
    fn mul(self, o: NfElem) -> NfElem {
        let m = self.joint(&o);
        NfElem::build(m, &self.v * &o.v)
    }
}

impl Neg for NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem { modulus: self.modulus, v: -&self.v }
    }
}

impl Div for NfElem {
    type Output = NfElem;
    fn div(self, o: NfElem) -> NfElem {
        assert!(!o.v.is_zero(), "division by zero in number field");
        let m = self.joint(&o);
        if o.v.is_constant() {
            let inv = Rat::one() / o.v.lc();
            return NfElem::build(m, self.v.scale(&inv));
        }
        let m = m.expect("non-constant element without modulus");
        let (g, s, _) = o.v.ext_gcd(&m);
        assert!(g.is_one(), "modulus is not irreducible");
        NfElem::build(Some(m), &self.v * &s)
    }
}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem { modulus: None, v: UPoly::zero() }
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
}

impl One for NfElem {
    fn one() -> Self {
        NfElem { modulus: None, v: UPoly::one() }
    }
}

impl Field for NfElem {
    fn from_rat(r: &Rat) -> Self {
        NfElem::rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Poly;

    #[test]
    fn gcd_over_q_i() {
        // Over Q(i): gcd(s^2 + 1, s - i) = s - i.
        let m = Arc::new(UPoly::from_ints(&[1, 0, 1]));
        let i = NfElem::generator(&m);
        let one = NfElem::one();
        let f = Poly::new(vec![one.clone(), NfElem::zero(), one.clone()]);
        let g = Poly::new(vec![-i.clone(), one.clone()]);
        let h = f.gcd(&g);
        assert_eq!(h.deg(), 1);
        assert_eq!(h.coeff(0), -i.clone());
        assert_eq!((i.clone() * i.clone()), -one.clone());
        assert_eq!(one.clone() / i.clone(), -i);
    }
}
