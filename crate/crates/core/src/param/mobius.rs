use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{QuadExt, Rat};

/// Invertible real 2x2 matrix acting on `[t0:t1]` by
/// `(t0, t1) -> (a*t0 + b*t1, c*t0 + d*t1)`; entries share one surd.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius {
    pub a: QuadExt,
    pub b: QuadExt,
    pub c: QuadExt,
    pub d: QuadExt,
}

impl Mobius {
    pub fn new(a: QuadExt, b: QuadExt, c: QuadExt, d: QuadExt) -> Result<Self> {
        let fields: Vec<i64> = [&a, &b, &c, &d].iter().filter(|x| !x.is_rational()).filter_map(|x| x.field()).collect();
        if fields.iter().any(|&f| f < 0) {
            return Err(Error::NonRealMobius);
        }
        if fields.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::NonRealMobius);
        }
        let m = Mobius { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::SingularMobius);
        }
        Ok(m)
    }

    pub fn rational(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mobius { a: QuadExt::one(), b: QuadExt::zero(), c: QuadExt::zero(), d: QuadExt::one() }
    }

    /// `t0 <-> t1`.
    pub fn swap() -> Self {
        Mobius { a: QuadExt::zero(), b: QuadExt::one(), c: QuadExt::one(), d: QuadExt::zero() }
    }

    pub fn det(&self) -> QuadExt {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        Mobius {
            a: self.d.clone() / det.clone(),
            b: -self.b.clone() / det.clone(),
            c: -self.c.clone() / det.clone(),
            d: self.a.clone() / det,
        }
    }

    /// Matrix product `self * o` (apply `o` first).
    pub fn compose(&self, o: &Mobius) -> Mobius {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        Mobius {
            a: a.clone() * o.a.clone() + b.clone() * o.c.clone(),
            b: a.clone() * o.b.clone() + b.clone() * o.d.clone(),
            c: c.clone() * o.a.clone() + d.clone() * o.c.clone(),
            d: c.clone() * o.b.clone() + d.clone() * o.d.clone(),
        }
    }

    pub fn apply(&self, t0: &QuadExt, t1: &QuadExt) -> (QuadExt, QuadExt) {
        (
            self.a.clone() * t0.clone() + self.b.clone() * t1.clone(),
            self.c.clone() * t0.clone() + self.d.clone() * t1.clone(),
        )
    }

    /// Image of the affine parameter `t = t1/t0`; `None` for `[0:1]`.
    pub fn apply_affine(&self, t: &QuadExt) -> Option<QuadExt> {
        let (u0, u1) = self.apply(&QuadExt::one(), t);
        (!u0.is_zero()).then(|| u1 / u0)
    }

    pub fn is_rational(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().all(|x| x.is_rational())
    }
}
