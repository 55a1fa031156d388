use num_traits::{One, Zero};

use super::mobius::Mobius;
use super::projparam::ProjParam;
use crate::error::{Error, Result};
use crate::exact::field::rat_to_string;
use crate::exact::sturm::{count_in, sturm_sequence, Ext};
use crate::exact::{QuadExt, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// The whole real trace, image of the real projective line.
    FullTrace,
    /// Image of the parameter interval `[a, b]` in the chart `t = t1/t0`.
    Arc { a: Rat, b: Rat },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::FullTrace => "FULL_TRACE",
            Mode::Arc { .. } => "ARC",
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, Mode::Arc { .. })
    }
}

/// A parameterized semialgebraic set: the full real trace or an arc.
#[derive(Clone, Debug, PartialEq)]
pub struct SemialgInput {
    param: ProjParam,
    mode: Mode,
}

impl SemialgInput {
    pub fn full(param: ProjParam) -> Self {
        SemialgInput { param, mode: Mode::FullTrace }
    }

    /// Rejects `a >= b` and arcs containing a real root of `P0(1, t)`.
    pub fn arc(param: ProjParam, a: Rat, b: Rat) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidArc);
        }
        let p0 = param.affine(0);
        let sf = p0.squarefree_part();
        let seq = sturm_sequence(&sf);
        let inside = count_in(&seq, &Ext::Fin(a.clone()), &Ext::Fin(b.clone()));
        if inside > 0 || sf.sign_at(&a) == 0 {
            return Err(Error::ArcTouchesInfinity { a: rat_to_string(&a), b: rat_to_string(&b) });
        }
        Ok(SemialgInput { param, mode: Mode::Arc { a, b } })
    }

    pub fn new(param: ProjParam, mode: Mode) -> Result<Self> {
        match mode {
            Mode::FullTrace => Ok(Self::full(param)),
            Mode::Arc { a, b } => Self::arc(param, a, b),
        }
    }

    pub fn param(&self) -> &ProjParam {
        &self.param
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    /// Reparameterizes by a rational Möbius map, carrying the arc along. An arc
    /// whose image would pass through `[0:1]` is rejected.
    pub fn apply_mobius(&self, m: &Mobius) -> Result<Self> {
        let param = self.param.apply_rational_mobius(m)?;
        match &self.mode {
            Mode::FullTrace => Ok(Self::full(param)),
            Mode::Arc { a, b } => {
                // t -> (c + d t)/(a + b t) has its pole where a + b t = 0.
                let den = |t: &Rat| m.a.rational_part().clone() + m.b.rational_part().clone() * t.clone();
                let (da, db) = (den(a), den(b));
                let pole_inside = da.is_zero() || db.is_zero() || (da < Rat::zero()) != (db < Rat::zero());
                if pole_inside {
                    return Err(Error::ArcTouchesInfinity { a: rat_to_string(a), b: rat_to_string(b) });
                }
                let img = |t: &Rat| m.apply_affine(&QuadExt::from(t.clone())).unwrap().rational_part().clone();
                let (ia, ib) = (img(a), img(b));
                let (lo, hi) = if ia < ib { (ia, ib) } else { (ib, ia) };
                Self::arc(param, lo, hi)
            }
        }
    }

    /// Postcomposes the parameterization with `x -> A x + b` on the target.
    pub fn apply_affine_target(&self, a: &[Vec<Rat>], b: &[Rat]) -> Result<Self> {
        let param = self.param.apply_affine_target(a, b)?;
        Self::new(param, self.mode.clone())
    }
}

/// Arc bounds mapped into a witness of the form `[-1, 1]`; `(scale, shift)`
/// with `t = scale * u + shift`.
pub fn unit_interval_map(a: &Rat, b: &Rat) -> (Rat, Rat) {
    let two = Rat::one() + Rat::one();
    ((b - a) / &two, (a + b) / two)
}
