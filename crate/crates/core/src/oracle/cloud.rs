//! Curves evaluated in floating point and their sample clouds.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exact::rat_to_f64;
use crate::param::{Mode, ProjParam};

/// A parameterized curve in `R^m`, evaluated in floating point.
pub trait Curve: Sync {
    fn dim(&self) -> usize;
    /// Parameter range; for closed curves the left end is excluded.
    fn domain(&self) -> (f64, f64);
    fn closed(&self) -> bool;
    /// `None` at a pole.
    fn point(&self, s: f64) -> Option<Vec<f64>>;

    /// Writes the point at `s` into `out`; false at a pole.
    fn point_into(&self, s: f64, out: &mut Vec<f64>) -> bool {
        match self.point(s) {
            Some(p) => {
                *out = p;
                true
            }
            None => false,
        }
    }
}

/// Finite points of `R^m` with the parameter of each.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleCloud {
    dim: usize,
    coords: Vec<f64>,
    params: Vec<f64>,
    /// Position of each point in the full sample sequence.
    index: Vec<usize>,
    total: usize,
    closed: bool,
}

impl SampleCloud {
    /// Builds a cloud from explicit points; rejects NaN and infinities.
    pub fn from_points(points: &[Vec<f64>], params: &[f64], closed: bool) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyCloud);
        }
        let dim = points[0].len();
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in points {
            if p.len() != dim || p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinite);
            }
            coords.extend_from_slice(p);
        }
        Ok(SampleCloud {
            dim,
            coords,
            params: params.to_vec(),
            index: (0..points.len()).collect(),
            total: points.len(),
            closed,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn param(&self, i: usize) -> f64 {
        self.params[i]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks(self.dim)
    }

    /// Samples dropped at poles.
    pub fn skipped(&self) -> usize {
        self.total - self.len()
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    /// Whether points `i` and `i + 1` (cyclically for closed curves) were
    /// consecutive samples.
    pub fn joined(&self, i: usize) -> bool {
        let n = self.len();
        if i + 1 < n {
            self.index[i + 1] == self.index[i] + 1
        } else {
            self.closed && i + 1 == n && self.index[0] == 0 && self.index[n - 1] == self.total - 1
        }
    }

    /// Parameters of the neighbours of point `i`, clamped to `i` itself
    /// where the curve is cut.
    pub fn param_bracket(&self, i: usize) -> (f64, f64) {
        let n = self.len();
        let lo = if i > 0 && self.joined(i - 1) {
            self.params[i - 1]
        } else if i == 0 && self.joined(n - 1) {
            self.params[n - 1] - (self.closed_period())
        } else {
            self.params[i]
        };
        let hi = if self.joined(i) {
            let j = (i + 1) % n;
            if j == 0 {
                self.params[0] + self.closed_period()
            } else {
                self.params[j]
            }
        } else {
            self.params[i]
        };
        (lo, hi)
    }

    fn closed_period(&self) -> f64 {
        2.0 * PI
    }

    /// Axis-aligned bounds per coordinate.
    pub fn bounds(&self) -> Vec<(f64, f64)> {
        let mut b = vec![(f64::INFINITY, f64::NEG_INFINITY); self.dim];
        for p in self.points() {
            for (k, &x) in p.iter().enumerate() {
                b[k].0 = b[k].0.min(x);
                b[k].1 = b[k].1.max(x);
            }
        }
        b
    }
}

/// `n` samples: closed curves at `lo + (hi-lo)(j+1)/n`, open ones at
/// `lo + (hi-lo) j/(n-1)`. Poles are dropped and counted.
pub fn sample(curve: &dyn Curve, n: usize) -> Result<SampleCloud> {
    if n < 2 {
        return Err(Error::TooFewSamples);
    }
    let (lo, hi) = curve.domain();
    let dim = curve.dim();
    let mut coords = Vec::with_capacity(n * dim);
    let mut params = Vec::with_capacity(n);
    let mut index = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(dim);
    for j in 0..n {
        let s = if curve.closed() {
            lo + (hi - lo) * (j + 1) as f64 / n as f64
        } else {
            lo + (hi - lo) * j as f64 / (n - 1) as f64
        };
        if curve.point_into(s, &mut p) && p.iter().all(|x| x.is_finite()) {
            coords.extend_from_slice(&p);
            params.push(s);
            index.push(j);
        }
    }
    if params.is_empty() {
        return Err(Error::EmptyCloud);
    }
    Ok(SampleCloud { dim, coords, params, index, total: n, closed: curve.closed() })
}

/// `sum c_k t0^(d-k) t1^k`.
fn eval_form(c: &[f64], t0: f64, t1: f64) -> f64 {
    let mut acc = 0.0;
    let mut p1 = 1.0;
    for &a in c {
        acc = acc * t0 + a * p1;
        p1 *= t1;
    }
    acc
}

/// The real trace of a parameterization, or the image of an arc.
pub struct ParamCurve {
    forms: Vec<Vec<f64>>,
    arc: Option<(f64, f64)>,
}

impl ParamCurve {
    pub fn new(param: &ProjParam, mode: &Mode) -> Self {
        let forms = param.components().iter().map(|p| p.coeffs().iter().map(rat_to_f64).collect()).collect();
        let arc = match mode {
            Mode::FullTrace => None,
            Mode::Arc { a, b } => Some((rat_to_f64(a), rat_to_f64(b))),
        };
        ParamCurve { forms, arc }
    }

    /// Homogeneous value at `(t0, t1)`.
    pub fn homogeneous(&self, t0: f64, t1: f64) -> Vec<f64> {
        self.forms.iter().map(|c| eval_form(c, t0, t1)).collect()
    }

    fn affine_into(&self, t0: f64, t1: f64, out: &mut Vec<f64>) -> bool {
        let h0 = eval_form(&self.forms[0], t0, t1);
        out.clear();
        out.extend(self.forms[1..].iter().map(|c| eval_form(c, t0, t1)));
        let scale = out.iter().fold(h0.abs(), |m, x| m.max(x.abs()));
        if h0.abs() <= 1e-300_f64.max(scale * 1e-15) {
            return false;
        }
        out.iter_mut().for_each(|x| *x /= h0);
        true
    }

    fn affine(&self, t0: f64, t1: f64) -> Option<Vec<f64>> {
        let mut out = Vec::with_capacity(self.forms.len() - 1);
        self.affine_into(t0, t1, &mut out).then_some(out)
    }

    /// Parameter `theta` of the full trace mapped to `[cos(theta/2) : sin(theta/2)]`.
    pub fn at_angle(&self, theta: f64) -> Option<Vec<f64>> {
        self.affine((theta / 2.0).cos(), (theta / 2.0).sin())
    }
}

impl Curve for ParamCurve {
    fn dim(&self) -> usize {
        self.forms.len() - 1
    }

    fn domain(&self) -> (f64, f64) {
        self.arc.unwrap_or((-PI, PI))
    }

    fn closed(&self) -> bool {
        self.arc.is_none()
    }

    fn point(&self, s: f64) -> Option<Vec<f64>> {
        match self.arc {
            None => self.at_angle(s),
            Some(_) => self.affine(1.0, s),
        }
    }

    fn point_into(&self, s: f64, out: &mut Vec<f64>) -> bool {
        match self.arc {
            None => self.affine_into((s / 2.0).cos(), (s / 2.0).sin(), out),
            Some(_) => self.affine_into(1.0, s, out),
        }
    }
}

/// A curve given by a closure.
pub struct FnCurve<F> {
    pub f: F,
    pub dim: usize,
    pub domain: (f64, f64),
    pub closed: bool,
}

impl<F: Fn(f64) -> Option<Vec<f64>> + Sync> Curve for FnCurve<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn domain(&self) -> (f64, f64) {
        self.domain
    }
    fn closed(&self) -> bool {
        self.closed
    }
    fn point(&self, s: f64) -> Option<Vec<f64>> {
        (self.f)(s)
    }
}

/// A closed curve `theta -> f(cos theta, sin theta)` over `(-pi, pi]`.
pub fn circle_curve<F: Fn(f64, f64) -> Vec<f64> + Sync>(dim: usize, f: F) -> FnCurve<impl Fn(f64) -> Option<Vec<f64>> + Sync> {
    FnCurve { f: move |th: f64| Some(f(th.cos(), th.sin())), dim, domain: (-PI, PI), closed: true }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn circle_samples_lie_on_circle() {
        let p = ProjParam::from_strings(&["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]).unwrap();
        let c = sample(&ParamCurve::new(&p, &Mode::FullTrace), 4).unwrap();
        assert_eq!(c.len(), 4);
        for q in c.points() {
            assert!((q[0] * q[0] + q[1] * q[1] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn segment_samples() {
        let p = ProjParam::from_strings(&["t0", "t1", "0"]).unwrap();
        let mode = Mode::Arc { a: rat(-1, 1), b: rat(1, 1) };
        let c = sample(&ParamCurve::new(&p, &mode), 3).unwrap();
        let pts: Vec<Vec<f64>> = c.points().map(|q| q.to_vec()).collect();
        assert_eq!(pts, vec![vec![-1.0, 0.0], vec![0.0, 0.0], vec![1.0, 0.0]]);
    }

    #[test]
    fn poles_are_dropped() {
        let p = ProjParam::from_strings(&["t0", "t1", "0"]).unwrap();
        let c = sample(&ParamCurve::new(&p, &Mode::FullTrace), 8).unwrap();
        assert_eq!(c.skipped(), 1);
        assert!(!c.joined(c.len() - 1));
        assert!(SampleCloud::from_points(&[vec![f64::NAN]], &[0.0], false).is_err());
        assert_eq!(sample(&ParamCurve::new(&p, &Mode::FullTrace), 1), Err(Error::TooFewSamples));
    }
}
