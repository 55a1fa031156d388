//! Winding numbers of closed plane curves and a float probe for boundedness.

use std::f64::consts::PI;

use super::cloud::ParamCurve;
use crate::error::{Error, Result};
use crate::param::ProjParam;

const MIN_MODULUS: f64 = 1e-8;
const MAX_STEP: f64 = PI / 4.0;

/// Winding number around the origin of `theta -> f(theta)` over one period.
/// The sampling doubles from `n` until every argument step is below `pi/4`.
pub fn winding_number(f: impl Fn(f64) -> (f64, f64), n: usize) -> Result<i64> {
    let mut n = n.max(8);
    'outer: for _ in 0..12 {
        let mut total = 0.0;
        let start = f(0.0);
        let mut prev = start.1.atan2(start.0);
        for j in 0..=n {
            let th = 2.0 * PI * j as f64 / n as f64;
            let (x, y) = f(th);
            let r = x.hypot(y);
            if !r.is_finite() {
                return Err(Error::NonFinite);
            }
            if r < MIN_MODULUS {
                return Err(Error::WindingInconclusive(r));
            }
            let a = y.atan2(x);
            let mut step = a - prev;
            while step > PI {
                step -= 2.0 * PI;
            }
            while step <= -PI {
                step += 2.0 * PI;
            }
            if step.abs() >= MAX_STEP {
                n *= 2;
                continue 'outer;
            }
            total += step;
            prev = a;
        }
        return Ok((total / (2.0 * PI)).round() as i64);
    }
    Err(Error::WindingInconclusive(f64::NAN))
}

/// Degree of a self-map of the real projective line given on homogeneous
/// coordinates, read on the circle through `theta -> [cos(theta/2) : sin(theta/2)]`
/// and `[x0 : x1] -> (x0^2 - x1^2, 2 x0 x1) / (x0^2 + x1^2)`.
pub fn projective_line_degree(f: impl Fn(f64, f64) -> (f64, f64), n: usize) -> Result<i64> {
    winding_number(
        |th| {
            let (a, b) = f((th / 2.0).cos(), (th / 2.0).sin());
            let r = a * a + b * b;
            ((a * a - b * b) / r, 2.0 * a * b / r)
        },
        n,
    )
}

/// Float-only boundedness test for the real trace: unbounded when the affine
/// norm exceeds `threshold` at a sample or at a refined local minimum of the
/// normalized first component.
pub fn probe_bounded(param: &ProjParam, n: usize, threshold: f64) -> bool {
    let curve = ParamCurve::new(param, &crate::param::Mode::FullTrace);
    let ratio = |th: f64| {
        let h = curve.homogeneous((th / 2.0).cos(), (th / 2.0).sin());
        let norm = h.iter().map(|x| x * x).sum::<f64>().sqrt();
        h[0].abs() / norm
    };
    let affine_norm = |th: f64| {
        let h = curve.homogeneous((th / 2.0).cos(), (th / 2.0).sin());
        let tail = h[1..].iter().map(|x| x * x).sum::<f64>().sqrt();
        if h[0] == 0.0 {
            f64::INFINITY
        } else {
            tail / h[0].abs()
        }
    };
    let step = 2.0 * PI / n as f64;
    let th = |j: usize| -PI + step * (j + 1) as f64;
    let vals: Vec<f64> = (0..n).map(|j| ratio(th(j))).collect();
    for j in 0..n {
        if affine_norm(th(j)) > threshold {
            return false;
        }
        let (l, r) = (vals[(j + n - 1) % n], vals[(j + 1) % n]);
        if vals[j] <= l && vals[j] <= r {
            let t = golden_min(&ratio, th(j) - step, th(j) + step);
            if affine_norm(t) > threshold {
                return false;
            }
        }
    }
    true
}

fn golden_min(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..100 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        c
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_z() {
        for k in -3i32..=5 {
            let w = winding_number(|t| ((k as f64 * t).cos(), (k as f64 * t).sin()), 16).unwrap();
            assert_eq!(w, k as i64);
        }
        assert!(matches!(winding_number(|t| (t.cos(), 0.0), 64), Err(Error::WindingInconclusive(_))));
    }

    #[test]
    fn projective_squaring() {
        assert_eq!(projective_line_degree(|a, b| (a * a - b * b, 2.0 * a * b), 64).unwrap(), 2);
        assert_eq!(projective_line_degree(|a, b| (a, b), 64).unwrap(), 1);
    }

    #[test]
    fn probe() {
        let p = |s: [&str; 3]| ProjParam::from_strings(&s).unwrap();
        assert!(probe_bounded(&p(["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]), 10_000, 1e6));
        assert!(!probe_bounded(&p(["t0^2", "t0*t1", "t1^2"]), 10_000, 1e6));
        assert!(!probe_bounded(&p(["t0^2-2*t1^2", "t0*t1", "t1^2"]), 10_000, 1e6));
    }
}
