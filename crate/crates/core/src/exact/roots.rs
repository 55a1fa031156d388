//! Certified isolation of all complex roots of a rational polynomial.
//!
//! Real roots are isolated with Sturm sequences. Non-real roots are counted
//! in rational rectangles by the argument principle: along each edge
//! `f(z0 + s*dz) = R(s) + i I(s)` and the winding number is half the sum of the
//! Cauchy indices of `R/I`. No floating point takes part in any decision.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::factor::factor_rational;
use super::field::{rat, rat_to_f64, Rat};
use super::interval::{CIv, RatIv};
use super::poly::UPoly;
use super::quad::{sqrt_rat, QuadExt};
use super::sturm::{cauchy_index, count_in, isolate_real_roots, refine_real, sturm_sequence, Ext};
use crate::error::{Error, Result};

/// Rational rectangle `[re_lo, re_hi] x [im_lo, im_hi]`.
///
/// A real root has `im_lo = im_hi = 0` and its real range is the half-open
/// `(re_lo, re_hi]` of Sturm counting (or the exact point `[r, r]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatBox {
    pub re_lo: Rat,
    pub re_hi: Rat,
    pub im_lo: Rat,
    pub im_hi: Rat,
}

impl RatBox {
    pub fn is_real(&self) -> bool {
        self.im_lo.is_zero() && self.im_hi.is_zero()
    }

    pub fn mirrored(&self) -> RatBox {
        RatBox {
            re_lo: self.re_lo.clone(),
            re_hi: self.re_hi.clone(),
            im_lo: -self.im_hi.clone(),
            im_hi: -self.im_lo.clone(),
        }
    }

    pub fn width(&self) -> Rat {
        let w = &self.re_hi - &self.re_lo;
        let h = &self.im_hi - &self.im_lo;
        if w > h {
            w
        } else {
            h
        }
    }

    pub fn civ(&self) -> CIv {
        CIv {
            re: RatIv::new(self.re_lo.clone(), self.re_hi.clone()),
            im: RatIv::new(self.im_lo.clone(), self.im_hi.clone()),
        }
    }

    pub fn center_f64(&self) -> (f64, f64) {
        (
            rat_to_f64(&((&self.re_lo + &self.re_hi) / rat(2, 1))),
            rat_to_f64(&((&self.im_lo + &self.im_hi) / rat(2, 1))),
        )
    }
}

/// Exactly represented point of the complex projective line: a root of an
/// irreducible rational polynomial in the affine chart `t = t1/t0`, or `[0:1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgPoint1 {
    Finite { minpoly: UPoly, bx: RatBox },
    Infinity,
}

impl AlgPoint1 {
    pub fn rational(r: Rat) -> Self {
        let minpoly = UPoly::new(vec![-r.clone(), Rat::one()]);
        AlgPoint1::Finite {
            minpoly,
            bx: RatBox { re_lo: r.clone(), re_hi: r, im_lo: Rat::zero(), im_hi: Rat::zero() },
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, AlgPoint1::Infinity)
    }

    pub fn minpoly(&self) -> Option<&UPoly> {
        match self {
            AlgPoint1::Finite { minpoly, .. } => Some(minpoly),
            AlgPoint1::Infinity => None,
        }
    }

    pub fn bx(&self) -> Option<&RatBox> {
        match self {
            AlgPoint1::Finite { bx, .. } => Some(bx),
            AlgPoint1::Infinity => None,
        }
    }

    /// Real points of the projective line, `[0:1]` included.
    pub fn is_real(&self) -> bool {
        match self {
            AlgPoint1::Finite { bx, .. } => bx.is_real(),
            AlgPoint1::Infinity => true,
        }
    }

    /// The rational value, when the minimal polynomial is linear.
    pub fn as_rational(&self) -> Option<Rat> {
        match self {
            AlgPoint1::Finite { minpoly, .. } if minpoly.deg() == 1 => Some(-minpoly.coeff(0) / minpoly.coeff(1)),
            _ => None,
        }
    }

    pub fn conj(&self) -> AlgPoint1 {
        match self {
            AlgPoint1::Finite { minpoly, bx } => AlgPoint1::Finite { minpoly: minpoly.clone(), bx: bx.mirrored() },
            AlgPoint1::Infinity => AlgPoint1::Infinity,
        }
    }

    /// Approximate value in the affine chart; `None` at infinity.
    pub fn to_complex_f64(&self) -> Option<(f64, f64)> {
        self.bx().map(|b| b.center_f64())
    }

    /// Same root with a box of width and height at most `width`.
    pub fn refine(&self, width: &Rat) -> AlgPoint1 {
        match self {
            AlgPoint1::Infinity => AlgPoint1::Infinity,
            AlgPoint1::Finite { minpoly, bx } => {
                if bx.width() <= *width {
                    return self.clone();
                }
                let bx = if bx.is_real() {
                    let seq = sturm_sequence(minpoly);
                    let (lo, hi) = refine_real(minpoly, &seq, &bx.re_lo, &bx.re_hi, width);
                    RatBox { re_lo: lo, re_hi: hi, im_lo: Rat::zero(), im_hi: Rat::zero() }
                } else {
                    refine_complex(minpoly, bx, width)
                };
                AlgPoint1::Finite { minpoly: minpoly.clone(), bx }
            }
        }
    }

    /// Exact value when the minimal polynomial has degree at most 2.
    pub fn to_quad(&self) -> Option<QuadExt> {
        let (minpoly, bx) = match self {
            AlgPoint1::Finite { minpoly, bx } => (minpoly, bx),
            AlgPoint1::Infinity => return None,
        };
        match minpoly.deg() {
            1 => Some(QuadExt::from(self.as_rational().unwrap())),
            2 => {
                let m = minpoly.monic();
                let (p, r) = (m.coeff(1), m.coeff(0));
                let half = -p.clone() / rat(2, 1);
                let disc = (&p * &p - r * rat(4, 1)) / rat(4, 1);
                let s = sqrt_rat(&disc);
                let positive = if disc.is_negative() {
                    bx.im_lo.is_positive()
                } else {
                    // Real: compare the root with the midpoint -p/2 of the pair.
                    let mut cur = self.clone();
                    loop {
                        let b = cur.bx().unwrap();
                        if b.re_lo >= half {
                            break true;
                        }
                        if b.re_hi <= half {
                            break false;
                        }
                        let w = b.width() / rat(2, 1);
                        cur = cur.refine(&w);
                    }
                };
                let hq = QuadExt::from(half);
                Some(if positive { hq + s } else { hq - s })
            }
            _ => None,
        }
    }

    /// Complex interval enclosing the point.
    pub fn civ(&self) -> Option<CIv> {
        self.bx().map(|b| b.civ())
    }
}

impl fmt::Display for AlgPoint1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgPoint1::Infinity => write!(f, "[0:1]"),
            AlgPoint1::Finite { minpoly, .. } => {
                if let Some(r) = self.as_rational() {
                    return write!(f, "{}", super::field::rat_to_string(&r));
                }
                if let Some(q) = self.to_quad() {
                    return write!(f, "{q}");
                }
                let (re, im) = self.refine(&super::field::rat(1, 1 << 30)).to_complex_f64().unwrap();
                write!(f, "root of {} near {:.6}{:+.6}i", minpoly, re, im)
            }
        }
    }
}

/// Isolates every complex root of a squarefree `f`. Real roots come first in
/// increasing order, then non-real roots as (upper, lower) conjugate pairs.
pub fn isolate_complex_roots(f: &UPoly) -> Result<Vec<AlgPoint1>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    if !f.gcd(&f.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    let factors: Vec<UPoly> = factor_rational(f)?.into_iter().map(|(g, _)| g).collect();
    let mut out = Vec::new();

    for (lo, hi) in isolate_real_roots(f) {
        let minpoly = if lo == hi {
            UPoly::new(vec![-lo.clone(), Rat::one()])
        } else {
            factors
                .iter()
                .find(|g| count_in(&sturm_sequence(g), &Ext::Fin(lo.clone()), &Ext::Fin(hi.clone())) == 1)
                .expect("real root belongs to a factor")
                .clone()
        };
        out.push(AlgPoint1::Finite {
            minpoly,
            bx: RatBox { re_lo: lo, re_hi: hi, im_lo: Rat::zero(), im_hi: Rat::zero() },
        });
    }

    for bx in isolate_upper(f, out.len()) {
        let minpoly = factors
            .iter()
            .find(|g| g.deg() >= 2 && count_in_box(g, &bx) == Some(1))
            .expect("non-real root belongs to a factor")
            .clone();
        let mirrored = bx.mirrored();
        out.push(AlgPoint1::Finite { minpoly: minpoly.clone(), bx });
        out.push(AlgPoint1::Finite { minpoly, bx: mirrored });
    }
    Ok(out)
}

/// Index of the complex conjugate of each point within `pts`.
pub fn conjugation_pairing(pts: &[AlgPoint1]) -> Vec<usize> {
    pts.iter()
        .map(|p| {
            let c = p.conj();
            pts.iter().position(|q| *q == c).expect("list closed under conjugation")
        })
        .collect()
}

/// Isolating boxes in the open upper half plane for the non-real roots of the
/// squarefree `f`, given its number of real roots.
fn isolate_upper(f: &UPoly, real: usize) -> Vec<RatBox> {
    let target = (f.deg() - real) / 2;
    if target == 0 {
        return Vec::new();
    }
    let b = pow2_at_least(&f.root_bound());
    let mut delta = Rat::one();
    let root = loop {
        let bx = RatBox { re_lo: -b.clone(), re_hi: b.clone(), im_lo: delta.clone(), im_hi: b.clone() };
        match count_in_box(f, &bx) {
            Some(n) if n == target => break bx,
            Some(_) => delta = delta / rat(2, 1),
            None => delta = delta * rat(3, 4),
        }
    };
    let mut done = Vec::new();
    let mut queue = vec![(root, target)];
    while let Some((bx, n)) = queue.pop() {
        if n == 1 {
            done.push(bx);
            continue;
        }
        for (child, c) in split_box(f, &bx, n) {
            if c > 0 {
                queue.push((child, c));
            }
        }
    }
    done.sort_by(|a, b| cmp_box(a, b));
    done
}

fn cmp_box(a: &RatBox, b: &RatBox) -> Ordering {
    a.re_lo.cmp(&b.re_lo).then_with(|| a.im_lo.cmp(&b.im_lo))
}

fn pow2_at_least(x: &Rat) -> Rat {
    let mut b = Rat::one();
    while b < *x {
        b = b * rat(2, 1);
    }
    b
}

/// Splits a box into four whose boundaries avoid the roots; returns children
/// with their root counts.
fn split_box(f: &UPoly, bx: &RatBox, total: usize) -> Vec<(RatBox, usize)> {
    let w = &bx.re_hi - &bx.re_lo;
    let h = &bx.im_hi - &bx.im_lo;
    for k in 0..64i64 {
        // 1/2, then 1/2 +- small offsets.
        let off = if k == 0 { Rat::zero() } else { rat(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }, 67) };
        let fx = rat(1, 2) + off.clone();
        let fy = rat(1, 2) - off;
        let xm = &bx.re_lo + &w * &fx;
        let ym = &bx.im_lo + &h * &fy;
        let kids = [
            RatBox { re_lo: bx.re_lo.clone(), re_hi: xm.clone(), im_lo: bx.im_lo.clone(), im_hi: ym.clone() },
            RatBox { re_lo: xm.clone(), re_hi: bx.re_hi.clone(), im_lo: bx.im_lo.clone(), im_hi: ym.clone() },
            RatBox { re_lo: bx.re_lo.clone(), re_hi: xm.clone(), im_lo: ym.clone(), im_hi: bx.im_hi.clone() },
            RatBox { re_lo: xm, re_hi: bx.re_hi.clone(), im_lo: ym, im_hi: bx.im_hi.clone() },
        ];
        let counts: Option<Vec<usize>> = kids.iter().map(|c| count_in_box(f, c)).collect();
        if let Some(counts) = counts {
            debug_assert_eq!(counts.iter().sum::<usize>(), total);
            return kids.into_iter().zip(counts).collect();
        }
    }
    panic!("no root-free split line found");
}

fn refine_complex(f: &UPoly, bx: &RatBox, width: &Rat) -> RatBox {
    let mut bx = bx.clone();
    while bx.width() > *width {
        bx = split_box(f, &bx, 1).into_iter().find(|(_, c)| *c == 1).expect("root stays in a child").0;
    }
    bx
}

/// Gaussian-rational polynomial in one real variable `s`.
struct CPoly {
    re: UPoly,
    im: UPoly,
}

/// `f(z0 + s*dz)` split into real and imaginary parts.
fn restrict_to_edge(f: &UPoly, z0: (&Rat, &Rat), dz: (&Rat, &Rat)) -> CPoly {
    // z(s) = (x0 + s dx) + i (y0 + s dy)
    let zr = UPoly::new(vec![z0.0.clone(), dz.0.clone()]);
    let zi = UPoly::new(vec![z0.1.clone(), dz.1.clone()]);
    let mut acc = CPoly { re: UPoly::zero(), im: UPoly::zero() };
    for a in f.coeffs().iter().rev() {
        let re = &(&acc.re * &zr) - &(&acc.im * &zi);
        let im = &(&acc.re * &zi) + &(&acc.im * &zr);
        acc = CPoly { re: &re + &UPoly::constant(a.clone()), im };
    }
    acc
}

/// Number of roots of `f` inside the closed box, or `None` when a root lies
/// on its boundary.
pub fn count_in_box(f: &UPoly, bx: &RatBox) -> Option<usize> {
    let v = [
        (bx.re_lo.clone(), bx.im_lo.clone()),
        (bx.re_hi.clone(), bx.im_lo.clone()),
        (bx.re_hi.clone(), bx.im_hi.clone()),
        (bx.re_lo.clone(), bx.im_hi.clone()),
    ];
    let mut edges = Vec::with_capacity(4);
    let zero = Rat::zero();
    let one = Rat::one();
    for k in 0..4 {
        let (a, b) = (&v[k], &v[(k + 1) % 4]);
        let d = (&b.0 - &a.0, &b.1 - &a.1);
        let e = restrict_to_edge(f, (&a.0, &a.1), (&d.0, &d.1));
        let g = e.re.gcd(&e.im);
        if g.is_zero() {
            return None;
        }
        if !g.is_constant() {
            let g = g.squarefree_part();
            if g.sign_at(&zero) == 0 || count_in(&sturm_sequence(&g), &Ext::Fin(zero.clone()), &Ext::Fin(one.clone())) > 0 {
                return None;
            }
        }
        edges.push(e);
    }
    // Rotate f by a constant so that Im f is nonzero at every vertex.
    let rotations = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1), (1, 3)];
    for (cr, ci) in rotations {
        let (cr, ci) = (rat(cr, 1), rat(ci, 1));
        let rot: Vec<(UPoly, UPoly)> = edges
            .iter()
            .map(|e| (&e.re.scale(&cr) - &e.im.scale(&ci), &e.im.scale(&cr) + &e.re.scale(&ci)))
            .collect();
        if rot.iter().any(|(_, im)| im.sign_at(&zero) == 0 || im.sign_at(&one) == 0) {
            continue;
        }
        let total: i64 = rot.iter().map(|(re, im)| cauchy_index(im, re, &zero, &one)).sum();
        debug_assert!(total % 2 == 0 && total >= 0);
        return Some((total / 2) as usize);
    }
    unreachable!("nine pairwise independent rotations cannot all vanish at four vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn imaginary_unit() {
        let r = isolate_complex_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let b0 = r[0].bx().unwrap();
        assert!(b0.im_lo.is_positive());
        assert_eq!(r[1], r[0].conj());
        let fine = r[0].refine(&rat(1, 8));
        let (re, im) = fine.to_complex_f64().unwrap();
        assert!(re.abs() < 0.2 && (im - 1.0).abs() < 0.2);
        assert!(fine.bx().unwrap().width() <= rat(1, 8));
    }

    #[test]
    fn rational_real_root() {
        let r = isolate_complex_roots(&p(&[-3, 2])).unwrap();
        assert_eq!(r.len(), 1);
        let b = r[0].bx().unwrap();
        assert!(b.is_real());
        assert_eq!(r[0].refine(&rat(1, 1000)).as_rational(), Some(rat(3, 2)));
    }

    #[test]
    fn fourth_roots_of_unity() {
        let r = isolate_complex_roots(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r.iter().filter(|a| a.is_real()).count(), 2);
        let pairing = conjugation_pairing(&r);
        for (i, &j) in pairing.iter().enumerate() {
            assert_eq!(pairing[j], i);
        }
    }

    #[test]
    fn quadratic_values() {
        let r = isolate_complex_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(r[0].to_quad(), Some(QuadExt::sqrt(-1)));
        assert_eq!(r[1].to_quad(), Some(-QuadExt::sqrt(-1)));
        let r = isolate_complex_roots(&p(&[-1, -2, 1])).unwrap(); // 1 +- sqrt(2)
        assert_eq!(r[0].to_quad(), Some(QuadExt::new(rat(1, 1), rat(-1, 1), 2)));
        assert_eq!(r[1].to_quad(), Some(QuadExt::new(rat(1, 1), rat(1, 1), 2)));
    }

    #[test]
    fn box_counts() {
        let f = p(&[1, 0, 1]);
        let bx = |a, b, c, d| RatBox { re_lo: rat(a, 1), re_hi: rat(b, 1), im_lo: rat(c, 1), im_hi: rat(d, 1) };
        assert_eq!(count_in_box(&f, &bx(-2, 2, -2, 2)), Some(2));
        assert_eq!(count_in_box(&f, &bx(-2, 2, 1, 2)), None);
        assert_eq!(count_in_box(&f, &bx(-2, 2, -2, 0)), Some(1));
        assert_eq!(count_in_box(&f, &bx(1, 3, 1, 3)), Some(0));
    }
}
