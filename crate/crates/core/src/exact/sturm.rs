//! Sturm sequences and real root counting.

use num_traits::{One, Signed, Zero};

use super::field::Rat;
use super::poly::UPoly;
use crate::error::{Error, Result};

/// `f, f', -rem(f, f'), ...` down to a nonzero constant or the gcd.
pub fn sturm_sequence(f: &UPoly) -> Vec<UPoly> {
    signed_remainder_sequence(f, &f.derivative())
}

/// `p, q, -rem(p, q), ...`; the Cauchy index of `q/p` is read off its sign
/// variations.
pub fn signed_remainder_sequence(p: &UPoly, q: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![p.clone()];
    if q.is_zero() {
        return seq;
    }
    seq.push(q.clone());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// A point of the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ext {
    NegInf,
    Fin(Rat),
    PosInf,
}

fn sign_at_ext(p: &UPoly, x: &Ext) -> i32 {
    match x {
        Ext::Fin(r) => p.sign_at(r),
        Ext::PosInf => sign_of(&p.lc()),
        Ext::NegInf => {
            let s = sign_of(&p.lc());
            if p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn variations_at(seq: &[UPoly], x: &Ext) -> usize {
    count_variations(seq.iter().map(|p| sign_at_ext(p, x)))
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn sturm_real_root_count(f: &UPoly, lo: &Ext, hi: &Ext) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.gcd(&f.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    Ok(count_in(&sturm_sequence(f), lo, hi))
}

/// Count in `(lo, hi]` from a precomputed Sturm sequence of a squarefree
/// polynomial.
pub fn count_in(seq: &[UPoly], lo: &Ext, hi: &Ext) -> usize {
    let a = variations_at(seq, lo);
    let b = variations_at(seq, hi);
    a.saturating_sub(b)
}

/// Cauchy index of `q/p` over `(a, b)`, jumps from -inf to +inf counting +1.
/// Requires `p(a) != 0` and `p(b) != 0`.
pub fn cauchy_index(p: &UPoly, q: &UPoly, a: &Rat, b: &Rat) -> i64 {
    let seq = signed_remainder_sequence(p, q);
    let va = variations_at(&seq, &Ext::Fin(a.clone())) as i64;
    let vb = variations_at(&seq, &Ext::Fin(b.clone())) as i64;
    va - vb
}

/// Isolating intervals `(lo, hi]` of the real roots of a squarefree `f`,
/// increasing; degenerate `[r, r]` when a rational root is hit exactly.
pub fn isolate_real_roots(f: &UPoly) -> Vec<(Rat, Rat)> {
    if f.is_constant() {
        return Vec::new();
    }
    let seq = sturm_sequence(f);
    let b = f.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_in(&seq, &Ext::Fin(lo.clone()), &Ext::Fin(hi.clone()));
        if n == 0 {
            continue;
        }
        if n == 1 {
            if f.sign_at(&hi) == 0 {
                out.push((hi.clone(), hi));
            } else {
                out.push((lo, hi));
            }
            continue;
        }
        let mid = (&lo + &hi) / Rat::from_integer(2.into());
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Shrinks an isolating interval `(lo, hi]` of the simple root of `f` until
/// `hi - lo <= width`.
pub fn refine_real(f: &UPoly, seq: &[UPoly], lo: &Rat, hi: &Rat, width: &Rat) -> (Rat, Rat) {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let two = Rat::one() + Rat::one();
    while &hi - &lo > *width {
        if f.sign_at(&hi) == 0 {
            return (hi.clone(), hi);
        }
        let mid = (&lo + &hi) / &two;
        if count_in(seq, &Ext::Fin(lo.clone()), &Ext::Fin(mid.clone())) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if f.sign_at(&hi) == 0 {
        return (hi.clone(), hi);
    }
    (lo, hi)
}
