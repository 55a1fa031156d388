//! Implicit equation of a plane parameterized curve by resultant elimination.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coincidence::generic_fiber_degree;
use crate::error::{Error, Result};
use crate::exact::mpoly::Fixed;
use crate::exact::poly::sylvester_resultant;
use crate::exact::{MPoly, Rat};
use crate::param::{HPoly2, ProjParam};

pub const PLANE_VARS: [&str; 3] = ["x0", "x1", "x2"];

/// Irreducible form `F(x0, x1, x2)` with `F(P0, P1, P2) = 0`, with integer
/// coprime coefficients and positive leading term in the order `x1 > x2 > x0`.
pub fn implicitize_plane(param: &ProjParam) -> Result<MPoly<Rat>> {
    if param.m() != 2 {
        return Err(Error::NotPlane { m: param.m() });
    }
    let g = generic_fiber_degree(param);
    if g != 1 {
        return Err(Error::Improper { generic_fiber_degree: g });
    }
    let p = shifted_chart(param);
    let d = p.degree();
    let a: Vec<Rat> = p.components()[0].coeffs().to_vec();
    let b: Vec<Rat> = p.components()[1].coeffs().to_vec();
    let c: Vec<Rat> = p.components()[2].coeffs().to_vec();
    // In x0 = 1: x1 P0(1,t) - P1(1,t) and x2 P0(1,t) - P2(1,t), coefficients in (x1, x2).
    let lin = |k: usize, other: &[Rat], var: usize| {
        let mut m = MPoly::zero(2);
        let mut e = vec![0, 0];
        e[var] = 1;
        m.add_term(e, a[k].clone());
        m.add_term(vec![0, 0], -other[k].clone());
        Fixed::<2>(m)
    };
    let f1: Vec<Fixed<2>> = (0..=d).map(|k| lin(k, &b, 0)).collect();
    let f2: Vec<Fixed<2>> = (0..=d).map(|k| lin(k, &c, 1)).collect();
    let r = sylvester_resultant(&f1, &f2).0;
    debug_assert!(!r.is_zero());

    let deg = r.total_degree();
    let mut f = MPoly::zero(3);
    for (e, v) in r.terms() {
        f.add_term(vec![0, e[0], e[1]], v.clone());
    }
    let f = normalize_form(&f.homogenize(0, deg));
    debug_assert!(vanishes_on(&f, param));
    Ok(f)
}

/// A reparameterization `P(t0 + c t1, t1)` with `P0(c, 1) != 0`, so that the
/// parameter `[0:1]` is not a root of the first component.
fn shifted_chart(param: &ProjParam) -> ProjParam {
    let p0 = &param.components()[0];
    let (one, zero) = (Rat::one(), Rat::zero());
    let c = (0i64..)
        .map(|k| Rat::from_integer(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }.into()))
        .find(|c| !p0.eval(c, &one).is_zero())
        .unwrap();
    let comps: Vec<HPoly2<Rat>> =
        param.components().iter().map(|p| p.substitute_linear(&one, &c, &zero, &one)).collect();
    ProjParam::reduce(comps).expect("invertible substitution")
}

fn lex_key(e: &[u32]) -> (u32, u32, u32) {
    (e[1], e[2], e[0])
}

/// Scales to coprime integer coefficients with a positive leading term in the
/// variable order `x1 > x2 > x0`.
pub fn normalize_form(f: &MPoly<Rat>) -> MPoly<Rat> {
    if f.is_zero() {
        return f.clone();
    }
    let mut den = BigInt::one();
    for (_, c) in f.terms() {
        den = den.lcm(c.denom());
    }
    let mut num = BigInt::zero();
    for (_, c) in f.terms() {
        num = num.gcd(&(c.numer() * (&den / c.denom())));
    }
    let lead = f
        .terms()
        .max_by(|x, y| lex_key(x.0).cmp(&lex_key(y.0)).then(Ordering::Equal))
        .map(|(_, c)| c.clone())
        .unwrap();
    let mut s = Rat::new(den, num);
    if lead.is_negative() {
        s = -s;
    }
    f.scale(&s)
}

/// Exact check that `F(P0, P1, P2)` is the zero form.
pub fn vanishes_on(f: &MPoly<Rat>, param: &ProjParam) -> bool {
    let subs: Vec<MPoly<Rat>> = param.components().iter().map(|p| p.to_mpoly()).collect();
    f.compose(&subs).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{parse_poly, print_poly};

    fn implicit(comps: [&str; 3]) -> String {
        let p = ProjParam::from_strings(&comps).unwrap();
        print_poly(&implicitize_plane(&p).unwrap(), &PLANE_VARS)
    }

    fn same(a: &str, b: &str) {
        assert_eq!(parse_poly(a, &PLANE_VARS).unwrap(), parse_poly(b, &PLANE_VARS).unwrap(), "{a} vs {b}");
    }

    #[test]
    fn circle() {
        same(&implicit(["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]), "x1^2+x2^2-x0^2");
    }

    #[test]
    fn gerono() {
        same(
            &implicit(["(t0^2+t1^2)^2", "t1^4-t0^4", "2*t0*t1*(t1^2-t0^2)"]),
            "x0^2*(x2^2-x1^2)+x1^4",
        );
    }

    #[test]
    fn line_and_parabola() {
        same(&implicit(["t0", "t1", "0"]), "x2");
        same(&implicit(["t0^2", "t0*t1", "t1^2"]), "x1^2-x0*x2");
    }

    #[test]
    fn rejects() {
        let p = ProjParam::from_strings(&["t0", "t1"]).unwrap();
        assert_eq!(implicitize_plane(&p), Err(Error::NotPlane { m: 1 }));
        let p = ProjParam::from_strings(&["t0^2", "t1^2", "t0*t1"]).unwrap();
        assert!(implicitize_plane(&p).is_ok());
        let p = ProjParam::from_strings(&["t0^2", "t1^2", "t0^2+t1^2"]).unwrap();
        assert_eq!(implicitize_plane(&p), Err(Error::Improper { generic_fiber_degree: 2 }));
    }
}
