//! Laurent polynomials in `z` with coefficients `re + i im`, and their
//! exchange with real polynomial maps of the circle.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::realmap::{check_schema, RealPolyMap, Source};
use crate::error::{Error, Result};
use crate::exact::{MPoly, QuadExt, Rat};

/// `re + i * im` with real parts in `Q` or a real quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct Gauss {
    pub re: QuadExt,
    pub im: QuadExt,
}

impl Gauss {
    pub fn new(re: QuadExt, im: QuadExt) -> Self {
        Gauss { re, im }
    }

    pub fn real(re: QuadExt) -> Self {
        Gauss { re, im: QuadExt::zero() }
    }

    pub fn i() -> Self {
        Gauss { re: QuadExt::zero(), im: QuadExt::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Gauss {
            re: self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            im: self.re * o.im + self.im * o.re,
        }
    }
}

/// `sum_k c_k z^k` over finitely many integer `k`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, Gauss>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(k: i32, c: Gauss) -> Self {
        let mut l = LaurentPoly::zero();
        l.add_term(k, c);
        l
    }

    pub fn add_term(&mut self, k: i32, c: Gauss) {
        let v = match self.coeffs.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.coeffs.insert(k, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> Gauss {
        self.coeffs.get(&k).cloned().unwrap_or_else(|| Gauss::real(QuadExt::zero()))
    }

    /// Nonzero terms by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Gauss)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        let mut out = LaurentPoly::zero();
        for (k, a) in self.terms() {
            out.add_term(k, a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = LaurentPoly::monomial(0, Gauss::real(QuadExt::one()));
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Value at `z = e^(i theta)`.
    pub fn eval_angle(&self, theta: f64) -> (f64, f64) {
        let (mut x, mut y) = (0.0, 0.0);
        for (k, c) in self.terms() {
            let (a, b) = c.to_f64();
            let (s, co) = (k as f64 * theta).sin_cos();
            x += a * co - b * s;
            y += a * s + b * co;
        }
        (x, y)
    }

    pub fn surd(&self) -> Option<i64> {
        self.coeffs
            .values()
            .flat_map(|c| [&c.re, &c.im])
            .filter(|x| !x.is_rational())
            .find_map(|x| x.field())
    }

    pub fn to_json(&self) -> Value {
        let surd = self.surd();
        let terms: Vec<Value> = self
            .terms()
            .map(|(k, c)| {
                let mut parts = vec![];
                for x in [&c.re, &c.im] {
                    parts.extend(rat_pair(x.rational_part()));
                    if surd.is_some() {
                        parts.extend(rat_pair(x.surd_part()));
                    }
                }
                json!({ "k": k, "c": parts })
            })
            .collect();
        let mut v = json!({ "schema": 1, "kind": "laurent", "terms": terms });
        if let Some(d) = surd {
            v["surd"] = json!(d);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        check_schema(v)?;
        if v.get("kind").and_then(Value::as_str) != Some("laurent") {
            return Err(Error::Document("expected \"kind\": \"laurent\"".into()));
        }
        let surd = match v.get("surd") {
            None => None,
            Some(d) => {
                let d = d.as_i64().ok_or_else(|| Error::Document("\"surd\" must be an integer".into()))?;
                if d <= 1 || !crate::exact::quad::is_squarefree_field_param(d) {
                    return Err(Error::Document(format!("\"surd\" must be a square-free integer above 1, got {d}")));
                }
                Some(d)
            }
        };
        let width = if surd.is_some() { 8 } else { 4 };
        let mut out = LaurentPoly::zero();
        let terms = v["terms"].as_array().ok_or_else(|| Error::Document("\"terms\" must be an array".into()))?;
        for t in terms {
            let k = t["k"]
                .as_i64()
                .and_then(|k| i32::try_from(k).ok())
                .ok_or_else(|| Error::Document("term exponent \"k\" must be an integer".into()))?;
            let c = t["c"].as_array().filter(|c| c.len() == width).ok_or_else(|| {
                Error::Document(format!("term coefficient \"c\" must hold {width} integers"))
            })?;
            let ints = c.iter().map(json_int).collect::<Result<Vec<BigInt>>>()?;
            let r = |i: usize| -> Result<Rat> {
                if ints[i + 1].is_zero() {
                    return Err(Error::Document("zero denominator in coefficient".into()));
                }
                Ok(Rat::new(ints[i].clone(), ints[i + 1].clone()))
            };
            let part = |i: usize| -> Result<QuadExt> {
                Ok(match surd {
                    None => QuadExt::from(r(i)?),
                    Some(d) => QuadExt::new(r(i)?, r(i + 2)?, d),
                })
            };
            let half = width / 2;
            out.add_term(k, Gauss::new(part(0)?, part(half)?));
        }
        Ok(out)
    }
}

fn rat_pair(r: &Rat) -> [Value; 2] {
    [big_json(r.numer()), big_json(r.denom())]
}

fn big_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn json_int(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    v.as_str()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Document(format!("expected an integer, found {v}")))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in o.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (j, a) in self.terms() {
            for (k, b) in o.terms() {
                out.add_term(j + k, a.clone() * b.clone());
            }
        }
        out
    }
}

fn half() -> QuadExt {
    QuadExt::from(Rat::new(1.into(), 2.into()))
}

/// The Laurent polynomial `Gamma` with `Gamma(e^(i theta)) = g1 + i g2` at
/// `(cos theta, sin theta)`.
pub fn laurent_from_real(g: &RealPolyMap) -> Result<LaurentPoly> {
    if g.source() != Source::Sphere(1) || g.target_dim() != 2 {
        return Err(Error::Document("a Laurent polynomial corresponds to a map from the circle to the plane".into()));
    }
    // x = (z + 1/z)/2, y = (z - 1/z)/(2i)
    let h = half();
    let x = &LaurentPoly::monomial(1, Gauss::real(h.clone())) + &LaurentPoly::monomial(-1, Gauss::real(h.clone()));
    let y = &LaurentPoly::monomial(1, Gauss::new(QuadExt::zero(), -h.clone()))
        + &LaurentPoly::monomial(-1, Gauss::new(QuadExt::zero(), h));
    let mut xp = vec![LaurentPoly::monomial(0, Gauss::real(QuadExt::one()))];
    let mut yp = xp.clone();
    let mut out = LaurentPoly::zero();
    for (idx, comp) in g.components().iter().enumerate() {
        for (e, c) in comp.terms() {
            let (a, b) = (e[0] as usize, e[1] as usize);
            while xp.len() <= a {
                let n = &xp[xp.len() - 1] * &x;
                xp.push(n);
            }
            while yp.len() <= b {
                let n = &yp[yp.len() - 1] * &y;
                yp.push(n);
            }
            let coef = if idx == 0 { Gauss::real(c.clone()) } else { Gauss::new(QuadExt::zero(), c.clone()) };
            out = &out + &(&xp[a] * &yp[b]).scale(&coef);
        }
    }
    Ok(out)
}

/// Real and imaginary parts of a polynomial in `x, y` with Gaussian values.
#[derive(Clone)]
struct GaussPoly {
    re: MPoly<QuadExt>,
    im: MPoly<QuadExt>,
}

impl GaussPoly {
    fn one() -> Self {
        GaussPoly { re: MPoly::constant(2, QuadExt::one()), im: MPoly::zero(2) }
    }

    /// Multiplies by `x + s i y` with `s = +-1`.
    fn times_linear(&self, sign: i64) -> Self {
        let x = MPoly::var(2, 0);
        let sy = MPoly::var(2, 1).scale(&QuadExt::from(Rat::from_integer(sign.into())));
        GaussPoly { re: &(&self.re * &x) - &(&self.im * &sy), im: &(&self.im * &x) + &(&self.re * &sy) }
    }

    fn scaled(&self, c: &Gauss) -> Self {
        GaussPoly {
            re: &self.re.scale(&c.re) - &self.im.scale(&c.im),
            im: &self.im.scale(&c.re) + &self.re.scale(&c.im),
        }
    }
}

/// The circle map `(Re, Im)` of `Gamma` on `z = x + i y`, using
/// `z^-1 = x - i y` on the circle.
pub fn real_from_laurent(l: &LaurentPoly) -> Result<RealPolyMap> {
    let mut pos = vec![GaussPoly::one()];
    let mut neg = vec![GaussPoly::one()];
    let mut re = MPoly::zero(2);
    let mut im = MPoly::zero(2);
    for (k, c) in l.terms() {
        let (table, sign) = if k >= 0 { (&mut pos, 1) } else { (&mut neg, -1) };
        let n = k.unsigned_abs() as usize;
        while table.len() <= n {
            let next = table[table.len() - 1].times_linear(sign);
            table.push(next);
        }
        let t = table[n].scaled(c);
        re = &re + &t.re;
        im = &im + &t.im;
    }
    RealPolyMap::new(Source::Sphere(1), vec![re, im])
}
