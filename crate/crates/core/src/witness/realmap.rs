//! Real polynomial maps from the interval, the circle or a sphere.

use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{MPoly, QuadExt};
use crate::param::{parse_poly_surd, print_poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// `[-1, 1]`.
    Interval,
    /// The unit sphere `S^k` in `R^(k+1)`; `k = 1` is the circle.
    Sphere(usize),
}

impl Source {
    pub fn nvars(&self) -> usize {
        match self {
            Source::Interval => 1,
            Source::Sphere(k) => k + 1,
        }
    }

    pub fn vars(&self) -> Vec<String> {
        match self {
            Source::Interval => vec!["t".into()],
            Source::Sphere(1) => vec!["x".into(), "y".into()],
            Source::Sphere(2) => vec!["x".into(), "y".into(), "z".into()],
            Source::Sphere(k) => (1..=k + 1).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Source::Interval => "interval",
            Source::Sphere(1) => "circle",
            Source::Sphere(_) => "sphere",
        }
    }
}

/// Reduces modulo `x_1^2 + ... + x_n^2 - 1` by rewriting the square of the
/// last variable; the result has degree at most one in it.
pub fn sphere_normal_form(p: &MPoly<QuadExt>) -> MPoly<QuadExt> {
    let n = p.nvars();
    let last = n - 1;
    let mut rest = MPoly::constant(n, QuadExt::one());
    for i in 0..last {
        rest = &rest - &MPoly::var(n, i).pow(2);
    }
    let mut out = MPoly::zero(n);
    let mut cache: Vec<MPoly<QuadExt>> = vec![MPoly::constant(n, QuadExt::one())];
    for (e, c) in p.terms() {
        let k = (e[last] / 2) as usize;
        while cache.len() <= k {
            let next = &cache[cache.len() - 1] * &rest;
            cache.push(next);
        }
        let mut e2 = e.clone();
        e2[last] %= 2;
        let mono = MPoly::monomial(e2, c.clone());
        out = &out + &(&mono * &cache[k]);
    }
    out
}

/// `x -> (g_1(x), ..., g_m(x))` with coefficients in `Q` or one real
/// quadratic field. Circle and sphere maps are kept in sphere normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolyMap {
    source: Source,
    comps: Vec<MPoly<QuadExt>>,
}

impl RealPolyMap {
    pub fn new(source: Source, comps: Vec<MPoly<QuadExt>>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::Document("a map needs at least one component".into()));
        }
        if comps.iter().any(|c| c.nvars() != source.nvars()) {
            return Err(Error::Document("component variables do not match the source".into()));
        }
        let mut field = None;
        for c in comps.iter().flat_map(|p| p.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>()) {
            if let Some(d) = c.field().filter(|_| !c.is_rational()) {
                if d < 0 || field.is_some_and(|f| f != d) {
                    return Err(Error::Document(format!("coefficients must lie in one real quadratic field, found sqrt({d})")));
                }
                field = Some(d);
            }
        }
        let comps = match source {
            Source::Interval => comps,
            Source::Sphere(_) => comps.iter().map(sphere_normal_form).collect(),
        };
        Ok(RealPolyMap { source, comps })
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn components(&self) -> &[MPoly<QuadExt>] {
        &self.comps
    }

    pub fn target_dim(&self) -> usize {
        self.comps.len()
    }

    /// The surd shared by the coefficients, if any.
    pub fn surd(&self) -> Option<i64> {
        self.comps
            .iter()
            .flat_map(|p| p.terms().filter(|(_, c)| !c.is_rational()).filter_map(|(_, c)| c.field()).collect::<Vec<_>>())
            .next()
    }

    pub fn eval_f64(&self, x: &[f64]) -> Vec<f64> {
        self.comps.iter().map(|p| p.eval_with(x, |c| c.to_f64())).collect()
    }

    pub fn eval(&self, x: &[QuadExt]) -> Vec<QuadExt> {
        self.comps.iter().map(|p| p.eval(x)).collect()
    }

    /// Printed components in the normal form of the polynomial printer.
    pub fn printed(&self) -> Vec<String> {
        let vars = self.source.vars();
        let v: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        self.comps.iter().map(|p| print_poly(p, &v)).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": 1,
            "source": self.source.name(),
            "vars": self.source.vars(),
            "components": self.printed(),
        });
        if let Source::Sphere(k @ 2..) = self.source {
            v["k"] = json!(k);
        }
        if let Some(d) = self.surd() {
            v["surd"] = json!(d);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        check_schema(v)?;
        let source = match v["source"].as_str() {
            Some("interval") => Source::Interval,
            Some("circle") => Source::Sphere(1),
            Some("sphere") => {
                let k = v["k"].as_u64().ok_or_else(|| Error::Document("sphere source needs \"k\"".into()))?;
                if k == 0 {
                    return Err(Error::Document("sphere dimension must be positive".into()));
                }
                Source::Sphere(k as usize)
            }
            other => return Err(Error::Document(format!("unknown source {other:?}"))),
        };
        let vars = source.vars();
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let comps = v["components"]
            .as_array()
            .ok_or_else(|| Error::Document("\"components\" must be an array of strings".into()))?
            .iter()
            .map(|c| {
                let s = c.as_str().ok_or_else(|| Error::Document("component must be a string".into()))?;
                parse_poly_surd(s, &names)
            })
            .collect::<Result<Vec<_>>>()?;
        RealPolyMap::new(source, comps)
    }

    /// `self o (h_1, ..., h_n)` for polynomials `h_j` over a new source.
    pub fn compose_source(&self, source: Source, h: &[MPoly<QuadExt>]) -> Result<Self> {
        RealPolyMap::new(source, self.comps.iter().map(|p| p.compose(h)).collect())
    }

    /// Whether every component is zero on the source.
    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }
}

pub(crate) fn check_schema(v: &Value) -> Result<()> {
    match v.get("schema").and_then(Value::as_u64) {
        Some(1) => Ok(()),
        Some(s) => Err(Error::Document(format!("unsupported schema {s}"))),
        None => Err(Error::Document("missing \"schema\"".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_poly(s: &str) -> MPoly<QuadExt> {
        parse_poly_surd(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn normal_form() {
        let p = sphere_normal_form(&circle_poly("y^4-x^4"));
        assert_eq!(p, circle_poly("1-2*x^2"));
        let q = sphere_normal_form(&circle_poly("x^2+y^2"));
        assert_eq!(q, circle_poly("1"));
        let s = parse_poly_surd("z^3", &["x", "y", "z"]).unwrap();
        assert_eq!(sphere_normal_form(&s), parse_poly_surd("z-x^2*z-y^2*z", &["x", "y", "z"]).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let m = RealPolyMap::new(Source::Sphere(1), vec![circle_poly("2*x*y"), circle_poly("y^2-x^2")]).unwrap();
        assert_eq!(m.printed(), vec!["2*x^1*y^1", "-2*x^2+1"]);
        let back = RealPolyMap::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        let s = RealPolyMap::new(Source::Interval, vec![parse_poly_surd("sqrt(2)*t", &["t"]).unwrap()]).unwrap();
        assert_eq!(s.to_json()["surd"], 2);
        assert_eq!(RealPolyMap::from_json(&s.to_json()).unwrap(), s);
        assert!(RealPolyMap::from_json(&json!({"schema": 2})).is_err());
    }
}
