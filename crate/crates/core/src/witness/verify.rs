//! Checks a witness against the set it claims to parameterize: an exact
//! identity with the implicit equation, exact endpoints, and a sampled
//! Hausdorff distance.

use std::f64::consts::PI;

use serde_json::{json, Value};

use super::laurent::{real_from_laurent, LaurentPoly};
use super::realmap::{check_schema, sphere_normal_form, RealPolyMap, Source};
use crate::curve::implicitize_plane;
use crate::error::{Error, Result};
use crate::exact::{MPoly, QuadExt};
use crate::oracle::{curve_hausdorff, Curve, ParamCurve};
use crate::param::{print_poly, Mode, SemialgInput};

/// A claimed parameterization of a set.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Map(RealPolyMap),
    Laurent(LaurentPoly),
}

impl Witness {
    pub fn from_json(v: &Value) -> Result<Self> {
        check_schema(v)?;
        if v.get("kind").and_then(Value::as_str) == Some("laurent") {
            Ok(Witness::Laurent(LaurentPoly::from_json(v)?))
        } else {
            Ok(Witness::Map(RealPolyMap::from_json(v)?))
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Witness::Map(m) => m.to_json(),
            Witness::Laurent(l) => l.to_json(),
        }
    }

    /// The real map of the witness.
    pub fn real_map(&self) -> Result<RealPolyMap> {
        match self {
            Witness::Map(m) => Ok(m.clone()),
            Witness::Laurent(l) => real_from_laurent(l),
        }
    }
}

/// The image of a real map sampled along `[-1, 1]`, the circle, or the great
/// circle of a sphere through the first two axes.
pub struct MapCurve {
    source: Source,
    terms: Vec<Vec<(Vec<u32>, f64)>>,
}

impl MapCurve {
    pub fn new(g: &RealPolyMap) -> Self {
        let terms = g.components().iter().map(|p| p.terms().map(|(e, c)| (e.clone(), c.to_f64())).collect()).collect();
        MapCurve { source: g.source(), terms }
    }

    /// Evaluates at `x`, with variables beyond `x` set to zero.
    fn eval_into(&self, x: &[f64], out: &mut Vec<f64>) {
        let monomial = |e: &[u32], c: f64| {
            e.iter().enumerate().fold(c, |acc, (i, &k)| if k == 0 { acc } else { acc * x.get(i).map_or(0.0, |v| v.powi(k as i32)) })
        };
        out.clear();
        out.extend(self.terms.iter().map(|comp| comp.iter().map(|(e, c)| monomial(e, *c)).sum::<f64>()));
    }

    fn source_point(&self, s: f64) -> [f64; 2] {
        match self.source {
            Source::Interval => [s, 0.0],
            Source::Sphere(_) => [s.cos(), s.sin()],
        }
    }
}

impl Curve for MapCurve {
    fn dim(&self) -> usize {
        self.terms.len()
    }

    fn domain(&self) -> (f64, f64) {
        match self.source {
            Source::Interval => (-1.0, 1.0),
            Source::Sphere(_) => (-PI, PI),
        }
    }

    fn closed(&self) -> bool {
        self.source != Source::Interval
    }

    fn point(&self, s: f64) -> Option<Vec<f64>> {
        let mut out = Vec::with_capacity(self.terms.len());
        self.point_into(s, &mut out);
        Some(out)
    }

    fn point_into(&self, s: f64, out: &mut Vec<f64>) -> bool {
        self.eval_into(&self.source_point(s), out);
        true
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExactCheck {
    Passed,
    Failed(String),
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    /// `F(1, g) = 0` on the source, for plane curves.
    pub exact: ExactCheck,
    /// Interval endpoints land on the arc endpoints.
    pub endpoints: Option<bool>,
    pub hausdorff: f64,
    pub tol: f64,
    pub samples: usize,
}

impl VerifyReport {
    pub fn exact_ok(&self) -> bool {
        !matches!(self.exact, ExactCheck::Failed(_)) && self.endpoints != Some(false)
    }

    pub fn numeric_ok(&self) -> bool {
        self.hausdorff <= self.tol
    }

    pub fn pass(&self) -> bool {
        self.exact_ok() && self.numeric_ok()
    }

    pub fn to_json(&self) -> Value {
        let exact = match &self.exact {
            ExactCheck::Passed => json!("passed"),
            ExactCheck::Failed(why) => json!({ "failed": why }),
            ExactCheck::NotApplicable => json!("not_applicable"),
        };
        json!({
            "schema": 1,
            "pass": self.pass(),
            "exact": exact,
            "endpoints": self.endpoints,
            "numeric": {
                "hausdorff": self.hausdorff,
                "tol": self.tol,
                "samples": self.samples,
                "pass": self.numeric_ok(),
            },
        })
    }
}

/// `F(1, g_1, g_2)` reduced on the source.
fn implicit_residual(input: &SemialgInput, g: &RealPolyMap) -> Result<MPoly<QuadExt>> {
    let f = implicitize_plane(input.param())?.map(|c| QuadExt::from(c.clone()));
    let n = g.source().nvars();
    let mut subs = vec![MPoly::constant(n, QuadExt::from(crate::exact::rat(1, 1)))];
    subs.extend(g.components().iter().cloned());
    let r = f.compose(&subs);
    Ok(match g.source() {
        Source::Interval => r,
        Source::Sphere(_) => sphere_normal_form(&r),
    })
}

fn endpoint_check(input: &SemialgInput, g: &RealPolyMap) -> Option<bool> {
    let (Source::Interval, Mode::Arc { a, b }) = (g.source(), input.mode()) else {
        return None;
    };
    let p = input.param();
    let image = |t: &crate::exact::Rat| -> Vec<QuadExt> {
        let v = p.eval(&crate::exact::rat(1, 1), t);
        v[1..].iter().map(|x| QuadExt::from(x.clone() / v[0].clone())).collect()
    };
    let (pa, pb) = (image(a), image(b));
    let one = QuadExt::from(crate::exact::rat(1, 1));
    let (g0, g1) = (g.eval(&[-one.clone()]), g.eval(&[one]));
    Some((g0 == pa && g1 == pb) || (g0 == pb && g1 == pa))
}

/// Checks that the image of `w` is the set of `input`.
pub fn verify_witness(w: &Witness, input: &SemialgInput, tol: f64, n: usize) -> Result<VerifyReport> {
    let g = w.real_map()?;
    let m = input.param().m();
    if g.target_dim() != m {
        return Err(Error::Document(format!("witness maps to R^{} but the set lies in R^{m}", g.target_dim())));
    }
    let exact = if m == 2 {
        let r = implicit_residual(input, &g)?;
        if r.is_zero() {
            ExactCheck::Passed
        } else {
            let vars = g.source().vars();
            let v: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
            ExactCheck::Failed(format!("implicit equation does not vanish on the witness: {}", print_poly(&r, &v)))
        }
    } else {
        ExactCheck::NotApplicable
    };
    let endpoints = endpoint_check(input, &g);
    let hausdorff = curve_hausdorff(&MapCurve::new(&g), &ParamCurve::new(input.param(), input.mode()), n)?;
    Ok(VerifyReport { exact, endpoints, hausdorff, tol, samples: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::param::ProjParam;
    use crate::witness::{force_interval_witness, witness_circle, witness_interval, witness_laurent};

    fn full(s: &[&str]) -> SemialgInput {
        SemialgInput::full(ProjParam::from_strings(s).unwrap())
    }

    #[test]
    fn constructed_witnesses_verify() {
        let gerono = full(&["(t0^2+t1^2)^2", "t1^4-t0^4", "2*t0*t1*(t1^2-t0^2)"]);
        let r = verify_witness(&Witness::Map(witness_circle(&gerono).unwrap()), &gerono, 1e-9, 2000).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.exact, ExactCheck::Passed);
        let l = verify_witness(&Witness::Laurent(witness_laurent(&gerono).unwrap()), &gerono, 1e-9, 2000).unwrap();
        assert!(l.pass(), "{l:?}");
        let parabola = SemialgInput::arc(ProjParam::from_strings(&["t0^2", "t0*t1", "t1^2"]).unwrap(), rat(0, 1), rat(2, 1)).unwrap();
        let p = verify_witness(&Witness::Map(witness_interval(&parabola).unwrap()), &parabola, 1e-9, 2000).unwrap();
        assert!(p.pass(), "{p:?}");
        assert_eq!(p.endpoints, Some(true));
    }

    #[test]
    fn forced_witness_fails() {
        let circle = full(&["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]);
        let r = verify_witness(&Witness::Map(force_interval_witness(&circle).unwrap()), &circle, 1e-9, 2000).unwrap();
        assert!(matches!(r.exact, ExactCheck::Failed(_)));
        assert!(!r.numeric_ok());
        assert!(!r.pass());
    }
}
