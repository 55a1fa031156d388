//! Decides which invariants of a parameterized compact set equal 1.

use std::fmt;

use serde_json::{json, Value};

use crate::curve::{infinity_fibers, InfinityReport};
use crate::error::Result;
use crate::exact::rat_to_string;
use crate::param::{Mode, ProjPoint, SemialgInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// One point at infinity with a single real branch.
    Case1,
    /// One real point at infinity with two conjugate branches.
    Case2,
    /// Two conjugate points at infinity, one branch each.
    Case3,
    None,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::Case1 => "CASE1",
            CaseLabel::Case2 => "CASE2",
            CaseLabel::Case3 => "CASE3",
            CaseLabel::None => "NONE",
        }
    }
}

/// Value of an invariant that is either 1 or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inv {
    One,
    Infinity,
}

impl Inv {
    pub fn from_bool(one: bool) -> Self {
        if one {
            Inv::One
        } else {
            Inv::Infinity
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Inv::One
    }

    pub fn to_json(&self) -> Value {
        match self {
            Inv::One => json!(1),
            Inv::Infinity => json!("infinity"),
        }
    }
}

impl fmt::Display for Inv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inv::One => write!(f, "1"),
            Inv::Infinity => write!(f, "+inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub case_label: CaseLabel,
    pub p_ball: Inv,
    pub p_sphere1: Inv,
    pub p_sphere_k_ge2: bool,
    pub r_ball_sphere: Inv,
    pub rs_ball_sphere: Inv,
    /// Only for plane curves.
    pub laurent_image: Option<bool>,
    pub s_compact: bool,
    pub mode: Mode,
    pub report: InfinityReport,
    /// Why `p_sphere1` is infinite, when it is.
    pub failed_clause: Option<String>,
}

pub fn case_label(report: &InfinityReport) -> CaseLabel {
    let f = &report.fibers;
    match f.len() {
        1 if f[0].is_real_point && f[0].fiber.len() == 1 => CaseLabel::Case1,
        1 if f[0].is_real_point && f[0].fiber_is_conjugate_pair => CaseLabel::Case2,
        2 if f.iter().all(|x| !x.is_real_point && x.fiber.len() == 1) && f[1].fiber[0] == f[0].fiber[0].conj() => {
            CaseLabel::Case3
        }
        _ => CaseLabel::None,
    }
}

pub fn classify(input: &SemialgInput) -> Result<Classification> {
    let report = infinity_fibers(input.param())?;
    let case = case_label(&report);
    let arc = input.mode().is_arc();
    let compact = arc || report.real_trace_bounded;
    let case1 = case == CaseLabel::Case1;

    let p_ball = compact && case1;
    let p_sphere1 = (arc && case1) || (!arc && report.real_trace_bounded && matches!(case, CaseLabel::Case2 | CaseLabel::Case3));
    let sphere_k = arc && case1;
    let failed_clause = (!p_sphere1).then(|| {
        if !compact {
            "set is not compact".to_string()
        } else if case == CaseLabel::None {
            format!("points at infinity match no case ({} fibers)", report.fibers.len())
        } else if arc {
            format!("{} curve: a proper sub-arc is not a polynomial image of the circle", case.as_str())
        } else {
            "bounded full trace requires CASE2 or CASE3".to_string()
        }
    });
    Ok(Classification {
        case_label: case,
        p_ball: Inv::from_bool(p_ball),
        p_sphere1: Inv::from_bool(p_sphere1),
        p_sphere_k_ge2: sphere_k,
        r_ball_sphere: Inv::from_bool(compact),
        rs_ball_sphere: Inv::from_bool(compact),
        laurent_image: (input.param().m() == 2).then_some(p_sphere1),
        s_compact: compact,
        mode: input.mode().clone(),
        report,
        failed_clause,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

pub fn point_json(p: &ProjPoint) -> Value {
    match p {
        ProjPoint::Exact(v) => json!(v.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        ProjPoint::Approx(v) => json!(v
            .iter()
            .map(|c| format!("~{:.12}{:+.12}i", c.re.to_f64_mid(), c.im.to_f64_mid()))
            .collect::<Vec<_>>()),
    }
}

pub fn mode_json(mode: &Mode) -> Value {
    match mode {
        Mode::FullTrace => json!({ "mode": "full" }),
        Mode::Arc { a, b } => json!({ "mode": "arc", "a": rat_to_string(a), "b": rat_to_string(b) }),
    }
}

pub fn report_json(r: &InfinityReport) -> Value {
    let fibers: Vec<Value> = r
        .fibers
        .iter()
        .map(|f| {
            json!({
                "point": point_json(&f.point),
                "fiber": f.fiber.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "multiplicities": f.multiplicities,
                "is_real_point": f.is_real_point,
                "fiber_is_conjugate_pair": f.fiber_is_conjugate_pair,
            })
        })
        .collect();
    json!({
        "fibers": fibers,
        "real_trace_bounded": r.real_trace_bounded,
        "real_root_count_of_P0": r.real_root_count_of_p0,
    })
}

impl Classification {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": 1,
            "case_label": self.case_label.as_str(),
            "p_ball": self.p_ball.to_json(),
            "p_sphere1": self.p_sphere1.to_json(),
            "p_sphere_k_ge2": yes_no(self.p_sphere_k_ge2),
            "r_ball_sphere": self.r_ball_sphere.to_json(),
            "rs_ball_sphere": self.rs_ball_sphere.to_json(),
            "s_compact": self.s_compact,
            "evidence": {
                "input": mode_json(&self.mode),
                "infinity": report_json(&self.report),
            },
        });
        if let Some(l) = self.laurent_image {
            v["laurent_image"] = json!(yes_no(l));
        }
        if let Some(c) = &self.failed_clause {
            v["evidence"]["p_sphere1_failed"] = json!(c);
        }
        v
    }

    /// The decided invariants without the evidence, for comparisons across
    /// reparameterizations.
    pub fn verdict(&self) -> (CaseLabel, Inv, Inv, bool, Inv, Inv, Option<bool>, bool) {
        (
            self.case_label,
            self.p_ball,
            self.p_sphere1,
            self.p_sphere_k_ge2,
            self.r_ball_sphere,
            self.rs_ball_sphere,
            self.laurent_image,
            self.s_compact,
        )
    }

    /// Checks the relations every classification satisfies.
    pub fn invariants_hold(&self) -> bool {
        self.rs_ball_sphere == self.r_ball_sphere
            && (!self.p_ball.is_one() || self.p_sphere1.is_one())
            && (!self.p_sphere_k_ge2 || self.case_label == CaseLabel::Case1)
            && self.laurent_image.is_none_or(|l| l == self.p_sphere1.is_one())
    }

    /// Rows of the invariants table for ball and sphere sources.
    pub fn table(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("case        {}\n", self.case_label.as_str()));
        s.push_str(&format!("compact     {}\n", yes_no(self.s_compact)));
        for (name, v) in [
            ("p_B", self.p_ball),
            ("r_B", self.r_ball_sphere),
            ("rs_B", self.rs_ball_sphere),
            ("p_S", self.p_sphere1),
            ("r_S", self.r_ball_sphere),
            ("rs_S", self.rs_ball_sphere),
        ] {
            s.push_str(&format!("{name:<12}{v}\n"));
        }
        s.push_str(&format!("S^k, k>=2   {}\n", yes_no(self.p_sphere_k_ge2)));
        if let Some(l) = self.laurent_image {
            s.push_str(&format!("laurent     {}\n", yes_no(l)));
        }
        if let Some(c) = &self.failed_clause {
            s.push_str(&format!("note        {c}\n"));
        }
        s
    }
}
