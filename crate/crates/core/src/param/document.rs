//! JSON documents describing a parameterization.
//!
//! Either homogeneous components in `t0, t1`:
//! `{"schema": 1, "components": ["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]}`
//! or an affine map in `t`, each entry a polynomial or a fraction:
//! `{"schema": 1, "affine": [{"num": "2*t", "den": "1+t^2"}, "t"]}`.

use serde_json::{json, Value};

use super::parse::parse_poly;
use super::projparam::ProjParam;
use crate::error::{Error, Result};
use crate::exact::{MPoly, Rat, UPoly};

fn doc_err(msg: &str) -> Error {
    Error::Document(msg.into())
}

fn affine_poly(s: &str) -> Result<UPoly> {
    let p: MPoly<Rat> = parse_poly(s, &["t"])?;
    Ok(p.to_univariate(0).expect("one variable"))
}

fn affine_entry(v: &Value) -> Result<(UPoly, UPoly)> {
    match v {
        Value::String(s) => Ok((affine_poly(s)?, UPoly::from_ints(&[1]))),
        Value::Object(o) => {
            let get = |k: &str| o.get(k).and_then(Value::as_str);
            let num = get("num").ok_or_else(|| doc_err("affine fraction needs a \"num\" string"))?;
            let den = get("den").unwrap_or("1");
            Ok((affine_poly(num)?, affine_poly(den)?))
        }
        _ => Err(doc_err("affine entries are strings or {\"num\", \"den\"} objects")),
    }
}

pub fn param_from_json(v: &Value) -> Result<ProjParam> {
    match v.get("schema").and_then(Value::as_u64) {
        Some(1) => {}
        Some(s) => return Err(Error::Document(format!("unsupported schema {s}"))),
        None => return Err(doc_err("missing \"schema\"")),
    }
    if let Some(c) = v.get("components") {
        let comps = c
            .as_array()
            .ok_or_else(|| doc_err("\"components\" must be an array"))?
            .iter()
            .map(|s| s.as_str().ok_or_else(|| doc_err("components must be strings")))
            .collect::<Result<Vec<&str>>>()?;
        return ProjParam::from_strings(&comps);
    }
    if let Some(a) = v.get("affine") {
        let fracs = a
            .as_array()
            .ok_or_else(|| doc_err("\"affine\" must be an array"))?
            .iter()
            .map(affine_entry)
            .collect::<Result<Vec<_>>>()?;
        if fracs.is_empty() {
            return Err(doc_err("\"affine\" must not be empty"));
        }
        return ProjParam::from_affine(&fracs);
    }
    Err(doc_err("expected \"components\" or \"affine\""))
}

pub fn param_to_json(p: &ProjParam) -> Value {
    json!({ "schema": 1, "components": p.to_strings() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_encodings_agree() {
        let h = param_from_json(&json!({"schema": 1, "components": ["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"]})).unwrap();
        let a = param_from_json(&json!({"schema": 1, "affine": [
            {"num": "2*t", "den": "1+t^2"}, {"num": "t^2-1", "den": "t^2+1"}
        ]}))
        .unwrap();
        assert_eq!(h, a);
        assert_eq!(param_from_json(&param_to_json(&h)).unwrap(), h);
        let line = param_from_json(&json!({"schema": 1, "affine": ["t", "0"]})).unwrap();
        assert_eq!(line.to_strings(), vec!["1*t0^1", "1*t1^1", "0"]);
        assert!(param_from_json(&json!({"schema": 1})).is_err());
        assert!(param_from_json(&json!({"components": ["t0"]})).is_err());
    }
}
