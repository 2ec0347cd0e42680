//! JSON datum files.
//!
//! ```json
//! {"group": [6],
//!  "generators": [{"g": [1], "chi": [2]}],
//!  "params": {"diag": ["1/2"], "link": [[1, 2, {"root": [3, 1]}]]},
//!  "options": {"degree_cap": 12, "verify_mode": "full", "seed": 7}}
//! ```
//!
//! Scalars are integers, strings `"p/q"`, `{"root": [E, k]}` for `ζ_E^k`, or
//! lists whose entries are summed. Generator and link indices are 1-based.

use std::fmt;

use hopf_deform_core::braided::DiagonalDatum;
use hopf_deform_core::groups::FiniteAbelianGroup;
use hopf_deform_core::liftings::LiftingParams;
use hopf_deform_core::scalars::{max_order, Scalar};
use serde_json::{Map, Value};

/// A schema or validation error located by a JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub pointer: String,
    pub message: String,
}

impl InputError {
    pub fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        InputError { pointer: pointer.into(), message: message.into() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "{p}: {}", self.message)
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DatumOptions {
    pub degree_cap: Option<usize>,
    pub verify_mode: Option<String>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct DatumFile {
    pub datum: DiagonalDatum,
    pub params: LiftingParams,
    pub options: DatumOptions,
    /// The original document, echoed into reports.
    pub source: Value,
}

impl DatumFile {
    /// Order `E` of the cyclotomic field the datum works over.
    pub fn field_order(&self) -> u32 {
        self.datum.field().order()
    }
}

fn object<'a>(v: &'a Value, ptr: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>, InputError> {
    let obj = v.as_object().ok_or_else(|| InputError::new(ptr, "expected an object"))?;
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(InputError::new(format!("{ptr}/{k}"), format!("unknown field; expected one of {}", allowed.join(", "))));
        }
    }
    Ok(obj)
}

fn array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>, InputError> {
    v.as_array().ok_or_else(|| InputError::new(ptr, "expected an array"))
}

fn integer(v: &Value, ptr: &str) -> Result<i64, InputError> {
    v.as_i64().ok_or_else(|| InputError::new(ptr, "expected an integer"))
}

fn ints(v: &Value, ptr: &str, len: usize) -> Result<Vec<i64>, InputError> {
    let a = array(v, ptr)?;
    if a.len() != len {
        return Err(InputError::new(ptr, format!("expected {len} entries, found {}", a.len())));
    }
    a.iter().enumerate().map(|(i, x)| integer(x, &format!("{ptr}/{i}"))).collect()
}

fn rational(s: &str, ptr: &str) -> Result<Scalar, InputError> {
    let t = s.trim();
    let bad = || InputError::new(ptr, format!("cannot parse {s:?} as an integer or p/q"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            Scalar::from_ratio(p, q).map_err(|_| InputError::new(ptr, "zero denominator"))
        }
        None => Ok(Scalar::from_i64(t.parse().map_err(|_| bad())?)),
    }
}

/// Parses a scalar literal.
pub fn parse_scalar(v: &Value, ptr: &str) -> Result<Scalar, InputError> {
    match v {
        Value::Number(_) => Ok(Scalar::from_i64(integer(v, ptr)?)),
        Value::String(s) => rational(s, ptr),
        Value::Array(items) => {
            let mut acc = Scalar::zero();
            for (i, x) in items.iter().enumerate() {
                acc += &parse_scalar(x, &format!("{ptr}/{i}"))?;
            }
            Ok(acc)
        }
        Value::Object(_) => {
            let obj = object(v, ptr, &["root"])?;
            let r = obj.get("root").ok_or_else(|| InputError::new(ptr, "expected {\"root\": [E, k]}"))?;
            let ek = ints(r, &format!("{ptr}/root"), 2)?;
            if ek[0] < 1 || ek[0] > max_order() as i64 {
                return Err(InputError::new(format!("{ptr}/root/0"), format!("order must lie in 1..={}", max_order())));
            }
            Ok(Scalar::root(ek[0] as u32, ek[1]))
        }
        _ => Err(InputError::new(ptr, "expected a scalar: integer, \"p/q\", {\"root\": [E, k]} or a list")),
    }
}

/// Parses and validates a datum file.
pub fn parse_datum(text: &str) -> Result<DatumFile, InputError> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| InputError::new("", format!("invalid JSON at line {} column {}: {e}", e.line(), e.column())))?;
    let obj = object(&root, "", &["group", "generators", "params", "options"])?;
    let orders_v = obj.get("group").ok_or_else(|| InputError::new("/group", "missing field"))?;
    let orders_a = array(orders_v, "/group")?;
    if orders_a.is_empty() {
        return Err(InputError::new("/group", "at least one cyclic factor is required"));
    }
    let mut orders = Vec::new();
    for (i, o) in orders_a.iter().enumerate() {
        let m = integer(o, &format!("/group/{i}"))?;
        if m < 1 || m > max_order() as i64 {
            return Err(InputError::new(format!("/group/{i}"), format!("order must lie in 1..={}", max_order())));
        }
        orders.push(m as u32);
    }
    let grp = FiniteAbelianGroup::new(orders.clone());
    let gens_v = obj.get("generators").ok_or_else(|| InputError::new("/generators", "missing field"))?;
    let gens = array(gens_v, "/generators")?;
    if gens.is_empty() {
        return Err(InputError::new("/generators", "at least one generator is required"));
    }
    let mut gs = Vec::new();
    let mut chis = Vec::new();
    for (i, gv) in gens.iter().enumerate() {
        let p = format!("/generators/{i}");
        let go = object(gv, &p, &["g", "chi"])?;
        let g = go.get("g").ok_or_else(|| InputError::new(format!("{p}/g"), "missing field"))?;
        let c = go.get("chi").ok_or_else(|| InputError::new(format!("{p}/chi"), "missing field"))?;
        gs.push(grp.element(&ints(g, &format!("{p}/g"), orders.len())?));
        chis.push(grp.character(&ints(c, &format!("{p}/chi"), orders.len())?));
    }
    let datum = DiagonalDatum::new(grp, gs, chis).map_err(|e| InputError::new("/generators", e.to_string()))?;
    let theta = datum.rank();
    let mut params = LiftingParams::zero(theta);
    if let Some(pv) = obj.get("params") {
        let po = object(pv, "/params", &["diag", "link"])?;
        if let Some(dv) = po.get("diag") {
            let da = array(dv, "/params/diag")?;
            if da.len() != theta {
                return Err(InputError::new("/params/diag", format!("expected {theta} entries, found {}", da.len())));
            }
            for (i, x) in da.iter().enumerate() {
                params.set(i, i, parse_scalar(x, &format!("/params/diag/{i}"))?);
            }
        }
        if let Some(lv) = po.get("link") {
            for (k, e) in array(lv, "/params/link")?.iter().enumerate() {
                let p = format!("/params/link/{k}");
                let t = array(e, &p)?;
                if t.len() != 3 {
                    return Err(InputError::new(p, "expected [i, j, value]"));
                }
                let i = integer(&t[0], &format!("{p}/0"))?;
                let j = integer(&t[1], &format!("{p}/1"))?;
                if !(1 <= i && i < j && j <= theta as i64) {
                    return Err(InputError::new(p, format!("need 1 <= i < j <= {theta}, found ({i}, {j})")));
                }
                params.set(i as usize - 1, j as usize - 1, parse_scalar(&t[2], &format!("{p}/2"))?);
            }
        }
    }
    let mut options = DatumOptions::default();
    if let Some(ov) = obj.get("options") {
        let oo = object(ov, "/options", &["degree_cap", "verify_mode", "seed"])?;
        if let Some(v) = oo.get("degree_cap") {
            let c = integer(v, "/options/degree_cap")?;
            if c < 1 {
                return Err(InputError::new("/options/degree_cap", "must be positive"));
            }
            options.degree_cap = Some(c as usize);
        }
        if let Some(v) = oo.get("verify_mode") {
            let s = v.as_str().ok_or_else(|| InputError::new("/options/verify_mode", "expected \"full\" or \"sampled\""))?;
            if s != "full" && s != "sampled" {
                return Err(InputError::new("/options/verify_mode", "expected \"full\" or \"sampled\""));
            }
            options.verify_mode = Some(s.to_string());
        }
        if let Some(v) = oo.get("seed") {
            let s = v.as_u64().ok_or_else(|| InputError::new("/options/seed", "expected a non-negative integer"))?;
            options.seed = Some(s);
        }
    }
    Ok(DatumFile { datum, params, options, source: root })
}
