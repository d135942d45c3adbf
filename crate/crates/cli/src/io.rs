//! Algebra file format and exact-value JSON helpers.
//!
//! Algebras serialize as `{"name", "dim", "structure", "unit"?}` with the
//! structure constants as an n×n×n array. Rationals that are not small
//! integers are written as `"p/q"` strings so round trips stay exact.

use antirotor::algebra::Algebra;
use antirotor::registry::{registry_entry, RegistryMeta};
use antirotor::{Error, QMat, Result, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::str::FromStr;

pub fn parse_rational(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Q::from_integer(i.into()))
            } else {
                Err(Error::usage(format!(
                    "non-integer number {n} in exact context; use a \"p/q\" string"
                )))
            }
        }
        Value::String(s) => rational_from_str(s),
        _ => Err(Error::usage(format!("expected a number or \"p/q\" string, got {v}"))),
    }
}

pub fn rational_from_str(s: &str) -> Result<Q> {
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|_| Error::usage(format!("bad integer `{t}` in rational")))
    };
    match s.split_once('/') {
        None => Ok(Q::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::usage("rational with zero denominator"));
            }
            Ok(Q::new(parse_int(num)?, d))
        }
    }
}

pub fn rational_to_json(x: &Q) -> Value {
    if x.denom().is_one() {
        if let Ok(i) = i64::try_from(x.numer().clone()) {
            return json!(i);
        }
    }
    json!(x.to_string())
}

pub fn matrix_from_json(v: &Value) -> Result<QMat> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::usage("matrix must be a JSON array of rows"))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::usage("matrix row must be a JSON array"))?;
        out.push(row.iter().map(parse_rational).collect::<Result<Vec<_>>>()?);
    }
    if out.is_empty() || out.iter().any(|r| r.len() != out[0].len()) {
        return Err(Error::usage("matrix must be rectangular and nonempty"));
    }
    Ok(QMat::from_rows(out))
}

pub fn matrix_to_json(m: &QMat) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| Value::Array(m.row(i).iter().map(rational_to_json).collect()))
            .collect(),
    )
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    let n = alg.dim;
    let structure: Vec<Value> = (0..n)
        .map(|i| {
            Value::Array(
                (0..n)
                    .map(|j| {
                        Value::Array((0..n).map(|k| rational_to_json(alg.c(i, j, k))).collect())
                    })
                    .collect(),
            )
        })
        .collect();
    let mut obj = json!({
        "name": alg.name,
        "dim": n,
        "structure": structure,
    });
    if let Some(u) = &alg.unit {
        obj["unit"] = Value::Array(u.iter().map(rational_to_json).collect());
    }
    obj
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    let obj = v.as_object().ok_or_else(|| Error::usage("algebra file must be a JSON object"))?;
    let name = obj.get("name").and_then(|x| x.as_str()).unwrap_or("unnamed");
    let dim = obj
        .get("dim")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::usage("algebra file needs an integer \"dim\""))? as usize;
    let structure = obj
        .get("structure")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::usage("algebra file needs a \"structure\" array"))?;
    let mut flat = Vec::with_capacity(dim * dim * dim);
    if structure.len() != dim {
        return Err(Error::usage("structure array has the wrong outer length"));
    }
    for plane in structure {
        let plane =
            plane.as_array().ok_or_else(|| Error::usage("structure must be an n×n×n array"))?;
        if plane.len() != dim {
            return Err(Error::usage("structure array has a wrong middle length"));
        }
        for row in plane {
            let row =
                row.as_array().ok_or_else(|| Error::usage("structure must be an n×n×n array"))?;
            if row.len() != dim {
                return Err(Error::usage("structure array has a wrong inner length"));
            }
            for x in row {
                flat.push(parse_rational(x)?);
            }
        }
    }
    let alg = Algebra::from_structure(name, dim, flat)?;
    // A declared unit must agree with the computed one.
    if let Some(unit) = obj.get("unit") {
        let unit = unit
            .as_array()
            .ok_or_else(|| Error::usage("\"unit\" must be an array"))?
            .iter()
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        match &alg.unit {
            Some(computed) if *computed == unit => {}
            Some(_) => {
                return Err(Error::usage(
                    "declared unit does not match the computed two-sided unit",
                ))
            }
            None => return Err(Error::usage("declared unit, but the algebra has none")),
        }
    }
    Ok(alg)
}

/// Resolve `registry:<name>[:<n>]` or a file path.
pub fn load_algebra(spec: &str) -> Result<(Algebra, Option<RegistryMeta>)> {
    if let Some(name) = spec.strip_prefix("registry:") {
        let e = registry_entry(name)?;
        return Ok((e.algebra, Some(e.meta)));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::usage(format!("cannot read algebra file `{spec}`: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::usage(format!("bad JSON in `{spec}`: {e}")))?;
    Ok((algebra_from_json(&v)?, None))
}

/// Parse a comma-separated float vector.
pub fn parse_point(s: &str, dim: usize) -> Result<Vec<f64>> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::usage(format!("bad coordinate `{t}` in point")))
        })
        .collect::<Result<Vec<_>>>()?;
    if parts.len() != dim {
        return Err(Error::usage(format!(
            "point has {} coordinates, algebra dimension is {dim}",
            parts.len()
        )));
    }
    Ok(parts)
}

pub fn vector_to_json_q(v: &[Q]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn signed_str(x: &Q) -> String {
    if x.is_negative() {
        format!("- {}", -x.clone())
    } else {
        format!("+ {x}")
    }
}
