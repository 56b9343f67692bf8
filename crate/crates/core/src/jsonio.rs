//! JSON schemas for the external interfaces: matrix literals, element
//! literals for E(n) and the double, module descriptions, cocycle grids, and
//! Lagrangian lists.
//!
//! Matrix literals look like
//! `{"field": "rational" | "gf:<p>", "rows": [[...], ...]}` with rational
//! entries written as strings `"num/den"` (plain integers are accepted too).

use serde_json::{json, Map, Value};

use crate::double::{Dbl, DoubleBasis, DoubleElem};
use crate::en::{En, EnBasis, EnElem};
use crate::error::{Error, Result};
use crate::hopf::{Elem, HopfAlgebra};
use crate::mask;
use crate::matrix::Matrix;
use crate::modrep::ModuleRep;
use crate::scalar::{FieldSpec, Scalar};
use crate::symplectic::LagSubspace;

fn scalar_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(_) => Value::String(s.to_string()),
        Scalar::Residue { value, .. } => json!(value),
    }
}

fn scalar_from_value(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse_in(field, s),
        Value::Number(num) => {
            let i = num
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("non-integer numeric literal {num}")))?;
            Ok(field.from_i64(i))
        }
        _ => Err(Error::Parse(format!("expected scalar literal, got {v}"))),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| scalar_to_value(m.get(i, j))).collect()))
        .collect();
    json!({ "field": m.field().to_string(), "rows": rows })
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("matrix literal must be an object".into()))?;
    let field = FieldSpec::parse(
        obj.get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("matrix literal needs a `field` string".into()))?,
    )?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("matrix literal needs a `rows` array".into()))?;
    let r = rows.len();
    let c = rows.first().and_then(|x| x.as_array()).map(|a| a.len()).unwrap_or(0);
    let mut out = Matrix::zero(r, c, field);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::Parse("rows must be arrays".into()))?;
        if row.len() != c {
            return Err(Error::Parse("ragged matrix literal".into()));
        }
        for (j, e) in row.iter().enumerate() {
            out.set(i, j, scalar_from_value(field, e)?);
        }
    }
    Ok(out)
}

fn subset_to_json(xs: u32) -> Value {
    Value::Array(mask::indices(xs).into_iter().map(|i| json!(i)).collect())
}

fn subset_from_json(v: &Value, n: usize) -> Result<u32> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("subset must be an array".into()))?;
    let mut out = 0u32;
    let mut last = 0u64;
    for e in arr {
        let i = e.as_u64().ok_or_else(|| Error::Parse("subset entries must be indices".into()))?;
        if i < 1 || i as usize > n {
            return Err(Error::Parse(format!("index {i} out of range 1..={n}")));
        }
        if i <= last {
            return Err(Error::Parse("subset indices must be strictly increasing".into()));
        }
        last = i;
        out |= 1 << (i - 1);
    }
    Ok(out)
}

/// `{"n": 2, "terms": [{"c": 0, "P": [1, 2], "coeff": "1"}]}`
pub fn en_elem_to_json(en: &En, e: &EnElem) -> Value {
    let terms: Vec<Value> = e
        .terms
        .iter()
        .map(|(b, c)| json!({ "c": b.c, "P": subset_to_json(b.xs), "coeff": scalar_to_value(c) }))
        .collect();
    json!({ "n": en.n(), "terms": terms })
}

pub fn en_elem_from_json(field: FieldSpec, v: &Value) -> Result<(En, EnElem)> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("element literal must be an object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("element literal needs `n`".into()))? as usize;
    let en = En::new(n, field)?;
    let mut out = Elem::zero();
    for t in obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("element literal needs `terms`".into()))?
    {
        let t = t.as_object().ok_or_else(|| Error::Parse("terms must be objects".into()))?;
        let c = t.get("c").and_then(Value::as_u64).unwrap_or(0) as u8;
        if c > 1 {
            return Err(Error::Parse("grouplike exponent must be 0 or 1".into()));
        }
        let xs = subset_from_json(t.get("P").unwrap_or(&Value::Array(vec![])), n)?;
        let coeff = scalar_from_value(
            field,
            t.get("coeff").ok_or_else(|| Error::Parse("term needs `coeff`".into()))?,
        )?;
        out.add_term(EnBasis { c, xs }, coeff);
    }
    Ok((en, out))
}

/// `{"n": 1, "terms": [{"C": 1, "X": [1], "c": 0, "x": [], "coeff": "1/2"}]}`
pub fn double_elem_to_json(dbl: &Dbl, e: &DoubleElem) -> Value {
    let terms: Vec<Value> = e
        .terms
        .iter()
        .map(|(b, coeff)| {
            json!({
                "C": b.big_c,
                "X": subset_to_json(b.big_xs),
                "c": b.c,
                "x": subset_to_json(b.xs),
                "coeff": scalar_to_value(coeff),
            })
        })
        .collect();
    json!({ "n": dbl.n(), "terms": terms })
}

pub fn double_elem_from_json(field: FieldSpec, v: &Value) -> Result<(Dbl, DoubleElem)> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("element literal must be an object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("element literal needs `n`".into()))? as usize;
    let dbl = Dbl::new(n, field)?;
    let mut out = Elem::zero();
    for t in obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("element literal needs `terms`".into()))?
    {
        let t = t.as_object().ok_or_else(|| Error::Parse("terms must be objects".into()))?;
        let big_c = t.get("C").and_then(Value::as_u64).unwrap_or(0) as u8;
        let c = t.get("c").and_then(Value::as_u64).unwrap_or(0) as u8;
        if big_c > 1 || c > 1 {
            return Err(Error::Parse("grouplike exponents must be 0 or 1".into()));
        }
        let big_xs = subset_from_json(t.get("X").unwrap_or(&Value::Array(vec![])), n)?;
        let xs = subset_from_json(t.get("x").unwrap_or(&Value::Array(vec![])), n)?;
        let coeff = scalar_from_value(
            field,
            t.get("coeff").ok_or_else(|| Error::Parse("term needs `coeff`".into()))?,
        )?;
        out.add_term(DoubleBasis { big_c, big_xs, c, xs }, coeff);
    }
    Ok((dbl, out))
}

fn bare_matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_to_value(m.get(i, j))).collect()))
            .collect(),
    )
}

fn bare_matrix_from_json(field: FieldSpec, v: &Value, dim: usize) -> Result<Matrix> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("generator matrix must be an array".into()))?;
    if rows.len() != dim {
        return Err(Error::Parse("generator matrix has the wrong size".into()));
    }
    let mut out = Matrix::zero(dim, dim, field);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::Parse("rows must be arrays".into()))?;
        if row.len() != dim {
            return Err(Error::Parse("generator matrix has the wrong size".into()));
        }
        for (j, e) in row.iter().enumerate() {
            out.set(i, j, scalar_from_value(field, e)?);
        }
    }
    Ok(out)
}

/// `{"n": 1, "dim": 2, "field": ..., "gens": {"c": [[...]], "C": ..., "x1": ..., "X1": ...}}`
pub fn module_to_json(v: &ModuleRep) -> Value {
    let mut gens = Map::new();
    gens.insert("c".into(), bare_matrix_to_json(&v.c));
    gens.insert("C".into(), bare_matrix_to_json(&v.big_c));
    for i in 0..v.n {
        gens.insert(format!("x{}", i + 1), bare_matrix_to_json(&v.x[i]));
        gens.insert(format!("X{}", i + 1), bare_matrix_to_json(&v.big_x[i]));
    }
    json!({ "n": v.n, "dim": v.dim, "field": v.field.to_string(), "gens": Value::Object(gens) })
}

pub fn module_from_json(v: &Value) -> Result<ModuleRep> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("module literal must be an object".into()))?;
    let n = obj.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("module needs `n`".into()))? as usize;
    let dim = obj.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("module needs `dim`".into()))? as usize;
    let field = FieldSpec::parse(
        obj.get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("module needs a `field` string".into()))?,
    )?;
    let gens = obj
        .get("gens")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("module needs `gens`".into()))?;
    let fetch = |key: &str| -> Result<Matrix> {
        bare_matrix_from_json(
            field,
            gens.get(key).ok_or_else(|| Error::Parse(format!("missing generator `{key}`")))?,
            dim,
        )
    };
    let c = fetch("c")?;
    let big_c = fetch("C")?;
    let mut x = Vec::new();
    let mut big_x = Vec::new();
    for i in 1..=n {
        x.push(fetch(&format!("x{i}"))?);
        big_x.push(fetch(&format!("X{i}"))?);
    }
    ModuleRep::new(n, field, c, big_c, x, big_x)
}

/// Cocycle export: the dense grid keyed by basis-pair indices `"u,v"`.
pub fn cocycle_to_json(en: &En, sigma: &crate::cocycle::Cocycle) -> Value {
    let d = en.dim();
    let mut grid = Map::new();
    for u in 0..d {
        for v in 0..d {
            let s = &sigma.grid()[u * d + v];
            if !s.is_zero() {
                grid.insert(format!("{u},{v}"), scalar_to_value(s));
            }
        }
    }
    json!({
        "n": en.n(),
        "field": en.field().to_string(),
        "m": bare_matrix_to_json(&sigma.m),
        "grid": Value::Object(grid),
    })
}

/// Lagrangian export: a list of RREF matrices in the matrix schema.
pub fn lagrangians_to_json(ls: &[LagSubspace]) -> Value {
    Value::Array(ls.iter().map(|l| matrix_to_json(l.rref())).collect())
}
