//! JSON forms of the exchanged values. A matrix serializes as
//! `{"ring":"fp","p":5,"rows":2,"cols":3,"entries":[[..],[..]]}` with
//! rational entries written as strings like `"1/2"`; the `entries` field is
//! omitted when `rows*cols = 0`. Completed morphisms wrap three matrices as
//! `{"e_target":M,"f":M,"e_source":M}`; extension objects are
//! `{"A":m,"C":n,"alpha":M}`, and lifted extensions add `e_A` and `e_C`.

use serde_json::{json, Map, Value};

use crate::bifunctor::TildeExtension;
use crate::cat::SplitWitness;
use crate::completion::CompletedMorphism;
use crate::error::{Error, Result};
use crate::extensions::ExtObject;
use crate::matrix::Matrix;
use crate::ring::{Ring, Scalar};

fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Mod(v) => json!(v),
        Scalar::Rational(_) | Scalar::Int(_) => json!(s.to_string()),
    }
}

fn scalar_from_json(ring: Ring, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Json(format!("non-integer matrix entry {n}")))?;
            Ok(ring.from_i64(i))
        }
        Value::String(s) => ring.parse_scalar(s),
        other => Err(Error::Json(format!("unexpected matrix entry {other}"))),
    }
}

pub fn ring_to_json(ring: Ring) -> (Value, Option<u64>) {
    match ring {
        Ring::Rationals => (json!("q"), None),
        Ring::PrimeField(p) => (json!("fp"), Some(p)),
        Ring::Integers => (json!("z"), None),
    }
}

pub fn ring_from_json(obj: &Map<String, Value>) -> Result<Ring> {
    let tag = obj
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Json("missing ring tag".into()))?;
    match tag {
        "q" => Ok(Ring::Rationals),
        "z" => Ok(Ring::Integers),
        "fp" => {
            let p = obj
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Json("missing prime p".into()))?;
            Ring::prime_field(p)
        }
        other => Err(Error::Json(format!("unknown ring tag `{other}`"))),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let (ring_tag, p) = ring_to_json(m.ring());
    let mut obj = Map::new();
    obj.insert("ring".into(), ring_tag);
    if let Some(p) = p {
        obj.insert("p".into(), json!(p));
    }
    obj.insert("rows".into(), json!(m.rows()));
    obj.insert("cols".into(), json!(m.cols()));
    if m.rows() * m.cols() > 0 {
        let rows: Vec<Value> = (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_to_json(m.get(i, j))).collect()))
            .collect();
        obj.insert("entries".into(), Value::Array(rows));
    }
    Value::Object(obj)
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("matrix must be a JSON object".into()))?;
    let ring = ring_from_json(obj)?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing rows".into()))? as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing cols".into()))? as usize;
    if rows * cols == 0 {
        return Ok(Matrix::zero(ring, rows, cols));
    }
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing entries".into()))?;
    entries_to_matrix(ring, rows, cols, entries)
}

fn entries_to_matrix(ring: Ring, rows: usize, cols: usize, entries: &[Value]) -> Result<Matrix> {
    if entries.len() != rows {
        return Err(Error::Json(format!("expected {rows} rows, found {}", entries.len())));
    }
    let mut out = Matrix::zero(ring, rows, cols);
    for (i, row) in entries.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Json("matrix row must be an array".into()))?;
        if row.len() != cols {
            return Err(Error::Json(format!("expected {cols} columns, found {}", row.len())));
        }
        for (j, cell) in row.iter().enumerate() {
            out.set(i, j, scalar_from_json(ring, cell)?);
        }
    }
    Ok(out)
}

/// Accepts either the full matrix object or a bare `[[..],[..]]` array of
/// entries interpreted over the supplied ring.
pub fn matrix_from_json_with_ring(v: &Value, ring: Ring) -> Result<Matrix> {
    match v {
        Value::Object(_) => {
            let m = matrix_from_json(v)?;
            if m.ring() != ring {
                return Err(Error::RingMismatch(format!(
                    "matrix is over {}, expected {}",
                    m.ring().name(),
                    ring.name()
                )));
            }
            Ok(m)
        }
        Value::Array(rows) => {
            let r = rows.len();
            let c = rows
                .first()
                .and_then(Value::as_array)
                .map_or(0, |row| row.len());
            entries_to_matrix(ring, r, c, rows)
        }
        other => Err(Error::Json(format!("cannot read a matrix from {other}"))),
    }
}

pub fn split_witness_to_json(w: &SplitWitness<Matrix>) -> Value {
    json!({ "r": matrix_to_json(&w.r), "s": matrix_to_json(&w.s) })
}

pub fn completed_morphism_to_json(m: &CompletedMorphism<Matrix>) -> Value {
    json!({
        "e_target": matrix_to_json(&m.e_target),
        "f": matrix_to_json(&m.f),
        "e_source": matrix_to_json(&m.e_source),
    })
}

pub fn completed_morphism_from_json(v: &Value) -> Result<CompletedMorphism<Matrix>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("completed morphism must be an object".into()))?;
    let get = |k: &str| {
        obj.get(k)
            .ok_or_else(|| Error::Json(format!("missing field `{k}`")))
            .and_then(matrix_from_json)
    };
    Ok(CompletedMorphism { e_target: get("e_target")?, f: get("f")?, e_source: get("e_source")? })
}

pub fn ext_object_to_json(x: &ExtObject<usize, Matrix>) -> Value {
    json!({ "A": x.a, "C": x.c, "alpha": matrix_to_json(&x.alpha) })
}

pub fn ext_object_from_json(v: &Value) -> Result<ExtObject<usize, Matrix>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("extension object must be an object".into()))?;
    let a = obj
        .get("A")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing field `A`".into()))? as usize;
    let c = obj
        .get("C")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing field `C`".into()))? as usize;
    let alpha = matrix_from_json(
        obj.get("alpha")
            .ok_or_else(|| Error::Json("missing field `alpha`".into()))?,
    )?;
    Ok(ExtObject { a, c, alpha })
}

/// Lifted extension: the extension object fields plus the two idempotents.
pub fn tilde_extension_to_json(a_dim: usize, c_dim: usize, x: &TildeExtension<Matrix, Matrix>) -> Value {
    json!({
        "A": a_dim,
        "C": c_dim,
        "alpha": matrix_to_json(&x.alpha),
        "e_A": matrix_to_json(&x.e_a),
        "e_C": matrix_to_json(&x.e_c),
    })
}

pub fn tilde_extension_from_json(v: &Value) -> Result<(usize, usize, TildeExtension<Matrix, Matrix>)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("lifted extension must be an object".into()))?;
    let a = obj
        .get("A")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing field `A`".into()))? as usize;
    let c = obj
        .get("C")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing field `C`".into()))? as usize;
    let get = |k: &str| {
        obj.get(k)
            .ok_or_else(|| Error::Json(format!("missing field `{k}`")))
            .and_then(matrix_from_json)
    };
    Ok((a, c, TildeExtension { e_a: get("e_A")?, alpha: get("alpha")?, e_c: get("e_C")? }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fixed_forms() {
        let ring = Ring::prime_field(5).unwrap();
        let m = Matrix::from_i64s(ring, &[&[1, 2, 3], &[4, 0, 1]]);
        let v = matrix_to_json(&m);
        assert_eq!(
            v,
            serde_json::json!({"ring":"fp","p":5,"rows":2,"cols":3,"entries":[[1,2,3],[4,0,1]]})
        );
        let q = Ring::Rationals;
        let half = Matrix::from_fn(q, 1, 1, |_, _| q.parse_scalar("1/2").unwrap());
        assert_eq!(
            matrix_to_json(&half),
            serde_json::json!({"ring":"q","rows":1,"cols":1,"entries":[["1/2"]]})
        );
        // empty shapes omit the entries field
        let empty = Matrix::zero(ring, 0, 3);
        assert_eq!(
            matrix_to_json(&empty),
            serde_json::json!({"ring":"fp","p":5,"rows":0,"cols":3})
        );
        assert_eq!(matrix_from_json(&matrix_to_json(&empty)).unwrap(), empty);
    }

    #[test]
    fn bare_entry_arrays_need_a_ring() {
        let ring = Ring::prime_field(2).unwrap();
        let v = serde_json::json!([[1, 1], [0, 0]]);
        let m = matrix_from_json_with_ring(&v, ring).unwrap();
        assert_eq!(m, Matrix::from_i64s(ring, &[&[1, 1], &[0, 0]]));
    }

    proptest! {
        #[test]
        fn matrix_json_round_trips(rows in 0usize..4, cols in 0usize..4, seed in 0u64..1000) {
            for ring in [Ring::prime_field(5).unwrap(), Ring::Rationals] {
                let mut rng = crate::laws::rng_from(seed);
                let m = crate::generate::rand_matrix(ring, rows, cols, &mut rng);
                let v = matrix_to_json(&m);
                let back = matrix_from_json(&v).unwrap();
                prop_assert_eq!(&back, &m);
            }
        }
    }
}
