//! JSON file formats.
//!
//! Matrix files look like
//! `{"field": {"kind": "rational"}, "rows": 2, "cols": 2, "entries": [["1", "1/2"], ["0", "-3"]]}`.
//! Entries follow the scalar grammar of the field; plain JSON numbers are
//! accepted as well. Basis collections look like
//! `{"n": 2, "bases": [[["1,0", "0,0"], ["0,0", "1,0"]], ...]}` where every
//! basis is a list of column vectors.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::mub::OrthonormalBasis;
use crate::scalars::{FieldDescriptor, FieldValue};

#[derive(Debug, Deserialize)]
struct MatrixWire {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

#[derive(Debug, Serialize)]
struct MatrixOut {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

fn entry_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse {
            text: other.to_string(),
            field: "json".into(),
            reason: "entries must be strings or numbers".into(),
        }),
    }
}

pub fn matrix_from_str(text: &str) -> Result<Matrix> {
    let wire: MatrixWire = serde_json::from_str(text)?;
    if wire.rows == 0 || wire.cols == 0 {
        return Err(Error::shape("matrix file", "rows and cols must be positive"));
    }
    if wire.entries.len() != wire.rows || wire.entries.iter().any(|r| r.len() != wire.cols) {
        return Err(Error::shape(
            "matrix file",
            format!("entries do not form a {}x{} array", wire.rows, wire.cols),
        ));
    }
    let rows = wire
        .entries
        .iter()
        .map(|r| r.iter().map(|v| wire.field.parse(&entry_text(v)?)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(wire.field, rows)
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    let out = MatrixOut {
        field: m.field(),
        rows: m.rows(),
        cols: m.cols(),
        entries: m.to_rows().iter().map(|r| r.iter().map(FieldValue::to_string).collect()).collect(),
    };
    serde_json::to_value(out).expect("plain data")
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<Matrix> {
    matrix_from_str(&std::fs::read_to_string(path)?)
}

/// A vector file is either an `n x 1` matrix file or
/// `{"field": {...}, "entries": ["1", "0", ...]}`.
pub fn vector_from_str(text: &str) -> Result<(FieldDescriptor, Vector)> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("rows").is_some() {
        let m = matrix_from_str(text)?;
        if m.cols() != 1 {
            return Err(Error::shape("vector file", "matrix form must have one column"));
        }
        return Ok((m.field(), m.column(0)));
    }
    #[derive(Deserialize)]
    struct VectorWire {
        field: FieldDescriptor,
        entries: Vec<Value>,
    }
    let wire: VectorWire = serde_json::from_value(value)?;
    let entries = wire
        .entries
        .iter()
        .map(|v| wire.field.parse(&entry_text(v)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((wire.field, entries))
}

#[derive(Debug, Serialize, Deserialize)]
struct CollectionWire {
    n: usize,
    bases: Vec<Vec<Vec<Value>>>,
}

/// Parses a basis collection, checking orthonormality of each basis within `tol`.
pub fn bases_from_str(text: &str, tol: f64) -> Result<Vec<OrthonormalBasis>> {
    let value: Value = serde_json::from_str(text)?;
    // a report written by `tri mub construct` nests the collection
    let inner = value
        .get("result")
        .and_then(|r| r.get("collection"))
        .cloned()
        .unwrap_or(value);
    let wire: CollectionWire = serde_json::from_value(inner)?;
    let field = FieldDescriptor::complex_default();
    wire.bases
        .iter()
        .enumerate()
        .map(|(b, basis)| {
            if basis.len() != wire.n || basis.iter().any(|c| c.len() != wire.n) {
                return Err(Error::shape("basis collection", format!("basis {b} is not {0} vectors of length {0}", wire.n)));
            }
            let columns = basis
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|v| Ok(field.parse(&entry_text(v)?)?.to_complex().expect("complex")))
                        .collect::<Result<Vec<Complex64>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            OrthonormalBasis::new(columns, tol)
                .map_err(|e| Error::NotOrthonormal(format!("basis {b}: {e}")))
        })
        .collect()
}

pub fn bases_to_value(bases: &[OrthonormalBasis]) -> Value {
    let n = bases.first().map_or(0, OrthonormalBasis::dimension);
    let fmt = |z: &Complex64| format!("{:.16e},{:.16e}", z.re, z.im);
    let wire = CollectionWire {
        n,
        bases: bases
            .iter()
            .map(|b| b.columns().iter().map(|c| c.iter().map(|z| Value::String(fmt(z))).collect()).collect())
            .collect(),
    };
    serde_json::to_value(wire).expect("plain data")
}
