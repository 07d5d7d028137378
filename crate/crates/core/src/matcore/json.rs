use num_complex::Complex64;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matcore::matrix::ComplexMatrix;

/// Parses the matrix file format: {"n": <int>, "rows": [[entry, ...], ...]}
/// where an entry is either a bare number (real) or an [re, im] pair.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidMatrixFile(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidMatrixFile("top level must be an object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidMatrixFile("missing integer field \"n\"".into()))?
        as usize;
    let rows = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidMatrixFile("missing array field \"rows\"".into()))?;
    if rows.len() != n {
        return Err(Error::InvalidMatrixFile(format!(
            "expected {} rows, got {}",
            n,
            rows.len()
        )));
    }
    let mut parsed = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::InvalidMatrixFile(format!("row {} is not an array", i)))?;
        if row.len() != n {
            return Err(Error::InvalidMatrixFile(format!(
                "row {} has {} entries, expected {}",
                i,
                row.len(),
                n
            )));
        }
        let mut out = Vec::with_capacity(n);
        for (j, e) in row.iter().enumerate() {
            out.push(parse_entry(e, i, j)?);
        }
        parsed.push(out);
    }
    ComplexMatrix::from_rows(&parsed)
}

fn parse_entry(e: &Value, i: usize, j: usize) -> Result<Complex64> {
    let bad = || Error::InvalidMatrixFile(format!("entry ({}, {}) is not a number or [re, im]", i, j));
    match e {
        Value::Number(x) => {
            let re = x.as_f64().ok_or_else(bad)?;
            finite(re, i, j)?;
            Ok(Complex64::new(re, 0.0))
        }
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or_else(bad)?;
            let im = pair[1].as_f64().ok_or_else(bad)?;
            finite(re, i, j)?;
            finite(im, i, j)?;
            Ok(Complex64::new(re, im))
        }
        _ => Err(bad()),
    }
}

fn finite(x: f64, row: usize, col: usize) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteEntry { row, col })
    }
}

/// Writes a matrix in the same format, always as [re, im] pairs.
pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let rows: Vec<Value> = (0..n)
        .map(|i| {
            Value::Array(
                (0..n)
                    .map(|j| {
                        let z = m.get(i, j);
                        Value::Array(vec![json_f64(z.re), json_f64(z.im)])
                    })
                    .collect(),
            )
        })
        .collect();
    let doc = serde_json::json!({ "n": n, "rows": rows });
    doc.to_string()
}

fn json_f64(x: f64) -> Value {
    Value::Number(serde_json::Number::from_f64(x).expect("finite matrix entry"))
}

pub fn read_matrix_file(path: &std::path::Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix(&text)
}

pub fn write_matrix_file(path: &std::path::Path, m: &ComplexMatrix) -> Result<()> {
    std::fs::write(path, matrix_to_json(m) + "\n")?;
    Ok(())
}
