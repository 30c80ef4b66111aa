//! JSON documents for configurations, distance vectors, entry tables,
//! matrices, embeddings and factorization certificates.
//!
//! Exact scalars are written as `"p/q"` strings (integers without the
//! slash). Readers accept numbers and such strings in both modes; in exact
//! mode a number literal is converted digit by digit, never through a double.
//! Pair keys and point labels are 1-based.

use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::analysis::EmbeddingResult;
use crate::domain::{DistanceVector, PointConfiguration};
use crate::error::{Error, Result};
use crate::matrix::{GenericEntryTable, Label, Matrix};
use crate::pairs::{PairIndex, PairSpace};
use crate::poly::SparsePoly;
use crate::scalar::{parse_rational, Rational, RealField};
use crate::symbolic::FactorizationCertificate;

/// Scalars with a JSON representation.
pub trait JsonScalar: Sized {
    fn to_json(&self) -> Value;
    /// `path` names the field for diagnostics.
    fn from_json(value: &Value, path: &str) -> Result<Self>;
}

fn literal(value: &Value, path: &str) -> Result<Rational> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(Error::Parse(format!("{path}: expected a number or \"p/q\" string, got {other}"))),
    };
    parse_rational(&text).ok_or_else(|| Error::Parse(format!("{path}: cannot read {text:?} as a number")))
}

impl JsonScalar for f64 {
    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self)
            .map(Value::Number)
            .unwrap_or_else(|| Value::String(self.to_string()))
    }

    fn from_json(value: &Value, path: &str) -> Result<Self> {
        if let Value::Number(n) = value {
            if let Some(v) = n.as_f64() {
                return Ok(v);
            }
        }
        Ok(literal(value, path)?.to_f64())
    }
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(value: &Value, path: &str) -> Result<Self> {
        literal(value, path)
    }
}

impl JsonScalar for SparsePoly {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    /// Only constants can be read back without a variable table.
    fn from_json(value: &Value, path: &str) -> Result<Self> {
        Ok(SparsePoly::constant(literal(value, path)?))
    }
}

/// Parses a document, reporting the line and column of syntax errors.
pub fn parse_document(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

fn field<'a>(doc: &'a Value, key: &str) -> Result<&'a Value> {
    doc.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn count(doc: &Value, key: &str) -> Result<usize> {
    field(doc, key)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| Error::Parse(format!("{key}: expected a nonnegative integer")))
}

fn array<'a>(value: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{path}: expected an array")))
}

fn rows_of<T: JsonScalar>(value: &Value, path: &str) -> Result<Vec<Vec<T>>> {
    array(value, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            array(row, &format!("{path}[{i}]"))?
                .iter()
                .enumerate()
                .map(|(j, v)| T::from_json(v, &format!("{path}[{i}][{j}]")))
                .collect()
        })
        .collect()
}

fn rows_to_json(rows: impl Iterator<Item = Vec<Value>>) -> Value {
    Value::Array(rows.map(Value::Array).collect())
}

fn check_n(declared: usize, actual: usize, what: &str) -> Result<()> {
    if declared != actual {
        return Err(Error::DimensionMismatch(format!(
            "\"n\" is {declared} but {what} has {actual}"
        )));
    }
    Ok(())
}

pub fn points_to_json<T: JsonScalar + RealField>(cfg: &PointConfiguration<T>) -> Value {
    json!({
        "n": cfg.n(),
        "d": cfg.d(),
        "points": rows_to_json(cfg.points().iter().map(|p| p.iter().map(T::to_json).collect())),
    })
}

pub fn points_from_json<T: JsonScalar + RealField>(doc: &Value) -> Result<PointConfiguration<T>> {
    let n = count(doc, "n")?;
    let d = count(doc, "d")?;
    let points: Vec<Vec<T>> = rows_of(field(doc, "points")?, "points")?;
    check_n(n, points.len(), "\"points\"")?;
    PointConfiguration::with_dimension(d, points)
}

/// Writes `"r"` (distances) when every distance is representable, else
/// `"r2"` (squared distances).
pub fn distances_to_json<T: JsonScalar + RealField>(r: &DistanceVector<T>) -> Value {
    let space = r.pairs();
    let roots: Option<Vec<T>> = space.iter().map(|p| r.distance(p.i(), p.j())).collect();
    let (key, values) = match roots {
        Some(v) => ("r", v),
        None => ("r2", r.squared_entries().to_vec()),
    };
    let map: Map<String, Value> = space
        .iter()
        .zip(&values)
        .map(|(p, v)| (p.to_string(), v.to_json()))
        .collect();
    let mut doc = Map::new();
    doc.insert("n".into(), json!(r.n()));
    doc.insert(key.into(), Value::Object(map));
    Value::Object(doc)
}

/// Reads `{"n", "r": {"i,j": r_ij}}`, `{"n", "r2": {"i,j": r_ij²}}`, or a
/// point configuration (whose distances are then taken).
pub fn distances_from_json<T: JsonScalar + RealField>(doc: &Value) -> Result<DistanceVector<T>> {
    if doc.get("points").is_some() {
        return Ok(points_from_json::<T>(doc)?.distances());
    }
    let n = count(doc, "n")?;
    let (key, squared) = match (doc.get("r"), doc.get("r2")) {
        (Some(_), None) => ("r", false),
        (None, Some(_)) => ("r2", true),
        (Some(_), Some(_)) => return Err(Error::Parse("give either \"r\" or \"r2\", not both".into())),
        (None, None) => return Err(Error::Parse("missing field \"r\"".into())),
    };
    let map = doc[key]
        .as_object()
        .ok_or_else(|| Error::Parse(format!("{key}: expected an object keyed by \"i,j\"")))?;
    let space = PairSpace::new(n);
    let mut values: Vec<Option<T>> = (0..space.len()).map(|_| None).collect();
    for (k, v) in map {
        let pair = PairIndex::from_str(k).map_err(|e| Error::Parse(format!("{key}.{k}: {e}")))?;
        if pair.j() >= n {
            return Err(Error::DimensionMismatch(format!("{key}.{k}: pair outside 1..{n}")));
        }
        let slot = space.rank(pair)?;
        if values[slot].is_some() {
            return Err(Error::Parse(format!("{key}.{k}: pair given twice")));
        }
        values[slot] = Some(T::from_json(v, &format!("{key}.{k}"))?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            v.ok_or_else(|| {
                Error::DimensionMismatch(format!("{key}: missing pair {}", space.unrank(k).expect("rank in range")))
            })
        })
        .collect::<Result<Vec<T>>>()?;
    if squared {
        DistanceVector::from_squared(n, values)
    } else {
        DistanceVector::from_distances(n, values)
    }
}

pub fn table_to_json<T: JsonScalar + crate::scalar::Ring>(h: &GenericEntryTable<T>) -> Value {
    let n = h.n();
    json!({
        "n": n,
        "entries": rows_to_json((0..n).map(|i| (0..n).map(|j| h.get(i, j).to_json()).collect())),
    })
}

pub fn table_from_json<T: JsonScalar + crate::scalar::Ring>(doc: &Value) -> Result<GenericEntryTable<T>> {
    let n = count(doc, "n")?;
    let rows: Vec<Vec<T>> = rows_of(field(doc, "entries")?, "entries")?;
    check_n(n, rows.len(), "\"entries\"")?;
    GenericEntryTable::from_rows(rows)
}

pub fn matrix_to_json<T: JsonScalar>(m: &Matrix<T>) -> Value {
    let mut doc = Map::new();
    doc.insert("rows".into(), json!(m.rows()));
    doc.insert("cols".into(), json!(m.cols()));
    doc.insert(
        "labels".into(),
        match m.labels() {
            Some(l) => Value::Array(l.iter().map(|l| Value::String(l.to_string())).collect()),
            None => Value::Null,
        },
    );
    doc.insert(
        "entries".into(),
        rows_to_json((0..m.rows()).map(|i| m.row(i).iter().map(T::to_json).collect())),
    );
    Value::Object(doc)
}

pub fn matrix_from_json<T: JsonScalar>(doc: &Value) -> Result<Matrix<T>> {
    let rows = count(doc, "rows")?;
    let cols = count(doc, "cols")?;
    let entries: Vec<Vec<T>> = rows_of(field(doc, "entries")?, "entries")?;
    check_n(rows, entries.len(), "\"entries\"")?;
    if let Some((i, r)) = entries.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("entries[{i}] has {} entries, expected {cols}", r.len())));
    }
    let m = Matrix::new(rows, cols, entries.into_iter().flatten().collect())?;
    match doc.get("labels") {
        None | Some(Value::Null) => Ok(m),
        Some(v) => {
            let labels = array(v, "labels")?
                .iter()
                .map(|l| {
                    l.as_str()
                        .ok_or_else(|| Error::Parse("labels: expected strings".into()))
                        .and_then(Label::from_str)
                })
                .collect::<Result<Vec<Label>>>()?;
            if labels.len() != rows {
                return Err(Error::DimensionMismatch(format!("{} labels for {rows} rows", labels.len())));
            }
            Ok(m.with_labels(labels))
        }
    }
}

/// The point document of the embedding plus `"residual"`.
pub fn embedding_to_json(e: &EmbeddingResult) -> Value {
    let mut doc = points_to_json(&e.points);
    doc["residual"] = e.residual.to_json();
    doc
}

pub fn certificate_to_json(c: &FactorizationCertificate) -> Value {
    json!({
        "kind": c.kind.to_string(),
        "n": c.n,
        "lhs_terms": c.lhs.len(),
        "factors": c.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "quotient": c.quotient.to_string(),
        "verified": c.verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn distance_round_trip() {
        let r = DistanceVector::from_distances(3, vec![int(3), int(4), int(5)]).unwrap();
        let doc = distances_to_json(&r);
        assert_eq!(doc["r"]["2,3"], json!("5"));
        assert_eq!(distances_from_json::<Rational>(&doc).unwrap(), r);

        let irrational = DistanceVector::from_squared(2, vec![int(2)]).unwrap();
        let doc = distances_to_json(&irrational);
        assert_eq!(doc["r2"]["1,2"], json!("2"));
        assert_eq!(distances_from_json::<Rational>(&doc).unwrap(), irrational);
    }

    #[test]
    fn exact_decimals() {
        let doc = parse_document(r#"{"n": 2, "r": {"1,2": 0.1}}"#).unwrap();
        let r = distances_from_json::<Rational>(&doc).unwrap();
        assert_eq!(r.squared(0, 1), rat(1, 100));
    }

    #[test]
    fn diagnostics() {
        let err = parse_document("{\n  \"n\": }").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let doc = parse_document(r#"{"n": 3, "r": {"1,2": 1, "1,3": 1}}"#).unwrap();
        assert!(matches!(distances_from_json::<f64>(&doc), Err(Error::DimensionMismatch(_))));
        let doc = parse_document(r#"{"n": 2, "r": {"1,2": "x"}}"#).unwrap();
        let err = distances_from_json::<f64>(&doc).unwrap_err();
        assert!(err.to_string().contains("r.1,2"), "{err}");
    }

    #[test]
    fn matrix_round_trip() {
        let r = DistanceVector::from_squared(3, vec![int(1); 3]).unwrap();
        let m = crate::builders::cayley_menger(&r);
        let doc = matrix_to_json(&m);
        assert_eq!(doc["labels"], json!(["1", "2", "3", "border"]));
        assert_eq!(matrix_from_json::<Rational>(&doc).unwrap(), m);
    }

    #[test]
    fn points_and_tables() {
        let cfg = PointConfiguration::new(vec![vec![0.0, 0.5], vec![1.0, -2.0]]).unwrap();
        assert_eq!(points_from_json::<f64>(&points_to_json(&cfg)).unwrap(), cfg);
        let h = GenericEntryTable::from_fn(2, |i, j| rat(i as i64 + 1, j as i64 + 2));
        assert_eq!(table_from_json::<Rational>(&table_to_json(&h)).unwrap(), h);
    }
}
