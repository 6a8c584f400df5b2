//! JSON file formats and inline literals.
//!
//! Quiver: `{"n": 3, "arrows": [[1,2],[2,3]]}`, or `{"cartan": [[...]], "arrows": [...]}`
//! with the arrow multiplicities checked against `-a_ij`. A bare
//! `{"cartan": [[...]]}` describes a graph only.
//!
//! Representation: `{"quiver": {...}, "dims": [...], "maps": [{"arrow": k,
//! "matrix": [[...]]}]}` where `k` is the 0-based index into `arrows`.
//! Arrows without an entry carry the zero map. Entries are JSON integers or
//! strings `"p"` / `"p/q"`.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Graph, Quiver};
use crate::rep::{Matrix, Rational, Representation};

#[derive(Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrows: Option<Vec<[usize; 2]>>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub arrow: usize,
    pub matrix: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub quiver: QuiverFile,
    pub dims: Vec<usize>,
    #[serde(default)]
    pub maps: Vec<MapEntry>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

impl QuiverFile {
    pub fn to_quiver(&self) -> Result<Quiver> {
        let arrows: Vec<(usize, usize)> = self
            .arrows
            .as_ref()
            .ok_or_else(|| Error::Parse("quiver needs \"arrows\"".into()))?
            .iter()
            .map(|&[s, e]| (s, e))
            .collect();
        match (&self.cartan, self.n) {
            (Some(a), n) => {
                if n.is_some_and(|n| n != a.len()) {
                    return Err(Error::Parse(format!("\"n\" disagrees with a {0}x{0} Cartan matrix", a.len())));
                }
                Quiver::new(Graph::from_cartan(a)?, arrows)
            }
            (None, Some(n)) => Quiver::from_arrows(n, &arrows),
            (None, None) => Err(Error::Parse("quiver needs \"n\" or \"cartan\"".into())),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        match (&self.cartan, &self.arrows) {
            (Some(a), None) => Graph::from_cartan(a),
            _ => Ok(self.to_quiver()?.graph().clone()),
        }
    }

    pub fn of_quiver(q: &Quiver) -> Self {
        QuiverFile {
            n: Some(q.n()),
            cartan: None,
            arrows: Some(q.arrows().iter().map(|&(s, e)| [s, e]).collect()),
        }
    }
}

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    from_json::<QuiverFile>(text)?.to_quiver()
}

/// Accepts a bare Cartan file or any quiver file.
pub fn parse_graph(text: &str) -> Result<Graph> {
    from_json::<QuiverFile>(text)?.to_graph()
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    serde_json::to_value(QuiverFile::of_quiver(q)).expect("serializable")
}

pub fn cartan_to_json(g: &Graph) -> Value {
    serde_json::json!({ "cartan": g.cartan() })
}

pub fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(BigInt::from(i)))
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer; use a \"p/q\" string"))),
        Value::String(s) => {
            let bad = || Error::Parse(format!("bad rational {s:?}"));
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p.trim(), q.trim()),
                None => (s.trim(), "1"),
            };
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        other => Err(Error::Parse(format!("bad rational {other}"))),
    }
}

/// Small integers become JSON numbers; everything else a `"p/q"` string.
pub fn rational_to_json(x: &Rational) -> Value {
    if x.denom().is_one() {
        if let Some(i) = x.numer().to_i64() {
            return Value::from(i);
        }
        return Value::String(x.numer().to_string());
    }
    Value::String(format!("{}/{}", x.numer(), x.denom()))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        m.row_vecs()
            .iter()
            .map(|r| Value::Array(r.iter().map(rational_to_json).collect()))
            .collect(),
    )
}

impl RepresentationFile {
    pub fn to_representation(&self) -> Result<Representation> {
        let quiver = Arc::new(self.quiver.to_quiver()?);
        self.to_representation_on(quiver)
    }

    /// Like [`RepresentationFile::to_representation`], but checks the
    /// embedded quiver against `quiver` and shares it.
    pub fn to_representation_on(&self, quiver: Arc<Quiver>) -> Result<Representation> {
        if self.quiver.to_quiver()? != *quiver {
            return Err(Error::QuiverMismatch);
        }
        if self.dims.len() != quiver.n() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                self.dims.len(),
                quiver.n()
            )));
        }
        let mut maps: Vec<Option<Matrix>> = vec![None; quiver.arrows().len()];
        for entry in &self.maps {
            let slot = maps
                .get_mut(entry.arrow)
                .ok_or_else(|| Error::Parse(format!("arrow index {} out of range", entry.arrow)))?;
            if slot.is_some() {
                return Err(Error::Parse(format!("arrow {} given twice", entry.arrow)));
            }
            let (s, e) = quiver.arrows()[entry.arrow];
            let (rows, cols) = (self.dims[e - 1], self.dims[s - 1]);
            if entry.matrix.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs {rows} rows, got {}",
                    entry.arrow,
                    entry.matrix.len()
                )));
            }
            let parsed = entry
                .matrix
                .iter()
                .map(|r| r.iter().map(parse_rational).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let m = Matrix::from_rows(parsed, cols).ok_or_else(|| {
                Error::DimensionMismatch(format!("arrow {} needs {cols} columns in every row", entry.arrow))
            })?;
            *slot = Some(m);
        }
        let maps = maps
            .into_iter()
            .zip(quiver.arrows())
            .map(|(m, &(s, e))| m.unwrap_or_else(|| Matrix::zeros(self.dims[e - 1], self.dims[s - 1])))
            .collect();
        Representation::new(quiver, self.dims.clone(), maps)
    }
}

pub fn parse_representation(text: &str) -> Result<Representation> {
    from_json::<RepresentationFile>(text)?.to_representation()
}

/// Parses a representation file whose quiver must equal `quiver`.
pub fn parse_representation_on(text: &str, quiver: Arc<Quiver>) -> Result<Representation> {
    from_json::<RepresentationFile>(text)?.to_representation_on(quiver)
}

/// Every arrow is listed, including zero maps.
pub fn representation_to_json(m: &Representation) -> Value {
    let maps: Vec<Value> = m
        .maps()
        .iter()
        .enumerate()
        .map(|(k, a)| serde_json::json!({ "arrow": k, "matrix": matrix_to_json(a) }))
        .collect();
    serde_json::json!({
        "quiver": quiver_to_json(m.quiver()),
        "dims": m.dims(),
        "maps": maps,
    })
}

/// Comma-separated vertex ids; `""` and `"-"` denote the empty list.
pub fn parse_letters(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "-" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex {p:?} in {text:?}")))
        })
        .collect()
}
