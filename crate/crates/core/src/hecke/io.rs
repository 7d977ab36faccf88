//! JSON form of a module:
//!
//! ```json
//! {"datum": {"family": "A", "rank": 2, "k": ["1"]},
//!  "dim": 1, "t": {"s1": [["-1"]], "s2": [["-1"]]},
//!  "v": {"a1": [["-1"]], "a2": [["-1"]]}, "label": "St"}
//! ```
//!
//! Entries are strings `"p/q"` (plain integers are accepted as numbers too).
//! `t` may omit reflections, which makes the module one over `H_J`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::HModule;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{format_q, parse_q, Q};
use crate::rootsys::{Family, RootDatum};
use crate::weyl::WeylGroupTable;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumJson {
    pub family: String,
    pub rank: usize,
    #[serde(default)]
    pub k: Vec<Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleJson {
    pub datum: DatumJson,
    pub dim: usize,
    #[serde(default)]
    pub t: BTreeMap<String, Vec<Vec<Value>>>,
    pub v: BTreeMap<String, Vec<Vec<Value>>>,
    #[serde(default)]
    pub label: String,
}

fn entry(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => parse_q(&n.to_string()),
        other => Err(Error::Parse(format!("matrix entry {other} is not a rational"))),
    }
}

fn matrix_from(rows: &[Vec<Value>], dim: usize, name: &str) -> Result<Matrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Dimension(format!("{name} must be {dim}×{dim}")));
    }
    let data = rows.iter().map(|r| r.iter().map(entry).collect()).collect::<Result<Vec<Vec<Q>>>>()?;
    Ok(Matrix::from_rows(data))
}

fn matrix_to(m: &Matrix) -> Vec<Vec<Value>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| Value::String(format_q(x))).collect()).collect()
}

fn generator_index(key: &str, prefix: char, n: usize) -> Result<usize> {
    let i: usize = key
        .strip_prefix(prefix)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad generator name {key:?}, expected {prefix}1..{prefix}{n}")))?;
    if i == 0 || i > n {
        return Err(Error::Parse(format!("generator {key} out of range")));
    }
    Ok(i - 1)
}

pub fn datum_from_json(d: &DatumJson) -> Result<RootDatum> {
    let family: Family = d.family.parse()?;
    let k = d.k.iter().map(entry).collect::<Result<Vec<_>>>()?;
    RootDatum::new(family, d.rank, &k)
}

pub fn datum_to_json(d: &RootDatum) -> DatumJson {
    DatumJson {
        family: d.family().to_string(),
        rank: d.rank(),
        k: d.k_per_orbit().iter().map(|x| Value::String(format_q(x))).collect(),
    }
}

pub fn to_json(x: &HModule) -> Value {
    let t = x.parabolic().iter().map(|&i| (format!("s{}", i + 1), matrix_to(x.t(i)))).collect();
    let v = (0..x.rank()).map(|a| (format!("a{}", a + 1), matrix_to(x.v(a)))).collect();
    let m = ModuleJson { datum: datum_to_json(x.datum()), dim: x.dim(), t, v, label: x.label().to_string() };
    serde_json::to_value(m).expect("module serializes")
}

/// Reads a module, building its Weyl group with the given enumeration cap,
/// and checks every relation.
pub fn from_json(value: &Value, cap: usize) -> Result<HModule> {
    let m: ModuleJson = serde_json::from_value(value.clone())?;
    let datum = Arc::new(datum_from_json(&m.datum)?);
    let table = Arc::new(WeylGroupTable::with_cap(datum, cap)?);
    from_json_on(&table, value)
}

/// Reads a module over an existing group table; the datum must agree.
pub fn from_json_on(table: &Arc<WeylGroupTable>, value: &Value) -> Result<HModule> {
    let m: ModuleJson = serde_json::from_value(value.clone())?;
    let datum = datum_from_json(&m.datum)?;
    if &datum != table.datum().as_ref() {
        return Err(Error::GroupMismatch(datum.name(), table.datum().name()));
    }
    let n = datum.rank();
    let mut j = Vec::new();
    let mut t = Vec::new();
    for (key, rows) in &m.t {
        j.push(generator_index(key, 's', n)?);
        t.push(matrix_from(rows, m.dim, key)?);
    }
    let mut v = vec![None; n];
    for (key, rows) in &m.v {
        v[generator_index(key, 'a', n)?] = Some(matrix_from(rows, m.dim, key)?);
    }
    let v = v
        .into_iter()
        .enumerate()
        .map(|(a, m)| m.ok_or_else(|| Error::Parse(format!("missing action of a{}", a + 1))))
        .collect::<Result<Vec<_>>>()?;
    let label = if m.label.is_empty() { "X".to_string() } else { m.label };
    HModule::validated(table.clone(), j, t, v, label)
}

pub fn parse_module(text: &str, cap: usize) -> Result<HModule> {
    from_json(&serde_json::from_str(text)?, cap)
}
