//! Text and JSON renderings of a Betti table with its invariants.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use chordal_betti::BettiTable;

/// An invariant value as it appears in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvValue {
    Int(BigInt),
    Bool(bool),
    Text(String),
}

impl From<i64> for InvValue {
    fn from(v: i64) -> Self {
        InvValue::Int(v.into())
    }
}

impl From<usize> for InvValue {
    fn from(v: usize) -> Self {
        InvValue::Int(v.into())
    }
}

impl From<BigInt> for InvValue {
    fn from(v: BigInt) -> Self {
        InvValue::Int(v)
    }
}

impl From<bool> for InvValue {
    fn from(v: bool) -> Self {
        InvValue::Bool(v)
    }
}

impl From<String> for InvValue {
    fn from(v: String) -> Self {
        InvValue::Text(v)
    }
}

impl InvValue {
    fn to_json(&self) -> Value {
        match self {
            InvValue::Int(v) => Value::Number(big_number(v)),
            InvValue::Bool(b) => Value::Bool(*b),
            InvValue::Text(s) => Value::String(s.clone()),
        }
    }

    fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::Number(n) => parse_big(n).map(InvValue::Int),
            Value::Bool(b) => Ok(InvValue::Bool(*b)),
            Value::String(s) => Ok(InvValue::Text(s.clone())),
            other => Err(format!("unsupported invariant value {other}")),
        }
    }

    fn to_text(&self) -> String {
        match self {
            InvValue::Int(v) => v.to_string(),
            InvValue::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
            InvValue::Text(s) => s.clone(),
        }
    }
}

/// A Betti table together with named invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub table: BettiTable,
    pub invariants: BTreeMap<String, InvValue>,
}

fn big_number(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("decimal integers are valid JSON numbers")
}

fn parse_big(n: &Number) -> Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|_| format!("not an integer: {n}"))
}

/// Macaulay2-style table: one row per `j - i` from 0 to the regularity,
/// one column per homological degree, `.` for zero.
pub fn render_table(table: &BettiTable) -> String {
    let pdim = table.proj_dim();
    let reg = table.regularity();
    let mut labels = vec![String::new(), "total:".to_string()];
    let mut cells: Vec<Vec<String>> = vec![
        (0..=pdim).map(|i| i.to_string()).collect(),
        table.totals().iter().map(BigInt::to_string).collect(),
    ];
    for r in 0..=reg {
        labels.push(format!("{r}:"));
        cells.push(
            (0..=pdim)
                .map(|i| {
                    let v = table.get(i, i + r);
                    if v == BigInt::from(0) {
                        ".".to_string()
                    } else {
                        v.to_string()
                    }
                })
                .collect(),
        );
    }
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..=pdim)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for (label, row) in labels.iter().zip(&cells) {
        let mut line = format!("{label:>label_width$}");
        for (cell, w) in row.iter().zip(&widths) {
            line.push_str(&format!(" {cell:>w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_report_text(title: &str, report: &Report) -> String {
    let mut out = format!("{title}\n\n");
    out.push_str(&render_table(&report.table));
    if !report.invariants.is_empty() {
        out.push('\n');
        let width = report.invariants.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &report.invariants {
            out.push_str(&format!("{:<width$}  {}\n", format!("{k}:"), v.to_text(), width = width + 1));
        }
    }
    out
}

pub fn report_to_json(report: &Report) -> Value {
    let entries = report
        .table
        .entries()
        .map(|(i, j, v)| Value::Array(vec![i.into(), j.into(), Value::Number(big_number(v))]))
        .collect();
    let invariants: Map<String, Value> = report
        .invariants
        .iter()
        .map(|(k, v)| (k.clone(), v.to_json()))
        .collect();
    let mut root = Map::new();
    root.insert("entries".into(), Value::Array(entries));
    root.insert("invariants".into(), Value::Object(invariants));
    root.insert("n_vars".into(), report.table.n_vars().into());
    Value::Object(root)
}

/// One-line JSON with sorted keys and entries sorted by `(i, j)`.
pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string(&report_to_json(report)).expect("serializable");
    s.push('\n');
    s
}

fn as_index(v: &Value) -> Result<usize, String> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| format!("bad index {v}"))
}

pub fn parse_json(text: &str) -> Result<Report, String> {
    let root: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let n_vars = as_index(root.get("n_vars").ok_or("missing n_vars")?)?;
    let mut table = BettiTable::new(n_vars);
    let entries = root
        .get("entries")
        .and_then(Value::as_array)
        .ok_or("missing entries")?;
    for e in entries {
        match e.as_array().map(Vec::as_slice) {
            Some([i, j, Value::Number(v)]) => {
                table
                    .insert_checked(as_index(i)?, as_index(j)?, parse_big(v)?)
                    .map_err(|e| e.to_string())?;
            }
            _ => return Err(format!("bad entry {e}")),
        }
    }
    let mut invariants = BTreeMap::new();
    if let Some(obj) = root.get("invariants").and_then(Value::as_object) {
        for (k, v) in obj {
            invariants.insert(k.clone(), InvValue::from_json(v)?);
        }
    }
    Ok(Report { table, invariants })
}
