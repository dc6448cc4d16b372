//! Rendering triangles, sequences, and verification reports.
//!
//! Four output formats:
//!
//! - `text`: aligned lower-triangular block (triangles) or one
//!   space-separated line (sequences),
//! - `csv`: header row then one record per entry,
//! - `json`: a single object; big integers are emitted as exact decimal
//!   number literals, rationals as `"p/q"` strings, polynomials as
//!   ascending coefficient lists,
//! - `bfile`: OEIS-style `n a(n)` lines with a configurable starting
//!   index; triangles are flattened row by row. Integer values only.

use serde_json::{Map, Number, Value};

use crate::exact::{BigInt, IntPoly, Ratio, Ring};
use crate::identities::IdentityReport;
use crate::riordan::Triangle;

/// How one coefficient value appears in each output format.
pub trait Cell: Clone {
    /// Entry kind tag recorded in JSON output.
    const KIND: &'static str;

    fn text(&self) -> String;
    fn json(&self) -> Value;
    /// The value as an integer, if it is one; `bfile` output requires it.
    fn as_integer(&self) -> Option<BigInt>;
}

fn json_int(v: &BigInt) -> Value {
    let n: Number = serde_json::from_str(&v.to_string()).expect("integer literal");
    Value::Number(n)
}

impl Cell for BigInt {
    const KIND: &'static str = "integer";

    fn text(&self) -> String {
        self.to_string()
    }

    fn json(&self) -> Value {
        json_int(self)
    }

    fn as_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl Cell for Ratio {
    const KIND: &'static str = "rational";

    fn text(&self) -> String {
        match self.as_integer() {
            Some(n) => n.to_string(),
            None => format!("{}/{}", self.numer(), self.denom()),
        }
    }

    fn json(&self) -> Value {
        match self.as_integer() {
            Some(n) => json_int(&n),
            None => Value::String(self.text()),
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        (*self.denom() == BigInt::from(1)).then(|| self.numer().clone())
    }
}

impl Cell for IntPoly {
    const KIND: &'static str = "polynomial";

    fn text(&self) -> String {
        self.render("r")
    }

    fn json(&self) -> Value {
        if self.coeffs().is_empty() {
            return Value::Array(vec![json_int(&BigInt::from(0))]);
        }
        Value::Array(self.coeffs().iter().map(json_int).collect())
    }

    fn as_integer(&self) -> Option<BigInt> {
        self.is_constant().then(|| self.coeff(0))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.into()
    }
}

pub fn triangle_text<C: Cell + Ring>(t: &Triangle<C>) -> String {
    let texts: Vec<Vec<String>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(Cell::text).collect())
        .collect();
    let mut widths = vec![0usize; t.depth() + 1];
    for row in &texts {
        for (k, s) in row.iter().enumerate() {
            widths[k] = widths[k].max(s.len());
        }
    }
    let mut out = String::new();
    for row in &texts {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(k, s)| format!("{s:>width$}", width = widths[k]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn triangle_csv<C: Cell + Ring>(t: &Triangle<C>) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in t.rows().iter().enumerate() {
        for (k, cell) in row.iter().enumerate() {
            out.push_str(&format!("{n},{k},{}\n", csv_field(&cell.text())));
        }
    }
    out
}

pub fn triangle_json<C: Cell + Ring>(spec: &str, t: &Triangle<C>) -> String {
    let rows: Vec<Value> = t
        .rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(Cell::json).collect()))
        .collect();
    let mut obj = Map::new();
    obj.insert("array".into(), Value::String(spec.into()));
    obj.insert("depth".into(), Value::from(t.depth() as u64));
    obj.insert("entry".into(), Value::String(C::KIND.into()));
    obj.insert("rows".into(), Value::Array(rows));
    let mut s = serde_json::to_string(&Value::Object(obj)).expect("valid json");
    s.push('\n');
    s
}

pub fn triangle_bfile<C: Cell + Ring>(t: &Triangle<C>, offset: i64) -> Result<String, String> {
    let flat: Vec<&C> = t.rows().iter().flatten().collect();
    bfile_lines(flat.into_iter(), offset)
}

pub fn sequence_text<C: Cell>(values: &[C]) -> String {
    let mut out = values
        .iter()
        .map(Cell::text)
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

pub fn sequence_csv<C: Cell>(values: &[C]) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("{n},{}\n", csv_field(&v.text())));
    }
    out
}

pub fn sequence_json<C: Cell>(spec: &str, transform: &str, depth: usize, values: &[C]) -> String {
    let mut obj = Map::new();
    obj.insert("array".into(), Value::String(spec.into()));
    obj.insert("depth".into(), Value::from(depth as u64));
    obj.insert("entry".into(), Value::String(C::KIND.into()));
    obj.insert("transform".into(), Value::String(transform.into()));
    obj.insert(
        "values".into(),
        Value::Array(values.iter().map(Cell::json).collect()),
    );
    let mut s = serde_json::to_string(&Value::Object(obj)).expect("valid json");
    s.push('\n');
    s
}

pub fn sequence_bfile<C: Cell>(values: &[C], offset: i64) -> Result<String, String> {
    bfile_lines(values.iter(), offset)
}

fn bfile_lines<'a, C: Cell + 'a>(
    values: impl Iterator<Item = &'a C>,
    offset: i64,
) -> Result<String, String> {
    let mut out = String::new();
    for (i, v) in values.enumerate() {
        let n = v
            .as_integer()
            .ok_or_else(|| format!("b-file output requires integer values, found {}", v.text()))?;
        out.push_str(&format!("{} {}\n", offset + i as i64, n));
    }
    Ok(out)
}

pub fn report_text(r: &IdentityReport) -> String {
    let mut line = if r.passed() {
        String::from("pass ")
    } else {
        String::from("FAIL ")
    };
    line.push_str(&r.name);
    for (key, value) in &r.params {
        line.push_str(&format!(" {key}={value}"));
    }
    line.push_str(&format!(" depth={}", r.depth));
    if let Some(f) = &r.first_failure {
        match f.k {
            Some(k) => line.push_str(&format!(" at n={} k={}:", f.n, k)),
            None => line.push_str(&format!(" at n={}:", f.n)),
        }
        line.push_str(&format!(" {} != {}", f.lhs, f.rhs));
    }
    line.push('\n');
    line
}

pub fn reports_json(reports: &[IdentityReport]) -> String {
    let items: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut obj = Map::new();
            obj.insert("name".into(), Value::String(r.name.clone()));
            obj.insert("depth".into(), Value::from(r.depth as u64));
            let mut params = Map::new();
            for (key, value) in &r.params {
                params.insert(key.clone(), Value::String(value.clone()));
            }
            obj.insert("params".into(), Value::Object(params));
            obj.insert(
                "status".into(),
                Value::String(if r.passed() { "pass" } else { "fail" }.into()),
            );
            let failure = match &r.first_failure {
                None => Value::Null,
                Some(f) => {
                    let mut fo = Map::new();
                    fo.insert("n".into(), Value::from(f.n as u64));
                    fo.insert(
                        "k".into(),
                        f.k.map_or(Value::Null, |k| Value::from(k as u64)),
                    );
                    fo.insert("lhs".into(), Value::String(f.lhs.clone()));
                    fo.insert("rhs".into(), Value::String(f.rhs.clone()));
                    Value::Object(fo)
                }
            };
            obj.insert("first_failure".into(), failure);
            Value::Object(obj)
        })
        .collect();
    let mut s = serde_json::to_string(&Value::Array(items)).expect("valid json");
    s.push('\n');
    s
}
