//! Machine-readable reports: a pretty-printed JSON document with one record
//! per check and a summary line.
//!
//! The document depends only on the inputs and the seed, apart from the
//! `elapsed_us` field of each record; [`zero_timings`] blanks it for
//! comparisons.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::closure::{CheckReport, ClosureStructure, LevelWitness, ValueWitness, Witness};
use crate::format::subset_name;
use crate::quantale::Quantale;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A failure under unmet hypotheses; does not affect the exit status.
    Finding,
    /// A computed value with no verdict attached.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub check: String,
    pub verdict: Status,
    pub witnesses: Vec<Value>,
    pub data: Value,
    pub elapsed_us: u64,
}

impl Record {
    pub fn new(check: impl Into<String>, verdict: Status) -> Self {
        Record { check: check.into(), verdict, witnesses: Vec::new(), data: Value::Null, elapsed_us: 0 }
    }

    pub fn info(check: impl Into<String>, data: Value) -> Self {
        Record::new(check, Status::Info).with_data(data)
    }

    pub fn verdict(check: impl Into<String>, passed: bool) -> Self {
        Record::new(check, if passed { Status::Pass } else { Status::Fail })
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = data;
        self
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn timed(mut self, since: Instant) -> Self {
        self.elapsed_us = since.elapsed().as_micros() as u64;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub records: Vec<Record>,
}

#[derive(Serialize)]
struct Document<'a> {
    command: &'a str,
    records: &'a [Record],
    summary: String,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), records: Vec::new() }
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.verdict == s).count()
    }

    pub fn failed(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{} records: {} passed, {} failed, {} findings, {} info",
            self.records.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Finding),
            self.count(Status::Info)
        )
    }

    /// Appends one record per entry of `r`, prefixing names with `prefix`.
    /// Failures of an exploratory report become findings.
    pub fn push_checks(&mut self, prefix: &str, r: &CheckReport, names: &Names, since: Instant) {
        let elapsed = since.elapsed().as_micros() as u64;
        for e in &r.entries {
            let verdict = match (e.passed, r.exploratory) {
                (true, _) => Status::Pass,
                (false, false) => Status::Fail,
                (false, true) => Status::Finding,
            };
            let mut rec = Record::new(format!("{prefix}{}", e.name), verdict);
            if let Some(w) = &e.witness {
                rec.witnesses.push(names.witness(w));
            }
            if let Some(n) = &e.note {
                rec.data = json!({ "note": n });
            }
            rec.elapsed_us = elapsed;
            self.records.push(rec);
        }
    }
}

pub fn write_report(r: &Report) -> String {
    let doc = Document { command: &r.command, records: &r.records, summary: r.summary() };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

/// Sets every `elapsed_us` field in a report document to zero.
pub fn zero_timings(doc: &str) -> Result<String, serde_json::Error> {
    fn walk(v: &mut Value) {
        match v {
            Value::Object(m) => {
                for (k, x) in m.iter_mut() {
                    if k == "elapsed_us" {
                        *x = Value::from(0);
                    } else {
                        walk(x);
                    }
                }
            }
            Value::Array(a) => a.iter_mut().for_each(walk),
            _ => {}
        }
    }
    let mut v: Value = serde_json::from_str(doc)?;
    walk(&mut v);
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

/// Point and element names used when rendering witnesses.
pub struct Names<'a> {
    pub points: &'a [String],
    pub quantale: &'a Quantale,
}

impl<'a> Names<'a> {
    pub fn new(points: &'a [String], quantale: &'a Quantale) -> Self {
        Names { points, quantale }
    }

    fn set(&self, a: crate::Subset) -> String {
        subset_name(self.points, a)
    }

    fn elem(&self, e: crate::Elem) -> &str {
        self.quantale.name(e)
    }

    pub fn witness(&self, w: &Witness) -> Value {
        match w {
            Witness::Value(v) => self.value_witness(v),
            Witness::Level(l) => self.level_witness(l),
            Witness::Text(t) => Value::String(t.clone()),
        }
    }

    pub fn value_witness(&self, w: &ValueWitness) -> Value {
        let mut v = json!({
            "law": w.law,
            "A": self.set(w.a),
            "x": self.points[w.x],
            "lhs": self.elem(w.lhs),
            "rhs": self.elem(w.rhs),
            "relation": w.relation.to_string(),
        });
        if let Some(b) = w.b {
            v["B"] = Value::String(self.set(b));
        }
        v
    }

    pub fn level_witness(&self, w: &LevelWitness) -> Value {
        let mut v = json!({
            "condition": w.condition,
            "A": self.set(w.a),
            "x": self.points[w.point],
        });
        if let Some(b) = w.b {
            v["B"] = Value::String(self.set(b));
        }
        if let Some(e) = w.v {
            v["v"] = Value::String(self.elem(e).to_string());
        }
        if let Some(e) = w.u {
            v["u"] = Value::String(self.elem(e).to_string());
        }
        if !w.us.is_empty() {
            v["u_i"] = w.us.iter().map(|&e| self.elem(e)).collect();
        }
        v
    }

    /// The table as `[subset, [value per point]]` pairs in subset order.
    pub fn table(&self, c: &ClosureStructure) -> Value {
        crate::Subset::all(c.points())
            .map(|a| json!([self.set(a), c.row(a).iter().map(|&e| self.elem(e)).collect::<Vec<_>>()]))
            .collect()
    }
}
