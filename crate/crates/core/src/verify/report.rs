//! Verification records, JSON-lines output and CSV summaries.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::Result;

/// Rounds to 15 significant digits; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    json!(rounded)
}

/// One check. `params` and the two values are free-form JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub harness: String,
    pub params: Value,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    pub tol: Option<f64>,
}

impl Record {
    pub fn new(harness: &str, params: Value, expected: Value, observed: Value, pass: bool) -> Self {
        Record { harness: harness.to_string(), params, expected, observed, pass, tol: None }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = Some(tol);
        self
    }

    /// Sort key: the serialized parameter object.
    fn key(&self) -> String {
        self.params.to_string()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub harness: String,
    pub grid: Value,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<Record>,
    /// Findings that are not pass/fail checks, e.g. sharpness witnesses.
    pub notes: Map<String, Value>,
    pub skipped: usize,
    pub wall_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(harness: &str, grid: Value) -> Self {
        VerificationReport {
            harness: harness.to_string(),
            grid,
            checked: 0,
            passed: 0,
            failed: 0,
            records: Vec::new(),
            notes: Map::new(),
            skipped: 0,
            wall_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn push(&mut self, record: Record) {
        self.checked += 1;
        if record.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.records.push(record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = Record>) {
        for r in records {
            self.push(r);
        }
    }

    pub fn note(&mut self, key: &str, value: Value) {
        self.notes.insert(key.to_string(), value);
    }

    pub fn is_pass(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// Orders records by parameter key (stable, so equal keys keep their
    /// insertion order) and stamps the wall time.
    pub fn finish(mut self) -> Self {
        self.records.sort_by_cached_key(Record::key);
        if let Some(t) = self.started.take() {
            self.wall_ms = t.elapsed().as_millis();
        }
        self
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.records.extend(other.records);
        for (k, v) in other.notes {
            self.notes.insert(format!("{}.{k}", other.harness), v);
        }
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    /// One row per distinct `harness` value among the records.
    pub fn write_csv_summary<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["harness", "checked", "passed", "failed", "skipped", "wall_ms"])?;
        let mut names: Vec<&str> = self.records.iter().map(|r| r.harness.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        for name in names {
            let rows = self.records.iter().filter(|r| r.harness == name);
            let (checked, passed) = rows.fold((0, 0), |(c, p), r| (c + 1, p + r.pass as usize));
            out.write_record([
                name.to_string(),
                checked.to_string(),
                passed.to_string(),
                (checked - passed).to_string(),
                String::new(),
                String::new(),
            ])?;
        }
        out.write_record([
            format!("{} (total)", self.harness),
            self.checked.to_string(),
            self.passed.to_string(),
            self.failed.to_string(),
            self.skipped.to_string(),
            self.wall_ms.to_string(),
        ])?;
        out.flush()?;
        Ok(())
    }

    /// Compact summary without the per-check records.
    pub fn summary(&self) -> Value {
        json!({
            "harness": self.harness,
            "grid": self.grid,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "wall_ms": self.wall_ms as u64,
            "notes": self.notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(num(1.0 / 3.0), json!(0.333333333333333));
        assert_eq!(num(17.006_612_345_678_912), json!(17.0066123456789));
        assert_eq!(num(f64::NAN), Value::Null);
        assert_eq!(num(2.0), json!(2.0));
    }

    #[test]
    fn counting_and_output() {
        let mut r = VerificationReport::new("demo", json!({"n": [5]}));
        r.push(Record::new("demo", json!({"n": 6}), json!(true), json!(true), true));
        r.push(Record::new("demo", json!({"n": 5}), json!(1), num(1.5), false).with_tol(1e-9));
        assert!(!r.is_pass());
        let r = r.finish();
        assert_eq!(r.records[0].params, json!({"n": 5}));
        let mut lines = Vec::new();
        r.write_jsonl(&mut lines).unwrap();
        let text = String::from_utf8(lines).unwrap();
        let parsed: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0]["tol"], json!(1e-9));
        let mut csv_out = Vec::new();
        r.write_csv_summary(&mut csv_out).unwrap();
        let csv_text = String::from_utf8(csv_out).unwrap();
        assert!(csv_text.starts_with("harness,checked,passed,failed"));
        assert!(csv_text.contains("demo,2,1,1"));
    }
}
