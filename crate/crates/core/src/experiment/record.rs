//! Output records and their CSV / JSON forms.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    #[default]
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Usage(format!("unknown format {other:?}; expected csv or json"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Marker {
    #[serde(rename = "exact")]
    Exact,
}

/// Error budget attached to a result: an absolute bound, or `"exact"` for
/// closed forms evaluated without truncation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Budget {
    Bound(f64),
    Marker(Marker),
}

impl Budget {
    pub const EXACT: Budget = Budget::Marker(Marker::Exact);

    fn render(&self) -> String {
        match self {
            Budget::Bound(v) => format_float(*v),
            Budget::Marker(Marker::Exact) => "exact".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub observed: f64,
    pub allowed: f64,
    pub pass: bool,
}

/// One row of a figure or sweep data section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DataRow {
    pub x: f64,
    pub series: String,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub results: BTreeMap<String, f64>,
    pub error_budget: BTreeMap<String, Budget>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckOutcome>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub data: Vec<DataRow>,
    pub timestamp: String,
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            error_budget: BTreeMap::new(),
            checks: Vec::new(),
            data: Vec::new(),
            timestamp: chrono::Utc::now().to_rfc3339(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<serde_json::Value>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    /// Results always enter together with their budget.
    pub fn result(&mut self, key: &str, value: f64, budget: Budget) -> &mut Self {
        self.results.insert(key.into(), value);
        self.error_budget.insert(key.into(), budget);
        self
    }

    pub fn check(&mut self, name: &str, observed: f64, allowed: f64) -> bool {
        let pass = observed.is_finite() && observed <= allowed;
        self.checks.push(CheckOutcome {
            name: name.into(),
            observed,
            allowed,
            pass,
        });
        pass
    }

    pub fn failed_check(&mut self, name: &str, message: &str) {
        self.input(&format!("failure.{name}"), message);
        self.checks.push(CheckOutcome {
            name: name.into(),
            observed: f64::INFINITY,
            allowed: 0.0,
            pass: false,
        });
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Every result has a budget entry, and the data section (if any) has one
    /// under the key `data`.
    pub fn is_schema_complete(&self) -> bool {
        self.results.keys().all(|k| self.error_budget.contains_key(k))
            && (self.data.is_empty() || self.error_budget.contains_key("data"))
    }

    /// Copy with the timestamp blanked, for reproducibility comparisons.
    pub fn without_timestamp(&self) -> Self {
        Self {
            timestamp: String::new(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// CSV view: the data section when present, else the checks, else the
    /// results table.
    pub fn to_csv(&self) -> Result<String> {
        if !self.data.is_empty() {
            return write_data_csv(&self.data);
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        if !self.checks.is_empty() {
            w.write_record(["check", "observed", "allowed", "pass"])?;
            for c in &self.checks {
                w.write_record([
                    c.name.clone(),
                    format_float(c.observed),
                    format_float(c.allowed),
                    c.pass.to_string(),
                ])?;
            }
        } else {
            w.write_record(["name", "value", "error_budget"])?;
            for (k, v) in &self.results {
                let budget = self.error_budget.get(k).map(Budget::render).unwrap_or_default();
                w.write_record([k.clone(), format_float(*v), budget])?;
            }
        }
        into_string(w)
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }

    /// Write to `path`, or stdout when `None`. One writer, after the record
    /// is complete.
    pub fn emit(&self, format: OutputFormat, path: Option<&Path>) -> Result<()> {
        let mut text = self.render(format)?;
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match path {
            Some(p) => std::fs::write(p, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

/// `x,series,y` table.
pub fn write_data_csv(rows: &[DataRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["x", "series", "y"])?;
    for r in rows {
        w.write_record([format_float(r.x), r.series.clone(), format_float(r.y)])?;
    }
    into_string(w)
}

pub fn parse_data_csv(text: &str) -> Result<Vec<DataRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["x", "series", "y"] {
        return Err(Error::Format(format!("unexpected data header {headers:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let num = |i: usize| -> Result<f64> {
            record[i]
                .parse()
                .map_err(|_| Error::Format(format!("bad number {:?}", &record[i])))
        };
        rows.push(DataRow {
            x: num(0)?,
            series: record[1].to_string(),
            y: num(2)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets_serialize_as_number_or_marker() {
        let mut r = OutputRecord::new("field");
        r.result("a", 4.0, Budget::EXACT).result("b", 1.5, Budget::Bound(1e-12));
        let json = r.to_json().unwrap();
        assert!(json.contains("\"a\": \"exact\""));
        assert!(json.contains("\"b\": 1e-12"));
        let back = OutputRecord::from_json(&json).unwrap();
        assert_eq!(back, r);
        assert!(r.is_schema_complete());
    }

    #[test]
    fn results_csv() {
        let mut r = OutputRecord::new("field");
        r.result("field", 4.0, Budget::EXACT);
        assert_eq!(
            r.to_csv().unwrap(),
            "name,value,error_budget\nfield,4.0000000000000000e0,exact\n"
        );
    }

    #[test]
    fn data_csv_round_trip() {
        let rows = vec![
            DataRow { x: 0.1, series: "inside".into(), y: -1.0 / 3.0 },
            DataRow { x: 1e-300, series: "outside".into(), y: 2.5e17 },
        ];
        let text = write_data_csv(&rows).unwrap();
        assert!(text.starts_with("x,series,y\n"));
        let parsed = parse_data_csv(&text).unwrap();
        assert_eq!(parsed, rows);
        assert_eq!(write_data_csv(&parsed).unwrap(), text);
        assert!(parse_data_csv("a,b\n1,2\n").is_err());
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!(matches!("xml".parse::<OutputFormat>(), Err(Error::Usage(_))));
    }
}
