//! Verification reports and their JSON / CSV persistence.

use std::fs::File;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::orbit::{OrbitReport, Params};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub params: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
}

impl Claim {
    pub fn new(id: impl Into<String>, params: Value, counterexample: Option<Value>) -> Self {
        Claim {
            id: id.into(),
            params,
            pass: counterexample.is_none(),
            counterexample,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub claims: Vec<Claim>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Anything that can be written as JSON or flattened into CSV rows.
pub trait Exportable: Serialize {
    fn csv_header() -> &'static [&'static str];
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

impl Exportable for VerificationReport {
    fn csv_header() -> &'static [&'static str] {
        &["suite", "id", "params", "pass", "counterexample", "duration_ms"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.claims
            .iter()
            .map(|c| {
                vec![
                    self.suite.clone(),
                    c.id.clone(),
                    c.params.to_string(),
                    c.pass.to_string(),
                    c.counterexample.as_ref().map(Value::to_string).unwrap_or_default(),
                    self.duration_ms.to_string(),
                ]
            })
            .collect()
    }
}

impl Exportable for OrbitReport {
    fn csv_header() -> &'static [&'static str] {
        &["action", "ell", "q", "count", "orbit_sizes", "order", "checks"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let checks: Vec<String> = self.checks.iter().map(|(k, v)| format!("{k}={v}")).collect();
        vec![vec![
            self.action.clone(),
            self.params.ell.to_string(),
            self.params.q.to_string(),
            self.count.to_string(),
            join_sizes(&self.orbit_sizes),
            self.order.to_string(),
            checks.join(";"),
        ]]
    }
}

impl<T: Exportable> Exportable for Vec<T> {
    fn csv_header() -> &'static [&'static str] {
        T::csv_header()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.iter().flat_map(Exportable::csv_rows).collect()
    }
}

pub fn join_sizes(sizes: &[usize]) -> String {
    sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(";")
}

pub fn split_sizes(field: &str) -> Result<Vec<usize>> {
    if field.is_empty() {
        return Ok(vec![]);
    }
    field
        .split(';')
        .map(|s| s.parse().map_err(|_| Error::Input(format!("bad orbit size {s:?}"))))
        .collect()
}

pub fn to_csv_string<T: Exportable>(report: &T) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(T::csv_header()).map_err(io)?;
    for row in report.csv_rows() {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

pub fn export_report<T: Exportable>(report: &T, path: &Path, format: Format) -> Result<()> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => to_csv_string(report)?,
    };
    File::create(path)?.write_all(text.as_bytes())?;
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Input(e.to_string()))
}

/// Reads back the orbit rows of a CSV export.
pub fn read_orbit_csv(path: &Path) -> Result<Vec<OrbitReport>> {
    let mut r = csv::Reader::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::Input(e.to_string()))?;
        let num = |i: usize| -> Result<usize> {
            rec[i].parse().map_err(|_| Error::Input(format!("bad number {:?}", &rec[i])))
        };
        let checks = rec[6]
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|kv| {
                let (k, v) = kv.split_once('=').ok_or_else(|| Error::Input(kv.to_string()))?;
                Ok((k.to_string(), v == "true"))
            })
            .collect::<Result<_>>()?;
        out.push(OrbitReport {
            action: rec[0].to_string(),
            params: Params { ell: num(1)?, q: num(2)? },
            count: num(3)?,
            orbit_sizes: split_sizes(&rec[4])?,
            order: num(5)? as u64,
            checks,
        });
    }
    Ok(out)
}
