//! Verification reports and their JSON, CSV and Markdown renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::{Error, Result};

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// short tag naming the statement being checked
    pub theorem: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, theorem: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            theorem: theorem.to_string(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    /// A check whose pass state is decided by the caller.
    pub fn judged(name: impl Into<String>, theorem: &str, expected: impl ToString, actual: impl ToString, pass: bool) -> Self {
        Check {
            name: name.into(),
            theorem: theorem.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: Map<String, Value>,
    pub checks: Vec<Check>,
    pub wall_time_ms: Option<u64>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            other => Err(Error::Parse(format!("unknown format {other:?} (json, csv, md)"))),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn render(reports: &[SuiteReport], format: Format) -> String {
    match format {
        Format::Json => {
            let v = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(reports)
            };
            let mut s = serde_json::to_string_pretty(&v.expect("reports serialize")).expect("value prints");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("suite,name,theorem,expected,actual,pass\n");
            for r in reports {
                for c in &r.checks {
                    let row = [r.suite.as_str(), &c.name, &c.theorem, &c.expected, &c.actual, if c.pass { "true" } else { "false" }];
                    let row: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                    s.push_str(&row.join(","));
                    s.push('\n');
                }
            }
            s
        }
        Format::Md => {
            let mut s = String::new();
            for r in reports {
                let status = if r.pass() { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "## {} ({status})\n", r.suite);
                let cfg: Vec<String> = r.config.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(s, "config: {}\n", cfg.join(" "));
                s.push_str("| check | tag | expected | actual | result |\n|---|---|---|---|---|\n");
                for c in &r.checks {
                    let _ = writeln!(
                        s,
                        "| {} | {} | {} | {} | {} |",
                        md_cell(&c.name),
                        md_cell(&c.theorem),
                        md_cell(&c.expected),
                        md_cell(&c.actual),
                        if c.pass { "PASS" } else { "FAIL" }
                    );
                }
                if let Some(ms) = r.wall_time_ms {
                    let _ = writeln!(s, "\nwall time: {ms} ms");
                }
                s.push('\n');
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SuiteReport {
        let mut config = Map::new();
        config.insert("n".into(), Value::from(vec![2, 3]));
        SuiteReport {
            suite: "brauer".into(),
            config,
            checks: vec![Check::new("count n=3", "diagram-count", 15, 15), Check::new("a,b", "x", "1", "2")],
            wall_time_ms: None,
        }
    }

    #[test]
    fn renderings() {
        let r = sample();
        assert!(!r.pass());
        let json: Value = serde_json::from_str(&render(std::slice::from_ref(&r), Format::Json)).unwrap();
        assert_eq!(json["checks"][0]["pass"], Value::Bool(true));
        assert_eq!(json["wall_time_ms"], Value::Null);
        let csv = render(std::slice::from_ref(&r), Format::Csv);
        assert_eq!(csv.lines().nth(2).unwrap(), "brauer,\"a,b\",x,1,2,false");
        let md = render(&[r], Format::Md);
        assert!(md.contains("## brauer (FAIL)") && md.contains("| count n=3 | diagram-count | 15 | 15 | PASS |"));
        assert_eq!("MD".parse::<Format>().unwrap(), Format::Md);
        assert!("xml".parse::<Format>().is_err());
    }
}
