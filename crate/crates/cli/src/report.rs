use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::CliError;

/// One checked claim in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    #[serde(rename = "ref")]
    pub reference: String,
    pub pass: bool,
}

/// A row of integer cells with an optional text label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub cells: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    /// Header of the label column, present iff rows carry labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
    /// Whether the table is part of the TSV rendering.
    #[serde(skip)]
    pub tsv: bool,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table { name: name.into(), label: None, columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new(), tsv: true }
    }

    pub fn labeled(name: &str, label: &str, columns: &[&str]) -> Self {
        Table { label: Some(label.into()), ..Table::new(name, columns) }
    }

    pub fn json_only(mut self) -> Self {
        self.tsv = false;
        self
    }

    pub fn push(&mut self, cells: Vec<i64>) {
        self.rows.push(Row { label: None, cells });
    }

    pub fn push_labeled(&mut self, label: impl Into<String>, cells: Vec<i64>) {
        self.rows.push(Row { label: Some(label.into()), cells });
    }

    pub fn column(&self, name: &str) -> Option<Vec<i64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r.cells[k]).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub tables: Vec<Table>,
    pub assertions: Vec<Assertion>,
    pub duration_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), params: Map::new(), tables: Vec::new(), assertions: Vec::new(), duration_ms: 0 }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.into(), value.into());
    }

    pub fn check(&mut self, reference: impl Into<String>, pass: bool) {
        self.assertions.push(Assertion { reference: reference.into(), pass });
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.assertions.iter().filter(|a| !a.pass).map(|a| a.reference.as_str()).collect()
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn assertion(&self, reference: &str) -> Option<bool> {
        self.assertions.iter().find(|a| a.reference == reference).map(|a| a.pass)
    }

    /// Tab-separated tables, LF line endings. A `# name` line precedes each
    /// table when more than one is emitted.
    pub fn to_tsv(&self) -> String {
        let tables: Vec<&Table> = self.tables.iter().filter(|t| t.tsv).collect();
        let mut out = String::new();
        for (k, t) in tables.iter().enumerate() {
            if tables.len() > 1 {
                if k > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "# {}", t.name);
            }
            let mut header: Vec<&str> = Vec::new();
            if let Some(l) = &t.label {
                header.push(l);
            }
            header.extend(t.columns.iter().map(String::as_str));
            let _ = writeln!(out, "{}", header.join("\t"));
            for r in &t.rows {
                let mut cells: Vec<String> = Vec::new();
                if t.label.is_some() {
                    cells.push(r.label.clone().unwrap_or_default());
                }
                cells.extend(r.cells.iter().map(i64::to_string));
                let _ = writeln!(out, "{}", cells.join("\t"));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.to_tsv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn write(&self, format: Format, out: Option<&Path>) -> Result<(), CliError> {
        let text = self.render(format);
        match out {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e.to_string())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io("stdout".into(), e.to_string()))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}`, expected tsv or json")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_single_table_has_no_name_line() {
        let mut r = Report::new("t");
        let mut t = Table::new("x", &["wl", "dim"]);
        t.push(vec![2, 1]);
        r.tables.push(t);
        r.tables.push(Table::labeled("hidden", "basis", &["wl"]).json_only());
        assert_eq!(r.to_tsv(), "wl\tdim\n2\t1\n");
    }

    #[test]
    fn tsv_multiple_tables_are_named() {
        let mut r = Report::new("t");
        let mut t = Table::labeled("gens", "name", &["degree"]);
        t.push_labeled("a", vec![3]);
        r.tables.push(t);
        let mut u = Table::new("h", &["degree", "dim"]);
        u.push(vec![3, 2]);
        r.tables.push(u);
        assert_eq!(r.to_tsv(), "# gens\nname\tdegree\na\t3\n\n# h\ndegree\tdim\n3\t2\n");
    }

    #[test]
    fn json_uses_ref_key() {
        let mut r = Report::new("t");
        r.check("claim", false);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["assertions"][0]["ref"], "claim");
        assert_eq!(v["assertions"][0]["pass"], false);
        assert!(!r.all_pass());
    }
}
