use std::fmt::Display;

use clap::ValueEnum;
use greenfn::exactalg::Json;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "greenfn/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Table,
}

/// A titled grid of strings for the text formats.
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// Square matrix with rows and columns labelled by `labels`.
    pub fn matrix<T: Display>(title: &str, labels: &[String], m: &[Vec<T>]) -> Self {
        Self::labelled(title, labels, labels, m)
    }

    pub fn labelled<T: Display>(
        title: &str,
        rows: &[String],
        cols: &[String],
        m: &[Vec<T>],
    ) -> Self {
        let mut header = vec![String::new()];
        header.extend(cols.iter().cloned());
        Table {
            title: title.to_string(),
            header,
            rows: rows
                .iter()
                .zip(m)
                .map(|(l, r)| {
                    std::iter::once(l.clone())
                        .chain(r.iter().map(|x| x.to_string()))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Output of one command: a JSON document plus its text rendering.
pub struct Report {
    pub json: Map<String, Value>,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut json = Map::new();
        json.insert("schema".into(), json!(SCHEMA));
        json.insert("command".into(), json!(command));
        Report {
            json,
            tables: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.json.insert(key.into(), v);
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => {
                serde_json::to_string_pretty(&Value::Object(self.json.clone())).expect("valid JSON")
                    + "\n"
            }
            Format::Tsv => self
                .tables
                .iter()
                .map(|t| {
                    let mut s = format!("# {}\n", t.title);
                    for r in std::iter::once(&t.header).chain(&t.rows) {
                        s += &r.join("\t");
                        s.push('\n');
                    }
                    s
                })
                .collect::<Vec<_>>()
                .join("\n"),
            Format::Table => self
                .tables
                .iter()
                .map(aligned)
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

fn aligned(t: &Table) -> String {
    let cols = t.header.len();
    let width: Vec<usize> = (0..cols)
        .map(|c| {
            std::iter::once(&t.header)
                .chain(&t.rows)
                .map(|r| r.get(c).map_or(0, |x| x.chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |r: &Vec<String>| {
        let cells: Vec<String> = r
            .iter()
            .zip(&width)
            .map(|(x, w)| format!("{x:<w$}"))
            .collect();
        cells.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = format!("{}\n", t.title);
    s += &line(&t.header);
    s += &(width
        .iter()
        .map(|w| "-".repeat(*w))
        .collect::<Vec<_>>()
        .join("  ")
        + "\n");
    for r in &t.rows {
        s += &line(r);
    }
    s
}

/// Row-major sparse entries `{"row", "col", "value"}` of the nonzero cells.
pub fn sparse<T: Json + num_traits::Zero>(m: &[Vec<T>]) -> Value {
    let mut out = Vec::new();
    for (i, r) in m.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            if !x.is_zero() {
                out.push(json!({ "row": i, "col": j, "value": x.to_json() }));
            }
        }
    }
    json!({ "rows": m.len(), "cols": m.first().map_or(0, Vec::len), "entries": out })
}
