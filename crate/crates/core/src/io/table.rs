use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::classify::{OrbitRecord, TABLE_1, TABLE_2, TABLE_3};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            other => Err(Error::InvalidParameters(format!("unknown format {other:?}, expected json, csv or md"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Md => "md",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Column {
    pub name: String,
    /// Not part of the stored reference table; flagged in markdown output.
    pub extra: bool,
}

/// Rows of JSON scalars under named columns, plus an optional footer line.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Value>>,
    pub footer: Option<String>,
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(|name| Column { name: name.into(), extra: false }).collect(),
            ..Table::default()
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Md => Ok(self.render_md()),
        }
    }

    fn render_json(&self) -> Result<String> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().map(|c| c.name.clone()).zip(row.iter().cloned()).collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = json!({ "rows": rows });
        if let Some(footer) = &self.footer {
            doc["footer"] = Value::String(footer.clone());
        }
        let mut text = serde_json::to_string_pretty(&doc)?;
        text.push('\n');
        Ok(text)
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(self.columns.iter().map(|c| c.name.as_str())).map_err(io_err)?;
        for row in &self.rows {
            w.write_record(row.iter().map(cell_text)).map_err(io_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
        let mut text = String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))?;
        if let Some(footer) = &self.footer {
            text.push_str(&format!("# {footer}\n"));
        }
        Ok(text)
    }

    fn render_md(&self) -> String {
        let header: Vec<String> = self
            .columns
            .iter()
            .map(|c| if c.extra { format!("{} (extra)", c.name) } else { c.name.clone() })
            .collect();
        let body: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell_text).collect()).collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|i| body.iter().map(|r| r[i].len()).chain([header[i].len(), 3]).max().unwrap_or(3))
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            format!("| {} |\n", padded.join(" | "))
        };
        let mut out = line(&header);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&line(&rule));
        for row in &body {
            out.push_str(&line(row));
        }
        if let Some(footer) = &self.footer {
            out.push('\n');
            out.push_str(footer);
            out.push('\n');
        }
        out
    }
}

/// Cycle lengths of the stored reference table for P(n,1), if any.
pub fn printed_lengths(g: &Graph) -> Option<&'static [usize]> {
    let (n, k) = g.petersen_params()?;
    [TABLE_1, TABLE_2, TABLE_3]
        .into_iter()
        .find(|t| t.n == n && k == 1)
        .map(|t| t.lengths)
}

/// Orbit table: id, minimal size, representative, one column per cycle length.
pub fn orbit_table(records: &[OrbitRecord], g: &Graph, lengths: &[usize]) -> Table {
    let printed = printed_lengths(g);
    let mut table = Table::new(["orbit_id", "min_size", "representative"]);
    for &len in lengths {
        table.columns.push(Column {
            name: format!("neg_C{len}"),
            extra: printed.is_some_and(|p| !p.contains(&len)),
        });
    }
    let mut sorted: Vec<&OrbitRecord> = records.iter().collect();
    sorted.sort_by_key(|o| o.orbit_id);
    for o in sorted {
        let mut row = vec![json!(o.orbit_id), json!(o.min_size), json!(o.canonical_rep.render(g))];
        row.extend(lengths.iter().map(|&len| json!(o.profile.get(len))));
        table.rows.push(row);
    }
    table
}

/// Renders [`orbit_table`] in the requested format.
pub fn emit_table(records: &[OrbitRecord], g: &Graph, lengths: &[usize], format: Format) -> Result<String> {
    orbit_table(records, g, lengths).render(format)
}
