//! Tabular artifacts: CSV with `#` provenance lines, JSON, and a rounded
//! view for the terminal.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
}

impl Cell {
    fn full(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            // both forms print the shortest digits that round-trip
            Cell::Float(v) if *v != 0.0 && (v.abs() < 1e-4 || v.abs() >= 1e16) => format!("{v:e}"),
            Cell::Float(v) => format!("{v}"),
        }
    }

    fn rounded(&self, decimals: usize) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(v) if *v != 0.0 && v.abs() < 1e-3 => format!("{v:.decimals$e}"),
            Cell::Float(v) => format!("{v:.decimals$}"),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Float(v) if v.is_finite() => json!(v),
            Cell::Float(_) => Value::Null,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Column {
    pub name: &'static str,
    /// Decimals in the human view.
    pub decimals: usize,
}

pub const fn col(name: &'static str, decimals: usize) -> Column {
    Column { name, decimals }
}

/// One artifact: provenance, notes, columns and rows.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    pub provenance: Vec<(&'static str, String)>,
    pub notes: Vec<String>,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &'static str, columns: Vec<Column>) -> Self {
        Self {
            command,
            provenance: vec![("version", env!("CARGO_PKG_VERSION").to_string())],
            notes: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &'static str, value: impl ToString) -> &mut Self {
        self.provenance.push((key, value.to_string()));
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn header_lines(&self) -> Vec<String> {
        let mut out = vec![format!("# efimov {}", self.command)];
        out.extend(self.provenance.iter().map(|(k, v)| format!("# {k} = {v}")));
        out.extend(self.notes.iter().map(|n| format!("# note: {n}")));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut lines = self.header_lines();
        lines.push(self.columns.iter().map(|c| c.name).collect::<Vec<_>>().join(","));
        for row in &self.rows {
            lines.push(row.iter().map(Cell::full).collect::<Vec<_>>().join(","));
        }
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }

    pub fn to_json(&self) -> String {
        let provenance: Map<String, Value> = self
            .provenance
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, cell)| (c.name.to_string(), cell.json()))
                        .collect(),
                )
            })
            .collect();
        let doc = json!({
            "command": self.command,
            "provenance": provenance,
            "notes": self.notes,
            "columns": self.columns.iter().map(|c| c.name).collect::<Vec<_>>(),
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("plain JSON values serialize");
        s.push('\n');
        s
    }

    /// Aligned table with each column rounded to its display precision;
    /// long tables keep their first and last rows.
    pub fn to_human(&self) -> String {
        const EDGE: usize = 10;
        let long = self.rows.len() > 4 * EDGE;
        let shown: Vec<&Vec<Cell>> = if long {
            self.rows[..EDGE].iter().chain(&self.rows[self.rows.len() - EDGE..]).collect()
        } else {
            self.rows.iter().collect()
        };
        let cells: Vec<Vec<String>> = shown
            .into_iter()
            .map(|row| {
                row.iter()
                    .zip(&self.columns)
                    .map(|(cell, c)| cell.rounded(c.decimals))
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.name.len()]).max().unwrap_or(0))
            .collect();
        let fmt_row = |items: Vec<&str>| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let mut lines = self.header_lines();
        lines.push(fmt_row(self.columns.iter().map(|c| c.name).collect()));
        for (i, r) in cells.iter().enumerate() {
            if long && i == EDGE {
                lines.push(format!("... {} rows omitted ...", self.rows.len() - 2 * EDGE));
            }
            lines.push(fmt_row(r.iter().map(String::as_str).collect()));
        }
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new("demo", vec![col("n", 0), col("v", 5)]);
        t.meta("s0", 1.5);
        t.push(vec![Cell::Int(3), Cell::Float(-314.944_400_6)]);
        t
    }

    #[test]
    fn csv_has_comment_header_and_full_precision() {
        let csv = sample().to_csv();
        assert!(csv.starts_with("# efimov demo\n# version = "));
        assert!(csv.contains("# s0 = 1.5\n"));
        assert!(csv.ends_with("n,v\n3,-314.9444006\n"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn human_view_rounds() {
        assert!(sample().to_human().contains("-314.94440"));
    }

    #[test]
    fn long_human_view_is_elided() {
        let mut t = Table::new("demo", vec![col("n", 0)]);
        (0..100).for_each(|i| t.push(vec![Cell::Int(i)]));
        let h = t.to_human();
        assert!(h.contains("... 80 rows omitted ..."));
        assert!(h.trim_end().ends_with("99"));
    }

    #[test]
    fn json_names_fields() {
        let v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["rows"][0]["v"], json!(-314.944_400_6));
        assert_eq!(v["provenance"]["s0"], json!("1.5"));
    }
}
