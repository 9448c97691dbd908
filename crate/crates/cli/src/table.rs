//! Tabular output rendering.
//!
//! Every subcommand produces one table; the table renders itself either as
//! CSV (header line plus one comma-separated row per record) or as JSON
//! lines (one object per record, keys in column order, no header). Floats
//! are printed as `{:.16e}` in CSV — enough digits to round-trip any f64 —
//! and as shortest round-trip decimals in JSON.

use std::fmt::Write as _;

/// A single table cell.
pub enum Cell {
    /// An integer column such as a node index or lattice size.
    Int(u64),
    /// A numeric result.
    Float(f64),
    /// An empty cell (CSV: empty field; JSON: null).
    Blank,
}

/// An in-memory result table with fixed columns.
pub struct Table {
    columns: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
}

impl Table {
    /// Creates an empty table with the given column names.
    pub fn new(columns: &'static [&'static str]) -> Self {
        Table { columns, rows: Vec::new() }
    }

    /// Appends one record; its arity must match the column list.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row arity must match the header");
        self.rows.push(row);
    }

    /// Renders the table as CSV with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let fields: Vec<String> = row
                .iter()
                .map(|cell| match cell {
                    Cell::Int(v) => v.to_string(),
                    Cell::Float(v) => format!("{v:.16e}"),
                    Cell::Blank => String::new(),
                })
                .collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }

    /// Renders the table as JSON lines, one object per record.
    ///
    /// All values are plain JSON numbers or null; the column names contain
    /// no characters that need escaping, so the encoder can be direct.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row)
                .map(|(name, cell)| {
                    let value = match cell {
                        Cell::Int(v) => v.to_string(),
                        // Debug-formatting an f64 yields the shortest decimal
                        // that parses back to the same bits, and every finite
                        // form ("1.5", "-0.0", "3e-7") is a valid JSON number.
                        Cell::Float(v) if v.is_finite() => format!("{v:?}"),
                        Cell::Float(_) | Cell::Blank => "null".to_string(),
                    };
                    format!("\"{name}\":{value}")
                })
                .collect();
            let _ = writeln!(out, "{{{}}}", fields.join(","));
        }
        out
    }
}
