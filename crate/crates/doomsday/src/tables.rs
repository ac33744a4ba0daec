//! Regenerates the reference tables as structured documents. Every cell is
//! computed through [`crate::doomsyear`]; nothing here is hardcoded, so the
//! golden fixtures in the test suite check generation one-way.

use std::fmt;

use crate::date::SplitYear;
use crate::doomsyear::{
    carrollian_doomsyear, decade_anchor, derive_zero_anchors, leaps_formula, proposed_doomsyear,
};

/// A single table cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(i64),
    Text(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(n) => write!(f, "{n}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

/// Output encodings for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Tsv,
    Markdown,
}

/// A titled table: a header and rows of cells, all rows header-width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDocument {
    title: String,
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl TableDocument {
    pub fn new(title: impl Into<String>, header: &[&str]) -> TableDocument {
        TableDocument {
            title: title.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row arity mismatch");
        self.rows.push(row);
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }
}

/// Decade anchors: digit, decade, raw value 2y + 10(y mod 2), anchor mod 7.
pub fn table1() -> TableDocument {
    let mut doc = TableDocument::new("Decade anchor lookup", &["y", "decade", "raw", "anchor"]);
    for y in 0..=9u8 {
        let raw = i64::from(2 * y + 10 * (y % 2));
        let anchor = decade_anchor(y).unwrap();
        doc.push_row(vec![
            Cell::Int(i64::from(y)),
            Cell::Text(format!("{y}0's")),
            Cell::Int(raw),
            Cell::Int(i64::from(anchor.value())),
        ]);
    }
    doc
}

/// Leap corrections by ones digit: combined possibilities, then the value
/// for even and odd decades.
pub fn table2() -> TableDocument {
    let mut doc = TableDocument::new("Possible values for leaps", &["z", "leaps", "even", "odd"]);
    for z in 0..=9u8 {
        let even = leaps_formula(SplitYear::from_digits(0, z).unwrap()).value();
        let odd = leaps_formula(SplitYear::from_digits(1, z).unwrap()).value();
        let combined = if even == odd {
            format!("{even}")
        } else {
            format!("{even} or {odd}")
        };
        doc.push_row(vec![
            Cell::Int(i64::from(z)),
            Cell::Text(combined),
            Cell::Int(i64::from(even)),
            Cell::Int(i64::from(odd)),
        ]);
    }
    doc
}

/// Doomsyear values 00..99 by the Carrollian and digit formulas. The two
/// value columns agree on every row; the table is regenerated rather than
/// stored so the test suite can hold it to the golden copy.
pub fn table3() -> TableDocument {
    let mut doc = TableDocument::new(
        "Doomsyear values from 00 to 99",
        &["year", "carrollian", "proposed"],
    );
    for x in 0..=99u16 {
        let year = SplitYear::new(x).unwrap();
        doc.push_row(vec![
            Cell::Int(i64::from(x)),
            Cell::Int(i64::from(carrollian_doomsyear(year).value())),
            Cell::Int(i64::from(proposed_doomsyear(year).value())),
        ]);
    }
    doc
}

/// The 18 zero-anchor years, half-numbers rendered with a `.5` suffix.
pub fn anchor_table() -> TableDocument {
    let mut doc = TableDocument::new("Zero-anchor years", &["anchor"]);
    for anchor in derive_zero_anchors() {
        doc.push_row(vec![Cell::Text(anchor.to_string())]);
    }
    doc
}

/// Renders a document. TSV is the machine-readable contract: tab-separated
/// cells, every line newline-terminated, no trailing whitespace. Markdown
/// is a plain pipe table.
pub fn render(doc: &TableDocument, format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Tsv => {
            out.push_str(&doc.header().join("\t"));
            out.push('\n');
            for row in doc.rows() {
                let line: Vec<String> = row.iter().map(Cell::to_string).collect();
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            out.push_str("| ");
            out.push_str(&doc.header().join(" | "));
            out.push_str(" |\n| ");
            out.push_str(&vec!["---"; doc.header().len()].join(" | "));
            out.push_str(" |\n");
            for row in doc.rows() {
                let line: Vec<String> = row.iter().map(Cell::to_string).collect();
                out.push_str("| ");
                out.push_str(&line.join(" | "));
                out.push_str(" |\n");
            }
        }
    }
    out
}
