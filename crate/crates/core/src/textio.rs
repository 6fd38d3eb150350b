//! The plain-text table format shared by every tool in this workspace.
//!
//! A file holds one table: the order n on the first line, then n lines of
//! n space-separated labels in `1..=n`, and a trailing newline. Comment
//! lines starting with `#` may precede the order line and nothing may
//! follow the last row. The writer emits exactly this shape, so
//! write-then-parse is the identity.

use std::fmt::Write as _;

use thiserror::Error;

use crate::construct::ConstructionTrace;
use crate::latin::{Block, Label, Table};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("input does not end with a newline")]
    MissingTrailingNewline,
    #[error("missing the order line")]
    MissingOrder,
    #[error("line {line}: expected a single order, got '{text}'")]
    InvalidOrder { line: usize, text: String },
    #[error("line {line}: order {n} is out of the supported range 1..={max}")]
    OrderOutOfRange { line: usize, n: u64, max: usize },
    #[error("line {line}: expected {expected} entries, got {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, entry {column}: '{token}' is not a label")]
    InvalidEntry {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, entry {column}: label {label} is outside 1..={n}")]
    EntryOutOfRange {
        line: usize,
        column: usize,
        label: u64,
        n: usize,
    },
    #[error("expected {expected} rows, got {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last row")]
    TrailingContent { line: usize },
}

/// Parses the text table format. Diagnostics carry 1-based line numbers
/// counted over the whole input, comments included.
pub fn parse_table(text: &str) -> Result<Table, ParseError> {
    if !text.ends_with('\n') {
        return Err(ParseError::MissingTrailingNewline);
    }
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (order_line, order_text) = lines
        .by_ref()
        .find(|(_, l)| !l.trim_start().starts_with('#'))
        .ok_or(ParseError::MissingOrder)?;
    let order_text = order_text.trim();
    let n: u64 = order_text
        .parse()
        .map_err(|_| ParseError::InvalidOrder {
            line: order_line,
            text: order_text.to_string(),
        })?;
    if n == 0 || n > Label::MAX as u64 {
        return Err(ParseError::OrderOutOfRange {
            line: order_line,
            n,
            max: Label::MAX as usize,
        });
    }
    let n = n as usize;
    let mut entries: Vec<Label> = Vec::with_capacity(n * n);
    let mut rows_read = 0;
    for (line, row_text) in lines.by_ref() {
        let mut found = 0;
        for (idx, token) in row_text.split_whitespace().enumerate() {
            let column = idx + 1;
            if column > n {
                return Err(ParseError::RowLength {
                    line,
                    expected: n,
                    found: row_text.split_whitespace().count(),
                });
            }
            let label: u64 = token.parse().map_err(|_| ParseError::InvalidEntry {
                line,
                column,
                token: token.to_string(),
            })?;
            if label == 0 || label > n as u64 {
                return Err(ParseError::EntryOutOfRange {
                    line,
                    column,
                    label,
                    n,
                });
            }
            entries.push(label as Label);
            found = column;
        }
        if found != n {
            return Err(ParseError::RowLength {
                line,
                expected: n,
                found,
            });
        }
        rows_read += 1;
        if rows_read == n {
            break;
        }
    }
    if rows_read < n {
        return Err(ParseError::MissingRows {
            expected: n,
            found: rows_read,
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::TrailingContent { line });
    }
    Ok(Table::new(n, entries).expect("entries were validated during parsing"))
}

/// Renders a table in the text format: order line, rows, trailing newline.
pub fn write_table(t: &Table) -> String {
    let mut out = String::new();
    writeln!(out, "{}", t.n()).expect("string formatting does not fail");
    write!(out, "{t}").expect("string formatting does not fail");
    out
}

fn write_block_rows(out: &mut String, b: &Block) {
    write!(out, "{b}").expect("string formatting does not fail");
}

/// Renders the intermediate blocks of a construction as commented
/// sections, ending with the assembled table in the standard format.
pub fn render_trace(trace: &ConstructionTrace) -> String {
    let mut out = String::new();
    let sections: [(&str, &Block); 5] = [
        ("group_m", &trace.group_m),
        ("group_k", &trace.group_k),
        ("top_right", &trace.top_right),
        ("bottom_left", &trace.bottom_left),
        ("bottom_right", &trace.bottom_right),
    ];
    for (name, block) in sections {
        writeln!(out, "# block: {name} ({}x{})", block.rows(), block.cols())
            .expect("string formatting does not fail");
        write_block_rows(&mut out, block);
        out.push('\n');
    }
    writeln!(out, "# assembled table").expect("string formatting does not fail");
    out.push_str(&write_table(&trace.table));
    out
}
