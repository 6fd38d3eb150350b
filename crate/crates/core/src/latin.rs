//! Rectangular blocks of element labels and the surgery used to build
//! Cayley-table bodies: Latin validation, transposition, row/column
//! deletion, entry substitution, and 2x2 quadrant assembly.
//!
//! Indices are 1-based at every public boundary. A [`Block`] is a general
//! rectangle whose entries are drawn from a declared universe of labels; a
//! [`Table`] is a square block over exactly `1..=n`, the shape a finished
//! multiplication table must have.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Element label. Labels are positive integers; 0 is never valid.
pub type Label = u16;

/// Axis selector for error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

/// Position of a block in a 2x2 assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrant {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quadrant::TopLeft => f.write_str("top-left"),
            Quadrant::TopRight => f.write_str("top-right"),
            Quadrant::BottomLeft => f.write_str("bottom-left"),
            Quadrant::BottomRight => f.write_str("bottom-right"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("expected {rows}x{cols} entries, got {found}")]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("label 0 is not a valid element")]
    ZeroLabel,
    #[error("entry {label} at ({row}, {col}) is outside the declared universe")]
    OutsideUniverse { row: usize, col: usize, label: Label },
    #[error("{axis} index {index} is out of range 1..={extent}")]
    IndexOutOfRange {
        axis: Axis,
        index: usize,
        extent: usize,
    },
    #[error("substitution lists position ({row}, {col}) more than once")]
    DuplicatePosition { row: usize, col: usize },
    #[error("{quadrant} block has no entries")]
    EmptyQuadrant { quadrant: Quadrant },
    #[error("{quadrant} block must be square, got {rows}x{cols}")]
    QuadrantNotSquare {
        quadrant: Quadrant,
        rows: usize,
        cols: usize,
    },
    #[error(
        "{quadrant} block is {rows}x{cols}, but the diagonal blocks require {expected_rows}x{expected_cols}"
    )]
    QuadrantShape {
        quadrant: Quadrant,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("assembled entry {label} at ({row}, {col}) is outside 1..={n}")]
    LabelOutOfTable {
        row: usize,
        col: usize,
        label: Label,
        n: usize,
    },
    #[error("a table of order {n} needs {n}x{n} entries, got {found}")]
    TableEntryCount { n: usize, found: usize },
    #[error("table order {n} exceeds the label width ({max})")]
    OrderTooLarge { n: usize, max: usize },
    #[error("a table must have order at least 1")]
    EmptyTable,
    #[error("block is not square ({rows}x{cols}), so it cannot be read as a table")]
    NotSquare { rows: usize, cols: usize },
}

/// A rectangular array of labels drawn from a declared universe.
///
/// The universe matters: deleting a row does not shrink it, so a block can
/// legitimately fail to mention some of its labels, and `is_latin` only
/// asks that no label repeat within a line, not that every label appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    rows: usize,
    cols: usize,
    entries: Vec<Label>,
    universe: BTreeSet<Label>,
}

impl Block {
    /// Builds a block from row-major entries. Every entry must belong to
    /// `universe` and 0 is rejected. Both extents must be at least 1; only
    /// deletion can produce an empty block.
    pub fn new(
        rows: usize,
        cols: usize,
        entries: Vec<Label>,
        universe: impl IntoIterator<Item = Label>,
    ) -> Result<Self, BlockError> {
        assert!(rows >= 1 && cols >= 1, "blocks are built non-empty");
        let universe: BTreeSet<Label> = universe.into_iter().collect();
        if universe.contains(&0) {
            return Err(BlockError::ZeroLabel);
        }
        if entries.len() != rows * cols {
            return Err(BlockError::EntryCount {
                rows,
                cols,
                found: entries.len(),
            });
        }
        for (pos, &label) in entries.iter().enumerate() {
            if !universe.contains(&label) {
                return Err(BlockError::OutsideUniverse {
                    row: pos / cols + 1,
                    col: pos % cols + 1,
                    label,
                });
            }
        }
        Ok(Block {
            rows,
            cols,
            entries,
            universe,
        })
    }

    /// Convenience constructor from explicit rows.
    pub fn from_rows(
        rows: &[Vec<Label>],
        universe: impl IntoIterator<Item = Label>,
    ) -> Result<Self, BlockError> {
        assert!(!rows.is_empty(), "blocks are built non-empty");
        let cols = rows[0].len();
        if rows.iter().any(|row| row.len() != cols) {
            return Err(BlockError::EntryCount {
                rows: rows.len(),
                cols,
                found: rows.iter().map(Vec::len).sum(),
            });
        }
        Block::new(rows.len(), cols, rows.concat(), universe)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn universe(&self) -> &BTreeSet<Label> {
        &self.universe
    }

    pub fn entries(&self) -> &[Label] {
        &self.entries
    }

    /// Entry at 1-based `(row, col)`. Panics out of range.
    pub fn get(&self, row: usize, col: usize) -> Label {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "block index ({row}, {col}) out of range {}x{}",
            self.rows,
            self.cols
        );
        self.entries[(row - 1) * self.cols + (col - 1)]
    }

    /// The 1-based `row` as a slice.
    pub fn row(&self, row: usize) -> &[Label] {
        assert!((1..=self.rows).contains(&row), "row {row} out of range");
        &self.entries[(row - 1) * self.cols..row * self.cols]
    }

    /// True when no label repeats within any row or any column. Vacuously
    /// true for empty blocks. Labels absent from the block are fine; this
    /// is a no-repetition check, not a surjectivity check.
    pub fn is_latin(&self) -> bool {
        let max = self.universe.iter().next_back().copied().unwrap_or(0) as usize;
        let mut seen = vec![false; max + 1];
        for r in 0..self.rows {
            seen.fill(false);
            for c in 0..self.cols {
                let label = self.entries[r * self.cols + c] as usize;
                if seen[label] {
                    return false;
                }
                seen[label] = true;
            }
        }
        for c in 0..self.cols {
            seen.fill(false);
            for r in 0..self.rows {
                let label = self.entries[r * self.cols + c] as usize;
                if seen[label] {
                    return false;
                }
                seen[label] = true;
            }
        }
        true
    }

    /// The transpose. Universe is unchanged.
    pub fn transpose(&self) -> Block {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entries[r * self.cols + c]);
            }
        }
        Block {
            rows: self.cols,
            cols: self.rows,
            entries,
            universe: self.universe.clone(),
        }
    }

    /// Removes the 1-based `row`. Rows below shift up by one; the universe
    /// is unchanged. The result may have zero rows.
    pub fn delete_row(&self, row: usize) -> Result<Block, BlockError> {
        if !(1..=self.rows).contains(&row) {
            return Err(BlockError::IndexOutOfRange {
                axis: Axis::Row,
                index: row,
                extent: self.rows,
            });
        }
        let mut entries = Vec::with_capacity((self.rows - 1) * self.cols);
        for r in 0..self.rows {
            if r + 1 != row {
                entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
            }
        }
        Ok(Block {
            rows: self.rows - 1,
            cols: self.cols,
            entries,
            universe: self.universe.clone(),
        })
    }

    /// Removes the 1-based `col`. Columns to the right shift left by one;
    /// the universe is unchanged. The result may have zero columns.
    pub fn delete_column(&self, col: usize) -> Result<Block, BlockError> {
        if !(1..=self.cols).contains(&col) {
            return Err(BlockError::IndexOutOfRange {
                axis: Axis::Column,
                index: col,
                extent: self.cols,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols - 1));
        for (pos, &label) in self.entries.iter().enumerate() {
            if pos % self.cols + 1 != col {
                entries.push(label);
            }
        }
        Ok(Block {
            rows: self.rows,
            cols: self.cols - 1,
            entries,
            universe: self.universe.clone(),
        })
    }

    /// Overwrites the listed 1-based positions with new labels. Positions
    /// must be distinct and in range; new labels must be positive. The
    /// result's universe is the union of the old one and the new labels.
    pub fn substitute(&self, assignments: &[(usize, usize, Label)]) -> Result<Block, BlockError> {
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut entries = self.entries.clone();
        let mut universe = self.universe.clone();
        for &(row, col, label) in assignments {
            if !(1..=self.rows).contains(&row) {
                return Err(BlockError::IndexOutOfRange {
                    axis: Axis::Row,
                    index: row,
                    extent: self.rows,
                });
            }
            if !(1..=self.cols).contains(&col) {
                return Err(BlockError::IndexOutOfRange {
                    axis: Axis::Column,
                    index: col,
                    extent: self.cols,
                });
            }
            if label == 0 {
                return Err(BlockError::ZeroLabel);
            }
            if !seen.insert((row, col)) {
                return Err(BlockError::DuplicatePosition { row, col });
            }
            entries[(row - 1) * self.cols + (col - 1)] = label;
            universe.insert(label);
        }
        Ok(Block {
            rows: self.rows,
            cols: self.cols,
            entries,
            universe,
        })
    }

    /// Reads a square block over exactly `1..=rows` as a [`Table`].
    pub fn to_table(&self) -> Result<Table, BlockError> {
        if self.rows != self.cols {
            return Err(BlockError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Table::new(self.rows, self.entries.clone())
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rows {
            let line: Vec<String> = self.row(r).iter().map(Label::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A square array of order `n` whose entries all lie in `1..=n`: the body
/// of a finished multiplication table, rows indexed by left factor and
/// columns by right factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    n: usize,
    entries: Vec<Label>,
}

impl Table {
    pub fn new(n: usize, entries: Vec<Label>) -> Result<Self, BlockError> {
        if n == 0 {
            return Err(BlockError::EmptyTable);
        }
        if n > Label::MAX as usize {
            return Err(BlockError::OrderTooLarge {
                n,
                max: Label::MAX as usize,
            });
        }
        if entries.len() != n * n {
            return Err(BlockError::TableEntryCount {
                n,
                found: entries.len(),
            });
        }
        for (pos, &label) in entries.iter().enumerate() {
            if label == 0 || label as usize > n {
                return Err(BlockError::LabelOutOfTable {
                    row: pos / n + 1,
                    col: pos % n + 1,
                    label,
                    n,
                });
            }
        }
        Ok(Table { n, entries })
    }

    pub fn from_rows(rows: &[Vec<Label>]) -> Result<Self, BlockError> {
        Table::new(rows.len(), rows.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Label] {
        &self.entries
    }

    /// Product of 1-based `x` and `y` read straight from the table.
    /// Panics out of range.
    #[inline]
    pub fn get(&self, x: Label, y: Label) -> Label {
        let n = self.n;
        assert!(
            x >= 1 && (x as usize) <= n && y >= 1 && (y as usize) <= n,
            "table index ({x}, {y}) out of range for order {n}"
        );
        self.entries[(x as usize - 1) * n + (y as usize - 1)]
    }

    /// The 1-based `row` as a slice.
    pub fn row(&self, row: usize) -> &[Label] {
        assert!((1..=self.n).contains(&row), "row {row} out of range");
        &self.entries[(row - 1) * self.n..row * self.n]
    }

    /// The table as a block over the universe `1..=n`.
    pub fn as_block(&self) -> Block {
        Block {
            rows: self.n,
            cols: self.n,
            entries: self.entries.clone(),
            universe: (1..=self.n as Label).collect(),
        }
    }

    pub fn is_latin(&self) -> bool {
        self.as_block().is_latin()
    }

    /// True when row 1 and column 1 both read `1, 2, ..., n` in order,
    /// which pins element 1 as a two-sided identity of the border-free
    /// encoding.
    pub fn is_standard_form(&self) -> bool {
        let n = self.n;
        (1..=n).all(|j| self.entries[j - 1] == j as Label)
            && (1..=n).all(|i| self.entries[(i - 1) * n] == i as Label)
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.n {
            let line: Vec<String> = self.row(r).iter().map(Label::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Glues four blocks into a square table:
///
/// ```text
/// [ top_left    | top_right    ]
/// [ bottom_left | bottom_right ]
/// ```
///
/// `top_left` must be `m x m`, `bottom_right` `k x k`, and the off-diagonal
/// blocks must fill the remaining `m x k` and `k x m` rectangles. Every
/// assembled entry must land in `1..=(m + k)`. Empty blocks are rejected.
pub fn assemble(
    top_left: &Block,
    top_right: &Block,
    bottom_left: &Block,
    bottom_right: &Block,
) -> Result<Table, BlockError> {
    let quadrants = [
        (Quadrant::TopLeft, top_left),
        (Quadrant::TopRight, top_right),
        (Quadrant::BottomLeft, bottom_left),
        (Quadrant::BottomRight, bottom_right),
    ];
    for (quadrant, block) in quadrants {
        if block.is_empty() {
            return Err(BlockError::EmptyQuadrant { quadrant });
        }
    }
    for (quadrant, block) in [
        (Quadrant::TopLeft, top_left),
        (Quadrant::BottomRight, bottom_right),
    ] {
        if block.rows != block.cols {
            return Err(BlockError::QuadrantNotSquare {
                quadrant,
                rows: block.rows,
                cols: block.cols,
            });
        }
    }
    let m = top_left.rows;
    let k = bottom_right.rows;
    for (quadrant, block, expected_rows, expected_cols) in [
        (Quadrant::TopRight, top_right, m, k),
        (Quadrant::BottomLeft, bottom_left, k, m),
    ] {
        if block.rows != expected_rows || block.cols != expected_cols {
            return Err(BlockError::QuadrantShape {
                quadrant,
                expected_rows,
                expected_cols,
                rows: block.rows,
                cols: block.cols,
            });
        }
    }
    let n = m + k;
    let mut entries = Vec::with_capacity(n * n);
    for r in 1..=m {
        entries.extend_from_slice(top_left.row(r));
        entries.extend_from_slice(top_right.row(r));
    }
    for r in 1..=k {
        entries.extend_from_slice(bottom_left.row(r));
        entries.extend_from_slice(bottom_right.row(r));
    }
    Table::new(n, entries)
}
