//! Semistandard Young tableaux in the French convention, Schensted row
//! insertion, and the row/column readings used as normal forms.
//!
//! Rows are stored bottom-up: `rows()[0]` is the bottom (longest) row, where
//! insertion starts. The readings convert to the conventional top-row-first
//! order at the boundary.

use alloc::vec::Vec;
use core::fmt;

use crate::word::{Letter, Word};

/// Why a row sequence fails to be a semistandard Young tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauError {
    /// Row `row` (0-based from the bottom) has a strict descent.
    RowNotWeaklyIncreasing { row: usize },
    /// The entry at (`row`, `col`) is not strictly greater than the entry
    /// below it, so the column fails to decrease strictly top to bottom.
    ColumnNotStrictlyDecreasing { row: usize, col: usize },
    /// Row `row` is longer than the row below it.
    ShapeNotDecreasing { row: usize },
    /// Row `row` has no entries; the empty tableau is the one with no rows.
    EmptyRow { row: usize },
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TableauError::RowNotWeaklyIncreasing { row } => {
                write!(f, "row {row} (from the bottom) is not weakly increasing")
            }
            TableauError::ColumnNotStrictlyDecreasing { row, col } => write!(
                f,
                "column {col} is not strictly decreasing top to bottom at row {row}"
            ),
            TableauError::ShapeNotDecreasing { row } => {
                write!(f, "row {row} is longer than the row beneath it")
            }
            TableauError::EmptyRow { row } => write!(f, "row {row} is empty"),
        }
    }
}

impl core::error::Error for TableauError {}

/// A semistandard Young tableau: rows weakly increase left to right, columns
/// strictly decrease top to bottom, and longer rows sit underneath (French
/// convention). Instances are valid by construction.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tableau {
    /// Bottom row first.
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// The tableau with no boxes.
    pub const fn empty() -> Tableau {
        Tableau { rows: Vec::new() }
    }

    /// Builds a tableau from rows listed bottom-up, checking every invariant.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Tableau, TableauError> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(TableauError::EmptyRow { row: r });
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(TableauError::RowNotWeaklyIncreasing { row: r });
            }
            if r > 0 {
                let below = &rows[r - 1];
                if row.len() > below.len() {
                    return Err(TableauError::ShapeNotDecreasing { row: r });
                }
                for (c, &entry) in row.iter().enumerate() {
                    if entry <= below[c] {
                        return Err(TableauError::ColumnNotStrictlyDecreasing { row: r, col: c });
                    }
                }
            }
        }
        Ok(Tableau { rows })
    }

    /// Rows listed bottom-up; `rows()[0]` is the longest.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Row lengths bottom-up — the shape of the underlying Young diagram.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of boxes; equals the length of either reading.
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Schensted row insertion. The letter enters the bottom row; if the row
    /// stays weakly increasing with it appended, it lands there, otherwise it
    /// displaces the leftmost strictly larger entry, which is inserted into
    /// the row above in the same way, and so on until a letter comes to rest.
    pub fn insert_letter(&self, x: Letter) -> Tableau {
        let mut rows = self.rows.clone();
        let mut carry = x;
        for row in rows.iter_mut() {
            // First position whose entry exceeds the carried letter.
            let pos = row.partition_point(|&y| y <= carry);
            if pos == row.len() {
                row.push(carry);
                return Tableau { rows };
            }
            carry = core::mem::replace(&mut row[pos], carry);
        }
        // Every row bumped; the last displaced letter opens a new top row.
        rows.push(alloc::vec![carry]);
        Tableau { rows }
    }

    /// Schensted's map P: inserts the letters of `w` left to right into the
    /// empty tableau. Two words yield the same tableau exactly when they are
    /// Knuth equivalent.
    pub fn from_word(w: &Word) -> Tableau {
        w.iter().fold(Tableau::empty(), |t, x| t.insert_letter(x))
    }

    /// Concatenates the rows, top row first, each left to right. This is the
    /// canonical representative of the tableau's Knuth class.
    pub fn row_reading(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Concatenates the columns left to right, each read top to bottom, so
    /// every column contributes a strictly decreasing run.
    pub fn column_reading(&self) -> Word {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut letters = Vec::with_capacity(self.len());
        for c in 0..width {
            letters.extend(
                self.rows
                    .iter()
                    .rev()
                    .filter_map(|row| row.get(c))
                    .copied(),
            );
        }
        Word::from_letters(letters)
    }
}

/// One row per line, top row first, entries space-separated.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let mut sep = "";
            for l in row {
                write!(f, "{sep}{l}")?;
                sep = " ";
            }
        }
        Ok(())
    }
}
