//! Cauchon diagrams: validation, containment, labelling, and enumeration.
//!
//! An `m x n` grid of black/white boxes is a Cauchon diagram when every black
//! box has all boxes strictly to its left black, or all boxes strictly above
//! it black. Boxes in row 1 and column 1 satisfy their respective condition
//! vacuously.
//!
//! Rows are stored as bit masks, one `u64` per row, with column `1` in the
//! least significant bit. This caps supported widths at 64 columns.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Maximum supported number of columns.
pub const MAX_COLS: usize = 64;

fn low_mask(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn width_mask(n: usize) -> u64 {
    low_mask(n as u32)
}

/// A validated `m x n` Cauchon diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CauchonDiagram {
    m: usize,
    n: usize,
    rows: Vec<u64>,
}

impl CauchonDiagram {
    /// Builds a diagram from row bit masks (bit `c` of `rows[r]` set means the
    /// box at 0-based position `(r, c)` is black), rejecting colourings that
    /// violate the left-or-above rule.
    pub fn new(m: usize, n: usize, rows: Vec<u64>) -> Result<Self> {
        Self::check_shape(m, n, &rows)?;
        if let Some((r, c)) = Self::validity_violation(n, &rows) {
            return Err(Error::InvalidDiagram {
                row: r + 1,
                col: c + 1,
            });
        }
        Ok(Self { m, n, rows })
    }

    fn check_shape(m: usize, n: usize, rows: &[u64]) -> Result<()> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyGrid);
        }
        if n > MAX_COLS {
            return Err(Error::WidthTooLarge {
                width: n,
                max: MAX_COLS,
            });
        }
        if rows.len() != m {
            return Err(Error::GridMismatch(m, n, rows.len(), n));
        }
        for (i, &row) in rows.iter().enumerate() {
            if row & !width_mask(n) != 0 {
                return Err(Error::RowOutOfWidth { row: i + 1 });
            }
        }
        Ok(())
    }

    pub(crate) fn new_unchecked(m: usize, n: usize, rows: Vec<u64>) -> Self {
        debug_assert!(Self::check_shape(m, n, &rows).is_ok());
        debug_assert!(Self::validity_violation(n, &rows).is_none());
        Self { m, n, rows }
    }

    /// First box breaking the left-or-above rule in row-major order, as a
    /// 0-based `(row, col)` pair. `None` means the colouring is a valid
    /// diagram.
    pub fn validity_violation(n: usize, rows: &[u64]) -> Option<(usize, usize)> {
        let mask = width_mask(n);
        let mut above_black = mask; // row 1 has nothing above it
        for (i, &row) in rows.iter().enumerate() {
            let prefix = low_mask(row.trailing_ones());
            let bad = row & !prefix & !above_black;
            if bad != 0 {
                return Some((i, bad.trailing_zeros() as usize));
            }
            above_black &= row;
        }
        None
    }

    /// Whether a raw colouring satisfies the diagram rule.
    pub fn is_valid_coloring(n: usize, rows: &[u64]) -> bool {
        Self::validity_violation(n, rows).is_none()
    }

    pub fn all_white(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, vec![0; m])
    }

    pub fn all_black(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, vec![width_mask(n); m])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_masks(&self) -> &[u64] {
        &self.rows
    }

    /// Black test at a 0-based position.
    pub fn is_black(&self, row: usize, col: usize) -> bool {
        assert!(row < self.m && col < self.n, "box out of range");
        self.rows[row] >> col & 1 == 1
    }

    pub fn black_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn white_count(&self) -> usize {
        self.m * self.n - self.black_count()
    }

    /// White boxes in row-major order (0-based positions). Position `k` in
    /// this list carries canonical label `k + 1`.
    pub fn white_boxes(&self) -> Vec<(usize, usize)> {
        let mask = width_mask(self.n);
        let mut out = Vec::with_capacity(self.white_count());
        for (i, &row) in self.rows.iter().enumerate() {
            let mut white = !row & mask;
            while white != 0 {
                let c = white.trailing_zeros() as usize;
                out.push((i, c));
                white &= white - 1;
            }
        }
        out
    }

    /// Whether every black box of `other` is black here.
    pub fn contains(&self, other: &CauchonDiagram) -> Result<bool> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::GridMismatch(self.m, self.n, other.m, other.n));
        }
        Ok(self.rows.iter().zip(&other.rows).all(|(a, b)| b & !a == 0))
    }

    /// White boxes whose individual blackening yields a valid diagram, in
    /// row-major order. Blackening one box can only help other boxes satisfy
    /// the rule, so only the new box itself needs checking.
    pub fn blackening_candidates(&self) -> Vec<(usize, usize)> {
        let mask = width_mask(self.n);
        let mut above_black = mask;
        let mut out = Vec::new();
        for (i, &row) in self.rows.iter().enumerate() {
            let white = !row & mask;
            let mut cand = white & above_black;
            let k = row.trailing_ones() as usize;
            if k < self.n {
                // the white box just after the black prefix of the row
                cand |= 1u64 << k;
            }
            let mut bits = cand;
            while bits != 0 {
                let c = bits.trailing_zeros() as usize;
                out.push((i, c));
                bits &= bits - 1;
            }
            above_black &= row;
        }
        out
    }

    /// Returns the diagram with one more black box at the 0-based position.
    pub fn blacken(&self, row: usize, col: usize) -> Result<Self> {
        if row >= self.m || col >= self.n {
            return Err(Error::IndexOutOfRange {
                index: row.max(col),
                size: self.m.max(self.n),
            });
        }
        let mut rows = self.rows.clone();
        rows[row] |= 1u64 << col;
        Self::new(self.m, self.n, rows)
    }

    /// Removes every all-black column. Errors when no columns would remain.
    pub fn strip_all_black_columns(&self) -> Result<Self> {
        let mut all_black = width_mask(self.n);
        for &row in &self.rows {
            all_black &= row;
        }
        if all_black == 0 {
            return Ok(self.clone());
        }
        let keep: Vec<usize> = (0..self.n).filter(|&c| all_black >> c & 1 == 0).collect();
        if keep.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let rows = self
            .rows
            .iter()
            .map(|&row| {
                keep.iter()
                    .enumerate()
                    .fold(0u64, |acc, (new_c, &c)| acc | ((row >> c & 1) << new_c))
            })
            .collect();
        Ok(Self::new_unchecked(self.m, keep.len(), rows))
    }

    /// Columns that are entirely black, 0-based.
    pub fn all_black_columns(&self) -> Vec<usize> {
        let mut all_black = width_mask(self.n);
        for &row in &self.rows {
            all_black &= row;
        }
        (0..self.n).filter(|&c| all_black >> c & 1 == 1).collect()
    }

    /// Text format: a `m n` header line, then `m` lines of `n` characters,
    /// `.` for white and `#` for black.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.m, self.n);
        for &row in &self.rows {
            for c in 0..self.n {
                out.push(if row >> c & 1 == 1 { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (m, n, rows) = parse_grid(text)?;
        Self::new(m, n, rows)
    }
}

/// Parses the diagram text format without enforcing the diagram rule,
/// returning the raw `(m, n, row_masks)` grid. Lets checkers report the
/// offending box themselves.
pub fn parse_grid(text: &str) -> Result<(usize, usize, Vec<u64>)> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing header line".into(),
    })?;
    let mut parts = header.split_whitespace();
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "bad row count".into(),
        })?;
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "bad column count".into(),
        })?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line: 1,
            message: "trailing tokens after header".into(),
        });
    }
    if m == 0 || n == 0 {
        return Err(Error::EmptyGrid);
    }
    if n > MAX_COLS {
        return Err(Error::WidthTooLarge {
            width: n,
            max: MAX_COLS,
        });
    }
    let mut rows = Vec::with_capacity(m);
    for r in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
            line: r + 2,
            message: "missing grid row".into(),
        })?;
        let line = line.trim_end();
        if line.chars().count() != n {
            return Err(Error::Parse {
                line: line_no + 1,
                message: format!("expected {} boxes, got {}", n, line.chars().count()),
            });
        }
        let mut row = 0u64;
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '#' => row |= 1u64 << c,
                '.' => {}
                other => {
                    return Err(Error::Parse {
                        line: line_no + 1,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        rows.push(row);
    }
    for (line_no, line) in lines {
        if !line.trim().is_empty() {
            return Err(Error::Parse {
                line: line_no + 1,
                message: "unexpected trailing content".into(),
            });
        }
    }
    Ok((m, n, rows))
}

impl fmt::Debug for CauchonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\n{}", self.to_text())
    }
}

impl fmt::Display for CauchonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A diagram whose white boxes carry strictly increasing labels in row-major
/// order: increasing left to right along rows, and every label in a row below
/// exceeds every label in the rows above.
#[derive(Clone, PartialEq, Eq)]
pub struct WhiteLabelling {
    diagram: CauchonDiagram,
    labels: Vec<u64>,
}

impl WhiteLabelling {
    /// The canonical labelling `1..=d` in row-major order.
    pub fn canonical(diagram: CauchonDiagram) -> Self {
        let d = diagram.white_count() as u64;
        Self {
            diagram,
            labels: (1..=d).collect(),
        }
    }

    /// Custom labels, one per white box in row-major order.
    pub fn with_labels(diagram: CauchonDiagram, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != diagram.white_count() {
            return Err(Error::LabelCountMismatch {
                expected: diagram.white_count(),
                got: labels.len(),
            });
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadLabelling);
        }
        Ok(Self { diagram, labels })
    }

    pub fn diagram(&self) -> &CauchonDiagram {
        &self.diagram
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Label of the white box at 0-based `(row, col)`, if the box is white.
    pub fn label_at(&self, row: usize, col: usize) -> Option<u64> {
        self.diagram
            .white_boxes()
            .iter()
            .position(|&p| p == (row, col))
            .map(|k| self.labels[k])
    }

    /// Labels of the white boxes whose individual blackening yields a valid
    /// diagram.
    pub fn candidate_boxes(&self) -> BTreeSet<u64> {
        let whites = self.diagram.white_boxes();
        self.diagram
            .blackening_candidates()
            .into_iter()
            .map(|p| {
                let k = whites
                    .iter()
                    .position(|&w| w == p)
                    .expect("candidates are white boxes");
                self.labels[k]
            })
            .collect()
    }
}

/// Streaming enumeration of all `m x n` Cauchon diagrams.
///
/// Diagrams are produced in a fixed order: depth-first over rows, each row
/// pattern iterated in increasing bit-mask value (column 1 in the least
/// significant bit), row 1 varying slowest. The row-by-row state is the set
/// of columns black in every row so far; a row pattern is admissible exactly
/// when each of its black boxes either sits in the all-black prefix of the
/// row or in such a column.
pub fn enumerate(m: usize, n: usize) -> Result<DiagramIter> {
    DiagramIter::with_first_row_range(m, n, 0, width_mask(n))
}

/// Splits enumeration into at most `parts` chunks by contiguous ranges of
/// row-1 patterns. The chunks are pairwise disjoint, jointly exhaustive, and
/// concatenating them in order reproduces the `enumerate` order exactly.
pub fn partitions(m: usize, n: usize, parts: usize) -> Result<Vec<DiagramPartition>> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyGrid);
    }
    if n > MAX_COLS {
        return Err(Error::WidthTooLarge {
            width: n,
            max: MAX_COLS,
        });
    }
    let parts = parts.max(1) as u128;
    let total: u128 = (width_mask(n) as u128) + 1;
    let chunk = total.div_ceil(parts);
    let mut out = Vec::new();
    let mut lo: u128 = 0;
    while lo < total {
        let hi = (lo + chunk - 1).min(total - 1);
        out.push(DiagramPartition {
            m,
            n,
            first_lo: lo as u64,
            first_hi: hi as u64,
        });
        lo = hi + 1;
    }
    Ok(out)
}

/// One chunk of the enumeration: all diagrams whose row-1 pattern lies in a
/// fixed range.
#[derive(Clone, Copy, Debug)]
pub struct DiagramPartition {
    m: usize,
    n: usize,
    first_lo: u64,
    first_hi: u64,
}

impl DiagramPartition {
    pub fn iter(&self) -> DiagramIter {
        DiagramIter::with_first_row_range(self.m, self.n, self.first_lo, self.first_hi)
            .expect("partition dimensions were validated")
    }

    pub fn first_row_range(&self) -> (u64, u64) {
        (self.first_lo, self.first_hi)
    }
}

struct Frame {
    f_in: u64,
    cursor: Option<u64>,
}

/// Iterator over diagrams; see [`enumerate`].
pub struct DiagramIter {
    m: usize,
    n: usize,
    mask: u64,
    first_hi: u64,
    frames: Vec<Frame>,
    chosen: Vec<u64>,
}

impl DiagramIter {
    fn with_first_row_range(m: usize, n: usize, lo: u64, hi: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyGrid);
        }
        if n > MAX_COLS {
            return Err(Error::WidthTooLarge {
                width: n,
                max: MAX_COLS,
            });
        }
        let mask = width_mask(n);
        Ok(Self {
            m,
            n,
            mask,
            first_hi: hi.min(mask),
            frames: vec![Frame {
                f_in: mask,
                cursor: Some(lo),
            }],
            chosen: Vec::with_capacity(m),
        })
    }

    fn admissible(&self, pattern: u64, f: u64) -> bool {
        let rest = pattern & !low_mask(pattern.trailing_ones());
        rest & !f == 0
    }
}

impl Iterator for DiagramIter {
    type Item = CauchonDiagram;

    fn next(&mut self) -> Option<CauchonDiagram> {
        loop {
            let row = self.frames.len().checked_sub(1)?;
            let limit = if row == 0 { self.first_hi } else { self.mask };
            let f_in = self.frames[row].f_in;

            let mut found = None;
            while let Some(c) = self.frames[row].cursor {
                if c > limit {
                    self.frames[row].cursor = None;
                    break;
                }
                self.frames[row].cursor = c.checked_add(1);
                if self.admissible(c, f_in) {
                    found = Some(c);
                    break;
                }
            }

            match found {
                None => {
                    self.frames.pop();
                    self.chosen.pop();
                }
                Some(pattern) => {
                    self.chosen.push(pattern);
                    if self.chosen.len() == self.m {
                        let d = CauchonDiagram::new_unchecked(self.m, self.n, self.chosen.clone());
                        self.chosen.pop();
                        return Some(d);
                    }
                    self.frames.push(Frame {
                        f_in: f_in & pattern,
                        cursor: Some(0),
                    });
                }
            }
        }
    }
}
