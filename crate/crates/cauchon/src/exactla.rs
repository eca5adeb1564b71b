//! Exact linear algebra over the integers and rationals.
//!
//! Ranks and kernel dimensions are computed with fraction-free (Bareiss)
//! elimination over arbitrary-precision integers, so every result is exact.
//! A machine-integer fast path handles the small matrices that dominate the
//! enumeration sweeps and falls back to big integers on overflow.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest accepted matrix dimension. Everything this crate computes at desk
/// scale is a few hundred at most; the cap catches runaway inputs early.
pub const MAX_MATRIX_SIZE: usize = 4096;

fn check_dim(size: usize) -> Result<()> {
    if size > MAX_MATRIX_SIZE {
        return Err(Error::MatrixTooLarge {
            size,
            max: MAX_MATRIX_SIZE,
        });
    }
    Ok(())
}

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        check_dim(rows)?;
        check_dim(cols)?;
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        check_dim(rows)?;
        check_dim(cols)?;
        Ok(Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        })
    }

    pub fn identity(size: usize) -> Result<Self> {
        let mut m = Self::zero(size, size)?;
        for i in 0..size {
            m.set(i, i, BigInt::one());
        }
        Ok(m)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigInt,
    ) -> Result<Self> {
        check_dim(rows)?;
        check_dim(cols)?;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Convenience constructor from machine-integer rows; all rows must have
    /// equal length.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::ShapeMismatch {
                    rows: r,
                    cols: c,
                    len: i * c + row.len(),
                });
            }
        }
        Self::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&BigInt> {
        if i < self.rows && j < self.cols {
            Some(&self.data[i * self.cols + j])
        } else {
            None
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
            .expect("transpose of a valid matrix is valid")
    }

    pub fn matmul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::MatrixMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += &self[(i, k)] * &rhs[(k, j)];
            }
            acc
        })
    }

    /// Removes the listed row/column indices (0-based) from both dimensions.
    pub fn delete_rows_cols(&self, idx: &[usize]) -> Result<IntMatrix> {
        let mut del = idx.to_vec();
        del.sort_unstable();
        del.dedup();
        for &i in &del {
            if i >= self.rows || i >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: self.rows.min(self.cols),
                });
            }
        }
        let keep_rows: Vec<usize> = (0..self.rows).filter(|i| !del.contains(i)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|j| !del.contains(j)).collect();
        IntMatrix::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self[(keep_rows[i], keep_cols[j])].clone()
        })
    }

    /// Submatrix on the given row and column index lists (0-based, in order).
    pub fn submatrix(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Result<IntMatrix> {
        for &i in keep_rows {
            if i >= self.rows {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: self.rows,
                });
            }
        }
        for &j in keep_cols {
            if j >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    size: self.cols,
                });
            }
        }
        IntMatrix::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self[(keep_rows[i], keep_cols[j])].clone()
        })
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        if let Some(small) = self.to_i64_vec() {
            if let Some(r) = bareiss_rank_i128(self.rows, self.cols, &small) {
                return r;
            }
        }
        bareiss_rank_big(self.rows, self.cols, self.data.clone())
    }

    /// Dimension over the rationals of the right kernel.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel, with denominators cleared: each vector is
    /// the reduced-echelon kernel vector multiplied by the least common
    /// denominator of its entries, so `self * v == 0` holds exactly over the
    /// integers.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let (rref, pivots) = self.rational_rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref[r * self.cols + free].clone();
            }
            let mut lcd = BigInt::one();
            for x in &v {
                lcd = lcd.lcm(x.denom());
            }
            let lcd = BigRational::from_integer(lcd);
            basis.push(v.iter().map(|x| (x * &lcd).to_integer()).collect());
        }
        basis
    }

    fn rational_rref(&self) -> (Vec<BigRational>, Vec<usize>) {
        let rows = self.rows;
        let cols = self.cols;
        let mut a: Vec<BigRational> = self
            .data
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    a.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = a[r * cols + c].clone();
            for j in c..cols {
                let t = &a[r * cols + j] / &inv;
                a[r * cols + j] = t;
            }
            for i in 0..rows {
                if i == r || a[i * cols + c].is_zero() {
                    continue;
                }
                let f = a[i * cols + c].clone();
                for j in c..cols {
                    let t = &a[i * cols + j] - &f * &a[r * cols + j];
                    a[i * cols + j] = t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Text format: a `rows cols` header line followed by one line of
    /// space-separated integers per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing header line"))?;
        let mut parts = header.split_whitespace();
        let rows = parse_usize(parts.next(), line_no + 1, "row count")?;
        let cols = parse_usize(parts.next(), line_no + 1, "column count")?;
        if parts.next().is_some() {
            return Err(parse_err(line_no + 1, "trailing tokens after header"));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (line_no, line) = lines
                .next()
                .ok_or_else(|| parse_err(r + 2, "missing matrix row"))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != cols {
                return Err(parse_err(
                    line_no + 1,
                    &format!("expected {} entries, got {}", cols, entries.len()),
                ));
            }
            for tok in entries {
                let v: BigInt = tok
                    .parse()
                    .map_err(|_| parse_err(line_no + 1, &format!("bad integer `{tok}`")))?;
                data.push(v);
            }
        }
        for (line_no, line) in lines {
            if !line.trim().is_empty() {
                return Err(parse_err(line_no + 1, "unexpected trailing content"));
            }
        }
        IntMatrix::new(rows, cols, data)
    }

    fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.data
            .iter()
            .map(i64::try_from)
            .collect::<std::result::Result<_, _>>()
            .ok()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntMatrix({}x{})\n{}",
            self.rows,
            self.cols,
            self.to_text()
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| parse_err(line, &format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, &format!("bad {what}")))
}

/// Square integer matrix constrained antisymmetric: `a[i][j] == -a[j][i]`,
/// zero diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewIntMatrix {
    inner: IntMatrix,
}

impl SkewIntMatrix {
    pub fn from_matrix(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::MatrixMismatch(m.rows, m.cols, m.cols, m.rows));
        }
        for i in 0..m.rows {
            for j in i..m.cols {
                if m[(i, j)] != -(&m[(j, i)]) {
                    return Err(Error::NotAntisymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { inner: m })
    }

    /// Builds from the strict upper triangle; the mirror entries and the zero
    /// diagonal are filled in.
    pub fn from_upper_fn(size: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self> {
        let mut m = IntMatrix::zero(size, size)?;
        for i in 0..size {
            for j in (i + 1)..size {
                let v = f(i, j);
                m.set(j, i, -(&v));
                m.set(i, j, v);
            }
        }
        Ok(Self { inner: m })
    }

    pub fn size(&self) -> usize {
        self.inner.rows
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.inner
    }

    /// Principal submatrix on the given indices (0-based; sorted internally).
    /// Principal submatrices of antisymmetric matrices stay antisymmetric.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<SkewIntMatrix> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let sub = self.inner.submatrix(&keep, &keep)?;
        Ok(Self { inner: sub })
    }

    pub fn kernel_dim(&self) -> usize {
        self.inner.kernel_dim()
    }
}

impl fmt::Debug for SkewIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Skew{:?}", self.inner)
    }
}

/// Kernel dimension for a row-major machine-integer matrix. Hot path for the
/// enumeration sweeps; falls back to big integers if the fraction-free
/// products overflow `i128`.
pub(crate) fn kernel_dim_i64(rows: usize, cols: usize, data: &[i64]) -> usize {
    debug_assert_eq!(data.len(), rows * cols);
    if let Some(r) = bareiss_rank_i128(rows, cols, data) {
        return cols - r;
    }
    let big: Vec<BigInt> = data.iter().map(|&x| BigInt::from(x)).collect();
    cols - bareiss_rank_big(rows, cols, big)
}

/// One-step fraction-free elimination; all divisions are exact. Pivots are
/// chosen as the first nonzero entry of the remaining block, scanning rows
/// then columns.
fn bareiss_rank_i128(rows: usize, cols: usize, data: &[i64]) -> Option<usize> {
    let mut a: Vec<i128> = data.iter().map(|&x| x as i128).collect();
    let mut prev: i128 = 1;
    let mut r = 0;
    while r < rows && r < cols {
        let mut pivot = None;
        'scan: for i in r..rows {
            for j in r..cols {
                if a[i * cols + j] != 0 {
                    pivot = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return Some(r);
        };
        if pi != r {
            for j in 0..cols {
                a.swap(r * cols + j, pi * cols + j);
            }
        }
        if pj != r {
            for i in 0..rows {
                a.swap(i * cols + r, i * cols + pj);
            }
        }
        let p = a[r * cols + r];
        for i in (r + 1)..rows {
            let h = a[i * cols + r];
            for j in (r + 1)..cols {
                let t = p
                    .checked_mul(a[i * cols + j])?
                    .checked_sub(h.checked_mul(a[r * cols + j])?)?;
                a[i * cols + j] = t / prev;
            }
            a[i * cols + r] = 0;
        }
        prev = p;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    while r < rows && r < cols {
        let mut pivot = None;
        'scan: for i in r..rows {
            for j in r..cols {
                if !a[i * cols + j].is_zero() {
                    pivot = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return r;
        };
        if pi != r {
            for j in 0..cols {
                a.swap(r * cols + j, pi * cols + j);
            }
        }
        if pj != r {
            for i in 0..rows {
                a.swap(i * cols + r, i * cols + pj);
            }
        }
        let p = a[r * cols + r].clone();
        for i in (r + 1)..rows {
            let h = a[i * cols + r].clone();
            for j in (r + 1)..cols {
                let t = (&p * &a[i * cols + j] - &h * &a[r * cols + j]) / &prev;
                a[i * cols + j] = t;
            }
            a[i * cols + r] = BigInt::zero();
        }
        prev = p;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    // Skew-adjacency matrix of the worked 4x4 example diagram.
    fn example_5x5() -> IntMatrix {
        mat(&[
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![-1, 0, 0, 1, 1],
            vec![0, -1, -1, 0, 1],
            vec![0, 0, -1, -1, 0],
        ])
    }

    #[test]
    fn kernel_dim_of_example_matrix_is_one() {
        assert_eq!(example_5x5().kernel_dim(), 1);
        assert_eq!(example_5x5().rank(), 4);
    }

    #[test]
    fn kernel_basis_of_example_matrix_spans_expected_line() {
        let m = example_5x5();
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        // proportional to (1, 1, 0, 0, 1)
        assert!(!v[0].is_zero());
        assert_eq!(v[0], v[1]);
        assert_eq!(v[0], v[4]);
        assert!(v[2].is_zero());
        assert!(v[3].is_zero());
        // exact annihilation
        for i in 0..5 {
            let mut acc = BigInt::zero();
            for j in 0..5 {
                acc += &m[(i, j)] * &v[j];
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn empty_and_zero_matrices() {
        let empty = IntMatrix::zero(0, 0).unwrap();
        assert_eq!(empty.kernel_dim(), 0);
        assert_eq!(empty.rank(), 0);
        for k in 1..5 {
            let z = IntMatrix::zero(k, k).unwrap();
            assert_eq!(z.kernel_dim(), k);
        }
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let id = IntMatrix::identity(3).unwrap();
        assert_eq!(id.kernel_dim(), 0);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn single_equation_kernel() {
        let m = mat(&[vec![1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0][0], -(&basis[0][1]));
        assert!(!basis[0][0].is_zero());
    }

    #[test]
    fn delete_rows_cols_examples() {
        let m = example_5x5();
        let all: Vec<usize> = (0..5).collect();
        let empty = m.delete_rows_cols(&all).unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 0));

        let id2 = IntMatrix::identity(2).unwrap();
        let one = id2.delete_rows_cols(&[0]).unwrap();
        assert_eq!(one, IntMatrix::identity(1).unwrap());

        // removing indices {1,2,5} (1-based) leaves the block on {3,4}
        let sub = m.delete_rows_cols(&[0, 1, 4]).unwrap();
        assert_eq!(sub, mat(&[vec![0, 1], vec![-1, 0]]));
    }

    #[test]
    fn delete_rejects_out_of_range() {
        let m = IntMatrix::identity(2).unwrap();
        assert!(matches!(
            m.delete_rows_cols(&[2]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn size_guardrail() {
        assert!(matches!(
            IntMatrix::zero(MAX_MATRIX_SIZE + 1, 1),
            Err(Error::MatrixTooLarge { .. })
        ));
    }

    #[test]
    fn skew_constructor_validates() {
        let ok = mat(&[vec![0, 2], vec![-2, 0]]);
        assert!(SkewIntMatrix::from_matrix(ok).is_ok());
        let bad = mat(&[vec![0, 2], vec![2, 0]]);
        assert!(matches!(
            SkewIntMatrix::from_matrix(bad),
            Err(Error::NotAntisymmetric { .. })
        ));
        let bad_diag = mat(&[vec![1]]);
        assert!(SkewIntMatrix::from_matrix(bad_diag).is_err());
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let v = i64::MAX;
        let m = mat(&[vec![v, v], vec![v, -v]]);
        // i128 products overflow during elimination; the BigInt path must
        // still see full rank.
        assert_eq!(m.kernel_dim(), 0);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn text_round_trip() {
        let m = example_5x5();
        let parsed = IntMatrix::parse(&m.to_text()).unwrap();
        assert_eq!(parsed, m);
        let empty = IntMatrix::zero(0, 0).unwrap();
        assert_eq!(IntMatrix::parse(&empty.to_text()).unwrap(), empty);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = IntMatrix::parse("2 2\n1 2\n3").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(IntMatrix::parse("2\n").is_err());
        assert!(IntMatrix::parse("1 1\nx\n").is_err());
    }

    #[test]
    fn kernel_dim_wide_and_tall() {
        // 0 x k has an all-of-Q^k kernel; k x 0 has none.
        let wide = IntMatrix::zero(0, 3).unwrap();
        assert_eq!(wide.kernel_dim(), 3);
        let tall = IntMatrix::zero(3, 0).unwrap();
        assert_eq!(tall.kernel_dim(), 0);
    }
}
