//! Stratum dimensions for systems given by an antisymmetric integer exponent
//! matrix, covering the quantum-matrix case through its block matrix.
//!
//! A system of size `N` assigns to every subset `w` of its indices the
//! kernel dimension of the principal submatrix on the complement of `w`.
//! Every subset is accepted; no attempt is made to decide which subsets are
//! genuine diagrams of a particular algebra.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::CauchonDiagram;
use crate::error::{Error, Result};
use crate::exactla::SkewIntMatrix;

/// Size `N` plus the antisymmetric exponent matrix.
#[derive(Clone)]
pub struct CglSystem {
    exponents: SkewIntMatrix,
}

impl CglSystem {
    pub fn new(exponents: SkewIntMatrix) -> Self {
        Self { exponents }
    }

    pub fn size(&self) -> usize {
        self.exponents.size()
    }

    pub fn exponents(&self) -> &SkewIntMatrix {
        &self.exponents
    }

    /// File format: `N` on the first line, then the `N x N` integer matrix,
    /// one row per line.
    pub fn parse(text: &str) -> Result<Self> {
        let first = text.lines().next().ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing size line".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            message: "bad system size".into(),
        })?;
        let body: String =
            format!("{n} {n}\n") + &text.lines().skip(1).collect::<Vec<_>>().join("\n");
        let matrix = crate::exactla::IntMatrix::parse(&body)?;
        Ok(Self {
            exponents: SkewIntMatrix::from_matrix(matrix)?,
        })
    }

    pub fn to_text(&self) -> String {
        let m = self.exponents.as_matrix();
        let mut out = format!("{}\n", self.size());
        for i in 0..self.size() {
            let row: Vec<String> = (0..self.size()).map(|j| m[(i, j)].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A subset `w` of `0..N` together with its increasingly ordered complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementSet {
    size: usize,
    subset: Vec<usize>,
    complement: Vec<usize>,
}

impl ComplementSet {
    /// Builds from 0-based indices; duplicates collapse.
    pub fn new(size: usize, subset: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut subset: Vec<usize> = subset.into_iter().collect();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&bad) = subset.iter().find(|&&i| i >= size) {
            return Err(Error::SubsetOutOfRange { index: bad, size });
        }
        let mut in_subset = vec![false; size];
        for &i in &subset {
            in_subset[i] = true;
        }
        let complement = (0..size).filter(|&i| !in_subset[i]).collect();
        Ok(Self {
            size,
            subset,
            complement,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }
}

/// Principal submatrix of the system's exponent matrix on the complement of
/// `w`, the matrix whose kernel dimension is the stratum dimension.
pub fn stratum_matrix(sys: &CglSystem, w: &ComplementSet) -> Result<SkewIntMatrix> {
    if w.size() != sys.size() {
        return Err(Error::GridMismatch(
            sys.size(),
            sys.size(),
            w.size(),
            w.size(),
        ));
    }
    sys.exponents.principal_submatrix(w.complement())
}

/// Stratum dimension of the subset `w`: kernel dimension of
/// [`stratum_matrix`]. Defined for all `2^N` subsets.
pub fn cgl_stratum_dim(sys: &CglSystem, w: &ComplementSet) -> Result<usize> {
    Ok(stratum_matrix(sys, w)?.kernel_dim())
}

/// Fixed bijection between grid boxes and system indices for the
/// quantum-matrix system: box `(i, a)` (0-based row, column) maps to index
/// `a * m + i`, so each diagonal `m x m` block of the matrix collects the
/// boxes of one grid column.
#[derive(Clone, Copy, Debug)]
pub struct QuantumIndexMap {
    m: usize,
    n: usize,
}

impl QuantumIndexMap {
    pub fn grid(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn index(&self, row: usize, col: usize) -> usize {
        assert!(row < self.m && col < self.n, "box out of range");
        col * self.m + row
    }

    pub fn grid_box(&self, index: usize) -> (usize, usize) {
        assert!(index < self.m * self.n, "index out of range");
        (index % self.m, index / self.m)
    }

    /// Image of a diagram's black boxes, sorted increasingly.
    pub fn black_indices(&self, c: &CauchonDiagram) -> Result<Vec<usize>> {
        if c.m() != self.m || c.n() != self.n {
            return Err(Error::GridMismatch(self.m, self.n, c.m(), c.n()));
        }
        let mut out = Vec::with_capacity(c.black_count());
        for row in 0..self.m {
            for col in 0..self.n {
                if c.is_black(row, col) {
                    out.push(self.index(row, col));
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// The `mn x mn` exponent matrix of `m x n` quantum matrices, together with
/// the index map tying matrix indices to grid boxes.
///
/// Under the map, entry `(k, l)` is `+1` when box `k` is strictly left of
/// box `l` in the same row or strictly above it in the same column, `-1`
/// mirrored, `0` otherwise; in block form the diagonal blocks are the
/// `m x m` matrix with `+1` above the diagonal, and every off-diagonal block
/// is `I_m` (above) or `-I_m` (below).
pub fn quantum_matrix_system(m: usize, n: usize) -> Result<(CglSystem, QuantumIndexMap)> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyGrid);
    }
    let map = QuantumIndexMap { m, n };
    let size = m * n;
    let exponents = SkewIntMatrix::from_upper_fn(size, |k, l| {
        let (r1, c1) = map.grid_box(k);
        let (r2, c2) = map.grid_box(l);
        if r1 == r2 || c1 == c2 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })?;
    Ok((CglSystem::new(exponents), map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate;
    use crate::exactla::IntMatrix;
    use crate::strata;

    #[test]
    fn quantum_matrix_system_1x1() {
        let (sys, _) = quantum_matrix_system(1, 1).unwrap();
        assert_eq!(sys.size(), 1);
        assert!(sys.exponents().as_matrix()[(0, 0)].is_zero());
    }

    #[test]
    fn quantum_matrix_system_2x2() {
        let (sys, _) = quantum_matrix_system(2, 2).unwrap();
        let expected = IntMatrix::from_i64_rows(&[
            vec![0, 1, 1, 0],
            vec![-1, 0, 0, 1],
            vec![-1, 0, 0, 1],
            vec![0, -1, -1, 0],
        ])
        .unwrap();
        assert_eq!(sys.exponents().as_matrix(), &expected);
    }

    #[test]
    fn quantum_matrix_system_matches_block_structure() {
        // n x n grid of m x m blocks: diagonal blocks with +1 above the
        // diagonal, identity blocks elsewhere
        let (m, n) = (2, 3);
        let (sys, _) = quantum_matrix_system(m, n).unwrap();
        let blockwise = IntMatrix::from_fn(m * n, m * n, |k, l| {
            let (bi, bj) = (k / m, l / m);
            let (i, j) = (k % m, l % m);
            let v: i64 = if bi == bj {
                (j > i) as i64 - (j < i) as i64
            } else if i == j {
                if bj > bi {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            BigInt::from(v)
        })
        .unwrap();
        assert_eq!(sys.exponents().as_matrix(), &blockwise);
    }

    #[test]
    fn stratum_matrix_extremes() {
        let (sys, _) = quantum_matrix_system(2, 2).unwrap();
        let full = ComplementSet::new(4, 0..4).unwrap();
        let m = stratum_matrix(&sys, &full).unwrap();
        assert_eq!(m.size(), 0);
        assert_eq!(cgl_stratum_dim(&sys, &full).unwrap(), 0);

        let empty = ComplementSet::new(4, []).unwrap();
        let m = stratum_matrix(&sys, &empty).unwrap();
        assert_eq!(m.as_matrix(), sys.exponents().as_matrix());
        assert_eq!(cgl_stratum_dim(&sys, &empty).unwrap(), 2);
    }

    #[test]
    fn zero_system_has_full_stratum() {
        let zero = SkewIntMatrix::from_matrix(IntMatrix::zero(5, 5).unwrap()).unwrap();
        let sys = CglSystem::new(zero);
        let w = ComplementSet::new(5, []).unwrap();
        assert_eq!(cgl_stratum_dim(&sys, &w).unwrap(), 5);
    }

    #[test]
    fn every_subset_is_accepted() {
        let (sys, _) = quantum_matrix_system(2, 2).unwrap();
        let mut seen = 0;
        for bits in 0u32..16 {
            let subset = (0..4).filter(|&i| bits >> i & 1 == 1);
            let w = ComplementSet::new(4, subset).unwrap();
            let dim = cgl_stratum_dim(&sys, &w).unwrap();
            assert!(dim <= 4 - w.subset().len());
            seen += 1;
        }
        assert_eq!(seen, 16);
    }

    #[test]
    fn subset_out_of_range() {
        assert!(matches!(
            ComplementSet::new(3, [3]),
            Err(Error::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn diagram_and_system_routes_agree_on_small_grids() {
        for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let (sys, map) = quantum_matrix_system(m, n).unwrap();
            for d in enumerate(m, n).unwrap() {
                let w = ComplementSet::new(m * n, map.black_indices(&d).unwrap()).unwrap();
                let via_system = cgl_stratum_dim(&sys, &w).unwrap();
                assert_eq!(via_system, strata::stratum_dim(&d), "diagram {d}");

                // entrywise match under the permutation sorting white boxes
                // by system index
                let whites = d.white_boxes();
                let mc = strata::skew_adjacency(&d);
                let mw = stratum_matrix(&sys, &w).unwrap();
                let mut order: Vec<usize> = (0..whites.len()).collect();
                order.sort_by_key(|&k| map.index(whites[k].0, whites[k].1));
                for (s, &ks) in order.iter().enumerate() {
                    for (t, &kt) in order.iter().enumerate() {
                        assert_eq!(mw.as_matrix()[(s, t)], mc.as_matrix()[(ks, kt)]);
                    }
                }
            }
        }
    }

    #[test]
    fn system_text_round_trip() {
        let (sys, _) = quantum_matrix_system(2, 2).unwrap();
        let parsed = CglSystem::parse(&sys.to_text()).unwrap();
        assert_eq!(parsed.exponents().as_matrix(), sys.exponents().as_matrix());
        assert!(CglSystem::parse("2\n0 1\n1 0\n").is_err());
        assert!(CglSystem::parse("x\n").is_err());
    }
}
