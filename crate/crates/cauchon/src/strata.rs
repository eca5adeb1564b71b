//! Stratum dimensions of Cauchon diagrams.
//!
//! The skew-adjacency matrix of a diagram records row/column precedence
//! among its white boxes under the canonical row-major labelling: entry
//! `(i, j)` is `+1` when box `i` is strictly left of box `j` in the same row
//! or strictly above it in the same column, `-1` in the mirrored cases, `0`
//! otherwise. The stratum dimension of the diagram is the rational kernel
//! dimension of this matrix.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::CauchonDiagram;
use crate::error::{Error, Result};
use crate::exactla::{self, IntMatrix, SkewIntMatrix};

/// Skew-adjacency matrix of a diagram, indexed by its white boxes in
/// canonical row-major order.
pub fn skew_adjacency(c: &CauchonDiagram) -> SkewIntMatrix {
    let whites = c.white_boxes();
    SkewIntMatrix::from_upper_fn(whites.len(), |i, j| {
        // i < j in row-major order: same row means left-of, same column
        // means above.
        let (r1, c1) = whites[i];
        let (r2, c2) = whites[j];
        if r1 == r2 || c1 == c2 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
    .expect("white count is bounded by the grid size")
}

fn skew_adjacency_i64(c: &CauchonDiagram) -> (usize, Vec<i64>) {
    let whites = c.white_boxes();
    let d = whites.len();
    let mut data = vec![0i64; d * d];
    for i in 0..d {
        for j in (i + 1)..d {
            let (r1, c1) = whites[i];
            let (r2, c2) = whites[j];
            if r1 == r2 || c1 == c2 {
                data[i * d + j] = 1;
                data[j * d + i] = -1;
            }
        }
    }
    (d, data)
}

/// Dimension of the stratum attached to a diagram: the rational kernel
/// dimension of its skew-adjacency matrix.
pub fn stratum_dim(c: &CauchonDiagram) -> usize {
    let (d, data) = skew_adjacency_i64(c);
    exactla::kernel_dim_i64(d, d, &data)
}

/// White count and stratum dimension of one diagram.
#[derive(Clone, Debug)]
pub struct StratumReport {
    pub diagram: CauchonDiagram,
    pub white_count: usize,
    pub stratum_dim: usize,
}

impl StratumReport {
    pub fn new(diagram: CauchonDiagram) -> Self {
        let white_count = diagram.white_count();
        let stratum_dim = stratum_dim(&diagram);
        debug_assert_eq!(stratum_dim % 2, white_count % 2);
        debug_assert!(stratum_dim <= diagram.m().min(diagram.n()));
        Self {
            diagram,
            white_count,
            stratum_dim,
        }
    }
}

/// Where a triangularization audit failed, with offending entry positions
/// relative to the deleted matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangularizationFailure {
    /// Entry above the block diagonal is nonzero.
    UpperBlockNonzero {
        row: usize,
        col: usize,
        value: BigInt,
    },
    /// A diagonal block is not of the form `-I` plus a skew-symmetric matrix.
    DiagonalBlockShape {
        row: usize,
        col: usize,
        value: BigInt,
    },
    /// The deleted matrix is singular.
    SingularAfterDeletion,
}

/// Outcome of [`verify_triangularization`].
#[derive(Clone, Debug)]
pub struct TriangularizationAudit {
    /// Smallest canonical label in each column, left to right.
    pub column_min_labels: Vec<u64>,
    /// Size of the matrix left after deleting those rows and columns.
    pub deleted_size: usize,
    /// Sizes of the diagonal blocks, one per diagram row that still has
    /// undeleted white boxes.
    pub block_sizes: Vec<usize>,
    failure: Option<TriangularizationFailure>,
}

impl TriangularizationAudit {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&TriangularizationFailure> {
        self.failure.as_ref()
    }
}

/// Audits the triangularization that bounds the stratum dimension.
///
/// With canonical labels `1..=d` and `a_k` the smallest label in column `k`,
/// this builds the lower-triangular matrix `S` (unit diagonal, entry
/// `(i, a_k) = -1` for every non-minimal white box `i` of column `k`),
/// multiplies it against the skew-adjacency matrix, deletes the rows and
/// columns `a_1..a_n`, and checks that the result is block lower-triangular
/// with invertible diagonal blocks of the form `-I` plus skew-symmetric.
///
/// Diagrams with all-black columns are rejected; strip them first (removing
/// an all-black column does not change the skew-adjacency matrix).
pub fn verify_triangularization(c: &CauchonDiagram) -> Result<TriangularizationAudit> {
    let all_black = c.all_black_columns();
    if !all_black.is_empty() {
        return Err(Error::AllBlackColumns {
            cols: all_black.iter().map(|&c| c + 1).collect(),
        });
    }

    let whites = c.white_boxes();
    let d = whites.len();
    let n = c.n();

    // first white box of each column, scanning row-major, is the one with
    // the smallest label
    let mut min_in_col = vec![usize::MAX; n];
    for (k, &(_, col)) in whites.iter().enumerate() {
        if min_in_col[col] == usize::MAX {
            min_in_col[col] = k;
        }
    }

    let mut s = IntMatrix::identity(d)?;
    for (k, &(_, col)) in whites.iter().enumerate() {
        let a = min_in_col[col];
        if a != k {
            s.set(k, a, -BigInt::one());
        }
    }

    let product = s.matmul(skew_adjacency(c).as_matrix())?;
    let mut deleted = min_in_col.clone();
    deleted.sort_unstable();
    let reduced = product.delete_rows_cols(&deleted)?;

    let remaining: Vec<usize> = (0..d).filter(|k| !deleted.contains(k)).collect();
    let row_of: Vec<usize> = remaining.iter().map(|&k| whites[k].0).collect();

    let mut block_sizes = Vec::new();
    for &r in &row_of {
        match block_sizes.last_mut() {
            Some((row, size)) if *row == r => *size += 1,
            _ => block_sizes.push((r, 1usize)),
        }
    }
    let block_sizes: Vec<usize> = block_sizes.into_iter().map(|(_, s)| s).collect();

    let mut failure = None;
    'outer: for i in 0..remaining.len() {
        for j in 0..remaining.len() {
            let v = &reduced[(i, j)];
            if row_of[j] > row_of[i] {
                if !v.is_zero() {
                    failure = Some(TriangularizationFailure::UpperBlockNonzero {
                        row: i,
                        col: j,
                        value: v.clone(),
                    });
                    break 'outer;
                }
            } else if row_of[j] == row_of[i] {
                let bad = if i == j {
                    *v != -BigInt::one()
                } else {
                    !(v + &reduced[(j, i)]).is_zero()
                };
                if bad {
                    failure = Some(TriangularizationFailure::DiagonalBlockShape {
                        row: i,
                        col: j,
                        value: v.clone(),
                    });
                    break 'outer;
                }
            }
        }
    }
    if failure.is_none() && reduced.kernel_dim() != 0 {
        failure = Some(TriangularizationFailure::SingularAfterDeletion);
    }

    Ok(TriangularizationAudit {
        column_min_labels: min_in_col.iter().map(|&k| k as u64 + 1).collect(),
        deleted_size: remaining.len(),
        block_sizes,
        failure,
    })
}

/// Blackens one box so that the stratum dimension drops by exactly one.
///
/// Scans the blackening candidates in label order and returns the first (and
/// therefore smallest-label) one achieving the drop. Errors when the
/// dimension is already zero.
pub fn descend_one(c: &CauchonDiagram) -> Result<CauchonDiagram> {
    let e = stratum_dim(c);
    if e == 0 {
        return Err(Error::ZeroStratum);
    }
    for (r, col) in c.blackening_candidates() {
        let next = c.blacken(r, col)?;
        if stratum_dim(&next) == e - 1 {
            return Ok(next);
        }
    }
    Err(Error::NoDescentStep)
}

/// One diagram of a chain with its stratum dimension.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub diagram: CauchonDiagram,
    pub dim: usize,
}

/// A strictly increasing chain of diagrams whose stratum dimensions decrease
/// by one at each step, ending at dimension zero.
#[derive(Clone, Debug)]
pub struct DiagramChain {
    steps: Vec<ChainStep>,
}

impl DiagramChain {
    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    /// Number of blackening steps, equal to the starting stratum dimension.
    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }
}

/// Builds the full descent chain from a diagram down to a zero-dimensional
/// one by repeatedly blackening a single box.
pub fn build_chain(c: &CauchonDiagram) -> Result<DiagramChain> {
    let mut steps = vec![ChainStep {
        diagram: c.clone(),
        dim: stratum_dim(c),
    }];
    while steps.last().expect("nonempty").dim > 0 {
        let prev = steps.last().expect("nonempty");
        let next = descend_one(&prev.diagram)?;
        let dim = prev.dim - 1;
        steps.push(ChainStep { diagram: next, dim });
    }
    Ok(DiagramChain { steps })
}
