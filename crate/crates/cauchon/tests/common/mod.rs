//! Independent oracles shared by the integration suites.
//!
//! Everything here recomputes expected values from first principles, without
//! touching the library's own elimination or enumeration code paths:
//! validity by direct quantifier scans, counts by filtering all colourings,
//! ranks by cofactor determinants of all square submatrices.

#![allow(dead_code)]

/// The worked 4x4 diagram that appears twice in the sources below, once bare
/// and once with labels 1,3,4,8,10,15,16.
pub const EXAMPLE_4X4: &str = "4 4\n..#.\n#.#.\n##..\n####\n";

/// The labelled 4x4 diagram whose 5x5 skew-adjacency matrix is written out.
pub const EXAMPLE_LABELLED_4X4: &str = "4 4\n.###\n##.#\n.#..\n####\n";

pub const EXAMPLE_LABELLED_MATRIX: [[i64; 5]; 5] = [
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [-1, 0, 0, 1, 1],
    [0, -1, -1, 0, 1],
    [0, 0, -1, -1, 0],
];

/// Direct transcription of the diagram rule: every black box has all boxes
/// strictly to its left black, or all boxes strictly above it black.
pub fn definition_valid(grid: &[Vec<bool>]) -> bool {
    let m = grid.len();
    let n = grid[0].len();
    for i in 0..m {
        for j in 0..n {
            if grid[i][j] {
                let left_all = (0..j).all(|c| grid[i][c]);
                let above_all = (0..i).all(|r| grid[r][j]);
                if !left_all && !above_all {
                    return false;
                }
            }
        }
    }
    true
}

/// All valid colourings of an `m x n` grid as row bit masks, by filtering
/// every one of the `2^(mn)` colourings. Only sensible for `mn <= 20`.
pub fn brute_force_diagrams(m: usize, n: usize) -> Vec<Vec<u64>> {
    assert!(m * n <= 20, "brute force is exponential");
    let mut out = Vec::new();
    for bits in 0u64..(1 << (m * n)) {
        let grid: Vec<Vec<bool>> = (0..m)
            .map(|i| (0..n).map(|j| bits >> (i * n + j) & 1 == 1).collect())
            .collect();
        if definition_valid(&grid) {
            out.push(
                grid.iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .fold(0u64, |acc, (c, &b)| acc | ((b as u64) << c))
                    })
                    .collect(),
            );
        }
    }
    out
}

pub fn brute_force_count(m: usize, n: usize) -> u64 {
    brute_force_diagrams(m, n).len() as u64
}

/// Cofactor-expansion determinant; fine for the tiny matrices the oracles
/// handle.
pub fn naive_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0;
    for (j, &top) in m[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c]).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * top * naive_det(&minor);
    }
    det
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Rank as the largest size of a square submatrix with nonzero determinant.
/// Exponential; keep inputs at 6x6 or smaller.
pub fn oracle_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    for k in (1..=rows.min(cols)).rev() {
        for rsel in subsets_of_size(rows, k) {
            for csel in subsets_of_size(cols, k) {
                let sub: Vec<Vec<i64>> = rsel
                    .iter()
                    .map(|&i| csel.iter().map(|&j| m[i][j]).collect())
                    .collect();
                if naive_det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

pub fn oracle_kernel_dim(m: &[Vec<i64>]) -> usize {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    cols - oracle_rank(m)
}
