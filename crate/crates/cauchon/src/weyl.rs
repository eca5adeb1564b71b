//! Root systems, reduced words, and the linear algebra attached to them:
//! prefix roots of a word, the antisymmetric matrix of their pairwise inner
//! products, and the kernel dimension of `id + w`.
//!
//! All computations happen in the simple-root basis with integer matrices.
//! Cartan matrices follow the convention `a[i][j] = 2 (α_i, α_j) / (α_i, α_i)`
//! with short roots normalized to squared length 2, so the symmetrizers
//! `d_i = (α_i, α_i) / 2` lie in `{1, 2, 3}` and `(α_i, α_j) = d_i a[i][j]`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactla::{IntMatrix, SkewIntMatrix};

/// Family letter of a finite root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystemKind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Cartan matrix, symmetrizers, and rank of a finite simple root system.
///
/// Supported: `A1..A8`, `B2..B8`, `C2..C8`, `D3..D8`, `E6..E8`, `F4`, `G2`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootSystemKind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
}

impl RootSystem {
    pub fn new(kind: RootSystemKind, rank: usize) -> Result<Self> {
        use RootSystemKind::*;
        let ok = match kind {
            A => (1..=8).contains(&rank),
            B | C => (2..=8).contains(&rank),
            D => (3..=8).contains(&rank),
            E => (6..=8).contains(&rank),
            F => rank == 4,
            G => rank == 2,
        };
        if !ok {
            return Err(Error::UnsupportedRootSystem {
                name: format!("{kind:?}{rank}"),
            });
        }

        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        fn bond(c: &mut [Vec<i64>], i: usize, j: usize) {
            c[i][j] = -1;
            c[j][i] = -1;
        }
        let mut sym = vec![1i64; rank];
        match kind {
            A => {
                for i in 0..rank - 1 {
                    bond(&mut cartan, i, i + 1);
                }
            }
            B => {
                for i in 0..rank - 1 {
                    bond(&mut cartan, i, i + 1);
                }
                cartan[rank - 1][rank - 2] = -2;
                for d in sym.iter_mut().take(rank - 1) {
                    *d = 2;
                }
            }
            C => {
                for i in 0..rank - 1 {
                    bond(&mut cartan, i, i + 1);
                }
                cartan[rank - 2][rank - 1] = -2;
                sym[rank - 1] = 2;
            }
            D => {
                for i in 0..rank.saturating_sub(3) {
                    bond(&mut cartan, i, i + 1);
                }
                bond(&mut cartan, rank - 3, rank - 2);
                bond(&mut cartan, rank - 3, rank - 1);
            }
            E => {
                let edges: &[(usize, usize)] =
                    &[(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
                for &(i, j) in edges.iter().filter(|&&(i, j)| i < rank && j < rank) {
                    bond(&mut cartan, i, j);
                }
            }
            F => {
                bond(&mut cartan, 0, 1);
                bond(&mut cartan, 1, 2);
                bond(&mut cartan, 2, 3);
                cartan[2][1] = -2;
                sym[0] = 2;
                sym[1] = 2;
            }
            G => {
                cartan[0][1] = -3;
                cartan[1][0] = -1;
                sym[1] = 3;
            }
        }

        let rs = Self {
            kind,
            rank,
            cartan,
            sym,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    /// Parses names like `A3`, `b2`, `G2`.
    pub fn parse(name: &str) -> Result<Self> {
        let bad = || Error::UnsupportedRootSystem {
            name: name.to_string(),
        };
        let mut chars = name.trim().chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => RootSystemKind::A,
            Some('B') => RootSystemKind::B,
            Some('C') => RootSystemKind::C,
            Some('D') => RootSystemKind::D,
            Some('E') => RootSystemKind::E,
            Some('F') => RootSystemKind::F,
            Some('G') => RootSystemKind::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(kind, rank)
    }

    fn check_invariants(&self) -> Result<()> {
        for i in 0..self.rank {
            if self.cartan[i][i] != 2 || !(1..=3).contains(&self.sym[i]) {
                return Err(Error::UnsupportedRootSystem {
                    name: format!("{self}"),
                });
            }
            for j in 0..self.rank {
                if i == j {
                    continue;
                }
                let a = self.cartan[i][j];
                if !(-3..=0).contains(&a) || self.sym[i] * a != self.sym[j] * self.cartan[j][i] {
                    return Err(Error::UnsupportedRootSystem {
                        name: format!("{self}"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    /// Gram matrix of the simple roots, `(α_i, α_j) = d_i a[i][j]`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.sym[i] * self.cartan[i][j])
                    .collect()
            })
            .collect()
    }

    fn check_letter(&self, letter: usize) -> Result<()> {
        if letter == 0 || letter > self.rank {
            return Err(Error::LetterOutOfRange {
                letter,
                rank: self.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

/// A word in the simple reflections, letters 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Parses comma-separated 1-based letters; the empty string is the empty
    /// word.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let mut letters = Vec::new();
        for tok in text.split(',') {
            let v: usize = tok.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad word letter `{tok}`"),
            })?;
            letters.push(v);
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn reflection_rows(rs: &RootSystem, letter: usize) -> Vec<Vec<i64>> {
    let i = letter - 1;
    let mut m = identity(rs.rank());
    for (j, entry) in m[i].iter_mut().enumerate() {
        *entry = i64::from(i == j) - rs.cartan()[i][j];
    }
    m
}

/// Matrix of the simple reflection `s_i` in the simple-root basis, acting by
/// `α_j -> α_j - a[i][j] α_i`; in particular `s_i(α_i) = -α_i`.
pub fn reflection_matrix(rs: &RootSystem, letter: usize) -> Result<IntMatrix> {
    rs.check_letter(letter)?;
    rows_to_matrix(&reflection_rows(rs, letter))
}

fn rows_to_matrix(rows: &[Vec<i64>]) -> Result<IntMatrix> {
    IntMatrix::from_i64_rows(rows)
}

/// Matrix of the word's product of reflections, first letter applied last
/// (acting on column vectors from the left).
pub fn weyl_matrix(rs: &RootSystem, word: &WeylWord) -> Result<IntMatrix> {
    let mut acc = identity(rs.rank());
    for &letter in word.letters() {
        rs.check_letter(letter)?;
        acc = matmul(&acc, &reflection_rows(rs, letter));
    }
    rows_to_matrix(&acc)
}

/// Prefix roots of the word: the `k`-th entry is the image of `α_{i_k}`
/// under the first `k - 1` reflections, as an integer vector in the
/// simple-root basis.
pub fn beta_roots(rs: &RootSystem, word: &WeylWord) -> Result<Vec<Vec<i64>>> {
    let n = rs.rank();
    let mut prefix = identity(n);
    let mut betas = Vec::with_capacity(word.len());
    for &letter in word.letters() {
        rs.check_letter(letter)?;
        betas.push((0..n).map(|r| prefix[r][letter - 1]).collect());
        prefix = matmul(&prefix, &reflection_rows(rs, letter));
    }
    Ok(betas)
}

/// A word is reduced exactly when its prefix roots are positive (all
/// coordinates nonnegative) and pairwise distinct.
pub fn is_reduced(rs: &RootSystem, word: &WeylWord) -> Result<bool> {
    let betas = beta_roots(rs, word)?;
    let mut seen = BTreeSet::new();
    for beta in &betas {
        if beta.iter().any(|&x| x < 0) || !seen.insert(beta.clone()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Antisymmetric matrix of pairwise inner products of the prefix roots,
/// entry `(i, j) = (β_i, β_j)` for `i < j`. Requires a reduced word.
pub fn schubert_cgl_matrix(rs: &RootSystem, word: &WeylWord) -> Result<SkewIntMatrix> {
    if !is_reduced(rs, word)? {
        return Err(Error::NotReduced);
    }
    let betas = beta_roots(rs, word)?;
    let gram = rs.gram();
    let n = rs.rank();
    SkewIntMatrix::from_upper_fn(betas.len(), |i, j| {
        let mut acc = 0i64;
        for a in 0..n {
            for b in 0..n {
                acc += betas[i][a] * gram[a][b] * betas[j][b];
            }
        }
        BigInt::from(acc)
    })
}

/// Kernel dimension of `id + w` over the rationals. Requires a reduced word.
pub fn zero_stratum_dim(rs: &RootSystem, word: &WeylWord) -> Result<usize> {
    if !is_reduced(rs, word)? {
        return Err(Error::NotReduced);
    }
    let w = weyl_matrix(rs, word)?;
    let n = rs.rank();
    let id_plus_w = IntMatrix::from_fn(n, n, |i, j| {
        let mut v = w[(i, j)].clone();
        if i == j {
            v += 1;
        }
        v
    })?;
    Ok(id_plus_w.kernel_dim())
}

/// Every reduced word of every group element, enumerated breadth-first by
/// length and lexicographically within a length. Includes the empty word.
pub fn reduced_words(rs: &RootSystem) -> Vec<WeylWord> {
    let mut out = vec![WeylWord::empty()];
    let mut frontier = vec![WeylWord::empty()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for word in &frontier {
            for letter in 1..=rs.rank() {
                let mut letters = word.letters().to_vec();
                letters.push(letter);
                let candidate = WeylWord::new(letters);
                if is_reduced(rs, &candidate).expect("letters are in range") {
                    next.push(candidate);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Cross-check a word claimed to present the `m x n` quantum-matrix algebra
/// as a quantum Schubert cell in type `A_{m+n-1}`.
#[derive(Clone, Debug)]
pub struct QuantumMatrixWordCheck {
    pub word_len: usize,
    /// Expected length of a presenting word: one letter per grid box.
    pub expected_len: usize,
    /// Kernel dimension of `id + w`.
    pub zero_stratum_dim: usize,
    /// Stratum dimension of the all-white `m x n` diagram.
    pub all_white_dim: usize,
}

impl QuantumMatrixWordCheck {
    pub fn matches(&self) -> bool {
        self.word_len == self.expected_len && self.zero_stratum_dim == self.all_white_dim
    }
}

pub fn quantum_matrix_word_check(
    m: usize,
    n: usize,
    word: &WeylWord,
) -> Result<QuantumMatrixWordCheck> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyGrid);
    }
    let rs = RootSystem::new(RootSystemKind::A, m + n - 1)?;
    let zero = zero_stratum_dim(&rs, word)?;
    let all_white = crate::diagram::CauchonDiagram::all_white(m, n)?;
    Ok(QuantumMatrixWordCheck {
        word_len: word.len(),
        expected_len: m * n,
        zero_stratum_dim: zero,
        all_white_dim: crate::strata::stratum_dim(&all_white),
    })
}
