//! Exact computation of torus-invariant stratum dimensions from
//! combinatorial data.
//!
//! The crate works with three equivalent carriers of that data:
//!
//! - **Cauchon diagrams** (`diagram`, `strata`): grids of black/white boxes
//!   whose skew-adjacency matrix over the white boxes has a rational kernel
//!   dimension equal to the stratum dimension. Includes validation,
//!   streaming enumeration, descent chains, and an executable audit of the
//!   triangularization bounding the dimension by `min(m, n)`.
//! - **Antisymmetric exponent matrices** (`cgl`): arbitrary systems given by
//!   an integer antisymmetric matrix, with the quantum-matrix block matrix
//!   built in and a fixed index map tying it back to diagrams.
//! - **Reduced Weyl-group words** (`weyl`): prefix roots, their pairwise
//!   inner-product matrix, and the kernel dimension of `id + w`.
//!
//! All linear algebra is exact (`exactla`): fraction-free elimination over
//! arbitrary-precision integers, with rational kernel bases on request.
//! `counting` adds closed-form diagram counts and exact-rational dimension
//! distributions.

pub mod cgl;
pub mod counting;
pub mod diagram;
pub mod error;
pub mod exactla;
pub mod strata;
pub mod weyl;

pub use cgl::{
    cgl_stratum_dim, quantum_matrix_system, stratum_matrix, CglSystem, ComplementSet,
    QuantumIndexMap,
};
pub use counting::{
    conjecture_limit, conjecture_table, diagram_count, dim_distribution, format_rational_decimal,
    ConjectureRow, DimDistribution,
};
pub use diagram::{
    enumerate, partitions, CauchonDiagram, DiagramIter, DiagramPartition, WhiteLabelling, MAX_COLS,
};
pub use error::{Error, Result};
pub use exactla::{IntMatrix, SkewIntMatrix, MAX_MATRIX_SIZE};
pub use strata::{
    build_chain, descend_one, skew_adjacency, stratum_dim, verify_triangularization, ChainStep,
    DiagramChain, StratumReport, TriangularizationAudit, TriangularizationFailure,
};
pub use weyl::{
    beta_roots, is_reduced, quantum_matrix_word_check, reduced_words, reflection_matrix,
    schubert_cgl_matrix, weyl_matrix, zero_stratum_dim, QuantumMatrixWordCheck, RootSystem,
    RootSystemKind, WeylWord,
};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
