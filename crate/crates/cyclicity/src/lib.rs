//! Exact arithmetic for lattice simplices over the integer lattice.
//!
//! The crate computes quotient groups and cyclicity ranks of lattice
//! simplices, decides emptiness and hollowness by exact coset enumeration,
//! canonicalizes simplices up to unimodular equivalence, and runs exhaustive
//! censuses over p-power simplices in the normalized block shape
//! `(E_k, B; 0, p*E_r)`.
//!
//! Everything is exact: matrices carry arbitrary-precision integers and no
//! floating point is used anywhere.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod arith;
pub mod config;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod search;
pub mod simplex;

pub use config::{Config, OutputFormat};
pub use error::{Error, Result};
pub use linalg::{
    lattice_basis, row_hnf, snf, solve_exact, HermiteDecomposition, RationalVector,
    SmithDecomposition,
};
pub use matrix::IntMatrix;
pub use search::{
    admissible_columns, binary_construction, census, column_admissible, compute_table, cr2_value,
    crp_lower, crp_upper, lift3, perm_space, pool_size, subset_admissible, zero_rows, BoundSheet,
    CensusParams, ColumnPool, CrpResult, SearchReport, TableRow,
};
pub use simplex::{
    CanonicalForm, EmptinessCertificate, LatticeSimplex, NamedSimplex, PPowerForm, QuotientGroup,
    Verdict,
};
