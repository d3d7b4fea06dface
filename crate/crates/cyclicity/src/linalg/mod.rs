//! Exact integer matrix decompositions: Hermite and Smith normal forms,
//! determinants and rational solves.

mod hnf;
mod snf;
mod solve;

pub use hnf::{lattice_basis, row_hnf, HermiteDecomposition};
pub use snf::{snf, SmithDecomposition};
pub use solve::{solve_exact, unimodular_inverse, RationalVector};
