//! Hermite normal form and canonical lattice bases.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Result of `row_hnf`: `h = u * a` with `u` unimodular, `h` upper triangular
/// with positive diagonal and `0 <= h[i][j] < h[j][j]` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteDecomposition {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

/// Hermite normal form of a square invertible matrix under left-unimodular
/// row operations. The form is the unique canonical representative, so
/// `row_hnf(w * a).h == row_hnf(a).h` for every unimodular `w`.
pub fn row_hnf(a: &IntMatrix) -> Result<HermiteDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { left: a.rows(), right: a.cols() });
    }
    let d = a.rows();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(d);

    for col in 0..d {
        // Euclidean reduction in the column until a single nonzero pivot
        // remains at (col, col).
        loop {
            let pivot_row = (col..d)
                .filter(|&i| !h.get(i, col).is_zero())
                .min_by_key(|&i| h.get(i, col).abs());
            let Some(pivot_row) = pivot_row else {
                return Err(Error::SingularMatrix);
            };
            if pivot_row != col {
                h.swap_rows(col, pivot_row);
                u.swap_rows(col, pivot_row);
            }
            let pivot = h.get(col, col).clone();
            let mut done = true;
            for i in (col + 1)..d {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let q = h.get(i, col).div_floor(&pivot);
                h.sub_scaled_row(i, col, &q);
                u.sub_scaled_row(i, col, &q);
                if !h.get(i, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(col, col).is_negative() {
            h.negate_row(col);
            u.negate_row(col);
        }
        // Reduce the entries above the pivot into [0, pivot).
        let pivot = h.get(col, col).clone();
        for i in 0..col {
            let q = h.get(i, col).div_floor(&pivot);
            h.sub_scaled_row(i, col, &q);
            u.sub_scaled_row(i, col, &q);
        }
    }
    Ok(HermiteDecomposition { h, u })
}

/// Unique lower-triangular canonical basis of the column-span lattice
/// `m * Z^d`, obtained as the transpose of `row_hnf(m^T).h`. Invariant under
/// right multiplication by unimodular matrices, hence a lattice invariant.
pub fn lattice_basis(m: &IntMatrix) -> Result<IntMatrix> {
    Ok(row_hnf(&m.transpose())?.h.transpose())
}
