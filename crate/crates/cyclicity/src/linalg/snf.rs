//! Smith normal form over the integers.
//!
//! The decomposition is returned in the convention where the elementary
//! divisors are listed with divisibility running backwards:
//! `m_d | m_{d-1} | ... | m_1`, so the first divisor is the largest. The
//! quotient group `Z^d / (A Z^d)` is then `Z_{m_r} x ... x Z_{m_1}` where
//! `r` is the largest index with `m_r > 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `a = u * diag(divisors) * v` with `u`, `v` unimodular and
/// `divisors[d-1] | divisors[d-2] | ... | divisors[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub divisors: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The divisors exceeding one, largest first.
    pub fn nontrivial_divisors(&self) -> Vec<BigInt> {
        self.divisors.iter().filter(|m| **m > BigInt::one()).cloned().collect()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let d = self.divisors.len();
        let mut s = IntMatrix::zero(d, d);
        for i in 0..d {
            s.set(i, i, self.divisors[i].clone());
        }
        s
    }
}

/// Smith normal form of a square invertible matrix.
pub fn snf(a: &IntMatrix) -> Result<SmithDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { left: a.rows(), right: a.cols() });
    }
    if a.determinant()?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d = a.rows();
    let mut s = a.clone();
    // Invariant maintained throughout: a = u * s * v.
    let mut u = IntMatrix::identity(d);
    let mut v = IntMatrix::identity(d);

    for t in 0..d {
        loop {
            // Move the entry of minimal nonzero magnitude to the pivot slot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..d {
                for j in t..d {
                    if s.get(i, j).is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s.get(i, j).abs() < s.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let (bi, bj) = best.ok_or(Error::SingularMatrix)?;
            if bi != t {
                s.swap_rows(t, bi);
                u.swap_cols(t, bi);
            }
            if bj != t {
                s.swap_cols(t, bj);
                v.swap_rows(t, bj);
            }
            let pivot = s.get(t, t).clone();
            let mut dirty = false;
            for i in (t + 1)..d {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = s.get(i, t).div_floor(&pivot);
                s.sub_scaled_row(i, t, &q);
                u.add_scaled_col(t, i, &q);
                if !s.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in (t + 1)..d {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = s.get(t, j).div_floor(&pivot);
                s.sub_scaled_col(j, t, &q);
                v.add_scaled_row(t, j, &q);
                if !s.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Pivot row and column are clear; enforce that the pivot divides
            // the remaining submatrix before moving on.
            let offender = (t + 1..d)
                .flat_map(|i| (t + 1..d).map(move |j| (i, j)))
                .find(|&(i, j)| !s.get(i, j).mod_floor(&pivot).is_zero());
            match offender {
                Some((i, _)) => {
                    s.add_scaled_row(t, i, &BigInt::one());
                    u.sub_scaled_col(i, t, &BigInt::one());
                }
                None => break,
            }
        }
    }
    for t in 0..d {
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_col(t);
        }
    }

    // The elimination produces the ascending chain s_1 | s_2 | ...; conjugate
    // by the reversal permutation to get the descending convention.
    let divisors: Vec<BigInt> = (0..d).rev().map(|i| s.get(i, i).clone()).collect();
    let mut u_rev = IntMatrix::zero(d, d);
    let mut v_rev = IntMatrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            u_rev.set(i, j, u.get(i, d - 1 - j).clone());
            v_rev.set(i, j, v.get(d - 1 - i, j).clone());
        }
    }
    Ok(SmithDecomposition { divisors, u: u_rev, v: v_rev })
}
