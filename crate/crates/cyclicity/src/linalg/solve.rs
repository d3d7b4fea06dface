//! Exact rational solving of integer linear systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A rational vector in reduced form: a common positive denominator and
/// integer numerators with `gcd(numerators..., denominator) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalVector {
    numerators: Vec<BigInt>,
    denominator: BigInt,
}

impl RationalVector {
    pub fn new(numerators: Vec<BigInt>, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "denominator must be nonzero");
        let (mut numerators, mut denominator) = if denominator.is_negative() {
            (numerators.into_iter().map(|n| -n).collect::<Vec<_>>(), -denominator)
        } else {
            (numerators, denominator)
        };
        let mut g = denominator.clone();
        for n in &numerators {
            g = g.gcd(n);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            for n in &mut numerators {
                *n /= &g;
            }
            denominator /= &g;
        }
        RationalVector { numerators, denominator }
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.numerators
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    /// The integer vector, when the denominator is one.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.is_integral().then(|| self.numerators.clone())
    }

    pub fn is_zero_vector(&self) -> bool {
        self.numerators.iter().all(|n| n.is_zero())
    }

    /// `Some(i)` when the vector equals the standard unit vector `e_i`.
    pub fn unit_index(&self) -> Option<usize> {
        if !self.denominator.is_one() {
            return None;
        }
        let mut idx = None;
        for (i, n) in self.numerators.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            if !n.is_one() || idx.is_some() {
                return None;
            }
            idx = Some(i);
        }
        idx
    }

    /// Membership in the standard simplex: all coordinates nonnegative and
    /// their sum at most one.
    pub fn in_standard_simplex(&self) -> bool {
        self.numerators.iter().all(|n| !n.is_negative())
            && self.numerators.iter().sum::<BigInt>() <= self.denominator
    }

    /// Membership in the interior of the standard simplex: all coordinates
    /// positive and their sum strictly below one.
    pub fn in_open_simplex(&self) -> bool {
        self.numerators.iter().all(|n| n.is_positive())
            && self.numerators.iter().sum::<BigInt>() < self.denominator
    }
}

/// Exact solution of `a * x = z` by fraction-free Gauss-Jordan elimination
/// (Bareiss pivots). The returned vector is in reduced form and its
/// denominator divides `|det(a)|`.
pub fn solve_exact(a: &IntMatrix, z: &[BigInt]) -> Result<RationalVector> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { left: a.rows(), right: a.cols() });
    }
    let d = a.rows();
    if z.len() != d {
        return Err(Error::DimensionMismatch { left: d, right: z.len() });
    }
    // Augmented system [a | z], eliminated to diag(det, ..., det | adj(a)*z).
    let mut m: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(z[i].clone());
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for t in 0..d {
        if m[t][t].is_zero() {
            let swap = (t + 1..d).find(|&i| !m[i][t].is_zero()).ok_or(Error::SingularMatrix)?;
            m.swap(t, swap);
        }
        let pivot = m[t][t].clone();
        for i in 0..d {
            if i == t {
                continue;
            }
            let head = m[i][t].clone();
            for j in 0..=d {
                m[i][j] = (&pivot * &m[i][j] - &head * &m[t][j]) / &prev;
            }
        }
        prev = pivot;
    }
    let numerators: Vec<BigInt> = (0..d).map(|i| m[i][d].clone()).collect();
    Ok(RationalVector::new(numerators, prev))
}

/// Exact inverse of a unimodular matrix (determinant +-1).
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { left: m.rows(), right: m.cols() });
    }
    let d = m.rows();
    let mut inv = IntMatrix::zero(d, d);
    for j in 0..d {
        let mut e = vec![BigInt::zero(); d];
        e[j] = BigInt::one();
        let col = solve_exact(m, &e)?;
        if !col.is_integral() {
            return Err(Error::InvalidParams("matrix is not unimodular".into()));
        }
        for i in 0..d {
            inv.set(i, j, col.numerators()[i].clone());
        }
    }
    Ok(inv)
}
