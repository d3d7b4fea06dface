//! p-power simplices and their normalized block form.
//!
//! A p-power simplex has quotient group `(Z_p)^r`. Up to unimodular
//! equivalence it is represented by a vertex matrix in Hermite normal form
//! with the block shape
//!
//! ```text
//!     ( E_k  B     )
//!     ( 0    p*E_r )
//! ```
//!
//! where `k = d - r` and the entries of `B` lie in `{0, ..., p-1}`. The
//! block form is what the census machinery enumerates.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::linalg::{row_hnf, snf};
use crate::matrix::IntMatrix;

use super::canonical::lex_permutations;
use super::LatticeSimplex;

/// A p-power simplex in normalized block shape, carried by the prime `p`,
/// the cyclicity rank `r`, and the `(d-r) x r` block `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPowerForm {
    p: u64,
    r: usize,
    b: IntMatrix,
}

impl PPowerForm {
    pub fn new(p: u64, r: usize, b: IntMatrix) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        if b.cols() != r {
            return Err(Error::InvalidParams(format!(
                "B must have {r} columns, got {}",
                b.cols()
            )));
        }
        let p_big = BigInt::from(p);
        for i in 0..b.rows() {
            for j in 0..r {
                let e = b.get(i, j);
                if e.is_negative() || *e >= p_big {
                    return Err(Error::InvalidParams(format!(
                        "B entry {e} at ({i},{j}) outside 0..{p}"
                    )));
                }
            }
        }
        Ok(PPowerForm { p, r, b })
    }

    /// Build from small-integer rows, the JSON representation.
    pub fn from_b_rows_u64(p: u64, r: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let b = IntMatrix::from_rows(
            rows.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        )?;
        let b = if b.cols() == 0 && r == 0 {
            // `rows` of an empty block may come in as k empty rows
            IntMatrix::zero(rows.len(), 0)
        } else {
            b
        };
        PPowerForm::new(p, r, b)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Cyclicity rank of the associated simplex.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of unit-vector vertices, `k = d - r`.
    pub fn k(&self) -> usize {
        self.b.rows()
    }

    pub fn dim(&self) -> usize {
        self.k() + self.r
    }

    pub fn b(&self) -> &IntMatrix {
        &self.b
    }

    pub fn b_rows_u64(&self) -> Vec<Vec<u64>> {
        (0..self.b.rows())
            .map(|i| {
                self.b
                    .row(i)
                    .iter()
                    .map(|v| v.to_u64().expect("B entries are below p"))
                    .collect()
            })
            .collect()
    }

    /// Columns of `B` as machine integers.
    pub fn b_columns_u64(&self) -> Vec<Vec<u64>> {
        (0..self.r)
            .map(|j| {
                (0..self.b.rows())
                    .map(|i| self.b.get(i, j).to_u64().expect("B entries are below p"))
                    .collect()
            })
            .collect()
    }

    /// The assembled vertex matrix `(E_k, B; 0, p*E_r)`.
    pub fn assemble(&self) -> IntMatrix {
        let k = self.k();
        let d = self.dim();
        let mut h = IntMatrix::zero(d, d);
        for i in 0..k {
            h.set(i, i, BigInt::one());
            for j in 0..self.r {
                h.set(i, k + j, self.b.get(i, j).clone());
            }
        }
        for j in 0..self.r {
            h.set(k + j, k + j, BigInt::from(self.p));
        }
        h
    }

    /// The simplex spanned by the assembled matrix, with this form attached
    /// so that emptiness tests take the specialized path.
    pub fn to_simplex(&self) -> LatticeSimplex {
        LatticeSimplex::with_p_power(self.assemble(), self.clone())
    }

    /// Group order `p^r`.
    pub fn order(&self) -> BigInt {
        BigInt::from(self.p).pow(self.r as u32)
    }

    /// The facet spanned by all vertices except the `j`-th (1-based), which
    /// must be one of the last `r` vertices. The facet is a p-power simplex
    /// of dimension `d - 1` and rank `r - 1`.
    pub fn facet_simplex(&self, j: usize) -> Result<LatticeSimplex> {
        let d = self.dim();
        let k = self.k();
        if j < k + 1 || j > d {
            return Err(Error::IndexError { index: j, lo: k + 1, hi: d });
        }
        let drop = j - k - 1;
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let row: Vec<BigInt> = (0..self.r)
                .filter(|&c| c != drop)
                .map(|c| self.b.get(i, c).clone())
                .collect();
            rows.push(row);
        }
        let b = if self.r == 1 {
            IntMatrix::zero(k, 0)
        } else {
            IntMatrix::from_rows(rows)?
        };
        Ok(PPowerForm::new(self.p, self.r - 1, b)?.to_simplex())
    }
}

impl LatticeSimplex {
    /// Normalize a p-power simplex into the block shape `(E_k, B; 0, p*E_r)`.
    ///
    /// The Hermite normal form of the vertex matrix has all diagonal entries
    /// in `{1, p}`; simultaneously permuting rows and columns so that the
    /// unit entries lead keeps the matrix in Hermite normal form, and the
    /// lower-right block is then forced to be `p*E_r`. A brute-force search
    /// over coordinate permutations backs up the direct permutation argument.
    pub fn to_p_power_form(&self) -> Result<PPowerForm> {
        let group = self.quotient_group();
        let r = group.cyclicity_rank;
        if r == 0 {
            return Err(Error::NotPPower);
        }
        let m = &group.nontrivial_divisors[0];
        if group.nontrivial_divisors.iter().any(|d| d != m) {
            return Err(Error::NotPPower);
        }
        let p = m.to_u64().ok_or_else(|| {
            Error::InvalidParams("elementary divisor exceeds the supported prime range".into())
        })?;
        if !is_prime(p) {
            return Err(Error::NotPPower);
        }

        let d = self.dim();
        let h = row_hnf(self.vertex_matrix())?.h;
        let p_big = BigInt::from(p);

        // Sort the unit diagonal positions to the front, stably, and apply
        // the same permutation to rows and columns.
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&i| h.get(i, i) != &BigInt::one());
        let mut conj = IntMatrix::zero(d, d);
        for i in 0..d {
            for j in 0..d {
                conj.set(i, j, h.get(order[i], order[j]).clone());
            }
        }
        let normalized = row_hnf(&conj)?.h;
        if let Some(form) = extract_block_form(&normalized, p, r, &p_big) {
            return Ok(form);
        }

        // Fallback: search coordinate permutations of the vertex matrix.
        let mut perm: Vec<usize> = (0..d).collect();
        loop {
            let candidate = row_hnf(&self.vertex_matrix().permute_rows(&perm))?.h;
            if let Some(form) = extract_block_form(&candidate, p, r, &p_big) {
                return Ok(form);
            }
            if !lex_permutations(&mut perm) {
                break;
            }
        }
        Err(Error::Internal("p-power normalization failed".into()))
    }

    /// Pass to an intermediate lattice whose quotient is `(Z_p)^r`: in the
    /// Smith decomposition of `A^T`, every nontrivial divisor is replaced by
    /// `p`. The row lattice of the result contains the row lattice of `self`,
    /// so emptiness is inherited.
    pub fn reduce_to_p_power(&self, p: u64) -> Result<LatticeSimplex> {
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        let dec = snf(&self.vertex_matrix().transpose())?;
        let d = self.dim();
        let r = dec.divisors.iter().filter(|m| **m > BigInt::one()).count();
        let p_big = BigInt::from(p);
        if r > 0 {
            use num_integer::Integer;
            let smallest = &dec.divisors[r - 1];
            if !smallest.mod_floor(&p_big).is_zero() {
                return Err(Error::InvalidPrime { p });
            }
        }
        // A'^T = U * diag(p, ..., p, 1, ..., 1), hence A' = diag * U^T.
        let u_t = dec.u.transpose();
        let mut m = IntMatrix::zero(d, d);
        for i in 0..d {
            let scale = if i < r { p_big.clone() } else { BigInt::one() };
            for j in 0..d {
                m.set(i, j, u_t.get(i, j) * &scale);
            }
        }
        LatticeSimplex::new(m)
    }
}

fn extract_block_form(h: &IntMatrix, p: u64, r: usize, p_big: &BigInt) -> Option<PPowerForm> {
    let d = h.rows();
    let k = d - r;
    for i in 0..k {
        if !h.get(i, i).is_one() {
            return None;
        }
    }
    for i in k..d {
        for j in k..d {
            let expect_p = i == j;
            if expect_p && h.get(i, j) != p_big {
                return None;
            }
            if !expect_p && !h.get(i, j).is_zero() {
                return None;
            }
        }
    }
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        rows.push((k..d).map(|j| h.get(i, j).clone()).collect());
    }
    let b = if r == 0 || k == 0 {
        IntMatrix::zero(k, r)
    } else {
        IntMatrix::from_rows(rows).ok()?
    };
    PPowerForm::new(p, r, b).ok()
}
