//! Canonicalization of lattice simplices up to unimodular equivalence.
//!
//! Two simplices with a vertex at the origin are unimodularly equivalent if
//! and only if their row lattices agree after re-rooting at some vertex and
//! permuting coordinates. The canonical form is therefore the row-major
//! lexicographic minimum of the canonical lattice basis of
//! `P * U_k * A^T` over all permutation matrices `P` and all roots
//! `k in {0, ..., d}`, where `U_0` is the identity and `U_k` re-roots the
//! simplex at vertex `k`. Equal canonical forms characterize equivalence.
//!
//! The search space has `d! * (d+1)` elements; a machine-integer Hermite
//! kernel with overflow checking carries the hot loop and falls back to
//! arbitrary precision when any entry leaves the i64 range.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::checked_factorial;
use crate::error::{Error, Result};
use crate::linalg::row_hnf;
use crate::matrix::IntMatrix;

use super::LatticeSimplex;

/// Lexicographically minimal canonical lattice basis over all equivalence
/// moves. Two simplices are unimodularly equivalent iff their canonical
/// forms are entry-wise equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub matrix: IntMatrix,
}

impl LatticeSimplex {
    /// Compute the canonical form. Fails with `PermCapExceeded` when
    /// `d! * (d+1)` exceeds `perm_cap` (the default cap admits d <= 9).
    pub fn canonical_form(&self, perm_cap: u64) -> Result<CanonicalForm> {
        check_perm_cap(self.dim(), perm_cap)?;
        let rooted = rooted_matrices(self);
        if let Some(small) = to_small(&rooted) {
            if let Some(best) = small_search(&small, self.dim(), None) {
                let d = self.dim();
                let mut matrix = IntMatrix::zero(d, d);
                for i in 0..d {
                    for j in 0..d {
                        // canonical basis = transpose of the minimal HNF
                        matrix.set(i, j, BigInt::from(best[j * d + i]));
                    }
                }
                return Ok(CanonicalForm { matrix });
            }
        }
        Ok(CanonicalForm { matrix: big_search(&rooted, self.dim()) })
    }

    /// Decide unimodular equivalence directly, with early exit on the first
    /// matching move. Agrees with canonical-form equality.
    pub fn is_equivalent_to(&self, other: &LatticeSimplex, perm_cap: u64) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        check_perm_cap(self.dim(), perm_cap)?;
        let d = self.dim();
        let target = row_hnf(self.vertex_matrix())?.h;
        let rooted = rooted_matrices(other);
        if let Some(small) = to_small(&rooted) {
            if let Some(target_small) = matrix_to_small(&target) {
                if let Some(best) = small_search(&small, d, Some(&target_small)) {
                    return Ok(!best.is_empty());
                }
            }
        }
        // arbitrary-precision fallback
        let mut perm: Vec<usize> = (0..d).collect();
        loop {
            for m in &rooted {
                let candidate = permute_cols(m, &perm);
                if row_hnf(&candidate)?.h == target {
                    return Ok(true);
                }
            }
            if !lex_permutations(&mut perm) {
                return Ok(false);
            }
        }
    }
}

fn check_perm_cap(d: usize, perm_cap: u64) -> Result<()> {
    let needed = checked_factorial(d)
        .and_then(|f| f.checked_mul((d + 1) as u128))
        .unwrap_or(u128::MAX);
    if needed > perm_cap as u128 {
        return Err(Error::PermCapExceeded { needed, cap: perm_cap });
    }
    Ok(())
}

/// The candidate generators: `(P * U_k * A^T)^T = A * U_k^T * P^T`, where
/// `A * U_k^T` is the vertex matrix re-rooted at vertex `k` and `P^T`
/// permutes its columns. This returns the d+1 re-rooted matrices.
fn rooted_matrices(s: &LatticeSimplex) -> Vec<IntMatrix> {
    (0..=s.dim())
        .map(|k| {
            s.rooted_at(k)
                .expect("valid root index")
                .vertex_matrix()
                .clone()
        })
        .collect()
}

fn permute_cols(m: &IntMatrix, perm: &[usize]) -> IntMatrix {
    let d = m.rows();
    let mut out = IntMatrix::zero(d, d);
    for j in 0..d {
        for i in 0..d {
            out.set(i, j, m.get(i, perm[j]).clone());
        }
    }
    out
}

/// Advance `perm` to its lexicographic successor; false at the last one.
pub(crate) fn lex_permutations(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

fn to_small(matrices: &[IntMatrix]) -> Option<Vec<Vec<i128>>> {
    matrices.iter().map(matrix_to_small).collect()
}

fn matrix_to_small(m: &IntMatrix) -> Option<Vec<i128>> {
    m.as_slice().iter().map(|v| v.to_i64().map(i128::from)).collect()
}

/// Search over all (permutation, root) moves with the machine-integer
/// kernel. In minimization mode (`target == None`) returns the minimal HNF;
/// in matching mode returns an empty marker vector when no move matches and
/// a nonempty one on the first hit. `None` means arithmetic overflow; the
/// caller must rerun with arbitrary precision.
fn small_search(rooted: &[Vec<i128>], d: usize, target: Option<&[i128]>) -> Option<Vec<i128>> {
    let mut perm: Vec<usize> = (0..d).collect();
    let mut scratch = vec![0i128; d * d];
    let mut best: Option<Vec<i128>> = None;
    loop {
        for m in rooted {
            for j in 0..d {
                let src = perm[j];
                for i in 0..d {
                    scratch[i * d + j] = m[i * d + src];
                }
            }
            hnf_small(&mut scratch, d)?;
            match target {
                Some(t) => {
                    if scratch == t {
                        return Some(vec![1]);
                    }
                }
                None => {
                    let better = match &best {
                        None => true,
                        Some(b) => transposed_lex_less(&scratch, b, d),
                    };
                    if better {
                        best = Some(scratch.clone());
                    }
                }
            }
        }
        if !lex_permutations(&mut perm) {
            break;
        }
    }
    match target {
        Some(_) => Some(Vec::new()),
        None => best,
    }
}

/// Row-major lexicographic comparison of the transposes (i.e. of the
/// lower-triangular canonical bases).
fn transposed_lex_less(a: &[i128], b: &[i128], d: usize) -> bool {
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (a[j * d + i], b[j * d + i]);
            if x != y {
                return x < y;
            }
        }
    }
    false
}

/// In-place Hermite normal form over i128 with overflow checking. Returns
/// `None` on overflow or on singular input.
fn hnf_small(m: &mut [i128], d: usize) -> Option<()> {
    for col in 0..d {
        loop {
            let mut pivot_row = usize::MAX;
            for i in col..d {
                let v = m[i * d + col];
                if v != 0
                    && (pivot_row == usize::MAX
                        || v.unsigned_abs() < m[pivot_row * d + col].unsigned_abs())
                {
                    pivot_row = i;
                }
            }
            if pivot_row == usize::MAX {
                return None; // singular
            }
            if pivot_row != col {
                for j in col..d {
                    m.swap(col * d + j, pivot_row * d + j);
                }
            }
            if m[col * d + col] < 0 {
                for j in col..d {
                    m[col * d + j] = m[col * d + j].checked_neg()?;
                }
            }
            let pivot = m[col * d + col];
            let mut done = true;
            for i in (col + 1)..d {
                let head = m[i * d + col];
                if head == 0 {
                    continue;
                }
                let q = head.div_euclid(pivot);
                if q != 0 {
                    for j in col..d {
                        m[i * d + j] =
                            m[i * d + j].checked_sub(q.checked_mul(m[col * d + j])?)?;
                    }
                }
                if m[i * d + col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        let pivot = m[col * d + col];
        for i in 0..col {
            let q = m[i * d + col].div_euclid(pivot);
            if q != 0 {
                for j in col..d {
                    m[i * d + j] = m[i * d + j].checked_sub(q.checked_mul(m[col * d + j])?)?;
                }
            }
        }
    }
    Some(())
}

/// Arbitrary-precision search, used when entries do not fit machine words.
fn big_search(rooted: &[IntMatrix], d: usize) -> IntMatrix {
    let mut perm: Vec<usize> = (0..d).collect();
    let mut best: Option<IntMatrix> = None;
    loop {
        for m in rooted {
            let candidate = permute_cols(m, &perm);
            let basis = row_hnf(&candidate)
                .expect("equivalence moves preserve invertibility")
                .h
                .transpose();
            if best.as_ref().is_none_or(|b| basis < *b) {
                best = Some(basis);
            }
        }
        if !lex_permutations(&mut perm) {
            break;
        }
    }
    best.expect("at least one move")
}
