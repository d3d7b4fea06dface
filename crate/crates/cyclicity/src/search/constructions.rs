//! Explicit families of empty p-power simplices: the binary construction
//! and the 3-power lifting.

use num_bigint::BigInt;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::simplex::PPowerForm;

/// The block `B` whose columns are the first `ell` vectors, in ascending
/// lexicographic order, of `{0,1}^k` minus the zero and unit vectors. The
/// resulting `(k + ell)`-simplex is empty with cyclicity rank `ell`, for
/// every prime `p`.
pub fn binary_construction(p: u64, k: usize, ell: usize) -> Result<PPowerForm> {
    if !is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not prime")));
    }
    if k < 2 {
        return Err(Error::InvalidParams("binary construction requires k >= 2".into()));
    }
    let max_ell = (1usize << k) - k - 1;
    if ell < 1 || ell > max_ell {
        return Err(Error::InvalidParams(format!(
            "ell must lie in 1..={max_ell} for k={k}, got {ell}"
        )));
    }
    let mut cols: Vec<u64> = Vec::with_capacity(ell);
    for word in 1..(1u64 << k) {
        if word.count_ones() >= 2 {
            cols.push(word);
            if cols.len() == ell {
                break;
            }
        }
    }
    let mut b = IntMatrix::zero(k, ell);
    for (j, word) in cols.iter().enumerate() {
        for i in 0..k {
            // bit i of the word is coordinate i, most significant first,
            // so that columns are lexicographically ascending as vectors
            if word >> (k - 1 - i) & 1 == 1 {
                b.set(i, j, BigInt::from(1));
            }
        }
    }
    PPowerForm::new(p, ell, b)
}

/// Lift an empty 3-power form with `k` unit vertices and rank `ell` to one
/// of rank `m = 2*ell + k` in dimension `k + 1 + m`. The lifted block is
///
/// ```text
///     ( E_k  B    B     )
///     ( 1_k  1_l  2*1_l )
/// ```
///
/// Emptiness of the input must be established by the caller; the lift of an
/// empty form is empty.
pub fn lift3(form: &PPowerForm) -> Result<PPowerForm> {
    if form.p() != 3 {
        return Err(Error::InvalidParams(format!(
            "lifting is defined for p = 3, got p = {}",
            form.p()
        )));
    }
    let k = form.k();
    let ell = form.r();
    let m = 2 * ell + k;
    let mut b = IntMatrix::zero(k + 1, m);
    for i in 0..k {
        b.set(i, i, BigInt::from(1));
        for j in 0..ell {
            b.set(i, k + j, form.b().get(i, j).clone());
            b.set(i, k + ell + j, form.b().get(i, j).clone());
        }
    }
    for j in 0..k + ell {
        b.set(k, j, BigInt::from(1));
    }
    for j in 0..ell {
        b.set(k, k + ell + j, BigInt::from(2));
    }
    PPowerForm::new(3, m, b)
}
