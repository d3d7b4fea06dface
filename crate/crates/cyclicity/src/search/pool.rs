//! Admissible column pools and the necessary conditions for emptiness.
//!
//! For an empty p-power simplex in block shape `(E_k, B; 0, p*E_r)`:
//!
//! 1. every column of `B` has at least two nonzero entries;
//! 2. no two columns of `B` are integral multiples of one another;
//! 3. every column with exactly two nonzero entries is primitive;
//! 4. (annotation only) at maximal rank, a zero row of `B` forces the
//!    maximum to be attained one dimension lower already;
//! 5. no sub-collection of `t <= min(p, r)` columns has every row sum
//!    divisible by `p`.
//!
//! Conditions 1 and 3 filter single columns and define the pool; 2 and 5 are
//! subset filters used as an optional census prune. Condition 4 is never
//! used to prune (a zero row is legitimate, as delta9 shows).

use crate::arith::{gcd_u64, is_prime};

/// The admissible columns over `{0, ..., p-1}^k`, in ascending
/// lexicographic (base-p) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnPool {
    pub p: u64,
    pub k: usize,
    pub columns: Vec<Vec<u64>>,
}

impl ColumnPool {
    pub fn size(&self) -> usize {
        self.columns.len()
    }
}

/// Enumerate the pool of columns passing the per-column conditions (1) and
/// (3). Requires `p` prime; `k = 0` yields an empty pool.
pub fn admissible_columns(p: u64, k: usize) -> ColumnPool {
    assert!(is_prime(p), "{p} is not prime");
    let mut columns = Vec::new();
    if k == 0 {
        return ColumnPool { p, k, columns };
    }
    let mut v = vec![0u64; k];
    loop {
        // odometer over {0,...,p-1}^k, last digit fastest
        let mut i = k;
        loop {
            if i == 0 {
                return ColumnPool { p, k, columns };
            }
            i -= 1;
            v[i] += 1;
            if v[i] == p {
                v[i] = 0;
            } else {
                break;
            }
        }
        if column_admissible(&v) {
            columns.push(v.clone());
        }
    }
}

/// Conditions (1) and (3) for a single column.
pub fn column_admissible(col: &[u64]) -> bool {
    let nonzero: Vec<u64> = col.iter().copied().filter(|&x| x != 0).collect();
    if nonzero.len() < 2 {
        return false;
    }
    if nonzero.len() == 2 && gcd_u64(nonzero[0], nonzero[1]) != 1 {
        return false;
    }
    true
}

/// Pool size without enumeration:
/// `p^k - 1 - k(p-1) - C(k,2) * #{(a,b) in [1,p)^2 : gcd(a,b) > 1}`,
/// saturating at `u128::MAX`.
pub fn pool_size(p: u64, k: usize) -> u128 {
    if k == 0 {
        return 0;
    }
    let total = match crate::arith::checked_pow(p, k) {
        Some(t) => t,
        None => return u128::MAX,
    };
    let weight_le_1 = 1 + k as u128 * (p - 1) as u128;
    let pairs = (k * (k - 1) / 2) as u128;
    let imprimitive = pairs * imprimitive_pair_count(p);
    total - weight_le_1 - imprimitive
}

fn imprimitive_pair_count(p: u64) -> u128 {
    let mut count = 0u128;
    for a in 1..p {
        for b in 1..p {
            if gcd_u64(a, b) != 1 {
                count += 1;
            }
        }
    }
    count
}

/// Subset filter: conditions (2) and (5) on a candidate set of columns.
/// `false` certifies that the corresponding simplex is non-empty.
pub fn subset_admissible(columns: &[&[u64]], p: u64) -> bool {
    let r = columns.len();
    // (2) two columns that are integral multiples of one another
    for i in 0..r {
        for j in (i + 1)..r {
            if is_integral_multiple(columns[i], columns[j])
                || is_integral_multiple(columns[j], columns[i])
            {
                return false;
            }
        }
    }
    // (5) a sub-collection of t <= min(p, r) columns whose row sums are all
    // divisible by p
    let t_max = (p as usize).min(r);
    let k = columns.first().map_or(0, |c| c.len());
    let mut sums = vec![0u64; k];
    !has_zero_sum_subcollection(columns, p, t_max, 0, 0, &mut sums)
}

/// `a == mu * b` for some integer `mu >= 1`.
fn is_integral_multiple(a: &[u64], b: &[u64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut mu: Option<u64> = None;
    for (&x, &y) in a.iter().zip(b) {
        match (x, y) {
            (0, 0) => continue,
            (_, 0) => return false,
            (x, y) => {
                if x % y != 0 {
                    return false;
                }
                let q = x / y;
                match mu {
                    None => mu = Some(q),
                    Some(m) if m != q => return false,
                    Some(_) => {}
                }
            }
        }
    }
    mu.is_some()
}

fn has_zero_sum_subcollection(
    columns: &[&[u64]],
    p: u64,
    t_max: usize,
    start: usize,
    taken: usize,
    sums: &mut [u64],
) -> bool {
    if taken > 0 && sums.iter().all(|&s| s % p == 0) {
        return true;
    }
    if taken == t_max {
        return false;
    }
    for idx in start..columns.len() {
        for (s, &c) in sums.iter_mut().zip(columns[idx]) {
            *s += c;
        }
        if has_zero_sum_subcollection(columns, p, t_max, idx + 1, taken + 1, sums) {
            return true;
        }
        for (s, &c) in sums.iter_mut().zip(columns[idx]) {
            *s -= c;
        }
    }
    false
}

/// Row indices of `rows` that are entirely zero (condition (4) annotation).
pub fn zero_rows(rows: &[Vec<u64>]) -> Vec<usize> {
    rows.iter()
        .enumerate()
        .filter(|(_, row)| row.iter().all(|&x| x == 0))
        .map(|(i, _)| i)
        .collect()
}
