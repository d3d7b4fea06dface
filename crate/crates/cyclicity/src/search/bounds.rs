//! Upper bounds, exhaustive lower bounds, and the per-dimension table.

use serde::Serialize;

use crate::arith::{checked_factorial, floor_log, is_prime};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::simplex::PPowerForm;

use super::census::find_first_empty;
use super::pool::pool_size;

/// The upper-bound components for the maximal rank of an empty p-power
/// simplex in dimension `d`, and their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundSheet {
    pub p: u64,
    pub d: usize,
    /// `d - floor(log_p d) - 1`.
    pub log_bound: usize,
    /// Largest `r` such that the pool over `d - r` rows has at least `r`
    /// columns; a rank-r block needs r distinct admissible columns.
    pub pool_bound: usize,
    /// `d - 3`, valid from dimension 4 on.
    pub linear_bound: Option<usize>,
    pub combined: usize,
}

/// Compute all bound components for `(p, d)`.
pub fn crp_upper(p: u64, d: usize) -> BoundSheet {
    assert!(is_prime(p), "{p} is not prime");
    assert!(d >= 1);
    let log_bound = d - floor_log(p, d as u64) - 1;
    let pool_bound = (0..=d)
        .rev()
        .find(|&r| pool_size(p, d - r) >= r as u128)
        .unwrap_or(0);
    let linear_bound = (d >= 4).then(|| d - 3);
    let combined = log_bound
        .min(pool_bound)
        .min(linear_bound.unwrap_or(usize::MAX));
    BoundSheet { p, d, log_bound, pool_bound, linear_bound, combined }
}

/// The exact maximal rank of an empty 2-power simplex in dimension `d >= 3`:
/// `d - floor(log2 d) - 1`.
pub fn cr2_value(d: usize) -> usize {
    assert!(d >= 3);
    d - floor_log(2, d as u64) - 1
}

/// Outcome of the downward search for the maximal rank with an empty
/// witness.
#[derive(Clone, Debug)]
pub struct CrpResult {
    pub p: u64,
    pub d: usize,
    pub rank: usize,
    pub witness: PPowerForm,
    /// True when every rank above `rank` was searched exhaustively, making
    /// `rank` the exact maximum; false when some census hit a cap, making
    /// `rank` a certified lower bound only.
    pub exhaustive: bool,
}

/// Largest rank at which a census finds an empty survivor, searched
/// downward from the combined upper bound so the first hit is maximal.
pub fn crp_lower(p: u64, d: usize, config: &Config) -> Result<CrpResult> {
    if !is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not prime")));
    }
    if d == 0 {
        return Err(Error::InvalidParams("dimension must be positive".into()));
    }
    let upper = crp_upper(p, d);
    let mut exhaustive = true;
    for rank in (0..=upper.combined).rev() {
        match find_first_empty(p, d, rank, config) {
            Ok(Some(witness)) => return Ok(CrpResult { p, d, rank, witness, exhaustive }),
            Ok(None) => {}
            Err(e) if e.is_cap_violation() => exhaustive = false,
            Err(e) => return Err(e),
        }
    }
    unreachable!("rank 0 always has the unimodular witness")
}

/// One row of the per-dimension table: the best lower bound over the
/// configured primes and the universal upper bound.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub d: usize,
    /// `max_p crp_lower(p, d)` over the configured primes.
    pub lower: usize,
    /// A prime attaining the lower bound.
    pub lower_prime: u64,
    /// True when every contributing search was exhaustive.
    pub lower_exhaustive: bool,
    /// Combines the linear bound `d - 3`, the one-step jump bound from the
    /// previous dimension, and the rank cap forced by pools over fewer than
    /// two rows being empty for every prime.
    pub upper: usize,
}

impl TableRow {
    /// `"r"` when the bracket is tight, `"lo..hi"` otherwise.
    pub fn bracket(&self) -> String {
        if self.lower == self.upper {
            format!("{}", self.lower)
        } else {
            format!("{}..{}", self.lower, self.upper)
        }
    }
}

/// Compute the table for dimensions `1..=max_dim` over the given primes.
pub fn compute_table(primes: &[u64], max_dim: usize, config: &Config) -> Result<Vec<TableRow>> {
    if primes.is_empty() {
        return Err(Error::InvalidParams("need at least one prime".into()));
    }
    let mut rows: Vec<TableRow> = Vec::with_capacity(max_dim);
    for d in 1..=max_dim {
        let mut lower = 0usize;
        let mut lower_prime = primes[0];
        let mut lower_exhaustive = true;
        for &p in primes {
            let res = crp_lower(p, d, config)?;
            if res.rank > lower {
                lower = res.rank;
                lower_prime = p;
            }
            lower_exhaustive &= res.exhaustive;
        }
        // no admissible columns exist over k <= 1 rows, for any prime
        let rank_cap = d.saturating_sub(2);
        let mut upper = rank_cap;
        if d >= 4 {
            upper = upper.min(d - 3);
        }
        if let Some(prev) = rows.last() {
            upper = upper.min(prev.upper + 1);
        }
        rows.push(TableRow { d, lower, lower_prime, lower_exhaustive, upper });
    }
    Ok(rows)
}

/// The canonicalization search-space size `d! * (d+1)`, used by callers to
/// pre-check the perm cap.
pub fn perm_space(d: usize) -> u128 {
    checked_factorial(d)
        .and_then(|f| f.checked_mul((d + 1) as u128))
        .unwrap_or(u128::MAX)
}
