//! Exhaustive censuses over p-power blocks.
//!
//! A census fixes `(p, d, r)`, takes the admissible column pool over
//! `k = d - r` rows, and enumerates unordered r-subsets of the pool in
//! lexicographic order; column permutations of `B` are unimodular coordinate
//! permutations of the simplex, so combinations suffice. Each candidate is
//! tested with the p-power emptiness criterion; survivors can then be
//! partitioned into unimodular equivalence classes by canonical form.
//!
//! Candidate evaluation is embarrassingly parallel. The rank range is split
//! into contiguous chunks, each chunk is enumerated sequentially from an
//! unranked starting combination, and the per-chunk results are concatenated
//! in chunk order, so the report does not depend on the worker count.

use std::time::Instant;

use rayon::prelude::*;

use crate::arith::{binomial, checked_pow, is_prime};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::simplex::PPowerForm;

use super::pool::{admissible_columns, subset_admissible, zero_rows, ColumnPool};
use super::report::{
    EquivalenceClass, ReportCounts, ReportParams, ReportPool, SearchReport, Survivor, Timings,
};

#[derive(Clone, Debug)]
pub struct CensusParams {
    pub p: u64,
    pub dim: usize,
    pub rank: usize,
    pub prune: bool,
    pub dedupe: bool,
}

/// Run a census and assemble its report.
pub fn census(params: &CensusParams, config: &Config) -> Result<SearchReport> {
    validate(params, config)?;
    let total_start = Instant::now();
    let k = params.dim - params.rank;

    let pool_start = Instant::now();
    let pool = admissible_columns(params.p, k);
    let pool_ms = pool_start.elapsed().as_millis() as u64;

    let total = candidate_count(&pool, params.rank, config)?;

    let enum_start = Instant::now();
    let (pruned, survivor_combos) = run_chunks(&pool, params, config, total);
    let enumeration_ms = enum_start.elapsed().as_millis() as u64;

    let survivors: Vec<Survivor> = survivor_combos
        .iter()
        .map(|combo| {
            let b = combo_rows(&pool, combo);
            let zero_rows = zero_rows(&b);
            Survivor { b, zero_rows }
        })
        .collect();

    let dedupe_start = Instant::now();
    let classes = if params.dedupe {
        Some(partition_classes(&pool, params, config, &survivor_combos)?)
    } else {
        None
    };
    let dedupe_ms = dedupe_start.elapsed().as_millis() as u64;

    Ok(SearchReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        params: ReportParams {
            p: params.p,
            dim: params.dim,
            rank: params.rank,
            prune: params.prune,
            dedupe: params.dedupe,
        },
        config: config.clone(),
        pool: ReportPool { p: pool.p, k: pool.k, size: pool.size(), columns: pool.columns.clone() },
        counts: ReportCounts {
            candidates_enumerated: total as u64,
            pruned,
            oracle_checked: total as u64 - pruned,
            empty_found: survivors.len() as u64,
        },
        survivors,
        classes,
        timings_ms: Timings {
            pool: pool_ms,
            enumeration: enumeration_ms,
            dedupe: dedupe_ms,
            total: total_start.elapsed().as_millis() as u64,
        },
    })
}

/// The first empty candidate in enumeration order, if any. Runs with the
/// sound subset prune enabled and exits early, which makes downward rank
/// searches cheap.
pub(crate) fn find_first_empty(
    p: u64,
    dim: usize,
    rank: usize,
    config: &Config,
) -> Result<Option<PPowerForm>> {
    let params = CensusParams { p, dim, rank, prune: true, dedupe: false };
    validate(&params, config)?;
    if rank == 0 {
        // the empty block: the unimodular simplex S_dim, which is empty
        return Ok(Some(PPowerForm::from_b_rows_u64(p, 0, &vec![vec![]; dim])?));
    }
    let k = dim - rank;
    let pool = admissible_columns(p, k);
    let total = candidate_count(&pool, rank, config)?;
    if total == 0 {
        return Ok(None);
    }
    let mut combo: Vec<usize> = (0..rank).collect();
    let mut columns: Vec<&[u64]> = Vec::with_capacity(rank);
    loop {
        columns.clear();
        columns.extend(combo.iter().map(|&i| pool.columns[i].as_slice()));
        if subset_admissible(&columns, p) && fast_empty(&pool, &combo, rank) {
            let rows = combo_rows(&pool, &combo);
            return Ok(Some(PPowerForm::from_b_rows_u64(p, rank, &rows)?));
        }
        if !next_combination(&mut combo, pool.size()) {
            return Ok(None);
        }
    }
}

fn validate(params: &CensusParams, config: &Config) -> Result<()> {
    if !is_prime(params.p) {
        return Err(Error::InvalidParams(format!("{} is not prime", params.p)));
    }
    if params.dim == 0 || params.rank > params.dim {
        return Err(Error::InvalidParams(format!(
            "rank {} out of range for dimension {}",
            params.rank, params.dim
        )));
    }
    // the oracle enumerates p^rank cosets per candidate
    match checked_pow(params.p, params.rank) {
        Some(order) if order <= config.order_cap as u128 => Ok(()),
        _ => Err(Error::OrderCapExceeded {
            order: num_bigint::BigInt::from(params.p).pow(params.rank as u32),
            cap: config.order_cap,
        }),
    }
}

fn candidate_count(pool: &ColumnPool, rank: usize, config: &Config) -> Result<usize> {
    let total = binomial(pool.size(), rank).unwrap_or(u128::MAX);
    if total > config.enumeration_cap as u128 {
        return Err(Error::EnumerationCapExceeded { size: total, cap: config.enumeration_cap });
    }
    Ok(total as usize)
}

fn combo_rows(pool: &ColumnPool, combo: &[usize]) -> Vec<Vec<u64>> {
    (0..pool.k)
        .map(|i| combo.iter().map(|&c| pool.columns[c][i]).collect())
        .collect()
}

/// Evaluate all candidates, in parallel chunks merged in rank order.
fn run_chunks(
    pool: &ColumnPool,
    params: &CensusParams,
    config: &Config,
    total: usize,
) -> (u64, Vec<Vec<usize>>) {
    if total == 0 {
        return (0, Vec::new());
    }
    let threads = if config.workers == 0 { rayon::current_num_threads() } else { config.workers };
    let chunk_count = (threads * 8).clamp(1, total);
    let chunk_len = total.div_ceil(chunk_count);
    let ranges: Vec<(usize, usize)> =
        (0..total).step_by(chunk_len).map(|lo| (lo, (lo + chunk_len).min(total))).collect();

    let run = || {
        ranges
            .par_iter()
            .map(|&(lo, hi)| evaluate_range(pool, params, lo, hi))
            .collect::<Vec<_>>()
    };
    let results = if config.workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("thread pool")
            .install(run)
    };

    let mut pruned = 0u64;
    let mut survivors = Vec::new();
    for (p, mut s) in results {
        pruned += p;
        survivors.append(&mut s);
    }
    (pruned, survivors)
}

fn evaluate_range(
    pool: &ColumnPool,
    params: &CensusParams,
    lo: usize,
    hi: usize,
) -> (u64, Vec<Vec<usize>>) {
    let r = params.rank;
    let mut combo = unrank_combination(pool.size(), r, lo);
    let mut pruned = 0u64;
    let mut survivors = Vec::new();
    let mut columns: Vec<&[u64]> = Vec::with_capacity(r);
    for _ in lo..hi {
        let keep = if params.prune {
            columns.clear();
            columns.extend(combo.iter().map(|&i| pool.columns[i].as_slice()));
            let ok = subset_admissible(&columns, params.p);
            if !ok {
                pruned += 1;
            }
            ok
        } else {
            true
        };
        if keep && fast_empty(pool, &combo, r) {
            survivors.push(combo.clone());
        }
        next_combination(&mut combo, pool.size());
    }
    (pruned, survivors)
}

/// The p-power emptiness criterion on the candidate block, allocation-light:
/// for every nonzero `n` in `{0,...,p-1}^r` the deficiency
/// `sum(n) + sum((-B n) mod p)` must exceed `p`.
fn fast_empty(pool: &ColumnPool, combo: &[usize], r: usize) -> bool {
    if r == 0 {
        return true; // no nonzero cosets: the unimodular simplex
    }
    let p = pool.p;
    let k = pool.k;
    let mut n = vec![0u64; r];
    let mut v = vec![0u64; k];
    let mut s = 0u64;
    let total = match checked_pow(p, r) {
        Some(t) => (t - 1) as u64,
        None => unreachable!("validated against the order cap"),
    };
    let mut checked = 0u64;
    while checked < total {
        let mut i = r - 1;
        loop {
            let col = &pool.columns[combo[i]];
            for (vi, ci) in v.iter_mut().zip(col) {
                *vi += *ci;
                if *vi >= p {
                    *vi -= p;
                }
            }
            n[i] += 1;
            s += 1;
            if n[i] == p {
                n[i] = 0;
                s -= p;
                i -= 1;
            } else {
                break;
            }
        }
        checked += 1;
        let mut deficiency = s;
        if deficiency <= p {
            let mut hit = true;
            for &vi in &v {
                if vi != 0 {
                    deficiency += p - vi;
                    if deficiency > p {
                        hit = false;
                        break;
                    }
                }
            }
            if hit {
                return false;
            }
        }
    }
    true
}

/// Partition survivors into unimodular equivalence classes via canonical
/// forms, computed in parallel but grouped in survivor order.
fn partition_classes(
    pool: &ColumnPool,
    params: &CensusParams,
    config: &Config,
    survivors: &[Vec<usize>],
) -> Result<Vec<EquivalenceClass>> {
    let canonicals: Vec<_> = survivors
        .par_iter()
        .map(|combo| {
            let rows = combo_rows(pool, combo);
            let form = PPowerForm::from_b_rows_u64(params.p, params.rank, &rows)?;
            form.to_simplex().canonical_form(config.perm_cap)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut classes: Vec<EquivalenceClass> = Vec::new();
    let mut keys: Vec<crate::simplex::CanonicalForm> = Vec::new();
    for (idx, canon) in canonicals.into_iter().enumerate() {
        match keys.iter().position(|k| *k == canon) {
            Some(pos) => classes[pos].size += 1,
            None => {
                classes.push(EquivalenceClass {
                    canonical: canon.matrix.to_string_rows(),
                    representative: idx,
                    size: 1,
                });
                keys.push(canon);
            }
        }
    }
    Ok(classes)
}

/// Lexicographically next r-combination of `{0, ..., n-1}`; false at the end.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let r = combo.len();
    if r == 0 {
        return false;
    }
    let mut i = r;
    while i > 0 {
        i -= 1;
        if combo[i] < n - r + i {
            combo[i] += 1;
            for j in (i + 1)..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The combination of the given rank in lexicographic order.
pub(crate) fn unrank_combination(n: usize, r: usize, rank: usize) -> Vec<usize> {
    let mut combo = Vec::with_capacity(r);
    let mut remaining = rank as u128;
    let mut next = 0usize;
    for pos in 0..r {
        let mut c = next;
        loop {
            let below = binomial(n - 1 - c, r - pos - 1).expect("within enumeration cap");
            if remaining < below {
                break;
            }
            remaining -= below;
            c += 1;
        }
        combo.push(c);
        next = c + 1;
    }
    combo
}
