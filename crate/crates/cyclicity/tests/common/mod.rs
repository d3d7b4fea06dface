//! Shared test support: independent oracles and seeded generators.
//!
//! The oracles here deliberately avoid the library's own algorithms: the
//! emptiness oracle enumerates the vertex bounding box, and the divisor
//! oracle takes gcds of minors. They are the ground truth the fast paths
//! are measured against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclicity::{solve_exact, IntMatrix, LatticeSimplex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer points of the simplex other than its vertices, by exhaustive
/// bounding-box enumeration. Returns interior points separately.
pub fn box_oracle(simplex: &LatticeSimplex) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let a = simplex.vertex_matrix();
    let d = simplex.dim();
    let mut lo = vec![BigInt::zero(); d];
    let mut hi = vec![BigInt::zero(); d];
    for i in 0..d {
        for j in 0..d {
            let v = a.get(i, j);
            if *v < lo[i] {
                lo[i] = v.clone();
            }
            if *v > hi[i] {
                hi[i] = v.clone();
            }
        }
    }
    let mut non_vertex = Vec::new();
    let mut interior = Vec::new();
    let mut z: Vec<BigInt> = lo.clone();
    'outer: loop {
        let lambda = solve_exact(a, &z).expect("invertible");
        if lambda.in_standard_simplex() && !lambda.is_zero_vector() && lambda.unit_index().is_none()
        {
            non_vertex.push(z.clone());
        }
        if lambda.in_open_simplex() {
            interior.push(z.clone());
        }
        // odometer over the box
        let mut i = 0;
        loop {
            z[i] += 1;
            if z[i] <= hi[i] {
                break;
            }
            z[i] = lo[i].clone();
            i += 1;
            if i == d {
                break 'outer;
            }
        }
    }
    (non_vertex, interior)
}

pub fn box_oracle_empty(simplex: &LatticeSimplex) -> bool {
    box_oracle(simplex).0.is_empty()
}

/// Random square matrix with entries in `[-bound, bound]` and nonzero
/// determinant.
pub fn random_invertible(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> IntMatrix {
    loop {
        let rows: Vec<Vec<BigInt>> = (0..d)
            .map(|_| (0..d).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let m = IntMatrix::from_rows(rows).unwrap();
        if !m.determinant().unwrap().is_zero() {
            return m;
        }
    }
}

/// Random simplex with `|det|` in `1..=max_volume`.
pub fn random_simplex(rng: &mut ChaCha8Rng, d: usize, max_volume: u64) -> LatticeSimplex {
    loop {
        let m = random_invertible(rng, d, 4);
        let det = m.determinant().unwrap().abs();
        if det <= BigInt::from(max_volume) {
            return LatticeSimplex::new(m).unwrap();
        }
    }
}

/// Random unimodular matrix: a short product of elementary row operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, d: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(d);
    for _ in 0..(3 * d + 2) {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                if i != j {
                    let c = BigInt::from(rng.gen_range(-2i64..=2));
                    m.add_scaled_row(i, j, &c);
                }
            }
            1 => {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                m.swap_rows(i, j);
            }
            _ => {
                let i = rng.gen_range(0..d);
                m.negate_row(i);
            }
        }
    }
    debug_assert!(m.determinant().unwrap().abs().is_one());
    m
}

/// Random permutation of `0..d`.
pub fn random_permutation(rng: &mut ChaCha8Rng, d: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..d).collect();
    for i in (1..d).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// Determinantal-divisor oracle: the k-th divisor `d_k` is the gcd of all
/// k x k minors, and the elementary divisors in ascending order are
/// `d_k / d_{k-1}`. Returned here in the descending convention.
pub fn divisors_by_minors(a: &IntMatrix) -> Vec<BigInt> {
    let d = a.rows();
    let mut dets_prev = BigInt::one();
    let mut ascending = Vec::with_capacity(d);
    for k in 1..=d {
        let mut g = BigInt::zero();
        for rows in combinations(d, k) {
            for cols in combinations(d, k) {
                let mut sub = IntMatrix::zero(k, k);
                for (si, &i) in rows.iter().enumerate() {
                    for (sj, &j) in cols.iter().enumerate() {
                        sub.set(si, sj, a.get(i, j).clone());
                    }
                }
                g = g.gcd(&sub.determinant().unwrap());
            }
        }
        ascending.push(&g / &dets_prev);
        dets_prev = g;
    }
    ascending.reverse();
    ascending
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Gcd elimination into upper-triangular form with positive diagonal and
/// reduced entries above: an independent check of the Hermite form.
pub fn gcd_elimination_hnf(a: &IntMatrix) -> IntMatrix {
    let d = a.rows();
    let mut m = a.clone();
    for col in 0..d {
        for i in (col + 1)..d {
            while !m.get(i, col).is_zero() {
                let q = m.get(col, col).div_floor(m.get(i, col));
                m.sub_scaled_row(col, i, &q);
                m.swap_rows(col, i);
            }
        }
    }
    for col in 0..d {
        if m.get(col, col).is_negative() {
            m.negate_row(col);
        }
        let pivot = m.get(col, col).clone();
        for i in 0..col {
            let q = m.get(i, col).div_floor(&pivot);
            m.sub_scaled_row(i, col, &q);
        }
    }
    m
}
