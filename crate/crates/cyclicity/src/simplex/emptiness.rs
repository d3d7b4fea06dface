//! Exact emptiness and hollowness oracles.
//!
//! A simplex `A * S_d` contains a non-vertex lattice point iff some nonzero
//! coset representative of `A^{-1}Z^d / Z^d` with all coordinates in `[0,1)`
//! has coordinate sum at most one (sum exactly one is a boundary non-vertex
//! point). It has an interior lattice point iff some representative has all
//! coordinates positive and sum strictly below one.
//!
//! Representatives are generated from the Smith decomposition: the columns
//! of `V^{-1}` scaled by `1/m_i` generate the coset group, and tuples
//! `(c_1, ..., c_d)` with `0 <= c_i < m_i` hit every coset exactly once.
//! The hot loop works on integer numerators modulo the common denominator
//! `M = m_1`; no rational arithmetic is involved.
//!
//! Simplices carrying a p-power block form take a specialized path: for
//! `n in {0,...,p-1}^r` the representative has sum
//! `(sum_j n_j + sum_i ((-(B n))_i mod p)) / p`, so emptiness amounts to
//! checking that this deficiency exceeds `p` for every nonzero `n`.
//!
//! Both paths enumerate tuples in lexicographic order (last digit fastest)
//! and report the first violating coset, so verdict and witness are
//! deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::checked_pow;
use crate::error::{Error, Result};
use crate::linalg::{snf, unimodular_inverse};
use crate::matrix::IntMatrix;

use super::{LatticeSimplex, PPowerForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Empty,
    NonEmpty,
}

/// Outcome of an emptiness test, with enough data to audit it.
#[derive(Clone, Debug)]
pub struct EmptinessCertificate {
    pub verdict: Verdict,
    pub group_order: BigInt,
    pub cosets_checked: u64,
    /// A non-vertex lattice point of the simplex when the verdict is
    /// `NonEmpty`; the first violating coset in enumeration order.
    pub witness: Option<Vec<BigInt>>,
}

impl EmptinessCertificate {
    pub fn is_empty(&self) -> bool {
        self.verdict == Verdict::Empty
    }
}

impl LatticeSimplex {
    /// Decide emptiness by exhaustive coset enumeration. `order_cap` bounds
    /// the group order (the number of cosets); exceeding it is an error so
    /// that accidental blowups stay loud.
    pub fn is_empty(&self, order_cap: u64) -> Result<EmptinessCertificate> {
        match self.p_power() {
            Some(form) => ppower_emptiness(form, order_cap),
            None => general_emptiness(self.vertex_matrix(), order_cap),
        }
    }

    /// Decide hollowness: no lattice point in the interior.
    pub fn is_hollow(&self, order_cap: u64) -> Result<bool> {
        let setup = match CosetSetup::prepare(self.vertex_matrix(), order_cap)? {
            Some(setup) => setup,
            None => return Ok(true), // unimodular simplex has no interior points
        };
        let hit = setup.find_first(|lambda, modulus| {
            lambda.iter().all(|&x| x > 0) && lambda.iter().sum::<i64>() < modulus
        });
        Ok(hit.1.is_none())
    }
}

/// Emptiness of a p-power form via the deficiency criterion. Exposed for
/// callers that work on forms without assembling the vertex matrix.
pub(crate) fn ppower_emptiness(
    form: &PPowerForm,
    order_cap: u64,
) -> Result<EmptinessCertificate> {
    let p = form.p();
    let r = form.r();
    let order = checked_pow(p, r).filter(|&o| o <= order_cap as u128).ok_or_else(|| {
        Error::OrderCapExceeded { order: form.order(), cap: order_cap }
    })?;
    let k = form.k();
    let cols = form.b_columns_u64();
    let mut state = FastState::new(p, k, r, &cols);
    let total = (order - 1) as u64;
    let mut checked = 0u64;
    while checked < total {
        state.advance();
        checked += 1;
        if state.deficiency_at_most_p() {
            return Ok(EmptinessCertificate {
                verdict: Verdict::NonEmpty,
                group_order: form.order(),
                cosets_checked: checked,
                witness: Some(state.witness()),
            });
        }
    }
    Ok(EmptinessCertificate {
        verdict: Verdict::Empty,
        group_order: form.order(),
        cosets_checked: checked,
        witness: None,
    })
}

/// Odometer over `n in {0,...,p-1}^r` maintaining `v = (B n) mod p` and
/// `s = sum_j n_j` incrementally.
struct FastState<'a> {
    p: u64,
    n: Vec<u64>,
    v: Vec<u64>,
    s: u64,
    cols: &'a [Vec<u64>],
}

impl<'a> FastState<'a> {
    fn new(p: u64, k: usize, r: usize, cols: &'a [Vec<u64>]) -> Self {
        FastState { p, n: vec![0; r], v: vec![0; k], s: 0, cols }
    }

    fn advance(&mut self) {
        let mut i = self.n.len() - 1;
        loop {
            for (vi, ci) in self.v.iter_mut().zip(&self.cols[i]) {
                *vi += *ci;
                if *vi >= self.p {
                    *vi -= self.p;
                }
            }
            self.n[i] += 1;
            self.s += 1;
            if self.n[i] == self.p {
                self.n[i] = 0;
                self.s -= self.p;
                i -= 1; // never underflows: the caller stops before full wrap
            } else {
                break;
            }
        }
    }

    fn deficiency_at_most_p(&self) -> bool {
        let mut total = self.s;
        if total > self.p {
            return false;
        }
        for &vi in &self.v {
            if vi != 0 {
                total += self.p - vi;
                if total > self.p {
                    return false;
                }
            }
        }
        true
    }

    /// The lattice point `H * lambda` for the current tuple.
    fn witness(&self) -> Vec<BigInt> {
        let p = self.p as u128;
        let mut out = Vec::with_capacity(self.v.len() + self.n.len());
        for i in 0..self.v.len() {
            let bn: u128 = self
                .cols
                .iter()
                .enumerate()
                .map(|(j, col)| col[i] as u128 * self.n[j] as u128)
                .sum();
            let x = (p - bn % p) % p;
            out.push(BigInt::from((x + bn) / p));
        }
        out.extend(self.n.iter().map(|&nj| BigInt::from(nj)));
        out
    }
}

fn general_emptiness(a: &IntMatrix, order_cap: u64) -> Result<EmptinessCertificate> {
    let setup = match CosetSetup::prepare(a, order_cap)? {
        Some(setup) => setup,
        None => {
            return Ok(EmptinessCertificate {
                verdict: Verdict::Empty,
                group_order: BigInt::one(),
                cosets_checked: 0,
                witness: None,
            })
        }
    };
    let order = BigInt::from(setup.order);
    let (checked, hit) =
        setup.find_first(|lambda, modulus| lambda.iter().sum::<i64>() <= modulus);
    match hit {
        None => Ok(EmptinessCertificate {
            verdict: Verdict::Empty,
            group_order: order,
            cosets_checked: checked,
            witness: None,
        }),
        Some(lambda) => {
            let nums: Vec<BigInt> = lambda.iter().map(|&x| BigInt::from(x)).collect();
            let scaled = a.matvec(&nums).expect("dimensions agree");
            let modulus = BigInt::from(setup.modulus);
            let witness: Vec<BigInt> = scaled
                .into_iter()
                .map(|x| {
                    debug_assert!(x.mod_floor(&modulus).is_zero());
                    x / &modulus
                })
                .collect();
            Ok(EmptinessCertificate {
                verdict: Verdict::NonEmpty,
                group_order: order,
                cosets_checked: checked,
                witness: Some(witness),
            })
        }
    }
}

/// Coset enumeration state for the general path.
struct CosetSetup {
    order: u64,
    modulus: i64,
    radices: Vec<u64>,
    increments: Vec<Vec<i64>>,
    dim: usize,
}

impl CosetSetup {
    /// `None` when the group is trivial. Errors when `|det|` exceeds the cap.
    fn prepare(a: &IntMatrix, order_cap: u64) -> Result<Option<CosetSetup>> {
        let det = a.determinant()?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let order_big = det.abs();
        if order_big > BigInt::from(order_cap) {
            return Err(Error::OrderCapExceeded { order: order_big, cap: order_cap });
        }
        let order = order_big.to_u64().expect("bounded by cap");
        if order == 1 {
            return Ok(None);
        }
        let dec = snf(a)?;
        let v_inv = unimodular_inverse(&dec.v)?;
        let modulus_big = dec.divisors[0].clone();
        let modulus = modulus_big.to_i64().expect("divides the order, bounded by cap");
        let mut radices = Vec::new();
        let mut increments = Vec::new();
        for (i, m) in dec.divisors.iter().enumerate() {
            if m.is_one() {
                continue;
            }
            let scale = &modulus_big / m;
            let inc: Vec<i64> = (0..a.rows())
                .map(|row| {
                    (v_inv.get(row, i) * &scale)
                        .mod_floor(&modulus_big)
                        .to_i64()
                        .expect("reduced below the modulus")
                })
                .collect();
            radices.push(m.to_u64().expect("bounded by cap"));
            increments.push(inc);
        }
        Ok(Some(CosetSetup { order, modulus, radices, increments, dim: a.rows() }))
    }

    /// Enumerate all nonzero cosets in lexicographic tuple order; stop at the
    /// first one where `violate` holds. Returns the number of cosets checked
    /// and the violating representative's numerators, if any.
    fn find_first<F>(&self, violate: F) -> (u64, Option<Vec<i64>>)
    where
        F: Fn(&[i64], i64) -> bool,
    {
        let g = self.radices.len();
        let mut counters = vec![0u64; g];
        let mut lambda = vec![0i64; self.dim];
        let total = self.order - 1;
        let mut checked = 0u64;
        while checked < total {
            let mut i = g - 1;
            loop {
                for (x, inc) in lambda.iter_mut().zip(&self.increments[i]) {
                    *x += inc;
                    if *x >= self.modulus {
                        *x -= self.modulus;
                    }
                }
                counters[i] += 1;
                if counters[i] == self.radices[i] {
                    counters[i] = 0;
                    i -= 1; // never underflows before `total` steps
                } else {
                    break;
                }
            }
            checked += 1;
            if violate(&lambda, self.modulus) {
                return (checked, Some(lambda));
            }
        }
        (checked, None)
    }
}
