//! Constructions of the named simplices used throughout the crate.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::gcd_u64;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

use super::{LatticeSimplex, PPowerForm};

/// The built-in simplex families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedSimplex {
    /// White simplex `T(p, q) = conv{0, e1, e2, (1, p, q)}` with
    /// `1 <= p < q` and `gcd(p, q) = 1`. Every empty 3-simplex is
    /// unimodularly equivalent to one of these.
    White { p: u64, q: u64 },
    /// Reeve simplex `conv{0, e1, e2, e1 + e2 + p*e3}`.
    Reeve { p: u64 },
    /// The dilated standard simplex `factor * S_dim`.
    Dilate { factor: u64, dim: usize },
    /// The empty 8-dimensional 3-power simplex of cyclicity rank 5, the
    /// unique one up to unimodular equivalence.
    Delta8,
    /// Its 9-dimensional extension: same block with a zero row on top,
    /// still empty with rank 5.
    Delta9,
}

pub(crate) const DELTA8_B: [[i64; 5]; 3] = [[1, 0, 1, 1, 2], [0, 1, 1, 2, 1], [1, 1, 2, 2, 2]];

pub(crate) const DELTA9_B: [[i64; 5]; 4] =
    [[0, 0, 0, 0, 0], [1, 0, 1, 1, 2], [0, 1, 1, 2, 1], [1, 1, 2, 2, 2]];

impl NamedSimplex {
    pub fn construct(&self) -> Result<LatticeSimplex> {
        match *self {
            NamedSimplex::White { p, q } => {
                if p < 1 || p >= q {
                    return Err(Error::InvalidParams(format!(
                        "white requires 1 <= p < q, got p={p} q={q}"
                    )));
                }
                if gcd_u64(p, q) != 1 {
                    return Err(Error::InvalidParams(format!(
                        "white requires gcd(p, q) = 1, got p={p} q={q}"
                    )));
                }
                let mut m = IntMatrix::identity(3);
                m.set(0, 2, BigInt::one());
                m.set(1, 2, BigInt::from(p));
                m.set(2, 2, BigInt::from(q));
                LatticeSimplex::new(m)
            }
            NamedSimplex::Reeve { p } => {
                if p < 1 {
                    return Err(Error::InvalidParams("reeve requires p >= 1".into()));
                }
                let mut m = IntMatrix::identity(3);
                m.set(0, 2, BigInt::one());
                m.set(1, 2, BigInt::one());
                m.set(2, 2, BigInt::from(p));
                LatticeSimplex::new(m)
            }
            NamedSimplex::Dilate { factor, dim } => {
                if factor < 1 || dim < 1 {
                    return Err(Error::InvalidParams(
                        "dilate requires factor >= 1 and dim >= 1".into(),
                    ));
                }
                let mut m = IntMatrix::zero(dim, dim);
                for i in 0..dim {
                    m.set(i, i, BigInt::from(factor));
                }
                LatticeSimplex::new(m)
            }
            NamedSimplex::Delta8 => Ok(block_form(&DELTA8_B)?.to_simplex()),
            NamedSimplex::Delta9 => Ok(block_form(&DELTA9_B)?.to_simplex()),
        }
    }
}

fn block_form(rows: &[[i64; 5]]) -> Result<PPowerForm> {
    let b = IntMatrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
    )?;
    PPowerForm::new(3, 5, b)
}
