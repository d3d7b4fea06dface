//! Lattice simplices, their quotient groups and cyclicity ranks.
//!
//! A `LatticeSimplex` is a d-simplex with one vertex at the origin, stored as
//! the d x d matrix whose columns are the nonzero vertices. Its quotient
//! groups `Z^d / (A Z^d)` and `Z^d / (A^T Z^d)` are isomorphic finite abelian
//! groups of order `|det A|`; the number of their invariant factors exceeding
//! one is the cyclicity rank.

mod canonical;
mod emptiness;
mod named;
mod ppower;

pub use canonical::CanonicalForm;
pub use emptiness::{EmptinessCertificate, Verdict};
pub use named::NamedSimplex;
pub use ppower::PPowerForm;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{lattice_basis, snf};
use crate::matrix::IntMatrix;

/// A full-dimensional lattice simplex with a vertex at the origin.
#[derive(Clone, Debug)]
pub struct LatticeSimplex {
    matrix: IntMatrix,
    p_power: Option<PPowerForm>,
}

impl LatticeSimplex {
    /// Wrap a square integer matrix whose columns are the nonzero vertices.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { left: matrix.rows(), right: matrix.cols() });
        }
        if matrix.rows() == 0 {
            return Err(Error::InvalidParams("simplex dimension must be positive".into()));
        }
        if matrix.determinant()?.is_zero() {
            return Err(Error::DegenerateSimplex);
        }
        Ok(LatticeSimplex { matrix, p_power: None })
    }

    pub(crate) fn with_p_power(matrix: IntMatrix, form: PPowerForm) -> Self {
        LatticeSimplex { matrix, p_power: Some(form) }
    }

    /// Build from the full vertex list. The first point is translated to the
    /// origin; the remaining points become the columns of the vertex matrix.
    pub fn from_vertices(points: &[Vec<BigInt>]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidParams("need at least two points".into()));
        }
        let d = points.len() - 1;
        for p in points {
            if p.len() != d {
                return Err(Error::DimensionMismatch { left: d, right: p.len() });
            }
        }
        let mut m = IntMatrix::zero(d, d);
        for (j, p) in points[1..].iter().enumerate() {
            for i in 0..d {
                m.set(i, j, &p[i] - &points[0][i]);
            }
        }
        LatticeSimplex::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn vertex_matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The nonzero vertices, i.e. the columns of the vertex matrix.
    pub fn vertices(&self) -> Vec<Vec<BigInt>> {
        (0..self.dim()).map(|j| self.matrix.col(j)).collect()
    }

    /// The normalized p-power block form attached to this simplex, if any.
    pub fn p_power(&self) -> Option<&PPowerForm> {
        self.p_power.as_ref()
    }

    /// Normalized volume, i.e. `|det A|` = order of the quotient group.
    pub fn normalized_volume(&self) -> BigInt {
        self.matrix.determinant().expect("square by construction").abs()
    }

    /// Canonical basis of the column lattice `A Z^d` spanned by the edge
    /// directions at the origin.
    pub fn column_lattice_basis(&self) -> IntMatrix {
        lattice_basis(&self.matrix).expect("invertible by construction")
    }

    /// Canonical basis of the row lattice `A^T Z^d`, the lattice that
    /// identifies the simplex up to equivalence moves.
    pub fn row_lattice_basis(&self) -> IntMatrix {
        lattice_basis(&self.matrix.transpose()).expect("invertible by construction")
    }

    /// The same simplex re-rooted so that vertex `k` sits at the origin
    /// (`k = 0` keeps the current root). Vertices are indexed `0..=dim`.
    pub fn rooted_at(&self, k: usize) -> Result<Self> {
        let d = self.dim();
        if k > d {
            return Err(Error::IndexError { index: k, lo: 0, hi: d });
        }
        if k == 0 {
            return Ok(LatticeSimplex { matrix: self.matrix.clone(), p_power: None });
        }
        let mut m = IntMatrix::zero(d, d);
        let root = self.matrix.col(k - 1);
        for j in 0..d {
            for i in 0..d {
                let v = if j == k - 1 {
                    -root[i].clone()
                } else {
                    self.matrix.get(i, j) - &root[i]
                };
                m.set(i, j, v);
            }
        }
        LatticeSimplex::new(m)
    }

    /// Invariant factors of the quotient group, with the order and the
    /// cyclicity rank.
    pub fn quotient_group(&self) -> QuotientGroup {
        let dec = snf(&self.matrix).expect("invertible by construction");
        let nontrivial: Vec<BigInt> = dec.nontrivial_divisors();
        let order: BigInt = dec.divisors.iter().product();
        QuotientGroup {
            cyclicity_rank: nontrivial.len(),
            nontrivial_divisors: nontrivial,
            order,
        }
    }

    /// Shared square-matrix text format (columns are the nonzero vertices).
    pub fn to_text(&self) -> String {
        self.matrix.to_text()
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        LatticeSimplex::new(IntMatrix::parse_text(input)?)
    }

    pub fn to_json(&self) -> String {
        let json = SimplexJson {
            dim: self.dim(),
            columns: (0..self.dim())
                .map(|j| self.matrix.col(j).iter().map(|v| v.to_string()).collect())
                .collect(),
            p_power: self.p_power.as_ref().map(|f| PPowerJson {
                p: f.p(),
                r: f.r(),
                b: f.b_rows_u64(),
            }),
        };
        serde_json::to_string_pretty(&json).expect("serialization cannot fail")
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let json: SimplexJson =
            serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        if json.dim == 0 {
            return Err(Error::Parse("dimension must be positive".into()));
        }
        if json.columns.len() != json.dim {
            return Err(Error::Parse(format!(
                "expected {} columns, got {}",
                json.dim,
                json.columns.len()
            )));
        }
        let col_rows = IntMatrix::from_string_rows(&json.columns)?;
        if col_rows.cols() != json.dim {
            return Err(Error::Parse("ragged columns".into()));
        }
        let matrix = col_rows.transpose();
        match json.p_power {
            None => LatticeSimplex::new(matrix),
            Some(pj) => {
                let form = PPowerForm::from_b_rows_u64(pj.p, pj.r, &pj.b)?;
                if form.assemble() != matrix {
                    return Err(Error::Parse(
                        "p_power block is inconsistent with the vertex columns".into(),
                    ));
                }
                Ok(LatticeSimplex::with_p_power(matrix, form))
            }
        }
    }

    /// Parse either the text format or the JSON object, by sniffing.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            LatticeSimplex::from_json(input)
        } else {
            LatticeSimplex::parse_text(input)
        }
    }
}

/// The nontrivial elementary divisors of a vertex matrix, in the descending
/// divisibility order `m_r | ... | m_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    pub nontrivial_divisors: Vec<BigInt>,
    pub order: BigInt,
    pub cyclicity_rank: usize,
}

impl QuotientGroup {
    pub fn is_trivial(&self) -> bool {
        self.cyclicity_rank == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclicity_rank <= 1
    }

    /// True when the group is `(Z_p)^rank` for the given prime.
    pub fn is_elementary_abelian(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.nontrivial_divisors.iter().all(|m| *m == p)
    }
}

impl std::fmt::Display for QuotientGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.nontrivial_divisors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> =
            self.nontrivial_divisors.iter().map(|m| format!("Z_{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[derive(Serialize, Deserialize)]
struct SimplexJson {
    dim: usize,
    columns: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_power: Option<PPowerJson>,
}

#[derive(Serialize, Deserialize)]
struct PPowerJson {
    p: u64,
    r: usize,
    b: Vec<Vec<u64>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn standard_simplex_from_vertices() {
        let points = vec![big(&[0, 0, 0]), big(&[1, 0, 0]), big(&[0, 1, 0]), big(&[0, 0, 1])];
        let s = LatticeSimplex::from_vertices(&points).unwrap();
        assert_eq!(s.vertex_matrix(), &IntMatrix::identity(3));
        assert!(s.quotient_group().is_trivial());
    }

    #[test]
    fn degenerate_points_rejected() {
        let points = vec![big(&[0, 0]), big(&[1, 1]), big(&[2, 2])];
        assert!(matches!(
            LatticeSimplex::from_vertices(&points),
            Err(Error::DegenerateSimplex)
        ));
    }

    #[test]
    fn dilated_standard_simplex_is_elementary_abelian() {
        for d in 1..=4 {
            let mut m = IntMatrix::zero(d, d);
            for i in 0..d {
                m.set(i, i, BigInt::from(2));
            }
            let s = LatticeSimplex::new(m).unwrap();
            let g = s.quotient_group();
            assert_eq!(g.cyclicity_rank, d);
            assert!(g.is_elementary_abelian(2));
            assert_eq!(g.order, BigInt::from(1u64 << d));
        }
    }

    #[test]
    fn upper_triangular_example_has_cyclic_quotient() {
        // (E_2, B; 0, C) with C = (p 1; 0 p) collapses to a cyclic group of
        // order p^2 rather than (Z_p)^2.
        for p in [2i64, 3, 5] {
            let m = IntMatrix::from_i64_rows(&[
                &[1, 0, 1, 0],
                &[0, 1, 1, 0],
                &[0, 0, p, 1],
                &[0, 0, 0, p],
            ]);
            let s = LatticeSimplex::new(m).unwrap();
            let g = s.quotient_group();
            assert_eq!(g.nontrivial_divisors, vec![BigInt::from(p * p)]);
            assert_eq!(g.cyclicity_rank, 1);
        }
    }

    #[test]
    fn quotient_order_equals_absolute_determinant() {
        let m = IntMatrix::from_i64_rows(&[&[2, 7], &[1, -3]]);
        let s = LatticeSimplex::new(m).unwrap();
        assert_eq!(s.quotient_group().order, BigInt::from(13));
        assert_eq!(s.normalized_volume(), BigInt::from(13));
    }

    #[test]
    fn json_round_trip() {
        let s = NamedSimplex::Delta8.construct().unwrap();
        let json = s.to_json();
        let back = LatticeSimplex::from_json(&json).unwrap();
        assert_eq!(back.vertex_matrix(), s.vertex_matrix());
        assert!(back.p_power().is_some());
        // text round trip as well
        let text = s.to_text();
        let back = LatticeSimplex::parse_text(&text).unwrap();
        assert_eq!(back.vertex_matrix(), s.vertex_matrix());
    }

    #[test]
    fn rooted_at_preserves_quotient_divisors() {
        let m = IntMatrix::from_i64_rows(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        let s = LatticeSimplex::new(m).unwrap();
        for k in 0..=3 {
            let r = s.rooted_at(k).unwrap();
            assert_eq!(
                r.quotient_group().nontrivial_divisors,
                s.quotient_group().nontrivial_divisors
            );
        }
        assert!(s.rooted_at(4).is_err());
    }
}
