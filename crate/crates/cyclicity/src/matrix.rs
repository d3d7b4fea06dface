//! Dense matrices of arbitrary-precision integers.
//!
//! `IntMatrix` is the carrier for vertex matrices, lattice bases and the
//! normal-form decompositions. All arithmetic is exact; there is no floating
//! point anywhere in this crate.
//!
//! The shared text format for square matrices is: a first line holding the
//! dimension `d`, followed by `d` lines of `d` space-separated integers.
//! When the matrix describes a simplex, the columns are its nonzero vertices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>, // row-major
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = IntMatrix::zero(d, d);
        for i in 0..d {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from machine integers; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().map(|&v| BigInt::from(v))).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { left: self.cols, right: other.rows });
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { left: self.cols, right: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// New matrix whose row `i` is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.rows);
        let mut data = Vec::with_capacity(self.data.len());
        for &src in perm {
            data.extend_from_slice(self.row(src));
        }
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c).clone();
            self.set(i, c, v);
        }
    }

    /// Row operation `row_i -= q * row_j`.
    pub fn sub_scaled_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(i, c) - q * self.get(j, c);
            self.set(i, c, v);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }

    /// Column operation `col_i -= q * col_j`.
    pub fn sub_scaled_col(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, i) - q * self.get(r, j);
            self.set(r, i, v);
        }
    }

    /// Column operation `col_i += q * col_j`.
    pub fn add_scaled_col(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, i) + q * self.get(r, j);
            self.set(r, i, v);
        }
    }

    /// Row operation `row_i += q * row_j`.
    pub fn add_scaled_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(i, c) + q * self.get(j, c);
            self.set(i, c, v);
        }
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..i.min(self.cols) {
                if !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_lower_triangular(&self) -> bool {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant by fraction-free (Bareiss) elimination. Exact.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { left: self.rows, right: self.cols });
        }
        let d = self.rows;
        if d == 0 {
            return Ok(BigInt::from(1));
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for t in 0..d {
            if m.get(t, t).is_zero() {
                match (t + 1..d).find(|&i| !m.get(i, t).is_zero()) {
                    Some(i) => {
                        m.swap_rows(t, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            let pivot = m.get(t, t).clone();
            for i in (t + 1)..d {
                for j in (t + 1)..d {
                    let v = (&pivot * m.get(i, j) - m.get(i, t) * m.get(t, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, t, BigInt::zero());
            }
            prev = pivot;
        }
        let det = m.get(d - 1, d - 1).clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Parse the shared square-matrix text format.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let d: usize = first
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("expected dimension on first line, got {first:?}")))?;
        if d == 0 {
            return Err(Error::Parse("dimension must be positive".into()));
        }
        let mut rows = Vec::with_capacity(d);
        for _ in 0..d {
            let line = lines.next().ok_or_else(|| Error::Parse("missing matrix rows".into()))?;
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(|tok| {
                    BigInt::from_str(tok)
                        .map_err(|_| Error::Parse(format!("invalid integer {tok:?}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != d {
                return Err(Error::Parse(format!(
                    "ragged row: expected {d} entries, got {}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing content after matrix rows".into()));
        }
        IntMatrix::from_rows(rows)
    }

    /// Serialize to the shared square-matrix text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.rows);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Rows as decimal strings, the JSON representation used by reports.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_string()).collect())
            .collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        let parsed: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        BigInt::from_str(s)
                            .map_err(|_| Error::Parse(format!("invalid integer {s:?}")))
                    })
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        IntMatrix::from_rows(parsed)
    }

    /// True if every entry fits in i64.
    pub fn fits_i64(&self) -> bool {
        use num_traits::ToPrimitive;
        self.data.iter().all(|v| v.to_i64().is_some())
    }

    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|v| v.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
