use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Dense matrix over arbitrary-precision integers, row-major.
///
/// All operations are exact and return new values; no floating point is
/// involved anywhere in this crate.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntegerMatrix { rows, cols, entries }
    }

    /// Convenience constructor for tests and small fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn neg(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn add(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntegerMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntegerMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Rows `lo..hi` as a new matrix.
    pub fn row_slice(&self, lo: usize, hi: usize) -> IntegerMatrix {
        assert!(lo <= hi && hi <= self.rows);
        IntegerMatrix::from_fn(hi - lo, self.cols, |r, c| self.get(lo + r, c).clone())
    }

    /// Columns `lo..hi` as a new matrix.
    pub fn col_slice(&self, lo: usize, hi: usize) -> IntegerMatrix {
        assert!(lo <= hi && hi <= self.cols);
        IntegerMatrix::from_fn(self.rows, hi - lo, |r, c| self.get(r, lo + c).clone())
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let pivot_row = (k + 1..n).find(|&i| !m.get(i, k).is_zero());
                match pivot_row {
                    Some(i) => {
                        for j in 0..n {
                            m.entries.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(k, k) * m.get(i, j) - m.get(i, k) * m.get(k, j);
                    // division is exact in the Bareiss scheme
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().abs().is_one()
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// Wire format: {"rows": n, "cols": m, "entries": [[row], ...]} with every
// integer rendered as a decimal string, since entries may exceed 64 bits.
impl Serialize for IntegerMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<String>>,
        }
        let entries = (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.to_string()).collect())
            .collect();
        Wire { rows: self.rows, cols: self.cols, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntegerMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<String>>,
        }
        let w = Wire::deserialize(deserializer)?;
        if w.entries.len() != w.rows || w.entries.iter().any(|r| r.len() != w.cols) {
            return Err(D::Error::custom("entry grid does not match declared shape"));
        }
        let mut entries = Vec::with_capacity(w.rows * w.cols);
        for row in &w.entries {
            for s in row {
                let v: BigInt = s.parse().map_err(|_| D::Error::custom("bad integer literal"))?;
                entries.push(v);
            }
        }
        Ok(IntegerMatrix { rows: w.rows, cols: w.cols, entries })
    }
}
