use super::matrix::IntegerMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Full Smith decomposition `U * A * V = D` together with the inverses of the
/// transformation matrices, which the lattice routines need.
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    pub rank: usize,
}

/// Smith normal form: returns (U, D, V) with U·A·V = D, U and V unimodular,
/// D diagonal with nonnegative entries satisfying d1 | d2 | ...
pub fn smith_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let s = smith_decompose(a);
    (s.u, s.d, s.v)
}

pub fn rank(a: &IntegerMatrix) -> usize {
    smith_decompose(a).rank
}

struct Work {
    m: usize,
    n: usize,
    d: Vec<BigInt>,
    u: Vec<BigInt>,
    u_inv: Vec<BigInt>,
    v: Vec<BigInt>,
    v_inv: Vec<BigInt>,
}

impl Work {
    fn d(&self, i: usize, j: usize) -> &BigInt {
        &self.d[i * self.n + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.d.swap(a * self.n + j, b * self.n + j);
        }
        for j in 0..self.m {
            self.u.swap(a * self.m + j, b * self.m + j);
            // right-multiplying U^-1 by the swap exchanges its columns
            self.u_inv.swap(j * self.m + a, j * self.m + b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m {
            self.d.swap(i * self.n + a, i * self.n + b);
        }
        for i in 0..self.n {
            self.v.swap(i * self.n + a, i * self.n + b);
            self.v_inv.swap(a * self.n + i, b * self.n + i);
        }
    }

    /// row[i] -= q * row[k]
    fn add_row(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.n {
            let t = q * &self.d[k * self.n + j];
            self.d[i * self.n + j] -= t;
        }
        for j in 0..self.m {
            let t = q * &self.u[k * self.m + j];
            self.u[i * self.m + j] -= t;
            // U^-1 <- U^-1 * (I + q E_ik): col k gains q * col i
            let t = q * &self.u_inv[j * self.m + i];
            self.u_inv[j * self.m + k] += t;
        }
    }

    /// col[j] -= q * col[k]
    fn add_col(&mut self, j: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.m {
            let t = q * &self.d[i * self.n + k];
            self.d[i * self.n + j] -= t;
        }
        for i in 0..self.n {
            let t = q * &self.v[i * self.n + k];
            self.v[i * self.n + j] -= t;
            let t = q * &self.v_inv[j * self.n + i];
            self.v_inv[k * self.n + i] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.n {
            let idx = i * self.n + j;
            let v = -std::mem::take(&mut self.d[idx]);
            self.d[idx] = v;
        }
        for j in 0..self.m {
            let idx = i * self.m + j;
            let v = -std::mem::take(&mut self.u[idx]);
            self.u[idx] = v;
            let idx = j * self.m + i;
            let v = -std::mem::take(&mut self.u_inv[idx]);
            self.u_inv[idx] = v;
        }
    }
}

pub fn smith_decompose(a: &IntegerMatrix) -> SmithDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut w = Work {
        m,
        n,
        d: (0..m * n).map(|i| a.get(i / n, i % n).clone()).collect(),
        u: ident(m),
        u_inv: ident(m),
        v: ident(n),
        v_inv: ident(n),
    };

    let mut k = 0;
    while k < m.min(n) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..m {
            for j in k..n {
                if !w.d(i, j).is_zero()
                    && pivot.map_or(true, |(pi, pj)| w.d(i, j).abs() < w.d(pi, pj).abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        // clear column k, then row k; any nonzero remainder is strictly
        // smaller than the pivot, so re-pivoting terminates
        let mut dirty = false;
        for i in k + 1..m {
            if !w.d(i, k).is_zero() {
                let q = w.d(i, k).div_floor(w.d(k, k));
                w.add_row(i, k, &q);
                if !w.d(i, k).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        for j in k + 1..n {
            if !w.d(k, j).is_zero() {
                let q = w.d(k, j).div_floor(w.d(k, k));
                w.add_col(j, k, &q);
                if !w.d(k, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // the pivot must divide the whole trailing block for d1 | d2 | ...
        let mut fixup: Option<usize> = None;
        'scan: for i in k + 1..m {
            for j in k + 1..n {
                if !w.d(i, j).mod_floor(w.d(k, k)).is_zero() {
                    fixup = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = fixup {
            let minus_one = BigInt::from(-1);
            w.add_row(k, i, &minus_one);
            continue;
        }
        k += 1;
    }

    let rank = k;
    for i in 0..rank {
        if w.d(i, i).is_negative() {
            w.negate_row(i);
        }
    }

    SmithDecomposition {
        u: IntegerMatrix::from_fn(m, m, |i, j| w.u[i * m + j].clone()),
        d: IntegerMatrix::from_fn(m, n, |i, j| w.d[i * n + j].clone()),
        v: IntegerMatrix::from_fn(n, n, |i, j| w.v[i * n + j].clone()),
        u_inv: IntegerMatrix::from_fn(m, m, |i, j| w.u_inv[i * m + j].clone()),
        v_inv: IntegerMatrix::from_fn(n, n, |i, j| w.v_inv[i * n + j].clone()),
        rank,
    }
}

fn ident(n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = 1.into();
    }
    v
}

/// A basis of the integer kernel of `a` (columns of V past the rank).
/// The kernel lattice is saturated, so the quotient by it is torsion-free.
pub fn kernel_basis(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_decompose(a);
    (s.rank..a.cols()).map(|j| s.v.column(j)).collect()
}
