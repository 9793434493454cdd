use super::matrix::IntegerMatrix;
use super::snf::smith_decompose;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("basis vector has length {got}, ambient rank is {ambient}")]
    WrongLength { ambient: usize, got: usize },
    #[error("basis vectors are linearly dependent over the rationals")]
    DependentBasis,
}

/// A sublattice of Z^ambient, given by a rationally independent basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient_rank: usize,
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn new(ambient_rank: usize, basis: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        for v in &basis {
            if v.len() != ambient_rank {
                return Err(LatticeError::WrongLength { ambient: ambient_rank, got: v.len() });
            }
        }
        let l = Lattice { ambient_rank, basis };
        if smith_decompose(&l.basis_matrix()).rank != l.basis.len() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(l)
    }

    pub fn from_i64(ambient_rank: usize, basis: &[&[i64]]) -> Self {
        Lattice::new(
            ambient_rank,
            basis.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
        .expect("invalid fixture lattice")
    }

    pub fn full(ambient_rank: usize) -> Self {
        let basis = (0..ambient_rank)
            .map(|i| {
                let mut v = vec![BigInt::zero(); ambient_rank];
                v[i] = BigInt::one();
                v
            })
            .collect();
        Lattice { ambient_rank, basis }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Basis vectors as the columns of an ambient x rank matrix.
    pub fn basis_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.ambient_rank, self.basis.len(), |r, c| {
            self.basis[c][r].clone()
        })
    }

    /// Membership test: does `v` lie in the lattice (over Z)?
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient_rank);
        let s = smith_decompose(&self.basis_matrix());
        // B x = v  <=>  D y = U v with y = V^-1 x, so U v must be divisible
        // by the diagonal in the first `rank` slots and zero afterwards.
        let uv = s.u.mul_vec(v);
        for i in 0..self.ambient_rank {
            if i < s.rank {
                if !uv[i].mod_floor(s.d.get(i, i)).is_zero() {
                    return false;
                }
            } else if !uv[i].is_zero() {
                return false;
            }
        }
        true
    }

    /// Row-style Hermite normal form of the basis, used as a canonical
    /// representative so that equal lattices compare equal.
    pub fn canonical_basis(&self) -> Vec<Vec<BigInt>> {
        hermite_rows(self.basis.clone(), self.ambient_rank)
    }

    pub fn same_lattice(&self, other: &Lattice) -> bool {
        self.ambient_rank == other.ambient_rank && self.canonical_basis() == other.canonical_basis()
    }
}

/// Saturation: the set of ambient vectors with a nonzero integer multiple in
/// the span of `l`. Contains `l`; the quotient of the ambient lattice by the
/// result is torsion-free.
pub fn saturation(l: &Lattice) -> Lattice {
    if l.rank() == 0 {
        return Lattice { ambient_rank: l.ambient_rank, basis: vec![] };
    }
    let s = smith_decompose(&l.basis_matrix());
    // U B V = D, so the rational span of B is spanned by the first `rank`
    // columns of U^-1; those columns extend to a Z-basis of the ambient
    // lattice, hence their Z-span is saturated.
    let basis = (0..s.rank).map(|j| s.u_inv.column(j)).collect();
    let sat = Lattice { ambient_rank: l.ambient_rank, basis };
    Lattice { ambient_rank: l.ambient_rank, basis: sat.canonical_basis() }
}

/// Saturation, projection onto the quotient, and a section of the projection.
pub struct QuotientData {
    pub saturated: Lattice,
    /// (ambient - sat rank) x ambient; kernel is exactly the saturation.
    pub projection: IntegerMatrix,
    /// ambient x (ambient - sat rank); projection * section = identity.
    pub section: IntegerMatrix,
    pub quotient_rank: usize,
}

pub fn quotient_data(l: &Lattice) -> QuotientData {
    let sat = saturation(l);
    let n = l.ambient_rank;
    let r = sat.rank();
    if r == 0 {
        return QuotientData {
            saturated: sat,
            projection: IntegerMatrix::identity(n),
            section: IntegerMatrix::identity(n),
            quotient_rank: n,
        };
    }
    let s = smith_decompose(&sat.basis_matrix());
    debug_assert_eq!(s.rank, r);
    debug_assert!((0..r).all(|i| s.d.get(i, i).is_one()), "saturated lattice has unit divisors");
    // U carries the saturation onto the span of the first r coordinates, so
    // the remaining rows of U project onto the quotient; the matching columns
    // of U^-1 give an integral section.
    let projection = s.u.row_slice(r, n);
    let section = s.u_inv.col_slice(r, n);
    QuotientData { saturated: sat, projection, section, quotient_rank: n - r }
}

/// Projection of the ambient lattice onto its quotient by `saturation(l)`.
/// Returns the projection matrix and the rank of the quotient.
pub fn quotient_projection(l: &Lattice) -> (IntegerMatrix, usize) {
    let q = quotient_data(l);
    (q.projection, q.quotient_rank)
}

fn hermite_rows(mut rows: Vec<Vec<BigInt>>, width: usize) -> Vec<Vec<BigInt>> {
    let mut pivot_row = 0;
    for col in 0..width {
        // gcd the column below pivot_row into a single nonzero entry
        loop {
            let mut best: Option<usize> = None;
            for (i, row) in rows.iter().enumerate().skip(pivot_row) {
                if !row[col].is_zero()
                    && best.map_or(true, |b| row[col].abs() < rows[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            let mut reduced_all = true;
            for i in pivot_row + 1..rows.len() {
                if !rows[i][col].is_zero() {
                    let q = rows[i][col].div_floor(&rows[pivot_row][col]);
                    for j in 0..width {
                        let t = &q * &rows[pivot_row][j];
                        rows[i][j] -= t;
                    }
                    if !rows[i][col].is_zero() {
                        reduced_all = false;
                    }
                }
            }
            if reduced_all {
                break;
            }
        }
        if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for j in 0..width {
                    let v = -std::mem::take(&mut rows[pivot_row][j]);
                    rows[pivot_row][j] = v;
                }
            }
            // reduce entries above the pivot into [0, pivot)
            for i in 0..pivot_row {
                let q = rows[i][col].div_floor(&rows[pivot_row][col]);
                if !q.is_zero() {
                    for j in 0..width {
                        let t = &q * &rows[pivot_row][j];
                        rows[i][j] -= t;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation_of_index_two() {
        let l = Lattice::from_i64(2, &[&[2, 0]]);
        let s = saturation(&l);
        assert!(s.same_lattice(&Lattice::from_i64(2, &[&[1, 0]])));
    }

    #[test]
    fn saturation_of_empty() {
        let l = Lattice::new(2, vec![]).unwrap();
        assert_eq!(saturation(&l).rank(), 0);
    }

    #[test]
    fn saturation_full_rank() {
        // det [[2,2],[0,4]] = 8 but the rational span is everything
        let l = Lattice::from_i64(2, &[&[2, 2], &[0, 4]]);
        let s = saturation(&l);
        assert!(s.same_lattice(&Lattice::full(2)));
    }

    #[test]
    fn quotient_of_axis() {
        let l = Lattice::from_i64(2, &[&[1, 0]]);
        let (proj, rank) = quotient_projection(&l);
        assert_eq!(rank, 1);
        assert_eq!((proj.rows(), proj.cols()), (1, 2));
        assert!(proj.get(0, 0).is_zero());
        assert!(proj.get(0, 1).abs().is_one());
    }

    #[test]
    fn quotient_of_full() {
        let l = Lattice::full(3);
        let (_, rank) = quotient_projection(&l);
        assert_eq!(rank, 0);
    }

    #[test]
    fn dependent_basis_rejected() {
        let e = Lattice::new(
            2,
            vec![
                vec![BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(2), BigInt::from(4)],
            ],
        );
        assert_eq!(e.unwrap_err(), LatticeError::DependentBasis);
    }

    #[test]
    fn membership() {
        let l = Lattice::from_i64(2, &[&[2, 0], &[0, 3]]);
        assert!(l.contains(&[BigInt::from(4), BigInt::from(-3)]));
        assert!(!l.contains(&[BigInt::from(1), BigInt::from(0)]));
    }
}
