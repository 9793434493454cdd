//! The classical Burau representation of the braid group on n strands over
//! Z[t, t^-1], its quotient specializations, the transvection structure of
//! the t = -1 form, and the genus formula for cyclic branched covers.

use crate::exact_algebra::{IntegerMatrix, LaurentMatrix, LaurentPoly, QuotientSpec};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BurauError {
    #[error("generator index {j} out of range 1..{max} for {n} strands")]
    IndexOutOfRange { n: usize, j: usize, max: usize },
    #[error("cover order {k} must divide the number of branch points {n}")]
    DivisibilityViolation { n: u64, k: u64 },
    #[error("(k-1) n = {0} must be even for the cover to close up")]
    ParityViolation(u64),
}

/// The j-th braid generator acting on the free module with basis x1..xn:
/// x_j maps to (1-t) x_j + t x_{j+1}, x_{j+1} maps to x_j, the rest is fixed.
/// Matrices act on column vectors.
pub fn burau_generator(n: usize, j: usize) -> Result<LaurentMatrix, BurauError> {
    if n < 2 || j < 1 || j > n - 1 {
        return Err(BurauError::IndexOutOfRange { n, j, max: n.saturating_sub(1) });
    }
    let mut m = LaurentMatrix::identity(n);
    let a = j - 1;
    m.set(a, a, LaurentPoly::from_terms(&[(0, 1), (1, -1)]));
    m.set(a + 1, a, LaurentPoly::t());
    m.set(a, a + 1, LaurentPoly::one());
    m.set(a + 1, a + 1, LaurentPoly::zero());
    Ok(m)
}

/// All n-1 generators, specialized to the requested coefficient ring.
pub fn burau_generators(n: usize, spec: QuotientSpec) -> Result<Vec<LaurentMatrix>, BurauError> {
    (1..n).map(|j| Ok(burau_generator(n, j)?.specialize(spec))).collect()
}

#[derive(Debug, Default)]
pub struct BraidReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl BraidReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

fn specialized_equal(a: &LaurentMatrix, b: &LaurentMatrix, spec: QuotientSpec) -> bool {
    a.specialize(spec) == b.specialize(spec)
}

/// Verify the defining braid relations over the given coefficient ring:
/// adjacent generators satisfy the braid relation, distant ones commute.
pub fn check_braid_relations(n: usize, spec: QuotientSpec) -> Result<BraidReport, BurauError> {
    let gens = burau_generators(n, spec)?;
    let mut report = BraidReport::default();
    for j in 0..gens.len() {
        for k in 0..j {
            report.checked += 1;
            if j - k == 1 {
                let lhs = gens[j].mul(&gens[k]).mul(&gens[j]);
                let rhs = gens[k].mul(&gens[j]).mul(&gens[k]);
                if !specialized_equal(&lhs, &rhs, spec) {
                    report.failures.push(format!(
                        "braid relation fails for (s{}, s{}) over {}",
                        j + 1,
                        k + 1,
                        spec.label()
                    ));
                }
            } else {
                let lhs = gens[j].mul(&gens[k]);
                let rhs = gens[k].mul(&gens[j]);
                if !specialized_equal(&lhs, &rhs, spec) {
                    report.failures.push(format!(
                        "commutation fails for (s{}, s{}) over {}",
                        j + 1,
                        k + 1,
                        spec.label()
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// At t = 1 each generator must become the permutation matrix of the
/// transposition (j, j+1).
pub fn check_permutation_specialization(n: usize) -> Result<BraidReport, BurauError> {
    let mut report = BraidReport::default();
    for j in 1..n {
        report.checked += 1;
        let m = burau_generator(n, j)?.eval_at_one();
        let mut perm = IntegerMatrix::identity(n);
        perm.set(j - 1, j - 1, BigInt::zero());
        perm.set(j, j, BigInt::zero());
        perm.set(j - 1, j, BigInt::one());
        perm.set(j, j - 1, BigInt::one());
        if m != perm {
            report.failures.push(format!("t=1 image of s{j} is not the transposition"));
        }
    }
    Ok(report)
}

#[derive(Debug, Default)]
pub struct ZetaReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ZetaReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The skew pairing on the difference vectors zeta_j = x_j - x_{j+1}:
/// consecutive vectors pair to +1, distant ones to 0.
fn zeta_pairing(j: usize, k: usize) -> i64 {
    if k == j + 1 {
        1
    } else if j == k + 1 {
        -1
    } else {
        0
    }
}

/// In the t = -1 specialization the generators act on the span of the
/// difference vectors zeta_j = x_j - x_{j+1} as the transvections of the
/// pairing above: s_j zeta_k = zeta_k - (zeta_k . zeta_j) zeta_j. The span
/// is the coordinate-sum-zero sublattice, where the zeta coefficients of a
/// vector are its prefix sums.
pub fn zeta_basis_action(n: usize) -> Result<ZetaReport, BurauError> {
    if n < 3 {
        return Err(BurauError::IndexOutOfRange { n, j: 0, max: n.saturating_sub(1) });
    }
    let mut report = ZetaReport::default();
    let gens: Vec<IntegerMatrix> =
        (1..n).map(|j| Ok(burau_generator(n, j)?.eval_at_minus_one())).collect::<Result<_, _>>()?;

    let zeta = |j: usize| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n];
        v[j - 1] = BigInt::one();
        v[j] = BigInt::from(-1);
        v
    };
    let to_zeta_coords = |v: &[BigInt]| -> Option<Vec<BigInt>> {
        let mut coords = Vec::with_capacity(n - 1);
        let mut acc = BigInt::zero();
        for x in &v[..n - 1] {
            acc += x;
            coords.push(acc.clone());
        }
        acc += &v[n - 1];
        acc.is_zero().then_some(coords)
    };

    for j in 1..n {
        for k in 1..n {
            report.checked += 1;
            let image = gens[j - 1].mul_vec(&zeta(k));
            let Some(got) = to_zeta_coords(&image) else {
                report.failures.push(format!("s{j} zeta{k} leaves the zero-sum lattice"));
                continue;
            };
            let mut want = vec![BigInt::zero(); n - 1];
            want[k - 1] = BigInt::one();
            want[j - 1] -= BigInt::from(zeta_pairing(k, j));
            if got != want {
                report.failures.push(format!(
                    "transvection identity fails for s{j} zeta{k}: got {got:?}, want {want:?}"
                ));
            }
        }
    }
    Ok(report)
}

/// Genus of the k-cyclic cover of a genus g surface branched at n points:
/// k(g-1) + 1 + (k-1)n/2. Requires k | n and (k-1)n even.
pub fn covering_genus(g: u64, n: u64, k: u64) -> Result<u64, BurauError> {
    if k == 0 || n % k != 0 {
        return Err(BurauError::DivisibilityViolation { n, k });
    }
    if ((k - 1) * n) % 2 != 0 {
        return Err(BurauError::ParityViolation((k - 1) * n));
    }
    Ok(k * (g - 1) + 1 + (k - 1) * n / 2)
}

/// Largest exponent appearing in any entry, for canonical-form checks.
pub fn max_exponent(m: &LaurentMatrix) -> Option<i64> {
    let mut best = None;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if let Some(e) = m.get(r, c).max_exponent() {
                best = Some(best.map_or(e, |b: i64| b.max(e)));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_strand_generator() {
        let m = burau_generator(2, 1).unwrap();
        // column of x1 holds (1-t, t); column of x2 holds (1, 0)
        assert_eq!(m.get(0, 0), &LaurentPoly::from_terms(&[(0, 1), (1, -1)]));
        assert_eq!(m.get(1, 0), &LaurentPoly::t());
        assert_eq!(m.get(0, 1), &LaurentPoly::one());
        assert!(m.get(1, 1).is_zero());
    }

    #[test]
    fn untouched_strands_fixed() {
        let m = burau_generator(5, 2).unwrap();
        for k in [0usize, 3, 4] {
            for r in 0..5 {
                let want = if r == k { LaurentPoly::one() } else { LaurentPoly::zero() };
                assert_eq!(m.get(r, k), &want);
            }
        }
    }

    #[test]
    fn index_out_of_range() {
        assert!(burau_generator(4, 0).is_err());
        assert!(burau_generator(4, 4).is_err());
        assert!(burau_generator(1, 1).is_err());
    }

    #[test]
    fn braid_relations_generic_n4() {
        let report = check_braid_relations(4, QuotientSpec::Generic).unwrap();
        assert!(report.all_hold(), "{:?}", report.failures);
        assert_eq!(report.checked, 3);
    }

    #[test]
    fn braid_relations_vacuous_n2() {
        let report = check_braid_relations(2, QuotientSpec::Generic).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.checked, 0);
    }

    #[test]
    fn braid_relations_compact_two_n6() {
        let report = check_braid_relations(6, QuotientSpec::Compact(2)).unwrap();
        assert!(report.all_hold(), "{:?}", report.failures);
    }

    #[test]
    fn permutation_at_t_one() {
        for n in 2..=8 {
            assert!(check_permutation_specialization(n).unwrap().all_hold());
        }
    }

    #[test]
    fn zeta_examples() {
        // s1 zeta1 = zeta1, s1 zeta2 = zeta2 + zeta1, s2 zeta1 = zeta1 - zeta2
        let gens: Vec<IntegerMatrix> =
            (1..4).map(|j| burau_generator(4, j).unwrap().eval_at_minus_one()).collect();
        let zeta = |j: usize| -> Vec<BigInt> {
            let mut v = vec![BigInt::zero(); 4];
            v[j - 1] = BigInt::one();
            v[j] = BigInt::from(-1);
            v
        };
        let add = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
            a.iter().zip(b).map(|(x, y)| x + y).collect()
        };
        let sub = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
            a.iter().zip(b).map(|(x, y)| x - y).collect()
        };
        assert_eq!(gens[0].mul_vec(&zeta(1)), zeta(1));
        assert_eq!(gens[0].mul_vec(&zeta(2)), add(&zeta(2), &zeta(1)));
        assert_eq!(gens[1].mul_vec(&zeta(1)), sub(&zeta(1), &zeta(2)));
    }

    #[test]
    fn zeta_identity_all_pairs() {
        for n in 3..=8 {
            let report = zeta_basis_action(n).unwrap();
            assert!(report.all_hold(), "n={n}: {:?}", report.failures);
            assert_eq!(report.checked, (n - 1) * (n - 1));
        }
    }

    #[test]
    fn covering_genus_values() {
        assert_eq!(covering_genus(3, 8, 2).unwrap(), 9);
        assert_eq!(covering_genus(7, 12, 1).unwrap(), 7);
        assert_eq!(covering_genus(2, 4, 2).unwrap(), 5);
        assert_eq!(
            covering_genus(3, 9, 2),
            Err(BurauError::DivisibilityViolation { n: 9, k: 2 })
        );
    }

    #[test]
    fn burau_determinant_is_a_unit() {
        // det of each generator is -t: check via the 2x2 block
        for n in 2..=6 {
            for j in 1..n {
                let m = burau_generator(n, j).unwrap();
                let a = j - 1;
                let det_block = m
                    .get(a, a)
                    .mul(m.get(a + 1, a + 1))
                    .sub(&m.get(a, a + 1).mul(m.get(a + 1, a)));
                assert_eq!(det_block, LaurentPoly::monomial(1, -1));
            }
        }
    }

    #[test]
    fn specialization_is_a_ring_map_on_products() {
        let a = burau_generator(5, 2).unwrap();
        let b = burau_generator(5, 3).unwrap();
        for spec in [
            QuotientSpec::UnitRoot(2),
            QuotientSpec::UnitRoot(3),
            QuotientSpec::Compact(2),
            QuotientSpec::Compact(3),
            QuotientSpec::MinusOne,
        ] {
            let direct = a.mul(&b).specialize(spec);
            let staged = a.specialize(spec).mul(&b.specialize(spec)).specialize(spec);
            assert_eq!(direct, staged, "{}", spec.label());
        }
    }

    #[test]
    fn compact_entries_stay_reduced() {
        let gens = burau_generators(6, QuotientSpec::Compact(3)).unwrap();
        for m in &gens {
            assert!(max_exponent(m).unwrap_or(0) <= 1);
        }
    }
}
