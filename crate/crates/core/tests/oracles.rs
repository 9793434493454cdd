//! Cross-checks of the exact linear algebra against an independent oracle:
//! rational Gaussian elimination, implemented here with no shared code paths
//! with the Smith normal form routines it validates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use prym_core::exact_algebra::{smith_decompose, IntegerMatrix};
use prym_core::hitchin_graph::{build_model, psi_map, BASE_FACES};

/// Rank over the rationals by plain row reduction.
fn rational_rank(m: &IntegerMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| (0..cols).map(|c| BigRational::from_integer(m.get(r, c).clone())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].clone();
        for c in col..cols {
            a[rank][c] = &a[rank][c] / &inv;
        }
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..cols {
                    let t = &factor * &a[rank][c];
                    a[r][c] = &a[r][c] - t;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[test]
fn lifted_genus_three_vertex_boundary_has_rank_seven() {
    // one less than the vertex count, since the complex is connected
    let model = build_model(3).unwrap();
    let d1 = model.lifted_surface.boundary_one();
    assert_eq!(rational_rank(&d1), 7);
    assert_eq!(smith_decompose(&d1).rank, 7);
}

#[test]
fn snf_rank_matches_rational_rank_on_model_matrices() {
    for g in 3..=5 {
        let model = build_model(g).unwrap();
        for m in [
            model.base_surface.boundary_one(),
            model.base_surface.boundary_two(),
            model.lifted_surface.boundary_one(),
            model.lifted_surface.boundary_two(),
        ] {
            assert_eq!(smith_decompose(&m).rank, rational_rank(&m), "g={g}");
        }
    }
}

#[test]
fn face_classes_have_rational_rank_four() {
    for g in 3..=6 {
        let model = build_model(g).unwrap();
        let data = psi_map(&model).unwrap();
        let n = model.edge_order().len();
        let rows: Vec<Vec<BigInt>> =
            BASE_FACES.iter().map(|&f| model.face_vector(&data, f)).collect();
        let m = IntegerMatrix::from_fn(4, n, |r, c| rows[r][c].clone());
        assert_eq!(rational_rank(&m), 4, "g={g}");
        assert_eq!(smith_decompose(&m).rank, 4, "g={g}");
    }
}

#[test]
fn homology_rank_agrees_with_rational_computation() {
    for g in 3..=5 {
        let model = build_model(g).unwrap();
        let surface = &model.lifted_surface;
        let (rank, torsion) = surface.homology();
        let r1 = rational_rank(&surface.boundary_one());
        let r2 = rational_rank(&surface.boundary_two());
        assert_eq!(rank, surface.edge_count() - r1 - r2, "g={g}");
        assert!(torsion.is_empty());
    }
}
