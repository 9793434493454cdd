//! Property tests for the exact algebra and the surface machinery.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use prym_core::exact_algebra::{
    kernel_basis, laurent_specialize, quotient_projection, saturation, smith_normal_form,
    IntegerMatrix, Lattice, LaurentPoly, QuotientSpec,
};
use prym_core::surface_complex::{
    intersection_number, FaceWord, GluedSurface, OneCycle, Sign, SymbolOccurrence,
};

fn small_matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-20i64..=20, r * c).prop_map(move |entries| {
            IntegerMatrix::from_fn(r, c, |i, j| BigInt::from(entries[i * c + j]))
        })
    })
}

fn small_basis() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4).prop_flat_map(|n| {
        (0usize..=n).prop_flat_map(move |k| {
            proptest::collection::vec(proptest::collection::vec(-6i64..=6, n), k)
                .prop_map(move |rows| (n, rows))
        })
    })
}

fn lattice_from(n: usize, rows: &[Vec<i64>]) -> Option<Lattice> {
    let basis: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Lattice::new(n, basis).ok()
}

proptest! {
    #[test]
    fn snf_contract(a in small_matrix()) {
        let (u, d, v) = smith_normal_form(&a);
        prop_assert_eq!(u.mul(&a).mul(&v), d.clone());
        prop_assert!(u.determinant().abs().is_one());
        prop_assert!(v.determinant().abs().is_one());
        // diagonal, nonnegative, each divides the next
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    prop_assert!(d.get(i, j).is_zero());
                }
            }
        }
        let diag: Vec<BigInt> =
            (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn saturation_is_idempotent_and_contains((n, rows) in small_basis()) {
        let Some(l) = lattice_from(n, &rows) else { return Ok(()); };
        let sat = saturation(&l);
        prop_assert!(l.basis().iter().all(|v| sat.contains(v)));
        let sat2 = saturation(&sat);
        prop_assert!(sat.same_lattice(&sat2));
    }

    #[test]
    fn saturation_is_monotone((n, rows) in small_basis(), keep in proptest::collection::vec(proptest::bool::ANY, 0..=4)) {
        let Some(l) = lattice_from(n, &rows) else { return Ok(()); };
        // a sublattice spanned by a subset of the basis
        let sub_rows: Vec<Vec<i64>> = rows
            .iter()
            .zip(keep.iter().chain(std::iter::repeat(&false)))
            .filter(|(_, &k)| k)
            .map(|(r, _)| r.clone())
            .collect();
        let Some(sub) = lattice_from(n, &sub_rows) else { return Ok(()); };
        let sat_l = saturation(&l);
        let sat_sub = saturation(&sub);
        prop_assert!(sat_sub.basis().iter().all(|v| sat_l.contains(v)));
    }

    #[test]
    fn quotient_projection_kills_the_lattice((n, rows) in small_basis()) {
        let Some(l) = lattice_from(n, &rows) else { return Ok(()); };
        let (proj, rank) = quotient_projection(&l);
        prop_assert_eq!(proj.rows(), rank);
        prop_assert_eq!(proj.cols(), n);
        for v in saturation(&l).basis() {
            prop_assert!(proj.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        for v in l.basis() {
            prop_assert!(proj.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i64..=4, -5i64..=5), 0..=5)
        .prop_map(|terms| LaurentPoly::from_terms(&terms))
}

fn any_spec() -> impl Strategy<Value = QuotientSpec> {
    prop_oneof![
        Just(QuotientSpec::Generic),
        (2u32..=5).prop_map(QuotientSpec::UnitRoot),
        (2u32..=5).prop_map(QuotientSpec::Compact),
        Just(QuotientSpec::MinusOne),
    ]
}

proptest! {
    #[test]
    fn specialization_is_multiplicative(p in small_laurent(), q in small_laurent(), spec in any_spec()) {
        let direct = laurent_specialize(&p.mul(&q), spec);
        let staged = laurent_specialize(
            &laurent_specialize(&p, spec).mul(&laurent_specialize(&q, spec)),
            spec,
        );
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn specialization_is_additive(p in small_laurent(), q in small_laurent(), spec in any_spec()) {
        let direct = laurent_specialize(&p.add(&q), spec);
        let staged = laurent_specialize(
            &laurent_specialize(&p, spec).add(&laurent_specialize(&q, spec)),
            spec,
        );
        prop_assert_eq!(direct, staged);
    }
}

/// Random gluing data: paired edge letters shuffled into up to three faces.
fn random_words() -> impl Strategy<Value = Vec<FaceWord>> {
    (1usize..=6, 1usize..=3).prop_flat_map(|(edges, faces)| {
        let darts: Vec<(usize, bool)> =
            (0..edges).flat_map(|e| [(e, true), (e, false)]).collect();
        (Just(darts).prop_shuffle(), proptest::collection::vec(0..faces, 2 * edges)).prop_map(
            move |(darts, assignment)| {
                let mut words: Vec<Vec<SymbolOccurrence>> = vec![Vec::new(); faces];
                for ((e, positive), f) in darts.into_iter().zip(assignment) {
                    words[f].push(SymbolOccurrence::new(
                        format!("e{e}"),
                        if positive { Sign::Plus } else { Sign::Minus },
                    ));
                }
                words
                    .into_iter()
                    .enumerate()
                    .filter(|(_, w)| !w.is_empty())
                    .map(|(i, w)| FaceWord::new(format!("f{i}"), w))
                    .collect()
            },
        )
    })
}

fn random_cycles(surface: &GluedSurface, coeffs: &[i64]) -> Vec<OneCycle> {
    let kernel = kernel_basis(&surface.boundary_one());
    let edges = surface.edges();
    let mut cycles = Vec::new();
    for chunk in coeffs.chunks(kernel.len().max(1)) {
        let mut combo = vec![BigInt::zero(); edges.len()];
        for (vec, &c) in kernel.iter().zip(chunk) {
            for (i, x) in vec.iter().enumerate() {
                combo[i] += x * BigInt::from(c);
            }
        }
        let map = edges
            .iter()
            .cloned()
            .zip(combo)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        cycles.push(OneCycle::new(map));
    }
    cycles
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn glued_surfaces_behave(words in random_words(), coeffs in proptest::collection::vec(-3i64..=3, 8)) {
        let Ok(surface) = GluedSurface::glue(words.clone()) else { return Ok(()); };

        // gluing is deterministic
        let again = GluedSurface::glue(words).unwrap();
        prop_assert_eq!(surface.to_json(), again.to_json());

        // a closed oriented surface: chain complex and homology
        prop_assert!(surface.boundary_one().mul(&surface.boundary_two()).is_zero());
        let (rank, torsion) = surface.homology();
        prop_assert_eq!(rank as i64, 2 * surface.genus());
        prop_assert!(torsion.is_empty());

        // intersection pairing: skew, and face boundaries are orthogonal to
        // every cycle
        let cycles = random_cycles(&surface, &coeffs);
        for x in &cycles {
            for y in &cycles {
                let xy = intersection_number(x, y, &surface).unwrap();
                let yx = intersection_number(y, x, &surface).unwrap();
                prop_assert_eq!(xy, -yx);
            }
        }
        let boundary = surface.face_boundary(&surface.faces()[0].face).unwrap();
        for y in &cycles {
            prop_assert_eq!(
                intersection_number(&boundary, y, &surface).unwrap(),
                BigInt::zero()
            );
        }

        // contracting any non-loop edge preserves euler characteristic,
        // genus, and face count
        let non_loop = surface.edges().iter().find(|sym| {
            let (t, h) = surface.endpoints(sym).unwrap();
            t != h
        });
        if let Some(sym) = non_loop {
            if let Ok(contracted) = surface.contract_edge(sym) {
                prop_assert_eq!(contracted.euler_characteristic(), surface.euler_characteristic());
                prop_assert_eq!(contracted.genus(), surface.genus());
                prop_assert_eq!(contracted.face_count(), surface.face_count());
                prop_assert_eq!(contracted.vertex_count(), surface.vertex_count() - 1);
                prop_assert_eq!(contracted.edge_count(), surface.edge_count() - 1);
            }
        }
    }

    #[test]
    fn intersection_is_bilinear(words in random_words(), coeffs in proptest::collection::vec(-2i64..=2, 6)) {
        let Ok(surface) = GluedSurface::glue(words) else { return Ok(()); };
        let cycles = random_cycles(&surface, &coeffs);
        if cycles.len() < 2 { return Ok(()); }
        let (x, y) = (&cycles[0], &cycles[1]);
        let sum = x.add(y);
        for z in &cycles {
            let lhs = intersection_number(&sum, z, &surface).unwrap();
            let rhs = intersection_number(x, z, &surface).unwrap()
                + intersection_number(y, z, &surface).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
