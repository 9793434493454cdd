//! Assembly and validation of the base and lifted complexes for one genus.

use super::{base_words, edge_order, lifted_words, BaseFace, EdgeLabel, HitchinError, BASE_FACES};
use crate::exact_algebra::IntegerMatrix;
use crate::surface_complex::{intersection_number, FaceWord, GluedSurface, OneCycle};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// The full combinatorial model for one genus: the dual graph complex on the
/// base curve, the doubled complex on the spectral cover, and the sheet
/// involution. The surfaces are glued with the orientation that makes the
/// lifted cycles over u1 and u2 intersect in -1.
pub struct HitchinModel {
    pub genus: u32,
    /// Boundary words of the four base faces, in the printed orientation.
    pub base_words: Vec<FaceWord>,
    /// The eight lifted boundary words, in the printed orientation.
    pub lifted_words: Vec<FaceWord>,
    pub base_surface: GluedSurface,
    pub lifted_surface: GluedSurface,
    /// True if the surfaces were glued from the mirrored words to fix the
    /// global orientation sign.
    pub mirrored: bool,
}

/// The anti-invariant cycle over each edge and the face difference classes,
/// expressed in edge coordinates.
pub struct PsiData {
    /// psi(e) = e.1 - e.2 as a 1-cycle on the lifted surface.
    pub psi: BTreeMap<EdgeLabel, OneCycle>,
    /// Psi(f), the boundary of f.1 - f.2 pulled back through psi to the base
    /// edge lattice.
    pub face_psi: BTreeMap<BaseFace, BTreeMap<EdgeLabel, BigInt>>,
}

/// The anti-invariant loop over a base edge: sheet-1 lift minus sheet-2 lift.
pub fn psi_cycle(label: EdgeLabel) -> OneCycle {
    let mut m = BTreeMap::new();
    m.insert(label.lift(1).to_string(), BigInt::one());
    m.insert(label.lift(2).to_string(), -BigInt::one());
    OneCycle::new(m)
}

pub fn build_model(genus: u32) -> Result<HitchinModel, HitchinError> {
    let base = base_words(genus)?;
    let lifted = lifted_words(genus)?;

    let mut base_surface = GluedSurface::glue(base.clone())?;
    let mut lifted_surface = GluedSurface::glue(lifted.clone())?;

    // Of the two global orientations the words admit, keep the one in which
    // consecutive upper cycles pair to -1.
    let sign = intersection_number(
        &psi_cycle(EdgeLabel::u(1)),
        &psi_cycle(EdgeLabel::u(2)),
        &lifted_surface,
    )?;
    let mirrored = sign.is_one();
    if mirrored {
        base_surface = GluedSurface::glue(base.iter().map(FaceWord::mirrored).collect())?;
        lifted_surface = GluedSurface::glue(lifted.iter().map(FaceWord::mirrored).collect())?;
    }

    let model = HitchinModel {
        genus,
        base_words: base,
        lifted_words: lifted,
        base_surface,
        lifted_surface,
        mirrored,
    };
    model.validate()?;
    Ok(model)
}

impl HitchinModel {
    fn validate(&self) -> Result<(), HitchinError> {
        let g = i64::from(self.genus);
        let checks: [(&str, i64, i64); 10] = [
            ("base vertex count", self.base_surface.vertex_count() as i64, 4 * g - 4),
            ("base edge count", self.base_surface.edge_count() as i64, 6 * g - 2),
            ("base face count", self.base_surface.face_count() as i64, 4),
            ("base genus", self.base_surface.genus(), g),
            ("lifted vertex count", self.lifted_surface.vertex_count() as i64, 4 * g - 4),
            ("lifted edge count", self.lifted_surface.edge_count() as i64, 12 * g - 4),
            ("lifted face count", self.lifted_surface.face_count() as i64, 8),
            ("lifted euler characteristic", self.lifted_surface.euler_characteristic(), 8 - 8 * g),
            ("lifted genus", self.lifted_surface.genus(), 4 * g - 3),
            (
                "orientation normalization",
                intersection_number(
                    &psi_cycle(EdgeLabel::u(1)),
                    &psi_cycle(EdgeLabel::u(2)),
                    &self.lifted_surface,
                )?
                .try_into()
                .unwrap_or(i64::MAX),
                -1,
            ),
        ];
        for (name, got, want) in checks {
            if got != want {
                return Err(HitchinError::InvariantViolation(format!(
                    "{name}: expected {want}, got {got} (genus {})",
                    self.genus
                )));
            }
        }

        let d1 = self.lifted_surface.boundary_one();
        let d2 = self.lifted_surface.boundary_two();
        if !d1.mul(&d2).is_zero() {
            return Err(HitchinError::InvariantViolation("lifted d1 * d2 != 0".into()));
        }
        if d1.mul(&self.tau_edge_matrix()) != self.tau_vertex_matrix()?.mul(&d1) {
            return Err(HitchinError::InvariantViolation("d1 does not commute with tau".into()));
        }
        if d2.mul(&self.tau_face_matrix()) != self.tau_edge_matrix().mul(&d2) {
            return Err(HitchinError::InvariantViolation("d2 does not commute with tau".into()));
        }
        Ok(())
    }

    pub fn edge_order(&self) -> Vec<EdgeLabel> {
        edge_order(self.genus)
    }

    /// The sheet involution on lifted edge symbols.
    pub fn tau_edge_symbol(symbol: &str) -> String {
        match symbol.strip_suffix(".1") {
            Some(base) => format!("{base}.2"),
            None => format!("{}.1", symbol.strip_suffix(".2").expect("lifted symbol")),
        }
    }

    /// The sheet involution on lifted face names.
    pub fn tau_face_name(name: &str) -> String {
        match name.strip_suffix("_1") {
            Some(base) => format!("{base}_2"),
            None => format!("{}_1", name.strip_suffix("_2").expect("lifted face")),
        }
    }

    /// Permutation matrix of tau on lifted edges, in sorted symbol order.
    pub fn tau_edge_matrix(&self) -> IntegerMatrix {
        let edges = self.lifted_surface.edges();
        let index: BTreeMap<&str, usize> =
            edges.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        IntegerMatrix::from_fn(edges.len(), edges.len(), |r, c| {
            let image = Self::tau_edge_symbol(&edges[c]);
            if index[image.as_str()] == r {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Permutation matrix of tau on the eight lifted faces, in word order.
    pub fn tau_face_matrix(&self) -> IntegerMatrix {
        let faces = self.lifted_surface.faces();
        let index: BTreeMap<&str, usize> =
            faces.iter().enumerate().map(|(i, w)| (w.face.as_str(), i)).collect();
        IntegerMatrix::from_fn(faces.len(), faces.len(), |r, c| {
            let image = Self::tau_face_name(&faces[c].face);
            if index[image.as_str()] == r {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Permutation induced by tau on the vertices of the lifted surface,
    /// computed by matching corners of each face word with its conjugate.
    pub fn tau_vertex_permutation(&self) -> Result<Vec<usize>, HitchinError> {
        let surface = &self.lifted_surface;
        let names = surface.vertex_names();
        let index: BTreeMap<&str, usize> =
            names.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let mut perm = vec![usize::MAX; names.len()];
        for w in surface.faces() {
            let partner = Self::tau_face_name(&w.face);
            for pos in 0..w.letters.len() {
                let from = surface.letter_tail_vertex(&w.face, pos).expect("in range");
                let to = surface.letter_tail_vertex(&partner, pos).ok_or_else(|| {
                    HitchinError::InvariantViolation(format!(
                        "conjugate word {partner} shorter than {}",
                        w.face
                    ))
                })?;
                let (fi, ti) = (index[from], index[to]);
                if perm[fi] != usize::MAX && perm[fi] != ti {
                    return Err(HitchinError::InvariantViolation(format!(
                        "tau is not well-defined on vertex {from}"
                    )));
                }
                perm[fi] = ti;
            }
        }
        if perm.iter().any(|&p| p == usize::MAX) {
            return Err(HitchinError::InvariantViolation("tau misses a vertex".into()));
        }
        Ok(perm)
    }

    pub fn tau_vertex_matrix(&self) -> Result<IntegerMatrix, HitchinError> {
        let perm = self.tau_vertex_permutation()?;
        let n = perm.len();
        Ok(IntegerMatrix::from_fn(n, n, |r, c| {
            if perm[c] == r {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    /// Image of a 1-cycle on the lifted surface under the sheet involution.
    pub fn tau_cycle(&self, c: &OneCycle) -> OneCycle {
        OneCycle::new(
            c.coefficients
                .iter()
                .map(|(sym, coeff)| (Self::tau_edge_symbol(sym), coeff.clone()))
                .collect(),
        )
    }

    /// Psi(f) as a vector in the canonical edge order.
    pub fn face_vector(&self, psi: &PsiData, face: BaseFace) -> Vec<BigInt> {
        let coeffs = &psi.face_psi[&face];
        self.edge_order()
            .iter()
            .map(|e| coeffs.get(e).cloned().unwrap_or_else(BigInt::zero))
            .collect()
    }
}

/// The standard choice of anti-invariant data: psi(e) = e.1 - e.2 for every
/// edge, and Psi(f) read off the sheet-1 lifted word of f, where a letter on
/// sheet 2 contributes with its exponent negated.
pub fn psi_map(model: &HitchinModel) -> Result<PsiData, HitchinError> {
    let mut psi = BTreeMap::new();
    for label in model.edge_order() {
        let cycle = psi_cycle(label);
        model.lifted_surface.check_cycle(&cycle)?;
        psi.insert(label, cycle);
    }

    let mut face_psi = BTreeMap::new();
    for face in BASE_FACES {
        let name = face.lifted_name(1);
        let word = model
            .lifted_words
            .iter()
            .find(|w| w.face == name)
            .expect("lifted word for each face");
        let mut coeffs: BTreeMap<EdgeLabel, BigInt> = BTreeMap::new();
        for l in &word.letters {
            let (base, sheet) = split_lifted(&l.symbol);
            let sheet_sign = if sheet == 1 { 1 } else { -1 };
            let contribution = BigInt::from(l.exponent.as_i64() * sheet_sign);
            let entry = coeffs.entry(base).or_insert_with(BigInt::zero);
            *entry += contribution;
            if entry.is_zero() {
                coeffs.remove(&base);
            }
        }
        face_psi.insert(face, coeffs);
    }
    Ok(PsiData { psi, face_psi })
}

fn split_lifted(symbol: &str) -> (EdgeLabel, u8) {
    let (base, sheet) = symbol.split_once('.').expect("lifted symbol");
    let sheet: u8 = sheet.parse().expect("sheet 1 or 2");
    let family = match base.as_bytes()[0] {
        b'u' => super::Family::U,
        b'l' => super::Family::L,
        b'b' => super::Family::B,
        other => panic!("unknown edge family {}", other as char),
    };
    let index: u32 = base[1..].parse().expect("edge index");
    (EdgeLabel { family, index }, sheet)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_three_counts() {
        let m = build_model(3).unwrap();
        let b = &m.base_surface;
        assert_eq!((b.vertex_count(), b.edge_count(), b.face_count()), (8, 16, 4));
        let l = &m.lifted_surface;
        assert_eq!((l.vertex_count(), l.edge_count(), l.face_count()), (8, 32, 8));
        assert_eq!(l.euler_characteristic(), -16);
        assert_eq!(l.genus(), 9);
    }

    #[test]
    fn genus_five_lifted_genus() {
        let m = build_model(5).unwrap();
        assert_eq!(m.lifted_surface.genus(), 17);
    }

    #[test]
    fn genus_ten_base_counts() {
        let m = build_model(10).unwrap();
        assert_eq!(m.base_surface.vertex_count(), 36);
        assert_eq!(m.base_surface.edge_count(), 58);
    }

    #[test]
    fn psi_cycles_are_anti_invariant() {
        let m = build_model(4).unwrap();
        let data = psi_map(&m).unwrap();
        for (label, cycle) in &data.psi {
            m.lifted_surface.check_cycle(cycle).unwrap();
            assert_eq!(m.tau_cycle(cycle), cycle.neg(), "tau psi({label}) != -psi({label})");
        }
    }

    #[test]
    fn face_psi_matches_printed_sums() {
        for g in [3u32, 4, 6] {
            let m = build_model(g).unwrap();
            let data = psi_map(&m).unwrap();

            // -Psi(inf-) = l1 + ... + l_{2g-2}, -Psi(inf+) = sum of u
            for (face, family) in
                [(BaseFace::InfMinus, super::super::Family::L), (BaseFace::InfPlus, super::super::Family::U)]
            {
                let coeffs = &data.face_psi[&face];
                assert_eq!(coeffs.len(), (2 * g - 2) as usize);
                for (label, c) in coeffs {
                    assert_eq!(label.family, family);
                    assert_eq!(c, &BigInt::from(-1), "g={g} {face} {label}");
                }
            }

            // Psi(0-) carries +1 on every b edge, Psi(0+) carries -1
            for k in 1..=2 * g + 2 {
                let b = EdgeLabel::b(k);
                assert_eq!(data.face_psi[&BaseFace::ZeroMinus][&b], BigInt::one());
                assert_eq!(data.face_psi[&BaseFace::ZeroPlus][&b], BigInt::from(-1));
            }
        }
    }

    #[test]
    fn genus_four_zero_minus_tail_coefficients() {
        let m = build_model(4).unwrap();
        let data = psi_map(&m).unwrap();
        let zm = &data.face_psi[&BaseFace::ZeroMinus];
        assert_eq!(zm[&EdgeLabel::u(6)], BigInt::one());
        assert_eq!(zm[&EdgeLabel::l(5)], BigInt::from(-1));
    }

    #[test]
    fn psi_of_faces_equals_lifted_boundary_difference() {
        // psi(Psi(f)) must equal the boundary of f.1 - f.2 on the cover
        let m = build_model(4).unwrap();
        let data = psi_map(&m).unwrap();
        let d2 = m.lifted_surface.boundary_two();
        let faces = m.lifted_surface.faces();
        let edges = m.lifted_surface.edges();
        for face in BASE_FACES {
            let f1 = faces.iter().position(|w| w.face == face.lifted_name(1)).unwrap();
            let f2 = faces.iter().position(|w| w.face == face.lifted_name(2)).unwrap();
            // expected = psi(Psi(f)) in lifted edge coordinates
            let mut expected = vec![BigInt::zero(); edges.len()];
            for (label, c) in &data.face_psi[&face] {
                let i1 = edges.iter().position(|s| s == &label.lift(1).to_string()).unwrap();
                let i2 = edges.iter().position(|s| s == &label.lift(2).to_string()).unwrap();
                expected[i1] = c.clone();
                expected[i2] = -c.clone();
            }
            let sign = if m.mirrored { -1 } else { 1 };
            for (e, want) in expected.iter().enumerate() {
                let got = (d2.get(e, f1) - d2.get(e, f2)) * BigInt::from(sign);
                assert_eq!(&got, want, "{face} edge {}", edges[e]);
            }
        }
    }

    #[test]
    fn tau_commutes_with_boundaries() {
        for g in 3..=6 {
            let m = build_model(g).unwrap();
            let d1 = m.lifted_surface.boundary_one();
            let d2 = m.lifted_surface.boundary_two();
            assert_eq!(d1.mul(&m.tau_edge_matrix()), m.tau_vertex_matrix().unwrap().mul(&d1));
            assert_eq!(d2.mul(&m.tau_face_matrix()), m.tau_edge_matrix().mul(&d2));
        }
    }

    #[test]
    fn lifted_homology_rank() {
        for g in 3..=5 {
            let m = build_model(g).unwrap();
            let (rank, torsion) = m.lifted_surface.homology();
            assert_eq!(rank, (8 * g - 6) as usize);
            assert!(torsion.is_empty());
        }
    }
}
