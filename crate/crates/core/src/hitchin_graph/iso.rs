//! Fat graph isomorphism by dart propagation.
//!
//! An isomorphism of connected fat graphs is determined by the image of one
//! dart once it commutes with edge reversal and with the vertex rotation,
//! either as given or globally reflected. The search tries every image of a
//! fixed starting dart under both orientations and propagates; the first
//! consistent bijection wins, so the result is deterministic.

use crate::surface_complex::GluedSurface;
use std::collections::BTreeMap;

/// A face-preserving, rotation-preserving (up to one global reflection)
/// isomorphism between two glued surfaces, reported as an edge relabeling,
/// or None if the fat graphs are not isomorphic.
pub fn check_isomorphic(a: &GluedSurface, b: &GluedSurface) -> Option<BTreeMap<String, String>> {
    if a.edge_count() != b.edge_count()
        || a.vertex_count() != b.vertex_count()
        || a.face_count() != b.face_count()
    {
        return None;
    }
    if a.edge_count() == 0 {
        return Some(BTreeMap::new());
    }
    let darts = a.dart_count();
    for reflect in [false, true] {
        for image_of_zero in 0..darts {
            if let Some(map) = propagate(a, b, image_of_zero, reflect) {
                if let Some(relabel) = edge_relabeling(a, b, &map, reflect) {
                    return Some(relabel);
                }
            }
        }
    }
    None
}

fn propagate(
    a: &GluedSurface,
    b: &GluedSurface,
    image_of_zero: usize,
    reflect: bool,
) -> Option<Vec<usize>> {
    let n = a.dart_count();
    let mut map = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    let mut stack = vec![(0usize, image_of_zero)];
    while let Some((d, image)) = stack.pop() {
        if map[d] != usize::MAX {
            if map[d] != image {
                return None;
            }
            continue;
        }
        if hit[image] {
            return None;
        }
        map[d] = image;
        hit[image] = true;
        stack.push((d ^ 1, image ^ 1));
        let next_b = if reflect { b.sigma_inv(map[d]) } else { b.sigma(map[d]) };
        stack.push((a.sigma(d), next_b));
    }
    // connectedness makes the propagation total
    debug_assert!(map.iter().all(|&m| m != usize::MAX));
    Some(map)
}

/// Translate the dart bijection to an edge relabeling and verify that every
/// face word of `a` matches a face word of `b` up to rotation (and global
/// reflection), which certifies the face correspondence.
fn edge_relabeling(
    a: &GluedSurface,
    b: &GluedSurface,
    map: &[usize],
    reflect: bool,
) -> Option<BTreeMap<String, String>> {
    let mut relabel = BTreeMap::new();
    for e in 0..a.edge_count() {
        let from = a.dart_symbol(2 * e).to_string();
        let to = b.dart_symbol(map[2 * e]).to_string();
        relabel.insert(from, to);
    }

    let oriented_symbols = |w: &crate::surface_complex::FaceWord, mirror: bool| -> Vec<String> {
        let mut tokens: Vec<String> = w
            .letters
            .iter()
            .map(|l| format!("{}{}", l.symbol, l.exponent.suffix()))
            .collect();
        if mirror {
            tokens.reverse();
            for t in &mut tokens {
                let (sym, sign) = t.split_at(t.len() - 1);
                *t = format!("{sym}{}", if sign == "+" { "-" } else { "+" });
            }
        }
        tokens
    };

    let b_faces: Vec<Vec<String>> =
        b.faces().iter().map(|w| oriented_symbols(w, false)).collect();
    let mut used = vec![false; b_faces.len()];
    for w in a.faces() {
        let translated: Vec<String> = oriented_symbols(w, reflect)
            .iter()
            .map(|tok| {
                let (sym, sign) = tok.split_at(tok.len() - 1);
                let flip = map[2 * a.edge_id(sym).expect("own edge")] % 2 == 1;
                let sign = match (sign, flip) {
                    ("+", false) | ("-", true) => "+",
                    _ => "-",
                };
                format!("{}{sign}", relabel[sym])
            })
            .collect();
        let matched = b_faces.iter().enumerate().position(|(i, candidate)| {
            !used[i]
                && candidate.len() == translated.len()
                && (0..candidate.len()).any(|r| {
                    (0..candidate.len()).all(|j| candidate[(r + j) % candidate.len()] == translated[j])
                })
        });
        match matched {
            Some(i) => used[i] = true,
            None => return None,
        }
    }
    Some(relabel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hitchin_graph::{build_model, build_triangulation, contract_scheme};
    use crate::surface_complex::FaceWord;

    #[test]
    fn identity_isomorphism() {
        let s = GluedSurface::glue(vec![FaceWord::parse("f", "a b a- b-")]).unwrap();
        let t = GluedSurface::glue(vec![FaceWord::parse("f", "a b a- b-")]).unwrap();
        let map = check_isomorphic(&s, &t).unwrap();
        assert_eq!(map.len(), 2);
    }

    #[test]
    fn relabeled_torus() {
        let s = GluedSurface::glue(vec![FaceWord::parse("f", "a b a- b-")]).unwrap();
        let t = GluedSurface::glue(vec![FaceWord::parse("f", "x y x- y-")]).unwrap();
        let map = check_isomorphic(&s, &t).unwrap();
        assert_eq!(map.values().collect::<std::collections::BTreeSet<_>>().len(), 2);
    }

    #[test]
    fn torus_and_sphere_differ() {
        let s = GluedSurface::glue(vec![FaceWord::parse("f", "a b a- b-")]).unwrap();
        let t = GluedSurface::glue(vec![FaceWord::parse("f", "a a-")]).unwrap();
        assert!(check_isomorphic(&s, &t).is_none());
    }

    #[test]
    fn mirrored_complex_is_accepted() {
        let words = vec![
            FaceWord::parse("f1", "a b-"),
            FaceWord::parse("f2", "b c-"),
            FaceWord::parse("f3", "c a-"),
        ];
        let s = GluedSurface::glue(words.clone()).unwrap();
        let t = GluedSurface::glue(words.iter().map(FaceWord::mirrored).collect()).unwrap();
        assert!(check_isomorphic(&s, &t).is_some());
    }

    #[test]
    fn contraction_matches_word_built_graph() {
        for g in 3..=5 {
            let contracted = contract_scheme(&build_triangulation(g).unwrap()).unwrap();
            let model = build_model(g).unwrap();
            let map = check_isomorphic(&contracted, &model.base_surface);
            assert!(map.is_some(), "genus {g}");
        }
    }
}
