//! The fundamental triangulation route to the dual graph.
//!
//! The dual of the fundamental triangulation is a prism over a (2g+2)-cycle:
//! an upper ring of vertices joined by edges au_k, a lower ring joined by
//! al_k, and rungs d_k, carrying the fat structure with exactly four faces.
//! Contracting four staggered edges in each ring reproduces the dual graph
//! built from the boundary words, which `check_isomorphic` certifies.

use super::HitchinError;
use crate::surface_complex::{FaceWord, GluedSurface, Sign, SymbolOccurrence};

fn au(k: u32, n: u32) -> String {
    format!("au{}", k % n)
}

fn al(k: u32, n: u32) -> String {
    format!("al{}", k % n)
}

fn rung(k: u32, n: u32) -> String {
    format!("d{}", k % n)
}

/// The dual of the fundamental triangulation as a fat graph with 4g+4
/// trivalent vertices, 6g+6 edges, and four faces: two ring faces of degree
/// 2g+2 and two faces of degree 4g+4 alternating rungs and ring edges.
pub fn build_triangulation(genus: u32) -> Result<GluedSurface, HitchinError> {
    if genus < 3 {
        return Err(HitchinError::GenusTooSmall(genus));
    }
    let n = 2 * genus + 2;

    let plus = |s: String| SymbolOccurrence::new(s, Sign::Plus);
    let minus = |s: String| SymbolOccurrence::new(s, Sign::Minus);

    // the two faces alternating rungs and ring edges, one over the even ring
    // positions and one over the odd
    let mixed = |start: u32| -> Vec<SymbolOccurrence> {
        let mut letters = Vec::with_capacity(2 * n as usize);
        let mut k = start;
        for _ in 0..n / 2 {
            letters.push(plus(au(k, n)));
            letters.push(plus(rung(k + 1, n)));
            letters.push(plus(al(k + 1, n)));
            letters.push(minus(rung(k + 2, n)));
            k += 2;
        }
        letters
    };

    let ring = |name: fn(u32, u32) -> String| -> Vec<SymbolOccurrence> {
        (0..n).rev().map(|k| minus(name(k, n))).collect()
    };

    let words = vec![
        FaceWord::new("zero_plus", mixed(0)),
        FaceWord::new("zero_minus", mixed(1)),
        FaceWord::new("inf_plus", ring(au)),
        FaceWord::new("inf_minus", ring(al)),
    ];
    let surface = GluedSurface::glue(words)?;

    let g = i64::from(genus);
    let counts = (
        surface.vertex_count() as i64,
        surface.edge_count() as i64,
        surface.face_count() as i64,
        surface.genus(),
    );
    if counts != (4 * g + 4, 6 * g + 6, 4, g) {
        return Err(HitchinError::InvariantViolation(format!(
            "triangulation counts {counts:?}, expected ({}, {}, 4, {g})",
            4 * g + 4,
            6 * g + 6
        )));
    }
    for name in surface.vertex_names() {
        if surface.rotation(name).map(|r| r.len()) != Some(3) {
            return Err(HitchinError::InvariantViolation(format!(
                "triangulation vertex {name} is not trivalent"
            )));
        }
    }
    Ok(surface)
}

/// Contract the eight designated ring edges: upper positions 1, 3, 5, 7 and
/// lower positions 0, 2, 4, 6. The result is a simple fat graph with 4g-4
/// vertices, 6g-2 edges, four faces, and unchanged genus.
pub fn contract_scheme(triangulation: &GluedSurface) -> Result<GluedSurface, HitchinError> {
    let v = triangulation.vertex_count() as i64;
    if v < 16 || (v - 4) % 4 != 0 || triangulation.face_count() != 4 {
        return Err(HitchinError::InvariantViolation(
            "input does not look like a fundamental triangulation".into(),
        ));
    }
    let g = (v - 4) / 4;

    let mut surface: Option<GluedSurface> = None;
    for k in [1u32, 3, 5, 7] {
        let next = surface.as_ref().unwrap_or(triangulation).contract_edge(&format!("au{k}"))?;
        surface = Some(next);
    }
    for k in [0u32, 2, 4, 6] {
        let next = surface.as_ref().expect("set above").contract_edge(&format!("al{k}"))?;
        surface = Some(next);
    }
    let surface = surface.expect("eight contractions");

    let counts = (
        surface.vertex_count() as i64,
        surface.edge_count() as i64,
        surface.face_count() as i64,
        surface.genus(),
    );
    if counts != (4 * g - 4, 6 * g - 2, 4, g) {
        return Err(HitchinError::InvariantViolation(format!(
            "contracted counts {counts:?}, expected ({}, {}, 4, {g})",
            4 * g - 4,
            6 * g - 2
        )));
    }
    if surface.has_loop() {
        return Err(HitchinError::InvariantViolation("contraction produced a loop".into()));
    }
    if surface.has_multi_edge() {
        return Err(HitchinError::InvariantViolation("contraction produced a double edge".into()));
    }
    Ok(surface)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_three_triangulation_counts() {
        let t = build_triangulation(3).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (16, 24, 4));
        assert_eq!(t.euler_characteristic(), -4);
        assert_eq!(t.genus(), 3);
    }

    #[test]
    fn face_degrees() {
        for g in [3u32, 5, 10] {
            let t = build_triangulation(g).unwrap();
            let mut degrees: Vec<usize> = t.faces().iter().map(|w| w.letters.len()).collect();
            degrees.sort_unstable();
            let n = (2 * g + 2) as usize;
            assert_eq!(degrees, vec![n, n, 2 * n, 2 * n], "g={g}");
            // ring faces carry ring edges only
            for w in t.faces() {
                if w.letters.len() == n {
                    assert!(w.letters.iter().all(|l| !l.symbol.starts_with('d')));
                } else {
                    let rungs = w.letters.iter().filter(|l| l.symbol.starts_with('d')).count();
                    assert_eq!(rungs, n, "mixed face alternates rungs and ring edges");
                }
            }
        }
    }

    #[test]
    fn contraction_gives_simple_graph() {
        let t = build_triangulation(3).unwrap();
        let c = contract_scheme(&t).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (8, 16, 4));
        assert_eq!(c.genus(), 3);
        assert!(!c.has_loop());
        assert!(!c.has_multi_edge());
    }

    #[test]
    fn genus_five_contraction_counts() {
        let c = contract_scheme(&build_triangulation(5).unwrap()).unwrap();
        assert_eq!(c.vertex_count(), 16);
    }

    #[test]
    fn rejects_small_genus() {
        assert!(matches!(build_triangulation(2), Err(HitchinError::GenusTooSmall(2))));
    }
}
