//! Boundary words of the four faces of the dual polyhedron and of their eight
//! lifts to the double cover.
//!
//! The head of the 0- word is the block b1..b8; the head of the 0+ word is
//! four blocks b(2j-1)^-1 u_j b(2j)^-1 l_j. For genus above 3 both words grow
//! a tail of four-letter blocks, one per extra handle. On the cover, a letter
//! is lifted to sheet 2 exactly when the edge crosses the branch cut locus;
//! those are l1, l3 and u1, u3 style letters in the 0+ head, the tail letters
//! u_{2m+3} in 0+, and the tail letters l_{2m+3} in 0-.

use super::{BaseFace, EdgeLabel, HitchinError, LiftedEdge};
use crate::surface_complex::{FaceWord, Sign, SymbolOccurrence};

fn occ(label: EdgeLabel, sign: Sign) -> SymbolOccurrence {
    SymbolOccurrence::new(label.to_string(), sign)
}

fn occ_lift(edge: LiftedEdge, sign: Sign) -> SymbolOccurrence {
    SymbolOccurrence::new(edge.to_string(), sign)
}

/// The boundary words of inf-, inf+, 0-, 0+ in that order.
pub fn base_words(genus: u32) -> Result<Vec<FaceWord>, HitchinError> {
    Ok(lifted_pattern(genus)?
        .into_iter()
        .map(|(face, letters)| {
            FaceWord::new(
                face.name(),
                letters.into_iter().map(|(edge, sign)| occ(edge.label, sign)).collect(),
            )
        })
        .collect())
}

/// The eight lifted boundary words: the four words of `base_words` with sheet
/// markers, followed by their tau conjugates with every sheet flipped.
pub fn lifted_words(genus: u32) -> Result<Vec<FaceWord>, HitchinError> {
    let pattern = lifted_pattern(genus)?;
    let mut out = Vec::with_capacity(8);
    for sheet_flip in [false, true] {
        for (face, letters) in &pattern {
            let name = face.lifted_name(if sheet_flip { 2 } else { 1 });
            let letters = letters
                .iter()
                .map(|&(edge, sign)| occ_lift(if sheet_flip { edge.tau() } else { edge }, sign))
                .collect();
            out.push(FaceWord::new(name, letters));
        }
    }
    Ok(out)
}

/// Sheet-marked letters of the four primary lifted faces.
fn lifted_pattern(genus: u32) -> Result<Vec<(BaseFace, Vec<(LiftedEdge, Sign)>)>, HitchinError> {
    if genus < 3 {
        return Err(HitchinError::GenusTooSmall(genus));
    }
    let g = genus;

    // inf-: (l1 l2 ... l_{2g-2})^-1, entirely on sheet 1
    let inf_minus: Vec<(LiftedEdge, Sign)> =
        (1..=2 * g - 2).rev().map(|j| (EdgeLabel::l(j).lift(1), Sign::Minus)).collect();

    // inf+: (u1 u2 ... u_{2g-2})^-1, entirely on sheet 1
    let inf_plus: Vec<(LiftedEdge, Sign)> =
        (1..=2 * g - 2).rev().map(|j| (EdgeLabel::u(j).lift(1), Sign::Minus)).collect();

    // 0-: b1..b8, then blocks b_{2m+7} l_{2m+3} b_{2m+8} u_{2m+4}; the l
    // letters in the tail cross the branch cuts and sit on sheet 2
    let mut zero_minus: Vec<(LiftedEdge, Sign)> =
        (1..=8).map(|k| (EdgeLabel::b(k).lift(1), Sign::Plus)).collect();
    for m in 1..=g.saturating_sub(3) {
        zero_minus.push((EdgeLabel::b(2 * m + 7).lift(1), Sign::Plus));
        zero_minus.push((EdgeLabel::l(2 * m + 3).lift(2), Sign::Plus));
        zero_minus.push((EdgeLabel::b(2 * m + 8).lift(1), Sign::Plus));
        zero_minus.push((EdgeLabel::u(2 * m + 4).lift(1), Sign::Plus));
    }

    // 0+: blocks b_{2j-1}^-1 u_j b_{2j}^-1 l_j for j = 1..4, sheet 2 on the
    // j = 1, 3 blocks, then tail blocks b_{2m+7}^-1 u_{2m+3} b_{2m+8}^-1
    // l_{2m+4} with u on sheet 2
    let mut zero_plus: Vec<(LiftedEdge, Sign)> = Vec::new();
    for j in 1..=4u32 {
        let cut = j % 2 == 1;
        let sheet = if cut { 2 } else { 1 };
        zero_plus.push((EdgeLabel::b(2 * j - 1).lift(1), Sign::Minus));
        zero_plus.push((EdgeLabel::u(j).lift(sheet), Sign::Plus));
        zero_plus.push((EdgeLabel::b(2 * j).lift(1), Sign::Minus));
        zero_plus.push((EdgeLabel::l(j).lift(sheet), Sign::Plus));
    }
    for m in 1..=g.saturating_sub(3) {
        zero_plus.push((EdgeLabel::b(2 * m + 7).lift(1), Sign::Minus));
        zero_plus.push((EdgeLabel::u(2 * m + 3).lift(2), Sign::Plus));
        zero_plus.push((EdgeLabel::b(2 * m + 8).lift(1), Sign::Minus));
        zero_plus.push((EdgeLabel::l(2 * m + 4).lift(1), Sign::Plus));
    }

    Ok(vec![
        (BaseFace::InfMinus, inf_minus),
        (BaseFace::InfPlus, inf_plus),
        (BaseFace::ZeroMinus, zero_minus),
        (BaseFace::ZeroPlus, zero_plus),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn genus_two_rejected() {
        assert!(matches!(base_words(2), Err(HitchinError::GenusTooSmall(2))));
        assert!(matches!(lifted_words(1), Err(HitchinError::GenusTooSmall(1))));
    }

    #[test]
    fn genus_three_zero_minus_is_b1_to_b8() {
        let words = base_words(3).unwrap();
        let zm = &words[2];
        assert_eq!(zm.face, "zero_minus");
        assert_eq!(zm.letters.len(), 8);
        for (i, l) in zm.letters.iter().enumerate() {
            assert_eq!(l.symbol, format!("b{}", i + 1));
            assert_eq!(l.exponent, Sign::Plus);
        }
    }

    #[test]
    fn genus_four_first_tail_block() {
        let words = base_words(4).unwrap();
        let zm = &words[2];
        let tail: Vec<&str> = zm.letters[8..12].iter().map(|l| l.symbol.as_str()).collect();
        assert_eq!(tail, ["b9", "l5", "b10", "u6"]);

        let lifted = lifted_words(4).unwrap();
        let zp1 = lifted.iter().find(|w| w.face == "zero_plus_1").unwrap();
        let tail: Vec<(String, Sign)> =
            zp1.letters[16..20].iter().map(|l| (l.symbol.clone(), l.exponent)).collect();
        assert_eq!(
            tail,
            vec![
                ("b9.1".to_string(), Sign::Minus),
                ("u5.2".to_string(), Sign::Plus),
                ("b10.1".to_string(), Sign::Minus),
                ("l6.1".to_string(), Sign::Plus),
            ]
        );
    }

    #[test]
    fn every_edge_twice_with_opposite_exponents() {
        for g in 3..=10 {
            let words = base_words(g).unwrap();
            let total: usize = words.iter().map(|w| w.letters.len()).sum();
            assert_eq!(total, (12 * g - 4) as usize, "g={g}");
            let mut counts: BTreeMap<&str, (u32, u32)> = BTreeMap::new();
            for w in &words {
                for l in &w.letters {
                    let c = counts.entry(&l.symbol).or_default();
                    match l.exponent {
                        Sign::Plus => c.0 += 1,
                        Sign::Minus => c.1 += 1,
                    }
                }
            }
            assert_eq!(counts.len(), (6 * g - 2) as usize);
            assert!(counts.values().all(|&(p, m)| p == 1 && m == 1));
        }
    }

    #[test]
    fn lifted_length_and_tau_pairing() {
        for g in 3..=8 {
            let words = lifted_words(g).unwrap();
            assert_eq!(words.len(), 8);
            let total: usize = words.iter().map(|w| w.letters.len()).sum();
            assert_eq!(total, 2 * (12 * g - 4) as usize, "g={g}");
            // tau conjugation pairs the words without fixed points
            for i in 0..4 {
                let (w1, w2) = (&words[i], &words[i + 4]);
                assert_eq!(w1.letters.len(), w2.letters.len());
                let mut differs = false;
                for (a, b) in w1.letters.iter().zip(&w2.letters) {
                    assert_eq!(a.exponent, b.exponent);
                    assert_ne!(a.symbol, b.symbol);
                    let base = |s: &str| s.split('.').next().unwrap().to_string();
                    assert_eq!(base(&a.symbol), base(&b.symbol));
                    differs = true;
                }
                assert!(differs);
            }
        }
        assert_eq!(
            lifted_words(3).unwrap().iter().map(|w| w.letters.len()).sum::<usize>(),
            64
        );
    }

    #[test]
    fn sheet_two_letters_match_branch_cuts() {
        let words = lifted_words(5).unwrap();
        let zp = words.iter().find(|w| w.face == "zero_plus_1").unwrap();
        let sheet2: Vec<&str> = zp
            .letters
            .iter()
            .filter(|l| l.symbol.ends_with(".2"))
            .map(|l| l.symbol.as_str())
            .collect();
        assert_eq!(sheet2, ["u1.2", "l1.2", "u3.2", "l3.2", "u5.2", "u7.2"]);
        let zm = words.iter().find(|w| w.face == "zero_minus_1").unwrap();
        let sheet2: Vec<&str> = zm
            .letters
            .iter()
            .filter(|l| l.symbol.ends_with(".2"))
            .map(|l| l.symbol.as_str())
            .collect();
        assert_eq!(sheet2, ["l5.2", "l7.2"]);
    }
}
