//! The combinatorial data attached to a hyperelliptic curve of genus g >= 3:
//! the dual polyhedron graph on the curve with faces inf-, inf+, 0-, 0+, its
//! lift to the spectral double cover, the sheet involution, the anti-invariant
//! cycle maps, and an independent triangulation-and-contraction construction
//! of the same graph.

mod iso;
mod model;
mod triangulation;
mod words;

pub use iso::check_isomorphic;
pub use model::{build_model, psi_map, HitchinModel, PsiData};
pub use triangulation::{build_triangulation, contract_scheme};
pub use words::{base_words, lifted_words};

use crate::surface_complex::SurfaceError;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HitchinError {
    #[error("genus must be at least 3, got {0}")]
    GenusTooSmall(u32),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Families of edges of the dual graph: u-edges run in the upper branch of
/// the curve, l-edges in the lower branch, b-edges cross the branch locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    U,
    L,
    B,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::U => 'u',
            Family::L => 'l',
            Family::B => 'b',
        }
    }
}

/// A labelled edge of the dual graph. For genus g the u and l indices run
/// over 1..=2g-2 and the b indices over 1..=2g+2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel {
    pub family: Family,
    pub index: u32,
}

impl EdgeLabel {
    pub fn u(index: u32) -> Self {
        EdgeLabel { family: Family::U, index }
    }

    pub fn l(index: u32) -> Self {
        EdgeLabel { family: Family::L, index }
    }

    pub fn b(index: u32) -> Self {
        EdgeLabel { family: Family::B, index }
    }

    pub fn in_range(&self, genus: u32) -> bool {
        match self.family {
            Family::U | Family::L => (1..=2 * genus - 2).contains(&self.index),
            Family::B => (1..=2 * genus + 2).contains(&self.index),
        }
    }

    /// One of the two lifts of this edge to the double cover.
    pub fn lift(self, sheet: u8) -> LiftedEdge {
        LiftedEdge::new(self, sheet)
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Edge of the lifted complex on the double cover: a base edge together with
/// the sheet (1 or 2) carrying the chosen lift. The sheet involution tau
/// exchanges the two lifts and fixes the base label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftedEdge {
    pub label: EdgeLabel,
    pub sheet: u8,
}

impl LiftedEdge {
    pub fn new(label: EdgeLabel, sheet: u8) -> Self {
        assert!(sheet == 1 || sheet == 2, "sheet must be 1 or 2");
        LiftedEdge { label, sheet }
    }

    pub fn tau(self) -> LiftedEdge {
        LiftedEdge { label: self.label, sheet: 3 - self.sheet }
    }
}

impl fmt::Display for LiftedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.label, self.sheet)
    }
}

/// The four faces of the dual polyhedron, dual to the four points of the
/// curve over 0 and infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BaseFace {
    InfMinus,
    InfPlus,
    ZeroMinus,
    ZeroPlus,
}

pub const BASE_FACES: [BaseFace; 4] =
    [BaseFace::InfMinus, BaseFace::InfPlus, BaseFace::ZeroMinus, BaseFace::ZeroPlus];

impl BaseFace {
    pub fn name(self) -> &'static str {
        match self {
            BaseFace::InfMinus => "inf_minus",
            BaseFace::InfPlus => "inf_plus",
            BaseFace::ZeroMinus => "zero_minus",
            BaseFace::ZeroPlus => "zero_plus",
        }
    }

    /// Name of the lift of this face on the given sheet.
    pub fn lifted_name(self, sheet: u8) -> String {
        format!("{}_{sheet}", self.name())
    }
}

impl fmt::Display for BaseFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Canonical ordering of the edge set: u1..u_{2g-2}, l1..l_{2g-2},
/// b1..b_{2g+2}. Pairing and generator matrices are indexed this way.
pub fn edge_order(genus: u32) -> Vec<EdgeLabel> {
    let mut order = Vec::with_capacity((6 * genus - 2) as usize);
    for i in 1..=2 * genus - 2 {
        order.push(EdgeLabel::u(i));
    }
    for i in 1..=2 * genus - 2 {
        order.push(EdgeLabel::l(i));
    }
    for i in 1..=2 * genus + 2 {
        order.push(EdgeLabel::b(i));
    }
    order
}
