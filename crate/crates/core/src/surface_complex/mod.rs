//! Closed oriented surfaces glued from cyclic face boundary words.
//!
//! A face word lists the directed edges around a face; each edge symbol must
//! appear exactly twice across all words, once per direction. Face words are
//! read as positively (counterclockwise) oriented polygon boundaries, which
//! fixes the orientation of the glued surface. Vertices, the rotation system,
//! topology, and the intersection pairing of 1-cycles are all derived from
//! the words alone.

mod export;
mod intersection;

use crate::exact_algebra::{smith_decompose, IntegerMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub use intersection::intersection_number;

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("malformed gluing: {0}")]
    MalformedGluing(String),
    #[error("complex is not connected")]
    Disconnected,
    #[error("odd Euler characteristic {0}: not a closed oriented surface")]
    OddChi(i64),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cannot contract the loop edge {0}")]
    LoopContraction(String),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
}

/// Direction in which a face word traverses an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One letter of a face boundary word: an edge symbol with exponent +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolOccurrence {
    pub symbol: String,
    pub exponent: Sign,
}

impl SymbolOccurrence {
    pub fn new(symbol: impl Into<String>, exponent: Sign) -> Self {
        SymbolOccurrence { symbol: symbol.into(), exponent }
    }
}

impl Serialize for SymbolOccurrence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SymbolOccurrence", 2)?;
        s.serialize_field("symbol", &self.symbol)?;
        s.serialize_field("exponent", &self.exponent.as_i64())?;
        s.end()
    }
}

/// Cyclic boundary word of one face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceWord {
    pub face: String,
    pub letters: Vec<SymbolOccurrence>,
}

impl FaceWord {
    pub fn new(face: impl Into<String>, letters: Vec<SymbolOccurrence>) -> Self {
        FaceWord { face: face.into(), letters }
    }

    /// Parse "a b- c" style shorthand: symbols separated by spaces, with a
    /// trailing '-' marking exponent -1. Test and fixture convenience.
    pub fn parse(face: &str, word: &str) -> Self {
        let letters = word
            .split_whitespace()
            .map(|tok| match tok.strip_suffix('-') {
                Some(sym) => SymbolOccurrence::new(sym, Sign::Minus),
                None => SymbolOccurrence::new(tok, Sign::Plus),
            })
            .collect();
        FaceWord::new(face, letters)
    }

    /// The same face traversed with reversed orientation.
    pub fn mirrored(&self) -> FaceWord {
        FaceWord {
            face: self.face.clone(),
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| SymbolOccurrence::new(l.symbol.clone(), l.exponent.flip()))
                .collect(),
        }
    }
}

/// Integer 1-chain supported on the edges of a glued surface.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OneCycle {
    pub coefficients: BTreeMap<String, BigInt>,
}

impl OneCycle {
    pub fn new(coefficients: BTreeMap<String, BigInt>) -> Self {
        let coefficients = coefficients.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        OneCycle { coefficients }
    }

    pub fn from_i64(pairs: &[(&str, i64)]) -> Self {
        let mut m = BTreeMap::new();
        for &(s, c) in pairs {
            *m.entry(s.to_string()).or_insert_with(BigInt::zero) += BigInt::from(c);
        }
        OneCycle::new(m)
    }

    pub fn coefficient(&self, symbol: &str) -> BigInt {
        self.coefficients.get(symbol).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &OneCycle) -> OneCycle {
        let mut m = self.coefficients.clone();
        for (s, c) in &other.coefficients {
            *m.entry(s.clone()).or_insert_with(BigInt::zero) += c;
        }
        OneCycle::new(m)
    }

    pub fn neg(&self) -> OneCycle {
        OneCycle {
            coefficients: self.coefficients.iter().map(|(s, c)| (s.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> OneCycle {
        let k = BigInt::from(k);
        OneCycle::new(self.coefficients.iter().map(|(s, c)| (s.clone(), c * &k)).collect())
    }
}

pub(crate) type Dart = usize;

/// Closed oriented surface built from face boundary words.
///
/// Immutable after `glue`; every query is read-only.
pub struct GluedSurface {
    faces: Vec<FaceWord>,
    edges: Vec<String>,
    edge_index: BTreeMap<String, usize>,
    /// next dart along the face boundary
    phi: Vec<Dart>,
    /// counterclockwise-next outgoing dart around the vertex: sigma = alpha o phi^-1
    sigma: Vec<Dart>,
    vertex_of_dart: Vec<usize>,
    /// per vertex: canonical name and counterclockwise rotation of outgoing darts
    vertices: Vec<Vertex>,
    /// dart -> index within its vertex rotation
    rotation_pos: Vec<usize>,
    euler: i64,
    genus: i64,
}

pub(crate) struct Vertex {
    pub name: String,
    pub rotation: Vec<Dart>,
}

#[inline]
pub(crate) fn alpha(d: Dart) -> Dart {
    d ^ 1
}

impl GluedSurface {
    /// Glue the faces along matching edge letters.
    ///
    /// Fails if any symbol does not occur exactly twice with opposite
    /// exponents, or if the resulting complex is disconnected.
    pub fn glue(words: Vec<FaceWord>) -> Result<GluedSurface, SurfaceError> {
        if words.is_empty() {
            return Err(SurfaceError::MalformedGluing("no faces".into()));
        }
        for w in &words {
            if w.letters.is_empty() {
                return Err(SurfaceError::MalformedGluing(format!("face {} has an empty word", w.face)));
            }
        }
        {
            let mut names: Vec<&str> = words.iter().map(|w| w.face.as_str()).collect();
            names.sort_unstable();
            names.dedup();
            if names.len() != words.len() {
                return Err(SurfaceError::MalformedGluing("duplicate face name".into()));
            }
        }

        // each symbol must be traversed exactly once in each direction
        let mut usage: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for w in &words {
            for l in &w.letters {
                let u = usage.entry(l.symbol.as_str()).or_insert((0, 0));
                match l.exponent {
                    Sign::Plus => u.0 += 1,
                    Sign::Minus => u.1 += 1,
                }
            }
        }
        for (sym, (plus, minus)) in &usage {
            if *plus != 1 || *minus != 1 {
                return Err(SurfaceError::MalformedGluing(format!(
                    "edge {sym} occurs {plus} time(s) with exponent +1 and {minus} with -1; expected once each"
                )));
            }
        }

        let edges: Vec<String> = usage.keys().map(|s| s.to_string()).collect();
        let edge_index: BTreeMap<String, usize> =
            edges.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let dart_count = 2 * edges.len();

        let mut dart_position = vec![(usize::MAX, usize::MAX); dart_count];
        for (fi, w) in words.iter().enumerate() {
            for (li, l) in w.letters.iter().enumerate() {
                let e = edge_index[&l.symbol];
                let d = 2 * e + if l.exponent == Sign::Plus { 0 } else { 1 };
                dart_position[d] = (fi, li);
            }
        }

        let mut phi = vec![0; dart_count];
        let mut phi_inv = vec![0; dart_count];
        {
            // dart at each word position
            let mut at: Vec<Vec<Dart>> = words.iter().map(|w| vec![0; w.letters.len()]).collect();
            for (d, &(fi, li)) in dart_position.iter().enumerate() {
                at[fi][li] = d;
            }
            for (fi, w) in words.iter().enumerate() {
                let n = w.letters.len();
                for li in 0..n {
                    let d = at[fi][li];
                    let next = at[fi][(li + 1) % n];
                    phi[d] = next;
                    phi_inv[next] = d;
                }
            }
        }

        // counterclockwise-next around each vertex
        let sigma: Vec<Dart> = (0..dart_count).map(|d| alpha(phi_inv[d])).collect();

        // vertices are the sigma-orbits; name each by its least corner
        let mut vertex_of_dart = vec![usize::MAX; dart_count];
        let mut orbits: Vec<Vec<Dart>> = Vec::new();
        for d0 in 0..dart_count {
            if vertex_of_dart[d0] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut d = d0;
            loop {
                vertex_of_dart[d] = id;
                orbit.push(d);
                d = sigma[d];
                if d == d0 {
                    break;
                }
            }
            orbits.push(orbit);
        }

        let corner_name = |d: Dart| -> String {
            let (fi, li) = dart_position[d];
            let n = words[fi].letters.len();
            format!("{}:{}", words[fi].face, (li + n - 1) % n)
        };

        let mut named: Vec<(String, Vec<Dart>)> = orbits
            .into_iter()
            .map(|orbit| {
                let (best_pos, best_name) = orbit
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| (i, corner_name(d)))
                    .min_by(|a, b| a.1.cmp(&b.1))
                    .expect("orbit nonempty");
                // rotate the cycle to start at the canonical corner
                let mut rot = orbit.clone();
                rot.rotate_left(best_pos);
                (best_name, rot)
            })
            .collect();
        named.sort_by(|a, b| a.0.cmp(&b.0));

        let mut renumber = vec![usize::MAX; dart_count];
        for (new_id, (_, rot)) in named.iter().enumerate() {
            for &d in rot {
                renumber[vertex_of_dart[d]] = new_id;
                break;
            }
        }
        let vertex_of_dart: Vec<usize> =
            vertex_of_dart.into_iter().map(|old| renumber[old]).collect();
        let vertices: Vec<Vertex> =
            named.into_iter().map(|(name, rotation)| Vertex { name, rotation }).collect();
        let mut rotation_pos = vec![usize::MAX; dart_count];
        for v in &vertices {
            for (i, &d) in v.rotation.iter().enumerate() {
                rotation_pos[d] = i;
            }
        }

        // connectivity of the dart graph under alpha and sigma
        {
            let mut seen = vec![false; dart_count];
            let mut stack = vec![0];
            seen[0] = true;
            let mut count = 0;
            while let Some(d) = stack.pop() {
                count += 1;
                for n in [alpha(d), sigma[d]] {
                    if !seen[n] {
                        seen[n] = true;
                        stack.push(n);
                    }
                }
            }
            if count != dart_count {
                return Err(SurfaceError::Disconnected);
            }
        }

        let euler = vertices.len() as i64 - edges.len() as i64 + words.len() as i64;
        if euler.rem_euclid(2) != 0 {
            return Err(SurfaceError::OddChi(euler));
        }

        let surface = GluedSurface {
            faces: words,
            edges,
            edge_index,
            phi,
            sigma,
            vertex_of_dart,
            vertices,
            rotation_pos,
            euler,
            genus: (2 - euler) / 2,
        };
        debug_assert!(surface.boundary_one().mul(&surface.boundary_two()).is_zero());
        Ok(surface)
    }

    pub fn faces(&self) -> &[FaceWord] {
        &self.faces
    }

    /// Edge symbols in sorted order; this is the column order of `boundary_one`.
    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> Vec<&str> {
        self.vertices.iter().map(|v| v.name.as_str()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.euler
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// (tail, head) vertex names of an edge.
    pub fn endpoints(&self, symbol: &str) -> Result<(&str, &str), SurfaceError> {
        let e = self.edge_id(symbol)?;
        Ok((
            self.vertices[self.vertex_of_dart[2 * e]].name.as_str(),
            self.vertices[self.vertex_of_dart[2 * e + 1]].name.as_str(),
        ))
    }

    /// Counterclockwise cyclic order of edge ends around a vertex. Each end
    /// is the edge symbol plus the direction in which it leaves the vertex.
    pub fn rotation(&self, vertex: &str) -> Option<Vec<(String, Sign)>> {
        let v = self.vertices.iter().find(|v| v.name == vertex)?;
        Some(
            v.rotation
                .iter()
                .map(|&d| {
                    let sign = if d % 2 == 0 { Sign::Plus } else { Sign::Minus };
                    (self.edges[d / 2].clone(), sign)
                })
                .collect(),
        )
    }

    /// Do two edges share at least one endpoint?
    pub fn edges_share_vertex(&self, a: &str, b: &str) -> Result<bool, SurfaceError> {
        let ea = self.edge_id(a)?;
        let eb = self.edge_id(b)?;
        let (ta, ha) = (self.vertex_of_dart[2 * ea], self.vertex_of_dart[2 * ea + 1]);
        let (tb, hb) = (self.vertex_of_dart[2 * eb], self.vertex_of_dart[2 * eb + 1]);
        Ok(ta == tb || ta == hb || ha == tb || ha == hb)
    }

    pub(crate) fn edge_id(&self, symbol: &str) -> Result<usize, SurfaceError> {
        self.edge_index.get(symbol).copied().ok_or_else(|| SurfaceError::UnknownEdge(symbol.into()))
    }

    pub(crate) fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub(crate) fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub(crate) fn sigma_inv(&self, d: Dart) -> Dart {
        // sigma = alpha o phi^-1, so sigma^-1 = phi o alpha
        self.phi[alpha(d)]
    }

    pub(crate) fn dart_symbol(&self, d: Dart) -> &str {
        &self.edges[d / 2]
    }

    pub(crate) fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of_dart[d]
    }

    pub(crate) fn vertex(&self, id: usize) -> &Vertex {
        &self.vertices[id]
    }

    pub(crate) fn rotation_position(&self, d: Dart) -> usize {
        self.rotation_pos[d]
    }

    /// Vertex at the tail of the letter at `pos` in the word of `face`.
    pub fn letter_tail_vertex(&self, face: &str, pos: usize) -> Option<&str> {
        let fi = self.faces.iter().position(|w| w.face == face)?;
        let l = self.faces[fi].letters.get(pos)?;
        let e = self.edge_index.get(&l.symbol)?;
        let d = 2 * e + if l.exponent == Sign::Plus { 0 } else { 1 };
        Some(self.vertices[self.vertex_of_dart[d]].name.as_str())
    }

    /// Signed vertex-edge incidence matrix, one row per vertex in name order,
    /// one column per edge in symbol order.
    pub fn boundary_one(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.vertices.len(), self.edges.len());
        for (e, _) in self.edges.iter().enumerate() {
            let tail = self.vertex_of_dart[2 * e];
            let head = self.vertex_of_dart[2 * e + 1];
            let cur = m.get(head, e) + BigInt::from(1);
            m.set(head, e, cur);
            let cur = m.get(tail, e) - BigInt::from(1);
            m.set(tail, e, cur);
        }
        m
    }

    /// Edge coefficients of each face boundary, one row per edge, one column
    /// per face in input order.
    pub fn boundary_two(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.edges.len(), self.faces.len());
        for (fi, w) in self.faces.iter().enumerate() {
            for l in &w.letters {
                let e = self.edge_index[&l.symbol];
                let cur = m.get(e, fi) + BigInt::from(l.exponent.as_i64());
                m.set(e, fi, cur);
            }
        }
        m
    }

    /// Boundary of a face as a 1-chain.
    pub fn face_boundary(&self, face: &str) -> Option<OneCycle> {
        let w = self.faces.iter().find(|w| w.face == face)?;
        let mut m: BTreeMap<String, BigInt> = BTreeMap::new();
        for l in &w.letters {
            *m.entry(l.symbol.clone()).or_insert_with(BigInt::zero) +=
                BigInt::from(l.exponent.as_i64());
        }
        Some(OneCycle::new(m))
    }

    /// Is the chain a 1-cycle (zero boundary)?
    pub fn check_cycle(&self, c: &OneCycle) -> Result<(), SurfaceError> {
        let mut at_vertex = vec![BigInt::zero(); self.vertices.len()];
        for (sym, coeff) in &c.coefficients {
            let e = self.edge_id(sym)?;
            at_vertex[self.vertex_of_dart[2 * e + 1]] += coeff;
            at_vertex[self.vertex_of_dart[2 * e]] -= coeff;
        }
        for (v, sum) in at_vertex.iter().enumerate() {
            if !sum.is_zero() {
                return Err(SurfaceError::NotACycle(format!(
                    "boundary at vertex {} is {}",
                    self.vertices[v].name, sum
                )));
            }
        }
        Ok(())
    }

    /// Rank and torsion of the first homology group, via Smith normal form of
    /// the boundary operators.
    pub fn homology(&self) -> (usize, Vec<BigInt>) {
        let d1 = self.boundary_one();
        let d2 = self.boundary_two();
        debug_assert!(d1.mul(&d2).is_zero());
        let r1 = smith_decompose(&d1).rank;
        let s2 = smith_decompose(&d2);
        let rank = self.edges.len() - r1 - s2.rank;
        let torsion: Vec<BigInt> = (0..s2.rank)
            .map(|i| s2.d.get(i, i).clone())
            .filter(|d| *d > BigInt::from(1))
            .collect();
        (rank, torsion)
    }

    /// Contract a non-loop edge: its endpoints merge and the rotation at the
    /// merged vertex is the splice of the two original cyclic orders. Genus
    /// and face count are unchanged.
    pub fn contract_edge(&self, symbol: &str) -> Result<GluedSurface, SurfaceError> {
        let e = self.edge_id(symbol)?;
        if self.vertex_of_dart[2 * e] == self.vertex_of_dart[2 * e + 1] {
            return Err(SurfaceError::LoopContraction(symbol.into()));
        }
        let words: Vec<FaceWord> = self
            .faces
            .iter()
            .map(|w| FaceWord {
                face: w.face.clone(),
                letters: w.letters.iter().filter(|l| l.symbol != symbol).cloned().collect(),
            })
            .collect();
        if words.iter().any(|w| w.letters.is_empty()) {
            return Err(SurfaceError::MalformedGluing(format!(
                "contracting {symbol} empties a face word"
            )));
        }
        GluedSurface::glue(words)
    }

    /// True if some pair of distinct edges connects the same pair of vertices.
    pub fn has_multi_edge(&self) -> bool {
        let mut seen = BTreeMap::new();
        for e in 0..self.edges.len() {
            let mut pair = [self.vertex_of_dart[2 * e], self.vertex_of_dart[2 * e + 1]];
            pair.sort_unstable();
            if seen.insert(pair, e).is_some() {
                return true;
            }
        }
        false
    }

    pub fn has_loop(&self) -> bool {
        (0..self.edges.len()).any(|e| self.vertex_of_dart[2 * e] == self.vertex_of_dart[2 * e + 1])
    }
}

impl fmt::Debug for GluedSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GluedSurface(V={}, E={}, F={}, chi={}, genus={})",
            self.vertex_count(),
            self.edge_count(),
            self.face_count(),
            self.euler,
            self.genus
        )
    }
}

#[allow(unused_imports)]
use serde::Deserializer;

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(deserializer)?;
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(serde::de::Error::custom("exponent must be +1 or -1")),
        }
    }
}
