//! The monodromy representation: one symplectic transvection per edge of the
//! dual graph acting on the edge lattice, the central involution tau = -Id,
//! and the reduction to the Prym homology quotient.
//!
//! Generators act on column vectors; composition is right to left. The
//! transvection at edge a sends e to e - (e . a) a, so as a matrix it is the
//! identity plus the outer product of the basis vector at a with row a of the
//! pairing matrix.

use crate::exact_algebra::{quotient_data, smith_decompose, IntegerMatrix, Lattice, QuotientData};
use crate::hitchin_graph::{psi_map, EdgeLabel, HitchinError, HitchinModel, PsiData, BASE_FACES};
use crate::surface_complex::intersection_number;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MonodromyError {
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Hitchin(#[from] HitchinError),
    #[error(transparent)]
    Surface(#[from] crate::surface_complex::SurfaceError),
}

/// Intersection pairing of the anti-invariant cycles, indexed by the
/// canonical edge order. Skew-symmetric with zero diagonal; the face classes
/// span its radical; the sign is normalized by (u1 . u2) = -1.
pub struct PairingMatrix {
    pub genus: u32,
    pub edge_order: Vec<EdgeLabel>,
    pub matrix: IntegerMatrix,
    index: BTreeMap<EdgeLabel, usize>,
}

impl PairingMatrix {
    pub fn pair(&self, a: EdgeLabel, b: EdgeLabel) -> &BigInt {
        self.matrix.get(self.index[&a], self.index[&b])
    }

    pub fn index_of(&self, e: EdgeLabel) -> usize {
        self.index[&e]
    }

    pub fn size(&self) -> usize {
        self.edge_order.len()
    }
}

pub fn pairing_matrix(model: &HitchinModel) -> Result<PairingMatrix, MonodromyError> {
    let data = psi_map(model)?;
    pairing_matrix_with(model, &data)
}

pub fn pairing_matrix_with(
    model: &HitchinModel,
    data: &PsiData,
) -> Result<PairingMatrix, MonodromyError> {
    let order = model.edge_order();
    let n = order.len();
    let mut m = IntegerMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..i {
            let v = intersection_number(
                &data.psi[&order[i]],
                &data.psi[&order[j]],
                &model.lifted_surface,
            )?;
            m.set(j, i, -v.clone());
            m.set(i, j, v);
        }
    }
    let p = PairingMatrix {
        genus: model.genus,
        index: order.iter().enumerate().map(|(i, e)| (*e, i)).collect(),
        edge_order: order,
        matrix: m,
    };
    if p.pair(EdgeLabel::u(1), EdgeLabel::u(2)) != &BigInt::from(-1) {
        return Err(MonodromyError::InvariantViolation(
            "pairing sign is not normalized: (u1 . u2) != -1".into(),
        ));
    }
    Ok(p)
}

/// The transvection at `edge`: the matrix sending each basis vector e to
/// e - (e . edge) edge. It has determinant 1, preserves the pairing exactly,
/// and fixes every vector in the radical.
pub fn transvection(edge: EdgeLabel, pairing: &PairingMatrix) -> IntegerMatrix {
    let n = pairing.size();
    let a = pairing.index_of(edge);
    let mut m = IntegerMatrix::identity(n);
    for j in 0..n {
        if j != a {
            let v = m.get(a, j) + pairing.matrix.get(a, j);
            m.set(a, j, v);
        }
    }
    m
}

/// Apply the transvection with pairing row `pairing_row` at index `a` to a
/// column vector in place.
fn apply_transvection(pairing_row: &[BigInt], a: usize, v: &mut [BigInt]) {
    let mut dot = BigInt::zero();
    for (j, coeff) in pairing_row.iter().enumerate() {
        if !coeff.is_zero() && !v[j].is_zero() {
            dot += coeff * &v[j];
        }
    }
    v[a] += dot;
}

/// The generating set of the monodromy representation on the edge lattice:
/// all transvections plus the central involution.
pub struct MonodromyRep {
    pub genus: u32,
    pub pairing: PairingMatrix,
    pub generators: BTreeMap<EdgeLabel, IntegerMatrix>,
    /// tau acts by -1 on every anti-invariant cycle.
    pub tau: IntegerMatrix,
    /// Saturation of the face sublattice and the projection past it.
    pub prym_projection: QuotientData,
    /// Psi(f) vectors in edge coordinates, in face order.
    pub face_vectors: Vec<Vec<BigInt>>,
}

pub fn build_rep(model: &HitchinModel) -> Result<MonodromyRep, MonodromyError> {
    let data = psi_map(model)?;
    let pairing = pairing_matrix_with(model, &data)?;
    let n = pairing.size();

    let mut generators = BTreeMap::new();
    for &e in &pairing.edge_order {
        let m = transvection(e, &pairing);
        // the inverse transvection subtracts the same pairing row, which
        // certifies invertibility over the integers
        let a = pairing.index_of(e);
        let mut inv = IntegerMatrix::identity(n);
        for j in 0..n {
            if j != a {
                let v = inv.get(a, j) - pairing.matrix.get(a, j);
                inv.set(a, j, v);
            }
        }
        if m.mul(&inv) != IntegerMatrix::identity(n) {
            return Err(MonodromyError::InvariantViolation(format!(
                "generator at {e} is not invertible over the integers"
            )));
        }
        generators.insert(e, m);
    }

    let face_vectors: Vec<Vec<BigInt>> =
        BASE_FACES.iter().map(|&f| model.face_vector(&data, f)).collect();
    let face_lattice = Lattice::new(n, face_vectors.clone()).map_err(|e| {
        MonodromyError::InvariantViolation(format!("face sublattice is degenerate: {e}"))
    })?;
    if face_lattice.rank() != 4 {
        return Err(MonodromyError::InvariantViolation(format!(
            "face sublattice rank {} != 4",
            face_lattice.rank()
        )));
    }
    let prym_projection = quotient_data(&face_lattice);
    if prym_projection.quotient_rank != (6 * model.genus - 6) as usize {
        return Err(MonodromyError::InvariantViolation(format!(
            "Prym quotient rank {} != 6g-6",
            prym_projection.quotient_rank
        )));
    }

    let tau = IntegerMatrix::identity(n).neg();
    Ok(MonodromyRep { genus: model.genus, pairing, generators, tau, prym_projection, face_vectors })
}

/// The monodromy module after passing to the Prym quotient: the edge lattice
/// modulo the saturated face sublattice, with the reduced generators and the
/// reduced (nondegenerate) pairing.
pub struct PrymLattice {
    pub genus: u32,
    pub face_sublattice: Lattice,
    pub quotient_rank: usize,
    pub reduced_generators: BTreeMap<EdgeLabel, IntegerMatrix>,
    pub reduced_pairing: IntegerMatrix,
    pub reduced_tau: IntegerMatrix,
    pub projection: IntegerMatrix,
}

pub fn prym_quotient(rep: &MonodromyRep) -> Result<PrymLattice, MonodromyError> {
    let q = &rep.prym_projection;
    let proj = &q.projection;
    let sect = &q.section;
    let r = q.quotient_rank;

    let mut reduced_generators = BTreeMap::new();
    for (e, m) in &rep.generators {
        // the generator fixes the saturation pointwise, so conjugating
        // through any section gives the induced quotient map
        reduced_generators.insert(*e, proj.mul(m).mul(sect));
    }
    let reduced_pairing = sect.transpose().mul(&rep.pairing.matrix).mul(sect);
    if smith_decompose(&reduced_pairing).rank != r {
        return Err(MonodromyError::InvariantViolation("reduced pairing is degenerate".into()));
    }
    Ok(PrymLattice {
        genus: rep.genus,
        face_sublattice: q.saturated.clone(),
        quotient_rank: r,
        reduced_generators,
        reduced_pairing,
        reduced_tau: IntegerMatrix::identity(r).neg(),
        projection: proj.clone(),
    })
}

/// Outcome of the pairwise relation checks.
#[derive(Debug, Default)]
pub struct RelationReport {
    pub braid_pairs: usize,
    pub commuting_pairs: usize,
    pub unconstrained_pairs: usize,
    pub generators_checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check, for every generator pair, commutation when the pairing vanishes and
/// the braid relation when it is +1 or -1; and for every generator, that it
/// preserves the pairing, fixes each face class, and commutes with tau.
pub fn verify_relations(rep: &MonodromyRep) -> RelationReport {
    let mut report = RelationReport::default();
    let n = rep.pairing.size();
    let rows: Vec<&[BigInt]> = (0..n).map(|i| rep.pairing.matrix.row(i)).collect();

    // pairwise relations, applied to every basis vector
    for a in 0..n {
        for b in 0..a {
            let p = rep.pairing.matrix.get(a, b);
            let braid = p.abs().is_one();
            if !braid && !p.is_zero() {
                report.unconstrained_pairs += 1;
                continue;
            }
            let (lhs_seq, rhs_seq): (Vec<usize>, Vec<usize>) =
                if braid { (vec![a, b, a], vec![b, a, b]) } else { (vec![a, b], vec![b, a]) };
            let mut ok = true;
            'basis: for k in 0..n {
                let mut lhs = vec![BigInt::zero(); n];
                lhs[k] = BigInt::one();
                let mut rhs = lhs.clone();
                // composition right to left: the last index applies first
                for &i in lhs_seq.iter().rev() {
                    apply_transvection(rows[i], i, &mut lhs);
                }
                for &i in rhs_seq.iter().rev() {
                    apply_transvection(rows[i], i, &mut rhs);
                }
                if lhs != rhs {
                    ok = false;
                    break 'basis;
                }
            }
            if braid {
                report.braid_pairs += 1;
            } else {
                report.commuting_pairs += 1;
            }
            if !ok {
                let kind = if braid { "braid relation" } else { "commutation" };
                report.failures.push(format!(
                    "{kind} fails for ({}, {})",
                    rep.pairing.edge_order[a], rep.pairing.edge_order[b]
                ));
            }
        }
    }

    for (e, m) in &rep.generators {
        report.generators_checked += 1;
        if m.transpose().mul(&rep.pairing.matrix).mul(m) != rep.pairing.matrix {
            report.failures.push(format!("generator {e} does not preserve the pairing"));
        }
        for (fi, v) in rep.face_vectors.iter().enumerate() {
            if &m.mul_vec(v) != v {
                report
                    .failures
                    .push(format!("generator {e} moves the face class {}", BASE_FACES[fi]));
            }
        }
        if m.mul(&rep.tau) != rep.tau.mul(m) {
            report.failures.push(format!("tau does not commute with {e}"));
        }
    }
    if rep.tau.mul(&rep.tau) != IntegerMatrix::identity(n) {
        report.failures.push("tau is not an involution".into());
    }
    report
}
