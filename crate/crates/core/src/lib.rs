//! Combinatorial models of spectral double covers over hyperelliptic curves:
//! polygon-glued surfaces, the dual polyhedron and its lift, anti-invariant
//! cycles and their intersection pairing, the transvection monodromy on the
//! Prym homology lattice, and the classical Burau representation with its
//! specializations. All arithmetic is exact.

pub mod burau;
pub mod exact_algebra;
pub mod hitchin_graph;
pub mod monodromy;
pub mod report;
pub mod surface_complex;
