//! Algebraic intersection number of 1-cycles on a glued surface.
//!
//! The second cycle is decomposed into weighted closed edge walks and pushed
//! off the 1-skeleton to its left. The pushed copy crosses the skeleton only
//! inside vertex corners: where a walk arrives along a dart and departs along
//! another, the displaced strand sweeps clockwise between the two ends and
//! crosses every edge end strictly between them. Each crossing of an edge end
//! contributes minus the outward flow of the first cycle along that end. The
//! total is independent of the walk decomposition because the pushed copy is
//! homologous to the original cycle.

use super::{alpha, Dart, GluedSurface, OneCycle, SurfaceError};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Signed count of crossings between the homology classes of `c1` and `c2`,
/// with the orientation induced by reading face words counterclockwise.
/// Bilinear, skew-symmetric, and zero on face boundaries.
pub fn intersection_number(
    c1: &OneCycle,
    c2: &OneCycle,
    surface: &GluedSurface,
) -> Result<BigInt, SurfaceError> {
    surface.check_cycle(c1)?;
    surface.check_cycle(c2)?;

    // outward flow of c1 along each dart
    let mut out = vec![BigInt::zero(); surface.dart_count()];
    for (sym, coeff) in &c1.coefficients {
        let e = surface.edge_id(sym)?;
        out[2 * e] = coeff.clone();
        out[2 * e + 1] = -coeff.clone();
    }

    let mut total = BigInt::zero();
    for (walk, weight) in decompose_into_walks(c2, surface)? {
        let n = walk.len();
        for i in 0..n {
            let arrive = walk[i];
            let depart = walk[(i + 1) % n];
            let back = alpha(arrive);
            let v = surface.vertex_of(back);
            debug_assert_eq!(v, surface.vertex_of(depart));
            let rotation = &surface.vertex(v).rotation;
            let len = rotation.len();
            let target = surface.rotation_position(depart);
            // sweep clockwise from just past the arrival end to the departure
            // end; when they coincide the sweep passes every other end once
            let mut cur = (surface.rotation_position(back) + len - 1) % len;
            while cur != target {
                let ray = rotation[cur];
                if !out[ray].is_zero() {
                    total -= &weight * &out[ray];
                }
                cur = (cur + len - 1) % len;
            }
        }
    }
    Ok(total)
}

/// Decompose a cycle into closed dart walks with positive weights. Flow
/// conservation (the cycle condition) guarantees every trace closes up.
fn decompose_into_walks(
    c: &OneCycle,
    surface: &GluedSurface,
) -> Result<Vec<(Vec<Dart>, BigInt)>, SurfaceError> {
    let mut residual = vec![BigInt::zero(); surface.dart_count()];
    for (sym, coeff) in &c.coefficients {
        let e = surface.edge_id(sym)?;
        if coeff.is_positive() {
            residual[2 * e] = coeff.clone();
        } else if coeff.is_negative() {
            residual[2 * e + 1] = -coeff.clone();
        }
    }

    let mut walks = Vec::new();
    'outer: loop {
        let Some(start) = (0..residual.len()).find(|&d| residual[d].is_positive()) else {
            break;
        };
        let mut path: Vec<Dart> = Vec::new();
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        let mut cur = start;
        loop {
            let tail = surface.vertex_of(cur);
            if let Some(&i) = seen.get(&tail) {
                let cycle: Vec<Dart> = path.split_off(i);
                let weight =
                    cycle.iter().map(|&d| residual[d].clone()).min().expect("nonempty cycle");
                for &d in &cycle {
                    residual[d] -= &weight;
                }
                walks.push((cycle, weight));
                continue 'outer;
            }
            seen.insert(tail, path.len());
            path.push(cur);
            let head = surface.vertex_of(alpha(cur));
            cur = surface
                .vertex(head)
                .rotation
                .iter()
                .copied()
                .filter(|&d| residual[d].is_positive())
                .min()
                .expect("flow conservation failed");
        }
    }
    Ok(walks)
}
