//! Named verification checks over a genus range, with a machine-readable
//! report. The CLI verify command and the acceptance suite both drive these.

use crate::burau;
use crate::exact_algebra::{smith_decompose, QuotientSpec};
use crate::hitchin_graph::{
    build_model, build_triangulation, check_isomorphic, contract_scheme, edge_order, psi_map,
    EdgeLabel, Family, HitchinModel, PsiData,
};
use crate::monodromy::{build_rep, prym_quotient, verify_relations};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub scope: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn exact<T: PartialEq + std::fmt::Debug>(name: &str, scope: String, expected: T, actual: T) -> Check {
        Check {
            name: name.into(),
            scope,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass: expected == actual,
        }
    }

    fn claim(name: &str, scope: String, description: &str, holds: bool) -> Check {
        Check {
            name: name.into(),
            scope,
            expected: description.into(),
            actual: if holds { "holds".into() } else { "violated".into() },
            pass: holds,
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "checks": self.checks, "all_pass": self.all_pass() })
    }
}

/// Run every per-genus check and the Burau suite for a whole range.
pub fn verify_range(lo: u32, hi: u32) -> Report {
    let mut report = Report::default();
    for g in lo..=hi {
        report.checks.extend(verify_genus(g));
    }
    report.checks.extend(burau_checks(8));
    for g in lo..=hi {
        report.checks.extend(covering_genus_check(g));
    }
    report
}

/// All structural checks for one genus.
pub fn verify_genus(g: u32) -> Vec<Check> {
    let scope = format!("g={g}");
    let model = match build_model(g) {
        Ok(m) => m,
        Err(e) => {
            return vec![Check::claim("build_model", scope, "model construction succeeds", false)
                .with_actual(e.to_string())]
        }
    };
    let mut checks = Vec::new();
    checks.extend(count_checks(&model));
    checks.extend(chain_checks(&model));
    checks.extend(homology_checks(&model));
    match psi_map(&model) {
        Ok(data) => {
            checks.extend(psi_checks(&model, &data));
        }
        Err(e) => checks.push(
            Check::claim("psi_map", scope.clone(), "psi data construction succeeds", false)
                .with_actual(e.to_string()),
        ),
    }
    checks.extend(monodromy_checks(&model));
    checks.extend(cross_construction_check(&model));
    checks
}

impl Check {
    fn with_actual(mut self, actual: String) -> Check {
        self.actual = actual;
        self
    }
}

fn count_checks(model: &HitchinModel) -> Vec<Check> {
    let g = i64::from(model.genus);
    let scope = format!("g={g}");
    let b = &model.base_surface;
    let l = &model.lifted_surface;
    vec![
        Check::exact(
            "counts_base",
            scope.clone(),
            (4 * g - 4, 6 * g - 2, 4, g),
            (b.vertex_count() as i64, b.edge_count() as i64, b.face_count() as i64, b.genus()),
        ),
        Check::exact(
            "counts_lifted",
            scope.clone(),
            (4 * g - 4, 12 * g - 4, 8),
            (l.vertex_count() as i64, l.edge_count() as i64, l.face_count() as i64),
        ),
        Check::exact("euler_lifted", scope.clone(), 8 - 8 * g, l.euler_characteristic()),
        Check::exact("genus_lifted", scope, 4 * g - 3, l.genus()),
    ]
}

fn chain_checks(model: &HitchinModel) -> Vec<Check> {
    let scope = format!("g={}", model.genus);
    let d1 = model.lifted_surface.boundary_one();
    let d2 = model.lifted_surface.boundary_two();
    let base_zero = model
        .base_surface
        .boundary_one()
        .mul(&model.base_surface.boundary_two())
        .is_zero();
    let tau_ok = match model.tau_vertex_matrix() {
        Ok(tv) => {
            d1.mul(&model.tau_edge_matrix()) == tv.mul(&d1)
                && d2.mul(&model.tau_face_matrix()) == model.tau_edge_matrix().mul(&d2)
        }
        Err(_) => false,
    };
    vec![
        Check::claim(
            "chain_complex",
            scope.clone(),
            "d1 * d2 = 0 on base and lifted complexes",
            d1.mul(&d2).is_zero() && base_zero,
        ),
        Check::claim("tau_chain_map", scope, "boundary commutes with tau", tau_ok),
    ]
}

fn homology_checks(model: &HitchinModel) -> Vec<Check> {
    let g = model.genus;
    let scope = format!("g={g}");
    let (rank, torsion) = model.lifted_surface.homology();
    vec![
        Check::exact("homology_lifted_rank", scope.clone(), (8 * g - 6) as usize, rank),
        Check::exact("homology_lifted_torsion", scope, Vec::<BigInt>::new(), torsion),
    ]
}

fn psi_checks(model: &HitchinModel, data: &PsiData) -> Vec<Check> {
    let g = model.genus;
    let scope = format!("g={g}");
    let mut checks = Vec::new();

    let anti = data.psi.iter().all(|(_, cycle)| {
        model.lifted_surface.check_cycle(cycle).is_ok() && model.tau_cycle(cycle) == cycle.neg()
    });
    checks.push(Check::claim(
        "psi_anti_invariant",
        scope.clone(),
        "each psi(e) is a cycle with tau psi = -psi",
        anti,
    ));

    // -Psi(inf-) = sum of l, -Psi(inf+) = sum of u, 0- has +1 and 0+ has -1
    // on every branch edge
    use crate::hitchin_graph::BaseFace;
    let exact_sums = {
        let inf_minus = &data.face_psi[&BaseFace::InfMinus];
        let inf_plus = &data.face_psi[&BaseFace::InfPlus];
        let l_ok = (1..=2 * g - 2).all(|j| {
            inf_minus.get(&EdgeLabel::l(j)) == Some(&BigInt::from(-1))
        }) && inf_minus.len() == (2 * g - 2) as usize;
        let u_ok = (1..=2 * g - 2).all(|j| {
            inf_plus.get(&EdgeLabel::u(j)) == Some(&BigInt::from(-1))
        }) && inf_plus.len() == (2 * g - 2) as usize;
        let b_ok = (1..=2 * g + 2).all(|k| {
            data.face_psi[&BaseFace::ZeroMinus].get(&EdgeLabel::b(k)) == Some(&BigInt::one())
                && data.face_psi[&BaseFace::ZeroPlus].get(&EdgeLabel::b(k))
                    == Some(&BigInt::from(-1))
        });
        l_ok && u_ok && b_ok
    };
    checks.push(Check::claim(
        "psi_face_sums",
        scope.clone(),
        "face classes have the printed edge sums",
        exact_sums,
    ));

    // Psi differs from the plain face boundary exactly on branch-cut letters
    let cut_signs = {
        let mut ok = true;
        for face in crate::hitchin_graph::BASE_FACES {
            let lifted_name = face.lifted_name(1);
            let word = model.lifted_words.iter().find(|w| w.face == lifted_name).unwrap();
            for l in &word.letters {
                let (base_sym, sheet) = l.symbol.split_once('.').unwrap();
                let label = parse_label(base_sym);
                let psi_coeff = data.face_psi[&face].get(&label).cloned().unwrap_or_default();
                let boundary_coeff = model
                    .base_words
                    .iter()
                    .find(|w| w.face == face.name())
                    .unwrap()
                    .letters
                    .iter()
                    .filter(|bl| bl.symbol == base_sym)
                    .map(|bl| bl.exponent.as_i64())
                    .sum::<i64>();
                let expected = if sheet == "2" { -boundary_coeff } else { boundary_coeff };
                if psi_coeff != BigInt::from(expected) {
                    ok = false;
                }
            }
        }
        ok
    };
    checks.push(Check::claim(
        "psi_branch_cut_signs",
        scope,
        "Psi flips the boundary coefficient exactly on sheet-2 letters",
        cut_signs,
    ));
    checks
}

fn parse_label(sym: &str) -> EdgeLabel {
    let family = match sym.as_bytes()[0] {
        b'u' => Family::U,
        b'l' => Family::L,
        _ => Family::B,
    };
    EdgeLabel { family, index: sym[1..].parse().unwrap() }
}

/// The printed intersection table: every in-range entry of the eight
/// unambiguous items, as (left edge, right edge, value).
pub fn printed_pairing_table(g: u32) -> Vec<(EdgeLabel, EdgeLabel, i64)> {
    let mut t = Vec::new();
    // consecutive cycles in one branch pair to -1
    for j in 1..=2 * g - 3 {
        t.push((EdgeLabel::u(j), EdgeLabel::u(j + 1), -1));
        t.push((EdgeLabel::l(j), EdgeLabel::l(j + 1), -1));
    }
    // consecutive branch cycles pair to +1
    for j in 1..=7 {
        t.push((EdgeLabel::b(j), EdgeLabel::b(j + 1), 1));
    }
    // the u rows against their two branch columns, alternating sign blocks
    for (j, s) in [(1u32, 1i64), (2, -1), (3, 1), (4, -1)] {
        t.push((EdgeLabel::u(j), EdgeLabel::b(2 * j), s));
        t.push((EdgeLabel::u(j), EdgeLabel::b(2 * j + 1), -s));
        t.push((EdgeLabel::u(j + 1), EdgeLabel::b(2 * j), -s));
        t.push((EdgeLabel::u(j + 1), EdgeLabel::b(2 * j + 1), s));
    }
    // the l rows, alternating the other way; j = 1 has no l0 row
    for (j, s) in [(1u32, -1i64), (2, 1), (3, -1), (4, 1)] {
        if j > 1 {
            t.push((EdgeLabel::l(j - 1), EdgeLabel::b(2 * j - 1), s));
            t.push((EdgeLabel::l(j - 1), EdgeLabel::b(2 * j), -s));
        }
        t.push((EdgeLabel::l(j), EdgeLabel::b(2 * j - 1), -s));
        t.push((EdgeLabel::l(j), EdgeLabel::b(2 * j), s));
    }
    t.retain(|(a, b, _)| a.in_range(g) && b.in_range(g));
    t
}

fn monodromy_checks(model: &HitchinModel) -> Vec<Check> {
    let g = model.genus;
    let scope = format!("g={g}");
    let rep = match build_rep(model) {
        Ok(r) => r,
        Err(e) => {
            return vec![Check::claim(
                "monodromy_rep",
                scope,
                "representation construction succeeds",
                false,
            )
            .with_actual(e.to_string())]
        }
    };
    let mut checks = Vec::new();

    let p = &rep.pairing;
    let n = p.size();
    let skew = (0..n).all(|i| {
        p.matrix.get(i, i).is_zero()
            && (0..n).all(|j| p.matrix.get(i, j) == &(-p.matrix.get(j, i)))
    });
    checks.push(Check::claim(
        "pairing_skew",
        scope.clone(),
        "pairing is skew-symmetric with zero diagonal",
        skew,
    ));

    let nonadjacent = (0..n).all(|i| {
        (0..n).all(|j| {
            let (a, b) = (p.edge_order[i], p.edge_order[j]);
            model
                .base_surface
                .edges_share_vertex(&a.to_string(), &b.to_string())
                .map(|adj| adj || p.matrix.get(i, j).is_zero())
                .unwrap_or(false)
        })
    });
    checks.push(Check::claim(
        "pairing_nonadjacent",
        scope.clone(),
        "pairing vanishes on edges sharing no vertex",
        nonadjacent,
    ));

    let table = printed_pairing_table(g);
    let table_ok = table.iter().all(|&(a, b, v)| p.pair(a, b) == &BigInt::from(v));
    checks.push(Check::exact(
        "pairing_table",
        scope.clone(),
        ("all printed entries reproduced", table.len()),
        (
            if table_ok { "all printed entries reproduced" } else { "mismatch" },
            table.len(),
        ),
    ));

    checks.push(Check::exact(
        "pairing_rank",
        scope.clone(),
        (6 * g - 6) as usize,
        smith_decompose(&p.matrix).rank,
    ));

    let radical = rep
        .face_vectors
        .iter()
        .all(|v| p.matrix.mul_vec(v).iter().all(|x| x.is_zero()));
    checks.push(Check::claim(
        "pairing_radical",
        scope.clone(),
        "face classes lie in the radical of the pairing",
        radical,
    ));

    checks.push(Check::exact(
        "generator_count",
        scope.clone(),
        (6 * g - 2) as usize,
        rep.generators.len(),
    ));

    let dets = rep.generators.values().all(|m| m.determinant().abs().is_one());
    checks.push(Check::claim(
        "generator_determinants",
        scope.clone(),
        "every generator has determinant +1 or -1",
        dets,
    ));

    let relations = verify_relations(&rep);
    checks.push(Check::exact(
        "monodromy_relations",
        scope.clone(),
        ("no failures", 0usize, 0usize),
        (
            if relations.all_hold() { "no failures" } else { "failures" },
            relations.failures.len(),
            relations.unconstrained_pairs,
        ),
    ));

    match prym_quotient(&rep) {
        Ok(prym) => {
            checks.push(Check::exact(
                "prym_quotient_rank",
                scope.clone(),
                (6 * g - 6) as usize,
                prym.quotient_rank,
            ));
            let reduced_ok = prym.reduced_generators.values().all(|m| {
                m.transpose().mul(&prym.reduced_pairing).mul(m) == prym.reduced_pairing
                    && m.determinant().abs().is_one()
            });
            checks.push(Check::claim(
                "prym_reduced_generators",
                scope,
                "reduced generators preserve the nondegenerate reduced pairing",
                reduced_ok && smith_decompose(&prym.reduced_pairing).rank == prym.quotient_rank,
            ));
        }
        Err(e) => checks.push(
            Check::claim("prym_quotient", scope, "quotient construction succeeds", false)
                .with_actual(e.to_string()),
        ),
    }
    checks
}

fn cross_construction_check(model: &HitchinModel) -> Vec<Check> {
    let scope = format!("g={}", model.genus);
    let result = build_triangulation(model.genus)
        .and_then(|t| contract_scheme(&t))
        .map(|c| check_isomorphic(&c, &model.base_surface).is_some());
    vec![match result {
        Ok(found) => Check::claim(
            "cross_construction",
            scope,
            "contracted triangulation is fat-graph isomorphic to the word-built graph",
            found,
        ),
        Err(e) => Check::claim("cross_construction", scope, "construction succeeds", false)
            .with_actual(e.to_string()),
    }]
}

fn covering_genus_check(g: u32) -> Vec<Check> {
    let scope = format!("g={g}");
    let lifted = build_model(g).map(|m| m.lifted_surface.genus()).unwrap_or(i64::MIN);
    let formula = burau::covering_genus(u64::from(g), u64::from(4 * g - 4), 2)
        .map(|v| v as i64)
        .unwrap_or(i64::MAX);
    vec![Check::exact("covering_genus_crosscheck", scope, lifted, formula)]
}

/// Burau checks up to the given strand count: braid relations over the
/// generic ring and both quotient specializations, permutation matrices at
/// t = 1, and the transvection identity in the zeta basis at t = -1.
pub fn burau_checks(n_max: usize) -> Vec<Check> {
    let scope = format!("n<={n_max}");
    let mut checks = Vec::new();

    for spec in [QuotientSpec::Generic, QuotientSpec::UnitRoot(2), QuotientSpec::Compact(2)] {
        let ok = (2..=n_max).all(|n| {
            burau::check_braid_relations(n, spec).map(|r| r.all_hold()).unwrap_or(false)
        });
        checks.push(Check::claim(
            &format!("burau_braid_{}", spec.label().replace(':', "_")),
            scope.clone(),
            "braid and commutation relations hold",
            ok,
        ));
    }

    let t1 = (2..=n_max).all(|n| {
        burau::check_permutation_specialization(n).map(|r| r.all_hold()).unwrap_or(false)
    });
    checks.push(Check::claim(
        "burau_t1_permutations",
        scope.clone(),
        "t = 1 specializations are the transposition matrices",
        t1,
    ));

    let zeta = (3..=n_max)
        .all(|n| burau::zeta_basis_action(n).map(|r| r.all_hold()).unwrap_or(false));
    checks.push(Check::claim(
        "burau_zeta_transvections",
        scope,
        "t = -1 generators act as transvections on the difference basis",
        zeta,
    ));
    checks
}

/// Sanity rail shared by tests: the number of edges for a genus.
pub fn expected_edge_count(g: u32) -> usize {
    edge_order(g).len()
}
