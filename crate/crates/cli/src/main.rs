//! Command-line surface for the spectral-cover monodromy models.
//!
//! Exit codes: 0 on success, 1 when a verification or relation check fails,
//! 2 on usage errors. All emissions are deterministic byte for byte.

use clap::{Parser, Subcommand};
use prym_core::burau;
use prym_core::exact_algebra::QuotientSpec;
use prym_core::hitchin_graph::{build_model, psi_map, HitchinModel};
use prym_core::monodromy::{build_rep, prym_quotient};
use prym_core::report;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "prym",
    about = "Dual graphs of hyperelliptic curves, spectral double covers, and their transvection monodromy",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the dual graph complex and its lift to the double cover
    Graph {
        /// Genus of the base curve (at least 3)
        #[arg(long)]
        genus: u32,
        /// Output format: json or dot
        #[arg(long, default_value = "json")]
        format: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the face boundary words and the anti-invariant cycle data
    Words {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the intersection pairing of the lifted edge cycles
    Intersections {
        #[arg(long)]
        genus: u32,
        /// Output format: json or csv
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the transvection generators and the central involution
    Monodromy {
        #[arg(long)]
        genus: u32,
        /// Reduce the action to the Prym quotient lattice
        #[arg(long)]
        quotient: bool,
        /// Output format: json or csv
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit Burau generators over a coefficient ring
    Burau {
        /// Number of strands (at least 2)
        #[arg(long)]
        n: usize,
        /// Coefficient ring: generic, t=-1, unit:k, or compact:k
        #[arg(long, default_value = "generic")]
        spec: String,
        /// Also run the braid, permutation, and transvection checks
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full invariant suite over a genus range
    Verify {
        /// Single genus "g" or inclusive range "a..b", minimum 3
        #[arg(long)]
        genus: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Bad arguments: exit 2.
    Usage(String),
    /// A check failed or a model invariant broke: exit 1.
    Check(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Graph { genus, format, out } => {
            let model = model_for(genus)?;
            let text = match format.as_str() {
                "json" => pretty(&json!({
                    "genus": genus,
                    "base": model.base_surface.to_json(),
                    "lifted": model.lifted_surface.to_json(),
                })),
                "dot" => format!(
                    "{}{}",
                    model.base_surface.to_dot("base"),
                    model.lifted_surface.to_dot("lifted")
                ),
                other => return Err(Failure::Usage(format!("unsupported format {other:?} for graph"))),
            };
            emit(out, &text)
        }
        Command::Words { genus, format, out } => {
            if format != "json" {
                return Err(Failure::Usage(format!("unsupported format {format:?} for words")));
            }
            let model = model_for(genus)?;
            let data = psi_map(&model)
                .map_err(|e| Failure::Check(format!("anti-invariant data failed: {e}")))?;
            let psi: serde_json::Map<String, Value> = data
                .psi
                .iter()
                .map(|(label, cycle)| {
                    let coeffs: serde_json::Map<String, Value> = cycle
                        .coefficients
                        .iter()
                        .map(|(sym, c)| (sym.clone(), Value::String(c.to_string())))
                        .collect();
                    (label.to_string(), Value::Object(coeffs))
                })
                .collect();
            let cap_psi: serde_json::Map<String, Value> = data
                .face_psi
                .iter()
                .map(|(face, coeffs)| {
                    let m: serde_json::Map<String, Value> = coeffs
                        .iter()
                        .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
                        .collect();
                    (face.name().to_string(), Value::Object(m))
                })
                .collect();
            let text = pretty(&json!({
                "genus": genus,
                "base_words": model.base_words,
                "lifted_words": model.lifted_words,
                "psi": psi,
                "Psi": cap_psi,
            }));
            emit(out, &text)
        }
        Command::Intersections { genus, format, out } => {
            let model = model_for(genus)?;
            let rep = build_rep(&model)
                .map_err(|e| Failure::Check(format!("pairing construction failed: {e}")))?;
            let order: Vec<String> =
                rep.pairing.edge_order.iter().map(|e| e.to_string()).collect();
            let text = match format.as_str() {
                "json" => pretty(&json!({
                    "genus": genus,
                    "edge_order": order,
                    "pairing": rep.pairing.matrix,
                })),
                "csv" => {
                    let mut s = String::from("row,col,entry\n");
                    for (i, a) in order.iter().enumerate() {
                        for (j, b) in order.iter().enumerate() {
                            writeln!(s, "{a},{b},{}", rep.pairing.matrix.get(i, j)).unwrap();
                        }
                    }
                    s
                }
                other => {
                    return Err(Failure::Usage(format!(
                        "unsupported format {other:?} for intersections"
                    )))
                }
            };
            emit(out, &text)
        }
        Command::Monodromy { genus, quotient, format, out } => {
            let model = model_for(genus)?;
            let rep = build_rep(&model)
                .map_err(|e| Failure::Check(format!("representation failed: {e}")))?;
            let (generators, tau, projection): (Vec<(String, _)>, _, _) = if quotient {
                let prym = prym_quotient(&rep)
                    .map_err(|e| Failure::Check(format!("quotient failed: {e}")))?;
                (
                    rep.pairing
                        .edge_order
                        .iter()
                        .map(|e| (e.to_string(), prym.reduced_generators[e].clone()))
                        .collect(),
                    prym.reduced_tau.clone(),
                    prym.projection.clone(),
                )
            } else {
                (
                    rep.pairing
                        .edge_order
                        .iter()
                        .map(|e| (e.to_string(), rep.generators[e].clone()))
                        .collect(),
                    rep.tau.clone(),
                    rep.prym_projection.projection.clone(),
                )
            };
            let text = match format.as_str() {
                "json" => {
                    let gens: serde_json::Map<String, Value> = generators
                        .iter()
                        .map(|(name, m)| (name.clone(), serde_json::to_value(m).unwrap()))
                        .collect();
                    pretty(&json!({
                        "genus": genus,
                        "quotient": quotient,
                        "edge_order": generators.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
                        "generators": gens,
                        "tau": tau,
                        "prym_projection": projection,
                    }))
                }
                "csv" => {
                    let mut s = String::from("generator,row,col,entry\n");
                    for (name, m) in
                        generators.iter().map(|(n, m)| (n.as_str(), m)).chain([("tau", &tau)])
                    {
                        for r in 0..m.rows() {
                            for c in 0..m.cols() {
                                writeln!(s, "{name},{r},{c},{}", m.get(r, c)).unwrap();
                            }
                        }
                    }
                    s
                }
                other => {
                    return Err(Failure::Usage(format!("unsupported format {other:?} for monodromy")))
                }
            };
            emit(out, &text)
        }
        Command::Burau { n, spec, check, out } => {
            if n < 2 {
                return Err(Failure::Usage(format!("n must be at least 2, got {n}")));
            }
            let spec: QuotientSpec =
                spec.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            let generators = burau::burau_generators(n, spec)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut body = json!({
                "n": n,
                "spec": spec.label(),
                "generators": generators,
            });
            let mut failed = false;
            if check {
                let braid = burau::check_braid_relations(n, spec)
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                let perm = burau::check_permutation_specialization(n)
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                let zeta = if n >= 3 {
                    let z = burau::zeta_basis_action(n).map_err(|e| Failure::Usage(e.to_string()))?;
                    let holds = z.all_hold();
                    failed |= !holds;
                    json!({ "checked": z.checked, "failures": z.failures })
                } else {
                    json!({ "checked": 0, "failures": [] })
                };
                failed |= !braid.all_hold() || !perm.all_hold();
                body["checks"] = json!({
                    "braid_relations": { "checked": braid.checked, "failures": braid.failures },
                    "permutations_at_t_1": { "checked": perm.checked, "failures": perm.failures },
                    "zeta_transvections": zeta,
                });
            }
            emit(out, &pretty(&body))?;
            if failed {
                return Err(Failure::Check("burau checks failed".into()));
            }
            Ok(())
        }
        Command::Verify { genus, out } => {
            let (lo, hi) = parse_range(&genus)?;
            let report = report::verify_range(lo, hi);
            emit(out, &pretty(&report.to_json()))?;
            if report.all_pass() {
                Ok(())
            } else {
                let failed: Vec<String> = report
                    .failures()
                    .iter()
                    .map(|c| format!("{} [{}]", c.name, c.scope))
                    .collect();
                Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
            }
        }
    }
}

fn model_for(genus: u32) -> Result<HitchinModel, Failure> {
    if genus < 3 {
        return Err(Failure::Usage(format!("genus must be at least 3, got {genus}")));
    }
    build_model(genus).map_err(|e| Failure::Check(format!("model construction failed: {e}")))
}

fn parse_range(text: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::Usage(format!("bad genus range {text:?}; expected \"g\" or \"a..b\""));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => {
            let g: u32 = text.parse().map_err(|_| bad())?;
            (g, g)
        }
    };
    if lo > hi {
        return Err(Failure::Usage(format!("empty genus range {text:?}")));
    }
    if lo < 3 {
        return Err(Failure::Usage(format!("genus must be at least 3, got {lo}")));
    }
    Ok((lo, hi))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::Check(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
