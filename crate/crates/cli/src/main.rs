//! `dclaw`: command-line front end for the d-claw vertex deletion toolkit.
//!
//! Machine-readable JSON goes to stdout; the human summary goes to stderr.
//! Exit codes: 0 success (and "yes" answers), 2 parse error, 3 precondition
//! error, 4 "no" answers (infeasible budget, invalid set, class rejected).

use clap::{Parser, Subcommand, ValueEnum};
use dclaw_core::claw::{verify_deletion_set, Solution};
use dclaw_core::generators::{self, GenModel, GenSpec};
use dclaw_core::graph::{Diameter, Graph};
use dclaw_core::io as fmt_io;
use dclaw_core::reductions::{self, ReductionArtifact};
use dclaw_core::solvers::{self, Algorithm, SolveRequest};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::time::Instant;

const EXIT_PARSE: i32 = 2;
const EXIT_PRECONDITION: i32 = 3;
const EXIT_NO: i32 = 4;
const BRANCH_CAP_ENV: &str = "DCLAW_BRANCH_CAP";

#[derive(Parser)]
#[command(name = "dclaw", version, about = "d-claw vertex deletion toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Brute,
    Fpt,
    Greedy,
    CompleteBipartite,
    Dblock,
    Auto,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Algorithm {
        match a {
            AlgoArg::Brute => Algorithm::Brute,
            AlgoArg::Fpt => Algorithm::Fpt,
            AlgoArg::Greedy => Algorithm::Greedy,
            AlgoArg::CompleteBipartite => Algorithm::CompleteBipartite,
            AlgoArg::Dblock => Algorithm::DBlock,
            AlgoArg::Auto => Algorithm::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReduceKind {
    VcLeaves,
    Diam2,
    Diam3Bip,
    NaeCvd,
    NaeClaw,
    HvcSplit,
    ClawExtend,
}

#[derive(Subcommand)]
enum Command {
    /// Solve minimum d-claw vertex deletion, or decide a budget with --k.
    Solve {
        input: PathBuf,
        #[arg(long)]
        d: usize,
        /// Budget for decision mode; exit code 4 means "no".
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "auto")]
        algo: AlgoArg,
        /// Search-tree node cap before auto falls back to greedy
        /// (default from DCLAW_BRANCH_CAP, then 10^7).
        #[arg(long)]
        branch_cap: Option<u64>,
    },
    /// Check a vertex set file against a graph; exit 4 plus witness if not
    /// a d-claw deletion set.
    Verify {
        input: PathBuf,
        set: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Recognize a graph class: bipartite, split, block, dblock:<d>,
    /// complete-bipartite. Exit 4 on "no".
    Recognize {
        input: PathBuf,
        #[arg(long)]
        class: String,
    },
    /// Build a reduction, writing <prefix>.graph and <prefix>.json.
    Reduce {
        #[arg(long, value_enum)]
        from: ReduceKind,
        source: PathBuf,
        output_prefix: PathBuf,
        /// Claw order, where the construction does not fix it.
        #[arg(long)]
        d: Option<usize>,
        /// Source-instance budget to carry through the reduction.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate a seeded instance and print it in the matching text format.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named acceptance suite, or all of them.
    Suite {
        name: Option<String>,
        #[arg(long)]
        all: bool,
        /// List available suite names.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Gnp,
    Block,
    Dblock,
    Nae,
    Hypergraph,
    CompleteBipartite,
}

enum CliError {
    Parse(String),
    Precondition(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) => m,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    fmt_io::parse_edge_list(&read_file(path)?).map_err(|e| CliError::Parse(e.to_string()))
}

fn emit(report: &serde_json::Value, summary: &str) {
    println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
    eprintln!("{summary}");
}

fn instance_summary(g: &Graph, d: usize) -> serde_json::Value {
    json!({ "n": g.vertex_count(), "m": g.edge_count(), "d": d })
}

// Runtime goes to the human summary only, keeping the structured output
// byte-stable across runs for identical inputs.
fn solution_payload(sol: &Solution) -> serde_json::Value {
    json!({
        "vertices": sol.vertices,
        "size": sol.size(),
        "certified_optimal": sol.certified_optimal,
        "algorithm_tag": sol.algorithm_tag,
    })
}

fn run_solve(
    input: &Path,
    d: usize,
    k: Option<usize>,
    algo: AlgoArg,
    branch_cap: Option<u64>,
) -> Result<i32, CliError> {
    if d < 1 {
        return Err(CliError::Precondition("claw order must be at least 1".into()));
    }
    let g = load_graph(input)?;
    let cap = branch_cap.or_else(|| {
        std::env::var(BRANCH_CAP_ENV).ok().and_then(|v| v.parse().ok())
    });
    let mut warnings: Vec<String> = Vec::new();
    if matches!(algo, AlgoArg::Brute) && g.vertex_count() > solvers::BRUTE_FORCE_WARN_VERTICES {
        warnings.push(format!(
            "brute force on {} vertices may be very slow",
            g.vertex_count()
        ));
    }
    let started = Instant::now();

    if let Some(k) = k {
        // decision mode
        let answer: Option<Solution> = match algo {
            AlgoArg::Fpt | AlgoArg::Auto => solvers::solve_fpt(&g, d, k),
            AlgoArg::Brute => {
                let sol = solvers::solve_brute_force(&g, d);
                (sol.size() <= k).then_some(sol)
            }
            AlgoArg::CompleteBipartite => {
                let sol = solvers::solve_complete_bipartite(&g, d)
                    .map_err(|e| CliError::Precondition(e.to_string()))?;
                (sol.size() <= k).then_some(sol)
            }
            AlgoArg::Dblock => {
                let sol = dclaw_core::dblock::solve_d_block(&g, d)
                    .map_err(|e| CliError::Precondition(e.to_string()))?;
                (sol.size() <= k).then_some(sol)
            }
            AlgoArg::Greedy => {
                return Err(CliError::Precondition(
                    "greedy cannot certify a \"no\" answer in decision mode".into(),
                ))
            }
        };
        let elapsed = started.elapsed().as_millis();
        return Ok(match answer {
            Some(sol) => {
                let report = json!({
                    "command": "solve",
                    "instance": instance_summary(&g, d),
                    "decision": { "k": k, "feasible": true },
                    "result": solution_payload(&sol),
                    "warnings": warnings,
                });
                emit(
                    &report,
                    &format!(
                        "yes: deletion set of size {} within budget {k} ({elapsed} ms)",
                        sol.size()
                    ),
                );
                0
            }
            None => {
                let report = json!({
                    "command": "solve",
                    "instance": instance_summary(&g, d),
                    "decision": { "k": k, "feasible": false },
                    "warnings": warnings,
                });
                emit(&report, &format!("no: no deletion set of size at most {k} ({elapsed} ms)"));
                EXIT_NO
            }
        });
    }

    let sol = match algo {
        AlgoArg::Brute => solvers::solve_brute_force(&g, d),
        AlgoArg::Fpt => solvers::solve_min_fpt(&g, d),
        AlgoArg::Greedy => solvers::greedy_approx(&g, d),
        AlgoArg::CompleteBipartite => solvers::solve_complete_bipartite(&g, d)
            .map_err(|e| CliError::Precondition(e.to_string()))?,
        AlgoArg::Dblock => dclaw_core::dblock::solve_d_block(&g, d)
            .map_err(|e| CliError::Precondition(e.to_string()))?,
        AlgoArg::Auto => {
            let req = SolveRequest {
                graph: g.clone(),
                d,
                budget_k: None,
                algorithm: Algorithm::Auto,
                branch_cap: cap,
            };
            solvers::solve_auto(&req).map_err(|e| CliError::Precondition(e.to_string()))?
        }
    };
    let elapsed = started.elapsed().as_millis();
    if !sol.certified_optimal {
        warnings.push("result is not certified optimal".into());
    }
    let report = json!({
        "command": "solve",
        "instance": instance_summary(&g, d),
        "result": solution_payload(&sol),
        "warnings": warnings,
    });
    emit(
        &report,
        &format!(
            "deletion set of size {} ({}, {}, {elapsed} ms)",
            sol.size(),
            sol.algorithm_tag,
            if sol.certified_optimal { "optimal" } else { "uncertified" }
        ),
    );
    Ok(0)
}

fn run_verify(input: &Path, set: &Path, d: usize) -> Result<i32, CliError> {
    let g = load_graph(input)?;
    let s = fmt_io::parse_vertex_set(&read_file(set)?)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let (ok, witness) =
        verify_deletion_set(&g, &s, d).map_err(|e| CliError::Parse(e.to_string()))?;
    let report = json!({
        "command": "verify",
        "instance": instance_summary(&g, d),
        "set_size": s.len(),
        "valid": ok,
        "witness": witness.as_ref().map(|w| json!({ "center": w.center, "leaves": w.leaves })),
    });
    if ok {
        emit(&report, "valid: the set is a d-claw deletion set");
        Ok(0)
    } else {
        let w = witness.expect("invalid verification carries a witness");
        emit(
            &report,
            &format!("invalid: claw centered at {} with leaves {:?} survives", w.center, w.leaves),
        );
        Ok(EXIT_NO)
    }
}

fn run_recognize(input: &Path, class: &str) -> Result<i32, CliError> {
    let g = load_graph(input)?;
    let (yes, witness): (bool, serde_json::Value) = match class {
        "bipartite" => {
            let bip = g.bipartition();
            (bip.valid, json!(null))
        }
        "split" => match g.split_partition() {
            Some((clique, independent)) => {
                (true, json!({ "clique": clique, "independent": independent }))
            }
            None => (false, json!(null)),
        },
        "complete-bipartite" => match g.complete_bipartite_sides() {
            Some((x, y)) => (true, json!({ "sides": [x, y] })),
            None => (false, json!(null)),
        },
        other => {
            let d = if other == "block" {
                2
            } else if let Some(rest) = other.strip_prefix("dblock:") {
                rest.parse::<usize>().map_err(|_| {
                    CliError::Parse(format!("bad class parameter in {other:?}"))
                })?
            } else {
                return Err(CliError::Parse(format!("unknown class {other:?}")));
            };
            let analysis = dclaw_core::dblock::is_d_block_graph(&g, d)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            let witness = analysis
                .violating_block
                .map(|(b, reason)| json!({ "block": b, "reason": format!("{reason:?}") }))
                .unwrap_or(json!(null));
            (analysis.is_d_block, witness)
        }
    };
    let report = json!({
        "command": "recognize",
        "class": class,
        "instance": { "n": g.vertex_count(), "m": g.edge_count() },
        "member": yes,
        "witness": witness,
    });
    emit(&report, &format!("{class}: {}", if yes { "yes" } else { "no" }));
    Ok(if yes { 0 } else { EXIT_NO })
}

fn write_artifact(prefix: &Path, art: &ReductionArtifact) -> Result<(), CliError> {
    let graph_path = prefix.with_extension("graph");
    let sidecar_path = prefix.with_extension("json");
    std::fs::write(&graph_path, fmt_io::format_edge_list(&art.graph))
        .map_err(|e| CliError::Precondition(format!("cannot write {}: {e}", graph_path.display())))?;
    std::fs::write(&sidecar_path, fmt_io::format_artifact_sidecar(art))
        .map_err(|e| CliError::Precondition(format!("cannot write {}: {e}", sidecar_path.display())))?;
    Ok(())
}

fn run_reduce(
    from: ReduceKind,
    source: &Path,
    prefix: &Path,
    d: Option<usize>,
    k: Option<usize>,
) -> Result<i32, CliError> {
    let precondition = |e: reductions::ReductionError| CliError::Precondition(e.to_string());
    let (art, assertions): (ReductionArtifact, Vec<String>) = match from {
        ReduceKind::VcLeaves => {
            let g = load_graph(source)?;
            let d = d.ok_or_else(|| CliError::Precondition("--d is required for vc-leaves".into()))?;
            let art = reductions::attach_leaves(&g, d, k).map_err(precondition)?;
            (art, vec!["optimum equals the source vertex cover optimum".into()])
        }
        ReduceKind::Diam2 => {
            let g = load_graph(source)?;
            let d = d.ok_or_else(|| CliError::Precondition("--d is required for diam2".into()))?;
            let art = reductions::wrap_diameter2(&g, d, k).map_err(precondition)?;
            let diam = art.graph.diameter();
            debug_assert_eq!(diam, Diameter::Finite(2));
            (art, vec![format!("output diameter checked: {diam:?}"), "budget shift +1".into()])
        }
        ReduceKind::Diam3Bip => {
            let g = load_graph(source)?;
            let d = d.ok_or_else(|| CliError::Precondition("--d is required for diam3-bip".into()))?;
            let art = reductions::wrap_diameter3_bipartite(&g, d, k).map_err(precondition)?;
            let diam = art.graph.diameter();
            (art, vec![format!("bipartite, output diameter checked: {diam:?}"), "budget shift +2".into()])
        }
        ReduceKind::NaeCvd => {
            let f = fmt_io::parse_nae_formula(&read_file(source)?)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            let art = reductions::reduce_nae3sat_to_cvd(&f).map_err(precondition)?;
            (art, vec!["bipartite with maximum degree 3 (asserted)".into()])
        }
        ReduceKind::NaeClaw => {
            let f = fmt_io::parse_nae_formula(&read_file(source)?)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            let art = reductions::reduce_nae3sat_to_clawvd(&f).map_err(precondition)?;
            (art, vec!["bipartite with maximum degree 3 (asserted)".into()])
        }
        ReduceKind::HvcSplit => {
            let h = fmt_io::parse_hypergraph(&read_file(source)?)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            let art = reductions::reduce_hvc_to_split(&h, k).map_err(precondition)?;
            (art, vec!["split graph without induced (d+1)-claws (asserted)".into()])
        }
        ReduceKind::ClawExtend => {
            let g = load_graph(source)?;
            let d = d.ok_or_else(|| CliError::Precondition("--d is required for claw-extend".into()))?;
            let art = reductions::extend_claw_to_dclaw(&g, d, k).map_err(precondition)?;
            (art, vec!["optimum equals the source claw deletion optimum".into()])
        }
    };
    write_artifact(prefix, &art)?;
    let report = json!({
        "command": "reduce",
        "from": format!("{from:?}"),
        "output": {
            "graph": prefix.with_extension("graph"),
            "sidecar": prefix.with_extension("json"),
            "n": art.graph.vertex_count(),
            "m": art.graph.edge_count(),
            "d": art.d,
            "budget_k": art.budget_k,
        },
        "assertions": assertions,
    });
    emit(
        &report,
        &format!(
            "wrote {} vertices, d = {}, budget_k = {:?}",
            art.graph.vertex_count(),
            art.d,
            art.budget_k
        ),
    );
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn run_gen(
    model: ModelArg,
    seed: u64,
    n: Option<usize>,
    m: Option<usize>,
    r: Option<usize>,
    p: Option<f64>,
    d: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let need = |x: Option<usize>, what: &str| {
        x.ok_or_else(|| CliError::Precondition(format!("--{what} is required for this model")))
    };
    let spec = GenSpec {
        model: match model {
            ModelArg::Gnp => GenModel::Gnp {
                n: need(n, "n")?,
                p: p.ok_or_else(|| CliError::Precondition("--p is required for gnp".into()))?,
            },
            ModelArg::Block => GenModel::BlockGraph { n: need(n, "n")? },
            ModelArg::Dblock => GenModel::DBlockGraph { d: need(d, "d")?, n: need(n, "n")? },
            ModelArg::Nae => GenModel::NaeFormula { n: need(n, "n")?, m: need(m, "m")? },
            ModelArg::Hypergraph => GenModel::UniformHypergraph {
                n: need(n, "n")?,
                m: need(m, "m")?,
                r: need(r, "r")?,
            },
            ModelArg::CompleteBipartite => {
                GenModel::CompleteBipartite { a: need(a, "a")?, b: need(b, "b")? }
            }
        },
        seed,
    };
    let instance = generators::gen(&spec).map_err(|e| CliError::Precondition(e.to_string()))?;
    let (text, kind) = match &instance {
        generators::Instance::Graph(g) => (fmt_io::format_edge_list(g), "graph"),
        generators::Instance::Formula(f) => (fmt_io::format_nae_formula(f), "nae_formula"),
        generators::Instance::Hypergraph(h) => (fmt_io::format_hypergraph(h), "hypergraph"),
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Precondition(format!("cannot write {}: {e}", path.display())))?;
            let report = json!({
                "command": "gen",
                "kind": kind,
                "seed": seed,
                "path": path,
            });
            emit(&report, &format!("wrote {kind} to {}", path.display()));
        }
        None => {
            // raw instance text on stdout so it pipes into other commands
            print!("{text}");
            eprintln!("generated {kind} (seed {seed})");
        }
    }
    Ok(0)
}

fn run_suite(name: Option<&str>, all: bool, list: bool) -> Result<i32, CliError> {
    use dclaw_core::acceptance;
    if list {
        for n in acceptance::SUITE_NAMES {
            println!("{n}");
        }
        return Ok(0);
    }
    let reports = match name {
        Some(name) if !all => vec![acceptance::run_suite(name).ok_or_else(|| {
            CliError::Precondition(format!(
                "unknown suite {name:?}; available: {}",
                acceptance::SUITE_NAMES.join(", ")
            ))
        })?],
        _ => acceptance::run_all(),
    };
    let mut all_pass = true;
    for report in &reports {
        for item in &report.items {
            let status = if item.pass { "PASS" } else { "FAIL" };
            eprintln!("[{status}] {}::{} — {}", report.suite, item.name, item.detail);
        }
        all_pass &= report.passed();
    }
    let payload: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            json!({
                "suite": r.suite,
                "passed": r.passed(),
                "items": r.items.iter().map(|i| json!({
                    "name": i.name,
                    "pass": i.pass,
                    "detail": i.detail,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({ "command": "suite", "reports": payload }))
            .expect("report serializes")
    );
    Ok(if all_pass { 0 } else { 1 })
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve { input, d, k, algo, branch_cap } => {
            run_solve(&input, d, k, algo, branch_cap)
        }
        Command::Verify { input, set, d } => run_verify(&input, &set, d),
        Command::Recognize { input, class } => run_recognize(&input, &class),
        Command::Reduce { from, source, output_prefix, d, k } => {
            run_reduce(from, &source, &output_prefix, d, k)
        }
        Command::Gen { model, seed, n, m, r, p, d, a, b, out } => {
            run_gen(model, seed, n, m, r, p, d, a, b, out.as_deref())
        }
        Command::Suite { name, all, list } => run_suite(name.as_deref(), all, list),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}
