//! Argument parsing and the eighteen subcommands.

use std::collections::BTreeSet;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde_json::{json, Value};

use cyclepat::extended::{ext_negative_cycle, ext_shortest_walk, oracle_from_weights};
use cyclepat::families::{
    exp_integer_seq, gen_fas1_variant, gen_gi, gen_reduction_arenas, gen_simple_variant,
    reduction_weights,
};
use cyclepat::games::{
    solve_energy, solve_gkk, solve_oracle, solve_pattern_only, star_center, verify_partition,
    Partition,
};
use cyclepat::graph::{
    cycle_space_rank, enumerate_cycles_budgeted, Arena, Cycle, EdgeId, VertexId, WeightFn,
};
use cyclepat::parity::{check_parity_realizable, parity_to_weights, verify_mixed_set, ParityRealizability};
use cyclepat::pattern::{distinguish, zero_weight_cycle, CyclePattern};
use cyclepat::probe::{boundary_probe, replay_partition, traced_solve, TracedSolver};
use cyclepat::realize::{check_realizable, minimal_linf, minimal_witness, verify_witness, Realizability};

use crate::doc::{read_json, GraphDocument, LoadedGraph, PatternDocument};
use crate::exact::{emit_exact, parse_exact};
use crate::report::{
    cycle_json, error_report, ok_report, partition_json, priorities_json, render_table,
    weights_json, witness_json, CmdError,
};
use crate::rng::{random_arena, rng_from_seed};

/// Solver selection for game subcommands.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Debug)]
pub enum AlgoFlag {
    /// Positional-strategy enumeration against best responses.
    Oracle,
    /// Potential reduction (Gurvich–Karzanov–Khachiyan style).
    Gkk,
    /// Energy-game value iteration.
    Energy,
    /// Cycle-sign queries only, no numeric weights.
    PatternOnly,
}

/// Report format.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Debug)]
pub enum OutputFlag {
    /// One pretty-printed JSON object.
    Json,
    /// Indented plain text with aligned row tables.
    Table,
}

/// Built-in instance families.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Debug)]
pub enum FamilyName {
    /// Four-vertex ring with `i` parallel two-edge legs per vertex.
    Gi,
    /// The subdivided variant with feedback arc set number one.
    Fas1,
    /// The simple-graph variant on a `k`-ring with shared splitters.
    Simple,
    /// The `m` mean-payoff arenas driving one weight vector.
    Reduction,
    /// Integer sequences forcing exponential magnitudes.
    Expseq,
}

/// Built-in experiment suites.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Debug)]
pub enum ExperimentName {
    /// Minimal max-norm realizations of the ring family, per `i`.
    Fibonacci,
    /// Cross-solver agreement on random arenas.
    Agreement,
    /// Exhaustive small-weight search against the reduction arenas.
    Reduction,
}

#[derive(Parser, Debug)]
#[command(
    name = "cyclepat",
    version,
    about = "Cycle patterns of directed graphs: realizability, certificates, and games"
)]
struct Cli {
    /// Game-solving algorithm.
    #[arg(long, global = true, value_enum, default_value = "gkk")]
    algo: AlgoFlag,
    /// Cap on enumerated simple cycles.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cycle_budget: usize,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    output: OutputFlag,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Enumerate the simple cycles of a digraph.
    Cycles {
        /// Graph document (JSON).
        #[arg(long)]
        graph: String,
    },
    /// Rank of the cycle space (m − n + 1 when strongly connected).
    Rank {
        /// Graph document (JSON).
        #[arg(long)]
        graph: String,
    },
    /// Find weights inducing a pattern, or fail with a witness.
    Realize {
        /// Graph document (JSON).
        #[arg(long)]
        graph: String,
        /// Explicit pattern document; defaults to the pattern induced by
        /// the graph's weights or priorities.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Find an integral realization of minimal max-norm.
    Minimize {
        /// Graph document (JSON).
        #[arg(long)]
        graph: String,
        /// Explicit pattern document; defaults to the induced pattern.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Produce a non-realizability witness (opposing cycle combination).
    Witness {
        /// Graph document (JSON).
        #[arg(long)]
        graph: String,
        /// Explicit pattern document; defaults to the induced pattern.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Produce a witness of minimal total multiplicity.
    MinWitness {
        /// Graph document (JSON).
        #[arg(long)]
        graph: String,
        /// Explicit pattern document; defaults to the induced pattern.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Find priorities inducing a pattern by parity, or a mixed-set witness.
    Parity {
        /// Graph document (JSON).
        #[arg(long)]
        graph: String,
        /// Explicit pattern document; defaults to the induced pattern.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Convert edge priorities to weights inducing the same pattern.
    ParityToWeights {
        /// Graph document with total priorities (JSON).
        #[arg(long)]
        graph: String,
    },
    /// Solve the zero-mean partition of a weighted arena.
    Solve {
        /// Arena document: owners on vertices, weights on edges (JSON).
        #[arg(long)]
        graph: String,
    },
    /// Solve an arena from an explicit cycle pattern (no weights).
    SolvePattern {
        /// Arena document: owners on vertices (JSON).
        #[arg(long)]
        graph: String,
        /// Explicit pattern document (JSON).
        #[arg(long)]
        pattern: String,
    },
    /// Find a cycle on which two weightings induce different signs.
    Distinguish {
        /// Graph document carrying the first weighting (JSON).
        #[arg(long)]
        graph: String,
        /// Structurally identical graph document with the second weighting.
        #[arg(long)]
        other: String,
    },
    /// Find a cycle of total weight exactly zero.
    ZeroCycle {
        /// Graph document with total weights (JSON).
        #[arg(long)]
        graph: String,
    },
    /// Emit a built-in instance family.
    Family {
        /// Which family.
        #[arg(long, value_enum)]
        name: FamilyName,
        /// Family size parameter (gi, fas1, simple).
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Ring length (simple, divisible by 3) or sequence length (expseq).
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Number of shared edges / arenas (reduction, even, at least 4).
        #[arg(long, default_value_t = 6)]
        m: usize,
    },
    /// The ±1 center of the weight region solving to a fixed partition.
    Center {
        /// Arena document with weights (JSON).
        #[arg(long)]
        graph: String,
    },
    /// Perturb a base weighting across a cycle's hyperplane and solve both sides.
    BoundaryProbe {
        /// Strongly connected arena document (JSON).
        #[arg(long)]
        graph: String,
        /// The cycle, as comma-separated edge ids.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<String>,
        /// Perturbation size, strictly between 0 and 1/2.
        #[arg(long, default_value = "1/4")]
        eps: String,
    },
    /// Solve while recording every sign query as a linear form, then replay.
    Trace {
        /// Strongly connected arena document with weights (JSON).
        #[arg(long)]
        graph: String,
    },
    /// Comparison-only Bellman–Ford: negative cycle, or shortest walk.
    ExtBf {
        /// Graph document with total weights (JSON).
        #[arg(long)]
        graph: String,
        /// Walk start; requires --target.
        #[arg(long)]
        source: Option<String>,
        /// Walk end; requires --source.
        #[arg(long)]
        target: Option<String>,
    },
    /// Run a built-in experiment suite.
    Experiment {
        /// Which suite.
        #[arg(value_enum)]
        name: ExperimentName,
        /// Largest family index (fibonacci).
        #[arg(long, default_value_t = 2)]
        imax: usize,
        /// Number of random instances (agreement).
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Number of shared edges (reduction, even, at least 4).
        #[arg(long, default_value_t = 6)]
        m: usize,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Cycles { .. } => "cycles",
            Cmd::Rank { .. } => "rank",
            Cmd::Realize { .. } => "realize",
            Cmd::Minimize { .. } => "minimize",
            Cmd::Witness { .. } => "witness",
            Cmd::MinWitness { .. } => "min-witness",
            Cmd::Parity { .. } => "parity",
            Cmd::ParityToWeights { .. } => "parity-to-weights",
            Cmd::Solve { .. } => "solve",
            Cmd::SolvePattern { .. } => "solve-pattern",
            Cmd::Distinguish { .. } => "distinguish",
            Cmd::ZeroCycle { .. } => "zero-cycle",
            Cmd::Family { .. } => "family",
            Cmd::Center { .. } => "center",
            Cmd::BoundaryProbe { .. } => "boundary-probe",
            Cmd::Trace { .. } => "trace",
            Cmd::ExtBf { .. } => "ext-bf",
            Cmd::Experiment { .. } => "experiment",
        }
    }
}

/// Parses the process arguments, runs the command, prints one report, and
/// returns the exit code (0 success, 1 usage, 2 domain error).
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let (report, code) = error_report(None, &CmdError::Usage(e.to_string()));
            println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            return code;
        }
    };
    let command = cli.cmd.name();
    let (report, code) = match dispatch(&cli) {
        Ok(payload) => (ok_report(command, payload), 0),
        Err(e) => error_report(Some(command), &e),
    };
    match cli.output {
        OutputFlag::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
        }
        OutputFlag::Table => print!("{}", render_table(&report)),
    }
    code
}

fn load_graph(path: &str) -> Result<LoadedGraph, CmdError> {
    read_json::<GraphDocument>(path)?.into_loaded()
}

/// The pattern a command works on: an explicit document when given,
/// otherwise the pattern induced by the graph's weights or priorities.
fn load_pattern(
    loaded: &LoadedGraph,
    pattern_path: &Option<String>,
    budget: usize,
) -> Result<CyclePattern, CmdError> {
    if let Some(path) = pattern_path {
        return read_json::<PatternDocument>(path)?.into_pattern(&loaded.graph, budget);
    }
    if loaded.require_weights().is_ok() {
        return Ok(CyclePattern::from_weights(
            loaded.graph.clone(),
            loaded.weights.clone(),
        ));
    }
    if loaded.require_priorities().is_ok() {
        return Ok(CyclePattern::from_priorities(
            loaded.graph.clone(),
            loaded.priorities.clone(),
        ));
    }
    Err(CmdError::domain(
        "pattern",
        "no pattern source: give --pattern, or total weights or priorities on the graph",
    ))
}

fn solve_with_algo(
    algo: AlgoFlag,
    arena: &Arena,
    weights: &WeightFn,
    budget: usize,
) -> Result<Partition, CmdError> {
    Ok(match algo {
        AlgoFlag::Gkk => solve_gkk(arena, weights)?,
        AlgoFlag::Energy => solve_energy(arena, weights)?,
        AlgoFlag::Oracle => solve_oracle(arena, weights, budget)?,
        AlgoFlag::PatternOnly => {
            let pattern = CyclePattern::from_weights(arena.graph.clone(), weights.clone());
            solve_pattern_only(arena, &pattern, budget)?
        }
    })
}

fn dispatch(cli: &Cli) -> Result<Value, CmdError> {
    let budget = cli.cycle_budget;
    match &cli.cmd {
        Cmd::Cycles { graph } => {
            let loaded = load_graph(graph)?;
            let cycles = enumerate_cycles_budgeted(&loaded.graph, budget)?;
            Ok(json!({
                "count": cycles.len(),
                "cycles": cycles.iter().map(cycle_json).collect::<Vec<_>>(),
            }))
        }
        Cmd::Rank { graph } => {
            let loaded = load_graph(graph)?;
            let rank = cycle_space_rank(&loaded.graph, budget)?;
            Ok(json!({
                "rank": rank,
                "vertices": loaded.graph.vertex_count(),
                "edges": loaded.graph.edge_count(),
            }))
        }
        Cmd::Realize { graph, pattern } => {
            let loaded = load_graph(graph)?;
            let pat = load_pattern(&loaded, pattern, budget)?;
            match check_realizable(&pat, budget)? {
                Realizability::Realizable { weights } => Ok(json!({"weights": weights_json(&weights)})),
                Realizability::NotRealizable { witness } => Err(CmdError::domain_with(
                    "not-realizable",
                    "pattern is not realizable",
                    vec![("witness", witness_json(&witness))],
                )),
            }
        }
        Cmd::Minimize { graph, pattern } => {
            let loaded = load_graph(graph)?;
            let pat = load_pattern(&loaded, pattern, budget)?;
            let min = minimal_linf(&pat, budget)?;
            Ok(json!({
                "maxAbs": min.max_abs.to_string(),
                "weights": weights_json(&min.weights),
            }))
        }
        Cmd::Witness { graph, pattern } => {
            let loaded = load_graph(graph)?;
            let pat = load_pattern(&loaded, pattern, budget)?;
            match check_realizable(&pat, budget)? {
                Realizability::NotRealizable { witness } => {
                    let verified = verify_witness(&pat, &witness, budget)?;
                    Ok(json!({"witness": witness_json(&witness), "verified": verified}))
                }
                Realizability::Realizable { weights } => Err(CmdError::domain_with(
                    "realizable",
                    "pattern is realizable; no witness exists",
                    vec![("weights", weights_json(&weights))],
                )),
            }
        }
        Cmd::MinWitness { graph, pattern } => {
            let loaded = load_graph(graph)?;
            let pat = load_pattern(&loaded, pattern, budget)?;
            let witness = minimal_witness(&pat, budget)?;
            let verified = verify_witness(&pat, &witness, budget)?;
            Ok(json!({"witness": witness_json(&witness), "verified": verified}))
        }
        Cmd::Parity { graph, pattern } => {
            let loaded = load_graph(graph)?;
            let pat = load_pattern(&loaded, pattern, budget)?;
            match check_parity_realizable(&pat, budget)? {
                ParityRealizability::Realizable { priorities } => {
                    Ok(json!({"priorities": priorities_json(&priorities)}))
                }
                ParityRealizability::NotRealizable { mixed } => {
                    let verified = verify_mixed_set(&pat, &mixed, budget)?;
                    Err(CmdError::domain_with(
                        "not-parity-realizable",
                        "pattern is not parity-realizable",
                        vec![
                            (
                                "mixedSet",
                                json!(mixed.iter().map(|e| e.as_str()).collect::<Vec<_>>()),
                            ),
                            ("verified", json!(verified)),
                        ],
                    ))
                }
            }
        }
        Cmd::ParityToWeights { graph } => {
            let loaded = load_graph(graph)?;
            let priorities = loaded.require_priorities()?;
            let weights = parity_to_weights(&loaded.graph, priorities)?;
            Ok(json!({"weights": weights_json(&weights)}))
        }
        Cmd::Solve { graph } => {
            let loaded = load_graph(graph)?;
            let arena = loaded.require_arena()?;
            let weights = loaded.require_weights()?;
            let part = solve_with_algo(cli.algo, &arena, weights, budget)?;
            Ok(partition_json(&part))
        }
        Cmd::SolvePattern { graph, pattern } => {
            let loaded = load_graph(graph)?;
            let arena = loaded.require_arena()?;
            let pat = read_json::<PatternDocument>(pattern)?.into_pattern(&loaded.graph, budget)?;
            let part = solve_pattern_only(&arena, &pat, budget)?;
            Ok(partition_json(&part))
        }
        Cmd::Distinguish { graph, other } => {
            let a = load_graph(graph)?;
            let b = load_graph(other)?;
            if a.graph.vertices() != b.graph.vertices() || a.graph.edges() != b.graph.edges() {
                return Err(CmdError::domain(
                    "graph",
                    "the two documents must describe the same digraph (ids, sources, targets)",
                ));
            }
            let w1 = a.require_weights()?;
            let w2 = b.require_weights()?;
            match distinguish(&a.graph, w1, w2, budget)? {
                Some(cycle) => {
                    let p1 = CyclePattern::from_weights(a.graph.clone(), w1.clone());
                    let p2 = CyclePattern::from_weights(a.graph.clone(), w2.clone());
                    let s1 = p1.sign_of(&cycle)?;
                    let s2 = p2.sign_of(&cycle)?;
                    Ok(json!({
                        "cycle": cycle_json(&cycle),
                        "signs": [s1.symbol().to_string(), s2.symbol().to_string()],
                    }))
                }
                None => Ok(json!({"cycle": Value::Null})),
            }
        }
        Cmd::ZeroCycle { graph } => {
            let loaded = load_graph(graph)?;
            let weights = loaded.require_weights()?;
            match zero_weight_cycle(&loaded.graph, weights, budget)? {
                Some(cycle) => Ok(json!({"cycle": cycle_json(&cycle)})),
                None => Ok(json!({"cycle": Value::Null})),
            }
        }
        Cmd::Family { name, i, k, m } => family(*name, *i, *k, *m),
        Cmd::Center { graph } => {
            let loaded = load_graph(graph)?;
            let arena = loaded.require_arena()?;
            let weights = loaded.require_weights()?;
            let part = solve_with_algo(cli.algo, &arena, weights, budget)?;
            let center = star_center(&arena, &part.v_plus);
            let center_part = solve_with_algo(cli.algo, &arena, &center, budget)?;
            Ok(json!({
                "vPlus": part.v_plus.iter().map(|v| v.as_str()).collect::<Vec<_>>(),
                "center": weights_json(&center),
                "centerVPlus": center_part.v_plus.iter().map(|v| v.as_str()).collect::<Vec<_>>(),
                "agrees": center_part.v_plus == part.v_plus,
            }))
        }
        Cmd::BoundaryProbe { graph, cycle, eps } => {
            let loaded = load_graph(graph)?;
            let arena = loaded.require_arena()?;
            let ids: Vec<EdgeId> = cycle.iter().map(|s| EdgeId::from(s.as_str())).collect();
            let cyc = Cycle::from_edge_ids(&loaded.graph, &ids)?;
            let eps = parse_exact(eps).map_err(CmdError::Usage)?;
            let half = BigRational::new(BigInt::from(1), BigInt::from(2));
            if eps <= BigRational::zero() || eps >= half {
                return Err(CmdError::Usage(format!(
                    "--eps must lie strictly between 0 and 1/2, got {}",
                    emit_exact(&eps)
                )));
            }
            let (base, plus, minus) = boundary_probe(&arena, &cyc, &eps)?;
            Ok(json!({
                "baseWeights": weights_json(&base),
                "epsilon": emit_exact(&eps),
                "plus": partition_json(&plus),
                "minus": partition_json(&minus),
            }))
        }
        Cmd::Trace { graph } => {
            let loaded = load_graph(graph)?;
            let arena = loaded.require_arena()?;
            let weights = loaded.require_weights()?;
            let solver = match cli.algo {
                AlgoFlag::Gkk => TracedSolver::Gkk,
                AlgoFlag::Energy => TracedSolver::ValueIteration,
                _ => {
                    return Err(CmdError::Usage(String::from(
                        "trace supports --algo gkk or --algo energy",
                    )))
                }
            };
            let (part, trace) = traced_solve(&arena, weights, solver)?;
            let replay = replay_partition(&arena, solver, &trace)?;
            Ok(json!({
                "vPlus": part.v_plus.iter().map(|v| v.as_str()).collect::<Vec<_>>(),
                "queryCount": trace.len(),
                "hyperplaneCount": trace.hyperplanes.len(),
                "queries": trace.queries.iter().map(|q| json!({
                    "vector": q.vector.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "outcome": q.outcome.symbol().to_string(),
                })).collect::<Vec<_>>(),
                "replayMatches": replay == part.v_plus,
            }))
        }
        Cmd::ExtBf {
            graph,
            source,
            target,
        } => {
            let loaded = load_graph(graph)?;
            let weights = loaded.require_weights()?;
            let oracle = oracle_from_weights(loaded.graph.clone(), weights.clone());
            match (source, target) {
                (None, None) => match ext_negative_cycle(&loaded.graph, &oracle)? {
                    Some(cycle) => Ok(json!({"negativeCycle": cycle_json(&cycle)})),
                    None => Ok(json!({"negativeCycle": Value::Null})),
                },
                (Some(s), Some(t)) => {
                    let walk = ext_shortest_walk(
                        &loaded.graph,
                        &oracle,
                        &VertexId::from(s.as_str()),
                        &VertexId::from(t.as_str()),
                    )?;
                    match walk {
                        Some(edges) => {
                            let total: BigRational =
                                edges.iter().map(|e| loaded.weights[e].clone()).sum();
                            Ok(json!({
                                "walk": edges.iter().map(|e| e.as_str()).collect::<Vec<_>>(),
                                "weight": emit_exact(&total),
                            }))
                        }
                        None => Ok(json!({"walk": Value::Null, "weight": Value::Null})),
                    }
                }
                _ => Err(CmdError::Usage(String::from(
                    "--source and --target must be given together",
                ))),
            }
        }
        Cmd::Experiment {
            name,
            imax,
            count,
            m,
        } => experiment(*name, *imax, *count, *m, cli.seed, budget),
    }
}

fn graph_doc_json(doc: &GraphDocument) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn family(name: FamilyName, i: usize, k: usize, m: usize) -> Result<Value, CmdError> {
    match name {
        FamilyName::Gi => {
            if i < 1 {
                return Err(CmdError::Usage(String::from("--i must be at least 1")));
            }
            let (graph, priorities) = gen_gi(i);
            Ok(json!({"graph": graph_doc_json(&GraphDocument::from_parts(
                &graph, None, None, Some(&priorities)
            ))}))
        }
        FamilyName::Fas1 => {
            if i < 1 {
                return Err(CmdError::Usage(String::from("--i must be at least 1")));
            }
            let (graph, priorities) = gen_fas1_variant(i);
            Ok(json!({"graph": graph_doc_json(&GraphDocument::from_parts(
                &graph, None, None, Some(&priorities)
            ))}))
        }
        FamilyName::Simple => {
            if i < 1 || k < 3 || !k.is_multiple_of(3) {
                return Err(CmdError::Usage(String::from(
                    "simple family needs --i >= 1 and --k >= 3 divisible by 3",
                )));
            }
            let (graph, priorities) = gen_simple_variant(k, i);
            Ok(json!({"graph": graph_doc_json(&GraphDocument::from_parts(
                &graph, None, None, Some(&priorities)
            ))}))
        }
        FamilyName::Reduction => {
            if m < 4 || !m.is_multiple_of(2) {
                return Err(CmdError::Usage(String::from(
                    "reduction family needs even --m >= 4",
                )));
            }
            let weights = reduction_weights(m);
            let arenas: Vec<Value> = gen_reduction_arenas(m)
                .iter()
                .map(|a| {
                    let per_arena: WeightFn = a
                        .graph
                        .edges()
                        .iter()
                        .map(|e| (e.id.clone(), weights[&e.id].clone()))
                        .collect();
                    graph_doc_json(&GraphDocument::from_parts(
                        &a.graph,
                        Some(&a.owner),
                        Some(&per_arena),
                        None,
                    ))
                })
                .collect();
            Ok(json!({"weights": weights_json(&weights), "arenas": arenas}))
        }
        FamilyName::Expseq => {
            if k < 1 {
                return Err(CmdError::Usage(String::from("--k must be at least 1")));
            }
            let (a, b, c) = exp_integer_seq(k);
            let strs = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>();
            Ok(json!({"a": strs(&a), "b": strs(&b), "c": strs(&c)}))
        }
    }
}

fn experiment(
    name: ExperimentName,
    imax: usize,
    count: usize,
    m: usize,
    seed: u64,
    budget: usize,
) -> Result<Value, CmdError> {
    match name {
        ExperimentName::Fibonacci => {
            if imax < 1 {
                return Err(CmdError::Usage(String::from("--imax must be at least 1")));
            }
            let mut rows = Vec::new();
            let mut prev: Option<BigInt> = None;
            let mut increasing = true;
            for i in 1..=imax {
                let (graph, priorities) = gen_gi(i);
                let pattern = CyclePattern::from_priorities(graph, priorities);
                let min = minimal_linf(&pattern, budget)?;
                if let Some(p) = &prev {
                    increasing &= min.max_abs > *p;
                }
                prev = Some(min.max_abs.clone());
                rows.push(json!({
                    "i": i,
                    "m": 8 * i,
                    "kStar": min.max_abs.to_string(),
                }));
            }
            Ok(json!({"rows": rows, "kStarStrictlyIncreasing": increasing}))
        }
        ExperimentName::Agreement => {
            if count < 1 {
                return Err(CmdError::Usage(String::from("--count must be at least 1")));
            }
            let mut rng = rng_from_seed(seed);
            let mut disagreements = 0usize;
            for _ in 0..count {
                let n = rng.gen_range(1..=5);
                let extra = rng.gen_range(0..=4);
                let (arena, weights) = random_arena(&mut rng, n, extra, 4);
                let oracle = solve_oracle(&arena, &weights, budget)?;
                let gkk = solve_gkk(&arena, &weights)?;
                let energy = solve_energy(&arena, &weights)?;
                let pattern = CyclePattern::from_weights(arena.graph.clone(), weights.clone());
                let pattern_only = solve_pattern_only(&arena, &pattern, budget)?;
                let agree = oracle.v_plus == gkk.v_plus
                    && energy.v_plus == gkk.v_plus
                    && pattern_only.v_plus == gkk.v_plus
                    && verify_partition(&arena, &weights, &gkk, budget)?;
                if !agree {
                    disagreements += 1;
                }
            }
            Ok(json!({
                "count": count,
                "disagreements": disagreements,
                "allAgree": disagreements == 0,
            }))
        }
        ExperimentName::Reduction => {
            if m < 4 || !m.is_multiple_of(2) {
                return Err(CmdError::Usage(String::from(
                    "reduction experiment needs even --m >= 4",
                )));
            }
            let arenas = gen_reduction_arenas(m);
            let weights = reduction_weights(m);
            let mut base: Vec<BTreeSet<VertexId>> = Vec::new();
            for arena in &arenas {
                base.push(solve_gkk(arena, &weights)?.v_plus);
            }
            let ids: Vec<EdgeId> = (1..=m).map(|j| EdgeId::from(format!("e{j}").as_str())).collect();
            let total: u64 = 3u64.pow(m as u32);
            let mut preserving = 0u64;
            let mut digits = vec![0u8; m];
            loop {
                let candidate: WeightFn = ids
                    .iter()
                    .zip(digits.iter())
                    .map(|(id, d)| {
                        (
                            id.clone(),
                            BigRational::from_integer(BigInt::from(*d as i64 - 1)),
                        )
                    })
                    .collect();
                let mut all = true;
                for (arena, expected) in arenas.iter().zip(base.iter()) {
                    if &solve_gkk(arena, &candidate)?.v_plus != expected {
                        all = false;
                        break;
                    }
                }
                if all {
                    preserving += 1;
                }
                // odometer over {0,1,2}^m
                let mut pos = 0;
                loop {
                    if pos == m {
                        break;
                    }
                    digits[pos] += 1;
                    if digits[pos] < 3 {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == m {
                    break;
                }
            }
            Ok(json!({
                "m": m,
                "vectors": total,
                "preservingAll": preserving,
                "nonePreserves": preserving == 0,
            }))
        }
    }
}
