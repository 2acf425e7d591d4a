//! Command-line front end: every engine of the library behind one binary.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use coxeter_cosets::dot::{model_to_dot, ocean_to_dot};
use coxeter_cosets::doubled::{avoiding_identity_count, doubled_graph};
use coxeter_cosets::enumerate::{
    branch, c_w_general, c_w_symmetric_detailed, circular, contingency, expected_tethers,
    expected_tethers_empirical, p_n_with_workers,
};
use coxeter_cosets::graph::{named_graph, CoxeterGraph, Family};
use coxeter_cosets::ocean::{
    classify, is_lexmin, reduce_to_lexmin, Filling, Ocean, OceanVertex, Row,
};
use coxeter_cosets::oracle;
use coxeter_cosets::perm::Permutation;
use coxeter_cosets::profile::AscentProfile;
use coxeter_cosets::seq::{
    a_k, a_pair, b_tuple, walk_count, HalfEdgeLabel, IndicatorSet, KClass, KIndicator,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Parser)]
#[command(
    name = "coxeter-cosets",
    version,
    about = "Count and canonicalize parabolic double cosets"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5EED)]
    seed: u64,
    /// Worker threads (0 = all available).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Override the exhaustive-oracle bound (env: COXETER_COSETS_MAX_N).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphSource {
    /// Treat the input as the identity element of the graph's group.
    #[arg(long)]
    identity: bool,
    /// Graph file in the line format (v/e declarations).
    #[arg(long)]
    graph: Option<String>,
    /// Named family, e.g. A, D, E7, I2(7), affineD, star, cycle.
    #[arg(long)]
    family: Option<String>,
    /// Rank for --family.
    #[arg(long)]
    rank: Option<usize>,
    /// Ascent-profile JSON file (graph, leftAscents, rightAscents, smallMap).
    #[arg(long)]
    profile: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of parabolic double cosets with the given minimal element.
    Cw {
        /// Permutation in one-line notation (omit when using --identity).
        perm: Vec<String>,
        #[command(flatten)]
        source: GraphSource,
        /// Include the per-tether-subset breakdown.
        #[arg(long)]
        breakdown: bool,
    },
    /// Total number of parabolic double cosets of S_n.
    Pn {
        n: usize,
        /// Also run the exhaustive oracle and compare.
        #[arg(long)]
        oracle: bool,
        /// Print the diagnostic growth ratio p_n * ln(2)^(2n) / n!.
        #[arg(long)]
        ratio: bool,
    },
    /// Print the w-ocean (use --dot or --format dot for Graphviz output).
    Ocean {
        perm: Vec<String>,
        /// Include the marine-model decorations.
        #[arg(long)]
        model: bool,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// Check lex-minimality of a presentation and print its reduction.
    Lexmin {
        perm: Vec<String>,
        /// Left set I, comma-separated generator indices (1-based).
        #[arg(long = "I", value_delimiter = ',', num_args = 0.., default_value = "")]
        left: Vec<String>,
        /// Right set J.
        #[arg(long = "J", value_delimiter = ',', num_args = 0.., default_value = "")]
        right: Vec<String>,
    },
    /// Emit a sequence family over a range of m, e.g. `seq a2p 0..10`.
    Seq { family: String, range: String },
    /// Closed form for a wharf with three branches.
    Branch { i: usize, j: usize, k: usize },
    /// Closed form for a circular raft of size n.
    Circular { n: usize },
    /// Two-way contingency table count for S_n.
    Contingency { n: usize },
    /// Expected number of tethers of a uniform element of S_n.
    ExpectedTethers { n: usize },
    /// Run the full oracle cross-validation suite.
    Verify {
        /// Exhaustive bound (default 5).
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Print the doubled graph and avoid-sets of a permutation.
    Doubled { perm: Vec<String> },
}

#[derive(Debug)]
enum CliError {
    BadInput(String),
    BoundExceeded(String),
    VerifyFailed,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::BadInput(m) => write!(f, "{m}"),
            CliError::BoundExceeded(m) => write!(f, "{m}"),
            CliError::VerifyFailed => write!(f, "verification failed"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::VerifyFailed => ExitCode::from(1),
                CliError::BadInput(_) => ExitCode::from(3),
                CliError::BoundExceeded(_) => ExitCode::from(4),
            }
        }
    }
}

fn parse_perm(words: &[String]) -> Result<Permutation, CliError> {
    let joined = words.join(" ");
    Permutation::parse(&joined).map_err(|e| CliError::BadInput(e.to_string()))
}

fn load_graph(source: &GraphSource) -> Result<CoxeterGraph, CliError> {
    if let Some(path) = &source.graph {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::BadInput(format!("cannot read {path}: {e}")))?;
        return CoxeterGraph::parse(&text).map_err(|e| CliError::BadInput(e.to_string()));
    }
    let name = source
        .family
        .as_deref()
        .ok_or_else(|| CliError::BadInput("--identity needs --graph or --family".into()))?;
    let family = Family::parse(name)
        .ok_or_else(|| CliError::BadInput(format!("unknown family {name:?}")))?;
    let rank = source
        .rank
        .ok_or_else(|| CliError::BadInput("--family needs --rank".into()))?;
    named_graph(family, rank).map_err(|e| CliError::BadInput(e.to_string()))
}

fn effective_max_n(cli_value: Option<usize>, default: usize) -> usize {
    cli_value
        .or_else(|| {
            std::env::var("COXETER_COSETS_MAX_N")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(default)
}

fn vertex_names(graph: &CoxeterGraph, items: &[OceanVertex]) -> Vec<String> {
    items
        .iter()
        .map(|v| {
            let name = graph.vertex_name(v.gen);
            match v.row {
                Row::Bottom => format!("{name}'"),
                Row::Top => name.to_string(),
            }
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Cw {
            perm,
            source,
            breakdown,
        } => {
            if let Some(path) = &source.profile {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::BadInput(format!("cannot read {path}: {e}")))?;
                let profile: AscentProfile = serde_json::from_str(&text)
                    .map_err(|e| CliError::BadInput(format!("bad profile: {e}")))?;
                let value = c_w_general(&profile);
                match cli.format {
                    Format::Json => {
                        println!("{}", json!({"input": path, "c_w": value.to_string()}))
                    }
                    _ => println!("{value}"),
                }
            } else if source.identity {
                let graph = Arc::new(load_graph(&source)?);
                let profile = AscentProfile::identity(graph.clone());
                let model = classify(&Ocean::build(profile.clone()));
                let value = c_w_general(&profile);
                match cli.format {
                    Format::Json => println!(
                        "{}",
                        json!({
                            "input": "identity",
                            "graph": graph.to_text(),
                            "floats": vertex_names(&graph, &model.floats),
                            "ropes": vertex_names(&graph, &model.ropes),
                            "tethers": vertex_names(&graph, &model.tethers),
                            "wharfs": model.wharfs.len(),
                            "rafts": model.raft_sizes(),
                            "c_w": value.to_string(),
                        })
                    ),
                    _ => println!("{value}"),
                }
            } else {
                let w = parse_perm(&perm)?;
                let preview = classify(&Ocean::build(AscentProfile::from_permutation(&w)));
                if preview.tethers.len() > 24 {
                    eprintln!(
                        "warning: {} tethers; the sum has 2^{} terms",
                        preview.tethers.len(),
                        preview.tethers.len()
                    );
                }
                let (model, products, value) = if breakdown {
                    c_w_symmetric_detailed(&w)
                } else {
                    let value = coxeter_cosets::enumerate::c_w_symmetric(&w);
                    (preview, Vec::new(), value)
                };
                let graph = &model.ocean.profile.graph;
                match cli.format {
                    Format::Json => {
                        let mut obj = json!({
                            "input": w.to_string(),
                            "floats": vertex_names(graph, &model.floats),
                            "ropes": vertex_names(graph, &model.ropes),
                            "tethers": vertex_names(graph, &model.tethers),
                            "wharfs": model.wharfs.len(),
                            "rafts": model.raft_sizes(),
                            "c_w": value.to_string(),
                        });
                        if breakdown {
                            obj["breakdown"] = products
                                .iter()
                                .map(|(t, p)| {
                                    json!({
                                        "tethers": vertex_names(graph, &t.iter().copied().collect::<Vec<_>>()),
                                        "product": p.to_string(),
                                    })
                                })
                                .collect();
                        }
                        println!("{obj}");
                    }
                    _ => {
                        if breakdown {
                            for (t, p) in &products {
                                let names =
                                    vertex_names(graph, &t.iter().copied().collect::<Vec<_>>());
                                println!("T = {{{}}}: {p}", names.join(", "));
                            }
                        }
                        println!("{value}");
                    }
                }
            }
        }
        Command::Pn {
            n,
            oracle: with_oracle,
            ratio,
        } => {
            if n == 0 {
                return Err(CliError::BadInput("pn needs n >= 1".into()));
            }
            let value = p_n_with_workers(n, cli.workers);
            if with_oracle {
                let bound = effective_max_n(cli.max_n, oracle::DEFAULT_MAX_N_ALL);
                let total: usize = Permutation::all(n)
                    .map(|w| {
                        oracle::oracle_c_w(&w, bound)
                            .map_err(|e| CliError::BoundExceeded(e.to_string()))
                    })
                    .sum::<Result<usize, _>>()?;
                if BigUint::from(total) != value {
                    eprintln!("oracle disagrees: formula {value}, oracle {total}");
                    return Err(CliError::VerifyFailed);
                }
            }
            let diagnostic = ratio.then(|| {
                let log_p: f64 = value.to_string().parse::<f64>().map(f64::ln).unwrap_or(0.0);
                let log_fact: f64 = (2..=n).map(|k| (k as f64).ln()).sum();
                (log_p + 2.0 * n as f64 * std::f64::consts::LN_2.ln() - log_fact).exp()
            });
            match cli.format {
                Format::Json => {
                    println!("{}", json!({"n": n, "p_n": value.to_string(), "ratio": diagnostic}))
                }
                _ => {
                    println!("{value}");
                    if let Some(r) = diagnostic {
                        println!("diagnostic ratio p_n * ln(2)^(2n) / n! = {r:.6} (growth heuristic only)");
                    }
                }
            }
        }
        Command::Ocean { perm, model, dot } => {
            let w = parse_perm(&perm)?;
            let ocean = Ocean::build(AscentProfile::from_permutation(&w));
            let format = if dot { Format::Dot } else { cli.format };
            match format {
                Format::Dot => {
                    if model {
                        print!("{}", model_to_dot(&classify(&ocean)));
                    } else {
                        print!("{}", ocean_to_dot(&ocean));
                    }
                }
                Format::Json => {
                    let m = classify(&ocean);
                    let graph = &ocean.profile.graph;
                    println!(
                        "{}",
                        json!({
                            "input": w.to_string(),
                            "floats": vertex_names(graph, &m.floats),
                            "ropes": vertex_names(graph, &m.ropes),
                            "tethers": vertex_names(graph, &m.tethers),
                            "wharfs": m.wharfs.len(),
                            "rafts": m.raft_sizes(),
                        })
                    );
                }
                _ => {
                    let m = classify(&ocean);
                    let graph = &ocean.profile.graph;
                    println!("floats:  {}", vertex_names(graph, &m.floats).join(" "));
                    println!("ropes:   {}", vertex_names(graph, &m.ropes).join(" "));
                    println!("tethers: {}", vertex_names(graph, &m.tethers).join(" "));
                    println!("rafts:   {:?}", m.raft_sizes());
                    println!("wharfs:  {}", m.wharfs.len());
                }
            }
        }
        Command::Lexmin { perm, left, right } => {
            let w = parse_perm(&perm)?;
            let parse_set = |items: &[String]| -> Result<BTreeSet<usize>, CliError> {
                items
                    .iter()
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<usize>()
                            .ok()
                            .filter(|&v| v >= 1 && v < w.n())
                            .map(|v| v - 1)
                            .ok_or_else(|| CliError::BadInput(format!("bad generator index {s:?}")))
                    })
                    .collect()
            };
            let filling = Filling::new(parse_set(&left)?, parse_set(&right)?);
            let ocean = Ocean::build(AscentProfile::from_permutation(&w));
            if !filling.validate(&ocean) {
                return Err(CliError::BadInput(
                    "I must consist of left ascents and J of right ascents".into(),
                ));
            }
            let reduced = reduce_to_lexmin(&ocean, &filling);
            let to_names = |set: &BTreeSet<usize>| -> Vec<String> {
                set.iter().map(|&v| (v + 1).to_string()).collect()
            };
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "input": w.to_string(),
                        "lexmin": is_lexmin(&ocean, &filling),
                        "reduced_I": to_names(&reduced.left),
                        "reduced_J": to_names(&reduced.right),
                    })
                ),
                _ => {
                    println!("lex-minimal: {}", is_lexmin(&ocean, &filling));
                    println!(
                        "reduction: I = {{{}}}, J = {{{}}}",
                        to_names(&reduced.left).join(","),
                        to_names(&reduced.right).join(",")
                    );
                }
            }
        }
        Command::Seq { family, range } => {
            let (lo, hi) = parse_range(&range)?;
            let eval = sequence_evaluator(&family)?;
            let rows: Vec<(usize, BigUint)> = (lo..=hi).map(|m| (m, eval(m))).collect();
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "family": family,
                        "m": rows.iter().map(|(m, _)| *m).collect::<Vec<_>>(),
                        "values": rows.iter().map(|(_, v)| v.to_string()).collect::<Vec<_>>(),
                    })
                ),
                Format::Csv => {
                    println!("family,m,value");
                    for (m, v) in rows {
                        println!("{family},{m},{v}");
                    }
                }
                _ => {
                    for (m, v) in rows {
                        println!("{m}\t{v}");
                    }
                }
            }
        }
        Command::Branch { i, j, k } => emit_count(cli.format, "branch", branch(i, j, k))?,
        Command::Circular { n } => emit_count(cli.format, "circular", circular(n))?,
        Command::Contingency { n } => {
            if n == 0 {
                return Err(CliError::BadInput("contingency needs n >= 1".into()));
            }
            emit_count(cli.format, "contingency", contingency(n))?
        }
        Command::ExpectedTethers { n } => {
            if n == 0 {
                return Err(CliError::BadInput("expected-tethers needs n >= 1".into()));
            }
            let exact = expected_tethers(n);
            match cli.format {
                Format::Json => {
                    let empirical = (n <= 8).then(|| expected_tethers_empirical(n).to_string());
                    println!(
                        "{}",
                        json!({"n": n, "expected": exact.to_string(), "empirical": empirical})
                    );
                }
                _ => println!("{exact}"),
            }
        }
        Command::Verify { n } => {
            let bound = effective_max_n(cli.max_n, n);
            let run = || {
                let mut reports = oracle::verify_suite(bound);
                reports.push(oracle::check_greedy_order_independence(
                    bound.min(5),
                    cli.seed,
                ));
                reports
            };
            let reports = if cli.workers == 0 {
                run()
            } else {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(cli.workers)
                    .build()
                    .expect("worker pool")
                    .install(run)
            };
            let mut failed = false;
            for report in &reports {
                let status = if report.passed { "pass" } else { "FAIL" };
                println!("[{status}] {:<24} {}", report.name, report.detail);
                failed |= !report.passed;
            }
            if failed {
                return Err(CliError::VerifyFailed);
            }
        }
        Command::Doubled { perm } => {
            let w = parse_perm(&perm)?;
            let profile = AscentProfile::from_permutation(&w);
            let d = doubled_graph(&profile, &BTreeSet::new(), &BTreeSet::new());
            let name_set = |set: &BTreeSet<usize>| -> Vec<String> {
                set.iter()
                    .map(|&v| d.graph.vertex_name(v).to_string())
                    .collect()
            };
            let count = avoiding_identity_count(d.graph.clone(), &d.x_left, &d.x_right);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "input": w.to_string(),
                        "graph": d.graph.to_text(),
                        "avoid_left": name_set(&d.x_left),
                        "avoid_right": name_set(&d.x_right),
                        "avoiding_identity_cosets": count.to_string(),
                    })
                ),
                _ => {
                    print!("{}", d.graph.to_text());
                    println!("avoid left:  {}", name_set(&d.x_left).join(" "));
                    println!("avoid right: {}", name_set(&d.x_right).join(" "));
                    println!("avoiding identity cosets: {count}");
                }
            }
        }
    }
    Ok(())
}

fn emit_count(format: Format, name: &str, value: BigUint) -> Result<(), CliError> {
    match format {
        Format::Json => println!("{}", json!({name: value.to_string()})),
        _ => println!("{value}"),
    }
    Ok(())
}

fn parse_range(range: &str) -> Result<(usize, usize), CliError> {
    let bad = || {
        CliError::BadInput(format!(
            "cannot parse range {range:?} (use `lo..hi` or `m`)"
        ))
    };
    if let Some((lo, hi)) = range.split_once("..") {
        let lo = lo.parse().map_err(|_| bad())?;
        let hi = hi.parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let m = range.parse().map_err(|_| bad())?;
        Ok((m, m))
    }
}

fn parse_label(token: &str) -> Result<HalfEdgeLabel, CliError> {
    use HalfEdgeLabel as L;
    Ok(match token {
        "open" => L::Open,
        "top" => L::Top,
        "bot" => L::Bot,
        "both" => L::Both,
        "bot-run-open" => L::BotRunThenOpen,
        "bot-run-top" => L::BotRunThenTop,
        "both-run-top" => L::BothRunThenTop,
        "both-run-bot" => L::BothRunThenBot,
        "both-run-open" => L::BothRunThenOpen,
        "all-bot" => L::AllBot,
        "all-both" => L::AllBoth,
        _ => {
            return Err(CliError::BadInput(format!(
                "unknown half-edge label {token:?}"
            )))
        }
    })
}

fn sequence_evaluator(family: &str) -> Result<Box<dyn Fn(usize) -> BigUint>, CliError> {
    if let Some(k) = family.strip_prefix('a') {
        let class = match k {
            "0" => Some(KClass::K0),
            "1" => Some(KClass::K1),
            "2" => Some(KClass::K2),
            "2p" => Some(KClass::K2Prime),
            "2pp" => Some(KClass::K2DoublePrime),
            "3" => Some(KClass::K3),
            "4" => Some(KClass::K4),
            _ => None,
        };
        if let Some(class) = class {
            return Ok(Box::new(move |m| a_k(class, m)));
        }
    }
    if let Some(spec) = family.strip_prefix("b:") {
        let parts: Vec<&str> = spec.split(',').collect();
        if parts.len() != 4 {
            return Err(CliError::BadInput(
                "b-sequences take four indicator sets".into(),
            ));
        }
        let mut sets = [IndicatorSet::Z; 4];
        for (slot, token) in sets.iter_mut().zip(&parts) {
            *slot = match *token {
                "0" => IndicatorSet::Z,
                "1" => IndicatorSet::O,
                "01" => IndicatorSet::ZO,
                other => return Err(CliError::BadInput(format!("bad indicator {other:?}"))),
            };
        }
        let k = KIndicator(sets[0], sets[1], sets[2], sets[3]);
        return Ok(Box::new(move |m| b_tuple(k, m)));
    }
    if let Some(spec) = family.strip_prefix("pair:") {
        let (u, v) = spec
            .split_once(':')
            .ok_or_else(|| CliError::BadInput("pair takes two labels, `pair:u:v`".into()))?;
        let (u, v) = (parse_label(u)?, parse_label(v)?);
        a_pair(u, v, 0).map_err(|e| CliError::BadInput(e.to_string()))?;
        return Ok(Box::new(move |m| a_pair(u, v, m).unwrap()));
    }
    if let Some(spec) = family.strip_prefix("walk:") {
        let (i, j) = spec
            .split_once(':')
            .ok_or_else(|| CliError::BadInput("walk takes two states, `walk:i:j`".into()))?;
        let i: usize = i
            .parse()
            .map_err(|_| CliError::BadInput("bad state".into()))?;
        let j: usize = j
            .parse()
            .map_err(|_| CliError::BadInput("bad state".into()))?;
        if !(1..=8).contains(&i) || !(1..=8).contains(&j) {
            return Err(CliError::BadInput("states range over 1..=8".into()));
        }
        return Ok(Box::new(move |m| walk_count(i, j, m)));
    }
    Err(CliError::BadInput(format!(
        "unknown family {family:?} (try a0..a4, a2p, a2pp, b:I1,I2,I3,I4, pair:u:v, walk:i:j)"
    )))
}
