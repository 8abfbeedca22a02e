//! The `spgraph` command line.
//!
//! Exit status: 0 on success or when every check passes, 1 when a check
//! fails (the witness is printed), 2 on usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{self, ConstructionResult};
use crate::error::{Error, Result};
use crate::geodesics::{reduce, DEFAULT_GEODESIC_LIMIT};
use crate::graph::{BaseInstance, Graph};
use crate::grid::{self, GridSpec, LatticePoint, MoveSequence};
use crate::induced::DEFAULT_WORK_LIMIT;
use crate::spg::{build_spg, SpGraph};
use crate::verify::{self, CheckKind, CheckReport, CorpusSpec, Limits, SumGenerator, SumInput, DEFAULT_ODD_CYCLE_CAP};

#[derive(Parser, Debug)]
#[command(name = "spgraph", version, about = "Shortest path graphs: compute, construct, verify, export")]
pub struct Cli {
    /// Maximum number of geodesics (or words, permutations) to materialize.
    #[arg(long, global = true, env = "SPG_LIMIT", default_value_t = DEFAULT_GEODESIC_LIMIT)]
    limit: u64,
    /// Work budget for induced-subgraph searches.
    #[arg(long, global = true, default_value_t = DEFAULT_WORK_LIMIT)]
    work_limit: u64,
    /// Seed for generated corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Graph file: JSON or edge list.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build S(G, a, b).
    Compute {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Write the SpGraph as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the SpGraph as DOT, edges colored by difference index.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Delete elements on no geodesic and contract edges on every geodesic.
    Reduce {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a base graph with a known shortest path graph.
    Construct {
        #[command(subcommand)]
        family: Family,
        /// Compare S of the result with the prediction.
        #[arg(long, global = true)]
        check: bool,
        /// Write the base graph as JSON instead of printing it.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Grid geodesics as words and their lattice embedding.
    Grid {
        #[command(subcommand)]
        command: GridCommand,
    },
    /// The adjacent-transposition Cayley graph of S_m.
    Cayley {
        m: usize,
        /// Check S(Q_m) against it and the tournament bijection.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run theorem checkers over a corpus.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// exhaustive:n, random:count:n:seed, file:path or constructions.
        #[arg(long, default_values_t = ["exhaustive:6".to_owned(), "constructions".to_owned()])]
        corpus: Vec<String>,
        /// Check one SpGraph JSON file (possibly hand-built) instead of a
        /// corpus; applies to the graph-level checks.
        #[arg(long, conflicts_with = "corpus")]
        spg: Option<PathBuf>,
        /// Only this difference index (decomp).
        #[arg(long)]
        index: Option<usize>,
        /// Longest odd cycle searched for (oddcycle).
        #[arg(long, default_value_t = DEFAULT_ODD_CYCLE_CAP)]
        odd_cycle_cap: usize,
        #[arg(long, default_value_t = 50)]
        one_sums: usize,
        /// Split evenly across the four cases.
        #[arg(long, default_value_t = 50)]
        two_sums: usize,
        #[arg(long, default_value_t = 25)]
        unions: usize,
    },
    /// Convert a base graph, or its SpGraph when --a and --b are given.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// G_k with S = P_k.
    Path { k: usize },
    /// K_{2,n} with S = K_n.
    Complete { n: usize },
    /// Base graph with S = C_length (length even, at least 4).
    Cycle { length: usize },
    /// G_{2p+1}, whose S contains an induced C_{2p+1}.
    Oddhost { p: usize },
    /// J_k with S = Q_k.
    Hypercube { k: usize },
    /// t internally disjoint paths of len edges; S is edgeless.
    Parallel { t: usize, len: usize },
}

#[derive(Subcommand, Debug)]
enum GridCommand {
    /// Lattice point of a word.
    Phi {
        #[arg(long)]
        dims: String,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        json: bool,
    },
    /// Word of a lattice point.
    Inverse {
        #[arg(long)]
        dims: String,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// All words, lexicographically.
    Enumerate {
        #[arg(long)]
        dims: String,
    },
    /// Check injectivity, adjacency and S(grid) against the lattice image.
    Check {
        #[arg(long)]
        dims: String,
    },
    /// The staircase graph S_{n1,n2}.
    Staircase {
        n1: usize,
        n2: usize,
        /// Check S(P_n1 x P_n2) against it.
        #[arg(long)]
        check: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum VerifyTarget {
    All,
    P3c4,
    Noc5,
    Claw,
    Oddcycle,
    Girth5,
    Decomp,
    Complete,
    Sums,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    EdgeList,
    Dot,
}

enum Outcome {
    Pass,
    Fail,
}

/// Reads a graph (JSON if it starts with `{`, edge list otherwise) and
/// validates the endpoints.
pub fn load_instance(path: &Path, a: &str, b: &str) -> Result<BaseInstance> {
    BaseInstance::new(load_graph(path)?, a, b)
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        Graph::from_json(&text)
    } else {
        Graph::from_edge_list(&text)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let _ = writeln!(err, "seed={} limit={} work-limit={}", cli.seed, cli.limit, cli.work_limit);
    match execute(&cli, out) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("output: {e}"))
}

fn verdict(out: &mut dyn Write, report: &CheckReport) -> Result<Outcome> {
    if report.passed {
        writeln!(out, "{}: pass", report.name).map_err(io)?;
        Ok(Outcome::Pass)
    } else {
        writeln!(out, "{}: FAIL {}", report.name, report.to_json()).map_err(io)?;
        Ok(Outcome::Fail)
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let limits = Limits { geodesics: cli.limit, work: cli.work_limit, ..Limits::default() };
    match &cli.command {
        Command::Compute { instance, out: json, dot } => {
            let inst = load_instance(&instance.input, &instance.a, &instance.b)?;
            let h = build_spg(&inst, cli.limit)?;
            let d = h.distance().map_or("none".to_owned(), |d| d.to_string());
            writeln!(out, "distance {d}\ngeodesics {}\nedges {}", h.vertex_count(), h.edge_count()).map_err(io)?;
            if let Some(path) = json {
                write_file(path, &h.to_json())?;
            }
            if let Some(path) = dot {
                write_file(path, &h.to_dot())?;
            }
            Ok(Outcome::Pass)
        }
        Command::Reduce { instance, out: json } => {
            let inst = load_instance(&instance.input, &instance.a, &instance.b)?;
            let r = reduce(&inst)?;
            writeln!(
                out,
                "source {}\ntarget {}\ncollapsed {}\nvertices {}\nedges {}",
                r.graph.name(r.source),
                r.graph.name(r.target),
                r.collapsed,
                r.graph.vertex_count(),
                r.graph.edge_count()
            )
            .map_err(io)?;
            for (from, to) in &r.vertex_map {
                writeln!(out, "{from} -> {}", to.as_deref().unwrap_or("deleted")).map_err(io)?;
            }
            match json {
                Some(path) => write_file(path, &r.graph.to_json())?,
                None => writeln!(out, "{}", r.graph.to_json()).map_err(io)?,
            }
            Ok(Outcome::Pass)
        }
        Command::Construct { family, check, out: json } => {
            let c = construct(family)?;
            let inst = &c.instance;
            match json {
                Some(path) => write_file(path, &inst.graph().to_json())?,
                None => writeln!(out, "{}", inst.graph().to_json()).map_err(io)?,
            }
            writeln!(out, "a {}\nb {}", inst.source_name(), inst.target_name()).map_err(io)?;
            if *check {
                return verdict(out, &verify::check_prediction(&c, &limits)?);
            }
            Ok(Outcome::Pass)
        }
        Command::Grid { command } => grid_command(command, &limits, out),
        Command::Cayley { m, check, dot } => {
            let g = grid::cayley_adjacent_transpositions(*m, cli.limit)?;
            writeln!(out, "vertices {}\nedges {}", g.vertex_count(), g.edge_count()).map_err(io)?;
            if let Some(path) = dot {
                write_file(path, &g.to_dot("cayley"))?;
            }
            if *check {
                return verdict(out, &verify::check_cayley(*m, &limits)?);
            }
            Ok(Outcome::Pass)
        }
        Command::Verify { target, corpus, spg, index, odd_cycle_cap, one_sums, two_sums, unions } => {
            let limits = Limits { odd_cycle_cap: *odd_cycle_cap, ..limits };
            if *target == VerifyTarget::Sums {
                return verify_sums(cli.seed, [*one_sums, *two_sums, *unions], &limits, out);
            }
            let checks: Vec<CheckKind> = match target {
                VerifyTarget::All if spg.is_some() => {
                    CheckKind::ALL.into_iter().filter(|&c| c != CheckKind::Decomposition).collect()
                }
                VerifyTarget::All => CheckKind::ALL.to_vec(),
                VerifyTarget::P3c4 => vec![CheckKind::P3C4],
                VerifyTarget::Noc5 => vec![CheckKind::NoC5],
                VerifyTarget::Claw => vec![CheckKind::Claw],
                VerifyTarget::Oddcycle => vec![CheckKind::OddCycle],
                VerifyTarget::Girth5 => vec![CheckKind::Girth5],
                VerifyTarget::Decomp => vec![CheckKind::Decomposition],
                VerifyTarget::Complete => vec![CheckKind::CompleteIffSameIndex],
                VerifyTarget::Sums => unreachable!(),
            };
            if let Some(path) = spg {
                return verify_spg_file(path, &checks, &limits, out);
            }
            let mut instances = Vec::new();
            for spec in corpus {
                instances.extend(CorpusSpec::parse(spec)?.build()?);
            }
            if let (Some(i), VerifyTarget::Decomp) = (index, target) {
                return verify_decomposition_at(&instances, *i, &limits, out);
            }
            let summary = verify::run_corpus(&instances, &checks, &limits)?;
            write!(out, "{}", summary.table()).map_err(io)?;
            for row in &summary.rows {
                if let Some((label, report)) = &row.first_failure {
                    writeln!(out, "witness {} [{label}] {}", row.check, report.to_json()).map_err(io)?;
                }
            }
            writeln!(out, "instances {} failures {}", summary.instances, summary.failures()).map_err(io)?;
            Ok(if summary.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Export { input, a, b, format, out: path } => {
            let g = load_graph(input)?;
            let text = match (a, b) {
                (Some(a), Some(b)) => {
                    let h = build_spg(&BaseInstance::new(g, a, b)?, cli.limit)?;
                    match format {
                        Format::Json => h.to_json(),
                        Format::EdgeList => h.graph().to_edge_list(),
                        Format::Dot => h.to_dot(),
                    }
                }
                (None, None) => match format {
                    Format::Json => g.to_json(),
                    Format::EdgeList => g.to_edge_list(),
                    Format::Dot => g.to_dot("G"),
                },
                _ => return Err(Error::InvalidArgument("give both --a and --b, or neither".into())),
            };
            match path {
                Some(p) => write_file(p, &text)?,
                None => writeln!(out, "{}", text.trim_end()).map_err(io)?,
            }
            Ok(Outcome::Pass)
        }
    }
}

fn construct(family: &Family) -> Result<ConstructionResult> {
    match *family {
        Family::Path { k } => constructions::path_base(k),
        Family::Complete { n } => constructions::complete_base(n),
        Family::Cycle { length } => {
            if length % 2 == 1 || length < 4 {
                return Err(Error::InvalidArgument(format!("cycle length must be even and at least 4, got {length}")));
            }
            constructions::even_cycle_base(length / 2)
        }
        Family::Oddhost { p } => constructions::odd_cycle_host_base(p),
        Family::Hypercube { k } => constructions::hypercube_base(k),
        Family::Parallel { t, len } => constructions::parallel_paths(t, len),
    }
}

fn grid_command(command: &GridCommand, limits: &Limits, out: &mut dyn Write) -> Result<Outcome> {
    match command {
        GridCommand::Phi { dims, seq, json } => {
            let spec = GridSpec::parse(dims)?;
            let p = grid::phi(&MoveSequence::parse(&spec, seq)?);
            if *json {
                writeln!(out, "{}", p.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{p}").map_err(io)?;
            }
        }
        GridCommand::Inverse { dims, point } => {
            let spec = GridSpec::parse(dims)?;
            let text = point.trim().trim_start_matches('(').trim_end_matches(')');
            let coords = text
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|e| Error::InvalidArgument(format!("point `{point}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            writeln!(out, "{}", grid::phi_inverse(&LatticePoint::new(&spec, coords)?)?).map_err(io)?;
        }
        GridCommand::Enumerate { dims } => {
            for w in grid::enumerate_sequences(&GridSpec::parse(dims)?, limits.geodesics)? {
                writeln!(out, "{w}").map_err(io)?;
            }
        }
        GridCommand::Check { dims } => {
            return verdict(out, &verify::check_grid_embedding(&GridSpec::parse(dims)?, limits)?);
        }
        GridCommand::Staircase { n1, n2, check } => {
            let g = grid::staircase(*n1, *n2)?;
            writeln!(out, "vertices {}\nedges {}", g.vertex_count(), g.edge_count()).map_err(io)?;
            if *check {
                return verdict(out, &verify::check_staircase(*n1, *n2, limits)?);
            }
        }
    }
    Ok(Outcome::Pass)
}

fn verify_spg_file(path: &Path, checks: &[CheckKind], limits: &Limits, out: &mut dyn Write) -> Result<Outcome> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    let h = SpGraph::from_json(&text)?;
    let mut outcome = Outcome::Pass;
    for &check in checks {
        let report = match check {
            CheckKind::P3C4 => verify::check_p3_c4(&h, limits)?,
            CheckKind::NoC5 => verify::check_no_induced_c5(&h, limits)?,
            CheckKind::Claw => verify::check_claw_in_c4(&h, limits)?,
            CheckKind::OddCycle => verify::check_odd_cycle_c4(&h, limits)?,
            CheckKind::Girth5 => verify::check_girth5_classification(&h),
            CheckKind::CompleteIffSameIndex => verify::complete_iff_same_index(&h),
            CheckKind::Decomposition => {
                return Err(Error::InvalidArgument("decomp needs a base instance, not an SpGraph file".into()))
            }
        };
        if let Outcome::Fail = verdict(out, &report)? {
            outcome = Outcome::Fail;
        }
    }
    Ok(outcome)
}

fn verify_decomposition_at(
    instances: &[verify::CorpusInstance],
    i: usize,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let mut runs = 0;
    for item in instances {
        if item.instance.distance().is_none_or(|d| d <= i) {
            continue;
        }
        runs += 1;
        let report = verify::check_decomposition(&item.instance, i, limits)?;
        if !report.passed {
            writeln!(out, "witness decomposition [{}] {}", item.label, report.to_json()).map_err(io)?;
            return Ok(Outcome::Fail);
        }
    }
    writeln!(out, "decomposition index {i}: pass ({runs} instances)").map_err(io)?;
    Ok(Outcome::Pass)
}

fn verify_sums(seed: u64, counts: [usize; 3], limits: &Limits, out: &mut dyn Write) -> Result<Outcome> {
    let [one, two, unions] = counts;
    let mut gen = SumGenerator::new(seed, 5);
    let mut inputs = Vec::new();
    for _ in 0..one {
        inputs.push(SumInput::OneSum(gen.instance(), gen.instance()));
    }
    let quota = [0, 1, 2, 3].map(|c| two / 4 + usize::from(c < two % 4));
    inputs.extend(gen.two_sums_by_case(quota, 1_000_000)?.into_iter().map(SumInput::TwoSum));
    for _ in 0..unions {
        inputs.push(SumInput::Union(gen.instance(), gen.instance()));
    }
    let mut failures = 0;
    let mut tally = std::collections::BTreeMap::<String, (u64, u64)>::new();
    for input in &inputs {
        let report = verify::check_sum_theorems(input, limits)?;
        let key = match report.stats.get("case") {
            Some(c) => format!("{} case {c}", report.name),
            None => report.name.clone(),
        };
        let entry = tally.entry(key).or_default();
        entry.0 += 1;
        if !report.passed {
            entry.1 += 1;
            failures += 1;
            writeln!(out, "witness {}", report.to_json()).map_err(io)?;
        }
    }
    for (key, (runs, failed)) in tally {
        let v = if failed == 0 { "pass" } else { "FAIL" };
        writeln!(out, "{key:<16} {runs:>5} {failed:>5}  {v}").map_err(io)?;
    }
    Ok(if failures == 0 { Outcome::Pass } else { Outcome::Fail })
}
