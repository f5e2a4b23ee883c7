//! Command-line front end: check structure, find parity witnesses, consult
//! the exhaustive oracle, generate family instances, and validate stored
//! witnesses. Every run prints one JSON report on standard output.
//!
//! Exit codes: 0 success, 2 hypothesis violation (an expected negative),
//! 1 usage and input errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use parity_cycles::checks::{
    connectivity_report, is_bipartite, is_connected, is_two_connected, is_two_edge_connected,
    odd_cycle_avoiding_edge,
};
use parity_cycles::codec::{self, TargetDoc};
use parity_cycles::constructors::{
    circuit_with_parity_through_edge, cycle_with_parity_through_edge,
    even_circuit_through_edge_regular, even_circuit_through_vertex,
    even_cycle_through_edge_regular, even_cycle_through_odd_degree_vertex,
    even_cycle_through_vertex, inferred_degree_divisor, odd_circuit_through_edge,
    odd_cycle_through_edge, ConstructError, ParityWitness, Violation,
};
use parity_cycles::disjoint::{edge_to_edge_disjoint_paths, two_disjoint_paths, PathMode};
use parity_cycles::families::{generate as generate_family, FamilySpec};
use parity_cycles::graph::{EdgeId, Graph, Parity, Target, VertexId};
use parity_cycles::oracle::{
    enumerate_closed_trails_through, enumerate_cycles_through, existence_tables,
    validate_witness, EnumerationBudget,
};

#[derive(Parser)]
#[command(
    name = "parity-cycles",
    version,
    about = "Find cycles and circuits of prescribed parity through a vertex or edge"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report connectivity, bipartiteness, and degree structure.
    Check(CheckArgs),
    /// Find a cycle or circuit of prescribed parity through a target.
    Find(FindArgs),
    /// Enumerate cycles or circuits through a target and decide existence.
    Oracle(OracleArgs),
    /// Generate a family instance plus a sidecar naming its target.
    Generate(GenerateArgs),
    /// Check a stored witness against a graph.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for standard input.
    #[arg(long)]
    input: String,
    /// How the input is encoded.
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Format {
    Edgelist,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct FindArgs {
    #[command(flatten)]
    input: InputArgs,
    /// What to run: a witness search, or the disjoint-path machinery.
    #[arg(long, value_enum, default_value_t = FindMode::Witness)]
    mode: FindMode,
    /// Search target: `edge:u,v` or `vertex:i`.
    #[arg(long, conflicts_with = "targets")]
    target: Option<String>,
    /// Sweep every target of one kind; results are sorted by id.
    #[arg(long, value_enum)]
    targets: Option<TargetSweep>,
    /// Required parity of the witness.
    #[arg(long, value_enum)]
    parity: Option<ParityArg>,
    /// Kind of closed walk to search for.
    #[arg(long, value_enum, default_value_t = ObjectArg::Cycle)]
    object: ObjectArg,
    /// Routine to use; `auto` tries the weakest applicable one first.
    #[arg(long, value_enum, default_value_t = TheoremArg::Auto)]
    theorem: TheoremArg,
    /// Seed for any randomized step; the fixed default keeps runs reproducible.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write a DOT rendering highlighting the witness.
    #[arg(long)]
    emit_dot: Option<PathBuf>,
    /// Second target for `--mode paths`.
    #[arg(long)]
    target2: Option<String>,
    /// Disjointness flavor for `--mode paths`.
    #[arg(long, value_enum, default_value_t = DisjointArg::Vertex)]
    disjoint: DisjointArg,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum FindMode {
    Witness,
    Paths,
}

#[derive(Copy, Clone, ValueEnum)]
enum TargetSweep {
    AllEdges,
    AllVertices,
}

#[derive(Copy, Clone, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum ObjectArg {
    Cycle,
    Circuit,
}

#[derive(Copy, Clone, PartialEq, Debug, ValueEnum)]
enum TheoremArg {
    Auto,
    Thm0,
    Cor1,
    Thm1,
    Thm2,
    Thm3,
    Thm00,
    Thm5,
    Thm6,
    Thm7,
}

#[derive(Copy, Clone, ValueEnum)]
enum DisjointArg {
    Vertex,
    Edge,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Target: `edge:u,v` or `vertex:i`.
    #[arg(long)]
    target: String,
    /// Object kind; `trail` is a synonym for circuit.
    #[arg(long, value_enum, default_value_t = OracleObject::Cycle)]
    object: OracleObject,
    /// Enumeration budget as `vertices,edges,trail-edges`.
    #[arg(long)]
    budget: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum OracleObject {
    Cycle,
    Circuit,
    Trail,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family name, e.g. `odd-book` or `random-k-regular`.
    #[arg(long)]
    family: String,
    /// Comma-separated `key=value` parameters, e.g. `p=3,page=5`.
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; a `<out>.target.json` sidecar names the target.
    #[arg(long)]
    out: PathBuf,
    /// Encoding for the graph file.
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Witness JSON as produced by `find`.
    #[arg(long)]
    witness: PathBuf,
}

// ----- Report shapes -----

#[derive(Serialize)]
struct RunReport {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_digest: Option<String>,
    elapsed_ms: u128,
    outcome: Outcome,
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum Outcome {
    Check(CheckReport),
    Witness(ParityWitness),
    Violations(Vec<Violation>),
    Sweep(Vec<SweepEntry>),
    Paths(PathsReport),
    Oracle(OracleReport),
    Generated(GeneratedReport),
    Validation(ValidationReport),
}

#[derive(Serialize)]
struct CheckReport {
    vertices: usize,
    edges: usize,
    connected: bool,
    two_connected: bool,
    two_edge_connected: bool,
    bipartite: bool,
    components: usize,
    articulation_vertices: Vec<VertexId>,
    bridges: Vec<EdgeId>,
    degree_divisor: usize,
}

#[derive(Serialize)]
struct SweepEntry {
    target: Target,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ParityWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violations: Option<Vec<Violation>>,
}

#[derive(Serialize)]
struct PathsReport {
    disjoint: &'static str,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first: Option<Vec<VertexId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second: Option<Vec<VertexId>>,
}

#[derive(Serialize)]
struct OracleReport {
    target: Target,
    object: &'static str,
    count: usize,
    lengths: Vec<usize>,
    exists_even: bool,
    exists_odd: bool,
}

#[derive(Serialize)]
struct GeneratedReport {
    family: String,
    params: serde_json::Map<String, serde_json::Value>,
    seed: u64,
    path: String,
    sidecar: String,
    vertices: usize,
    edges: usize,
    target: Target,
}

#[derive(Serialize)]
struct ValidationReport {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    defect: Option<String>,
}

#[derive(Serialize)]
struct Sidecar {
    family: String,
    params: serde_json::Map<String, serde_json::Value>,
    target: TargetDoc,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let started = Instant::now();
    match dispatch(cli.command) {
        Ok((input_digest, outcome)) => {
            let code = exit_code_for(&outcome);
            let report = RunReport {
                command,
                input_digest,
                elapsed_ms: started.elapsed().as_millis(),
                outcome,
            };
            println!("{}", serde_json::to_string(&report).expect("reports serialize"));
            code
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn exit_code_for(outcome: &Outcome) -> ExitCode {
    match outcome {
        Outcome::Violations(_) => ExitCode::from(2),
        Outcome::Sweep(entries) if entries.iter().any(|e| e.violations.is_some()) => {
            ExitCode::from(2)
        }
        Outcome::Validation(v) if !v.valid => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

type RunResult = Result<(Option<String>, Outcome), String>;

fn dispatch(command: Command) -> RunResult {
    match command {
        Command::Check(args) => {
            let (g, digest) = load_graph(&args.input)?;
            Ok((Some(digest), Outcome::Check(check_report(&g))))
        }
        Command::Find(args) => run_find(args),
        Command::Oracle(args) => run_oracle(args),
        Command::Generate(args) => run_generate(args),
        Command::Validate(args) => run_validate(args),
    }
}

// ----- Shared input handling -----

fn load_graph(input: &InputArgs) -> Result<(Graph, String), String> {
    let text = if input.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading standard input: {e}"))?;
        s
    } else {
        fs::read_to_string(&input.input).map_err(|e| format!("reading {}: {e}", input.input))?
    };
    let g = match input.format {
        Format::Edgelist => codec::parse_edge_list(&text),
        Format::Json => codec::parse_graph_json(&text),
    }
    .map_err(|e| format!("parsing {}: {e}", input.input))?;
    let digest = sha256_hex(codec::write_edge_list(&g).as_bytes());
    Ok((g, digest))
}

fn sha256_hex(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in hash {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

fn parse_target(g: &Graph, spec: &str) -> Result<Target, String> {
    if let Some(rest) = spec.strip_prefix("vertex:") {
        let i: usize = rest
            .trim()
            .parse()
            .map_err(|_| format!("bad vertex index `{rest}`"))?;
        let v = VertexId::new(i);
        if !g.has_vertex(v) {
            return Err(format!("vertex {i} is out of range"));
        }
        return Ok(Target::Vertex(v));
    }
    if let Some(rest) = spec.strip_prefix("edge:") {
        let (u, v) = rest
            .split_once(',')
            .ok_or_else(|| format!("edge targets look like `edge:u,v`, got `{spec}`"))?;
        let parse = |s: &str| -> Result<VertexId, String> {
            let i: usize = s.trim().parse().map_err(|_| format!("bad endpoint `{s}`"))?;
            let v = VertexId::new(i);
            if !g.has_vertex(v) {
                return Err(format!("vertex {i} is out of range"));
            }
            Ok(v)
        };
        let (u, v) = (parse(u)?, parse(v)?);
        return g
            .edge_between(u, v)
            .map(Target::Edge)
            .ok_or_else(|| format!("vertices {u} and {v} are not adjacent"));
    }
    Err(format!("targets look like `edge:u,v` or `vertex:i`, got `{spec}`"))
}

fn parse_budget(spec: Option<&str>) -> Result<EnumerationBudget, String> {
    let Some(spec) = spec else {
        return Ok(EnumerationBudget::default());
    };
    let parts: Vec<usize> = spec
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("budgets look like `vertices,edges,trail-edges`, got `{spec}`"))?;
    let [max_vertices, max_edges, max_trail_edges] = parts[..] else {
        return Err(format!(
            "budgets look like `vertices,edges,trail-edges`, got `{spec}`"
        ));
    };
    Ok(EnumerationBudget {
        max_vertices,
        max_edges,
        max_trail_edges,
    })
}

// ----- check -----

fn check_report(g: &Graph) -> CheckReport {
    let report = connectivity_report(g);
    CheckReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected: is_connected(g),
        two_connected: is_two_connected(g),
        two_edge_connected: is_two_edge_connected(g),
        bipartite: is_bipartite(g),
        components: report.components.len(),
        articulation_vertices: report.articulation_vertices,
        bridges: report.bridges,
        degree_divisor: inferred_degree_divisor(g),
    }
}

// ----- find -----

fn run_find(args: FindArgs) -> RunResult {
    let (g, digest) = load_graph(&args.input)?;
    if args.mode == FindMode::Paths {
        let report = run_paths(&g, &args)?;
        return Ok((Some(digest), Outcome::Paths(report)));
    }
    let parity: Parity = args
        .parity
        .ok_or("`--parity` is required when searching for a witness")?
        .into();
    let outcome = match (args.target.as_deref(), args.targets) {
        (Some(spec), None) => {
            let target = parse_target(&g, spec)?;
            match find_one(&g, target, parity, args.object, args.theorem)? {
                Ok(witness) => {
                    if let Some(path) = &args.emit_dot {
                        fs::write(path, codec::to_dot(&g, Some(&witness)))
                            .map_err(|e| format!("writing {}: {e}", path.display()))?;
                    }
                    Outcome::Witness(witness)
                }
                Err(violations) => Outcome::Violations(violations),
            }
        }
        (None, Some(sweep)) => {
            if args.emit_dot.is_some() {
                return Err("`--emit-dot` needs a single `--target`".into());
            }
            let targets: Vec<Target> = match sweep {
                TargetSweep::AllEdges => g.edge_ids().map(Target::Edge).collect(),
                TargetSweep::AllVertices => g.vertices().map(Target::Vertex).collect(),
            };
            let mut entries = Vec::new();
            for target in targets {
                let entry = match find_one(&g, target, parity, args.object, args.theorem)? {
                    Ok(w) => SweepEntry {
                        target,
                        witness: Some(w),
                        violations: None,
                    },
                    Err(vs) => SweepEntry {
                        target,
                        witness: None,
                        violations: Some(vs),
                    },
                };
                entries.push(entry);
            }
            Outcome::Sweep(entries)
        }
        (None, None) => return Err("one of `--target` or `--targets` is required".into()),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    Ok((Some(digest), outcome))
}

/// How one routine application ended.
enum Applied {
    Witness(Box<ParityWitness>),
    Violations(Vec<Violation>),
    /// The routine needs an odd cycle avoiding the edge and none exists.
    NoCertificate,
}

fn find_one(
    g: &Graph,
    target: Target,
    parity: Parity,
    object: ObjectArg,
    theorem: TheoremArg,
) -> Result<Result<ParityWitness, Vec<Violation>>, String> {
    let candidates = match theorem {
        TheoremArg::Auto => auto_candidates(target, parity, object)?,
        explicit => {
            check_shape(explicit, target, parity, object)?;
            vec![explicit]
        }
    };
    let mut collected: Vec<Violation> = Vec::new();
    for tag in &candidates {
        match apply_theorem(g, *tag, target, parity)? {
            Applied::Witness(w) => return Ok(Ok(*w)),
            Applied::Violations(vs) => {
                for v in vs {
                    if !collected.contains(&v) {
                        collected.push(v);
                    }
                }
            }
            Applied::NoCertificate => {}
        }
    }
    if collected.is_empty() {
        let names: Vec<String> = candidates
            .iter()
            .map(|t| format!("{t:?}").to_lowercase())
            .collect();
        Err(format!(
            "no odd cycle avoids the target edge, so {} cannot run; \
             pick another routine or target",
            names.join("/")
        ))
    } else {
        Ok(Err(collected))
    }
}

/// Candidate routines for `auto`, weakest hypotheses first.
fn auto_candidates(
    target: Target,
    parity: Parity,
    object: ObjectArg,
) -> Result<Vec<TheoremArg>, String> {
    use TheoremArg::*;
    Ok(match (target, object, parity) {
        (Target::Edge(_), ObjectArg::Cycle, Parity::Even) => vec![Thm0, Thm1],
        (Target::Edge(_), ObjectArg::Cycle, Parity::Odd) => vec![Thm0, Cor1],
        (Target::Edge(_), ObjectArg::Circuit, Parity::Even) => vec![Thm00, Thm5],
        (Target::Edge(_), ObjectArg::Circuit, Parity::Odd) => vec![Thm00, Thm7],
        (Target::Vertex(_), ObjectArg::Cycle, Parity::Even) => vec![Thm3, Thm2],
        (Target::Vertex(_), ObjectArg::Circuit, Parity::Even) => vec![Thm6],
        (Target::Vertex(_), _, Parity::Odd) => {
            return Err(
                "no routine searches for odd closed walks through a vertex; \
                 use an edge target"
                    .into(),
            )
        }
    })
}

/// What an explicit routine accepts: target kind, fixed parity, object kind.
fn shape(tag: TheoremArg) -> (bool, Option<Parity>, ObjectArg) {
    use TheoremArg::*;
    match tag {
        Thm0 => (true, None, ObjectArg::Cycle),
        Thm00 => (true, None, ObjectArg::Circuit),
        Cor1 => (true, Some(Parity::Odd), ObjectArg::Cycle),
        Thm1 => (true, Some(Parity::Even), ObjectArg::Cycle),
        Thm5 => (true, Some(Parity::Even), ObjectArg::Circuit),
        Thm7 => (true, Some(Parity::Odd), ObjectArg::Circuit),
        Thm2 => (false, Some(Parity::Even), ObjectArg::Cycle),
        Thm3 => (false, Some(Parity::Even), ObjectArg::Cycle),
        Thm6 => (false, Some(Parity::Even), ObjectArg::Circuit),
        Auto => unreachable!("auto is expanded before shape checks"),
    }
}

fn check_shape(
    tag: TheoremArg,
    target: Target,
    parity: Parity,
    object: ObjectArg,
) -> Result<(), String> {
    let (wants_edge, fixed_parity, fixed_object) = shape(tag);
    let name = format!("{tag:?}").to_lowercase();
    match (wants_edge, target) {
        (true, Target::Vertex(_)) => return Err(format!("{name} needs an edge target")),
        (false, Target::Edge(_)) => return Err(format!("{name} needs a vertex target")),
        _ => {}
    }
    if let Some(p) = fixed_parity {
        if p != parity {
            return Err(format!("{name} only finds {p} objects"));
        }
    }
    if fixed_object != object {
        let kind = match fixed_object {
            ObjectArg::Cycle => "cycles",
            ObjectArg::Circuit => "circuits",
        };
        return Err(format!("{name} only finds {kind}"));
    }
    Ok(())
}

fn apply_theorem(
    g: &Graph,
    tag: TheoremArg,
    target: Target,
    parity: Parity,
) -> Result<Applied, String> {
    use TheoremArg::*;
    let result = match (tag, target) {
        (Thm0, Target::Edge(e)) | (Thm00, Target::Edge(e)) => {
            let found = odd_cycle_avoiding_edge(g, e).expect("target edge was validated");
            let Some(certificate) = found else {
                return Ok(if is_bipartite(g) {
                    Applied::Violations(vec![Violation::Bipartite])
                } else {
                    Applied::NoCertificate
                });
            };
            if tag == Thm0 {
                cycle_with_parity_through_edge(g, e, &certificate, parity)
            } else {
                circuit_with_parity_through_edge(g, e, &certificate, parity)
            }
        }
        (Cor1, Target::Edge(e)) => odd_cycle_through_edge(g, e),
        (Thm1, Target::Edge(e)) => even_cycle_through_edge_regular(g, e),
        (Thm5, Target::Edge(e)) => even_circuit_through_edge_regular(g, e),
        (Thm7, Target::Edge(e)) => odd_circuit_through_edge(g, e),
        (Thm2, Target::Vertex(v)) => even_cycle_through_vertex(g, v),
        (Thm3, Target::Vertex(v)) => even_cycle_through_odd_degree_vertex(g, v),
        (Thm6, Target::Vertex(v)) => even_circuit_through_vertex(g, v),
        _ => unreachable!("shape checks gate the target kind"),
    };
    match result {
        Ok(w) => Ok(Applied::Witness(Box::new(w))),
        Err(ConstructError::Hypothesis(vs)) => Ok(Applied::Violations(vs)),
        Err(ConstructError::Internal(msg)) => Err(format!("internal failure: {msg}")),
    }
}

fn run_paths(g: &Graph, args: &FindArgs) -> Result<PathsReport, String> {
    let first = args
        .target
        .as_deref()
        .ok_or("`--mode paths` needs `--target`")?;
    let second = args
        .target2
        .as_deref()
        .ok_or("`--mode paths` needs `--target2`")?;
    let (mode, disjoint) = match args.disjoint {
        DisjointArg::Vertex => (PathMode::Vertex, "vertex"),
        DisjointArg::Edge => (PathMode::Edge, "edge"),
    };
    let pair = match (parse_target(g, first)?, parse_target(g, second)?) {
        (Target::Vertex(s), Target::Vertex(t)) => {
            if s == t {
                return Err("the two vertices must differ".into());
            }
            two_disjoint_paths(g, s, t, mode).map(|p| (p.first, p.second))
        }
        (Target::Edge(e), Target::Edge(f)) => {
            if e == f {
                return Err("the two edges must differ".into());
            }
            edge_to_edge_disjoint_paths(g, e, f, mode).map(|p| (p.from_lo, p.from_hi))
        }
        _ => return Err("`--mode paths` needs two targets of the same kind".into()),
    };
    Ok(match pair {
        Some((first, second)) => PathsReport {
            disjoint,
            found: true,
            first: Some(first.vertices().to_vec()),
            second: Some(second.vertices().to_vec()),
        },
        None => PathsReport {
            disjoint,
            found: false,
            first: None,
            second: None,
        },
    })
}

// ----- oracle -----

fn run_oracle(args: OracleArgs) -> RunResult {
    let (g, digest) = load_graph(&args.input)?;
    let budget = parse_budget(args.budget.as_deref())?;
    let target = parse_target(&g, &args.target)?;
    let tables = existence_tables(&g, &budget).map_err(|e| e.to_string())?;
    let report = match args.object {
        OracleObject::Cycle => {
            let cycles = enumerate_cycles_through(&g, target, &budget).map_err(|e| e.to_string())?;
            OracleReport {
                target,
                object: "cycle",
                count: cycles.len(),
                lengths: sorted(cycles.iter().map(|c| c.len())),
                exists_even: tables.cycle(target, Parity::Even),
                exists_odd: tables.cycle(target, Parity::Odd),
            }
        }
        OracleObject::Circuit | OracleObject::Trail => {
            let trails =
                enumerate_closed_trails_through(&g, target, &budget).map_err(|e| e.to_string())?;
            OracleReport {
                target,
                object: "circuit",
                count: trails.len(),
                lengths: sorted(trails.iter().map(|t| t.len())),
                exists_even: tables.circuit(target, Parity::Even),
                exists_odd: tables.circuit(target, Parity::Odd),
            }
        }
    };
    Ok((Some(digest), Outcome::Oracle(report)))
}

fn sorted(lengths: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = lengths.collect();
    out.sort_unstable();
    out
}

// ----- generate -----

fn run_generate(args: GenerateArgs) -> RunResult {
    let spec = FamilySpec::from_cli(&args.family, &args.params, args.seed)
        .map_err(|e| e.to_string())?;
    let (g, target) = generate_family(spec).map_err(|e| e.to_string())?;
    let text = match args.format {
        Format::Edgelist => codec::write_edge_list(&g),
        Format::Json => {
            let mut s = codec::write_graph_json(&g);
            s.push('\n');
            s
        }
    };
    fs::write(&args.out, text).map_err(|e| format!("writing {}: {e}", args.out.display()))?;
    let mut params = serde_json::Map::new();
    for (key, value) in spec.params() {
        params.insert(key.to_string(), value.into());
    }
    let sidecar_path = PathBuf::from(format!("{}.target.json", args.out.display()));
    let sidecar = Sidecar {
        family: spec.family_name().to_string(),
        params: params.clone(),
        target: TargetDoc::from(target),
    };
    fs::write(
        &sidecar_path,
        serde_json::to_string(&sidecar).expect("sidecars serialize"),
    )
    .map_err(|e| format!("writing {}: {e}", sidecar_path.display()))?;
    let digest = sha256_hex(codec::write_edge_list(&g).as_bytes());
    let report = GeneratedReport {
        family: spec.family_name().to_string(),
        params,
        seed: args.seed,
        path: args.out.display().to_string(),
        sidecar: sidecar_path.display().to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        target,
    };
    Ok((Some(digest), Outcome::Generated(report)))
}

// ----- validate -----

fn run_validate(args: ValidateArgs) -> RunResult {
    let (g, digest) = load_graph(&args.input)?;
    let text = fs::read_to_string(&args.witness)
        .map_err(|e| format!("reading {}: {e}", args.witness.display()))?;
    let doc = codec::parse_witness_json(&text)
        .map_err(|e| format!("parsing {}: {e}", args.witness.display()))?;
    let report = match codec::resolve_witness(&g, &doc) {
        Err(defect) => ValidationReport {
            valid: false,
            defect: Some(defect),
        },
        Ok(witness) => match validate_witness(&g, &witness) {
            Ok(()) => ValidationReport {
                valid: true,
                defect: None,
            },
            Err(defect) => ValidationReport {
                valid: false,
                defect: Some(defect.to_string()),
            },
        },
    };
    Ok((Some(digest), Outcome::Validation(report)))
}
