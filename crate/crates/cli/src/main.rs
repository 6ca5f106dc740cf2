//! `capcut`: command-line front end for the component-cap and
//! forbidden-family edge-deletion solvers.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use capcut_core::exact::{branch_cap_min, brute_force_min, verify, SearchError, Solution};
use capcut_core::forbidden::{CheckError, FamilyChecker, FlowerHost, ForbiddenFamily, Petal};
use capcut_core::graph::edge;
use capcut_core::io::{read_graph, read_weighted, write_graph};
use capcut_core::kernel::{kernelize, reduce, Verdict};
use capcut_core::reduction::{gen_hs, gen_mmo, HsInstance, MmoInstance, ReductionError};
use capcut_core::vc::{solve_vc, VcError};
use capcut_core::Graph;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use report::{Answer, RunReport};

#[derive(Parser)]
#[command(name = "capcut", version, about = "Exact edge deletion to cap component sizes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print exactly one JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Print nothing on stdout; only the exit code matters.
    #[arg(long, global = true, conflicts_with = "json")]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum (or at most --k) deletions leaving components of at most --h vertices.
    Solve(SolveArgs),
    /// Drop components of at most --h vertices and apply the size bounds for --k.
    Kernelize(KernelizeArgs),
    /// Exhaustive search over edge subsets for a component cap or a family file.
    Oracle(OracleArgs),
    /// Check that deleting the given edges leaves the graph free of the family.
    Verify(VerifyArgs),
    /// Build the orientation-reduction instance from a weighted graph.
    GenerateMmo(GenerateMmoArgs),
    /// Build the hitting-set-reduction instance.
    GenerateHs(GenerateHsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Vc,
    Branch,
    Brute,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Vc => "vc",
            Engine::Branch => "branch",
            Engine::Brute => "brute",
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = positive)]
    h: usize,
    /// Decide whether at most K deletions suffice; omit to report the minimum.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "vc")]
    engine: Engine,
    /// Write the graph with the deleted edges highlighted as Graphviz DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Include wall-clock milliseconds in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct KernelizeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = positive)]
    h: usize,
    #[arg(long)]
    k: usize,
    /// Where to write the reduced graph (text format).
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = positive, required_unless_present = "family", conflicts_with = "family")]
    h: Option<usize>,
    /// Forbidden-family JSON file.
    #[arg(long)]
    family: Option<PathBuf>,
    /// Layout JSON from `generate-hs`, needed for flower families.
    #[arg(long)]
    flower_host: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = positive, required_unless_present = "family", conflicts_with = "family")]
    h: Option<usize>,
    #[arg(long)]
    family: Option<PathBuf>,
    /// Layout JSON from `generate-hs`, needed for flower families.
    #[arg(long)]
    flower_host: Option<PathBuf>,
    /// Edges to delete, as "u v;u v;...".
    #[arg(long, default_value = "")]
    delete: String,
}

#[derive(Args)]
struct GenerateMmoArgs {
    /// Weighted graph in the text format (`u v w` lines).
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    r: u64,
    /// Output prefix: writes PREFIX.txt, PREFIX.family.json, PREFIX.layout.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct GenerateHsArgs {
    #[arg(long)]
    universe: usize,
    /// Sets as JSON, e.g. "[[1,2],[2,3]]".
    #[arg(long)]
    sets: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug)]
enum CliError {
    /// Bad input: unreadable file, parse error, inconsistent arguments.
    Input(String),
    /// A size guard refused the instance.
    Guard(String),
    /// A produced witness failed verification.
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Guard(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            SearchError::Check(c) => c.into(),
            SearchError::EdgeNotInGraph(..) => CliError::Input(e.to_string()),
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::PatternTooLarge { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<VcError> for CliError {
    fn from(e: VcError) -> Self {
        match e {
            VcError::CoverTooLarge { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::TooManyEdges { .. } | ReductionError::HsTooLarge { .. } => {
                CliError::Guard(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// What a subcommand hands back for printing.
enum Output {
    Report(RunReport),
    Json(serde_json::Value, String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let command = argv.join(" ");
    let result = match &cli.command {
        Command::Solve(a) => solve(a, command).map(Output::Report),
        Command::Kernelize(a) => kernelize_cmd(a),
        Command::Oracle(a) => oracle(a, command).map(Output::Report),
        Command::Verify(a) => verify_cmd(a, command),
        Command::GenerateMmo(a) => generate_mmo(a),
        Command::GenerateHs(a) => generate_hs(a),
    };
    match result {
        Ok(out) => {
            if !cli.quiet {
                match out {
                    Output::Report(r) if cli.json => println!("{}", r.to_json()),
                    Output::Report(r) => print!("{}", r.to_text()),
                    Output::Json(v, _) if cli.json => {
                        println!("{}", serde_json::to_string_pretty(&v).expect("json value"))
                    }
                    Output::Json(_, text) => print!("{text}"),
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("capcut: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    read_graph(&read_text(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_family(path: &Path) -> Result<ForbiddenFamily, CliError> {
    ForbiddenFamily::from_json(&read_text(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn family_arg(h: Option<usize>, family: &Option<PathBuf>) -> Result<ForbiddenFamily, CliError> {
    match (h, family) {
        (_, Some(path)) => load_family(path),
        (Some(h), None) => Ok(ForbiddenFamily::component_cap(h)),
        (None, None) => Err(CliError::Input("one of --h or --family is required".into())),
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Deserialize)]
struct HostLayout {
    center: usize,
    petals: Vec<PetalLayout>,
}

#[derive(Deserialize)]
struct PetalLayout {
    element: usize,
    length: usize,
    edges: Vec<(usize, usize)>,
}

/// Rebuilds the flower host of a `generate-hs` instance from its layout file.
fn load_flower_host(path: &Option<PathBuf>, g: &Graph) -> Result<Option<FlowerHost>, CliError> {
    let Some(path) = path else { return Ok(None) };
    let layout: HostLayout = serde_json::from_str(&read_text(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let petals = layout
        .petals
        .into_iter()
        .map(|p| {
            let mut edges: Vec<_> = p.edges.into_iter().map(|(u, v)| edge(u, v)).collect();
            edges.sort_unstable();
            Petal {
                element: p.element,
                length: p.length,
                edges,
            }
        })
        .collect();
    Ok(Some(FlowerHost {
        graph: g.clone(),
        center: layout.center,
        petals,
    }))
}

fn checker<'a>(family: &'a ForbiddenFamily, host: &'a Option<FlowerHost>) -> FamilyChecker<'a> {
    match host {
        Some(h) => FamilyChecker::with_flower_host(family, h),
        None => FamilyChecker::new(family),
    }
}

fn parse_deletions(text: &str, g: &Graph) -> Result<Solution, CliError> {
    let mut edges = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let ends: Vec<usize> = part
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Input(format!("bad edge {part:?} in --delete")))?;
        let [u, v] = ends[..] else {
            return Err(CliError::Input(format!("bad edge {part:?} in --delete")));
        };
        if !g.has_edge(u, v) {
            return Err(CliError::Input(format!("edge ({u}, {v}) is not in the graph")));
        }
        edges.push(edge(u, v));
    }
    Ok(Solution::new(edges))
}

fn solve(a: &SolveArgs, command: String) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let g = load_graph(&a.graph)?;
    let h = a.h;
    let kernel = match a.k {
        Some(k) => kernelize(&g, k, h),
        None => reduce(&g, h),
    };
    let mut report = RunReport::new(command, a.engine.name());
    if kernel.verdict == Verdict::NoByBounds {
        report.answer = Answer::No;
        report.verdict = "no_by_bounds".into();
        report.stats.millis = a.timing.then(|| start.elapsed().as_millis());
        return Ok(report);
    }

    let reduced = &kernel.reduced;
    let budget = a.k.unwrap_or(reduced.edge_count());
    let found: Option<Solution> = match a.engine {
        Engine::Vc => {
            let r = solve_vc(reduced, h)?;
            report.stats.partitions_tried = Some(r.partitions_tried);
            (r.objective <= budget).then_some(r.solution)
        }
        Engine::Branch => {
            let out = branch_cap_min(reduced, h, budget);
            report.stats.nodes_expanded = Some(out.nodes_expanded);
            out.solution
        }
        Engine::Brute => {
            let family = ForbiddenFamily::component_cap(h);
            let out = brute_force_min(reduced, &FamilyChecker::new(&family), budget)?;
            report.stats.nodes_expanded = Some(out.nodes_expanded);
            out.solution
        }
    };

    if let Some(sol) = found {
        let lifted = Solution::new(sol.deleted_edges.iter().map(|&e| kernel.lift_edge(e)));
        let family = ForbiddenFamily::component_cap(h);
        if !verify(&g, &lifted, &FamilyChecker::new(&family))? {
            return Err(CliError::Internal(format!(
                "witness {:?} failed verification",
                lifted.deleted_edges
            )));
        }
        report.answer = Answer::Yes;
        report.k_min = Some(lifted.size());
        report.deleted_edges = lifted.deleted_edges;
    }
    if let Some(path) = &a.dot {
        write_text(path, &report::dot(&g, &report.deleted_edges))?;
    }
    report.stats.millis = a.timing.then(|| start.elapsed().as_millis());
    Ok(report)
}

fn oracle(a: &OracleArgs, command: String) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let g = load_graph(&a.graph)?;
    let family = family_arg(a.h, &a.family)?;
    let host = load_flower_host(&a.flower_host, &g)?;
    let out = brute_force_min(&g, &checker(&family, &host), a.k.unwrap_or(g.edge_count()))?;
    let mut report = RunReport::new(command, "brute");
    report.stats.nodes_expanded = Some(out.nodes_expanded);
    if let Some(sol) = out.solution {
        report.answer = Answer::Yes;
        report.k_min = Some(sol.size());
        report.deleted_edges = sol.deleted_edges;
    }
    if let Some(path) = &a.dot {
        write_text(path, &report::dot(&g, &report.deleted_edges))?;
    }
    report.stats.millis = a.timing.then(|| start.elapsed().as_millis());
    Ok(report)
}

fn verify_cmd(a: &VerifyArgs, command: String) -> Result<Output, CliError> {
    let g = load_graph(&a.graph)?;
    let family = family_arg(a.h, &a.family)?;
    let sol = parse_deletions(&a.delete, &g)?;
    let host = load_flower_host(&a.flower_host, &g)?;
    let valid = verify(&g, &sol, &checker(&family, &host))?;
    let value = serde_json::json!({
        "command": command,
        "valid": valid,
        "deleted_edges": sol.deleted_edges,
    });
    Ok(Output::Json(value, format!("valid: {valid}\n")))
}

fn kernelize_cmd(a: &KernelizeArgs) -> Result<Output, CliError> {
    let g = load_graph(&a.graph)?;
    let result = kernelize(&g, a.k, a.h);
    write_text(&a.out, &write_graph(&result.reduced))?;
    let mut value = serde_json::to_value(&result).expect("kernel result serializes");
    value["graph"] = a.out.display().to_string().into();
    value["vertices"] = result.reduced.vertex_count().into();
    value["edges"] = result.reduced.edge_count().into();
    let text = format!(
        "removed {} components; reduced graph has {} vertices, {} edges; verdict {}\n",
        result.removed.len(),
        result.reduced.vertex_count(),
        result.reduced.edge_count(),
        value["verdict"].as_str().unwrap_or_default()
    );
    Ok(Output::Json(value, text))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_instance(
    prefix: &Path,
    g: &Graph,
    family: &ForbiddenFamily,
    layout: serde_json::Value,
    k: usize,
) -> Result<Output, CliError> {
    let paths = [".txt", ".family.json", ".layout.json"].map(|s| with_suffix(prefix, s));
    write_text(&paths[0], &write_graph(g))?;
    write_text(&paths[1], &family.to_json())?;
    write_text(&paths[2], &serde_json::to_string_pretty(&layout).expect("layout json"))?;
    let value = serde_json::json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "k": k,
        "graph": paths[0].display().to_string(),
        "family": paths[1].display().to_string(),
        "layout": paths[2].display().to_string(),
    });
    let text = format!(
        "{} vertices, {} edges, k = {k}; wrote {}, {}, {}\n",
        g.vertex_count(),
        g.edge_count(),
        paths[0].display(),
        paths[1].display(),
        paths[2].display()
    );
    Ok(Output::Json(value, text))
}

fn generate_mmo(a: &GenerateMmoArgs) -> Result<Output, CliError> {
    let text = read_text(&a.graph)?;
    let wg = read_weighted(&text).map_err(|e| CliError::Input(format!("{}: {e}", a.graph.display())))?;
    let red = gen_mmo(&MmoInstance::new(wg, a.r)?);
    let layout = serde_json::to_value(&red.layout).expect("layout serializes");
    write_instance(&a.out, &red.graph, &red.family, layout, red.k)
}

fn generate_hs(a: &GenerateHsArgs) -> Result<Output, CliError> {
    let sets: Vec<Vec<usize>> = serde_json::from_str(&a.sets)
        .map_err(|e| CliError::Input(format!("--sets: {e}")))?;
    let red = gen_hs(&HsInstance::new(a.universe, sets, a.k)?);
    let layout = serde_json::json!({
        "center": red.host.center,
        "petals": red.host.petals,
    });
    write_instance(&a.out, red.graph(), &red.family, layout, red.k)
}
