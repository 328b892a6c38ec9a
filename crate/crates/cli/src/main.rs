use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use snarkcrit::analysis::{analyze, AnalysisOptions, AnalysisReport, Status};
use snarkcrit::criticality::DEFAULT_BUDGET;
use snarkcrit::dot::to_dot;
use snarkcrit::formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use snarkcrit::generators::{generate, Family};
use snarkcrit::structure::Grade;
use snarkcrit::Graph;

const EXIT_INPUT: u8 = 1;
const EXIT_INCOMPLETE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "snarkcrit", version, about = "Resistance, minimal conflicting subgraphs and critical subgraphs of snarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full analysis and print a JSON report
    Analyze(AnalyzeArgs),
    /// Print the graph as DOT with its edge classes styled
    Dot(DotArgs),
    /// Analyse every graph file in a directory and print one row per graph
    Suite(SuiteArgs),
    /// Write a named graph
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Skip {
    Oddness,
    Hypo,
    Clusters,
}

#[derive(Args, Clone)]
struct Pipeline {
    /// Input format; guessed from the extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Oracle-call budget for the MCS enumeration
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Stages to leave out (comma separated)
    #[arg(long, value_enum, value_delimiter = ',')]
    skip: Vec<Skip>,
    /// Include per-stage wall-clock times (reports are no longer reproducible)
    #[arg(long)]
    timings: bool,
}

impl Pipeline {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            budget: self.budget,
            skip_oddness: self.skip.contains(&Skip::Oddness),
            skip_hypo: self.skip.contains(&Skip::Hypo),
            skip_clusters: self.skip.contains(&Skip::Clusters),
            timings: self.timings,
            ..AnalysisOptions::default()
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[command(flatten)]
    pipeline: Pipeline,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a DOT rendering here
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct DotArgs {
    input: PathBuf,
    #[command(flatten)]
    pipeline: Pipeline,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    dir: PathBuf,
    #[command(flatten)]
    pipeline: Pipeline,
    /// Graphs analysed in parallel
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write each graph's JSON report into this directory
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    family: String,
    #[arg(default_value_t = 0)]
    parameter: usize,
    #[arg(long, value_enum, default_value = "edges")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Dot(a) => cmd_dot(a),
        Command::Suite(a) => cmd_suite(a),
        Command::Generate(a) => cmd_generate(a),
    }
}

fn guess_format(path: &Path) -> Option<Format> {
    match path.extension()?.to_str()? {
        "g6" => Some(Format::G6),
        "edges" | "edgelist" | "el" => Some(Format::Edges),
        _ => None,
    }
}

fn load(path: &Path, format: Option<Format>) -> Result<(String, Graph), String> {
    let format = format
        .or_else(|| guess_format(path))
        .ok_or_else(|| format!("{}: cannot tell the format, pass --format", path.display()))?;
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let graph = match format {
        Format::G6 => parse_graph6(&text),
        Format::Edges => parse_edge_list(&text),
    }
    .map_err(|e| format!("{}: {e}", path.display()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok((name, graph))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(path: &Path, pipeline: &Pipeline) -> Result<AnalysisReport, String> {
    let (name, g) = load(path, pipeline.format)?;
    analyze(&name, &g, &pipeline.options()).map_err(|e| format!("{}: {e}", path.display()))
}

fn exit_for(report: &AnalysisReport) -> ExitCode {
    match report.status() {
        Status::Ok => ExitCode::SUCCESS,
        Status::Incomplete => {
            eprintln!("warning: analysis incomplete, raise --budget");
            ExitCode::from(EXIT_INCOMPLETE)
        }
        Status::InvariantViolation => {
            dump_violations(report);
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn dump_violations(report: &AnalysisReport) {
    let name = &report.graph.name;
    for v in &report.mcs_violations {
        eprintln!("{name}: MCS {} fails {:?}", v.mcs, v.properties);
    }
    for (a, b) in &report.disjoint_but_adjacent {
        eprintln!("{name}: MCSs {a} and {b} are edge-disjoint but share a vertex");
    }
    for c in report.hitting.iter().flat_map(|h| &h.checks).filter(|c| !c.passed) {
        eprintln!("{name}: check {} failed: {}", c.name, c.certificate.as_deref().unwrap_or(""));
    }
    let props = report.statements.iter().flatten();
    for s in props.filter(|s| s.grade == Grade::Proposition && !s.holds) {
        eprintln!("{name}: {} failed: {}", s.name, s.certificate.as_deref().unwrap_or(""));
    }
    if report.resistance.r != report.resistance.r_v {
        eprintln!(
            "{name}: r = {} but r_v = {}",
            report.resistance.r, report.resistance.r_v
        );
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> ExitCode {
    let report = match run(&args.input, &args.pipeline) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let mut result = write_or_print(args.out.as_deref(), &report.to_json());
    if let (Ok(()), Some(dot)) = (&result, &args.dot) {
        result = write_or_print(Some(dot), &to_dot(&report));
    }
    if let Err(e) = result {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    exit_for(&report)
}

fn cmd_dot(args: DotArgs) -> ExitCode {
    let report = match run(&args.input, &args.pipeline) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    if let Err(e) = write_or_print(args.out.as_deref(), &to_dot(&report)) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    exit_for(&report)
}

fn cmd_generate(args: GenerateArgs) -> ExitCode {
    let g = match args.family.parse::<Family>().and_then(|f| generate(f, args.parameter)) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let text = match args.format {
        Format::G6 => emit_graph6(&g) + "\n",
        Format::Edges => emit_edge_list(&g),
    };
    match write_or_print(args.out.as_deref(), &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn suite_files(dir: &Path) -> Result<Vec<PathBuf>, String> {
    let entries = fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && guess_format(p).is_some())
        .collect();
    files.sort();
    Ok(files)
}

fn row(report: &AnalysisReport) -> String {
    let dash = || "-".to_string();
    let h = report.hitting.as_ref();
    let theorems = h.map_or_else(dash, |h| {
        let ok = h.checks.iter().filter(|c| c.passed).count();
        format!("{ok}/{}", h.checks.len())
    });
    let st = report.statements.as_deref().unwrap_or(&[]);
    let props = st.iter().filter(|s| s.grade == Grade::Proposition);
    let props_failed = props.clone().filter(|s| !s.holds).count();
    let conj_findings = st
        .iter()
        .filter(|s| s.grade == Grade::Conjecture && !s.holds)
        .count();
    let clusters = report.clusters.as_ref().map_or_else(dash, |c| c.len().to_string());
    let status = match report.status() {
        Status::Ok => "ok",
        Status::Incomplete => "incomplete",
        Status::InvariantViolation => "VIOLATION",
    };
    format!(
        "{:<20} {:>4} {:>4} {:>3} {:>3} {:>5} {:>5} {:>8} {:>5} {:>8} {:>5} {:>4}  {}",
        report.graph.name,
        report.graph.n,
        report.graph.m,
        report.resistance.r,
        report.resistance.r_v,
        report.decomposition.mcs_count,
        h.map_or_else(dash, |h| h.k_g.len().to_string()),
        clusters,
        report.oddness.as_ref().map_or_else(dash, |o| o.omega.to_string()),
        theorems,
        if props.count() == 0 { dash() } else { props_failed.to_string() },
        conj_findings,
        status
    )
}

fn cmd_suite(args: SuiteArgs) -> ExitCode {
    let files = match suite_files(&args.dir) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(args.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let results: Vec<Result<AnalysisReport, String>> =
        pool.install(|| files.par_iter().map(|f| run(f, &args.pipeline)).collect());

    println!(
        "{:<20} {:>4} {:>4} {:>3} {:>3} {:>5} {:>5} {:>8} {:>5} {:>8} {:>5} {:>4}  status",
        "graph", "n", "m", "r", "r_v", "mcs", "|K_G|", "clusters", "omega", "theorems", "props", "conj"
    );
    let mut worst = 0u8;
    for res in &results {
        match res {
            Ok(report) => {
                println!("{}", row(report));
                let code = match report.status() {
                    Status::Ok => 0,
                    Status::Incomplete => EXIT_INCOMPLETE,
                    Status::InvariantViolation => {
                        dump_violations(report);
                        EXIT_VIOLATION
                    }
                };
                worst = worst.max(code);
                if let Some(dir) = &args.out {
                    let path = dir.join(format!("{}.json", report.graph.name));
                    if let Err(e) = write_or_print(Some(&path), &report.to_json()) {
                        eprintln!("error: {e}");
                        worst = worst.max(EXIT_INPUT);
                    }
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                worst = worst.max(EXIT_INPUT);
            }
        }
    }
    ExitCode::from(worst)
}
