//! `thuelab` command-line interface.
//!
//! Exit status: 0 success, 1 check failed (repetition found, proven bound
//! violated), 2 unparseable input or shape mismatch, 3 size guard exceeded,
//! 4 I/O failure, 10 sweep found a counterexample to the conjectured lower
//! bound.

mod output;
mod record;

use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use thuelab::bounds::{
    certify, pi_check, sweep_conjecture, BoundsError, NamedGraph, SolverLimits, SweepConfig,
    SweepReport,
};
use thuelab::colouring::{
    check_choosable, exact_pi, verify_nonrepetitive, Choosability, ColourError, Colouring,
    ColouringRecord,
};
use thuelab::graphs::io::{to_edge_list, to_graph6};
use thuelab::graphs::GraphError;
use thuelab::words::{find_repetition, thue_word, Symbol, Word};

use output::{csv_row, to_json};
use record::RunRecord;

#[derive(Parser)]
#[command(
    name = "thuelab",
    version,
    about = "Nonrepetitive colourings of graphs and lexicographic products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Thue chromatic number with a witness colouring.
    Pi {
        graph: String,
        /// Re-check the witness with the verifier.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Lift the solver size guard.
        #[arg(long)]
        force: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Check a colouring file for repetitively coloured paths.
    Verify { graph: String, colouring: PathBuf },
    /// Bounds on π(G ∘ H), optionally with the exact value.
    Bounds {
        g: String,
        h: String,
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        force: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Solve all pairs from the built-in family pool up to a product order.
    Sweep {
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        force: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
        /// Previous JSON report whose solved instances are reused.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Where counterexample certificates are written (default: next to
        /// the report, or the working directory).
        #[arg(long)]
        counterexample_dir: Option<PathBuf>,
    },
    /// Compare π(G) with n - α(G) + 1.
    Check {
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustive nonrepetitive k-choosability check (at most 5 vertices).
    Choosable {
        graph: String,
        #[arg(short)]
        k: usize,
        /// Colour universe size (default k·n).
        #[arg(long)]
        universe: Option<usize>,
    },
    /// Print a ternary squarefree word.
    ThueWord { length: usize },
    /// Check a word given as arguments or on standard input.
    VerifyWord { symbols: Vec<Symbol> },
    /// Print a graph as graph6 or as an edge list.
    Graph {
        graph: String,
        #[arg(long)]
        edges: bool,
    },
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::new(4, format!("{}: {e}", path.display()))
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Io { .. } => CliError::new(4, e.to_string()),
            _ => CliError::new(2, e.to_string()),
        }
    }
}

impl From<ColourError> for CliError {
    fn from(e: ColourError) -> Self {
        match e {
            ColourError::TooLarge(_) => CliError::new(3, e.to_string()),
            _ => CliError::new(2, e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::TooLarge(_) => CliError::new(3, e.to_string()),
            BoundsError::BoundViolated(_) => CliError::new(1, e.to_string()),
            BoundsError::Graph(g) => g.into(),
            BoundsError::Colour(c) => c.into(),
            BoundsError::BadParameter(_) => CliError::new(2, e.to_string()),
        }
    }
}

/// What a command produced: text for stdout and an exit status.
struct Outcome {
    stdout: String,
    status: u8,
    summary: serde_json::Value,
}

impl Outcome {
    fn ok(stdout: String, summary: serde_json::Value) -> Self {
        Outcome {
            stdout,
            status: 0,
            summary,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let started = Instant::now();
    let output_path = match &cli.command {
        Command::Pi { output, .. }
        | Command::Bounds { output, .. }
        | Command::Sweep { output, .. } => output.clone(),
        _ => None,
    };

    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if let Some(path) = output_path {
                let rec = RunRecord::new(&args, outcome.summary, started.elapsed());
                if let Err(e) = rec.write_beside(&path) {
                    eprintln!("error: {}", e.message);
                    return ExitCode::from(e.code);
                }
            }
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("THUELAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

fn limits(force: bool) -> SolverLimits {
    if force {
        eprintln!("warning: solver size guard lifted; runtime may be long");
        SolverLimits::forced()
    } else {
        SolverLimits::default()
    }
}

fn emit(text: String, output: Option<&Path>) -> Result<String, CliError> {
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::io(path, e))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Pi {
            graph,
            verify,
            format,
            force,
            output,
        } => cmd_pi(&graph, verify, format, force, output.as_deref()),
        Command::Verify { graph, colouring } => cmd_verify(&graph, &colouring),
        Command::Bounds {
            g,
            h,
            exact,
            format,
            force,
            output,
        } => cmd_bounds(&g, &h, exact, format, force, output.as_deref()),
        Command::Sweep {
            max_order,
            format,
            force,
            output,
            resume,
            counterexample_dir,
        } => cmd_sweep(
            max_order,
            format,
            force,
            output.as_deref(),
            resume.as_deref(),
            counterexample_dir.as_deref(),
        ),
        Command::Check { graph, format } => cmd_check(&graph, format),
        Command::Choosable { graph, k, universe } => cmd_choosable(&graph, k, universe),
        Command::ThueWord { length } => {
            let w = thue_word(length);
            let text = if w.is_empty() {
                String::new()
            } else {
                format!("{w}\n")
            };
            Ok(Outcome::ok(text, json!({ "length": length })))
        }
        Command::VerifyWord { symbols } => cmd_verify_word(symbols),
        Command::Graph { graph, edges } => {
            let ng = NamedGraph::parse(&graph)?;
            let text = if edges {
                to_edge_list(&ng.graph)
            } else {
                format!("{}\n", to_graph6(&ng.graph))
            };
            Ok(Outcome::ok(text, json!({})))
        }
    }
}

fn cmd_pi(
    graph: &str,
    verify: bool,
    format: Format,
    force: bool,
    output: Option<&Path>,
) -> Result<Outcome, CliError> {
    let ng = NamedGraph::parse(graph)?;
    limits(force).check(&ng.name, ng.graph.n())?;
    let res = exact_pi(&ng.graph, None, None)?;
    let verified = if verify {
        let ok = verify_nonrepetitive(&ng.graph, &res.witness)?.is_none();
        if !ok {
            return Err(CliError::new(1, "solver witness failed verification"));
        }
        Some(ok)
    } else {
        None
    };
    let g6 = to_graph6(&ng.graph);
    let summary = json!({
        "graph": ng.name,
        "graph6": g6,
        "n": ng.graph.n(),
        "pi": res.pi,
        "colouring": ColouringRecord::new(&ng.graph, &res.witness),
        "verified": verified,
    });
    let text = match format {
        Format::Json => to_json(&summary),
        Format::Csv => {
            let colours = res
                .witness
                .colours()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let mut t = String::from("graph,graph6,n,pi,colours,verified\n");
            t += &csv_row(&[
                ng.name.clone(),
                g6,
                ng.graph.n().to_string(),
                res.pi.to_string(),
                colours,
                verified.map_or(String::new(), |v| v.to_string()),
            ]);
            t
        }
    };
    Ok(Outcome::ok(emit(text, output)?, summary))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ColouringFile {
    Record(ColouringRecord),
    Bare(Vec<u32>),
}

fn cmd_verify(graph: &str, path: &Path) -> Result<Outcome, CliError> {
    let ng = NamedGraph::parse(graph)?;
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let file: ColouringFile = serde_json::from_str(&text)
        .map_err(|e| CliError::new(2, format!("{}: not a colouring: {e}", path.display())))?;
    let colours = match file {
        ColouringFile::Record(rec) => {
            let g6 = to_graph6(&ng.graph);
            if rec.graph != g6 {
                return Err(CliError::new(
                    2,
                    format!("colouring is for graph `{}`, not `{g6}`", rec.graph),
                ));
            }
            rec.colours
        }
        ColouringFile::Bare(c) => c,
    };
    let colouring = Colouring::new(colours)?;
    let witness = verify_nonrepetitive(&ng.graph, &colouring)?;
    let summary = match &witness {
        None => json!({ "nonrepetitive": true }),
        Some(w) => json!({ "nonrepetitive": false, "witness": w }),
    };
    Ok(Outcome {
        stdout: to_json(&summary),
        status: if witness.is_some() { 1 } else { 0 },
        summary,
    })
}

fn cmd_bounds(
    g: &str,
    h: &str,
    exact: bool,
    format: Format,
    force: bool,
    output: Option<&Path>,
) -> Result<Outcome, CliError> {
    let (g, h) = (NamedGraph::parse(g)?, NamedGraph::parse(h)?);
    let cert = certify(&g, &h, exact, limits(force))?;
    let summary = serde_json::to_value(&cert).expect("certificate serializes");
    let text = match format {
        Format::Json => to_json(&summary),
        Format::Csv => {
            let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
            let mut t =
                String::from("g,h,g6_G,g6_H,alphaG,piG,piH,lower,upper,exact,closed_form\n");
            t += &csv_row(&[
                cert.g.clone(),
                cert.h.clone(),
                cert.g6_g.clone(),
                cert.g6_h.clone(),
                cert.alpha_g.to_string(),
                cert.pi_g.to_string(),
                cert.pi_h.to_string(),
                cert.lower_conjectured.to_string(),
                cert.upper_product.to_string(),
                opt(cert.exact),
                opt(cert.closed_form.map(|c| c.value)),
            ]);
            t
        }
    };
    Ok(Outcome::ok(emit(text, output)?, summary))
}

fn cmd_sweep(
    max_order: usize,
    format: Format,
    force: bool,
    output: Option<&Path>,
    resume: Option<&Path>,
    counterexample_dir: Option<&Path>,
) -> Result<Outcome, CliError> {
    if force && max_order > thuelab::bounds::SWEEP_MAX_ORDER {
        eprintln!("warning: sweep size guard lifted; runtime may be long");
    }
    let previous: Option<SweepReport> = resume
        .map(|p| {
            let text = fs::read_to_string(p).map_err(|e| CliError::io(p, e))?;
            serde_json::from_str(&text).map_err(|e| {
                CliError::new(2, format!("{}: not a JSON sweep report: {e}", p.display()))
            })
        })
        .transpose()?;
    let mut config = SweepConfig::with_default_pool(max_order);
    config.force = force;
    let report = sweep_conjecture(&config, previous.as_ref())?;

    let text = match format {
        Format::Csv => report.to_csv(),
        Format::Json => to_json(&report),
    };
    let stdout = emit(text, output)?;

    let dir = counterexample_dir
        .map(Path::to_path_buf)
        .or_else(|| output.and_then(Path::parent).map(Path::to_path_buf))
        .unwrap_or_default();
    let mut written = Vec::new();
    for (i, inst) in report.counterexample_instances().enumerate() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        }
        let path = dir.join(format!("counterexample_{i:03}.json"));
        fs::write(&path, to_json(&inst.certificate)).map_err(|e| CliError::io(&path, e))?;
        eprintln!(
            "counterexample: {} ∘ {} written to {}",
            inst.certificate.g,
            inst.certificate.h,
            path.display()
        );
        written.push(path.display().to_string());
    }

    let summary = json!({
        "max_order": max_order,
        "instances": report.instances.len(),
        "counterexamples": report.counterexamples,
        "counterexample_files": written,
    });
    Ok(Outcome {
        stdout,
        status: if report.counterexamples > 0 { 10 } else { 0 },
        summary,
    })
}

fn cmd_check(graph: &str, format: Format) -> Result<Outcome, CliError> {
    let ng = NamedGraph::parse(graph)?;
    let check = pi_check(&ng.graph)?;
    let summary = serde_json::to_value(&check).expect("check serializes");
    let text = match format {
        Format::Json => to_json(&summary),
        Format::Csv => {
            let mut t = String::from("graph,pi,n_minus_alpha_plus_1,multipartite,equal\n");
            t += &csv_row(&[
                ng.name,
                check.pi_exact.to_string(),
                check.upper_n_minus_alpha_plus_1.to_string(),
                check.is_multipartite.to_string(),
                check.equality_observed.to_string(),
            ]);
            t
        }
    };
    Ok(Outcome::ok(text, summary))
}

fn cmd_choosable(graph: &str, k: usize, universe: Option<usize>) -> Result<Outcome, CliError> {
    let ng = NamedGraph::parse(graph)?;
    let universe = universe.unwrap_or(k * ng.graph.n()).max(k);
    let summary = match check_choosable(&ng.graph, k, universe)? {
        Choosability::Choosable => json!({ "k": k, "universe": universe, "choosable": true }),
        Choosability::NotChoosable(lists) => {
            json!({ "k": k, "universe": universe, "choosable": false, "counterexample": lists })
        }
    };
    Ok(Outcome::ok(to_json(&summary), summary))
}

fn cmd_verify_word(symbols: Vec<Symbol>) -> Result<Outcome, CliError> {
    let symbols = if symbols.is_empty() {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::new(4, format!("stdin: {e}")))?;
        text.split_whitespace()
            .map(|t| {
                t.parse::<Symbol>()
                    .map_err(|_| CliError::new(2, format!("`{t}` is not a symbol")))
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        symbols
    };
    let word = Word::new(symbols);
    let rep = find_repetition(&word);
    let summary = match rep {
        None => json!({ "length": word.len(), "nonrepetitive": true }),
        Some(r) => json!({ "length": word.len(), "nonrepetitive": false, "repetition": r }),
    };
    Ok(Outcome {
        stdout: to_json(&summary),
        status: if rep.is_some() { 1 } else { 0 },
        summary,
    })
}
