//! `circsep build | query | bench`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use circsep_core::engine::{Engine, QueryResult, QueryShape};
use circsep_core::fpvd::FpvdTree;
use circsep_core::Point;
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::bench::{run_bench, text_table, BenchConfig};
use crate::error::CliError;
use crate::instance::InstanceFile;
use crate::record::{oracle_check, ResultRecord};
use crate::snapshot::Snapshot;
use crate::svg;

#[derive(Debug, Parser)]
#[command(name = "circsep", version, about = "Minimum separating circle queries")]
pub struct Cli {
    /// Seed for every randomized step (enclosing circle, triangulation
    /// order, benchmark sampling).
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Preprocess the points of an instance file into a snapshot.
    Build { input: PathBuf, snapshot: PathBuf },
    /// Answer the queries of an instance file against a snapshot.
    Query {
        snapshot: PathBuf,
        queries: PathBuf,
        /// Also run the brute-force oracle and report agreement.
        #[arg(long)]
        oracle: bool,
        /// Write one SVG figure per query into this directory.
        #[arg(long, value_name = "DIR")]
        svg: Option<PathBuf>,
    },
    /// Step-count and throughput sweep; JSON on stdout, a text table on stderr.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [1024usize, 4096, 16384])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [64usize])]
        m: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        queries: usize,
    },
}

#[derive(Serialize)]
struct BuildStats {
    n: usize,
    h: usize,
    nodes: usize,
    build_ms: f64,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// Builds the diagram for the points of an instance file.
pub fn build_tree(inst: &InstanceFile, seed: u64) -> Result<FpvdTree, CliError> {
    let points = inst.points();
    FpvdTree::build_seeded(&points, seed).map_err(|e| match e {
        circsep_core::Error::TooFewPoints | circsep_core::Error::EmptyInput | circsep_core::Error::Degenerate => {
            CliError::Degenerate(format!("{e} ({} points given)", points.len()))
        }
        other => CliError::parse("points", other),
    })
}

pub fn cmd_build(input: &Path, snapshot: &Path, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let inst = InstanceFile::parse(&read(input)?)?;
    let start = Instant::now();
    let tree = build_tree(&inst, seed)?;
    let build_ms = start.elapsed().as_secs_f64() * 1e3;
    let stats = BuildStats {
        n: tree.distinct_points,
        h: tree.site_count(),
        nodes: tree.node_count(),
        build_ms,
    };
    write(snapshot, &Snapshot::new(tree, seed).to_json())?;
    writeln!(out, "{}", serde_json::to_string(&stats).unwrap()).map_err(|e| CliError::io("<stdout>", e))
}

/// Answers every query in parallel; records come back in input order.
pub fn answer_all(engine: &Engine, shapes: &[QueryShape], oracle: bool) -> Vec<(QueryResult, ResultRecord)> {
    shapes
        .par_iter()
        .enumerate()
        .map(|(i, q)| {
            let start = Instant::now();
            let result = engine.query(q);
            let ns = start.elapsed().as_nanos() as u64;
            let mut rec = ResultRecord::new(i, &result, ns);
            if oracle {
                rec.oracle = Some(oracle_check(&engine.tree().sites, q, &result));
            }
            (result, rec)
        })
        .collect()
}

pub fn cmd_query(
    snapshot: &Path,
    queries: &Path,
    oracle: bool,
    svg_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let snap = Snapshot::parse(&read(snapshot)?)?;
    let inst = InstanceFile::parse(&read(queries)?)?;
    let shapes = inst.shapes()?;
    let engine = Engine::new(snap.tree);
    let answers = answer_all(&engine, &shapes, oracle);
    let io = |e| CliError::io("<stdout>", e);
    for (_, rec) in &answers {
        writeln!(out, "{}", serde_json::to_string(rec).unwrap()).map_err(io)?;
    }
    if let Some(dir) = svg_dir {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        // Input points when the query file carries them, else the hull.
        let points: Vec<Point> = if inst.points.is_empty() {
            engine.tree().sites.clone()
        } else {
            inst.points()
        };
        for (i, ((result, _), q)) in answers.iter().zip(&shapes).enumerate() {
            let figure = svg::render(&points, &engine.tree().sites, q, result);
            write(&dir.join(format!("query_{i:05}.svg")), &figure)?;
        }
    }
    Ok(())
}

pub fn cmd_bench(cfg: &BenchConfig, out: &mut dyn Write, log: &mut dyn Write) -> Result<(), CliError> {
    let cells = run_bench(cfg);
    let io = |e| CliError::io("<stdout>", e);
    writeln!(out, "{}", serde_json::to_string_pretty(&cells).unwrap()).map_err(io)?;
    write!(log, "{}", text_table(&cells)).map_err(io)
}

/// Runs the tool on `args` and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Build { input, snapshot } => cmd_build(input, snapshot, cli.seed, &mut out),
        Command::Query {
            snapshot,
            queries,
            oracle,
            svg,
        } => cmd_query(snapshot, queries, *oracle, svg.as_deref(), &mut out),
        Command::Bench { n, m, queries } => {
            let cfg = BenchConfig {
                ns: n.clone(),
                ms: m.clone(),
                queries: *queries,
                seed: cli.seed,
            };
            cmd_bench(&cfg, &mut out, &mut std::io::stderr())
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
