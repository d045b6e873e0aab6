//! Command-line surface.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use covtrack_core::barcode::BarcodeStats;
use covtrack_core::mobility::{simulate, MobilityParams, Model, DEFAULT_GRID, RNG_NAME};
use serde::Serialize;

use crate::config::{write_config, RunConfig};
use crate::error::{CliError, Result};
use crate::formats::{
    barcode_from_json, barcode_to_json, coverage_to_csv, guard_to_json, parse_snapshots, parse_trace, stats_to_csv,
    write_snapshots, write_trace, GuardDoc,
};
use crate::io::{read_to_string, write_atomic};
use crate::pipeline::{analyze, coverage_rows, guard_ring, snapshots_of, thread_pool};
use crate::svg::{render_barcode, render_diagram, Style};

#[derive(Debug, Parser)]
#[command(name = "covtrack", version, about = "Track coverage holes of mobile sensor networks through time")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate sensor motion on the unit square and write a trace TSV.
    Simulate(SimulateArgs),
    /// Turn a trace into per-snapshot communication graphs.
    Snapshots(SnapshotsArgs),
    /// Compute the weighted zigzag barcode of a snapshot file.
    Analyze(AnalyzeArgs),
    /// Summary statistics of a barcode as CSV.
    Stats(StatsArgs),
    /// Draw a barcode (and optionally its persistence diagram) as SVG.
    Render(RenderArgs),
    /// Grid coverage, hole area and interval coverage of a trace.
    Coverage(CoverageArgs),
    /// Follow a guard ring through the snapshots and report when it breaks.
    Guard(GuardArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelArg {
    Brownian,
    Line,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::Brownian)]
    pub model: ModelArg,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Number of snapshots.
    #[arg(long = "T", default_value_t = 50)]
    #[serde(rename = "T")]
    pub steps: usize,
    /// Sensing radius; nodes within 2r communicate.
    #[arg(long, default_value_t = 0.1)]
    pub r: f64,
    /// Per-axis step (or velocity) standard deviation, as a multiple of r.
    #[arg(long, default_value_t = 0.1)]
    pub sigma_scale: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct SnapshotsArgs {
    #[arg(long)]
    pub trace: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub snapshots: PathBuf,
    /// Cap on the hop depth used as bar weight.
    #[arg(long, default_value_t = 3)]
    pub max_hop_depth: usize,
    /// Store the representative cycle of every bar at every snapshot.
    #[arg(long)]
    pub track_cycles: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct StatsArgs {
    #[arg(long)]
    pub barcode: PathBuf,
    /// Horizon for the lifetime counts; defaults to the barcode's `T`.
    #[arg(long = "T")]
    #[serde(rename = "T")]
    pub horizon: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct RenderArgs {
    #[arg(long)]
    pub barcode: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Also write the persistence diagram here.
    #[arg(long)]
    pub diagram: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct CoverageArgs {
    #[arg(long)]
    pub trace: PathBuf,
    /// Sensing radius; defaults to the trace's `r`.
    #[arg(long)]
    pub r: Option<f64>,
    /// Grid cells per side.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct GuardArgs {
    #[arg(long)]
    pub snapshots: PathBuf,
    /// Ring of vertex ids, e.g. "1,2,3,4".
    #[arg(long)]
    pub initial_cycle: String,
    #[arg(long)]
    pub out: PathBuf,
}

fn source(path: &Path) -> String {
    path.display().to_string()
}

fn emit(out: &Path, text: &str, cfg: &RunConfig) -> Result<()> {
    write_atomic(out, text.as_bytes())?;
    write_config(out, cfg)
}

fn parse_ring(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|v| v.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("bad vertex `{v}` in --initial-cycle"))))
        .collect()
}

pub fn run(cli: &Cli) -> Result<()> {
    thread_pool()?.install(|| match &cli.command {
        Command::Simulate(a) => {
            let model = match a.model {
                ModelArg::Brownian => Model::Brownian,
                ModelArg::Line => Model::Line,
            };
            let mut params = MobilityParams::new(model, a.n, a.steps, a.r, a.seed);
            params.sigma = a.sigma_scale * a.r;
            let trace = simulate(&params)?;
            let mut cfg = RunConfig::new("simulate", a);
            cfg.rng = Some(RNG_NAME.to_owned());
            cfg.seed = Some(a.seed);
            if let serde_json::Value::Object(map) = &mut cfg.args {
                map.insert("sigma_per_axis".into(), params.sigma.into());
            }
            emit(&a.out, &write_trace(&trace), &cfg)
        }
        Command::Snapshots(a) => {
            let trace = parse_trace(&read_to_string(&a.trace)?, &source(&a.trace))?;
            let text = write_snapshots(&snapshots_of(&trace));
            emit(&a.out, &text, &RunConfig::new("snapshots", a))
        }
        Command::Analyze(a) => {
            let snaps = parse_snapshots(&read_to_string(&a.snapshots)?, &source(&a.snapshots))?;
            let wb = analyze(&snaps, a.max_hop_depth, a.track_cycles)?;
            emit(&a.out, &barcode_to_json(&wb), &RunConfig::new("analyze", a))
        }
        Command::Stats(a) => {
            let wb = barcode_from_json(&read_to_string(&a.barcode)?, &source(&a.barcode))?;
            let stats = BarcodeStats::from_intervals(&wb.intervals(), a.horizon.unwrap_or(wb.horizon))?;
            emit(&a.out, &stats_to_csv(&stats), &RunConfig::new("stats", a))
        }
        Command::Render(a) => {
            let wb = barcode_from_json(&read_to_string(&a.barcode)?, &source(&a.barcode))?;
            let style = Style::default();
            let cfg = RunConfig::new("render", a);
            emit(&a.out, &render_barcode(&wb, &style), &cfg)?;
            match &a.diagram {
                Some(d) => emit(d, &render_diagram(&wb.intervals(), wb.horizon, &style), &cfg),
                None => Ok(()),
            }
        }
        Command::Coverage(a) => {
            let trace = parse_trace(&read_to_string(&a.trace)?, &source(&a.trace))?;
            let rows = coverage_rows(&trace, a.r.unwrap_or(trace.r()), a.grid)?;
            emit(&a.out, &coverage_to_csv(&rows), &RunConfig::new("coverage", a))
        }
        Command::Guard(a) => {
            let ring = parse_ring(&a.initial_cycle)?;
            let snaps = parse_snapshots(&read_to_string(&a.snapshots)?, &source(&a.snapshots))?;
            let report = guard_ring(&snaps, &ring)?;
            emit(&a.out, &guard_to_json(&GuardDoc::from_report(&report)), &RunConfig::new("guard", a))
        }
    })
}
