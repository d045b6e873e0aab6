//! In-memory pipeline behind the subcommands.

use covtrack_core::barcode::{assemble, snapshot_weights, WeightedBarcode};
use covtrack_core::complex::{rips_from_adjacency, Chain, VertexId};
use covtrack_core::mobility::{adjacency, CoverageGrid, Trace};
use covtrack_core::repcycle::{guard, track, GuardReport, TrackedBarcode};
use covtrack_core::zigzag::{build_sequence, zigzag_persistence, PersistenceOutput, ZigzagSequence};
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::formats::{CoverageRow, Snapshots};

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "COVTRACK_THREADS";

/// Worker pool sized by `COVTRACK_THREADS`, or rayon's default when unset.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(n);
    }
    Ok(builder.build().expect("thread pool"))
}

/// Communication graphs of every snapshot of a trace.
pub fn snapshots_of(trace: &Trace) -> Snapshots {
    let graphs = (1..=trace.len()).into_par_iter().map(|t| adjacency(trace.at(t), trace.r())).collect();
    Snapshots { n: trace.n(), graphs }
}

pub fn rips_sequence(s: &Snapshots) -> Result<ZigzagSequence> {
    Ok(build_sequence(s.graphs.par_iter().map(rips_from_adjacency).collect())?)
}

/// Every stage of `analyze`, kept for inspection.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub sequence: ZigzagSequence,
    pub persistence: PersistenceOutput,
    pub tracked: TrackedBarcode,
    pub barcode: WeightedBarcode,
}

/// Rips complexes, zigzag intervals, representatives and hop-depth weights
/// capped at `m`.
pub fn analyze_full(s: &Snapshots, m: usize) -> Result<Analysis> {
    let sequence = rips_sequence(s)?;
    let persistence = zigzag_persistence(&sequence);
    let tracked = track(&sequence, &persistence)?;
    let per_t = (1..=sequence.len())
        .into_par_iter()
        .map(|t| snapshot_weights(&tracked, sequence.snapshot(t), t, m))
        .collect::<covtrack_core::Result<Vec<_>>>()?;
    let barcode = assemble(&tracked, sequence.len(), &per_t);
    Ok(Analysis { sequence, persistence, tracked, barcode })
}

/// Weighted barcode; representatives are kept only with `track_cycles`.
pub fn analyze(s: &Snapshots, m: usize, track_cycles: bool) -> Result<WeightedBarcode> {
    let mut wb = analyze_full(s, m)?.barcode;
    if !track_cycles {
        for bar in &mut wb.bars {
            bar.cycles = None;
        }
    }
    Ok(wb)
}

/// Coverage per snapshot on a `res × res` grid, with disks of radius `r`.
pub fn coverage_rows(trace: &Trace, r: f64, res: usize) -> Result<Vec<CoverageRow>> {
    let grids = (1..=trace.len())
        .into_par_iter()
        .map(|t| CoverageGrid::new(trace.at(t), r, res))
        .collect::<covtrack_core::Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(grids.len());
    let mut seen: Option<CoverageGrid> = None;
    for (k, grid) in grids.iter().enumerate() {
        match seen.as_mut() {
            Some(s) => s.union_with(grid),
            None => seen = Some(grid.clone()),
        }
        let c = grid.coverage();
        rows.push(CoverageRow {
            t: k + 1,
            proportion_covered: c.proportion_covered,
            hole_area: c.hole_area,
            interval_coverage: seen.as_ref().expect("set").proportion_covered(),
        });
    }
    Ok(rows)
}

/// Follows the polygon `ring` (vertex ids) through the snapshots.
pub fn guard_ring(s: &Snapshots, ring: &[u32]) -> Result<GuardReport> {
    let sequence = rips_sequence(s)?;
    let vertices: Vec<VertexId> = ring.iter().map(|&v| VertexId(v)).collect();
    if let Some(&v) = ring.iter().find(|&&v| v == 0 || v as usize > s.n) {
        return Err(covtrack_core::Error::VertexOutOfRange { vertex: v, n: s.n }.into());
    }
    Ok(guard(&sequence, &Chain::polygon(&vertices)?)?)
}
