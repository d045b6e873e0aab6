//! Barcodes, per-snapshot hop-depth weights and summary statistics.

use alloc::vec::Vec;

use crate::complex::{Chain, SimplicialComplex};
use crate::hopfilt::hop_filtration;
use crate::repcycle::TrackedBarcode;
use crate::zigzag::{Interval, PersistenceOutput, ZigzagSequence};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBar {
    pub interval: Interval,
    /// Depth of the representative at `birth + k`, when weighted.
    pub weights: Option<Vec<usize>>,
    /// Representative at `birth + k`, when tracked.
    pub cycles: Option<Vec<Chain>>,
}

impl WeightedBar {
    pub fn plain(interval: Interval) -> Self {
        WeightedBar { interval, weights: None, cycles: None }
    }

    pub fn weight_at(&self, t: usize) -> Option<usize> {
        if !self.interval.contains(t) {
            return None;
        }
        self.weights.as_ref()?.get(t - self.interval.birth).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBarcode {
    /// Number of snapshots `T`.
    pub horizon: usize,
    pub bars: Vec<WeightedBar>,
}

impl WeightedBarcode {
    pub fn from_intervals(horizon: usize, intervals: &[Interval]) -> Self {
        WeightedBarcode { horizon, bars: intervals.iter().map(|&iv| WeightedBar::plain(iv)).collect() }
    }

    pub fn intervals(&self) -> Vec<Interval> {
        self.bars.iter().map(|b| b.interval).collect()
    }
}

/// Depths, at snapshot `t` with complex `k`, of the representatives of the
/// bars alive there, as `(bar index, depth)` pairs.
pub fn snapshot_weights(
    tracked: &TrackedBarcode,
    k: &SimplicialComplex,
    t: usize,
    m: usize,
) -> Result<Vec<(usize, usize)>> {
    let alive: Vec<(usize, Chain)> = tracked
        .bars
        .iter()
        .enumerate()
        .filter_map(|(i, b)| b.cycle_at(t).map(|c| (i, c.clone())))
        .collect();
    if alive.is_empty() {
        return Ok(Vec::new());
    }
    let f = hop_filtration(k, m)?;
    let cycles: Vec<Chain> = alive.iter().map(|(_, c)| c.clone()).collect();
    let depths = f.cycle_depths(&cycles)?;
    Ok(alive.into_iter().map(|(i, _)| i).zip(depths).collect())
}

/// Weights every tracked bar by the hop depth of its representative at each
/// snapshot, capped at `m`.
pub fn weight_bars(tracked: &TrackedBarcode, seq: &ZigzagSequence, m: usize) -> Result<WeightedBarcode> {
    let per_t = (1..=seq.len())
        .map(|t| snapshot_weights(tracked, seq.snapshot(t), t, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(tracked, seq.len(), &per_t))
}

/// Builds the weighted barcode from per-snapshot weights (`per_t[t - 1]`).
pub fn assemble(tracked: &TrackedBarcode, horizon: usize, per_t: &[Vec<(usize, usize)>]) -> WeightedBarcode {
    let mut weights: Vec<Vec<usize>> =
        tracked.bars.iter().map(|b| alloc::vec![0; b.interval.lifetime()]).collect();
    for (t0, entries) in per_t.iter().enumerate() {
        for &(i, d) in entries {
            weights[i][t0 + 1 - tracked.bars[i].interval.birth] = d;
        }
    }
    let bars = tracked
        .bars
        .iter()
        .zip(weights)
        .map(|(b, w)| WeightedBar { interval: b.interval, weights: Some(w), cycles: Some(b.cycles.clone()) })
        .collect();
    WeightedBarcode { horizon, bars }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarcodeStats {
    pub num_bars: usize,
    /// `Σ (d - b)`.
    pub sum_of_bars: usize,
    /// `lt_counts[l - 1]` bars have lifetime `d - b + 1 = l`, `l = 1..=T`.
    pub lt_counts: Vec<usize>,
}

impl BarcodeStats {
    pub fn from_intervals(intervals: &[Interval], horizon: usize) -> Result<Self> {
        let mut lt_counts = alloc::vec![0; horizon];
        for iv in intervals {
            if iv.death > horizon {
                return Err(Error::SnapshotOutOfRange { t: iv.death, len: horizon });
            }
            lt_counts[iv.lifetime() - 1] += 1;
        }
        Ok(BarcodeStats {
            num_bars: intervals.len(),
            sum_of_bars: intervals.iter().map(Interval::length).sum(),
            lt_counts,
        })
    }
}

pub fn stats(pers: &PersistenceOutput, horizon: usize) -> Result<BarcodeStats> {
    BarcodeStats::from_intervals(&pers.intervals, horizon)
}
