//! Representative cycles for every bar at every snapshot it is alive.
//!
//! Representatives come out of the same sweep that computes the intervals:
//! each alive class carries a cycle that is rewritten whenever the basis
//! changes, and the per-snapshot copies are tightened greedily. A class born
//! by deleting a triangle starts as that triangle's boundary.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::complex::{is_boundary, Chain, Simplex, SimplicialComplex};
use crate::gf2::Reducer;
use crate::zigzag::{run, shrink_cycle, CofaceIndex, Interval, PersistenceOutput, ZigzagSequence};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedBar {
    pub interval: Interval,
    /// Cycle created at the birth step. For a class opened by deleting a
    /// triangle this is the triangle's boundary.
    pub birth_cycle: Chain,
    /// Representative in `K_t` for `t = birth..=death`.
    pub cycles: Vec<Chain>,
}

impl TrackedBar {
    /// Representative at snapshot `t`, if the bar is alive there.
    pub fn cycle_at(&self, t: usize) -> Option<&Chain> {
        if self.interval.contains(t) {
            self.cycles.get(t - self.interval.birth)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrackedBarcode {
    pub bars: Vec<TrackedBar>,
}

impl TrackedBarcode {
    /// Representatives of the bars alive at `t`.
    pub fn alive_cycles(&self, t: usize) -> Vec<&Chain> {
        self.bars.iter().filter_map(|b| b.cycle_at(t)).collect()
    }
}

/// Attaches representatives to the intervals of `pers`, which must have been
/// computed from `seq`.
pub fn track(seq: &ZigzagSequence, pers: &PersistenceOutput) -> Result<TrackedBarcode> {
    let out = run(seq, true);
    if out.persistence != *pers {
        return Err(Error::TraceMismatch);
    }
    let mut bars = Vec::with_capacity(pers.intervals.len());
    for (iv, &class) in pers.intervals.iter().zip(&pers.classes) {
        let bar = &out.bars[class];
        let cycles: Vec<Chain> = bar
            .history
            .iter()
            .filter(|(t, _)| iv.contains(*t))
            .map(|(_, c)| c.clone())
            .collect();
        if cycles.len() != iv.lifetime() {
            return Err(Error::TraceMismatch);
        }
        bars.push(TrackedBar { interval: *iv, birth_cycle: bar.birth_cycle.clone(), cycles });
    }
    Ok(TrackedBarcode { bars })
}

/// Carries the class of `c` from the union `u` into `next`.
///
/// Returns a cycle of `next` homologous to `c` in `u`, or `None` when the
/// class has no preimage in `next` (the bar dies at this arrow).
pub fn repair_cycle(c: &Chain, next: &SimplicialComplex, u: &SimplicialComplex) -> Result<Option<Chain>> {
    if is_boundary(c, u)? {
        return Ok(None);
    }
    if c.is_supported_in(next) {
        return Ok(Some(c.clone()));
    }
    // Only triangles touching a missing edge can change c on those edges.
    let missing: Vec<Simplex> = u.edges().iter().filter(|e| !next.contains(e)).copied().collect();
    let row = |e: &Simplex| missing.binary_search(e).ok().map(|i| i as u32);
    let tris: Vec<Simplex> = u
        .triangles()
        .iter()
        .filter(|t| t.faces().any(|f| row(&f).is_some()))
        .copied()
        .collect();
    let mut reducer = Reducer::new(missing.len(), true);
    for (i, t) in tris.iter().enumerate() {
        let mut col: Vec<u32> = t.faces().filter_map(|f| row(&f)).collect();
        col.sort_unstable();
        reducer.insert(col, Some(i as u32));
    }
    let mut target: Vec<u32> = c.iter().filter_map(row).collect();
    target.sort_unstable();
    let (rem, combo) = reducer.reduce(target, Vec::new());
    if !rem.is_empty() {
        return Ok(None);
    }
    let mut out = c.clone();
    for i in combo {
        for f in tris[i as usize].faces() {
            out.toggle(f);
        }
    }
    debug_assert!(out.is_supported_in(next));
    let index = CofaceIndex::new(next);
    shrink_cycle(&mut out, |e| index.cofaces(e));
    Ok(Some(out))
}

/// Outcome of following a guard ring through the snapshots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardReport {
    /// `alive[t - 1]`: whether the ring's class is still unbroken at `t`.
    pub alive: Vec<bool>,
    /// First snapshot at which the ring is broken.
    pub break_time: Option<usize>,
    /// Continued ring at each snapshot up to the break.
    pub cycles: Vec<Chain>,
}

/// Follows the class of `initial` (a nontrivial cycle of `K_1`) forward.
/// Once broken it stays broken.
pub fn guard(seq: &ZigzagSequence, initial: &Chain) -> Result<GuardReport> {
    let first = seq.snapshot(1);
    if initial.is_zero() {
        return Err(Error::TrivialCycle);
    }
    if is_boundary(initial, first)? {
        return Err(Error::TrivialCycle);
    }
    let mut cycles = alloc::vec![initial.clone()];
    let mut break_time = None;
    for t in 1..seq.len() {
        let cur = cycles.last().expect("nonempty");
        match repair_cycle(cur, seq.snapshot(t + 1), seq.union(t))? {
            Some(next) => cycles.push(next),
            None => {
                break_time = Some(t + 1);
                break;
            }
        }
    }
    let alive = (1..=seq.len()).map(|t| t <= cycles.len()).collect();
    Ok(GuardReport { alive, break_time, cycles })
}

/// Vertices on the representatives alive at `t`, for plotting.
pub fn support_at(barcode: &TrackedBarcode, t: usize) -> BTreeSet<u32> {
    barcode.alive_cycles(t).iter().flat_map(|c| c.support_vertices()).map(|v| v.0).collect()
}
