//! Zigzag persistence of first homology through union complexes.
//!
//! A sequence of snapshots `K_1, ..., K_T` is joined by unions
//! `U_i = K_i ∪ K_{i+1}`, giving the diagram
//! `K_1 → U_1 ← K_2 → U_2 ← ... ← K_T`. Its H1 module splits uniquely into
//! intervals, reported here in snapshot indices `1..=T`.

use alloc::vec::Vec;

use crate::complex::{union_complex, Simplex, SimplicialComplex};
use crate::{Error, Result};

mod engine;
mod live;

pub(crate) use engine::run;
pub(crate) use live::{shrink_cycle, CofaceIndex};

/// Snapshots together with the union complexes between consecutive ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagSequence {
    snapshots: Vec<SimplicialComplex>,
    unions: Vec<SimplicialComplex>,
}

impl ZigzagSequence {
    /// Number of snapshots `T`.
    pub fn len(&self) -> usize {
        self.snapshots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshots.is_empty()
    }

    pub fn n(&self) -> usize {
        self.snapshots[0].n()
    }

    pub fn snapshots(&self) -> &[SimplicialComplex] {
        &self.snapshots
    }

    pub fn unions(&self) -> &[SimplicialComplex] {
        &self.unions
    }

    /// Snapshot `K_t`, 1-based.
    pub fn snapshot(&self, t: usize) -> &SimplicialComplex {
        &self.snapshots[t - 1]
    }

    /// Union `U_i = K_i ∪ K_{i+1}`, 1-based, `i < T`.
    pub fn union(&self, i: usize) -> &SimplicialComplex {
        &self.unions[i - 1]
    }
}

pub fn build_sequence(snapshots: Vec<SimplicialComplex>) -> Result<ZigzagSequence> {
    let Some(first) = snapshots.first() else {
        return Err(Error::EmptySequence);
    };
    let n = first.n();
    if let Some(bad) = snapshots.iter().find(|k| k.n() != n) {
        return Err(Error::VertexCountMismatch { expected: n, found: bad.n() });
    }
    let unions = snapshots
        .windows(2)
        .map(|w| union_complex(&w[0], &w[1]))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZigzagSequence { snapshots, unions })
}

/// Closed interval of snapshot indices on which a class is nontrivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub birth: usize,
    pub death: usize,
}

impl Interval {
    pub fn new(birth: usize, death: usize) -> Self {
        debug_assert!(1 <= birth && birth <= death);
        Interval { birth, death }
    }

    pub fn contains(&self, t: usize) -> bool {
        self.birth <= t && t <= self.death
    }

    /// Number of snapshots covered, `d - b + 1`.
    pub fn lifetime(&self) -> usize {
        self.death - self.birth + 1
    }

    /// `d - b`.
    pub fn length(&self) -> usize {
        self.death - self.birth
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Insert,
    Delete,
}

/// Which arrow of the diagram a step belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Segment {
    /// `K_i → U_i`
    IntoUnion(usize),
    /// `U_i ← K_{i+1}`, walked from `U_i` down to `K_{i+1}`.
    OutOfUnion(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScheduleStep {
    pub direction: Direction,
    pub simplex: Simplex,
    pub segment: Segment,
}

/// Single-simplex steps that walk `K_1 → U_1 → K_2 → ... → K_T`.
///
/// Insertions go vertices, edges, triangles; deletions go triangles, edges,
/// vertices; lexicographic within a dimension. Every intermediate simplex set
/// is a complex.
pub fn elementary_schedule(seq: &ZigzagSequence) -> Vec<ScheduleStep> {
    let mut steps = Vec::new();
    for i in 1..seq.len() {
        let (k, u, next) = (seq.snapshot(i), seq.union(i), seq.snapshot(i + 1));
        for dim in 0..=2 {
            for s in u.simplices_of_dim(dim).iter().filter(|s| !k.contains(s)) {
                steps.push(ScheduleStep {
                    direction: Direction::Insert,
                    simplex: *s,
                    segment: Segment::IntoUnion(i),
                });
            }
        }
        for dim in (0..=2).rev() {
            for s in u.simplices_of_dim(dim).iter().filter(|s| !next.contains(s)) {
                steps.push(ScheduleStep {
                    direction: Direction::Delete,
                    simplex: *s,
                    segment: Segment::OutOfUnion(i),
                });
            }
        }
    }
    steps
}

/// Identifier of an elementary class (including ones later discarded because
/// they never reach a snapshot).
pub type ClassId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceEvent {
    Birth(ClassId),
    Death(ClassId),
}

/// One elementary step and the H1 event it caused, if any. `position` counts
/// steps from `K_1` (position 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceEntry {
    pub step: ScheduleStep,
    pub position: usize,
    pub event: Option<TraceEvent>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistenceOutput {
    /// Sorted by `(birth, death)`, then by class id.
    pub intervals: Vec<Interval>,
    /// Elementary class behind each interval.
    pub classes: Vec<ClassId>,
    pub trace: Vec<TraceEntry>,
    /// Number of snapshots `T`.
    pub num_snapshots: usize,
}

impl PersistenceOutput {
    /// Number of intervals containing snapshot `t`.
    pub fn alive_at(&self, t: usize) -> usize {
        self.intervals.iter().filter(|iv| iv.contains(t)).count()
    }
}

/// Interval decomposition of the H1 zigzag module.
///
/// Classes that are nontrivial in no snapshot are dropped; a class born inside
/// `U_i` that survives into `K_{i+1}` starts at `i + 1`, one dying inside `U_i`
/// ends at `i`.
pub fn zigzag_persistence(seq: &ZigzagSequence) -> PersistenceOutput {
    run(seq, false).persistence
}
