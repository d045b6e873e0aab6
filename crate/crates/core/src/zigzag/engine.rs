//! Single-simplex zigzag sweep.
//!
//! The sweep keeps a basis of H1 of the current complex, one cycle per alive
//! class. Each class remembers where it was born and whether it was born at a
//! forward arrow (edge insertion closing a loop) or a backward arrow (triangle
//! deletion opening a hole). Basis changes are restricted to the ones that
//! are automorphisms of the interval decomposition seen so far: a class may
//! absorb another when it *dominates* it, where forward-born classes dominate
//! backward-born ones, later forward births dominate earlier ones and earlier
//! backward births dominate later ones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::live::{shrink_cycle, CofaceIndex, Live};
use super::{
    elementary_schedule, ClassId, Direction, Interval, PersistenceOutput, ScheduleStep, Segment,
    TraceEntry, TraceEvent, ZigzagSequence,
};
use crate::complex::{BoundarySolver, Chain, Simplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum BirthKind {
    Forward,
    Backward,
}

#[derive(Debug, Clone)]
pub(crate) struct EngineBar {
    pub(crate) birth_pos: usize,
    pub(crate) kind: BirthKind,
    pub(crate) death_pos: Option<usize>,
    pub(crate) birth_cycle: Chain,
    /// `(snapshot, representative)` in increasing snapshot order. Only
    /// filled when tracking.
    pub(crate) history: Vec<(usize, Chain)>,
}

pub(crate) struct EngineOutput {
    pub(crate) persistence: PersistenceOutput,
    pub(crate) bars: Vec<EngineBar>,
}

struct Engine<'a> {
    seq: &'a ZigzagSequence,
    track: bool,
    live: Live,
    bars: Vec<EngineBar>,
    active: BTreeMap<ClassId, Chain>,
    trace: Vec<TraceEntry>,
    pos: usize,
    snapshot_pos: Vec<usize>,
    cofaces: Vec<Option<CofaceIndex>>,
}

pub(crate) fn run(seq: &ZigzagSequence, track: bool) -> EngineOutput {
    let schedule = elementary_schedule(seq);
    let mut eng = Engine {
        seq,
        track,
        live: Live::from_complex(seq.snapshot(1)),
        bars: Vec::new(),
        active: BTreeMap::new(),
        trace: Vec::with_capacity(schedule.len()),
        pos: 0,
        snapshot_pos: Vec::with_capacity(seq.len()),
        cofaces: (0..seq.len()).map(|_| None).collect(),
    };
    eng.initial_basis();
    eng.record_snapshot(1);
    let mut rest = &schedule[..];
    for i in 1..seq.len() {
        let split = rest.iter().take_while(|s| s.segment == Segment::IntoUnion(i)).count();
        let (ins, tail) = rest.split_at(split);
        eng.insertion_phase(ins);
        let split = tail.iter().take_while(|s| s.segment == Segment::OutOfUnion(i)).count();
        let (del, tail) = tail.split_at(split);
        eng.deletion_phase(del);
        rest = tail;
        eng.record_snapshot(i + 1);
    }
    debug_assert!(rest.is_empty());
    eng.finish()
}

impl Engine<'_> {
    /// Key whose maximum dominates: see the module docs.
    fn rank(&self, id: ClassId) -> (u8, i64, usize) {
        let bar = &self.bars[id];
        match bar.kind {
            BirthKind::Forward => (1, bar.birth_pos as i64, id),
            BirthKind::Backward => (0, -(bar.birth_pos as i64), id),
        }
    }

    fn new_class(&mut self, kind: BirthKind, cycle: Chain) -> ClassId {
        let id = self.bars.len();
        self.bars.push(EngineBar {
            birth_pos: self.pos,
            kind,
            death_pos: None,
            birth_cycle: cycle.clone(),
            history: Vec::new(),
        });
        self.active.insert(id, cycle);
        id
    }

    fn push_step(&mut self, step: &ScheduleStep) -> usize {
        self.pos += 1;
        self.trace.push(TraceEntry { step: *step, position: self.pos, event: None });
        self.trace.len() - 1
    }

    /// Every class of `K_1` is born together at position 0.
    fn initial_basis(&mut self) {
        let mut solver = self.live.solver(true, &BTreeSet::new());
        let beta = solver.betti1();
        if beta == 0 {
            return;
        }
        let mut found = 0;
        let edges: Vec<Simplex> = self.live.edges().collect();
        let short = edges.iter().filter_map(|e| self.live.cycle_through(e));
        let candidates: Vec<Chain> = short.chain(self.live.fundamental_cycles()).collect();
        for c in candidates {
            if found == beta {
                break;
            }
            let id = self.bars.len() as u32;
            if solver.add_tagged_cycle(&c, id) {
                self.new_class(BirthKind::Forward, c);
                found += 1;
            }
        }
        debug_assert_eq!(found, beta);
    }

    fn insertion_phase(&mut self, steps: &[ScheduleStep]) {
        let mut solver: Option<BoundarySolver> = None;
        for step in steps {
            let s = step.simplex;
            let at = self.push_step(step);
            match s.dim() {
                0 => self.live.insert(&s),
                1 => {
                    debug_assert!(solver.is_none(), "edges are inserted before triangles");
                    let cycle = self.live.cycle_through(&s);
                    self.live.insert(&s);
                    if let Some(c) = cycle {
                        let id = self.new_class(BirthKind::Forward, c);
                        self.trace[at].event = Some(TraceEvent::Birth(id));
                    }
                }
                _ => {
                    let killed = if self.live.has_cone(&s) {
                        Vec::new()
                    } else {
                        let solver = solver.get_or_insert_with(|| {
                            let mut sv = self.live.solver(true, &BTreeSet::new());
                            for (&id, c) in &self.active {
                                let fresh = sv.add_tagged_cycle(c, id as u32);
                                debug_assert!(fresh);
                            }
                            sv
                        });
                        let (rem, combo) = solver.reduce_cycle(&s_boundary(&s));
                        debug_assert!(rem.is_empty(), "basis spans H1");
                        combo
                    };
                    self.live.insert(&s);
                    if !killed.is_empty() {
                        let dying = *killed
                            .iter()
                            .max_by_key(|&&id| self.rank(id as usize))
                            .expect("nonempty") as usize;
                        if let Some(sv) = solver.as_mut() {
                            sv.substitute_tag(dying as u32, &killed);
                        }
                        for &other in &killed {
                            if other as usize != dying {
                                self.absorb_history(dying, other as usize);
                            }
                        }
                        self.kill(dying, at);
                    }
                }
            }
        }
    }

    fn deletion_phase(&mut self, steps: &[ScheduleStep]) {
        let tris: Vec<Simplex> =
            steps.iter().map(|s| s.simplex).filter(|s| s.dim() == 2).collect();
        // Deleting tris[k] opens a class iff its boundary does not bound in
        // the complex left after deleting tris[..=k]; walk backwards from the
        // fully deleted state re-adding triangles.
        let mut opens = alloc::vec![false; tris.len()];
        if !tris.is_empty() {
            let skip: BTreeSet<Simplex> = tris.iter().copied().collect();
            let mut solver = self.live.solver(false, &skip);
            for (k, t) in tris.iter().enumerate().rev() {
                opens[k] = !solver.is_boundary(&s_boundary(t));
                solver.add_triangle(t);
            }
        }
        let mut k = 0;
        for step in steps {
            debug_assert_eq!(step.direction, Direction::Delete);
            let s = step.simplex;
            let at = self.push_step(step);
            self.live.remove(&s);
            match s.dim() {
                2 => {
                    if opens[k] {
                        let id = self.new_class(BirthKind::Backward, s_boundary(&s));
                        self.trace[at].event = Some(TraceEvent::Birth(id));
                    }
                    k += 1;
                }
                1 => {
                    let using: Vec<ClassId> = self
                        .active
                        .iter()
                        .filter(|(_, c)| c.contains(&s))
                        .map(|(&id, _)| id)
                        .collect();
                    if let Some(&dying) = using.iter().min_by_key(|&&id| self.rank(id)) {
                        let dying_cycle = self.active[&dying].clone();
                        for &other in using.iter().filter(|&&id| id != dying) {
                            *self.active.get_mut(&other).expect("active") += &dying_cycle;
                            self.absorb_history(other, dying);
                        }
                        self.kill(dying, at);
                    }
                }
                _ => {}
            }
        }
    }

    fn kill(&mut self, id: ClassId, at: usize) {
        self.bars[id].death_pos = Some(self.pos - 1);
        self.active.remove(&id);
        self.trace[at].event = Some(TraceEvent::Death(id));
    }

    /// Retroactively replaces the generator of `into` by `into + from` on the
    /// snapshots where both are alive.
    fn absorb_history(&mut self, into: ClassId, from: ClassId) {
        if !self.track {
            return;
        }
        let start = self.bars[into].birth_pos.max(self.bars[from].birth_pos);
        let updates: Vec<(usize, usize, Chain)> = self.bars[into]
            .history
            .iter()
            .enumerate()
            .filter(|(_, (t, _))| self.snapshot_pos[t - 1] >= start)
            .map(|(slot, (t, _))| {
                let other = &self.bars[from].history;
                let j = other.binary_search_by_key(t, |(u, _)| *u).expect("overlapping history");
                (slot, *t, other[j].1.clone())
            })
            .collect();
        for (slot, t, add) in updates {
            let index = self.cofaces[t - 1]
                .get_or_insert_with(|| CofaceIndex::new(self.seq.snapshot(t)));
            let c = &mut self.bars[into].history[slot].1;
            *c += &add;
            shrink_cycle(c, |e| index.cofaces(e));
        }
    }

    fn record_snapshot(&mut self, t: usize) {
        self.snapshot_pos.push(self.pos);
        #[cfg(test)]
        debug_assert_eq!(&self.live.to_complex(), self.seq.snapshot(t));
        for (&id, c) in self.active.iter_mut() {
            let live = &self.live;
            shrink_cycle(c, |e| live.cofaces(e));
            if self.track {
                self.bars[id].history.push((t, c.clone()));
            }
        }
    }

    fn finish(self) -> EngineOutput {
        let last = self.pos;
        let mut found: Vec<(Interval, ClassId)> = Vec::new();
        for (id, bar) in self.bars.iter().enumerate() {
            let death_pos = bar.death_pos.unwrap_or(last);
            let birth = self.snapshot_pos.partition_point(|&p| p < bar.birth_pos) + 1;
            let death = self.snapshot_pos.partition_point(|&p| p <= death_pos);
            if birth <= death {
                found.push((Interval::new(birth, death), id));
            }
        }
        found.sort_unstable();
        let (intervals, classes) = found.into_iter().unzip();
        EngineOutput {
            persistence: PersistenceOutput {
                intervals,
                classes,
                trace: self.trace,
                num_snapshots: self.seq.len(),
            },
            bars: self.bars,
        }
    }
}

fn s_boundary(t: &Simplex) -> Chain {
    Chain::from_simplices(1, t.faces()).expect("faces of a triangle")
}
