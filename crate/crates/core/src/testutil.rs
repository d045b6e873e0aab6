//! Dense GF(2) oracles and random fixtures shared by the unit tests.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{rips_from_adjacency, Adjacency, Simplex, SimplicialComplex, VertexId};
use crate::zigzag::{build_sequence, Interval, ZigzagSequence};

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits(alloc::vec![0; len.div_ceil(64)])
    }
    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn xor(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a ^= b;
        }
    }
    fn low(&self) -> Option<usize> {
        self.0.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
}

/// Rank of a list of vectors.
pub(crate) fn rank(vectors: &[Bits]) -> usize {
    kernel(vectors).0
}

/// Returns the rank of the columns and a basis of the combinations summing
/// to zero (each combination is a bit set over column indices).
pub(crate) fn kernel(cols: &[Bits]) -> (usize, Vec<Bits>) {
    let mut pivots: BTreeMap<usize, (Bits, Bits)> = BTreeMap::new();
    let mut null = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        let mut c = c.clone();
        let mut combo = Bits::zeros(cols.len());
        combo.set(j);
        while let Some(low) = c.low() {
            match pivots.get(&low) {
                Some((pc, pk)) => {
                    c.xor(pc);
                    combo.xor(pk);
                }
                None => break,
            }
        }
        match c.low() {
            Some(low) => {
                pivots.insert(low, (c, combo));
            }
            None => null.push(combo),
        }
    }
    (pivots.len(), null)
}

pub(crate) fn edge_index(n: usize, e: &Simplex) -> usize {
    let v = e.vertices();
    let (a, b) = (v[0].index(), v[1].index());
    a * n + b
}

fn triangle_vector(n: usize, t: &Simplex) -> Bits {
    let mut b = Bits::zeros(n * n);
    for f in t.faces() {
        b.set(edge_index(n, &f));
    }
    b
}

/// Basis of the cycle space of `k`, as edge vectors of length `n*n`.
fn cycle_basis(k: &SimplicialComplex) -> Vec<Bits> {
    let n = k.n();
    let edges: Vec<&Simplex> = k.edges().iter().collect();
    let cols: Vec<Bits> = edges
        .iter()
        .map(|e| {
            let mut b = Bits::zeros(n);
            for v in e.vertices() {
                b.set(v.index());
            }
            b
        })
        .collect();
    kernel(&cols)
        .1
        .into_iter()
        .map(|combo| {
            let mut z = Bits::zeros(n * n);
            for (j, e) in edges.iter().enumerate() {
                if combo.get(j) {
                    z.set(edge_index(n, e));
                }
            }
            z
        })
        .collect()
}

/// β1 by dense ranks.
pub(crate) fn dense_betti1(k: &SimplicialComplex) -> usize {
    let n = k.n();
    let z = cycle_basis(k).len();
    let b: Vec<Bits> = k.triangles().iter().map(|t| triangle_vector(n, t)).collect();
    z - rank(&b)
}

/// Number of summands of the full zigzag module `K_b → U_b ← ... ← K_d`
/// supported on the whole stretch, as the rank of its limit-to-colimit map.
fn covering_count(seq: &ZigzagSequence, b: usize, d: usize) -> usize {
    if b == d {
        return dense_betti1(seq.snapshot(b));
    }
    let n = seq.n();
    let nn = n * n;
    let slots = d - b;
    let place = |slot: usize, v: &Bits| {
        let mut out = Bits::zeros(slots * nn);
        for i in 0..nn {
            if v.get(i) {
                out.set(slot * nn + i);
            }
        }
        out
    };
    // Limit: tuples of cycles z_i in K_i with z_i + z_{i+1} bounding in U_i.
    // Unknowns are coordinates in each cycle basis plus a 2-chain per union.
    let bases: Vec<Vec<Bits>> = (b..=d).map(|t| cycle_basis(seq.snapshot(t))).collect();
    let rows = slots * nn;
    let mut cols = Vec::new();
    for (i, basis) in bases.iter().enumerate() {
        for z in basis {
            let mut col = Bits::zeros(rows);
            for slot in [i.wrapping_sub(1), i] {
                if slot < slots {
                    col.xor(&place(slot, z));
                }
            }
            cols.push(col);
        }
    }
    for slot in 0..slots {
        for t in seq.union(b + slot).triangles() {
            cols.push(place(slot, &triangle_vector(n, t)));
        }
    }
    let first = bases[0].len();
    let limit: Vec<Bits> = kernel(&cols)
        .1
        .into_iter()
        .map(|combo| {
            let mut z = Bits::zeros(nn);
            for (j, v) in bases[0].iter().enumerate().take(first) {
                if combo.get(j) {
                    z.xor(v);
                }
            }
            place(0, &z)
        })
        .collect();
    // Colimit relations.
    let mut rel = Vec::new();
    for slot in 0..slots {
        for t in seq.union(b + slot).triangles() {
            rel.push(place(slot, &triangle_vector(n, t)));
        }
    }
    for (i, basis) in bases.iter().enumerate().take(slots).skip(1) {
        for z in basis {
            let mut v = place(i - 1, z);
            v.xor(&place(i, z));
            rel.push(v);
        }
    }
    let base = rank(&rel);
    rel.extend(limit);
    rank(&rel) - base
}

/// Interval multiset of the zigzag in snapshot indices, from the rank
/// invariant by inclusion-exclusion. Independent of the sweep.
pub(crate) fn zigzag_oracle(seq: &ZigzagSequence) -> BTreeMap<Interval, usize> {
    let t_max = seq.len();
    let mut c = BTreeMap::new();
    for b in 1..=t_max {
        for d in b..=t_max {
            c.insert((b, d), covering_count(seq, b, d) as i64);
        }
    }
    let get = |b: usize, d: usize| -> i64 {
        if b == 0 || d > t_max {
            0
        } else {
            c[&(b, d)]
        }
    };
    let mut out = BTreeMap::new();
    for b in 1..=t_max {
        for d in b..=t_max {
            let m = get(b, d) - get(b - 1, d) - get(b, d + 1) + get(b - 1, d + 1);
            assert!(m >= 0, "negative multiplicity");
            if m > 0 {
                out.insert(Interval::new(b, d), m as usize);
            }
        }
    }
    out
}

pub(crate) fn multiset(intervals: &[Interval]) -> BTreeMap<Interval, usize> {
    let mut out = BTreeMap::new();
    for iv in intervals {
        *out.entry(*iv).or_insert(0) += 1;
    }
    out
}

pub(crate) fn random_adjacency(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Adjacency {
    let mut adj = Adjacency::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                adj.connect(VertexId::from_index(i), VertexId::from_index(j)).unwrap();
            }
        }
    }
    adj
}

/// Rips snapshots of a graph whose edges flip independently with
/// probability `flip` between steps.
pub(crate) fn random_sequence(seed: u64, n: usize, t: usize, p: f64, flip: f64) -> ZigzagSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = random_adjacency(&mut rng, n, p);
    let mut snaps = alloc::vec![rips_from_adjacency(&adj)];
    for _ in 1..t {
        let mut next = Adjacency::new(n);
        for i in 0..n {
            for j in i + 1..n {
                let on = adj.get(i, j) ^ rng.gen_bool(flip);
                if on {
                    next.connect(VertexId::from_index(i), VertexId::from_index(j)).unwrap();
                }
            }
        }
        adj = next;
        snaps.push(rips_from_adjacency(&adj));
    }
    build_sequence(snaps).unwrap()
}

#[test]
fn dense_betti_of_square() {
    let adj = Adjacency::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)].map(|(a, b)| (VertexId(a), VertexId(b))))
        .unwrap();
    assert_eq!(dense_betti1(&rips_from_adjacency(&adj)), 1);
}
