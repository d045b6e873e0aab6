//! Hop-distance filtration and hole depths.
//!
//! Level `h` of the filtration joins every pair of vertices at most `h` hops
//! apart in the base complex and takes the flag complex of the result. A hole
//! whose boundary has `L` hops survives up to depth `⌈L/3⌉ - 1`, so the depth
//! at which a class dies is a coarse size estimate that needs no positions.
//!
//! Levels above the base are reduced before computing homology: a vertex
//! whose closed neighbourhood lies inside a neighbour's is dropped (the flag
//! complex deformation retracts away from it), then free faces are collapsed.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::complex::{
    betti, is_boundary, rips_from_adjacency, simplicial_collapse, Adjacency, BoundarySolver, Chain,
    SimplicialComplex, VertexId,
};
use crate::{Error, Result};

const FAR: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct HopFiltration {
    base: SimplicialComplex,
    max_depth: usize,
    hops: Vec<u32>,
}

/// Filtration of `k` up to depth `m >= 1`.
pub fn hop_filtration(k: &SimplicialComplex, m: usize) -> Result<HopFiltration> {
    if m == 0 {
        return Err(Error::InvalidDepth);
    }
    let n = k.n();
    let adj = k.adjacency();
    let mut hops = alloc::vec![FAR; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut hops[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in adj.neighbors(u) {
                if row[w] == FAR {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(HopFiltration { base: k.clone(), max_depth: m, hops })
}

impl HopFiltration {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    /// Hop distance in the base 1-skeleton, `None` across components.
    pub fn hop(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let d = self.hops[u.index() * self.base.n() + v.index()];
        (d != FAR).then_some(d as usize)
    }

    /// Graph of pairs at most `h` hops apart.
    pub fn graph(&self, h: usize) -> Adjacency {
        let n = self.base.n();
        let mut adj = Adjacency::new(n);
        for i in 0..n {
            for j in i + 1..n {
                let d = self.hops[i * n + j];
                if d != FAR && d as usize <= h {
                    adj.connect(VertexId::from_index(i), VertexId::from_index(j)).expect("in range");
                }
            }
        }
        adj
    }

    /// `K^h`; level 1 is the base itself. Any `h >= 1` is accepted.
    pub fn level(&self, h: usize) -> SimplicialComplex {
        assert!(h >= 1, "levels start at 1");
        if h == 1 {
            return self.base.clone();
        }
        let mut k = rips_from_adjacency(&self.graph(h));
        for v in 1..=self.base.n() as u32 {
            let s = crate::complex::Simplex::vertex(v);
            if !self.base.contains(&s) {
                k.remove_unchecked(&s);
            }
        }
        k
    }

    /// `K^1, ..., K^m`.
    pub fn levels(&self) -> Vec<SimplicialComplex> {
        (1..=self.max_depth).map(|h| self.level(h)).collect()
    }

    /// Level `h >= 2` with dominated vertices outside `keep` removed. Same H1
    /// as `level(h)`, and cycles on kept vertices keep their classes.
    fn reduced_level(&self, h: usize, keep: &[bool]) -> SimplicialComplex {
        let mut g = self.graph(h);
        strip_dominated(&mut g, keep);
        rips_from_adjacency(&g)
    }

    /// Depth of the class of `c`: the largest `h <= m` at which it is still
    /// nontrivial, or 0 when it bounds in the base.
    pub fn cycle_depth(&self, c: &Chain) -> Result<usize> {
        Ok(self.cycle_depths(core::slice::from_ref(c))?[0])
    }

    /// [`cycle_depth`](Self::cycle_depth) for several cycles at once.
    pub fn cycle_depths(&self, cycles: &[Chain]) -> Result<Vec<usize>> {
        let n = self.base.n();
        let mut depth = Vec::with_capacity(cycles.len());
        let mut keep = alloc::vec![false; n];
        for c in cycles {
            depth.push(if is_boundary(c, &self.base)? { Some(0) } else { None });
            for v in c.support_vertices() {
                keep[v.index()] = true;
            }
        }
        for h in 2..=self.max_depth {
            if depth.iter().all(Option::is_some) {
                break;
            }
            let mut solver = BoundarySolver::from_complex(&self.reduced_level(h, &keep), false);
            for (d, c) in depth.iter_mut().zip(cycles) {
                if d.is_none() && solver.is_boundary(c) {
                    *d = Some(h - 1);
                }
            }
        }
        Ok(depth.into_iter().map(|d| d.unwrap_or(self.max_depth)).collect())
    }
}

fn strip_dominated(g: &mut Adjacency, keep: &[bool]) {
    let n = g.n();
    loop {
        let mut changed = false;
        for (v, &kept) in keep.iter().enumerate().take(n) {
            if kept || g.degree(v) == 0 {
                continue;
            }
            let dominated = g.neighbors(v).any(|w| g.dominated_by(v, w));
            if dominated {
                g.isolate(v);
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Number of holes dying at each depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthProfile {
    /// `kill_counts[h - 1]` holes die passing `K^h → K^{h+1}`, `h = 1..=m`.
    pub kill_counts: Vec<usize>,
    /// Holes still open in `K^{m+1}`, reported at depth `m`.
    pub survivors_at_m: usize,
    /// `β1(K^h)` for `h = 1..=m+1`.
    pub betti: Vec<usize>,
    /// Levels `h` at which `β1` grew; the corresponding kill count was
    /// clamped to zero.
    pub clamped: Vec<usize>,
}

impl DepthProfile {
    pub fn max_depth(&self) -> usize {
        self.kill_counts.len()
    }

    /// Total number of holes in the base.
    pub fn holes(&self) -> usize {
        self.kill_counts.iter().sum::<usize>() + self.survivors_at_m
    }

    /// Depth of every hole in increasing order, survivors counted at `m`.
    pub fn depths(&self) -> impl Iterator<Item = usize> + '_ {
        let m = self.max_depth();
        self.kill_counts
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| core::iter::repeat_n(i + 1, k))
            .chain(core::iter::repeat_n(m, self.survivors_at_m))
    }
}

pub fn depth_profile(k: &SimplicialComplex, m: usize) -> Result<DepthProfile> {
    let f = hop_filtration(k, m)?;
    let keep = alloc::vec![false; k.n()];
    let mut b = alloc::vec![betti(&simplicial_collapse(k), 1)?];
    for h in 2..=m + 1 {
        b.push(betti(&simplicial_collapse(&f.reduced_level(h, &keep)), 1)?);
    }
    let mut clamped = Vec::new();
    let kill_counts = (1..=m)
        .map(|h| {
            if b[h] > b[h - 1] {
                clamped.push(h);
            }
            b[h - 1].saturating_sub(b[h])
        })
        .collect();
    Ok(DepthProfile { kill_counts, survivors_at_m: b[m], betti: b, clamped })
}

/// `(Σ depth, Σ depth²)` over all holes.
pub fn size_metrics(profile: &DepthProfile) -> (u64, u64) {
    profile.depths().fold((0, 0), |(s, q), d| (s + d as u64, q + (d * d) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;
    use crate::testutil::{dense_betti1, random_adjacency};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cycle_graph(lengths: &[usize]) -> SimplicialComplex {
        let n: usize = lengths.iter().sum();
        let mut adj = Adjacency::new(n);
        let mut start = 0;
        for &l in lengths {
            for i in 0..l {
                let (a, b) = (start + i, start + (i + 1) % l);
                adj.connect(VertexId::from_index(a), VertexId::from_index(b)).unwrap();
            }
            start += l;
        }
        rips_from_adjacency(&adj)
    }

    fn polygon(l: u32) -> Chain {
        let v: Vec<VertexId> = (1..=l).map(VertexId).collect();
        Chain::polygon(&v).unwrap()
    }

    fn law(l: usize) -> usize {
        l.div_ceil(3) - 1
    }

    #[test]
    fn single_loops_follow_the_law() {
        for l in 4..=15 {
            let k = cycle_graph(&[l]);
            let p = depth_profile(&k, 6).unwrap();
            assert_eq!(p.depths().collect::<Vec<_>>(), alloc::vec![law(l)], "L = {l}");
            let f = hop_filtration(&k, 6).unwrap();
            assert_eq!(f.cycle_depth(&polygon(l as u32)).unwrap(), law(l), "L = {l}");
        }
    }

    #[test]
    fn seven_cycle() {
        let k = cycle_graph(&[7]);
        let f = hop_filtration(&k, 3).unwrap();
        let l2 = f.level(2);
        assert!(l2.contains(&Simplex::edge(1, 3)));
        assert!(!l2.contains(&Simplex::edge(1, 4)));
        assert_eq!(betti(&l2, 1).unwrap(), 1);
        assert_eq!(betti(&f.level(3), 1).unwrap(), 0);
        assert_eq!(f.cycle_depth(&polygon(7)).unwrap(), 2);
    }

    #[test]
    fn filled_triangle_has_no_depth() {
        let mut k = SimplicialComplex::empty(3);
        k.insert(Simplex::triangle(1, 2, 3)).unwrap();
        let p = depth_profile(&k, 3).unwrap();
        assert_eq!(p.kill_counts, alloc::vec![0, 0, 0]);
        assert_eq!(p.survivors_at_m, 0);
        assert_eq!(size_metrics(&p), (0, 0));
        let f = hop_filtration(&k, 3).unwrap();
        assert!(f.levels().iter().all(|l| betti(l, 1).unwrap() == 0));
        assert_eq!(f.cycle_depth(&polygon(3)).unwrap(), 0);
    }

    #[test]
    fn components_stay_apart() {
        let k = cycle_graph(&[5, 8]);
        let f = hop_filtration(&k, 4).unwrap();
        assert_eq!(f.hop(VertexId(1), VertexId(6)), None);
        for h in 1..=4 {
            let g = f.graph(h);
            assert!((0..5).all(|i| (5..13).all(|j| !g.get(i, j))));
        }
    }

    #[test]
    fn two_loops() {
        let p = depth_profile(&cycle_graph(&[5, 8]), 3).unwrap();
        assert_eq!(p.kill_counts, alloc::vec![1, 1, 0]);
        assert_eq!(p.survivors_at_m, 0);
        assert_eq!(size_metrics(&p), (3, 5));
    }

    #[test]
    fn censored_at_max_depth() {
        let p = depth_profile(&cycle_graph(&[13, 4]), 2).unwrap();
        assert_eq!(p.kill_counts, alloc::vec![1, 0]);
        assert_eq!(p.survivors_at_m, 1);
        assert_eq!(p.depths().collect::<Vec<_>>(), alloc::vec![1, 2]);
        let f = hop_filtration(&cycle_graph(&[13]), 2).unwrap();
        assert_eq!(f.cycle_depth(&polygon(13)).unwrap(), 2);
    }

    #[test]
    fn size_metrics_arithmetic() {
        let p = DepthProfile { kill_counts: alloc::vec![0, 1, 1], survivors_at_m: 0, betti: Vec::new(), clamped: Vec::new() };
        assert_eq!(size_metrics(&p), (5, 13));
        let empty = DepthProfile { kill_counts: Vec::new(), survivors_at_m: 0, betti: Vec::new(), clamped: Vec::new() };
        assert_eq!(size_metrics(&empty), (0, 0));
    }

    #[test]
    fn zero_depth_is_rejected() {
        assert!(matches!(hop_filtration(&cycle_graph(&[4]), 0), Err(Error::InvalidDepth)));
        assert!(matches!(depth_profile(&cycle_graph(&[4]), 0), Err(Error::InvalidDepth)));
    }

    #[test]
    fn reduced_levels_match_plain_levels() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..40 {
            let k = rips_from_adjacency(&random_adjacency(&mut rng, 14, 0.18));
            let m = 3;
            let p = depth_profile(&k, m).unwrap();
            let f = hop_filtration(&k, m).unwrap();
            let plain: Vec<usize> = (1..=m + 1).map(|h| dense_betti1(&f.level(h))).collect();
            assert_eq!(p.betti, plain);
            assert_eq!(p.holes(), plain[0]);
        }
    }

    #[test]
    fn levels_are_nested_and_flag() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let k = rips_from_adjacency(&random_adjacency(&mut rng, 16, 0.15));
        let f = hop_filtration(&k, 4).unwrap();
        let levels = f.levels();
        assert_eq!(levels[0], k);
        for w in levels.windows(2) {
            assert!(w[0].is_subcomplex_of(&w[1]));
        }
        for (h, l) in levels.iter().enumerate().skip(1) {
            assert_eq!(l, &rips_from_adjacency(&f.graph(h + 1)));
        }
    }

    #[test]
    fn depth_ignores_added_boundaries() {
        // Loop of 10 with a fan of triangles hanging off one edge.
        let mut adj = Adjacency::new(11);
        for i in 0..10 {
            adj.connect(VertexId::from_index(i), VertexId::from_index((i + 1) % 10)).unwrap();
        }
        adj.connect(VertexId(1), VertexId(11)).unwrap();
        adj.connect(VertexId(2), VertexId(11)).unwrap();
        let k = rips_from_adjacency(&adj);
        let f = hop_filtration(&k, 4).unwrap();
        let c = polygon(10);
        let mut moved = c.clone();
        for e in Simplex::triangle(1, 2, 11).faces() {
            moved.toggle(e);
        }
        assert_eq!(f.cycle_depth(&c).unwrap(), law(10));
        assert_eq!(f.cycle_depth(&moved).unwrap(), law(10));
    }

    #[test]
    fn cycle_depth_matches_profile_for_one_hole() {
        for l in [5, 8, 11] {
            let k = cycle_graph(&[l]);
            let p = depth_profile(&k, 4).unwrap();
            let f = hop_filtration(&k, 4).unwrap();
            assert_eq!(p.depths().next(), Some(f.cycle_depth(&polygon(l as u32)).unwrap()));
        }
    }
}
