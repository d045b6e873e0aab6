//! Mutable complex used while walking the elementary schedule.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::complex::{BoundarySolver, Chain, Simplex, SimplicialComplex, VertexId};

pub(crate) struct Live {
    n: usize,
    present: Vec<bool>,
    nbrs: Vec<BTreeSet<u32>>,
    tris: BTreeSet<Simplex>,
}

impl Live {
    pub(crate) fn from_complex(k: &SimplicialComplex) -> Self {
        let n = k.n();
        let mut live = Live {
            n,
            present: alloc::vec![false; n],
            nbrs: alloc::vec![BTreeSet::new(); n],
            tris: BTreeSet::new(),
        };
        for s in k.iter() {
            live.insert(s);
        }
        live
    }

    pub(crate) fn insert(&mut self, s: &Simplex) {
        let v = s.vertices();
        match s.dim() {
            0 => self.present[v[0].index()] = true,
            1 => {
                self.nbrs[v[0].index()].insert(v[1].0);
                self.nbrs[v[1].index()].insert(v[0].0);
            }
            _ => {
                self.tris.insert(*s);
            }
        }
    }

    pub(crate) fn remove(&mut self, s: &Simplex) {
        let v = s.vertices();
        match s.dim() {
            0 => self.present[v[0].index()] = false,
            1 => {
                self.nbrs[v[0].index()].remove(&v[1].0);
                self.nbrs[v[1].index()].remove(&v[0].0);
            }
            _ => {
                self.tris.remove(s);
            }
        }
    }

    fn common_neighbors(&self, a: VertexId, b: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let (na, nb) = (&self.nbrs[a.index()], &self.nbrs[b.index()]);
        let (small, big) = if na.len() <= nb.len() { (na, nb) } else { (nb, na) };
        small.iter().filter(move |w| big.contains(w)).map(|&w| VertexId(w))
    }

    /// Third vertices of the triangles on edge `e`.
    pub(crate) fn cofaces(&self, e: &Simplex) -> Vec<VertexId> {
        let v = e.vertices();
        self.common_neighbors(v[0], v[1])
            .filter(|&w| self.tris.contains(&Simplex::triangle(v[0], v[1], w)))
            .collect()
    }

    /// A vertex coning off all three edges of `t` with live triangles, which
    /// makes `∂t` a boundary without using `t` itself.
    pub(crate) fn has_cone(&self, t: &Simplex) -> bool {
        let v = t.vertices();
        self.common_neighbors(v[0], v[1])
            .filter(|w| self.nbrs[v[2].index()].contains(&w.0))
            .any(|w| {
                self.tris.contains(&Simplex::triangle(v[0], v[1], w))
                    && self.tris.contains(&Simplex::triangle(v[0], v[2], w))
                    && self.tris.contains(&Simplex::triangle(v[1], v[2], w))
            })
    }

    /// Shortest path `from → to` in the 1-skeleton, not using the edge
    /// `from - to` itself. Vertex list includes both ends.
    pub(crate) fn shortest_path(&self, from: VertexId, to: VertexId) -> Option<Vec<VertexId>> {
        let mut prev = alloc::vec![u32::MAX; self.n];
        let mut queue = VecDeque::new();
        prev[from.index()] = from.0;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            for &w in &self.nbrs[u.index()] {
                let w = VertexId(w);
                if u == from && w == to {
                    continue;
                }
                if prev[w.index()] != u32::MAX {
                    continue;
                }
                prev[w.index()] = u.0;
                if w == to {
                    let mut path = alloc::vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = VertexId(prev[cur.index()]);
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// Cycle `e + path` closing edge `e` through the rest of the skeleton.
    pub(crate) fn cycle_through(&self, e: &Simplex) -> Option<Chain> {
        let v = e.vertices();
        let path = self.shortest_path(v[0], v[1])?;
        let edges = path.windows(2).map(|w| Simplex::edge(w[0], w[1])).chain(core::iter::once(*e));
        Some(Chain::from_simplices(1, edges).expect("edges"))
    }

    /// Fundamental cycles of a BFS spanning forest, one per non-tree edge.
    pub(crate) fn fundamental_cycles(&self) -> Vec<Chain> {
        let mut parent = alloc::vec![u32::MAX; self.n];
        let mut depth = alloc::vec![0usize; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if !self.present[root] || parent[root] != u32::MAX {
                continue;
            }
            parent[root] = root as u32;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.nbrs[u] {
                    let w = w as usize - 1;
                    if parent[w] == u32::MAX {
                        parent[w] = u as u32;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut out = Vec::new();
        for e in self.edges() {
            let (a, b) = (e.vertices()[0].index(), e.vertices()[1].index());
            if parent[a] as usize == b || parent[b] as usize == a {
                continue;
            }
            let mut edges = alloc::vec![e];
            let (mut x, mut y) = (a, b);
            while x != y {
                if depth[x] >= depth[y] {
                    let p = parent[x] as usize;
                    edges.push(Simplex::edge(VertexId::from_index(x), VertexId::from_index(p)));
                    x = p;
                } else {
                    let p = parent[y] as usize;
                    edges.push(Simplex::edge(VertexId::from_index(y), VertexId::from_index(p)));
                    y = p;
                }
            }
            out.push(Chain::from_simplices(1, edges).expect("edges"));
        }
        out
    }

    pub(crate) fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.present.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| VertexId::from_index(i))
    }

    pub(crate) fn edges(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.nbrs.iter().enumerate().flat_map(|(i, nb)| {
            let a = VertexId::from_index(i);
            nb.range(a.0 + 1..).map(move |&b| Simplex::edge(a, VertexId(b)))
        })
    }

    /// Boundary solver over the current complex. `track` enables tagging.
    pub(crate) fn solver(&self, track: bool, skip: &BTreeSet<Simplex>) -> BoundarySolver {
        let edges = self.edges().map(|e| (e.vertices()[0], e.vertices()[1]));
        let mut s = BoundarySolver::with_skeleton(self.n, self.vertices(), edges, track);
        for t in self.tris.iter().filter(|t| !skip.contains(t)) {
            s.add_triangle(t);
        }
        s
    }

    #[cfg(test)]
    pub(crate) fn to_complex(&self) -> SimplicialComplex {
        let mut k = SimplicialComplex::empty(self.n);
        for v in self.vertices() {
            k.insert(Simplex::vertex(v)).unwrap();
        }
        for e in self.edges() {
            k.insert(e).unwrap();
        }
        for t in &self.tris {
            k.insert(*t).unwrap();
        }
        k
    }
}

/// Edge → third vertices of its triangles, for a fixed complex.
pub(crate) struct CofaceIndex(BTreeMap<Simplex, Vec<VertexId>>);

impl CofaceIndex {
    pub(crate) fn new(k: &SimplicialComplex) -> Self {
        let mut map: BTreeMap<Simplex, Vec<VertexId>> = BTreeMap::new();
        for t in k.triangles() {
            let v = t.vertices();
            map.entry(Simplex::edge(v[0], v[1])).or_default().push(v[2]);
            map.entry(Simplex::edge(v[0], v[2])).or_default().push(v[1]);
            map.entry(Simplex::edge(v[1], v[2])).or_default().push(v[0]);
        }
        for ws in map.values_mut() {
            ws.sort_unstable();
        }
        CofaceIndex(map)
    }

    pub(crate) fn cofaces(&self, e: &Simplex) -> Vec<VertexId> {
        self.0.get(e).cloned().unwrap_or_default()
    }
}

/// Greedy support reduction: add a triangle boundary whenever the triangle
/// shares at least two edges with the cycle. The homology class in the
/// complex described by `cofaces` is unchanged.
pub(crate) fn shrink_cycle<F>(c: &mut Chain, cofaces: F)
where
    F: Fn(&Simplex) -> Vec<VertexId>,
{
    'restart: loop {
        let edges: Vec<Simplex> = c.simplices().to_vec();
        for e in &edges {
            let v = e.vertices();
            for w in cofaces(e) {
                let t = Simplex::triangle(v[0], v[1], w);
                let shared = t.faces().filter(|f| c.contains(f)).count();
                if shared >= 2 {
                    for f in t.faces() {
                        c.toggle(f);
                    }
                    continue 'restart;
                }
            }
        }
        return;
    }
}
