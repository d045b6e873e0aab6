//! Betti numbers and boundary tests.
//!
//! Cycles are written in the coordinates of a spanning forest: a 1-cycle is
//! determined by its non-tree edges, and a triangle boundary has at most three
//! non-tree entries. Ranks of the boundary map are then computed by sparse
//! column reduction in those coordinates.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Chain, Simplex, SimplicialComplex, VertexId};
use crate::gf2::Reducer;
use crate::{Error, Result};

const ABSENT: u32 = u32::MAX;
const TREE: u32 = u32::MAX - 1;

pub(crate) struct BoundarySolver {
    n: usize,
    coord: Vec<u32>,
    nontree: usize,
    components: usize,
    num_vertices: usize,
    num_edges: usize,
    reducer: Reducer,
    witness: bool,
    tagged: Vec<Simplex>,
}

impl BoundarySolver {
    /// Builds the spanning forest and cycle coordinates; no triangles yet.
    ///
    /// With `track` set, the reducer remembers which tagged columns each
    /// stored column is made of.
    pub(crate) fn with_skeleton<V, E>(n: usize, vertices: V, edges: E, track: bool) -> Self
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut present = alloc::vec![false; n];
        let mut num_vertices = 0;
        for v in vertices {
            if !present[v.index()] {
                present[v.index()] = true;
                num_vertices += 1;
            }
        }
        let mut adj: Vec<Vec<u32>> = alloc::vec![Vec::new(); n];
        let mut edge_list = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.index().min(b.index()), a.index().max(b.index()));
            adj[a].push(b as u32);
            adj[b].push(a as u32);
            edge_list.push((a, b));
        }
        edge_list.sort_unstable();
        for nb in adj.iter_mut() {
            nb.sort_unstable();
        }
        let mut coord = alloc::vec![ABSENT; n * n];
        for &(a, b) in &edge_list {
            coord[a * n + b] = 0;
            coord[b * n + a] = 0;
        }
        let mut seen = alloc::vec![false; n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for root in 0..n {
            if !present[root] || seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    let w = w as usize;
                    if !seen[w] {
                        seen[w] = true;
                        coord[u * n + w] = TREE;
                        coord[w * n + u] = TREE;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut nontree = 0u32;
        for &(a, b) in &edge_list {
            if coord[a * n + b] != TREE {
                coord[a * n + b] = nontree;
                coord[b * n + a] = nontree;
                nontree += 1;
            }
        }
        BoundarySolver {
            n,
            coord,
            nontree: nontree as usize,
            components,
            num_vertices,
            num_edges: edge_list.len(),
            reducer: Reducer::new(nontree as usize, track),
            witness: false,
            tagged: Vec::new(),
        }
    }

    /// Solver over all triangles of `k`. With `witness`, boundary queries can
    /// report the 2-chain they found.
    pub(crate) fn from_complex(k: &SimplicialComplex, witness: bool) -> Self {
        let edges = k.edges().iter().map(|e| (e.vertices()[0], e.vertices()[1]));
        let mut s = Self::with_skeleton(k.n(), k.vertices(), edges, witness);
        s.witness = witness;
        for t in k.triangles() {
            s.add_triangle(t);
        }
        s
    }

    #[inline]
    fn edge_coord(&self, a: VertexId, b: VertexId) -> u32 {
        self.coord[a.index() * self.n + b.index()]
    }

    fn triangle_column(&self, t: &Simplex) -> Vec<u32> {
        let v = t.vertices();
        let mut col: Vec<u32> = [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])]
            .into_iter()
            .map(|(a, b)| self.edge_coord(a, b))
            .filter(|&c| c != TREE)
            .collect();
        debug_assert!(col.iter().all(|&c| c != ABSENT), "triangle edge missing");
        col.sort_unstable();
        col
    }

    /// Adds a triangle boundary. Returns whether the boundary rank grew.
    pub(crate) fn add_triangle(&mut self, t: &Simplex) -> bool {
        let col = self.triangle_column(t);
        let tag = if self.witness {
            self.tagged.push(*t);
            Some(self.tagged.len() as u32 - 1)
        } else {
            None
        };
        self.reducer.insert(col, tag)
    }

    /// Cycle coordinates of a 1-chain, or `None` when it uses an edge the
    /// solver does not know.
    pub(crate) fn cycle_column(&self, c: &Chain) -> Option<Vec<u32>> {
        let mut col = Vec::new();
        for e in c.iter() {
            let v = e.vertices();
            match self.edge_coord(v[0], v[1]) {
                ABSENT => return None,
                TREE => {}
                x => col.push(x),
            }
        }
        col.sort_unstable();
        Some(col)
    }

    /// Reduces a cycle; returns the remainder and the tags used.
    pub(crate) fn reduce_cycle(&mut self, c: &Chain) -> (Vec<u32>, Vec<u32>) {
        let col = self.cycle_column(c).expect("cycle uses an edge outside the complex");
        self.reducer.reduce(col, Vec::new())
    }

    pub(crate) fn is_boundary(&mut self, c: &Chain) -> bool {
        self.reduce_cycle(c).0.is_empty()
    }

    /// Adds a tagged cycle (a homology basis element). Returns `false` when it
    /// is already in the span of the stored columns.
    pub(crate) fn add_tagged_cycle(&mut self, c: &Chain, tag: u32) -> bool {
        let col = self.cycle_column(c).expect("cycle uses an edge outside the complex");
        self.reducer.insert(col, Some(tag))
    }

    /// See [`Reducer::substitute_tag`].
    pub(crate) fn substitute_tag(&mut self, p: u32, with: &[u32]) {
        self.reducer.substitute_tag(p, with);
    }

    pub(crate) fn witness_for(&mut self, c: &Chain) -> Option<Chain> {
        debug_assert!(self.witness);
        let (rem, combo) = self.reduce_cycle(c);
        if !rem.is_empty() {
            return None;
        }
        let tris = combo.iter().map(|&i| self.tagged[i as usize]);
        Some(Chain::from_simplices(2, tris).expect("triangles"))
    }

    pub(crate) fn boundary_rank(&self) -> usize {
        self.reducer.rank()
    }

    pub(crate) fn betti0(&self) -> usize {
        self.components
    }

    pub(crate) fn betti1(&self) -> usize {
        debug_assert_eq!(self.nontree, self.num_edges - (self.num_vertices - self.components));
        self.nontree - self.reducer.rank()
    }
}

/// `k`-th Betti number over GF(2), for `k` in {0, 1}.
pub fn betti(k: &SimplicialComplex, dim: usize) -> Result<usize> {
    match dim {
        0 => {
            let edges = k.edges().iter().map(|e| (e.vertices()[0], e.vertices()[1]));
            Ok(BoundarySolver::with_skeleton(k.n(), k.vertices(), edges, false).betti0())
        }
        1 => Ok(BoundarySolver::from_complex(k, false).betti1()),
        d => Err(Error::InvalidDimension(d)),
    }
}

fn check_cycle(c: &Chain, k: &SimplicialComplex) -> Result<()> {
    if c.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: c.dim() });
    }
    if let Some(s) = c.iter().find(|s| !k.contains(s)) {
        return Err(Error::NotInComplex(*s));
    }
    if !c.is_cycle() {
        return Err(Error::NotACycle);
    }
    Ok(())
}

/// Whether the 1-cycle `c` bounds in `k`.
pub fn is_boundary(c: &Chain, k: &SimplicialComplex) -> Result<bool> {
    check_cycle(c, k)?;
    Ok(BoundarySolver::from_complex(k, false).is_boundary(c))
}

/// A 2-chain `x` of `k` with boundary `c`, if one exists.
pub fn boundary_witness(c: &Chain, k: &SimplicialComplex) -> Result<Option<Chain>> {
    check_cycle(c, k)?;
    Ok(BoundarySolver::from_complex(k, true).witness_for(c))
}

/// Rank of the span of the classes of `cycles` in `H1(k)`.
pub fn homology_rank(cycles: &[Chain], k: &SimplicialComplex) -> Result<usize> {
    for c in cycles {
        check_cycle(c, k)?;
    }
    let mut solver = BoundarySolver::from_complex(k, false);
    let base = solver.boundary_rank();
    for c in cycles {
        solver.add_tagged_cycle(c, 0);
    }
    Ok(solver.boundary_rank() - base)
}

#[cfg(test)]
mod tests {
    use super::super::{rips_from_adjacency, Adjacency};
    use super::*;

    fn complex(n: usize, tris: &[(u32, u32, u32)], edges: &[(u32, u32)]) -> SimplicialComplex {
        let mut k = SimplicialComplex::discrete(n);
        for &(a, b, c) in tris {
            k.insert(Simplex::triangle(a, b, c)).unwrap();
        }
        for &(a, b) in edges {
            k.insert(Simplex::edge(a, b)).unwrap();
        }
        k
    }

    fn poly(v: &[u32]) -> Chain {
        let v: Vec<VertexId> = v.iter().map(|&x| VertexId(x)).collect();
        Chain::polygon(&v).unwrap()
    }

    #[test]
    fn filled_triangle() {
        let k = complex(3, &[(1, 2, 3)], &[]);
        assert_eq!(betti(&k, 0).unwrap(), 1);
        assert_eq!(betti(&k, 1).unwrap(), 0);
        let c = poly(&[1, 2, 3]);
        let w = boundary_witness(&c, &k).unwrap().unwrap();
        assert_eq!(w.simplices(), &[Simplex::triangle(1, 2, 3)]);
    }

    #[test]
    fn hollow_square_is_not_a_boundary() {
        let k = complex(4, &[], &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(!is_boundary(&poly(&[1, 2, 3, 4]), &k).unwrap());
    }

    #[test]
    fn two_disjoint_hollow_squares() {
        let k = complex(8, &[], &[(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (7, 8), (5, 8)]);
        assert_eq!(betti(&k, 0).unwrap(), 2);
        assert_eq!(betti(&k, 1).unwrap(), 2);
    }

    #[test]
    fn two_hole_complex() {
        // Two squares sharing the edge 2-3, no triangles.
        let k = complex(6, &[], &[(1, 2), (2, 3), (3, 4), (1, 4), (2, 5), (5, 6), (6, 3)]);
        assert_eq!(betti(&k, 1).unwrap(), 2);
    }

    #[test]
    fn homologous_cycles_around_one_hole() {
        let adj = Adjacency::from_edges(
            5,
            [(1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)].map(|(a, b)| (VertexId(a), VertexId(b))),
        )
        .unwrap();
        let k = rips_from_adjacency(&adj);
        let short = poly(&[1, 2, 4, 5]);
        let long = poly(&[1, 2, 3, 4, 5]);
        assert!(!is_boundary(&short, &k).unwrap());
        assert!(!is_boundary(&long, &k).unwrap());
        let w = boundary_witness(&(&short + &long), &k).unwrap().unwrap();
        assert_eq!(w.simplices(), &[Simplex::triangle(2, 3, 4)]);
    }

    #[test]
    fn rank_of_classes() {
        let k = complex(6, &[], &[(1, 2), (2, 3), (3, 4), (1, 4), (2, 5), (5, 6), (6, 3)]);
        let a = poly(&[1, 2, 3, 4]);
        let b = poly(&[2, 5, 6, 3]);
        let outer = poly(&[1, 2, 5, 6, 3, 4]);
        assert_eq!(homology_rank(&[a.clone(), b.clone()], &k).unwrap(), 2);
        assert_eq!(homology_rank(&[a, b, outer.clone()], &k).unwrap(), 2);
        assert_eq!(homology_rank(&[outer.clone(), outer], &k).unwrap(), 1);
        assert_eq!(homology_rank(&[], &k).unwrap(), 0);
    }

    #[test]
    fn rejects_non_cycles_and_foreign_edges() {
        let k = complex(4, &[], &[(1, 2), (2, 3)]);
        let path = Chain::from_simplices(1, [Simplex::edge(1, 2), Simplex::edge(2, 3)]).unwrap();
        assert_eq!(is_boundary(&path, &k), Err(Error::NotACycle));
        assert!(matches!(is_boundary(&poly(&[1, 2, 4]), &k), Err(Error::NotInComplex(_))));
        assert_eq!(betti(&k, 2), Err(Error::InvalidDimension(2)));
    }
}
