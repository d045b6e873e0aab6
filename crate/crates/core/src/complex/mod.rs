//! Simplicial complexes (2-skeleton), Rips construction and GF(2) homology.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

mod chain;
mod collapse;
mod homology;

pub use chain::{boundary, Chain};
pub use collapse::simplicial_collapse;
pub use homology::{betti, boundary_witness, homology_rank, is_boundary};
pub(crate) use homology::BoundarySolver;

/// Sensor identifier, `1..=n`, stable across snapshots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexId(pub u32);

impl VertexId {
    /// Zero-based position, for indexing per-vertex arrays.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        VertexId(i as u32 + 1)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A vertex, edge or triangle with its vertices sorted ascending.
///
/// Ordering is by dimension first and lexicographic within a dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    len: u8,
    verts: [VertexId; 3],
}

impl Simplex {
    pub fn new(vertices: &[VertexId]) -> Result<Self> {
        if vertices.is_empty() || vertices.len() > 3 {
            return Err(Error::InvalidSimplex);
        }
        let mut verts = [VertexId(0); 3];
        verts[..vertices.len()].copy_from_slice(vertices);
        let v = &mut verts[..vertices.len()];
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) || v[0].0 == 0 {
            return Err(Error::InvalidSimplex);
        }
        Ok(Simplex { len: vertices.len() as u8, verts })
    }

    pub fn vertex(v: impl Into<VertexId>) -> Self {
        Self::new(&[v.into()]).expect("vertex ids start at 1")
    }

    /// # Panics
    /// If the endpoints coincide.
    pub fn edge(a: impl Into<VertexId>, b: impl Into<VertexId>) -> Self {
        Self::new(&[a.into(), b.into()]).expect("edge endpoints must differ")
    }

    /// # Panics
    /// If two of the vertices coincide.
    pub fn triangle(a: impl Into<VertexId>, b: impl Into<VertexId>, c: impl Into<VertexId>) -> Self {
        Self::new(&[a.into(), b.into(), c.into()]).expect("triangle vertices must differ")
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.len as usize - 1
    }

    #[inline]
    pub fn vertices(&self) -> &[VertexId] {
        &self.verts[..self.len as usize]
    }

    /// Codimension-one faces, in lexicographic order. Empty for a vertex.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.len as usize;
        let count = if k > 1 { k } else { 0 };
        (0..count).rev().map(move |skip| {
            let mut verts = [VertexId(0); 3];
            let mut j = 0;
            for (i, v) in self.vertices().iter().enumerate() {
                if i != skip {
                    verts[j] = *v;
                    j += 1;
                }
            }
            Simplex { len: (k - 1) as u8, verts }
        })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Symmetric boolean matrix with zero diagonal, stored as bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Adjacency {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Adjacency { n, words, bits: alloc::vec![0; words * n] }
    }

    /// Validates a dense matrix: square, symmetric, zero diagonal.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut adj = Adjacency::new(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, row: i, len: row.len() });
            }
            if row[i] {
                return Err(Error::NonZeroDiagonal { i });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (rows[i].as_ref()[j], rows[j].as_ref()[i]);
                if a != b {
                    return Err(Error::NotSymmetric { i, j });
                }
                if a {
                    adj.set(i, j);
                }
            }
        }
        Ok(adj)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = Adjacency::new(n);
        for (u, v) in edges {
            adj.connect(u, v)?;
        }
        Ok(adj)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn connect(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        for w in [u, v] {
            if w.0 == 0 || w.index() >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w.0, n: self.n });
            }
        }
        if u == v {
            return Err(Error::NonZeroDiagonal { i: u.index() });
        }
        self.set(u.index(), v.index());
        Ok(())
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    /// Zero-based lookup.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.get(u.index(), v.index())
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Zero-based neighbours of `i` in increasing order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        bit_iter(self.row(i))
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |i| {
            self.neighbors(i)
                .filter(move |&j| j > i)
                .map(move |j| (VertexId::from_index(i), VertexId::from_index(j)))
        })
    }

    pub fn num_edges(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Removes every edge at `i`.
    pub(crate) fn isolate(&mut self, i: usize) {
        for j in bit_iter(&self.bits[i * self.words..(i + 1) * self.words]).collect::<Vec<_>>() {
            self.bits[j * self.words + i / 64] &= !(1 << (i % 64));
        }
        self.bits[i * self.words..(i + 1) * self.words].fill(0);
    }

    /// Whether the closed neighbourhood of `v` lies inside that of `w`.
    pub(crate) fn dominated_by(&self, v: usize, w: usize) -> bool {
        let (rv, rw) = (self.row(v), self.row(w));
        (0..self.words).all(|k| {
            let mut a = rv[k];
            let mut b = rw[k];
            if v / 64 == k {
                a |= 1 << (v % 64);
            }
            if w / 64 == k {
                b |= 1 << (w % 64);
            }
            a & !b == 0
        })
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }
}

pub(crate) fn bit_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// Face-closed set of vertices, edges and triangles over the universe `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    n: usize,
    vertices: BTreeSet<Simplex>,
    edges: BTreeSet<Simplex>,
    triangles: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// Empty complex (no simplices) over `1..=n`.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, ..Default::default() }
    }

    /// All `n` vertices, nothing else.
    pub fn discrete(n: usize) -> Self {
        let mut k = Self::empty(n);
        for i in 0..n {
            k.vertices.insert(Simplex::vertex(VertexId::from_index(i)));
        }
        k
    }

    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(n: usize, simplices: I) -> Result<Self> {
        let mut k = Self::empty(n);
        for s in simplices {
            k.insert(s)?;
        }
        Ok(k)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Inserts `s` together with all of its faces.
    pub fn insert(&mut self, s: Simplex) -> Result<()> {
        for v in s.vertices() {
            if v.index() >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v.0, n: self.n });
            }
        }
        self.insert_closed(s);
        Ok(())
    }

    fn insert_closed(&mut self, s: Simplex) {
        if self.set_mut(s.dim()).insert(s) {
            for f in s.faces() {
                self.insert_closed(f);
            }
        }
    }

    /// Removes `s` without touching its faces or cofaces. Callers keep the
    /// complex face-closed.
    pub(crate) fn remove_unchecked(&mut self, s: &Simplex) -> bool {
        self.set_mut(s.dim()).remove(s)
    }

    fn set_mut(&mut self, dim: usize) -> &mut BTreeSet<Simplex> {
        match dim {
            0 => &mut self.vertices,
            1 => &mut self.edges,
            _ => &mut self.triangles,
        }
    }

    pub fn simplices_of_dim(&self, dim: usize) -> &BTreeSet<Simplex> {
        match dim {
            0 => &self.vertices,
            1 => &self.edges,
            _ => &self.triangles,
        }
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices_of_dim(s.dim()).contains(s)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().map(|s| s.vertices()[0])
    }

    pub fn edges(&self) -> &BTreeSet<Simplex> {
        &self.edges
    }

    pub fn triangles(&self) -> &BTreeSet<Simplex> {
        &self.triangles
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_simplices(&self) -> usize {
        self.vertices.len() + self.edges.len() + self.triangles.len()
    }

    /// All simplices, dimension by dimension.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.vertices.iter().chain(self.edges.iter()).chain(self.triangles.iter())
    }

    /// Simplex-set inclusion.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.vertices.is_subset(&other.vertices)
            && self.edges.is_subset(&other.edges)
            && self.triangles.is_subset(&other.triangles)
    }

    /// Every face of every stored simplex is stored.
    pub fn is_face_closed(&self) -> bool {
        self.iter().all(|s| s.faces().all(|f| self.contains(&f)))
    }

    /// The 1-skeleton as an adjacency matrix.
    pub fn adjacency(&self) -> Adjacency {
        let mut adj = Adjacency::new(self.n);
        for e in &self.edges {
            let v = e.vertices();
            adj.set(v[0].index(), v[1].index());
        }
        adj
    }

    /// Vertices `w` such that `[u, v, w]` is a stored triangle.
    pub fn cofaces_of_edge(&self, e: &Simplex) -> Vec<VertexId> {
        let v = e.vertices();
        let (a, b) = (v[0], v[1]);
        let mut out = Vec::new();
        // [a, b, w] with w > b is a contiguous range.
        let lo = Simplex { len: 3, verts: [a, b, VertexId(0)] };
        let hi = Simplex { len: 3, verts: [a, b, VertexId(u32::MAX)] };
        out.extend(self.triangles.range(lo..hi).map(|t| t.verts[2]));
        for w in 1..=self.n as u32 {
            let w = VertexId(w);
            if w == a || w == b || w > b {
                continue;
            }
            if self.triangles.contains(&Simplex::triangle(a, b, w)) {
                out.push(w);
            }
        }
        out.sort_unstable();
        out
    }
}

/// Flag complex of the graph, truncated to dimension 2. All `n` vertices are
/// present, including isolated ones.
pub fn rips_from_adjacency(adj: &Adjacency) -> SimplicialComplex {
    let n = adj.n();
    let mut k = SimplicialComplex::discrete(n);
    let mut common = alloc::vec![0u64; adj.words];
    for i in 0..n {
        for j in adj.neighbors(i).filter(|&j| j > i) {
            let (vi, vj) = (VertexId::from_index(i), VertexId::from_index(j));
            k.edges.insert(Simplex::edge(vi, vj));
            for (c, (a, b)) in common.iter_mut().zip(adj.row(i).iter().zip(adj.row(j))) {
                *c = a & b;
            }
            for w in bit_iter(&common).filter(|&w| w > j) {
                k.triangles.insert(Simplex::triangle(vi, vj, VertexId::from_index(w)));
            }
        }
    }
    k
}

/// Union of simplex sets. Not flag-closed: no triangle is added unless one of
/// the inputs has it.
pub fn union_complex(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    if a.n != b.n {
        return Err(Error::VertexCountMismatch { expected: a.n, found: b.n });
    }
    let mut u = a.clone();
    u.vertices.extend(b.vertices.iter().copied());
    u.edges.extend(b.edges.iter().copied());
    u.triangles.extend(b.triangles.iter().copied());
    Ok(u)
}
