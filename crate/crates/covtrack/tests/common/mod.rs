//! Fixtures and dense reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use covtrack::formats::Snapshots;
use covtrack_core::complex::{Adjacency, Chain, Simplex, SimplicialComplex, VertexId};
use covtrack_core::mobility::{adjacency, Point};

/// Dense GF(2) vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn xor(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a ^= b;
        }
    }

    fn lowest(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank of a set of vectors by Gaussian elimination.
pub fn rank(vectors: &[Bits]) -> usize {
    let mut pivots: BTreeMap<usize, Bits> = BTreeMap::new();
    for v in vectors {
        let mut v = v.clone();
        while let Some(p) = v.lowest() {
            match pivots.get(&p) {
                Some(row) => v.xor(row),
                None => {
                    pivots.insert(p, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

pub fn edge_index(k: &SimplicialComplex) -> BTreeMap<Simplex, usize> {
    k.edges().iter().enumerate().map(|(i, e)| (*e, i)).collect()
}

pub fn chain_vector(c: &Chain, idx: &BTreeMap<Simplex, usize>) -> Bits {
    let mut b = Bits::zeros(idx.len());
    for e in c.iter() {
        b.flip(idx[e]);
    }
    b
}

pub fn boundary2(k: &SimplicialComplex, idx: &BTreeMap<Simplex, usize>) -> Vec<Bits> {
    k.triangles()
        .iter()
        .map(|t| {
            let mut b = Bits::zeros(idx.len());
            for f in t.faces() {
                b.flip(idx[&f]);
            }
            b
        })
        .collect()
}

pub fn boundary1(k: &SimplicialComplex) -> Vec<Bits> {
    k.edges()
        .iter()
        .map(|e| {
            let mut b = Bits::zeros(k.n());
            for v in e.vertices() {
                b.flip(v.index());
            }
            b
        })
        .collect()
}

/// `β1 = #edges - rank ∂1 - rank ∂2`.
pub fn dense_betti1(k: &SimplicialComplex) -> usize {
    let idx = edge_index(k);
    k.num_edges() - rank(&boundary1(k)) - rank(&boundary2(k, &idx))
}

/// Dimension of the span of the classes of `cycles` in `H1(k)`.
pub fn dense_class_rank(cycles: &[&Chain], k: &SimplicialComplex) -> usize {
    let idx = edge_index(k);
    let mut cols = boundary2(k, &idx);
    let base = rank(&cols);
    cols.extend(cycles.iter().map(|c| chain_vector(c, &idx)));
    rank(&cols) - base
}

/// Whether `c` is a cycle supported in `k` (dense check).
pub fn dense_is_cycle(c: &Chain, k: &SimplicialComplex) -> bool {
    if c.iter().any(|e| !k.contains(e)) {
        return false;
    }
    let mut deg = vec![0u8; k.n()];
    for e in c.iter() {
        for v in e.vertices() {
            deg[v.index()] ^= 1;
        }
    }
    deg.iter().all(|&d| d == 0)
}

pub fn union_find_components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

pub fn graph(n: usize, edges: &[(u32, u32)]) -> Adjacency {
    Adjacency::from_edges(n, edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v)))).unwrap()
}

/// Polygon `1..=len` coned off by vertex `len + 1` outside `[b, d]`: one
/// hole alive exactly on `[b, d]`. A filled fan on further vertices sits
/// beside it.
pub fn isolated_hole(len: u32, b: usize, d: usize, horizon: usize) -> Snapshots {
    let hub = len + 1;
    let n = (len + 5) as usize;
    let ring: Vec<(u32, u32)> = (1..=len).map(|i| (i, i % len + 1)).collect();
    let fan = [(hub + 1, hub + 2), (hub + 2, hub + 3), (hub + 3, hub + 4), (hub + 1, hub + 3), (hub + 1, hub + 4)];
    let graphs = (1..=horizon)
        .map(|t| {
            let mut e: Vec<(u32, u32)> = ring.iter().chain(&fan).copied().collect();
            if !(b..=d).contains(&t) {
                e.extend((1..=len).map(|i| (i, hub)));
            }
            graph(n, &e)
        })
        .collect();
    Snapshots { n, graphs }
}

/// Static hollow square.
pub fn square(horizon: usize) -> Snapshots {
    Snapshots { n: 4, graphs: vec![graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]); horizon] }
}

/// Axial coordinates of a hexagonal patch of the triangular lattice.
fn hex_patch(radius: i32) -> Vec<(i32, i32)> {
    let mut v = Vec::new();
    for q in -radius..=radius {
        for r in -radius..=radius {
            if (q + r).abs() <= radius {
                v.push((q, r));
            }
        }
    }
    v
}

fn hex_dist(a: (i32, i32), b: (i32, i32)) -> i32 {
    let (dq, dr) = (a.0 - b.0, a.1 - b.1);
    (dq.abs() + dr.abs() + (dq + dr).abs()) / 2
}

/// Triangular lattice of radius 5 around a failure that grows from nothing
/// (t = 1) to one node, a triangle of nodes, a disk of radius 1 and a disk
/// of radius 2 (t >= 5). Failed nodes lose every link.
pub fn expanding_failure(horizon: usize) -> Snapshots {
    let nodes = hex_patch(5);
    let n = nodes.len();
    let origin = (0, 0);
    let dead_at = |t: usize, p: (i32, i32)| -> bool {
        match t {
            1 => false,
            2 => p == origin,
            3 => p == origin || p == (1, 0) || p == (0, 1),
            4 => hex_dist(p, origin) <= 1,
            _ => hex_dist(p, origin) <= 2,
        }
    };
    let graphs = (1..=horizon)
        .map(|t| {
            let mut g = Adjacency::new(n);
            for i in 0..n {
                for j in i + 1..n {
                    if hex_dist(nodes[i], nodes[j]) == 1 && !dead_at(t, nodes[i]) && !dead_at(t, nodes[j]) {
                        g.connect(VertexId::from_index(i), VertexId::from_index(j)).unwrap();
                    }
                }
            }
            g
        })
        .collect();
    Snapshots { n, graphs }
}

/// Guards on a ring around `center` drifting outwards at uneven speeds, with
/// relay nodes just outside every other gap that briefly keep the ring closed.
pub struct Dispersal {
    pub center: Point,
    pub r: f64,
    pub positions: Vec<Vec<Point>>,
    /// The initial ring, as vertex ids.
    pub ring: Vec<u32>,
    pub snapshots: Snapshots,
}

pub fn dispersal(horizon: usize) -> Dispersal {
    let center = Point::new(0.5, 0.5);
    let (guards, r) = (10usize, 0.075);
    let angle = |k: f64| 2.0 * std::f64::consts::PI * k / guards as f64;
    let positions: Vec<Vec<Point>> = (0..horizon)
        .map(|s| {
            let s = s as f64;
            let mut pts = Vec::new();
            for k in 0..guards {
                let rad = 0.2 + s * (0.002 + 0.0015 * (k % 4) as f64);
                pts.push(Point::new(center.x + rad * angle(k as f64).cos(), center.y + rad * angle(k as f64).sin()));
            }
            for k in (0..guards).step_by(2) {
                let rad = 0.235 + s * 0.0015;
                let a = angle(k as f64 + 0.5);
                pts.push(Point::new(center.x + rad * a.cos(), center.y + rad * a.sin()));
            }
            pts
        })
        .collect();
    let graphs = positions.iter().map(|p| adjacency(p, r)).collect();
    let n = positions[0].len();
    Dispersal { center, r, positions, ring: (1..=guards as u32).collect(), snapshots: Snapshots { n, graphs } }
}

/// Parity of crossings of the horizontal ray from `p` to `+∞` with the
/// segments of `edges`; additive over GF(2) chains.
pub fn crossing_parity(edges: &[(usize, usize)], pos: &[Point], p: Point) -> bool {
    let mut odd = false;
    for &(i, j) in edges {
        let (a, b) = (pos[i], pos[j]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if x > p.x {
                odd = !odd;
            }
        }
    }
    odd
}

/// Every simple cycle of `g` (each once), as vertex index lists.
pub fn simple_cycles(g: &Adjacency) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for s in 0..n {
        let mut path = vec![s];
        let mut on = vec![false; n];
        on[s] = true;
        extend(g, s, &mut path, &mut on, &mut out);
    }
    out
}

fn extend(g: &Adjacency, s: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    for w in g.neighbors(last).collect::<Vec<_>>() {
        if w == s && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        } else if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            extend(g, s, path, on, out);
            path.pop();
            on[w] = false;
        }
    }
}

/// Whether some simple cycle of `g`, drawn at `pos`, winds an odd number of
/// times around `p`.
pub fn surrounded(g: &Adjacency, pos: &[Point], p: Point) -> bool {
    simple_cycles(g).iter().any(|c| {
        let edges: Vec<(usize, usize)> = (0..c.len()).map(|k| (c[k], c[(k + 1) % c.len()])).collect();
        crossing_parity(&edges, pos, p)
    })
}

/// Whether `p` lies in the closed triangle `a b c`.
pub fn in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    let cross = |o: Point, u: Point, v: Point| (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
    let (d1, d2, d3) = (cross(a, b, p), cross(b, c, p), cross(c, a, p));
    !((d1 < 0.0 || d2 < 0.0 || d3 < 0.0) && (d1 > 0.0 || d2 > 0.0 || d3 > 0.0))
}

pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let (mx, my) = (x.iter().sum::<f64>() / n, y.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    sxy / (sxx * syy).sqrt()
}
