//! Čech complex of sensing disks and the area a Rips complex wrongly fills.

use super::coverage::CoverageGrid;
use super::{adjacency, within, Point};
use crate::complex::{rips_from_adjacency, Simplex, SimplicialComplex, VertexId};
use crate::Result;

/// Radius of the smallest disk containing the three points: half the longest
/// side for right or obtuse triangles, otherwise the circumradius.
pub fn minimax_radius(a: Point, b: Point, c: Point) -> f64 {
    let mut sides = [(a.dist(b), c), (b.dist(c), a), (a.dist(c), b)];
    sides.sort_by(|x, y| x.0.total_cmp(&y.0));
    let [(s0, _), (s1, _), (s2, _)] = sides;
    if s0 * s0 + s1 * s1 <= s2 * s2 {
        return s2 / 2.0;
    }
    let area2 = ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).abs();
    s0 * s1 * s2 / (2.0 * area2)
}

/// Nerve of the radius-`r` disks, truncated to triangles. All vertices are
/// present.
pub fn cech_complex(points: &[Point], r: f64) -> SimplicialComplex {
    let n = points.len();
    let mut k = SimplicialComplex::discrete(n);
    let adj = adjacency(points, r);
    for (u, v) in adj.edges() {
        k.insert(Simplex::edge(u, v)).expect("in range");
    }
    for (u, v) in adj.edges() {
        for w in adj.neighbors(v.index()).filter(|&w| w > v.index() && adj.get(u.index(), w)) {
            let (p, q, s) = (points[u.index()], points[v.index()], points[w]);
            if within(minimax_radius(p, q, s), r) {
                k.insert(Simplex::triangle(u, v, VertexId::from_index(w))).expect("in range");
            }
        }
    }
    k
}

fn inside(p: Point, a: Point, b: Point, c: Point) -> bool {
    let cross = |o: Point, u: Point, v: Point| (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
    let (d1, d2, d3) = (cross(a, b, p), cross(b, c, p), cross(c, a, p));
    let neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
    let pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
    !(neg && pos)
}

/// Fraction of the square that is uncovered yet lies inside the geometric
/// triangle of some Rips triangle.
///
/// Only Rips triangles missing from the Čech complex are scanned: when three
/// disks share a point, the triangle of their centres is covered.
pub fn rips_missed_area(points: &[Point], r: f64, res: usize) -> Result<f64> {
    let grid = CoverageGrid::new(points, r, res)?;
    let rips = rips_from_adjacency(&adjacency(points, r));
    let mut missed = alloc::vec![false; res * res];
    for t in rips.triangles() {
        let v = t.vertices();
        let (a, b, c) = (points[v[0].index()], points[v[1].index()], points[v[2].index()]);
        if within(minimax_radius(a, b, c), r) {
            continue;
        }
        let (x0, x1) = (a.x.min(b.x).min(c.x), a.x.max(b.x).max(c.x));
        let (y0, y1) = (a.y.min(b.y).min(c.y), a.y.max(b.y).max(c.y));
        for j in grid.span(y0, y1) {
            for i in grid.span(x0, x1) {
                if !grid.is_covered(i, j) && inside(grid.center(i, j), a, b, c) {
                    missed[j * res + i] = true;
                }
            }
        }
    }
    Ok(missed.iter().filter(|&&m| m).count() as f64 / (res * res) as f64)
}
