//! Raster coverage of the unit square by sensing disks.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Point, Trace};
use crate::{Error, Result};

pub const DEFAULT_GRID: usize = 512;

/// Covered flags of a `res × res` grid of cells, tested at cell centres.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageGrid {
    res: usize,
    covered: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coverage {
    pub proportion_covered: f64,
    /// Uncovered area not connected to the border of the square.
    pub hole_area: f64,
}

impl CoverageGrid {
    pub fn new(points: &[Point], r: f64, res: usize) -> Result<Self> {
        if res < 64 {
            return Err(Error::InvalidParameter("grid resolution must be at least 64"));
        }
        let mut grid = CoverageGrid { res, covered: alloc::vec![false; res * res] };
        grid.add(points, r);
        Ok(grid)
    }

    pub fn resolution(&self) -> usize {
        self.res
    }

    /// Centre of cell `(i, j)`, `i` along x.
    pub fn center(&self, i: usize, j: usize) -> Point {
        let h = 1.0 / self.res as f64;
        Point::new((i as f64 + 0.5) * h, (j as f64 + 0.5) * h)
    }

    /// Cell range whose centres may lie within `[lo, hi]` on one axis.
    pub(crate) fn span(&self, lo: f64, hi: f64) -> core::ops::Range<usize> {
        let res = self.res as f64;
        let a = libm::floor(lo * res - 0.5).max(0.0) as usize;
        let b = (libm::ceil(hi * res - 0.5).max(-1.0) as i64 + 1).clamp(0, self.res as i64) as usize;
        a.min(b)..b
    }

    fn add(&mut self, points: &[Point], r: f64) {
        let r2 = r * r * (1.0 + 1e-12);
        for p in points {
            for j in self.span(p.y - r, p.y + r) {
                for i in self.span(p.x - r, p.x + r) {
                    let c = self.center(i, j);
                    let (dx, dy) = (c.x - p.x, c.y - p.y);
                    if dx * dx + dy * dy <= r2 {
                        self.covered[j * self.res + i] = true;
                    }
                }
            }
        }
    }

    pub fn is_covered(&self, i: usize, j: usize) -> bool {
        self.covered[j * self.res + i]
    }

    /// Marks every cell covered in `other` as covered here.
    pub fn union_with(&mut self, other: &CoverageGrid) {
        for (a, b) in self.covered.iter_mut().zip(&other.covered) {
            *a |= b;
        }
    }

    pub fn proportion_covered(&self) -> f64 {
        self.covered.iter().filter(|&&c| c).count() as f64 / self.covered.len() as f64
    }

    /// Uncovered cells with no 4-connected uncovered path to the border.
    pub fn hole_mask(&self) -> Vec<bool> {
        let res = self.res;
        let mut outside = alloc::vec![false; res * res];
        let mut queue = VecDeque::new();
        for k in 0..res {
            for (i, j) in [(k, 0), (k, res - 1), (0, k), (res - 1, k)] {
                let idx = j * res + i;
                if !self.covered[idx] && !outside[idx] {
                    outside[idx] = true;
                    queue.push_back((i, j));
                }
            }
        }
        while let Some((i, j)) = queue.pop_front() {
            let mut visit = |i: usize, j: usize| {
                let idx = j * res + i;
                if !self.covered[idx] && !outside[idx] {
                    outside[idx] = true;
                    queue.push_back((i, j));
                }
            };
            if i > 0 {
                visit(i - 1, j);
            }
            if i + 1 < res {
                visit(i + 1, j);
            }
            if j > 0 {
                visit(i, j - 1);
            }
            if j + 1 < res {
                visit(i, j + 1);
            }
        }
        self.covered.iter().zip(&outside).map(|(&c, &o)| !c && !o).collect()
    }

    pub fn hole_area(&self) -> f64 {
        self.hole_mask().iter().filter(|&&h| h).count() as f64 / self.covered.len() as f64
    }

    pub fn coverage(&self) -> Coverage {
        Coverage { proportion_covered: self.proportion_covered(), hole_area: self.hole_area() }
    }
}

/// Covered fraction and interior hole area at snapshot `t`.
pub fn grid_coverage(trace: &Trace, t: usize, res: usize) -> Result<Coverage> {
    if t == 0 || t > trace.len() {
        return Err(Error::SnapshotOutOfRange { t, len: trace.len() });
    }
    Ok(CoverageGrid::new(trace.at(t), trace.r(), res)?.coverage())
}

/// Fraction of the square covered at some snapshot up to each `t`.
pub fn interval_coverage(trace: &Trace, res: usize) -> Result<Vec<f64>> {
    let mut seen: Option<CoverageGrid> = None;
    let mut out = Vec::with_capacity(trace.len());
    for p in trace.snapshots() {
        let grid = CoverageGrid::new(p, trace.r(), res)?;
        match seen.as_mut() {
            Some(s) => s.union_with(&grid),
            None => seen = Some(grid),
        }
        out.push(seen.as_ref().expect("set").proportion_covered());
    }
    Ok(out)
}
