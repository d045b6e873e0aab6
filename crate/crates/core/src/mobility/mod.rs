//! Mobility simulators on the unit square and geometric ground truth.
//!
//! Nodes start uniformly in `[0,1]²` and move either by i.i.d. Gaussian steps
//! (discrete Brownian) or along a fixed Gaussian velocity (straight line),
//! bouncing elastically off the walls. Two nodes communicate when their
//! sensing disks of radius `r` overlap, i.e. at distance at most `2r`.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{rips_from_adjacency, Adjacency, SimplicialComplex, VertexId};
use crate::{Error, Result};

mod cech;
mod coverage;

pub use cech::{cech_complex, minimax_radius, rips_missed_area};
pub use coverage::{grid_coverage, interval_coverage, Coverage, CoverageGrid, DEFAULT_GRID};

/// Name of the generator behind [`simulate`], echoed in run configs.
pub const RNG_NAME: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, o: Point) -> f64 {
        libm::hypot(self.x - o.x, self.y - o.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Brownian,
    Line,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobilityParams {
    pub model: Model,
    pub n: usize,
    /// Number of snapshots `T`.
    pub steps: usize,
    pub r: f64,
    /// Per-axis standard deviation of a step (Brownian) or of the velocity
    /// (line).
    pub sigma: f64,
    pub seed: u64,
}

impl MobilityParams {
    /// Parameters with `sigma = 0.1 r`.
    pub fn new(model: Model, n: usize, steps: usize, r: f64, seed: u64) -> Self {
        MobilityParams { model, n, steps, r, sigma: 0.1 * r, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::InvalidParameter("T must be at least 1"));
        }
        if !(self.r > 0.0 && self.r.is_finite()) {
            return Err(Error::InvalidParameter("r must be positive"));
        }
        if !(self.sigma >= 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidParameter("sigma must be non-negative"));
        }
        Ok(())
    }
}

/// Positions of `n` nodes at `T` snapshots.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    n: usize,
    steps: usize,
    r: f64,
    positions: Vec<Point>,
}

impl Trace {
    /// Builds a trace from per-snapshot position lists.
    pub fn from_snapshots(r: f64, snapshots: Vec<Vec<Point>>) -> Result<Self> {
        let n = snapshots.first().map_or(0, Vec::len);
        let steps = snapshots.len();
        if steps == 0 {
            return Err(Error::EmptySequence);
        }
        let mut positions = Vec::with_capacity(n * snapshots.len());
        for s in snapshots {
            if s.len() != n {
                return Err(Error::VertexCountMismatch { expected: n, found: s.len() });
            }
            positions.extend(s);
        }
        Ok(Trace { n, steps, r, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of snapshots `T`.
    pub fn len(&self) -> usize {
        self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps == 0
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Positions at snapshot `t`, 1-based.
    pub fn at(&self, t: usize) -> &[Point] {
        &self.positions[(t - 1) * self.n..t * self.n]
    }

    pub fn snapshots(&self) -> impl Iterator<Item = &[Point]> + '_ {
        (1..=self.steps).map(|t| self.at(t))
    }
}

fn gaussian_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen::<f64>();
    let radius = libm::sqrt(-2.0 * libm::log(u1));
    let angle = 2.0 * core::f64::consts::PI * u2;
    (radius * libm::cos(angle), radius * libm::sin(angle))
}

/// Folds a coordinate back into `[0, 1]`; the flag is set when the number of
/// wall hits is odd.
fn fold(x: f64) -> (f64, bool) {
    if (0.0..=1.0).contains(&x) {
        return (x, false);
    }
    let m = libm::floor(x);
    let frac = x - m;
    if (m as i64).rem_euclid(2) == 1 {
        (1.0 - frac, true)
    } else {
        (frac, false)
    }
}

pub fn simulate(params: &MobilityParams) -> Result<Trace> {
    params.validate()?;
    let MobilityParams { model, n, steps, sigma, .. } = *params;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut cur: Vec<Point> = (0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect();
    // Motion draws come from a per-model stream so that paired runs share
    // only the start.
    rng.set_stream(match model {
        Model::Brownian => 1,
        Model::Line => 2,
    });
    let mut velocity: Vec<(f64, f64)> = match model {
        Model::Line => (0..n)
            .map(|_| {
                let (a, b) = gaussian_pair(&mut rng);
                (sigma * a, sigma * b)
            })
            .collect(),
        Model::Brownian => Vec::new(),
    };
    let mut positions = Vec::with_capacity(n * steps);
    positions.extend_from_slice(&cur);
    for _ in 1..steps {
        for (i, p) in cur.iter_mut().enumerate() {
            let (dx, dy) = match model {
                Model::Brownian => {
                    let (a, b) = gaussian_pair(&mut rng);
                    (sigma * a, sigma * b)
                }
                Model::Line => velocity[i],
            };
            let (x, fx) = fold(p.x + dx);
            let (y, fy) = fold(p.y + dy);
            *p = Point::new(x, y);
            if model == Model::Line {
                if fx {
                    velocity[i].0 = -velocity[i].0;
                }
                if fy {
                    velocity[i].1 = -velocity[i].1;
                }
            }
        }
        positions.extend_from_slice(&cur);
    }
    Ok(Trace { n, steps, r: params.r, positions })
}

/// Closed `≤ 2r` test with a relative tolerance for round-off.
pub(crate) fn within(d: f64, limit: f64) -> bool {
    d <= limit * (1.0 + 1e-12)
}

/// Communication graph of a configuration: `‖x_i - x_j‖ ≤ 2r`.
pub fn adjacency(points: &[Point], r: f64) -> Adjacency {
    let mut adj = Adjacency::new(points.len());
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if within(points[i].dist(points[j]), 2.0 * r) {
                adj.connect(VertexId::from_index(i), VertexId::from_index(j)).expect("in range");
            }
        }
    }
    adj
}

pub fn adjacency_at(trace: &Trace, t: usize) -> Result<Adjacency> {
    if t == 0 || t > trace.len() {
        return Err(Error::SnapshotOutOfRange { t, len: trace.len() });
    }
    Ok(adjacency(trace.at(t), trace.r()))
}

/// Rips complexes of every snapshot.
pub fn rips_snapshots(trace: &Trace) -> Vec<SimplicialComplex> {
    trace.snapshots().map(|p| rips_from_adjacency(&adjacency(p, trace.r()))).collect()
}
