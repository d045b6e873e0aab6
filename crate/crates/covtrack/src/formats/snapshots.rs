//! Snapshot TSV: `# n=<n> T=<T>` then one row `t<TAB>u<TAB>v` per edge.

use std::fmt::Write;

use covtrack_core::complex::{Adjacency, VertexId};

use super::header::{check_width, field, rows, Header};
use crate::error::{CliError, Result};

/// Communication graphs of `T` snapshots on a common vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshots {
    pub n: usize,
    pub graphs: Vec<Adjacency>,
}

impl Snapshots {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// Rows are ordered by `t`, then `u < v` lexicographically.
pub fn write_snapshots(s: &Snapshots) -> String {
    let mut out = format!("# n={} T={}\n", s.n, s.len());
    for (t, g) in s.graphs.iter().enumerate() {
        for (u, v) in g.edges() {
            writeln!(out, "{}\t{}\t{}", t + 1, u, v).expect("string write");
        }
    }
    out
}

pub fn parse_snapshots(text: &str, source: &str) -> Result<Snapshots> {
    let header = Header::parse(text, source)?;
    let n: usize = header.get("n")?;
    let steps: usize = header.get("T")?;
    if steps == 0 {
        return Err(CliError::parse(source, 1, "T must be at least 1"));
    }
    let mut graphs = vec![Adjacency::new(n); steps];
    for (rec, line) in rows(text) {
        check_width(&rec, 3, source, line)?;
        let t: usize = field(&rec, 0, "t", source, line)?;
        let u: u32 = field(&rec, 1, "u", source, line)?;
        let v: u32 = field(&rec, 2, "v", source, line)?;
        if !(1..=steps).contains(&t) {
            return Err(CliError::parse(source, line, format!("t={t} outside 1..={steps}")));
        }
        if u == v || u == 0 || v == 0 || u as usize > n || v as usize > n {
            return Err(CliError::parse(source, line, format!("edge {u}-{v} is not a pair of distinct vertices in 1..={n}")));
        }
        graphs[t - 1].connect(VertexId(u), VertexId(v)).map_err(|e| CliError::parse(source, line, e.to_string()))?;
    }
    Ok(Snapshots { n, graphs })
}
