//! Trace TSV: `# n=<n> T=<T> r=<r>` then rows `t<TAB>i<TAB>x<TAB>y`.

use std::fmt::Write;

use covtrack_core::mobility::{Point, Trace};

use super::header::{check_width, field, rows, Header};
use crate::error::{CliError, Result};

/// Coordinates use the shortest representation that parses back exactly.
pub fn write_trace(trace: &Trace) -> String {
    let mut out = format!("# n={} T={} r={}\n", trace.n(), trace.len(), trace.r());
    for (t, snap) in trace.snapshots().enumerate() {
        for (i, p) in snap.iter().enumerate() {
            writeln!(out, "{}\t{}\t{}\t{}", t + 1, i + 1, p.x, p.y).expect("string write");
        }
    }
    out
}

pub fn parse_trace(text: &str, source: &str) -> Result<Trace> {
    let header = Header::parse(text, source)?;
    let n: usize = header.get("n")?;
    let steps: usize = header.get("T")?;
    let r: f64 = header.get("r")?;
    if steps == 0 {
        return Err(CliError::parse(source, 1, "T must be at least 1"));
    }
    let mut slots: Vec<Option<Point>> = vec![None; n * steps];
    for (rec, line) in rows(text) {
        check_width(&rec, 4, source, line)?;
        let t: usize = field(&rec, 0, "t", source, line)?;
        let i: usize = field(&rec, 1, "i", source, line)?;
        let x: f64 = field(&rec, 2, "x", source, line)?;
        let y: f64 = field(&rec, 3, "y", source, line)?;
        if !(1..=steps).contains(&t) || !(1..=n).contains(&i) {
            return Err(CliError::parse(source, line, format!("(t, i) = ({t}, {i}) outside n={n}, T={steps}")));
        }
        let slot = &mut slots[(t - 1) * n + i - 1];
        if slot.is_some() {
            return Err(CliError::parse(source, line, format!("duplicate row for t={t}, i={i}")));
        }
        *slot = Some(Point::new(x, y));
    }
    if let Some(k) = slots.iter().position(Option::is_none) {
        let (t, i) = (k / n + 1, k % n + 1);
        return Err(CliError::parse(source, 1, format!("no row for t={t}, i={i}")));
    }
    let points: Vec<Point> = slots.into_iter().flatten().collect();
    let snapshots = if n == 0 { vec![Vec::new(); steps] } else { points.chunks(n).map(<[Point]>::to_vec).collect() };
    Ok(Trace::from_snapshots(r, snapshots)?)
}
