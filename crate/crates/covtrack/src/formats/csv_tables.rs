//! Stats CSV `num_bars,sum_of_bars,lt_1..lt_T` and coverage CSV
//! `t,proportion_covered,hole_area,interval_coverage`.

use covtrack_core::barcode::BarcodeStats;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageRow {
    pub t: usize,
    pub proportion_covered: f64,
    pub hole_area: f64,
    pub interval_coverage: f64,
}

const COVERAGE_HEADER: [&str; 4] = ["t", "proportion_covered", "hole_area", "interval_coverage"];

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("ascii output")
}

/// `sum_of_bars` is `Σ (d - b)`; `lt_l` counts bars with `d - b + 1 = l`.
pub fn stats_to_csv(s: &BarcodeStats) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["num_bars".to_owned(), "sum_of_bars".to_owned()];
    header.extend((1..=s.lt_counts.len()).map(|l| format!("lt_{l}")));
    w.write_record(&header).expect("in-memory write");
    let mut row = vec![s.num_bars.to_string(), s.sum_of_bars.to_string()];
    row.extend(s.lt_counts.iter().map(usize::to_string));
    w.write_record(&row).expect("in-memory write");
    finish(w)
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes())
}

fn parse_err(source: &str, e: csv::Error) -> CliError {
    CliError::parse(source, e.position().map_or(0, |p| p.line()), e.to_string())
}

fn cell<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize, source: &str) -> Result<T> {
    let line = rec.position().map_or(0, |p| p.line());
    let raw = rec.get(i).ok_or_else(|| CliError::parse(source, line, format!("missing column {}", i + 1)))?;
    raw.parse().map_err(|_| CliError::parse(source, line, format!("bad value `{raw}` in column {}", i + 1)))
}

pub fn stats_from_csv(text: &str, source: &str) -> Result<BarcodeStats> {
    let mut r = reader(text);
    let header = r.headers().map_err(|e| parse_err(source, e))?.clone();
    let lifetimes = header.len().saturating_sub(2);
    let expected: Vec<String> = ["num_bars".to_owned(), "sum_of_bars".to_owned()]
        .into_iter()
        .chain((1..=lifetimes).map(|l| format!("lt_{l}")))
        .collect();
    if header.iter().ne(expected.iter().map(String::as_str)) {
        return Err(CliError::parse(source, 1, "expected header num_bars,sum_of_bars,lt_1,..."));
    }
    let mut records = r.records();
    let rec = match records.next() {
        Some(rec) => rec.map_err(|e| parse_err(source, e))?,
        None => return Err(CliError::parse(source, 2, "missing data row")),
    };
    if records.next().is_some() {
        return Err(CliError::parse(source, 3, "expected a single data row"));
    }
    Ok(BarcodeStats {
        num_bars: cell(&rec, 0, source)?,
        sum_of_bars: cell(&rec, 1, source)?,
        lt_counts: (0..lifetimes).map(|l| cell(&rec, l + 2, source)).collect::<Result<_>>()?,
    })
}

pub fn coverage_to_csv(rows: &[CoverageRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COVERAGE_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record([
            r.t.to_string(),
            r.proportion_covered.to_string(),
            r.hole_area.to_string(),
            r.interval_coverage.to_string(),
        ])
        .expect("in-memory write");
    }
    finish(w)
}

pub fn coverage_from_csv(text: &str, source: &str) -> Result<Vec<CoverageRow>> {
    let mut r = reader(text);
    let header = r.headers().map_err(|e| parse_err(source, e))?.clone();
    if header.iter().ne(COVERAGE_HEADER) {
        return Err(CliError::parse(source, 1, format!("expected header {}", COVERAGE_HEADER.join(","))));
    }
    r.records()
        .map(|rec| {
            let rec = rec.map_err(|e| parse_err(source, e))?;
            Ok(CoverageRow {
                t: cell(&rec, 0, source)?,
                proportion_covered: cell(&rec, 1, source)?,
                hole_area: cell(&rec, 2, source)?,
                interval_coverage: cell(&rec, 3, source)?,
            })
        })
        .collect()
}
