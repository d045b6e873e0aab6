//! Text and JSON formats for traces, snapshots, barcodes and reports.

mod barcode;
mod csv_tables;
mod header;
mod snapshots;
mod trace;

pub use barcode::{barcode_from_json, barcode_to_json, guard_from_json, guard_to_json, GuardDoc};
pub use csv_tables::{coverage_from_csv, coverage_to_csv, stats_from_csv, stats_to_csv, CoverageRow};
pub use snapshots::{parse_snapshots, write_snapshots, Snapshots};
pub use trace::{parse_trace, write_trace};
