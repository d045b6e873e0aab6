use covtrack::formats::*;
use covtrack::CliError;
use covtrack_core::barcode::{BarcodeStats, WeightedBar, WeightedBarcode};
use covtrack_core::complex::{Adjacency, Chain, VertexId};
use covtrack_core::mobility::{Point, Trace};
use covtrack_core::zigzag::Interval;
use proptest::prelude::*;

fn trace_strategy() -> impl Strategy<Value = Trace> {
    (0usize..6, 1usize..5, 0.01f64..0.5).prop_flat_map(|(n, steps, r)| {
        prop::collection::vec((0.0f64..=1.0, 0.0f64..=1.0), n * steps).prop_map(move |xy| {
            let pts: Vec<Point> = xy.into_iter().map(|(x, y)| Point::new(x, y)).collect();
            let snaps = if n == 0 { vec![Vec::new(); steps] } else { pts.chunks(n).map(<[Point]>::to_vec).collect() };
            Trace::from_snapshots(r, snaps).unwrap()
        })
    })
}

fn snapshots_strategy() -> impl Strategy<Value = Snapshots> {
    (2usize..8, 1usize..5).prop_flat_map(|(n, steps)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n * (n - 1) / 2), steps).prop_map(move |bits| {
            let graphs = bits
                .iter()
                .map(|b| {
                    let mut g = Adjacency::new(n);
                    let mut k = 0;
                    for u in 1..=n as u32 {
                        for v in u + 1..=n as u32 {
                            if b[k] {
                                g.connect(VertexId(u), VertexId(v)).unwrap();
                            }
                            k += 1;
                        }
                    }
                    g
                })
                .collect();
            Snapshots { n, graphs }
        })
    })
}

fn barcode_strategy() -> impl Strategy<Value = WeightedBarcode> {
    (1usize..8).prop_flat_map(|horizon| {
        let bar = (1..=horizon).prop_flat_map(move |b| (Just(b), b..=horizon)).prop_flat_map(|(b, d)| {
            let len = d - b + 1;
            (
                Just(Interval::new(b, d)),
                prop::option::of(prop::collection::vec(0usize..5, len)),
                prop::option::of(prop::collection::vec(3u32..7, len)),
            )
                .prop_map(|(interval, weights, polys)| WeightedBar {
                    interval,
                    weights,
                    cycles: polys.map(|ks| {
                        ks.into_iter()
                            .map(|k| Chain::polygon(&(1..=k).map(VertexId).collect::<Vec<_>>()).unwrap())
                            .collect()
                    }),
                })
        });
        prop::collection::vec(bar, 0..6).prop_map(move |bars| WeightedBarcode { horizon, bars })
    })
}

proptest! {
    #[test]
    fn trace_round_trips(trace in trace_strategy()) {
        let text = write_trace(&trace);
        prop_assert_eq!(parse_trace(&text, "t").unwrap(), trace);
    }

    #[test]
    fn snapshots_round_trip(s in snapshots_strategy()) {
        prop_assert_eq!(parse_snapshots(&write_snapshots(&s), "s").unwrap(), s);
    }

    #[test]
    fn barcode_round_trips(wb in barcode_strategy()) {
        prop_assert_eq!(barcode_from_json(&barcode_to_json(&wb), "b").unwrap(), wb);
    }

    #[test]
    fn stats_round_trip(num in 0usize..50, sum in 0usize..500, lt in prop::collection::vec(0usize..9, 0..12)) {
        let s = BarcodeStats { num_bars: num, sum_of_bars: sum, lt_counts: lt };
        prop_assert_eq!(stats_from_csv(&stats_to_csv(&s), "s").unwrap(), s);
    }

    #[test]
    fn coverage_round_trips(vals in prop::collection::vec((0.0f64..=1.0, 0.0f64..=1.0, 0.0f64..=1.0), 0..8)) {
        let rows: Vec<CoverageRow> = vals
            .into_iter()
            .enumerate()
            .map(|(k, (a, b, c))| CoverageRow { t: k + 1, proportion_covered: a, hole_area: b, interval_coverage: c })
            .collect();
        prop_assert_eq!(coverage_from_csv(&coverage_to_csv(&rows), "c").unwrap(), rows);
    }
}

#[test]
fn guard_doc_round_trips() {
    let doc = GuardDoc {
        horizon: 3,
        status: vec!["alive".into(), "alive".into(), "broken".into()],
        break_time: Some(3),
        cycles: vec![vec![[1, 2], [2, 3], [1, 3]]; 2],
    };
    assert_eq!(guard_from_json(&guard_to_json(&doc), "g").unwrap(), doc);
}

fn parse_line(e: CliError) -> u64 {
    match e {
        CliError::Parse { line, .. } => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn malformed_trace_names_the_line() {
    let text = "# n=2 T=1 r=0.1\n1\t1\t0.5\t0.5\n1\t2\tabc\t0.5\n";
    assert_eq!(parse_line(parse_trace(text, "t").unwrap_err()), 3);
    let text = "# n=2 T=1 r=0.1\n1\t1\t0.5\t0.5\n1\t3\t0.1\t0.5\n";
    assert_eq!(parse_line(parse_trace(text, "t").unwrap_err()), 3);
    let text = "# n=2 T=1 r=0.1\n1\t1\t0.5\t0.5\n1\t1\t0.1\t0.5\n";
    assert_eq!(parse_line(parse_trace(text, "t").unwrap_err()), 3);
    let missing = parse_trace("# n=2 T=1 r=0.1\n1\t1\t0.5\t0.5\n", "t").unwrap_err();
    assert!(missing.to_string().contains("t=1, i=2"));
    assert_eq!(parse_line(parse_trace("n=2\n", "t").unwrap_err()), 1);
    assert_eq!(parse_line(parse_trace("# n=2 T=1\n", "t").unwrap_err()), 1);
}

#[test]
fn malformed_snapshots_name_the_line() {
    let text = "# n=3 T=2\n1\t1\t2\n2\t2\t4\n";
    assert_eq!(parse_line(parse_snapshots(text, "s").unwrap_err()), 3);
    let text = "# n=3 T=2\n3\t1\t2\n";
    assert_eq!(parse_line(parse_snapshots(text, "s").unwrap_err()), 2);
    let text = "# n=3 T=2\n1\t2\t2\n";
    assert_eq!(parse_line(parse_snapshots(text, "s").unwrap_err()), 2);
    let text = "# n=3 T=2\n1\t2\n";
    assert_eq!(parse_line(parse_snapshots(text, "s").unwrap_err()), 2);
}

fn schema_path(e: CliError) -> String {
    match e {
        CliError::Schema { path, .. } => path,
        other => panic!("expected a schema error, got {other:?}"),
    }
}

#[test]
fn schema_errors_carry_the_json_path() {
    let e = barcode_from_json(r#"{"T":5,"bars":[{"birth":1,"death":2},{"birth":"x","death":2}]}"#, "b");
    assert_eq!(schema_path(e.unwrap_err()), "bars[1].birth");
    let e = barcode_from_json(r#"{"T":5,"bars":[{"birth":3,"death":2}]}"#, "b");
    assert_eq!(schema_path(e.unwrap_err()), "bars[0]");
    let e = barcode_from_json(r#"{"T":5,"bars":[{"birth":1,"death":2,"weights":[1]}]}"#, "b");
    assert_eq!(schema_path(e.unwrap_err()), "bars[0].weights");
    let e = barcode_from_json(r#"{"T":5,"bars":[{"birth":1,"death":1,"cycles":[[[1,1]]]}]}"#, "b");
    assert_eq!(schema_path(e.unwrap_err()), "bars[0].cycles[0][0]");
    let e = barcode_from_json(r#"{"T":5,"bars":[],"extra":1}"#, "b");
    assert!(matches!(e.unwrap_err(), CliError::Schema { .. }));
}

#[test]
fn stats_csv_labels_both_conventions() {
    let s = BarcodeStats::from_intervals(&[Interval::new(2, 9), Interval::new(4, 7), Interval::new(6, 8), Interval::new(9, 10)], 10)
        .unwrap();
    let csv = stats_to_csv(&s);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("num_bars,sum_of_bars,lt_1,lt_2,lt_3,lt_4,lt_5,lt_6,lt_7,lt_8,lt_9,lt_10"));
    assert_eq!(lines.next(), Some("4,13,0,1,1,1,0,0,0,1,0,0"));
    assert!(stats_from_csv("a,b\n1,2\n", "s").is_err());
}
