//! Deterministic SVG barcodes and persistence diagrams.

use std::fmt::Write;

use covtrack_core::barcode::WeightedBarcode;
use covtrack_core::zigzag::Interval;

/// Categorical palette, indexed by bar id.
const PALETTE: [&str; 10] =
    ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Style {
    pub plot_width: f64,
    pub row_height: f64,
    pub margin: f64,
    /// Thickness of a bar with weight 0 or no weights.
    pub base_thickness: f64,
    pub thickness_per_depth: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style { plot_width: 800.0, row_height: 14.0, margin: 40.0, base_thickness: 3.0, thickness_per_depth: 2.5 }
    }
}

impl Style {
    pub fn thickness(&self, weight: usize) -> f64 {
        self.base_thickness + self.thickness_per_depth * weight as f64
    }
}

fn open(out: &mut String, w: f64, h: f64) {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect class="background" x="0" y="0" width="{w:.2}" height="{h:.2}" fill="white"/>"#).unwrap();
}

fn line(out: &mut String, class: &str, x1: f64, y1: f64, x2: f64, y2: f64) {
    writeln!(out, r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black"/>"#)
        .unwrap();
}

fn labelled(t: usize, horizon: usize) -> bool {
    t == 1 || t == horizon || t.is_multiple_of(5)
}

/// One horizontal band per bar over `[b - 1/2, d + 1/2]` on a time axis, rows
/// ordered by `(birth, death, id)`. A weighted bar is drawn as one rectangle
/// per run of equal weight, with thickness affine in the weight.
pub fn render_barcode(wb: &WeightedBarcode, style: &Style) -> String {
    let horizon = wb.horizon.max(1);
    let unit = style.plot_width / horizon as f64;
    let m = style.margin;
    let rows = wb.bars.len().max(1);
    let (w, h) = (style.plot_width + 2.0 * m, rows as f64 * style.row_height + 2.0 * m);
    let x = |t: f64| m + (t - 0.5) * unit;
    let axis_y = h - m;

    let mut out = String::new();
    open(&mut out, w, h);
    out.push_str("<g class=\"axes\">\n");
    line(&mut out, "axis", m, axis_y, w - m, axis_y);
    line(&mut out, "axis", m, m, m, axis_y);
    for t in 1..=wb.horizon {
        let xt = x(t as f64);
        line(&mut out, "tick", xt, axis_y, xt, axis_y + 4.0);
        if labelled(t, wb.horizon) {
            writeln!(out, r#"<text x="{xt:.2}" y="{:.2}" font-size="10" text-anchor="middle">{t}</text>"#, axis_y + 16.0)
                .unwrap();
        }
    }
    out.push_str("</g>\n<g class=\"bars\">\n");

    let mut order: Vec<usize> = (0..wb.bars.len()).collect();
    order.sort_by_key(|&i| (wb.bars[i].interval.birth, wb.bars[i].interval.death, i));
    for (row, &id) in order.iter().enumerate() {
        let bar = &wb.bars[id];
        let Interval { birth, death } = bar.interval;
        let cy = m + (row as f64 + 0.5) * style.row_height;
        writeln!(
            out,
            r#"<g class="bar" data-id="{id}" data-birth="{birth}" data-death="{death}" fill="{}">"#,
            PALETTE[id % PALETTE.len()]
        )
        .unwrap();
        let runs: Vec<(usize, usize, Option<usize>)> = match &bar.weights {
            None => vec![(birth, death, None)],
            Some(ws) => {
                let mut runs: Vec<(usize, usize, Option<usize>)> = Vec::new();
                for (k, &wt) in ws.iter().enumerate() {
                    match runs.last_mut() {
                        Some(last) if last.2 == Some(wt) => last.1 = birth + k,
                        _ => runs.push((birth + k, birth + k, Some(wt))),
                    }
                }
                runs
            }
        };
        for (a, b, wt) in runs {
            let th = style.thickness(wt.unwrap_or(0));
            let (x0, x1) = (x(a as f64 - 0.5), x(b as f64 + 0.5));
            write!(out, r#"<rect x="{x0:.2}" y="{:.2}" width="{:.2}" height="{th:.2}""#, cy - th / 2.0, x1 - x0).unwrap();
            if let Some(wt) = wt {
                write!(out, r#" data-weight="{wt}""#).unwrap();
            }
            out.push_str("/>\n");
        }
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Points `(b, d)` above the drawn diagonal on `[0, T + 1]²`.
pub fn render_diagram(intervals: &[Interval], horizon: usize, style: &Style) -> String {
    let m = style.margin;
    let side = style.plot_width / 2.0;
    let span = (horizon + 1) as f64;
    let s = side / span;
    let (w, h) = (side + 2.0 * m, side + 2.0 * m);
    let px = |b: f64| m + b * s;
    let py = |d: f64| m + (span - d) * s;

    let mut out = String::new();
    open(&mut out, w, h);
    out.push_str("<g class=\"axes\">\n");
    line(&mut out, "axis", px(0.0), py(0.0), px(span), py(0.0));
    line(&mut out, "axis", px(0.0), py(0.0), px(0.0), py(span));
    line(&mut out, "diagonal", px(0.0), py(0.0), px(span), py(span));
    for t in (1..=horizon).filter(|&t| labelled(t, horizon)) {
        let (xt, yt) = (px(t as f64), py(t as f64));
        writeln!(out, r#"<text x="{xt:.2}" y="{:.2}" font-size="10" text-anchor="middle">{t}</text>"#, py(0.0) + 16.0)
            .unwrap();
        writeln!(out, r#"<text x="{:.2}" y="{yt:.2}" font-size="10" text-anchor="end">{t}</text>"#, px(0.0) - 6.0)
            .unwrap();
    }
    out.push_str("</g>\n<g class=\"points\">\n");
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by_key(|&i| (intervals[i].birth, intervals[i].death, i));
    for id in order {
        let Interval { birth, death } = intervals[id];
        writeln!(
            out,
            r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="4" fill="{}" data-id="{id}" data-birth="{birth}" data-death="{death}"/>"#,
            px(birth as f64),
            py(death as f64),
            PALETTE[id % PALETTE.len()]
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
