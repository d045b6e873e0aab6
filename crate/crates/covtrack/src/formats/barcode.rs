//! Barcode JSON `{ "T", "bars": [{ "birth", "death", "weights"?, "cycles"? }] }`
//! and the guard report JSON.

use covtrack_core::barcode::{WeightedBar, WeightedBarcode};
use covtrack_core::complex::{Chain, Simplex, VertexId};
use covtrack_core::repcycle::GuardReport;
use covtrack_core::zigzag::Interval;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BarcodeDoc {
    #[serde(rename = "T")]
    horizon: usize,
    bars: Vec<BarDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BarDoc {
    birth: usize,
    death: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cycles: Option<Vec<Vec<[u32; 2]>>>,
}

fn chain_to_edges(c: &Chain) -> Vec<[u32; 2]> {
    c.iter().map(|s| [s.vertices()[0].0, s.vertices()[1].0]).collect()
}

fn edges_to_chain(edges: &[[u32; 2]], source: &str, path: &str) -> Result<Chain> {
    let simplices = edges
        .iter()
        .enumerate()
        .map(|(k, &[u, v])| {
            if u == 0 || v == 0 {
                return Err(CliError::schema(source, format!("{path}[{k}]"), "vertex ids start at 1"));
            }
            Simplex::new(&[VertexId(u), VertexId(v)])
                .map_err(|e| CliError::schema(source, format!("{path}[{k}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Chain::from_simplices(1, simplices).map_err(|e| CliError::schema(source, path, e.to_string()))
}

fn from_json<T: DeserializeOwned>(text: &str, source: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::schema(source, path, e.into_inner().to_string())
    })
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn barcode_to_json(wb: &WeightedBarcode) -> String {
    let doc = BarcodeDoc {
        horizon: wb.horizon,
        bars: wb
            .bars
            .iter()
            .map(|b| BarDoc {
                birth: b.interval.birth,
                death: b.interval.death,
                weights: b.weights.clone(),
                cycles: b.cycles.as_ref().map(|cs| cs.iter().map(chain_to_edges).collect()),
            })
            .collect(),
    };
    to_json(&doc)
}

pub fn barcode_from_json(text: &str, source: &str) -> Result<WeightedBarcode> {
    let doc: BarcodeDoc = from_json(text, source)?;
    let mut bars = Vec::with_capacity(doc.bars.len());
    for (i, b) in doc.bars.into_iter().enumerate() {
        let at = |field: &str| format!("bars[{i}].{field}");
        if b.birth == 0 || b.birth > b.death || b.death > doc.horizon {
            return Err(CliError::schema(source, format!("bars[{i}]"), format!("need 1 <= birth <= death <= T = {}", doc.horizon)));
        }
        let interval = Interval::new(b.birth, b.death);
        if let Some(w) = &b.weights {
            if w.len() != interval.lifetime() {
                return Err(CliError::schema(source, at("weights"), "one weight per snapshot in [birth, death]"));
            }
        }
        let cycles = match b.cycles {
            Some(cs) => {
                if cs.len() != interval.lifetime() {
                    return Err(CliError::schema(source, at("cycles"), "one cycle per snapshot in [birth, death]"));
                }
                let chains = cs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| edges_to_chain(c, source, &format!("bars[{i}].cycles[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                Some(chains)
            }
            None => None,
        };
        bars.push(WeightedBar { interval, weights: b.weights, cycles });
    }
    Ok(WeightedBarcode { horizon: doc.horizon, bars })
}

/// Guard report as written by `covtrack guard`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GuardDoc {
    #[serde(rename = "T")]
    pub horizon: usize,
    /// `"alive"` or `"broken"` per snapshot.
    pub status: Vec<String>,
    pub break_time: Option<usize>,
    /// Continued ring at each snapshot up to the break.
    pub cycles: Vec<Vec<[u32; 2]>>,
}

impl GuardDoc {
    pub fn from_report(report: &GuardReport) -> Self {
        GuardDoc {
            horizon: report.alive.len(),
            status: report.alive.iter().map(|&a| if a { "alive" } else { "broken" }.to_owned()).collect(),
            break_time: report.break_time,
            cycles: report.cycles.iter().map(chain_to_edges).collect(),
        }
    }
}

pub fn guard_to_json(doc: &GuardDoc) -> String {
    to_json(doc)
}

pub fn guard_from_json(text: &str, source: &str) -> Result<GuardDoc> {
    from_json(text, source)
}
