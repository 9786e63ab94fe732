//! Run reports: `{meta, records, aggregates}` as JSON, or one CSV row per
//! (graph, check) pair.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::harness::EnumerationSpec;
use crate::theorems::{BoundCheckResult, TheoremId};
use crate::IndexVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunMeta {
    pub tool: String,
    pub version: String,
    /// Caller supplied; left empty by the library so reports stay reproducible.
    pub timestamp: Option<String>,
    pub seed: Option<u64>,
    pub spec: Option<EnumerationSpec>,
    pub theorems: Vec<TheoremId>,
}

impl RunMeta {
    pub fn new(spec: Option<EnumerationSpec>, theorems: Vec<TheoremId>) -> Self {
        RunMeta {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: None,
            seed: None,
            spec,
            theorems,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphRecord {
    /// Canonical graph6 when the graph is small enough, labelled graph6 otherwise.
    pub graph_key: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub indices: Option<IndexVector>,
    pub line_indices: Option<IndexVector>,
    pub checks: Vec<BoundCheckResult>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub applicable: usize,
    pub not_applicable: usize,
    pub violations: usize,
    pub equality_cases: usize,
}

/// A failed check with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub graph_key: String,
    pub graph6: String,
    pub theorem: TheoremId,
    pub indices: Option<IndexVector>,
    pub check: BoundCheckResult,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Aggregates {
    pub graphs_checked: usize,
    pub checks_run: usize,
    pub applicable: usize,
    pub not_applicable: usize,
    /// Number of checks with `satisfied = false`.
    pub violations: usize,
    pub equality_cases: usize,
    pub per_theorem: BTreeMap<TheoremId, TheoremTally>,
    pub violation_list: Vec<Violation>,
}

impl Aggregates {
    pub fn from_records(records: &[GraphRecord]) -> Self {
        let mut agg = Aggregates {
            graphs_checked: records.len(),
            ..Aggregates::default()
        };
        for rec in records {
            for c in &rec.checks {
                agg.checks_run += 1;
                let tally = agg.per_theorem.entry(c.theorem).or_default();
                if !c.applicable {
                    agg.not_applicable += 1;
                    tally.not_applicable += 1;
                    continue;
                }
                agg.applicable += 1;
                tally.applicable += 1;
                if c.equality {
                    agg.equality_cases += 1;
                    tally.equality_cases += 1;
                }
                if !c.satisfied {
                    agg.violations += 1;
                    tally.violations += 1;
                    agg.violation_list.push(Violation {
                        graph_key: rec.graph_key.clone(),
                        graph6: rec.graph6.clone(),
                        theorem: c.theorem,
                        indices: rec.indices.clone(),
                        check: c.clone(),
                    });
                }
            }
        }
        agg
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub meta: RunMeta,
    pub records: Vec<GraphRecord>,
    pub aggregates: Aggregates,
}

impl RunReport {
    /// Fills the aggregates from `records`.
    pub fn new(meta: RunMeta, records: Vec<GraphRecord>) -> Self {
        let aggregates = Aggregates::from_records(&records);
        RunReport {
            meta,
            records,
            aggregates,
        }
    }

    pub fn has_violations(&self) -> bool {
        self.aggregates.violations > 0
    }
}

pub const CSV_COLUMNS: [&str; 11] = [
    "graph_key",
    "n",
    "m",
    "max_deg",
    "min_deg",
    "theorem_id",
    "lhs",
    "rhs",
    "satisfied",
    "equality",
    "slack",
];

pub fn emit_report(report: &RunReport, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report)?;
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS)?;
            let text = |v: &Option<crate::value::Value>| {
                v.as_ref().map(ToString::to_string).unwrap_or_default()
            };
            for rec in &report.records {
                for c in &rec.checks {
                    w.write_record([
                        rec.graph_key.clone(),
                        rec.n.to_string(),
                        rec.m.to_string(),
                        rec.max_degree.to_string(),
                        rec.min_degree.to_string(),
                        c.theorem.to_string(),
                        text(&c.lhs),
                        text(&c.rhs),
                        if c.applicable {
                            c.satisfied.to_string()
                        } else {
                            "n/a".into()
                        },
                        c.equality.to_string(),
                        text(&c.slack),
                    ])?;
                }
            }
            w.flush().map_err(|e| crate::Error::Csv(e.into()))?;
            Ok(w.into_inner()
                .map_err(|e| crate::Error::Csv(e.into_error().into()))?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::harness::run_verification_on;

    fn c4_report() -> RunReport {
        run_verification_on(
            vec![Graph::cycle(4)],
            &TheoremId::ALL,
            RunMeta::new(None, TheoremId::ALL.to_vec()),
        )
    }

    #[test]
    fn empty_report_is_valid() {
        let r = RunReport::new(RunMeta::new(None, vec![]), vec![]);
        let json: serde_json::Value =
            serde_json::from_slice(&emit_report(&r, ReportFormat::Json).unwrap()).unwrap();
        assert_eq!(json["records"].as_array().unwrap().len(), 0);
        assert_eq!(json["aggregates"]["violations"], 0);
        let csv = String::from_utf8(emit_report(&r, ReportFormat::Csv).unwrap()).unwrap();
        assert_eq!(csv.trim_end(), CSV_COLUMNS.join(","));
    }

    #[test]
    fn one_row_per_graph_and_check() {
        let r = c4_report();
        let csv = String::from_utf8(emit_report(&r, ReportFormat::Csv).unwrap()).unwrap();
        assert_eq!(csv.lines().count(), 1 + TheoremId::ALL.len());
        let t7 = csv.lines().find(|l| l.contains(",T7,")).unwrap();
        assert!(t7.ends_with("16/1,16/1,true,true,0/1"), "{t7}");
    }

    #[test]
    fn output_is_deterministic() {
        let a = emit_report(&c4_report(), ReportFormat::Json).unwrap();
        let b = emit_report(&c4_report(), ReportFormat::Json).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn counters_match_records() {
        let r = c4_report();
        let failed = r
            .records
            .iter()
            .flat_map(|x| &x.checks)
            .filter(|c| !c.satisfied)
            .count();
        assert_eq!(r.aggregates.violations, failed);
        assert_eq!(r.aggregates.checks_run, 11);
        assert_eq!(r.aggregates.applicable + r.aggregates.not_applicable, 11);
    }
}
