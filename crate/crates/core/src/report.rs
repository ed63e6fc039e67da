//! Machine-readable output: the JSON envelope shared by every command and
//! tab-separated tables.
//!
//! The envelope layout is published as `docs/output.schema.json`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::analysis::OrderHistogram;
use crate::classifier::{CertifiedWitness, PairClassification};
use crate::group::HolderPresentation;
use crate::oracle::{
    erdos_estimate, CaseAnalysisSweep, NilpotencySweep, PairCounts, StructureSweep,
};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Counterexample,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Counterexample => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputEnvelope {
    pub schema_version: &'static str,
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub status: Status,
}

impl OutputEnvelope {
    pub fn new(command: &str, parameters: Value, result: impl Serialize, status: Status) -> Self {
        OutputEnvelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_owned(),
            parameters,
            result: serde_json::to_value(result).expect("report types serialize to JSON"),
            status,
        }
    }

    pub fn error(command: &str, parameters: Value, message: &str) -> Self {
        let result = serde_json::json!({ "message": message });
        Self::new(command, parameters, result, Status::Error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes to JSON")
    }
}

/// Result payload of `classify`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyResult {
    pub m: u64,
    pub n: u64,
    pub nilpotent_pair: bool,
    pub singular_pair: bool,
    pub cyclic_pair: bool,
    pub classification: PairClassification,
}

impl ClassifyResult {
    pub fn case_label(&self) -> String {
        let c = &self.classification;
        match (c.success_case(), c.failure_case()) {
            (Some(s), _) => s.to_string(),
            (_, Some(f)) => f.to_string(),
            _ => unreachable!("a classification carries exactly one case"),
        }
    }
}

/// Result payload of `witness`.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessResult {
    pub presentations: Vec<HolderPresentation>,
    pub order_a: u64,
    pub order_b: u64,
    pub verified: bool,
    #[serde(flatten)]
    pub certified: CertifiedWitness,
}

/// Result payload of `group`.
#[derive(Debug, Clone, Serialize)]
pub struct GroupResult {
    pub presentation: HolderPresentation,
    pub order: u64,
    pub abelian: bool,
    pub nilpotent: bool,
    pub nilpotent_coprime: bool,
    pub nilpotent_sylow: bool,
    pub cyclic: bool,
    pub histogram: OrderHistogram,
}

/// Result payload of `sweep`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub case_analysis: CaseAnalysisSweep,
    pub nilpotency: NilpotencySweep,
    pub structure: StructureSweep,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.case_analysis.passed() && self.nilpotency.passed() && self.structure.passed()
    }
}

/// One row of the counting table.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CountRow {
    #[serde(flatten)]
    pub counts: PairCounts,
    /// Absent below `x = 16`.
    pub erdos_estimate: Option<f64>,
    /// `cyclic_numbers / erdos_estimate`.
    pub ratio: Option<f64>,
}

impl From<PairCounts> for CountRow {
    fn from(counts: PairCounts) -> Self {
        let erdos_estimate = erdos_estimate(counts.x).ok();
        CountRow {
            counts,
            erdos_estimate,
            ratio: erdos_estimate.map(|z| counts.cyclic_numbers as f64 / z),
        }
    }
}

/// `1:1,2:3,3:2`
pub fn histogram_inline(h: &OrderHistogram) -> String {
    let parts: Vec<String> = h.counts().iter().map(|(o, c)| format!("{o}:{c}")).collect();
    parts.join(",")
}

/// A header row and records, tab-separated and LF-terminated.
#[derive(Debug, Clone, Default)]
pub struct Tsv {
    out: String,
}

impl Tsv {
    pub fn new(header: &[&str]) -> Self {
        let mut t = Tsv::default();
        t.row(header.iter().map(|h| h.to_string()));
        t
    }

    pub fn row<I, S>(&mut self, cells: I) -> &mut Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let cells: Vec<String> = cells.into_iter().map(|c| c.to_string()).collect();
        writeln!(self.out, "{}", cells.join("\t")).expect("writing to a String");
        self
    }

    pub fn finish(self) -> String {
        self.out
    }
}

pub fn count_table_tsv(rows: &[CountRow]) -> String {
    let mut t = Tsv::new(&[
        "x",
        "nilpotent_pairs",
        "singular_pairs",
        "cyclic_pairs",
        "cyclic_numbers",
        "erdos_estimate",
        "ratio",
    ]);
    let fmt = |v: Option<f64>| v.map(|v| format!("{v:.6}")).unwrap_or_default();
    for r in rows {
        let c = r.counts;
        t.row([
            c.x.to_string(),
            c.nilpotent_pairs.to_string(),
            c.singular_pairs.to_string(),
            c.cyclic_pairs.to_string(),
            c.cyclic_numbers.to_string(),
            fmt(r.erdos_estimate),
            fmt(r.ratio),
        ]);
    }
    t.finish()
}
