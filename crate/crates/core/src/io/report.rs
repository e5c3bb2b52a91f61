//! JSON report envelope shared by every CLI subcommand.
//!
//! Keys are emitted in sorted order (the envelope goes through
//! `serde_json::Value`, whose maps are ordered), so identical inputs give
//! byte-identical output.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::digraph::Digraph;
use crate::families::FamilySpec;
use crate::index::IndexReport;
use crate::metrics::{DistanceData, EccProfile};

use super::edge_list::serialize_edge_list;
use crate::extremal::encode_digraph;

/// Bumped on any payload change.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// JSON Schema describing every report kind.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    Index,
    Profile,
    Verify,
    Enumerate,
    Generate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: String,
    pub kind: ReportKind,
    pub payload: Value,
}

impl JsonReport {
    pub fn new<T: Serialize>(kind: ReportKind, payload: &T) -> Self {
        JsonReport {
            schema_version: SCHEMA_VERSION.to_string(),
            kind,
            payload: serde_json::to_value(payload).expect("payload serializes"),
        }
    }

    /// Pretty-printed with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexPayload {
    pub n: usize,
    pub index: IndexReport,
    pub profile: EccProfile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub md_matrix: Option<Vec<Vec<u32>>>,
}

impl IndexPayload {
    pub fn new(
        d: &Digraph,
        index: IndexReport,
        profile: EccProfile,
        distances: Option<&DistanceData>,
    ) -> Self {
        IndexPayload {
            n: d.order(),
            index,
            profile,
            md_matrix: distances
                .map(|data| (0..data.order()).map(|u| data.md_row(u).to_vec()).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfilePayload {
    pub n: usize,
    pub profile: EccProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratePayload {
    pub spec: FamilySpec,
    pub n: usize,
    pub arc_count: usize,
    pub encoding: String,
    pub edge_list: String,
}

impl GeneratePayload {
    pub fn new(spec: FamilySpec, d: &Digraph) -> Self {
        GeneratePayload {
            spec,
            n: d.order(),
            arc_count: d.arc_count(),
            encoding: encode_digraph(d),
            edge_list: serialize_edge_list(d),
        }
    }
}
