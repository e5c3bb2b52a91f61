//! Edge-list files and JSON reports.

mod edge_list;
mod report;

pub use edge_list::{parse_edge_list, serialize_edge_list};
pub use report::{
    GeneratePayload, IndexPayload, JsonReport, ProfilePayload, ReportKind, REPORT_SCHEMA,
    SCHEMA_VERSION,
};
