//! Graph serializations and run reports.

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use edgelist::{emit_edge_list, parse_edge_list, EdgeListGraph};
pub use graph6::{emit_graph6, parse_graph6};
pub use report::{emit_report, Aggregates, GraphRecord, ReportFormat, RunMeta, RunReport};
