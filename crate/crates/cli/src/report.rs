use serde::Serialize;
use serde_json::{Map, Value};

use brooks_core::Graph;

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Ok = 0,
    Negative = 1,
    Input = 2,
    Invariant = 3,
}

#[derive(Debug, Serialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
}

impl InputSummary {
    pub fn of(g: &Graph) -> Self {
        InputSummary {
            n: g.n(),
            m: g.edge_count(),
            max_degree: g.max_degree(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    /// The offending graph, for invariant violations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance_graph6: Option<String>,
}

/// The JSON document written to stdout by every command.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub input: Option<InputSummary>,
    pub result: Value,
    pub checks: Map<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub exit_code: i32,
    pub wall_ms: f64,
}
