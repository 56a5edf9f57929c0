//! Scenario files: parsing, execution and report rendering.
//!
//! A scenario is a strict JSON document declaring the space dimension, the
//! events (as raw spanning vectors), the initial state and an ordered list
//! of queries. Unknown fields are rejected. See the README for the schema.

mod model;
mod report;
mod run;

use thiserror::Error;

pub use model::{
    parse_scenario, serialize_scenario, Component, Query, RawVector, ScalarMode, Scenario, StateSpec, TargetsSpec,
    DEFAULT_GRID_STEP, DEFAULT_REFINE_TOL,
};
pub use report::{emit_report, fixed6, Format, Outcome, QueryResult, Report, Tolerances, TraceStep};
pub use run::{fit_outcome, run_scenario};

/// Canonical conjunction-fallacy scenario: B at 0 degrees, F at 45, state at 80.
pub const LINDA: &str = include_str!("../../scenarios/linda.scenario.json");
/// Canonical similarity-asymmetry scenario in three dimensions.
pub const KOREA_CHINA: &str = include_str!("../../scenarios/korea-china.scenario.json");

/// Bundled scenario text by demo name (`linda` or `korea`).
pub fn demo_scenario(name: &str) -> Option<&'static str> {
    match name {
        "linda" => Some(LINDA),
        "korea" | "korea-china" => Some(KOREA_CHINA),
        _ => None,
    }
}

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("engine error in {context}: {source}")]
    Engine {
        context: String,
        /// Index of the failing query, if the failure came from one.
        query: Option<usize>,
        #[source]
        source: crate::Error,
    },
}

/// Parses `text` as targets for the planar fit.
pub fn parse_targets(text: &[u8]) -> Result<TargetsSpec, ScenarioError> {
    let spec: TargetsSpec = serde_json::from_slice(text).map_err(model::from_json_error)?;
    spec.to_targets().map_err(|e| ScenarioError::Validation(e.to_string()))?;
    Ok(spec)
}
