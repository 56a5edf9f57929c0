use indexmap::IndexMap;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::ScenarioError;
use crate::fit::Targets2D;
use crate::linalg::Vector;

/// Declarative description of a model geometry plus the queries to run on it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub dimension: usize,
    #[serde(default)]
    pub scalar_mode: ScalarMode,
    /// Event name to the raw vectors spanning it.
    pub events: IndexMap<String, Vec<RawVector>>,
    pub state: StateSpec,
    #[serde(default)]
    pub queries: Vec<Query>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarMode {
    #[default]
    Real,
    Complex,
}

/// A bare real in real mode, an `[re, im]` pair in complex mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Component {
    Real(f64),
    Complex([f64; 2]),
}

pub type RawVector = Vec<Component>;

/// Initial cognitive state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateRepr", into = "StateRepr")]
pub enum StateSpec {
    /// Explicit amplitudes, normalized on use.
    Vector(RawVector),
    /// Normalized all-ones vector.
    Uniform,
    /// Normalized sum of the uniform unit vectors of the named events.
    UniformOver(Vec<String>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum StateRepr {
    Keyword(String),
    Vector(RawVector),
    Over(UniformOver),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UniformOver {
    uniform_over: Vec<String>,
}

impl TryFrom<StateRepr> for StateSpec {
    type Error = String;

    fn try_from(repr: StateRepr) -> Result<Self, String> {
        match repr {
            StateRepr::Keyword(k) if k == "uniform" => Ok(StateSpec::Uniform),
            StateRepr::Keyword(k) => Err(format!("unknown state keyword `{k}` (expected \"uniform\")")),
            StateRepr::Vector(v) => Ok(StateSpec::Vector(v)),
            StateRepr::Over(o) => Ok(StateSpec::UniformOver(o.uniform_over)),
        }
    }
}

impl From<StateSpec> for StateRepr {
    fn from(spec: StateSpec) -> Self {
        match spec {
            StateSpec::Vector(v) => StateRepr::Vector(v),
            StateSpec::Uniform => StateRepr::Keyword("uniform".into()),
            StateSpec::UniformOver(names) => StateRepr::Over(UniformOver { uniform_over: names }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Query {
    Probability {
        event: String,
    },
    Sequence {
        events: Vec<String>,
    },
    ConjunctionGap {
        first: String,
        second: String,
    },
    Disjunction {
        first: String,
        second: String,
    },
    OrderEffect {
        first: String,
        second: String,
    },
    Interference {
        partition: String,
        target: String,
    },
    Similarity {
        first: String,
        second: String,
    },
    Compatibility {
        first: String,
        second: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tolerance: Option<f64>,
    },
    Joint {
        first: String,
        second: String,
    },
    #[serde(rename = "fit2d")]
    Fit2d {
        targets: TargetsSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grid_step: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tol: Option<f64>,
    },
}

impl Query {
    pub fn kind(&self) -> &'static str {
        match self {
            Query::Probability { .. } => "probability",
            Query::Sequence { .. } => "sequence",
            Query::ConjunctionGap { .. } => "conjunction_gap",
            Query::Disjunction { .. } => "disjunction",
            Query::OrderEffect { .. } => "order_effect",
            Query::Interference { .. } => "interference",
            Query::Similarity { .. } => "similarity",
            Query::Compatibility { .. } => "compatibility",
            Query::Joint { .. } => "joint",
            Query::Fit2d { .. } => "fit2d",
        }
    }

    /// Event names the query refers to, in argument order.
    pub fn event_names(&self) -> Vec<&str> {
        match self {
            Query::Probability { event } => vec![event],
            Query::Sequence { events } => events.iter().map(String::as_str).collect(),
            Query::ConjunctionGap { first, second }
            | Query::Disjunction { first, second }
            | Query::OrderEffect { first, second }
            | Query::Similarity { first, second }
            | Query::Compatibility { first, second, .. }
            | Query::Joint { first, second } => vec![first, second],
            Query::Interference { partition, target } => vec![partition, target],
            Query::Fit2d { .. } => Vec::new(),
        }
    }
}

/// Observed probabilities for the planar fit; also the `qjudge fit` file format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetsSpec {
    pub p_second: f64,
    pub p_first: f64,
    pub p_seq: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<[f64; 3]>,
}

impl TargetsSpec {
    pub fn to_targets(&self) -> crate::Result<Targets2D<f64>> {
        Targets2D::with_weights(self.p_second, self.p_first, self.p_seq, self.weights.unwrap_or([1.0; 3]))
    }
}

pub const DEFAULT_GRID_STEP: f64 = 1.0;
pub const DEFAULT_REFINE_TOL: f64 = 1e-4;

pub(crate) fn from_json_error(err: serde_json::Error) -> ScenarioError {
    use serde_json::error::Category;
    let (line, column) = (err.line(), err.column());
    let message = err.to_string();
    match err.classify() {
        Category::Data => ScenarioError::Validation(message),
        Category::Io | Category::Syntax | Category::Eof => ScenarioError::Syntax { line, column, message },
    }
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &[u8]) -> Result<Scenario, ScenarioError> {
    let scenario: Scenario = serde_json::from_slice(text).map_err(from_json_error)?;
    scenario.validate()?;
    Ok(scenario)
}

/// Pretty JSON that [`parse_scenario`] reads back to an equal value.
pub fn serialize_scenario(scenario: &Scenario) -> String {
    serde_json::to_string_pretty(scenario).expect("scenario is always serializable")
}

fn invalid(message: impl Into<String>) -> ScenarioError {
    ScenarioError::Validation(message.into())
}

impl Scenario {
    pub fn validate(&self) -> Result<(), ScenarioError> {
        if self.dimension == 0 {
            return Err(invalid("dimension must be positive"));
        }
        if self.events.is_empty() {
            return Err(invalid("at least one event must be declared"));
        }
        for (name, vectors) in &self.events {
            if name.is_empty() {
                return Err(invalid("event names must be nonempty"));
            }
            if vectors.is_empty() {
                return Err(invalid(format!("event `{name}` has no vectors")));
            }
            for (i, v) in vectors.iter().enumerate() {
                self.check_vector(v)
                    .map_err(|m| invalid(format!("event `{name}`, vector {i}: {m}")))?;
            }
        }
        match &self.state {
            StateSpec::Vector(v) => self.check_vector(v).map_err(|m| invalid(format!("state: {m}")))?,
            StateSpec::Uniform => {}
            StateSpec::UniformOver(names) => {
                if names.is_empty() {
                    return Err(invalid("state: uniform_over needs at least one event"));
                }
                for n in names {
                    self.check_declared(n).map_err(|m| invalid(format!("state: {m}")))?;
                }
            }
        }
        for (index, query) in self.queries.iter().enumerate() {
            self.check_query(query)
                .map_err(|m| invalid(format!("query {index} ({}): {m}", query.kind())))?;
        }
        Ok(())
    }

    fn check_vector(&self, v: &RawVector) -> Result<(), String> {
        if v.len() != self.dimension {
            return Err(format!("expected {} components, found {}", self.dimension, v.len()));
        }
        for c in v {
            let finite = match (self.scalar_mode, c) {
                (ScalarMode::Real, Component::Real(x)) => x.is_finite(),
                (ScalarMode::Complex, Component::Complex([re, im])) => re.is_finite() && im.is_finite(),
                (ScalarMode::Real, Component::Complex(_)) => {
                    return Err("complex component in real mode".into());
                }
                (ScalarMode::Complex, Component::Real(_)) => {
                    return Err("complex mode expects [re, im] pairs".into());
                }
            };
            if !finite {
                return Err("non-finite number".into());
            }
        }
        Ok(())
    }

    fn check_declared(&self, name: &str) -> Result<(), String> {
        if self.events.contains_key(name) {
            Ok(())
        } else {
            Err(format!("undeclared event `{name}`"))
        }
    }

    fn check_query(&self, query: &Query) -> Result<(), String> {
        if let Query::Sequence { events } = query {
            if events.is_empty() {
                return Err("sequence needs at least one event".into());
            }
        }
        for name in query.event_names() {
            self.check_declared(name)?;
        }
        match query {
            Query::Compatibility {
                tolerance: Some(tol), ..
            } if !(tol.is_finite() && *tol > 0.0) => Err("tolerance must be positive".into()),
            Query::Fit2d { targets, grid_step, tol } => {
                targets.to_targets().map_err(|e| e.to_string())?;
                for (what, v) in [("grid_step", grid_step), ("tol", tol)] {
                    if let Some(v) = v {
                        if !(v.is_finite() && *v > 0.0) {
                            return Err(format!("{what} must be positive"));
                        }
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// Converts validated raw components to an engine vector.
pub(crate) fn to_vector(raw: &RawVector) -> crate::Result<Vector<f64>> {
    Vector::new(
        raw.iter()
            .map(|c| match *c {
                Component::Real(x) => Complex::new(x, 0.0),
                Component::Complex([re, im]) => Complex::new(re, im),
            })
            .collect(),
    )
}
