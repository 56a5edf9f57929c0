use indexmap::IndexMap;

use super::model::{to_vector, Query, Scenario, StateSpec, DEFAULT_GRID_STEP, DEFAULT_REFINE_TOL};
use super::report::{Outcome, QueryResult, Report, Tolerances, TraceStep};
use super::ScenarioError;
use crate::classical::joint_distribution;
use crate::event::Event;
use crate::fit::fit_2d;
use crate::judgment::{
    born_probability, conjunction_fallacy_gap, interference_term, order_effect, sequential_disjunction,
    sequential_probability, similarity, StateVector,
};
use crate::linalg::commutator_fro_norm;
use crate::Real;

type Events = IndexMap<String, Event<f64>>;

fn round4(x: f64) -> f64 {
    let r = (x * 1e4).round() / 1e4;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Builds the geometry and runs every query in order.
///
/// A sequence whose probability collapses to zero is reported as zero;
/// any other engine failure aborts the run and names the offending query.
pub fn run_scenario(scenario: &Scenario) -> Result<Report, ScenarioError> {
    scenario.validate()?;
    let mut events = Events::new();
    for (name, raw) in &scenario.events {
        let vectors = raw
            .iter()
            .map(to_vector)
            .collect::<crate::Result<Vec<_>>>()
            .and_then(|vs| Event::from_vectors(name.as_str(), scenario.dimension, &vs))
            .map_err(|source| ScenarioError::Engine {
                context: format!("event `{name}`"),
                query: None,
                source,
            })?;
        events.insert(name.clone(), vectors);
    }
    let state = build_state(scenario, &events).map_err(|source| ScenarioError::Engine {
        context: "state".into(),
        query: None,
        source,
    })?;

    let results = scenario
        .queries
        .iter()
        .enumerate()
        .map(|(index, query)| {
            dispatch(query, &state, &events)
                .map(|outcome| QueryResult { index, outcome })
                .map_err(|source| ScenarioError::Engine {
                    context: format!("query {index} ({})", query.kind()),
                    query: Some(index),
                    source,
                })
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(Report {
        scenario: scenario.name.clone(),
        engine_version: crate::VERSION.to_owned(),
        tolerances: Tolerances::default(),
        results,
    })
}

fn build_state(scenario: &Scenario, events: &Events) -> crate::Result<StateVector<f64>> {
    match &scenario.state {
        StateSpec::Vector(raw) => StateVector::new(to_vector(raw)?),
        StateSpec::Uniform => Ok(StateVector::uniform(scenario.dimension)),
        StateSpec::UniformOver(names) => {
            let selected: Vec<&Event<f64>> = names.iter().map(|n| &events[n.as_str()]).collect();
            StateVector::uniform_over(&selected)
        }
    }
}

fn dispatch(query: &Query, psi: &StateVector<f64>, events: &Events) -> crate::Result<Outcome> {
    let ev = |name: &String| &events[name.as_str()];
    Ok(match query {
        Query::Probability { event } => Outcome::Probability {
            event: event.clone(),
            value: born_probability(psi, ev(event))?,
        },
        Query::Sequence { events: names } => {
            let seq: Vec<Event<f64>> = names.iter().map(|n| ev(n).clone()).collect();
            let out = sequential_probability(psi, &seq)?;
            Outcome::Sequence {
                events: names.clone(),
                value: out.probability,
                trace: out
                    .trace
                    .into_iter()
                    .map(|s| TraceStep {
                        event: s.event,
                        probability: s.probability,
                    })
                    .collect(),
                final_state: out
                    .final_state
                    .map(|s| s.vector().components().iter().map(|c| [c.re, c.im]).collect()),
            }
        }
        Query::ConjunctionGap { first, second } => {
            let sequential = sequential_probability(psi, &[ev(first).clone(), ev(second).clone()])?.probability;
            Outcome::ConjunctionGap {
                first: first.clone(),
                second: second.clone(),
                sequential,
                direct: born_probability(psi, ev(second))?,
                value: conjunction_fallacy_gap(psi, ev(first), ev(second))?,
            }
        }
        Query::Disjunction { first, second } => Outcome::Disjunction {
            first: first.clone(),
            second: second.clone(),
            value: sequential_disjunction(psi, ev(first), ev(second))?,
        },
        Query::OrderEffect { first, second } => {
            let (a, b) = (ev(first), ev(second));
            Outcome::OrderEffect {
                first: first.clone(),
                second: second.clone(),
                forward: sequential_probability(psi, &[a.clone(), b.clone()])?.probability,
                reverse: sequential_probability(psi, &[b.clone(), a.clone()])?.probability,
                value: order_effect(psi, a, b)?,
            }
        }
        Query::Interference { partition, target } => Outcome::Interference {
            partition: partition.clone(),
            target: target.clone(),
            value: interference_term(psi, ev(partition), ev(target))?,
        },
        Query::Similarity { first, second } => Outcome::Similarity {
            first: first.clone(),
            second: second.clone(),
            value: similarity(psi, ev(first), ev(second))?,
        },
        Query::Compatibility {
            first,
            second,
            tolerance,
        } => {
            let tolerance = tolerance.unwrap_or(f64::EPS_COMMUTE);
            let norm = commutator_fro_norm(ev(first).projector(), ev(second).projector())?;
            Outcome::Compatibility {
                first: first.clone(),
                second: second.clone(),
                commutator_norm: norm,
                tolerance,
                compatible: norm <= tolerance,
            }
        }
        Query::Joint { first, second } => Outcome::Joint {
            first: first.clone(),
            second: second.clone(),
            cells: joint_distribution(psi, ev(first), ev(second))?.cells,
        },
        Query::Fit2d { targets, grid_step, tol } => {
            let fit = fit_2d(
                &targets.to_targets()?,
                grid_step.unwrap_or(DEFAULT_GRID_STEP),
                tol.unwrap_or(DEFAULT_REFINE_TOL),
            )?;
            fit_outcome(&fit)
        }
    })
}

/// Report entry for a fit, angles rounded to four decimals.
pub fn fit_outcome(fit: &crate::fit::FitResult<f64>) -> Outcome {
    Outcome::Fit2d {
        theta_f: round4(fit.theta_f),
        theta_psi: round4(fit.theta_psi),
        residual: fit.residual,
        predicted: fit.predicted,
    }
}

