use std::io;

use serde::{Serialize, Serializer};
use serde_json::ser::{Formatter, PrettyFormatter};

/// Result of running a scenario: one entry per query, in input order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub engine_version: String,
    pub tolerances: Tolerances,
    pub results: Vec<QueryResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    #[serde(serialize_with = "scientific")]
    pub eps_zero: f64,
    #[serde(serialize_with = "scientific")]
    pub eps_rank: f64,
    #[serde(serialize_with = "scientific")]
    pub eps_ortho: f64,
    #[serde(serialize_with = "scientific")]
    pub eps_commute: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        use crate::Real;
        Self {
            eps_zero: f64::EPS_ZERO,
            eps_rank: f64::EPS_RANK,
            eps_ortho: f64::EPS_ORTHO,
            eps_commute: f64::EPS_COMMUTE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QueryResult {
    pub index: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub event: String,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Probability {
        event: String,
        value: f64,
    },
    Sequence {
        events: Vec<String>,
        value: f64,
        trace: Vec<TraceStep>,
        /// `[re, im]` amplitudes, absent when the sequence has probability zero.
        final_state: Option<Vec<[f64; 2]>>,
    },
    ConjunctionGap {
        first: String,
        second: String,
        sequential: f64,
        direct: f64,
        value: f64,
    },
    Disjunction {
        first: String,
        second: String,
        value: f64,
    },
    OrderEffect {
        first: String,
        second: String,
        forward: f64,
        reverse: f64,
        value: f64,
    },
    Interference {
        partition: String,
        target: String,
        value: f64,
    },
    Similarity {
        first: String,
        second: String,
        value: f64,
    },
    Compatibility {
        first: String,
        second: String,
        commutator_norm: f64,
        #[serde(serialize_with = "scientific")]
        tolerance: f64,
        compatible: bool,
    },
    Joint {
        first: String,
        second: String,
        /// Rows `{first, ~first}`, columns `{second, ~second}`.
        cells: [[f64; 2]; 2],
    },
    #[serde(rename = "fit2d")]
    Fit2d {
        theta_f: f64,
        theta_psi: f64,
        residual: f64,
        predicted: [f64; 3],
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

fn scientific<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let raw = serde_json::value::RawValue::from_string(format!("{x:e}")).map_err(serde::ser::Error::custom)?;
    raw.serialize(s)
}

/// Six decimal places, without a sign on zero.
pub fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

/// Pretty JSON with every float written to six decimal places.
struct FixedFormatter<'a>(PrettyFormatter<'a>);

impl Formatter for FixedFormatter<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(fixed6(value).as_bytes())
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Renders a report. Output is byte-for-byte deterministic for equal reports.
pub fn emit_report(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFormatter(PrettyFormatter::new()));
            report.serialize(&mut ser).expect("report is always serializable");
            out.push(b'\n');
            out
        }
        Format::Table => render_table(report).into_bytes(),
    }
}

fn rows(outcome: &Outcome) -> Vec<(String, String)> {
    match outcome {
        Outcome::Probability { event, value } => vec![(format!("P({event})"), fixed6(*value))],
        Outcome::Sequence {
            events, value, trace, ..
        } => {
            let mut rows = vec![(format!("P({})", events.join(" then ")), fixed6(*value))];
            rows.extend(
                trace
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (format!("  step {}: {}", i + 1, s.event), fixed6(s.probability))),
            );
            rows
        }
        Outcome::ConjunctionGap {
            first,
            second,
            sequential,
            direct,
            value,
        } => vec![
            (format!("P({first} then {second})"), fixed6(*sequential)),
            (format!("P({second})"), fixed6(*direct)),
            (format!("Gap({first},{second})"), fixed6(*value)),
        ],
        Outcome::Disjunction { first, second, value } => {
            vec![(format!("P({first} or {second})"), fixed6(*value))]
        }
        Outcome::OrderEffect {
            first,
            second,
            forward,
            reverse,
            value,
        } => vec![
            (format!("P({first} then {second})"), fixed6(*forward)),
            (format!("P({second} then {first})"), fixed6(*reverse)),
            (format!("Order({first},{second})"), fixed6(*value)),
        ],
        Outcome::Interference {
            partition,
            target,
            value,
        } => vec![(format!("Interference({partition};{target})"), fixed6(*value))],
        Outcome::Similarity { first, second, value } => {
            vec![(format!("Sim({first},{second})"), fixed6(*value))]
        }
        Outcome::Compatibility {
            first,
            second,
            commutator_norm,
            compatible,
            ..
        } => vec![
            (format!("||[{first},{second}]||"), fixed6(*commutator_norm)),
            (format!("Compatible({first},{second})"), compatible.to_string()),
        ],
        Outcome::Joint { first, second, cells } => vec![
            (format!("P({first},{second})"), fixed6(cells[0][0])),
            (format!("P({first},~{second})"), fixed6(cells[0][1])),
            (format!("P(~{first},{second})"), fixed6(cells[1][0])),
            (format!("P(~{first},~{second})"), fixed6(cells[1][1])),
        ],
        Outcome::Fit2d {
            theta_f,
            theta_psi,
            residual,
            predicted,
        } => vec![
            ("theta_f".into(), fixed6(*theta_f)),
            ("theta_psi".into(), fixed6(*theta_psi)),
            ("residual".into(), fixed6(*residual)),
            ("predicted P(B)".into(), fixed6(predicted[0])),
            ("predicted P(F)".into(), fixed6(predicted[1])),
            ("predicted P(F then B)".into(), fixed6(predicted[2])),
        ],
    }
}

fn kind_name(outcome: &Outcome) -> &'static str {
    match outcome {
        Outcome::Probability { .. } => "probability",
        Outcome::Sequence { .. } => "sequence",
        Outcome::ConjunctionGap { .. } => "conjunction_gap",
        Outcome::Disjunction { .. } => "disjunction",
        Outcome::OrderEffect { .. } => "order_effect",
        Outcome::Interference { .. } => "interference",
        Outcome::Similarity { .. } => "similarity",
        Outcome::Compatibility { .. } => "compatibility",
        Outcome::Joint { .. } => "joint",
        Outcome::Fit2d { .. } => "fit2d",
    }
}

fn render_table(report: &Report) -> String {
    let mut lines: Vec<[String; 4]> = vec![["#".into(), "query".into(), "result".into(), "value".into()]];
    for r in &report.results {
        for (i, (label, value)) in rows(&r.outcome).into_iter().enumerate() {
            let (idx, kind) = if i == 0 {
                (r.index.to_string(), kind_name(&r.outcome).to_owned())
            } else {
                (String::new(), String::new())
            };
            lines.push([idx, kind, label, value]);
        }
    }
    let mut widths = [0usize; 4];
    for line in &lines {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = format!(
        "scenario: {}\nengine:   qjudge {}\n\n",
        report.scenario, report.engine_version
    );
    for [idx, kind, label, value] in &lines {
        let line = format!(
            "{idx:>w0$}  {kind:<w1$}  {label:<w2$}  {value:>w3$}",
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3]
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
