//! Parameter sweeps written as CSV or JSON in loop-nest order.

use std::io::Write;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::format::{fmt12, round12};
use super::range::RangeSpec;
use crate::closed_form::{classical_correlation, concurrence_mixed, eof_from_concurrence, mutual_information};
use crate::error::Result;
use crate::minimizer::minimize_discord;
use crate::scs_states::{CoherentParams, Parity};
use crate::closed_form;

pub const COLUMNS: [&str; 13] = [
    "parity",
    "a",
    "alpha_sq",
    "beta_sq",
    "theta",
    "discord",
    "delta",
    "theta_opt",
    "mutual_info",
    "classical_corr",
    "concurrence",
    "eof",
    "delta_minus_eof",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub parity: Parity,
    pub a: RangeSpec,
    pub alpha_sq: RangeSpec,
    pub beta_sq: RangeSpec,
    pub theta: Option<RangeSpec>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy)]
struct Measures {
    theta: f64,
    discord: f64,
    delta: f64,
    theta_opt: f64,
    mutual_info: f64,
    classical_corr: f64,
    concurrence: f64,
    eof: f64,
}

#[derive(Debug, Clone)]
pub struct Row {
    parity: Parity,
    a: f64,
    alpha_sq: f64,
    beta_sq: f64,
    theta: Option<f64>,
    outcome: std::result::Result<Measures, &'static str>,
}

impl Row {
    fn numeric_cells(&self) -> Vec<Option<f64>> {
        let head = [Some(self.a), Some(self.alpha_sq), Some(self.beta_sq)];
        let tail: [Option<f64>; 9] = match &self.outcome {
            Ok(m) => [
                Some(m.theta),
                Some(m.discord),
                Some(m.delta),
                Some(m.theta_opt),
                Some(m.mutual_info),
                Some(m.classical_corr),
                Some(m.concurrence),
                Some(m.eof),
                Some(m.delta - m.eof),
            ],
            Err(_) => [self.theta, None, None, None, None, None, None, None, None],
        };
        head.into_iter().chain(tail).collect()
    }

    pub fn error(&self) -> Option<&'static str> {
        self.outcome.as_ref().err().copied()
    }
}

/// Group-level quantities shared by every `θ` of one `(a, |α|², |β|²)` point.
struct Group {
    params: CoherentParams,
    delta: f64,
    theta_opt: f64,
    mutual_info: f64,
    concurrence: f64,
    eof: f64,
}

fn group(parity: Parity, a: f64, alpha_sq: f64, beta_sq: f64) -> Result<Group> {
    let params = CoherentParams::new(alpha_sq, beta_sq)?;
    let min = minimize_discord(&params, parity, a)?;
    let concurrence = concurrence_mixed(&params, parity, a)?;
    Ok(Group {
        params,
        delta: min.delta,
        theta_opt: min.theta_opt,
        mutual_info: mutual_information(&params, parity, a)?,
        concurrence,
        eof: eof_from_concurrence(concurrence),
    })
}

fn measures(g: &Group, parity: Parity, a: f64, theta: Option<f64>) -> Result<Measures> {
    let (theta, discord) = match theta {
        Some(t) => (t, closed_form::discord(&g.params, parity, a, t)?),
        None => (g.theta_opt, g.delta),
    };
    Ok(Measures {
        theta,
        discord,
        delta: g.delta,
        theta_opt: g.theta_opt,
        mutual_info: g.mutual_info,
        classical_corr: classical_correlation(&g.params, parity, a, theta)?,
        concurrence: g.concurrence,
        eof: g.eof,
    })
}

/// Evaluates the sweep. Rows come back in loop-nest order (a, |α|², |β|², θ)
/// whatever the thread count.
pub fn compute(spec: &SweepSpec) -> Vec<Row> {
    let mut points = Vec::new();
    for a in spec.a.values() {
        for alpha_sq in spec.alpha_sq.values() {
            for beta_sq in spec.beta_sq.values() {
                points.push((a, alpha_sq, beta_sq));
            }
        }
    }
    let thetas: Vec<Option<f64>> = match &spec.theta {
        Some(r) => r.values().into_iter().map(Some).collect(),
        None => vec![None],
    };
    let parity = spec.parity;
    points
        .par_iter()
        .map(|&(a, alpha_sq, beta_sq)| {
            let g = group(parity, a, alpha_sq, beta_sq);
            thetas
                .iter()
                .map(|&theta| Row {
                    parity,
                    a,
                    alpha_sq,
                    beta_sq,
                    theta,
                    outcome: g
                        .as_ref()
                        .map_err(|e| e.code())
                        .and_then(|g| measures(g, parity, a, theta).map_err(|e| e.code())),
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn write_csv(rows: &[Row], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{},error", COLUMNS.join(","))?;
    for row in rows {
        let mut cells = vec![row.parity.as_str().to_string()];
        cells.extend(row.numeric_cells().into_iter().map(|c| c.map(fmt12).unwrap_or_default()));
        cells.push(row.error().unwrap_or_default().to_string());
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_json(rows: &[Row], out: &mut dyn Write) -> std::io::Result<()> {
    let array: Vec<Value> = rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            obj.insert("parity".into(), json!(row.parity.as_str()));
            for (name, cell) in COLUMNS[1..].iter().zip(row.numeric_cells()) {
                obj.insert((*name).into(), cell.map(|v| json!(round12(v))).unwrap_or(Value::Null));
            }
            obj.insert("error".into(), row.error().map(Value::from).unwrap_or(Value::Null));
            Value::Object(obj)
        })
        .collect();
    serde_json::to_writer_pretty(&mut *out, &array)?;
    writeln!(out)
}

pub fn write(rows: &[Row], format: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(rows, out),
        OutputFormat::Json => write_json(rows, out),
    }
}
