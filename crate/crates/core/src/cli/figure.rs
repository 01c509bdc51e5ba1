//! Surface data behind the six published figures, one CSV per sub-panel.

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use super::format::fmt12;
use crate::closed_form::{self, entanglement_of_formation};
use crate::error::Result;
use crate::minimizer::delta_minus_eof;
use crate::scs_states::{CoherentParams, Parity};

pub const DEFAULT_GRID: usize = 101;
pub const DEFAULT_PHOTON_SETTINGS: [f64; 3] = [0.5, 1.5, 3.0];
/// Upper end of the `|α|²` axis for the EoF and `δ − E` surfaces.
pub const ALPHA_SQ_MAX: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    /// Discord over `(a, θ)` with `|α|² = |β|² = s`.
    Discord,
    /// EoF over `(a, |α|²)` with `|β|² = s`.
    Eof,
    /// `δ − E` over `(a, |α|²)` with `|β|² = s`.
    DeltaMinusEof,
}

impl FigureId {
    pub const ALL: [FigureId; 6] = [Self::Fig1, Self::Fig2, Self::Fig3, Self::Fig4, Self::Fig5, Self::Fig6];

    pub fn parity(self) -> Parity {
        match self {
            Self::Fig1 | Self::Fig3 | Self::Fig5 => Parity::Plus,
            Self::Fig2 | Self::Fig4 | Self::Fig6 => Parity::Minus,
        }
    }

    pub fn surface(self) -> Surface {
        match self {
            Self::Fig1 | Self::Fig2 => Surface::Discord,
            Self::Fig3 | Self::Fig4 => Surface::Eof,
            Self::Fig5 | Self::Fig6 => Surface::DeltaMinusEof,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Fig1 => "fig1",
            Self::Fig2 => "fig2",
            Self::Fig3 => "fig3",
            Self::Fig4 => "fig4",
            Self::Fig5 => "fig5",
            Self::Fig6 => "fig6",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown figure id `{s}` (expected fig1..fig6)"))
    }
}

fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![start];
    }
    (0..n)
        .map(|k| if k + 1 == n { stop } else { start + (stop - start) * k as f64 / (n - 1) as f64 })
        .collect()
}

struct Cell {
    a: f64,
    /// `θ` for discord surfaces, unused otherwise.
    theta: f64,
    alpha_sq: f64,
    beta_sq: f64,
    value: std::result::Result<f64, &'static str>,
}

fn evaluate(surface: Surface, parity: Parity, a: f64, theta: f64, alpha_sq: f64, beta_sq: f64) -> Result<f64> {
    let p = CoherentParams::new(alpha_sq, beta_sq)?;
    match surface {
        Surface::Discord => closed_form::discord(&p, parity, a, theta),
        Surface::Eof => entanglement_of_formation(&p, parity, a),
        Surface::DeltaMinusEof => delta_minus_eof(&p, parity, a),
    }
}

fn panel(id: FigureId, setting: f64, grid: usize) -> Vec<Cell> {
    let surface = id.surface();
    let parity = id.parity();
    let a_axis = linspace(0.0, 1.0, grid);
    let second = match surface {
        Surface::Discord => linspace(0.0, PI, grid),
        _ => linspace(0.0, ALPHA_SQ_MAX, grid),
    };
    a_axis
        .par_iter()
        .flat_map_iter(|&a| {
            second.iter().map(move |&v| {
                let (theta, alpha_sq, beta_sq) = match surface {
                    Surface::Discord => (v, setting, setting),
                    _ => (0.0, v, setting),
                };
                Cell {
                    a,
                    theta,
                    alpha_sq,
                    beta_sq,
                    value: evaluate(surface, parity, a, theta, alpha_sq, beta_sq).map_err(|e| e.code()),
                }
            })
        })
        .collect()
}

fn write_panel(id: FigureId, cells: &[Cell], out: &mut dyn Write) -> std::io::Result<()> {
    let surface = id.surface();
    let value_name = match surface {
        Surface::Discord => "discord",
        Surface::Eof => "eof",
        Surface::DeltaMinusEof => "delta_minus_eof",
    };
    match surface {
        Surface::Discord => writeln!(out, "a,theta,alpha_sq,beta_sq,{value_name},error")?,
        _ => writeln!(out, "a,alpha_sq,beta_sq,{value_name},error")?,
    }
    for c in cells {
        let (value, error) = match c.value {
            Ok(v) => (fmt12(v), ""),
            Err(code) => (String::new(), code),
        };
        match surface {
            Surface::Discord => writeln!(
                out,
                "{},{},{},{},{value},{error}",
                fmt12(c.a),
                fmt12(c.theta),
                fmt12(c.alpha_sq),
                fmt12(c.beta_sq)
            )?,
            _ => writeln!(out, "{},{},{},{value},{error}", fmt12(c.a), fmt12(c.alpha_sq), fmt12(c.beta_sq))?,
        }
    }
    Ok(())
}

/// Writes `<id><letter>.csv` into `out_dir` for each photon setting and
/// returns the paths in sub-panel order.
pub fn generate(id: FigureId, settings: &[f64], grid: usize, out_dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::with_capacity(settings.len());
    for (k, &s) in settings.iter().enumerate() {
        let letter = (b'a' + k as u8) as char;
        let path = out_dir.join(format!("{id}{letter}.csv"));
        let cells = panel(id, s, grid);
        let mut buf = Vec::new();
        write_panel(id, &cells, &mut buf)?;
        std::fs::write(&path, buf)?;
        written.push(path);
    }
    Ok(written)
}
