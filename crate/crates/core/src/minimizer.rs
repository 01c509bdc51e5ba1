//! Minimum discord over the measurement basis on mode Y.
//!
//! The closed-form discord depends on `θ` only through `cos 2θ` and is even in
//! it, so it has period π/2 and is symmetric about π/4. The search therefore
//! runs over `[0, π/4]`: a uniform grid locates the best bracket, and golden
//! section search refines it until the objective values inside the bracket
//! agree to [`VALUE_TOL`].

use std::f64::consts::FRAC_PI_4;

use crate::closed_form::{
    self, classical_correlation, concurrence_mixed, eof_from_concurrence, mutual_information,
    CorrelationReport,
};
use crate::error::{Error, Result};
use crate::scs_states::{CoherentParams, Parity};

pub const GRID_POINTS: usize = 46;
pub const VALUE_TOL: f64 = 1e-10;
pub const MAX_EVALUATIONS: usize = 200;
/// Values this close to the minimum count as ties; the smallest `θ` wins.
pub const TIE_TOL: f64 = 1e-12;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizationResult {
    pub delta: f64,
    pub theta_opt: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Minimizes a smooth function on `[0, π/4]` by grid search plus golden section.
pub fn minimize_on_quarter_period<F>(mut f: F) -> Result<MinimizationResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let step = FRAC_PI_4 / (GRID_POINTS - 1) as f64;
    let mut probes: Vec<(f64, f64)> = Vec::with_capacity(GRID_POINTS + 64);
    for i in 0..GRID_POINTS {
        let theta = if i == GRID_POINTS - 1 { FRAC_PI_4 } else { i as f64 * step };
        probes.push((theta, f(theta)?));
    }

    let best = (0..GRID_POINTS)
        .min_by(|&i, &j| probes[i].1.total_cmp(&probes[j].1))
        .unwrap_or(0);
    let (mut lo, mut f_lo) = probes[best.saturating_sub(1)];
    let (mut hi, mut f_hi) = probes[(best + 1).min(GRID_POINTS - 1)];

    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    probes.push((c, fc));
    probes.push((d, fd));

    let spread = |vals: [f64; 4]| {
        let max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
        max - min
    };

    while spread([f_lo, fc, fd, f_hi]) > VALUE_TOL {
        if probes.len() >= MAX_EVALUATIONS {
            return Err(Error::NonConvergence { evaluations: probes.len() });
        }
        if fc <= fd {
            hi = d;
            f_hi = fd;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c)?;
            probes.push((c, fc));
        } else {
            lo = c;
            f_lo = fc;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d)?;
            probes.push((d, fd));
        }
    }

    let min = probes.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let (theta_opt, delta) = probes
        .iter()
        .copied()
        .filter(|p| p.1 <= min + TIE_TOL)
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .unwrap_or((0.0, min));

    Ok(MinimizationResult {
        delta,
        theta_opt,
        evaluations: probes.len(),
        converged: true,
    })
}

/// `δ`, the discord minimized over the measurement angle.
pub fn minimize_discord(params: &CoherentParams, parity: Parity, a: f64) -> Result<MinimizationResult> {
    // Validate once so a bad `a` surfaces before any grid work.
    closed_form::joint_eigenvalues(a)?;
    minimize_on_quarter_period(|theta| closed_form::discord(params, parity, a, theta))
}

/// `δ − E`.
pub fn delta_minus_eof(params: &CoherentParams, parity: Parity, a: f64) -> Result<f64> {
    let delta = minimize_discord(params, parity, a)?.delta;
    Ok(delta - closed_form::entanglement_of_formation(params, parity, a)?)
}

/// All measures at one point. Without `theta`, discord and classical
/// correlation are reported at the minimizing angle.
pub fn correlation_report(
    params: &CoherentParams,
    parity: Parity,
    a: f64,
    theta: Option<f64>,
) -> Result<CorrelationReport> {
    let min = minimize_discord(params, parity, a)?;
    let concurrence = concurrence_mixed(params, parity, a)?;
    let eof = eof_from_concurrence(concurrence);
    let mutual_info = mutual_information(params, parity, a)?;
    let (discord, classical_corr) = match theta {
        Some(t) => (
            closed_form::discord(params, parity, a, t)?,
            classical_correlation(params, parity, a, t)?,
        ),
        None => (min.delta, classical_correlation(params, parity, a, min.theta_opt)?),
    };
    Ok(CorrelationReport {
        mutual_info,
        classical_corr,
        discord,
        delta: min.delta,
        theta_opt: min.theta_opt,
        concurrence,
        eof,
        delta_minus_eof: min.delta - eof,
    })
}
