//! Seeded closed-form versus oracle comparison suite.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::format::fmt12;
use crate::closed_form::{self, MeasurementAngles, MinusSecondOutcome};
use crate::error::Result;
use crate::oracle::{self, DensityMatrix4};
use crate::scs_states::{self, CoherentParams, Parity};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Form of the minus-parity second outcome used by the gated checks.
    pub form: MinusSecondOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub parity: Parity,
    pub a: f64,
    pub alpha_sq: f64,
    pub beta_sq: f64,
    pub theta: f64,
    pub phi: f64,
}

impl Sample {
    fn draw(rng: &mut ChaCha8Rng) -> Self {
        let parity = if rng.random_bool(0.5) { Parity::Plus } else { Parity::Minus };
        Self {
            parity,
            a: rng.random_range(0.0..=0.99),
            alpha_sq: rng.random_range(0.05..=6.0),
            beta_sq: rng.random_range(0.05..=6.0),
            theta: rng.random_range(0.0..=PI),
            phi: rng.random_range(0.0..TAU),
        }
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parity={} a={} alpha_sq={} beta_sq={} theta={} phi={}",
            self.parity,
            fmt12(self.a),
            fmt12(self.alpha_sq),
            fmt12(self.beta_sq),
            fmt12(self.theta),
            fmt12(self.phi)
        )
    }
}

/// Largest deviation seen by one check and where it happened.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_dev: f64,
    pub worst: Option<Sample>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        Self { name, max_dev: 0.0, worst: None }
    }

    fn record(&mut self, dev: f64, sample: &Sample) {
        let dev = if dev.is_nan() { f64::INFINITY } else { dev };
        if dev > self.max_dev || self.worst.is_none() {
            self.max_dev = self.max_dev.max(dev);
            self.worst = Some(*sample);
        }
    }

    pub fn passed(&self, tol: f64) -> bool {
        self.max_dev <= tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckResult>,
    /// Minus-parity deviations from the oracle for each outcome form, gated or not.
    pub corrected_form: [CheckResult; 2],
    pub printed_form: [CheckResult; 2],
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed(self.config.tol))
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let cfg = &self.config;
        let form = match cfg.form {
            MinusSecondOutcome::NMinus => "corrected",
            MinusSecondOutcome::NPlus => "printed",
        };
        writeln!(
            out,
            "verify samples={} seed={} tol={:e} minus-outcome-form={form}",
            cfg.samples, cfg.seed, cfg.tol
        )?;
        for c in &self.checks {
            let status = if c.passed(cfg.tol) { "ok" } else { "FAIL" };
            writeln!(out, "{:<24} max_dev={:<10.3e} {status}", c.name, c.max_dev)?;
            if !c.passed(cfg.tol) {
                if let Some(s) = &c.worst {
                    writeln!(out, "  worst: {s}")?;
                }
            }
        }
        writeln!(out, "minus-parity second outcome, deviation from oracle:")?;
        for (label, pair) in [("corrected n_minus^2", &self.corrected_form), ("printed n_plus^2", &self.printed_form)] {
            writeln!(
                out,
                "  {label:<20} probabilities={:.3e} discord={:.3e}",
                pair[0].max_dev, pair[1].max_dev
            )?;
        }
        if let Some(s) = &self.printed_form[1].worst {
            writeln!(out, "  printed worst: {s}")?;
        }
        writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn spectrum_dev(s: &oracle::Spectrum, values: &[f64]) -> f64 {
    s.max_deviation(values)
}

fn probability_dev(
    p: &CoherentParams,
    s: &Sample,
    rho: &DensityMatrix4,
    angles: &MeasurementAngles,
    form: MinusSecondOutcome,
) -> Result<f64> {
    let pair = closed_form::outcome_probabilities_with(p, s.parity, s.a, s.theta, form)?;
    let (o1, o2) = oracle::outcome_probabilities(rho, angles);
    // Minus-parity outcomes are labelled opposite to the projectors on mode Y.
    let (o1, o2) = match s.parity {
        Parity::Plus => (o1, o2),
        Parity::Minus => (o2, o1),
    };
    Ok((pair.p1 - o1).abs().max((pair.p2 - o2).abs()))
}

const NAMES: [&str; 8] = [
    "joint_spectrum",
    "reduced_spectrum",
    "outcome_probabilities",
    "discord",
    "phi_invariance",
    "sqrt_spectrum",
    "pure_concurrence",
    "mutual_information",
];

pub fn run(config: VerifyConfig) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks: Vec<CheckResult> = NAMES.iter().map(|n| CheckResult::new(n)).collect();
    let mut corrected = [CheckResult::new("probabilities"), CheckResult::new("discord")];
    let mut printed = [CheckResult::new("probabilities"), CheckResult::new("discord")];

    for _ in 0..config.samples {
        let s = Sample::draw(&mut rng);
        let p = CoherentParams::new(s.alpha_sq, s.beta_sq)?;
        let state = scs_states::quasi_werner_density(&p, s.parity, s.a)?;
        let rho = state.rho();
        let angles = MeasurementAngles::new(s.theta, s.phi)?;
        let angles0 = MeasurementAngles::new(s.theta, 0.0)?;

        let joint = closed_form::joint_eigenvalues(s.a)?.eigenvalues;
        checks[0].record(spectrum_dev(&oracle::eigvals_hermitian(rho.matrix())?, &joint), &s);

        let (r1, r2) = closed_form::reduced_eigenvalues(&p, s.parity, s.a)?;
        let red = oracle::eigvals_hermitian(&oracle::reduced_state_y(rho))?;
        checks[1].record(spectrum_dev(&red, &[r1, r2]), &s);

        checks[2].record(probability_dev(&p, &s, rho, &angles, config.form)?, &s);

        let oracle_d = oracle::discord_by_definition(rho, &angles)?;
        let d = closed_form::discord_with(&p, s.parity, s.a, s.theta, config.form)?;
        checks[3].record((d - oracle_d).abs(), &s);

        let oracle_d0 = oracle::discord_by_definition(rho, &angles0)?;
        checks[4].record((oracle_d - oracle_d0).abs(), &s);

        let c = closed_form::sqrt_eigenvalues_rho_rhotilde(&p, s.parity, s.a)?;
        checks[5].record(spectrum_dev(&oracle::wootters_sqrt_spectrum(rho)?, &c), &s);

        let mixed = closed_form::concurrence_mixed(&p, s.parity, 1.0)?;
        checks[6].record((mixed - scs_states::pure_concurrence(&p, s.parity)?).abs(), &s);

        let i = closed_form::mutual_information(&p, s.parity, s.a)?;
        checks[7].record((i - oracle::mutual_information(rho)?).abs(), &s);

        if s.parity == Parity::Minus {
            for (form, slot) in [(MinusSecondOutcome::NMinus, &mut corrected), (MinusSecondOutcome::NPlus, &mut printed)] {
                slot[0].record(probability_dev(&p, &s, rho, &angles, form)?, &s);
                let d = closed_form::discord_with(&p, s.parity, s.a, s.theta, form)?;
                slot[1].record((d - oracle_d).abs(), &s);
            }
        }
    }

    Ok(VerifyReport {
        config,
        checks,
        corrected_form: corrected,
        printed_form: printed,
    })
}
