//! Analytic spectra, outcome probabilities, discord, concurrence and
//! entanglement of formation of the quasi-Werner states.
//!
//! Every quantity is built from three numbers per state: the two squared
//! amplitudes `w₁, w₂` of the pure superposition (positions 1/4 for the plus
//! parity, 2/3 for the minus parity) and the corner coherence `√(w₁w₂)`.
//! No density matrix is formed here.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::entropy::{binary_entropy, plog2};
use crate::error::{Error, Result};
use crate::scs_states::{check_mixing, superposition_norm_sq, CoherentParams, InverseCatNorms, Parity};

/// Projective measurement on mode Y, `|π₁⟩ = cosθ|+⟩ + e^{iφ} sinθ|−⟩`.
///
/// Stored in the canonical range `θ ∈ [0, π/2]`, `φ ∈ [0, 2π)`. The reduction
/// maps each input to the same pair of projectors: `θ → θ − π` flips the sign
/// of both vectors, and `θ → π − θ` together with `φ → φ + π` flips the sign
/// of `|π₁⟩` only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementAngles {
    theta: f64,
    phi: f64,
}

impl MeasurementAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::InvalidAngles { theta, phi });
        }
        let mut theta = theta.rem_euclid(PI);
        let mut phi = phi;
        if theta > FRAC_PI_2 {
            theta = PI - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Eigenvalues of the joint state, descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointSpectrum {
    pub eigenvalues: [f64; 4],
}

/// Probabilities of the two measurement outcomes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomePair {
    pub p1: f64,
    pub p2: f64,
}

/// Which `n²` multiplies the second outcome probability of the minus-parity state.
///
/// `NMinus` is the normalization of the minus-parity state itself and makes
/// the two probabilities sum to one. `NPlus` reproduces the misprinted
/// published expression and exists only so the discrepancy can be measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MinusSecondOutcome {
    #[default]
    NMinus,
    NPlus,
}

/// All correlation measures at one parameter point. Entropic fields are in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub discord: f64,
    pub delta: f64,
    pub theta_opt: f64,
    pub concurrence: f64,
    pub eof: f64,
    pub delta_minus_eof: f64,
}

/// Amplitude data of one quasi-Werner state.
#[derive(Debug, Clone, Copy)]
struct StateTerms {
    a: f64,
    /// `n²/(4 (N_s^α)² (N_t^β)²)` for the first nonzero basis position.
    w1: f64,
    /// Same for the second nonzero position.
    w2: f64,
    /// `n²/(4 N₊^α N₊^β N₋^α N₋^β)`.
    cross: f64,
    /// `n₊²/4` and the two weight factors, kept for the misprinted variant.
    n_plus_sq_quarter: f64,
    f1: f64,
    f2: f64,
}

impl StateTerms {
    fn new(params: &CoherentParams, parity: Parity, a: f64) -> Result<Self> {
        check_mixing(a)?;
        let inv = InverseCatNorms::new(params);
        let n_sq_quarter = superposition_norm_sq(params, parity)? / 4.0;
        let n_plus_sq_quarter = superposition_norm_sq(params, Parity::Plus)? / 4.0;
        // f = 1/((N_s^α)² (N_t^β)²) for the two nonzero positions.
        let (f1, f2) = match parity {
            Parity::Plus => (
                (inv.plus_a * inv.plus_b).powi(2),
                (inv.minus_a * inv.minus_b).powi(2),
            ),
            Parity::Minus => (
                (inv.plus_a * inv.minus_b).powi(2),
                (inv.minus_a * inv.plus_b).powi(2),
            ),
        };
        let cross = n_sq_quarter * inv.plus_a * inv.plus_b * inv.minus_a * inv.minus_b;
        Ok(Self {
            a,
            w1: n_sq_quarter * f1,
            w2: n_sq_quarter * f2,
            cross,
            n_plus_sq_quarter,
            f1,
            f2,
        })
    }

    /// `(1−a)/4`, the threefold joint eigenvalue.
    fn q(&self) -> f64 {
        (1.0 - self.a) / 4.0
    }

    fn reduced(&self) -> (f64, f64) {
        let half = (1.0 - self.a) / 2.0;
        (half + self.a * self.w1, half + self.a * self.w2)
    }

    fn outcomes(&self, parity: Parity, theta: f64, form: MinusSecondOutcome) -> OutcomePair {
        let (s, c) = theta.sin_cos();
        let (c2, s2) = (c * c, s * s);
        let half = (1.0 - self.a) / 2.0;
        let p1 = half + self.a * (self.w1 * c2 + self.w2 * s2);
        let p2 = match (parity, form) {
            (Parity::Minus, MinusSecondOutcome::NPlus) => {
                half + self.a * self.n_plus_sq_quarter * (self.f2 * c2 + self.f1 * s2)
            }
            _ => half + self.a * (self.w2 * c2 + self.w1 * s2),
        };
        OutcomePair { p1, p2 }
    }

    fn reduced_entropy(&self) -> f64 {
        let (r1, r2) = self.reduced();
        plog2(r1) + plog2(r2)
    }

    fn joint_entropy(&self) -> f64 {
        3.0 * plog2(self.q()) + plog2((1.0 + 3.0 * self.a) / 4.0)
    }

    /// `P_j · H₂((1−a)/(4P_j))` written as in the discord expression.
    fn outcome_entropy(&self, p: f64) -> f64 {
        let q = self.q();
        let mut h = 0.0;
        if q > 0.0 {
            h -= q * (q / p).log2();
        }
        let rest = p - q;
        if rest > 0.0 {
            h -= rest * (1.0 - q / p).log2();
        }
        h
    }

    fn conditional_entropy(&self, pair: OutcomePair) -> f64 {
        self.outcome_entropy(pair.p1) + self.outcome_entropy(pair.p2)
    }

    fn sqrt_spectrum(&self) -> [f64; 4] {
        let q = self.q();
        let d1 = q + self.a * self.w1;
        let d2 = q + self.a * self.w2;
        let root = (d1 * d2).sqrt();
        let coherence = self.a * self.cross;
        let big_plus = root + coherence;
        // root − coherence, rearranged to avoid cancellation as a → 1.
        let big_minus = if big_plus > 0.0 {
            q * (q + self.a * (self.w1 + self.w2)) / big_plus
        } else {
            0.0
        };
        let mut values = [q, q, big_plus, big_minus.max(0.0)];
        values.sort_by(|x, y| y.total_cmp(x));
        values
    }
}

/// `{(1+3a)/4, (1−a)/4, (1−a)/4, (1−a)/4}`.
pub fn joint_eigenvalues(a: f64) -> Result<JointSpectrum> {
    check_mixing(a)?;
    let q = (1.0 - a) / 4.0;
    Ok(JointSpectrum {
        eigenvalues: [(1.0 + 3.0 * a) / 4.0, q, q, q],
    })
}

/// Eigenvalues of the reduced state of mode Y, in the order of the two
/// nonzero amplitudes: `(+,+), (−,−)` for plus parity and `(+,−), (−,+)` for minus.
pub fn reduced_eigenvalues(params: &CoherentParams, parity: Parity, a: f64) -> Result<(f64, f64)> {
    Ok(StateTerms::new(params, parity, a)?.reduced())
}

pub fn outcome_probabilities(
    params: &CoherentParams,
    parity: Parity,
    a: f64,
    theta: f64,
) -> Result<OutcomePair> {
    outcome_probabilities_with(params, parity, a, theta, MinusSecondOutcome::NMinus)
}

pub fn outcome_probabilities_with(
    params: &CoherentParams,
    parity: Parity,
    a: f64,
    theta: f64,
    form: MinusSecondOutcome,
) -> Result<OutcomePair> {
    Ok(StateTerms::new(params, parity, a)?.outcomes(parity, theta, form))
}

/// Conditional entropy of mode X after measuring mode Y, in bits.
pub fn conditional_entropy(params: &CoherentParams, parity: Parity, a: f64, theta: f64) -> Result<f64> {
    let terms = StateTerms::new(params, parity, a)?;
    Ok(terms.conditional_entropy(terms.outcomes(parity, theta, MinusSecondOutcome::NMinus)))
}

/// Quantum discord for the measurement at angle `θ`, in bits.
pub fn discord(params: &CoherentParams, parity: Parity, a: f64, theta: f64) -> Result<f64> {
    discord_with(params, parity, a, theta, MinusSecondOutcome::NMinus)
}

pub fn discord_with(
    params: &CoherentParams,
    parity: Parity,
    a: f64,
    theta: f64,
    form: MinusSecondOutcome,
) -> Result<f64> {
    let terms = StateTerms::new(params, parity, a)?;
    let pair = terms.outcomes(parity, theta, form);
    Ok(terms.reduced_entropy() - terms.joint_entropy() + terms.conditional_entropy(pair))
}

/// `I = S(ρ_X) + S(ρ_Y) − S(ρ_XY)`; both reduced states share one spectrum.
pub fn mutual_information(params: &CoherentParams, parity: Parity, a: f64) -> Result<f64> {
    let terms = StateTerms::new(params, parity, a)?;
    Ok(2.0 * terms.reduced_entropy() - terms.joint_entropy())
}

/// `J = S(ρ_X) − S(ρ_X | {Π_j^Y})`.
pub fn classical_correlation(params: &CoherentParams, parity: Parity, a: f64, theta: f64) -> Result<f64> {
    let terms = StateTerms::new(params, parity, a)?;
    let pair = terms.outcomes(parity, theta, MinusSecondOutcome::NMinus);
    Ok(terms.reduced_entropy() - terms.conditional_entropy(pair))
}

/// Square roots of the eigenvalues of `ρ ρ̃`, descending.
pub fn sqrt_eigenvalues_rho_rhotilde(params: &CoherentParams, parity: Parity, a: f64) -> Result<[f64; 4]> {
    Ok(StateTerms::new(params, parity, a)?.sqrt_spectrum())
}

pub fn concurrence_mixed(params: &CoherentParams, parity: Parity, a: f64) -> Result<f64> {
    let s = sqrt_eigenvalues_rho_rhotilde(params, parity, a)?;
    let sum: f64 = s.iter().sum();
    Ok((2.0 * s[0] - sum).clamp(0.0, 1.0))
}

/// `H₂((1 + √(1−C²))/2)` in bits.
pub fn eof_from_concurrence(c: f64) -> f64 {
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt()))
}

pub fn entanglement_of_formation(params: &CoherentParams, parity: Parity, a: f64) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence_mixed(params, parity, a)?))
}

/// Discord and entanglement of formation of the ideal Werner state with mixing `a`.
///
/// This is the large-amplitude limit of both quasi-Werner states: the
/// reduced states become `I/2`, both outcomes have probability 1/2 for every
/// `θ`, and `C = max(0, (3a−1)/2)`.
pub fn werner_limit_measures(a: f64, _theta: f64) -> Result<(f64, f64)> {
    check_mixing(a)?;
    let q = (1.0 - a) / 4.0;
    let joint = 3.0 * plog2(q) + plog2((1.0 + 3.0 * a) / 4.0);
    let discord = 1.0 - joint + binary_entropy(2.0 * q);
    let c = (0.5 * (3.0 * a - 1.0)).max(0.0);
    Ok((discord, eof_from_concurrence(c)))
}
