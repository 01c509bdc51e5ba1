//! Bipartite superposed coherent states in the even/odd cat basis.
//!
//! Both modes are truncated to the two-dimensional span of their even and odd
//! cat states, so every state here is a two-qubit state. The basis order used
//! for vectors and matrices throughout the crate is
//! `|+α,+β⟩, |+α,−β⟩, |−α,+β⟩, |−α,−β⟩` (mode X is the most significant index).

use nalgebra::{Complex, Matrix4, Vector4};

use crate::error::{Error, Mode, Result};
use crate::oracle::DensityMatrix4;

/// Mean photon numbers `|α|²` and `|β|²` of the two modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentParams {
    alpha_sq: f64,
    beta_sq: f64,
}

impl CoherentParams {
    pub fn new(alpha_sq: f64, beta_sq: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v >= 0.0;
        if !ok(alpha_sq) || !ok(beta_sq) {
            return Err(Error::InvalidParams { alpha_sq, beta_sq });
        }
        Ok(Self { alpha_sq, beta_sq })
    }

    pub fn alpha_sq(&self) -> f64 {
        self.alpha_sq
    }

    pub fn beta_sq(&self) -> f64 {
        self.beta_sq
    }

    /// Overlap factor `exp(-|α|²)`.
    pub fn x_alpha(&self) -> f64 {
        (-self.alpha_sq).exp()
    }

    /// Overlap factor `exp(-|β|²)`.
    pub fn x_beta(&self) -> f64 {
        (-self.beta_sq).exp()
    }

    /// The same pair with the two modes exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            alpha_sq: self.beta_sq,
            beta_sq: self.alpha_sq,
        }
    }
}

/// Which of the two superpositions `|α,β⟩ ± |−α,−β⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Plus, Parity::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Parity::Plus => 1.0,
            Parity::Minus => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Plus => "plus",
            Parity::Minus => "minus",
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "plus" | "+" => Ok(Parity::Plus),
            "minus" | "-" => Ok(Parity::Minus),
            other => Err(format!("unknown parity '{other}' (expected plus or minus)")),
        }
    }
}

/// `1 - exp(-t)` without cancellation for small `t`.
fn one_minus_exp_neg(t: f64) -> f64 {
    -(-t).exp_m1()
}

/// Reciprocals `1/N±` of the cat-state normalization constants of both modes.
///
/// These stay finite for vacuum modes (where `1/N₋ = 0`), which lets the
/// state amplitudes be evaluated without dividing by an infinite constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseCatNorms {
    pub plus_a: f64,
    pub minus_a: f64,
    pub plus_b: f64,
    pub minus_b: f64,
}

impl InverseCatNorms {
    pub fn new(params: &CoherentParams) -> Self {
        let two_a = 2.0 * params.alpha_sq;
        let two_b = 2.0 * params.beta_sq;
        Self {
            plus_a: (2.0 * (1.0 + (-two_a).exp())).sqrt(),
            minus_a: (2.0 * one_minus_exp_neg(two_a)).sqrt(),
            plus_b: (2.0 * (1.0 + (-two_b).exp())).sqrt(),
            minus_b: (2.0 * one_minus_exp_neg(two_b)).sqrt(),
        }
    }
}

/// `n±²` of the two-mode superposition.
pub fn superposition_norm_sq(params: &CoherentParams, parity: Parity) -> Result<f64> {
    let total = 2.0 * (params.alpha_sq + params.beta_sq);
    let bracket = match parity {
        Parity::Plus => 1.0 + (-total).exp(),
        Parity::Minus => {
            if total == 0.0 {
                return Err(Error::DegenerateState);
            }
            one_minus_exp_neg(total)
        }
    };
    Ok(1.0 / (2.0 * bracket))
}

/// The normalization constants `n±`, `N±^α`, `N±^β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizationSet {
    n: f64,
    n_plus_a: f64,
    n_minus_a: Option<f64>,
    n_plus_b: f64,
    n_minus_b: Option<f64>,
}

impl NormalizationSet {
    /// `n₊` or `n₋`, matching the parity it was built for.
    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn n_plus_a(&self) -> f64 {
        self.n_plus_a
    }

    pub fn n_plus_b(&self) -> f64 {
        self.n_plus_b
    }

    /// `N₋^α`; undefined when mode X is the vacuum.
    pub fn n_minus_a(&self) -> Result<f64> {
        self.n_minus_a.ok_or(Error::DegenerateMode { mode: Mode::X })
    }

    /// `N₋^β`; undefined when mode Y is the vacuum.
    pub fn n_minus_b(&self) -> Result<f64> {
        self.n_minus_b.ok_or(Error::DegenerateMode { mode: Mode::Y })
    }
}

pub fn normalization_constants(params: &CoherentParams, parity: Parity) -> Result<NormalizationSet> {
    let n = superposition_norm_sq(params, parity)?.sqrt();
    let inv = InverseCatNorms::new(params);
    let odd = |v: f64| if v > 0.0 { Some(1.0 / v) } else { None };
    Ok(NormalizationSet {
        n,
        n_plus_a: 1.0 / inv.plus_a,
        n_minus_a: odd(inv.minus_a),
        n_plus_b: 1.0 / inv.plus_b,
        n_minus_b: odd(inv.minus_b),
    })
}

/// A pure bipartite superposed coherent state written in the cat basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureScs {
    amplitudes: [f64; 4],
    parity: Parity,
}

impl PureScs {
    pub fn amplitudes(&self) -> [f64; 4] {
        self.amplitudes
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn to_vector(&self) -> Vector4<Complex<f64>> {
        Vector4::from_iterator(self.amplitudes.iter().map(|&c| Complex::new(c, 0.0)))
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// The two nonzero amplitudes `(n/2)/(N_s^α N_t^β)` and their basis positions.
pub(crate) fn nonzero_amplitudes(
    params: &CoherentParams,
    parity: Parity,
) -> Result<[(usize, f64); 2]> {
    let half_n = 0.5 * superposition_norm_sq(params, parity)?.sqrt();
    let inv = InverseCatNorms::new(params);
    Ok(match parity {
        Parity::Plus => [
            (0, half_n * inv.plus_a * inv.plus_b),
            (3, half_n * inv.minus_a * inv.minus_b),
        ],
        Parity::Minus => [
            (1, half_n * inv.plus_a * inv.minus_b),
            (2, half_n * inv.minus_a * inv.plus_b),
        ],
    })
}

pub fn pure_scs_vector(params: &CoherentParams, parity: Parity) -> Result<PureScs> {
    let mut amplitudes = [0.0; 4];
    for (idx, c) in nonzero_amplitudes(params, parity)? {
        amplitudes[idx] = c;
    }
    Ok(PureScs { amplitudes, parity })
}

/// Concurrence of the pure superposition, `√((1−x_α⁴)(1−x_β⁴)) / (1 ± x_α² x_β²)`.
pub fn pure_concurrence(params: &CoherentParams, parity: Parity) -> Result<f64> {
    let numerator = (one_minus_exp_neg(4.0 * params.alpha_sq)
        * one_minus_exp_neg(4.0 * params.beta_sq))
    .sqrt();
    let total = 2.0 * (params.alpha_sq + params.beta_sq);
    let denominator = match parity {
        Parity::Plus => 1.0 + (-total).exp(),
        Parity::Minus => {
            if total == 0.0 {
                return Err(Error::DegenerateState);
            }
            one_minus_exp_neg(total)
        }
    };
    Ok((numerator / denominator).min(1.0))
}

pub(crate) fn check_mixing(a: f64) -> Result<()> {
    if (0.0..=1.0).contains(&a) {
        Ok(())
    } else {
        Err(Error::MixingOutOfRange(a))
    }
}

/// `(1−a) I/4 + a |ψ±⟩⟨ψ±|` on the cat-basis subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiWernerState {
    rho: DensityMatrix4,
    mixing: f64,
    params: CoherentParams,
    parity: Parity,
}

impl QuasiWernerState {
    pub fn rho(&self) -> &DensityMatrix4 {
        &self.rho
    }

    pub fn mixing(&self) -> f64 {
        self.mixing
    }

    pub fn params(&self) -> CoherentParams {
        self.params
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

pub fn quasi_werner_density(
    params: &CoherentParams,
    parity: Parity,
    a: f64,
) -> Result<QuasiWernerState> {
    check_mixing(a)?;
    let psi = pure_scs_vector(params, parity)?.to_vector();
    let noise = Matrix4::<Complex<f64>>::identity() * Complex::new((1.0 - a) / 4.0, 0.0);
    let pure = psi * psi.adjoint() * Complex::new(a, 0.0);
    Ok(QuasiWernerState {
        rho: DensityMatrix4::new(noise + pure)?,
        mixing: a,
        params: *params,
        parity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, b: f64) -> CoherentParams {
        CoherentParams::new(a, b).unwrap()
    }

    #[test]
    fn rejects_negative_or_nan_photon_numbers() {
        assert!(CoherentParams::new(-0.1, 1.0).is_err());
        assert!(CoherentParams::new(1.0, f64::NAN).is_err());
        assert!(CoherentParams::new(f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn vacuum_plus_constants_are_one_half() {
        let set = normalization_constants(&params(0.0, 0.0), Parity::Plus).unwrap();
        assert_eq!(set.n(), 0.5);
        assert_eq!(set.n_plus_a(), 0.5);
        assert_eq!(set.n_plus_b(), 0.5);
        assert_eq!(set.n_minus_a(), Err(Error::DegenerateMode { mode: Mode::X }));
        assert_eq!(set.n_minus_b(), Err(Error::DegenerateMode { mode: Mode::Y }));
    }

    #[test]
    fn vacuum_minus_is_degenerate() {
        let p = params(0.0, 0.0);
        assert_eq!(normalization_constants(&p, Parity::Minus), Err(Error::DegenerateState));
        assert_eq!(pure_scs_vector(&p, Parity::Minus), Err(Error::DegenerateState));
        assert_eq!(pure_concurrence(&p, Parity::Minus), Err(Error::DegenerateState));
        assert_eq!(
            quasi_werner_density(&p, Parity::Minus, 0.5).unwrap_err(),
            Error::DegenerateState
        );
    }

    #[test]
    fn constants_at_two_two_plus() {
        // n₊ = [2(1 + e^-8)]^(-1/2), reference values from mpmath at 30 digits
        let set = normalization_constants(&params(2.0, 2.0), Parity::Plus).unwrap();
        assert!((set.n() - 0.706_988_207_069_090_2).abs() < 1e-15);
        // N₊ = [2(1 + e^-4)]^(-1/2), N₋ = [2(1 - e^-4)]^(-1/2)
        assert!((set.n_plus_a() - 0.700_718_841_632_615_3).abs() < 1e-15);
        assert!((set.n_minus_a().unwrap() - 0.713_672_670_194_037_2).abs() < 1e-15);
        assert_eq!(set.n_plus_a(), set.n_plus_b());
    }

    #[test]
    fn minus_with_one_vacuum_mode_is_well_defined() {
        let psi = pure_scs_vector(&params(0.0, 1.5), Parity::Minus).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-12);
        assert_eq!(psi.amplitudes()[2], 0.0);
    }

    #[test]
    fn large_amplitudes_approach_bell_state() {
        let psi = pure_scs_vector(&params(40.0, 40.0), Parity::Plus).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for (got, want) in psi.amplitudes().iter().zip([h, 0.0, 0.0, h]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn equal_amplitude_minus_state_is_maximally_entangled() {
        let p = params(1.0, 1.0);
        let psi = pure_scs_vector(&p, Parity::Minus).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for (got, want) in psi.amplitudes().iter().zip([0.0, h, h, 0.0]) {
            assert!((got - want).abs() < 1e-15);
        }
        assert!((pure_concurrence(&p, Parity::Minus).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_two_plus_amplitudes() {
        // Eq. 11 evaluated independently in mpmath.
        let psi = pure_scs_vector(&params(1.0, 2.0), Parity::Plus).unwrap();
        let c = psi.amplitudes();
        assert!((c[0] - 0.759_365_195_837_043).abs() < 1e-14);
        assert!((c[3] - 0.650_664_659_676_064_8).abs() < 1e-14);
        assert_eq!((c[1], c[2]), (0.0, 0.0));
        assert!((psi.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pure_concurrence_closed_values() {
        assert_eq!(pure_concurrence(&params(0.0, 3.0), Parity::Plus).unwrap(), 0.0);
        let e4 = (-4.0f64).exp();
        let want = (1.0 - e4) / (1.0 + e4);
        let got = pure_concurrence(&params(1.0, 1.0), Parity::Plus).unwrap();
        assert!((got - want).abs() < 1e-15);
        assert!((got - 0.964_027_580_075_817).abs() < 1e-14);
    }

    #[test]
    fn concurrence_tends_to_one() {
        for parity in Parity::BOTH {
            assert!(pure_concurrence(&params(5.0, 5.0), parity).unwrap() >= 0.999);
        }
    }

    #[test]
    fn mixing_endpoints() {
        let p = params(1.3, 0.4);
        for parity in Parity::BOTH {
            let rho0 = quasi_werner_density(&p, parity, 0.0).unwrap();
            let quarter = Matrix4::<Complex<f64>>::identity() * Complex::new(0.25, 0.0);
            assert!((rho0.rho().matrix() - quarter).norm() < 1e-15);

            let rho1 = quasi_werner_density(&p, parity, 1.0).unwrap();
            let psi = pure_scs_vector(&p, parity).unwrap().to_vector();
            assert!((rho1.rho().matrix() - psi * psi.adjoint()).norm() < 1e-15);
        }
        assert_eq!(
            quasi_werner_density(&p, Parity::Plus, 1.01).unwrap_err(),
            Error::MixingOutOfRange(1.01)
        );
        assert!(quasi_werner_density(&p, Parity::Plus, -1e-9).is_err());
    }

    #[test]
    fn parity_parses() {
        assert_eq!("plus".parse::<Parity>(), Ok(Parity::Plus));
        assert_eq!("MINUS".parse::<Parity>(), Ok(Parity::Minus));
        assert!("zero".parse::<Parity>().is_err());
    }
}
