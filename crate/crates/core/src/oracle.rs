//! Brute-force two-qubit machinery: spectra, partial traces, projective
//! measurement on mode Y, discord from its definition and the Wootters
//! concurrence.
//!
//! Nothing here knows about coherent states. Every routine takes an explicit
//! 4×4 density matrix, so it serves as an independent check on the closed forms.

use nalgebra::{Complex, Matrix2, Matrix4, SymmetricEigen, Vector2, SVD};

use crate::closed_form::MeasurementAngles;
use crate::entropy::{entropy_bits, plog2};
use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type Matrix2c = Matrix2<C64>;
pub type Matrix4c = Matrix4<C64>;

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-12;
/// Hermiticity defect accepted by the eigensolver entry point.
const EIGEN_HERMITIAN_TOL: f64 = 1e-10;
/// Outcomes below this probability are dropped from conditional entropies.
pub const ZERO_PROBABILITY: f64 = 1e-14;

/// A validated two-qubit density matrix in the cat basis (X ⊗ Y, row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4(Matrix4c);

impl DensityMatrix4 {
    pub fn new(m: Matrix4c) -> Result<Self> {
        let defect = hermitian_defect(&m);
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian { defect });
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::NotDensityMatrix {
                reason: format!("trace {trace} differs from 1"),
            });
        }
        let spectrum = eigvals_hermitian(&m)?;
        let min = spectrum.min();
        if min < -PSD_TOL {
            return Err(Error::NotDensityMatrix {
                reason: format!("negative eigenvalue {min:e}"),
            });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix4c {
        &self.0
    }

    pub fn into_inner(self) -> Matrix4c {
        self.0
    }
}

/// Real eigenvalues in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    pub fn min(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest elementwise deviation from another spectrum of the same length.
    pub fn max_deviation(&self, other: &[f64]) -> f64 {
        let mut other = other.to_vec();
        other.sort_by(|a, b| b.total_cmp(a));
        self.values
            .iter()
            .zip(&other)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

/// Largest entry of `|m − m†|`.
pub fn hermitian_defect<const N: usize>(m: &nalgebra::SMatrix<C64, N, N>) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Square Hermitian inputs accepted by [`eigvals_hermitian`].
pub trait HermitianInput {
    fn defect(&self) -> f64;
    fn raw_eigenvalues(&self) -> Vec<f64>;
}

macro_rules! hermitian_input {
    ($ty:ty) => {
        impl HermitianInput for $ty {
            fn defect(&self) -> f64 {
                hermitian_defect(self)
            }

            fn raw_eigenvalues(&self) -> Vec<f64> {
                SymmetricEigen::new(*self).eigenvalues.iter().copied().collect()
            }
        }
    };
}

hermitian_input!(Matrix2c);
hermitian_input!(Matrix4c);

pub fn eigvals_hermitian<M: HermitianInput>(m: &M) -> Result<Spectrum> {
    let defect = m.defect();
    if defect > EIGEN_HERMITIAN_TOL {
        return Err(Error::NotHermitian { defect });
    }
    Ok(Spectrum::from_unsorted(m.raw_eigenvalues()))
}

/// von Neumann entropy in bits. Eigenvalues below zero count as zero.
pub fn von_neumann_entropy(s: &Spectrum) -> f64 {
    entropy_bits(s.values().iter().copied())
}

/// `ρ_X = Tr_Y ρ`.
pub fn reduced_state_x(rho: &DensityMatrix4) -> Matrix2c {
    let m = rho.matrix();
    Matrix2c::from_fn(|x, xp| m[(2 * x, 2 * xp)] + m[(2 * x + 1, 2 * xp + 1)])
}

/// `ρ_Y = Tr_X ρ`.
pub fn reduced_state_y(rho: &DensityMatrix4) -> Matrix2c {
    let m = rho.matrix();
    Matrix2c::from_fn(|y, yp| m[(y, yp)] + m[(2 + y, 2 + yp)])
}

/// Rank-one projectors `|π₁⟩⟨π₁|`, `|π₂⟩⟨π₂|` on mode Y.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectorPair {
    pub pi1: Matrix2c,
    pub pi2: Matrix2c,
}

impl ProjectorPair {
    pub fn iter(&self) -> impl Iterator<Item = &Matrix2c> {
        [&self.pi1, &self.pi2].into_iter()
    }
}

/// `|π₁⟩ = cosθ|+⟩ + e^{iφ} sinθ|−⟩`, `|π₂⟩ = sinθ|+⟩ − e^{iφ} cosθ|−⟩`.
pub fn measurement_projectors(angles: &MeasurementAngles) -> ProjectorPair {
    let (sin, cos) = angles.theta().sin_cos();
    let phase = Complex::from_polar(1.0, angles.phi());
    let v1 = Vector2::new(Complex::new(cos, 0.0), phase * sin);
    let v2 = Vector2::new(Complex::new(sin, 0.0), -phase * cos);
    ProjectorPair {
        pi1: v1 * v1.adjoint(),
        pi2: v2 * v2.adjoint(),
    }
}

/// `I ⊗ Π` for a projector acting on mode Y.
fn lift_to_y(pi: &Matrix2c) -> Matrix4c {
    let mut out = Matrix4c::zeros();
    out.fixed_view_mut::<2, 2>(0, 0).copy_from(pi);
    out.fixed_view_mut::<2, 2>(2, 2).copy_from(pi);
    out
}

/// Outcome probability and post-measurement state of mode X for a projector on Y.
pub fn conditional_state(rho: &DensityMatrix4, pi: &Matrix2c) -> Result<(f64, Matrix2c)> {
    let lifted = lift_to_y(pi);
    let post = lifted * rho.matrix() * lifted;
    let p = post.trace().re;
    if p <= ZERO_PROBABILITY {
        return Err(Error::ZeroProbabilityOutcome { probability: p });
    }
    let reduced = Matrix2c::from_fn(|x, xp| post[(2 * x, 2 * xp)] + post[(2 * x + 1, 2 * xp + 1)]);
    Ok((p, reduced.unscale(p)))
}

/// Outcome probabilities `Tr(Π_j ρ)` for both projectors.
pub fn outcome_probabilities(rho: &DensityMatrix4, angles: &MeasurementAngles) -> (f64, f64) {
    let pair = measurement_projectors(angles);
    let p = |pi: &Matrix2c| (lift_to_y(pi) * rho.matrix()).trace().re;
    (p(&pair.pi1), p(&pair.pi2))
}

fn spectrum_entropy2(m: &Matrix2c) -> Result<f64> {
    Ok(von_neumann_entropy(&eigvals_hermitian(m)?))
}

/// `S(ρ_X | {Π_j^Y}) = Σ_j p_j S(ρ_{X|Π_j})`.
pub fn conditional_entropy(rho: &DensityMatrix4, angles: &MeasurementAngles) -> Result<f64> {
    let mut total = 0.0;
    for pi in measurement_projectors(angles).iter() {
        match conditional_state(rho, pi) {
            Ok((p, cond)) => total += p * spectrum_entropy2(&cond)?,
            Err(Error::ZeroProbabilityOutcome { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(total)
}

pub fn joint_entropy(rho: &DensityMatrix4) -> Result<f64> {
    Ok(von_neumann_entropy(&eigvals_hermitian(rho.matrix())?))
}

/// `I(X:Y) = S(ρ_X) + S(ρ_Y) − S(ρ_XY)`.
pub fn mutual_information(rho: &DensityMatrix4) -> Result<f64> {
    let sx = spectrum_entropy2(&reduced_state_x(rho))?;
    let sy = spectrum_entropy2(&reduced_state_y(rho))?;
    Ok(sx + sy - joint_entropy(rho)?)
}

/// `J(X:Y) = S(ρ_X) − S(ρ_X | {Π_j^Y})`.
pub fn classical_correlation(rho: &DensityMatrix4, angles: &MeasurementAngles) -> Result<f64> {
    Ok(spectrum_entropy2(&reduced_state_x(rho))? - conditional_entropy(rho, angles)?)
}

/// `D = S(ρ_Y) − S(ρ_XY) + S(ρ_X | {Π_j^Y})`.
pub fn discord_by_definition(rho: &DensityMatrix4, angles: &MeasurementAngles) -> Result<f64> {
    let sy = spectrum_entropy2(&reduced_state_y(rho))?;
    Ok(sy - joint_entropy(rho)? + conditional_entropy(rho, angles)?)
}

/// `σ_y ⊗ σ_y` in the computational (cat) basis.
fn sigma_yy() -> Matrix4c {
    let one = Complex::new(1.0, 0.0);
    let mut s = Matrix4c::zeros();
    s[(0, 3)] = -one;
    s[(1, 2)] = one;
    s[(2, 1)] = one;
    s[(3, 0)] = -one;
    s
}

/// Spin-flipped state `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn spin_flip(rho: &DensityMatrix4) -> Matrix4c {
    let s = sigma_yy();
    s * rho.matrix().conjugate() * s
}

/// Eigenvalues of the non-Hermitian product `ρ ρ̃` from a complex Schur form.
///
/// Mathematically real and nonnegative; the imaginary parts measure roundoff.
pub fn rho_rhotilde_eigenvalues(rho: &DensityMatrix4) -> Vec<C64> {
    let product = rho.matrix() * spin_flip(rho);
    let t = product.schur().unpack().1;
    (0..4).map(|i| t[(i, i)]).collect()
}

/// Square roots of the eigenvalues of `ρ ρ̃`, descending.
///
/// Computed as the singular values of `τ = Vᵀ (σ_y⊗σ_y) V`, where the columns
/// of `V` are the eigenvectors of `ρ` scaled by the square roots of their
/// eigenvalues. `τ τ̄` is similar to `ρ ρ̃`, so no square root of a
/// roundoff-sized eigenvalue is ever taken.
pub fn wootters_sqrt_spectrum(rho: &DensityMatrix4) -> Result<Spectrum> {
    let m = rho.matrix();
    let defect = hermitian_defect(m);
    if defect > EIGEN_HERMITIAN_TOL {
        return Err(Error::NotHermitian { defect });
    }
    let eig = SymmetricEigen::new(*m);
    let mut v = eig.eigenvectors;
    for (j, &lambda) in eig.eigenvalues.iter().enumerate() {
        let w = Complex::new(lambda.max(0.0).sqrt(), 0.0);
        let col = v.column(j) * w;
        v.set_column(j, &col);
    }
    let tau = v.transpose() * sigma_yy() * v;
    let singular = SVD::new(tau, false, false).singular_values;
    Ok(Spectrum::from_unsorted(singular.iter().copied().collect()))
}

/// `C = max(0, λ₁ − λ₂ − λ₃ − λ₄)`.
pub fn wootters_concurrence(rho: &DensityMatrix4) -> Result<f64> {
    let s = wootters_sqrt_spectrum(rho)?;
    Ok((2.0 * s.max() - s.sum()).clamp(0.0, 1.0))
}

/// Entanglement of formation in bits for a given concurrence.
pub fn eof_from_concurrence(c: f64) -> f64 {
    let x = 0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt());
    plog2(x) + plog2(1.0 - x)
}
