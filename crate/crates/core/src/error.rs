use thiserror::Error;

/// Errors raised by the state constructors, closed forms, oracle and minimizer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid mean photon numbers (alpha_sq={alpha_sq}, beta_sq={beta_sq}): must be finite and >= 0")]
    InvalidParams { alpha_sq: f64, beta_sq: f64 },

    #[error("odd-parity superposition is undefined when both modes are in the vacuum")]
    DegenerateState,

    #[error("odd cat state of mode {mode} is undefined for zero mean photon number")]
    DegenerateMode { mode: Mode },

    #[error("mixing parameter a={0} outside [0, 1]")]
    MixingOutOfRange(f64),

    #[error("measurement angles must be finite (theta={theta}, phi={phi})")]
    InvalidAngles { theta: f64, phi: f64 },

    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("matrix is not a density matrix: {reason}")]
    NotDensityMatrix { reason: String },

    #[error("measurement outcome has vanishing probability ({probability:e})")]
    ZeroProbabilityOutcome { probability: f64 },

    #[error("discord minimization did not converge within {evaluations} evaluations")]
    NonConvergence { evaluations: usize },
}

/// One of the two optical modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    X,
    Y,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::X => f.write_str("X"),
            Mode::Y => f.write_str("Y"),
        }
    }
}

impl Error {
    /// Stable machine-readable name used in CLI error objects and CSV error cells.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParams { .. } => "InvalidParams",
            Error::DegenerateState => "DegenerateState",
            Error::DegenerateMode { .. } => "DegenerateMode",
            Error::MixingOutOfRange(_) => "MixingOutOfRange",
            Error::InvalidAngles { .. } => "InvalidAngles",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::NotDensityMatrix { .. } => "NotDensityMatrix",
            Error::ZeroProbabilityOutcome { .. } => "ZeroProbabilityOutcome",
            Error::NonConvergence { .. } => "NonConvergence",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
