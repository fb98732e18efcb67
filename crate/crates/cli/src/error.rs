use scatter_time::Error;
use thiserror::Error;

/// Failure of a command, carrying the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or contract-violating input: exit 2.
    #[error("{0}")]
    Input(String),
    /// Numerical contract violation such as a vanishing modulus: exit 3.
    #[error("{0}")]
    Numerical(String),
    /// Evaluation on a pole or other excluded point: exit 4.
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            Self::Input(_) => 2,
            Self::Numerical(_) => 3,
            Self::Domain(_) => 4,
            Self::Io(_) => 1,
        }
    }

    /// Library error with the name of the file or step it arose from.
    pub fn from_library(context: &str, err: Error) -> Self {
        let message = format!("{context}: {err}");
        match err {
            Error::ZeroModulus { index, .. } | Error::PhaseJump { index, .. } => {
                Self::Numerical(format!("{context}: node {index}: {err}"))
            }
            Error::ZeroTransmission { .. } | Error::InsufficientDecay { .. } | Error::ZeroNorm => {
                Self::Numerical(message)
            }
            Error::PoleProximity { .. }
            | Error::DegenerateEnergy { .. }
            | Error::NonPositiveEnergy(_)
            | Error::SingularityOnContour { .. } => Self::Domain(message),
            _ => Self::Input(message),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub trait Context<T> {
    fn context(self, what: &str) -> CliResult<T>;
}

impl<T> Context<T> for scatter_time::Result<T> {
    fn context(self, what: &str) -> CliResult<T> {
        self.map_err(|e| CliError::from_library(what, e))
    }
}
