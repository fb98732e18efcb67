use thiserror::Error;

/// Every failure mode of the library.
///
/// Variants that refer to a grid position carry the node index so callers
/// (the CLI in particular) can point at the offending sample.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frequency grid needs at least {min} points, got {got}")]
    TooFewPoints { min: usize, got: usize },
    #[error("frequency grid is not strictly increasing at node {index}")]
    NotIncreasing { index: usize },
    #[error("non-finite value at node {index}")]
    NonFinite { index: usize },
    #[error("array length {got} does not match grid length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operation requires a uniform grid")]
    NonUniformGrid,
    #[error("grids of the two inputs differ")]
    GridMismatch,

    #[error("evaluation point {omega} lies within {distance:e} of a pole")]
    PoleProximity { omega: num_complex::Complex64, distance: f64 },
    #[error("invalid model parameter: {0}")]
    InvalidParameter(String),
    #[error("anchor frequency {anchor} outside grid span [{lo}, {hi}]")]
    AnchorOutOfRange { anchor: f64, lo: f64, hi: f64 },
    #[error("anchor value must be nonzero")]
    ZeroAnchor,
    #[error("grid must be strictly positive, found {omega} at node {index}")]
    NonPositiveGrid { index: usize, omega: f64 },

    #[error("|S| = {modulus:e} below minimum modulus at node {index}")]
    ZeroModulus { index: usize, modulus: f64 },
    #[error("phase step {step} exceeds unwrap tolerance between nodes {index} and {}", index + 1)]
    PhaseJump { index: usize, step: f64 },
    #[error("sigma must be positive, got {0}")]
    NonPositiveSigma(f64),
    #[error("spectrum has zero norm")]
    ZeroNorm,
    #[error("signal support insufficient: {0}")]
    InsufficientSupport(String),

    #[error("grid contains the origin or |omega| below {min_abs:e} at node {index}")]
    OriginInGrid { index: usize, min_abs: f64 },
    #[error("integrand has not decayed at the grid end (ratio {ratio:e})")]
    InsufficientDecay { ratio: f64 },
    #[error("contour passes within {distance:e} of a zero or pole")]
    SingularityOnContour { distance: f64 },
    #[error("invalid contour: {0}")]
    InvalidContour(String),

    #[error("frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),
    #[error("eta must be positive, got {0}")]
    NonPositiveEta(f64),
    #[error("cross-section must be positive, found {value} at node {index}")]
    NonPositiveCrossSection { index: usize, value: f64 },
    #[error("energy not conserved: epsilon - epsilon' - omega = {0:e}")]
    EnergyMismatch(f64),
    #[error("energy {energy} below mass shell {mass}")]
    BelowMassShell { energy: f64, mass: f64 },
    #[error("photon frequency must be nonzero")]
    DegenerateFrequency,

    #[error("energy {energy} coincides with a segment height")]
    DegenerateEnergy { energy: f64 },
    #[error("energy must be positive, got {0}")]
    NonPositiveEnergy(f64),
    #[error("transmission amplitude vanishes at energy {energy}")]
    ZeroTransmission { energy: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
