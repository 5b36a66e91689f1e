use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Lower bound exceeds upper bound by more than the snap tolerance.
    InvalidInterval { lower: f64, upper: f64 },
    NegativeRange(f64),
    NonFinite,
    TooFewPoints { needed: usize, found: usize },
    InvalidTolerance(f64),
    /// `gamma` or `theta` negative: the operator would leave the cone.
    InvalidOperator { gamma: f64, theta: f64 },
    /// `alpha + beta * a == 0`; the image of the ray is vertical.
    SingularRay,
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Symmetric factorization hit a non-positive pivot.
    Singular { pivot: usize },
    /// Design matrix is rank deficient; `column` is the first dependent column.
    SingularDesign { column: usize },
    InsufficientDegreesOfFreedom { observations: usize, parameters: usize },
    EmptyDataset,
    RaggedRow { row: usize, expected: usize, found: usize },
    ArityMismatch { expected: usize, found: usize },
    /// Sample covariance matrix of predictor ranges is singular.
    SingularRangeCovariance,
    Unsupported(&'static str),
    NoConvergence { iterations: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInterval { lower, upper } => {
                write!(f, "invalid interval: lower {lower} exceeds upper {upper}")
            }
            Error::NegativeRange(r) => write!(f, "negative interval range {r}"),
            Error::NonFinite => f.write_str("non-finite value"),
            Error::TooFewPoints { needed, found } => {
                write!(f, "need at least {needed} points, found {found}")
            }
            Error::InvalidTolerance(t) => write!(f, "tolerance must be positive, got {t}"),
            Error::InvalidOperator { gamma, theta } => write!(
                f,
                "operator does not preserve the cone: gamma = {gamma}, theta = {theta}"
            ),
            Error::SingularRay => f.write_str("image of the ray is vertical (alpha + beta * a = 0)"),
            Error::DimensionMismatch { op, left, right } => write!(
                f,
                "dimension mismatch in {op}: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::Singular { pivot } => write!(f, "matrix is not positive definite (pivot {pivot})"),
            Error::SingularDesign { column } => {
                write!(f, "design matrix is rank deficient at column {column}")
            }
            Error::InsufficientDegreesOfFreedom {
                observations,
                parameters,
            } => write!(
                f,
                "not enough degrees of freedom: {observations} responses for {parameters} parameters"
            ),
            Error::EmptyDataset => f.write_str("dataset is empty"),
            Error::RaggedRow {
                row,
                expected,
                found,
            } => write!(f, "row {row} has {found} predictors, expected {expected}"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "expected {expected} predictors, found {found}")
            }
            Error::SingularRangeCovariance => {
                f.write_str("sample covariance of predictor ranges is singular")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::NoConvergence { iterations } => {
                write!(f, "active-set solver did not converge in {iterations} iterations")
            }
        }
    }
}

impl core::error::Error for Error {}
