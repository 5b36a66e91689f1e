use std::path::PathBuf;

use conereg_core::regression::coefficient_names;
use thiserror::Error;

use crate::csv_format::DataError;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const DATA: i32 = 3;
    pub const NUMERICAL: i32 = 4;
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Data { path: PathBuf, source: DataError },
    #[error("{}: malformed model report: {message}", path.display())]
    Report { path: PathBuf, message: String },
    #[error("{source}{}", hint.as_deref().map(|h| format!(" ({h})")).unwrap_or_default())]
    Model {
        source: conereg_core::Error,
        hint: Option<String>,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        use conereg_core::Error as E;
        match self {
            Error::Usage(_) => exit::USAGE,
            Error::Io { .. } | Error::Data { .. } | Error::Report { .. } => exit::DATA,
            Error::Model { source, .. } => match source {
                E::Unsupported(_) => exit::USAGE,
                E::Singular { .. }
                | E::SingularDesign { .. }
                | E::SingularRangeCovariance
                | E::SingularRay
                | E::InsufficientDegreesOfFreedom { .. }
                | E::NoConvergence { .. } => exit::NUMERICAL,
                _ => exit::DATA,
            },
        }
    }

    /// Wraps a fitting error from the cone model, naming the offending design
    /// column when the design is rank deficient.
    pub fn cone_fit(source: conereg_core::Error, predictors: &[String]) -> Self {
        let hint = match source {
            conereg_core::Error::SingularDesign { column } => {
                let names = coefficient_names(predictors.len());
                names.get(column).map(|name| match predictor_of(name, predictors) {
                    Some(var) => format!("design column `{name}` depends on earlier columns; check predictor `{var}`"),
                    None => format!("design column `{name}` depends on earlier columns"),
                })
            }
            _ => None,
        };
        Error::Model { source, hint }
    }

    /// Same as [`Error::cone_fit`] for the center/range baselines, whose
    /// design columns are `[1, x_1, ..., x_p]`.
    pub fn baseline_fit(source: conereg_core::Error, predictors: &[String]) -> Self {
        let hint = match source {
            conereg_core::Error::SingularDesign { column } if column > 0 => predictors
                .get(column - 1)
                .map(|var| format!("predictor `{var}` is collinear with earlier columns")),
            conereg_core::Error::SingularDesign { .. } => Some("the intercept column is degenerate".into()),
            _ => None,
        };
        Error::Model { source, hint }
    }
}

impl From<conereg_core::Error> for Error {
    fn from(source: conereg_core::Error) -> Self {
        Error::Model { source, hint: None }
    }
}

/// `alpha_2` -> second predictor name.
fn predictor_of<'a>(coefficient: &str, predictors: &'a [String]) -> Option<&'a str> {
    let (_, j) = coefficient.rsplit_once('_')?;
    let j: usize = j.parse().ok()?;
    predictors.get(j.checked_sub(1)?).map(String::as_str)
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
