use super::fit::FittedModel;
use super::ConeCoefficients;
use crate::error::Result;
use crate::interval::Interval;

/// A predicted interval. `clamped` is set when the raw prediction had a
/// negative range and was replaced by the point interval at its center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prediction {
    pub interval: Interval,
    pub clamped: bool,
}

impl Prediction {
    /// Builds a prediction from a raw `(center, range)` pair, clamping a
    /// negative range to zero.
    pub fn from_center_range(center: f64, range: f64) -> Result<Self> {
        if range < 0.0 {
            Ok(Prediction {
                interval: Interval::point(center)?,
                clamped: true,
            })
        } else {
            Ok(Prediction {
                interval: Interval::from_center_range(center, range)?,
                clamped: false,
            })
        }
    }

    pub fn from_lower_upper(lower: f64, upper: f64) -> Result<Self> {
        if upper < lower {
            Ok(Prediction {
                interval: Interval::point(0.5 * (lower + upper))?,
                clamped: true,
            })
        } else {
            Ok(Prediction {
                interval: Interval::new(lower, upper)?,
                clamped: false,
            })
        }
    }
}

/// Anything that maps `p` predictor intervals to an outcome interval.
pub trait IntervalPredictor {
    fn arity(&self) -> usize;
    fn predict(&self, predictors: &[Interval]) -> Result<Prediction>;
}

impl IntervalPredictor for ConeCoefficients {
    fn arity(&self) -> usize {
        self.p()
    }

    fn predict(&self, predictors: &[Interval]) -> Result<Prediction> {
        let (l, u) = self.lower_upper(predictors)?;
        Prediction::from_lower_upper(l, u)
    }
}

impl IntervalPredictor for FittedModel {
    fn arity(&self) -> usize {
        self.p()
    }

    fn predict(&self, predictors: &[Interval]) -> Result<Prediction> {
        self.coefficients().predict(predictors)
    }
}

pub fn predict(fit: &FittedModel, predictors: &[Interval]) -> Result<Prediction> {
    fit.predict(predictors)
}
