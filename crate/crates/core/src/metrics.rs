//! Prediction error summaries for interval outcomes.

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Mean squared errors of predicted centers and radii (half-ranges), and
/// their sum.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IntervalMse {
    pub center: f64,
    pub radius: f64,
    pub interval: f64,
}

pub fn interval_mse(predicted: &[Interval], actual: &[Interval]) -> Result<IntervalMse> {
    if predicted.len() != actual.len() {
        return Err(Error::ArityMismatch {
            expected: actual.len(),
            found: predicted.len(),
        });
    }
    if actual.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let n = actual.len() as f64;
    let (mut sc, mut sr) = (0.0, 0.0);
    for (p, a) in predicted.iter().zip(actual) {
        let dc = p.center() - a.center();
        let dr = p.radius() - a.radius();
        sc += dc * dc;
        sr += dr * dr;
    }
    let center = sc / n;
    let radius = sr / n;
    Ok(IntervalMse {
        center,
        radius,
        interval: center + radius,
    })
}

/// Mean squared error of predicted ranges; four times the radius MSE.
pub fn range_mse(predicted: &[Interval], actual: &[Interval]) -> Result<f64> {
    if predicted.len() != actual.len() {
        return Err(Error::ArityMismatch {
            expected: actual.len(),
            found: predicted.len(),
        });
    }
    if actual.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let s: f64 = predicted
        .iter()
        .zip(actual)
        .map(|(p, a)| (p.range() - a.range()) * (p.range() - a.range()))
        .sum();
    Ok(s / actual.len() as f64)
}
