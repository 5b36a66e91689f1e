//! Diagnostics for the positivity restrictions on `theta` and `gamma`.
//!
//! The range part of the model, `Y^R = sum_j gamma_j X_j^R + theta + e^R`,
//! decouples from the rest of the least-squares problem: `gamma_hat` solves
//! the sample range-covariance system `S gamma = s` and
//! `theta_hat = mean(Y^R) - sum_j gamma_hat_j mean(X_j^R)`.

use alloc::vec::Vec;

use super::fit::{fit_constrained, fit_unconstrained, FittedModel};
use crate::error::{Error, Result};
use crate::interval::IntervalDataset;
use crate::linalg::{Cholesky, Matrix};
use crate::stats;

/// Sample (divide-by-`n`) moments of predictor and outcome ranges.
#[derive(Debug, Clone, PartialEq)]
pub struct RangeMoments {
    /// `S_{k,j}`, covariance of `X_k^R` and `X_j^R`.
    pub cov: Matrix,
    /// `S_k`, covariance of `X_k^R` and `Y^R`.
    pub cross: Vec<f64>,
    pub mean_x: Vec<f64>,
    pub mean_y: f64,
}

pub fn range_moments(data: &IntervalDataset) -> RangeMoments {
    let p = data.p();
    let cols: Vec<Vec<f64>> = (0..p)
        .map(|j| (0..data.n()).map(|i| data.predictor(i, j).range()).collect())
        .collect();
    let yr: Vec<f64> = data.outcome().iter().map(|y| y.range()).collect();
    let mut cov = Matrix::zeros(p, p);
    for k in 0..p {
        for j in k..p {
            let s = stats::covariance(&cols[k], &cols[j]);
            cov[(k, j)] = s;
            cov[(j, k)] = s;
        }
    }
    RangeMoments {
        cross: cols.iter().map(|c| stats::covariance(c, &yr)).collect(),
        mean_x: cols.iter().map(|c| stats::mean(c)).collect(),
        mean_y: stats::mean(&yr),
        cov,
    }
}

/// Every predictor range positively sample-correlated with the outcome range.
pub fn assumption2_holds(data: &IntervalDataset) -> bool {
    range_moments(data).cross.iter().all(|&s| s > 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagnosticsOptions {
    /// Predictor ranges count as uncorrelated when the two-sided p-value of
    /// their sample correlation exceeds this.
    pub uncorrelated_p_value: f64,
}

impl Default for DiagnosticsOptions {
    fn default() -> Self {
        DiagnosticsOptions {
            uncorrelated_p_value: 0.05,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityDiagnostics {
    pub range_cov_matrix: Matrix,
    pub range_cross_cov: Vec<f64>,
    pub gamma_from_ranges: Vec<f64>,
    pub theta_from_ranges: f64,
    /// Predictor ranges mutually uncorrelated.
    pub assumption1_ok: bool,
    /// Every `S_k > 0`.
    pub assumption2_ok: bool,
    /// Smallest p-value over pairs of predictor ranges (1 when `p = 1`).
    pub min_range_correlation_p_value: f64,
    /// Upper bound `2 sigma2_hat / (Y_i^R)²` on the chance of a negative
    /// predicted range for observation `i`; infinite when `Y_i^R = 0`.
    pub negative_range_bound: Vec<f64>,
}

impl PositivityDiagnostics {
    /// Largest coordinate gap between the range-system solution and the
    /// `(theta, gamma)` of `fit`.
    pub fn discrepancy(&self, fit: &FittedModel) -> f64 {
        let mut d = libm::fabs(self.theta_from_ranges - fit.theta());
        for (a, b) in self.gamma_from_ranges.iter().zip(fit.gamma()) {
            d = libm::fmax(d, libm::fabs(a - b));
        }
        d
    }
}

pub fn positivity_diagnostics(data: &IntervalDataset, fit: &FittedModel) -> Result<PositivityDiagnostics> {
    positivity_diagnostics_with(data, fit, DiagnosticsOptions::default())
}

pub fn positivity_diagnostics_with(
    data: &IntervalDataset,
    fit: &FittedModel,
    options: DiagnosticsOptions,
) -> Result<PositivityDiagnostics> {
    if fit.p() != data.p() {
        return Err(Error::ArityMismatch {
            expected: data.p(),
            found: fit.p(),
        });
    }
    let m = range_moments(data);
    let p = data.p();
    let gamma = Cholesky::factor(&m.cov)
        .map_err(|_| Error::SingularRangeCovariance)?
        .solve(&m.cross)?;
    let theta = m.mean_y - gamma.iter().zip(&m.mean_x).map(|(g, x)| g * x).sum::<f64>();

    let mut min_p = 1.0f64;
    for k in 0..p {
        for j in k + 1..p {
            let r = m.cov[(k, j)] / libm::sqrt(m.cov[(k, k)] * m.cov[(j, j)]);
            min_p = libm::fmin(min_p, stats::correlation_p_value(r, data.n()));
        }
    }
    let two_sigma2 = 2.0 * fit.sigma2_hat();
    let negative_range_bound = data
        .outcome()
        .iter()
        .map(|y| {
            let r = y.range();
            if r == 0.0 {
                f64::INFINITY
            } else {
                two_sigma2 / (r * r)
            }
        })
        .collect();
    Ok(PositivityDiagnostics {
        assumption2_ok: m.cross.iter().all(|&s| s > 0.0),
        assumption1_ok: min_p > options.uncorrelated_p_value,
        min_range_correlation_p_value: min_p,
        range_cov_matrix: m.cov,
        range_cross_cov: m.cross,
        gamma_from_ranges: gamma,
        theta_from_ranges: theta,
        negative_range_bound,
    })
}

/// Sum of squared range errors of `Y^R ≈ theta + sum_j gamma_j X_j^R`.
pub fn range_rss(data: &IntervalDataset, theta: f64, gamma: &[f64]) -> Result<f64> {
    if gamma.len() != data.p() {
        return Err(Error::ArityMismatch {
            expected: data.p(),
            found: gamma.len(),
        });
    }
    Ok(data
        .rows()
        .map(|(x, y)| {
            let pred = theta + x.iter().zip(gamma).map(|(xi, g)| g * xi.range()).sum::<f64>();
            (y.range() - pred) * (y.range() - pred)
        })
        .sum())
}

/// Outcome of comparing a constrained range fit against the constant model
/// when the unconstrained univariate `gamma_hat` is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RangeBias {
    /// `gamma_hat >= 0`; the comparison does not apply.
    NotApplicable { gamma_hat: f64 },
    Checked {
        gamma_hat: f64,
        gamma_tilde: f64,
        /// Range RSS of the constrained fit.
        lhs: f64,
        /// Range RSS of the constant model `mean(Y^R)`.
        rhs: f64,
        /// `lhs >= rhs - 1e-9`.
        holds: bool,
    },
}

/// For a univariate dataset with negative `gamma_hat`, the constrained fit
/// cannot explain ranges better than their mean.
pub fn range_bias_check(data: &IntervalDataset) -> Result<RangeBias> {
    if data.p() != 1 {
        return Err(Error::Unsupported("range-bias check is univariate"));
    }
    let unconstrained = fit_unconstrained(data)?;
    let gamma_hat = unconstrained.gamma()[0];
    if gamma_hat >= 0.0 {
        return Ok(RangeBias::NotApplicable { gamma_hat });
    }
    let constrained = fit_constrained(data)?;
    let lhs = range_rss(data, constrained.theta(), constrained.gamma())?;
    let mean_y = range_moments(data).mean_y;
    let rhs = range_rss(data, mean_y, &[0.0])?;
    Ok(RangeBias::Checked {
        gamma_hat,
        gamma_tilde: constrained.gamma()[0],
        lhs,
        rhs,
        holds: lhs >= rhs - 1e-9,
    })
}
