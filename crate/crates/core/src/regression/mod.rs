//! Estimation for the cone-affine interval model.
//!
//! Coefficients are always laid out as
//! `(eta, alpha_1, beta_1, ..., alpha_p, beta_p, theta, gamma_1, ..., gamma_p)`,
//! the column order of the stacked design matrix.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::affine::AffineOperator;
use crate::error::{Error, Result};
use crate::interval::Interval;

mod design;
mod diagnostics;
mod fit;
mod predict;

pub use design::{build_design, DesignMatrices};
pub use diagnostics::{
    assumption2_holds, range_bias_check, positivity_diagnostics, positivity_diagnostics_with,
    range_moments, range_rss, RangeBias, DiagnosticsOptions, PositivityDiagnostics, RangeMoments,
};
pub use fit::{
    fit, fit_constrained, fit_unconstrained, lu_objective, FitPolicy, FitWarning, FittedModel,
};
pub use predict::{predict, IntervalPredictor, Prediction};

/// Number of coefficients for `p` predictors.
pub const fn coefficient_count(p: usize) -> usize {
    3 * p + 2
}

/// Index of `theta` in the stacked coefficient vector.
pub const fn theta_index(p: usize) -> usize {
    2 * p + 1
}

/// Names in stacked order: `eta, alpha_1, beta_1, ..., theta, gamma_1, ...`.
pub fn coefficient_names(p: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(coefficient_count(p));
    names.push(String::from("eta"));
    for j in 1..=p {
        names.push(format!("alpha_{j}"));
        names.push(format!("beta_{j}"));
    }
    names.push(String::from("theta"));
    for j in 1..=p {
        names.push(format!("gamma_{j}"));
    }
    names
}

/// Parameters `(eta, alpha, beta, theta, gamma)` of the multivariate model.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeCoefficients {
    pub eta: f64,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub theta: f64,
    pub gamma: Vec<f64>,
}

impl ConeCoefficients {
    pub fn new(eta: f64, alpha: Vec<f64>, beta: Vec<f64>, theta: f64, gamma: Vec<f64>) -> Result<Self> {
        let p = alpha.len();
        if p == 0 || beta.len() != p || gamma.len() != p {
            return Err(Error::ArityMismatch {
                expected: p,
                found: if beta.len() != p { beta.len() } else { gamma.len() },
            });
        }
        let c = ConeCoefficients {
            eta,
            alpha,
            beta,
            theta,
            gamma,
        };
        if c.to_vec().iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(c)
    }

    pub fn p(&self) -> usize {
        self.alpha.len()
    }

    /// Stacked vector in design-column order.
    pub fn to_vec(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(coefficient_count(self.p()));
        v.push(self.eta);
        for (a, b) in self.alpha.iter().zip(&self.beta) {
            v.push(*a);
            v.push(*b);
        }
        v.push(self.theta);
        v.extend_from_slice(&self.gamma);
        v
    }

    pub fn from_slice(p: usize, v: &[f64]) -> Result<Self> {
        if p == 0 || v.len() != coefficient_count(p) {
            return Err(Error::ArityMismatch {
                expected: coefficient_count(p),
                found: v.len(),
            });
        }
        let t = theta_index(p);
        ConeCoefficients::new(
            v[0],
            (0..p).map(|j| v[1 + 2 * j]).collect(),
            (0..p).map(|j| v[2 + 2 * j]).collect(),
            v[t],
            v[t + 1..].to_vec(),
        )
    }

    /// `theta >= 0` and every `gamma_j >= 0`.
    pub fn is_cone_preserving(&self) -> bool {
        self.theta >= 0.0 && self.gamma.iter().all(|&g| g >= 0.0)
    }

    /// Raw `(Ŷ^L, Ŷ^U)`; the upper value may fall below the lower one when
    /// the coefficients are not cone preserving.
    pub fn lower_upper(&self, x: &[Interval]) -> Result<(f64, f64)> {
        if x.len() != self.p() {
            return Err(Error::ArityMismatch {
                expected: self.p(),
                found: x.len(),
            });
        }
        let mut lower = self.eta;
        let mut range = self.theta;
        for (j, xj) in x.iter().enumerate() {
            lower += self.alpha[j] * xj.lower() + self.beta[j] * xj.upper();
            range += self.gamma[j] * xj.range();
        }
        Ok((lower, lower + range))
    }

    /// The univariate model as an operator on the cone; fails when `p != 1`
    /// or the estimate leaves the cone.
    pub fn operator(&self) -> Result<AffineOperator> {
        if self.p() != 1 {
            return Err(Error::Unsupported("operator view requires exactly one predictor"));
        }
        AffineOperator::new(self.alpha[0], self.beta[0], self.gamma[0], self.eta, self.theta)
    }
}
