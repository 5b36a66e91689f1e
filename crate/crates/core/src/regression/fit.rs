use alloc::vec;
use alloc::vec::Vec;

use super::{build_design, coefficient_count, theta_index, ConeCoefficients, DesignMatrices};
use crate::error::{Error, Result};
use crate::interval::IntervalDataset;
use crate::linalg::{self, Cholesky, Matrix, DEFAULT_RANK_TOLERANCE};
use crate::lsq;

/// Condition estimates of `XᵀX` above this produce [`FitWarning::IllConditioned`].
pub const ILL_CONDITIONED: f64 = 1e12;

/// How to treat the positivity restrictions `theta >= 0`, `gamma_j >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FitPolicy {
    /// Closed-form fit; re-fit under the bounds only if it violates them.
    #[default]
    Auto,
    Always,
    /// Closed-form fit, violations reported as warnings.
    Never,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FitWarning {
    IllConditioned { condition_estimate: f64 },
    /// The closed-form estimate leaves the cone.
    NegativeRangeCoefficients {
        theta_negative: bool,
        negative_gamma: Vec<usize>,
    },
    /// `sigma2_hat` of a constrained fit reuses the unconstrained divisor
    /// `2n - 3p - 2`; it is not known to be unbiased.
    ConstrainedVariance,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FittedModel {
    coefficients: ConeCoefficients,
    sigma2_hat: f64,
    covariance: Matrix,
    constrained: bool,
    active_bounds: Vec<bool>,
    residuals_l: Vec<f64>,
    residuals_u: Vec<f64>,
    rss: f64,
    dof: usize,
    warnings: Vec<FitWarning>,
}

impl FittedModel {
    pub fn coefficients(&self) -> &ConeCoefficients {
        &self.coefficients
    }

    pub fn p(&self) -> usize {
        self.coefficients.p()
    }

    pub fn eta(&self) -> f64 {
        self.coefficients.eta
    }
    pub fn alpha(&self) -> &[f64] {
        &self.coefficients.alpha
    }
    pub fn beta(&self) -> &[f64] {
        &self.coefficients.beta
    }
    pub fn theta(&self) -> f64 {
        self.coefficients.theta
    }
    pub fn gamma(&self) -> &[f64] {
        &self.coefficients.gamma
    }

    /// Residual variance estimate `RSS / (2n - 3p - 2)`.
    pub fn sigma2_hat(&self) -> f64 {
        self.sigma2_hat
    }

    /// `(XᵀX)⁻¹ sigma2_hat`, in stacked coefficient order.
    pub fn covariance(&self) -> &Matrix {
        &self.covariance
    }

    /// Square roots of the covariance diagonal.
    pub fn standard_errors(&self) -> Vec<f64> {
        self.covariance
            .diagonal()
            .iter()
            .map(|v| libm::sqrt(libm::fmax(*v, 0.0)))
            .collect()
    }

    /// Whether the bound-constrained solver produced this fit.
    pub fn constrained(&self) -> bool {
        self.constrained
    }

    /// Per stacked coefficient, whether it sits at its zero bound.
    pub fn active_bounds(&self) -> &[bool] {
        &self.active_bounds
    }

    pub fn residuals_l(&self) -> &[f64] {
        &self.residuals_l
    }

    pub fn residuals_u(&self) -> &[f64] {
        &self.residuals_u
    }

    /// Sum of squared lower and upper residuals.
    pub fn rss(&self) -> f64 {
        self.rss
    }

    pub fn degrees_of_freedom(&self) -> usize {
        self.dof
    }

    pub fn warnings(&self) -> &[FitWarning] {
        &self.warnings
    }
}

/// Normal equations of one dataset, shared by the fitting routines.
struct NormalEquations {
    design: DesignMatrices,
    gram: Matrix,
    rhs: Vec<f64>,
    chol: Cholesky,
    p: usize,
    dof: usize,
    warnings: Vec<FitWarning>,
}

impl NormalEquations {
    fn new(data: &IntervalDataset) -> Result<Self> {
        let (n, p) = (data.n(), data.p());
        let k = coefficient_count(p);
        if 2 * n <= k {
            return Err(Error::InsufficientDegreesOfFreedom {
                observations: 2 * n,
                parameters: k,
            });
        }
        let design = build_design(data);
        let rank = linalg::pivoted_rank(&design.x_stacked, DEFAULT_RANK_TOLERANCE);
        if rank.rank < k {
            return Err(Error::SingularDesign {
                column: rank.dependent_columns[0],
            });
        }
        let gram = design.x_stacked.gram();
        let rhs = design.x_stacked.tr_mul_vec(&design.y_stacked)?;
        let chol = Cholesky::factor(&gram).map_err(|e| match e {
            Error::Singular { pivot } => Error::SingularDesign { column: pivot },
            other => other,
        })?;
        let mut warnings = Vec::new();
        let cond = chol.condition_estimate();
        if cond > ILL_CONDITIONED {
            warnings.push(FitWarning::IllConditioned {
                condition_estimate: cond,
            });
        }
        Ok(NormalEquations {
            design,
            gram,
            rhs,
            chol,
            p,
            dof: 2 * n - k,
            warnings,
        })
    }

    fn bounded_mask(&self) -> Vec<bool> {
        let t = theta_index(self.p);
        (0..coefficient_count(self.p)).map(|i| i >= t).collect()
    }

    fn finish(self, b: Vec<f64>, constrained: bool, active_bounds: Vec<bool>) -> Result<FittedModel> {
        let fitted = self.design.x_stacked.mul_vec(&b)?;
        let n = self.design.x1.rows();
        let resid: Vec<f64> = self
            .design
            .y_stacked
            .iter()
            .zip(&fitted)
            .map(|(y, f)| y - f)
            .collect();
        let rss: f64 = resid.iter().map(|r| r * r).sum();
        let sigma2_hat = rss / self.dof as f64;
        let covariance = self.chol.inverse().scale(sigma2_hat);
        let mut warnings = self.warnings;
        if constrained {
            warnings.push(FitWarning::ConstrainedVariance);
        }
        Ok(FittedModel {
            coefficients: ConeCoefficients::from_slice(self.p, &b)?,
            sigma2_hat,
            covariance,
            constrained,
            active_bounds,
            residuals_l: resid[..n].to_vec(),
            residuals_u: resid[n..].to_vec(),
            rss,
            dof: self.dof,
            warnings,
        })
    }
}

fn negative_warning(c: &ConeCoefficients) -> Option<FitWarning> {
    let negative_gamma: Vec<usize> = (0..c.p()).filter(|&j| c.gamma[j] < 0.0).collect();
    let theta_negative = c.theta < 0.0;
    (theta_negative || !negative_gamma.is_empty()).then_some(FitWarning::NegativeRangeCoefficients {
        theta_negative,
        negative_gamma,
    })
}

/// Closed-form least squares `b = (XᵀX)⁻¹XᵀY` over the stacked design.
///
/// `theta` and `gamma` are reported as estimated, even when negative.
pub fn fit_unconstrained(data: &IntervalDataset) -> Result<FittedModel> {
    let eq = NormalEquations::new(data)?;
    let b = eq.chol.solve(&eq.rhs)?;
    let k = b.len();
    let mut model = eq.finish(b, false, vec![false; k])?;
    if let Some(w) = negative_warning(&model.coefficients) {
        model.warnings.push(w);
    }
    Ok(model)
}

/// Least squares subject to `theta >= 0` and `gamma_j >= 0`; `eta`, `alpha`
/// and `beta` are free.
pub fn fit_constrained(data: &IntervalDataset) -> Result<FittedModel> {
    let eq = NormalEquations::new(data)?;
    let mask = eq.bounded_mask();
    let cap = 10 * (eq.p + 1);
    let sol = lsq::solve_bounded(&eq.gram, &eq.rhs, &mask, cap)?;
    eq.finish(sol.x, true, sol.active)
}

pub fn fit(data: &IntervalDataset, policy: FitPolicy) -> Result<FittedModel> {
    match policy {
        FitPolicy::Always => fit_constrained(data),
        FitPolicy::Never => fit_unconstrained(data),
        FitPolicy::Auto => {
            let model = fit_unconstrained(data)?;
            if model.coefficients.is_cone_preserving() {
                Ok(model)
            } else {
                let mut constrained = fit_constrained(data)?;
                if let Some(w) = negative_warning(&model.coefficients) {
                    constrained.warnings.push(w);
                }
                Ok(constrained)
            }
        }
    }
}

/// Sum of squared lower and upper errors of `coefficients` on `data`.
pub fn lu_objective(data: &IntervalDataset, coefficients: &ConeCoefficients) -> Result<f64> {
    let mut s = 0.0;
    for (x, y) in data.rows() {
        let (l, u) = coefficients.lower_upper(x)?;
        s += (y.lower() - l) * (y.lower() - l) + (y.upper() - u) * (y.upper() - u);
    }
    Ok(s)
}
