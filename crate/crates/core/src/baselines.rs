//! Center-and-range baselines.
//!
//! CCRM fits the centers by ordinary least squares and the ranges by least
//! squares with nonnegative coefficients:
//!
//! ```text
//! Y^C = b0C + sum_j b1C_j X_j^C + e^C
//! Y^R = b0R + sum_j b1R_j X_j^R + e^R,    b0R, b1R_j >= 0
//! ```
//!
//! In lower/upper coordinates this is the cone model restricted to
//! `alpha_j = beta_j + gamma_j`. The univariate M model has the same shape,
//! with the range slope `|beta|` and the mean spread error playing the roles
//! of `b1R` and `b0R`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalDataset};
use crate::linalg::{self, Matrix, DEFAULT_RANK_TOLERANCE};
use crate::lsq;
use crate::regression::{ConeCoefficients, IntervalPredictor, Prediction};

#[derive(Debug, Clone, PartialEq)]
pub struct CcrmFit {
    pub beta0_c: f64,
    pub beta1_c: Vec<f64>,
    pub beta0_r: f64,
    pub beta1_r: Vec<f64>,
    /// Residual variances with divisor `n - p - 1`.
    pub resid_var_c: f64,
    pub resid_var_r: f64,
}

/// `[1, f(x_1), ..., f(x_p)]` rows.
fn center_range_design(data: &IntervalDataset, f: impl Fn(&Interval) -> f64) -> Matrix {
    let (n, p) = (data.n(), data.p());
    let mut m = Matrix::zeros(n, p + 1);
    for (i, (row, _)) in data.rows().enumerate() {
        m[(i, 0)] = 1.0;
        for (j, x) in row.iter().enumerate() {
            m[(i, j + 1)] = f(x);
        }
    }
    m
}

fn check_rank(m: &Matrix) -> Result<()> {
    let info = linalg::pivoted_rank(m, DEFAULT_RANK_TOLERANCE);
    if info.rank < m.cols() {
        return Err(Error::SingularDesign {
            column: info.dependent_columns[0],
        });
    }
    Ok(())
}

fn residual_variance(m: &Matrix, y: &[f64], b: &[f64], dof: usize) -> Result<f64> {
    let fitted = m.mul_vec(b)?;
    let rss: f64 = y.iter().zip(&fitted).map(|(a, f)| (a - f) * (a - f)).sum();
    Ok(rss / dof as f64)
}

struct CenterRangeFit {
    center: Vec<f64>,
    range: Vec<f64>,
    var_c: f64,
    var_r: f64,
}

fn fit_center_range(data: &IntervalDataset) -> Result<CenterRangeFit> {
    let (n, p) = (data.n(), data.p());
    if n < p + 2 {
        return Err(Error::InsufficientDegreesOfFreedom {
            observations: n,
            parameters: p + 1,
        });
    }
    let xc = center_range_design(data, Interval::center);
    let xr = center_range_design(data, Interval::range);
    check_rank(&xc)?;
    check_rank(&xr)?;
    let yc: Vec<f64> = data.outcome().iter().map(Interval::center).collect();
    let yr: Vec<f64> = data.outcome().iter().map(Interval::range).collect();
    let center = linalg::solve_spd(&xc.gram(), &xc.tr_mul_vec(&yc)?)?;
    let range = lsq::nnls(&xr, &yr)?.x;
    let dof = n - p - 1;
    Ok(CenterRangeFit {
        var_c: residual_variance(&xc, &yc, &center, dof)?,
        var_r: residual_variance(&xr, &yr, &range, dof)?,
        center,
        range,
    })
}

pub fn fit_ccrm(data: &IntervalDataset) -> Result<CcrmFit> {
    let f = fit_center_range(data)?;
    Ok(CcrmFit {
        beta0_c: f.center[0],
        beta1_c: f.center[1..].to_vec(),
        beta0_r: f.range[0],
        beta1_r: f.range[1..].to_vec(),
        resid_var_c: f.var_c,
        resid_var_r: f.var_r,
    })
}

impl CcrmFit {
    pub fn p(&self) -> usize {
        self.beta1_c.len()
    }

    /// The same model in lower/upper coordinates, as cone coefficients with
    /// `alpha_j = beta_j + gamma_j`.
    pub fn to_cone(&self) -> ConeCoefficients {
        let alpha = self
            .beta1_c
            .iter()
            .zip(&self.beta1_r)
            .map(|(c, r)| 0.5 * (c + r))
            .collect();
        let beta = self
            .beta1_c
            .iter()
            .zip(&self.beta1_r)
            .map(|(c, r)| 0.5 * (c - r))
            .collect();
        ConeCoefficients {
            eta: self.beta0_c - 0.5 * self.beta0_r,
            alpha,
            beta,
            theta: self.beta0_r,
            gamma: self.beta1_r.clone(),
        }
    }

    /// Predicted `(center, range)` before clamping.
    pub fn center_range(&self, x: &[Interval]) -> Result<(f64, f64)> {
        if x.len() != self.p() {
            return Err(Error::ArityMismatch {
                expected: self.p(),
                found: x.len(),
            });
        }
        let c = self.beta0_c + x.iter().zip(&self.beta1_c).map(|(xi, b)| b * xi.center()).sum::<f64>();
        let r = self.beta0_r + x.iter().zip(&self.beta1_r).map(|(xi, b)| b * xi.range()).sum::<f64>();
        Ok((c, r))
    }
}

impl IntervalPredictor for CcrmFit {
    fn arity(&self) -> usize {
        self.p()
    }

    fn predict(&self, predictors: &[Interval]) -> Result<Prediction> {
        let (c, r) = self.center_range(predictors)?;
        Prediction::from_center_range(c, r)
    }
}

/// Univariate mid/spread model `Y^C = slope X^C + intercept`,
/// `Y^R = |beta| X^R + spr`, with `E(spr) >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MModelFit {
    pub slope_c: f64,
    pub intercept_c: f64,
    pub abs_slope_r: f64,
    pub spr_eps_mean: f64,
}

/// Least squares on mid and spread with the spread slope and the mean spread
/// error both held nonnegative.
pub fn fit_m_model(data: &IntervalDataset) -> Result<MModelFit> {
    if data.p() != 1 {
        return Err(Error::Unsupported("the M model takes exactly one predictor"));
    }
    let f = fit_center_range(data)?;
    Ok(MModelFit {
        slope_c: f.center[1],
        intercept_c: f.center[0],
        abs_slope_r: f.range[1],
        spr_eps_mean: f.range[0],
    })
}

impl MModelFit {
    /// The equivalent CCRM-shaped cone coefficients.
    pub fn to_cone(&self) -> ConeCoefficients {
        CcrmFit {
            beta0_c: self.intercept_c,
            beta1_c: alloc::vec![self.slope_c],
            beta0_r: self.spr_eps_mean,
            beta1_r: alloc::vec![self.abs_slope_r],
            resid_var_c: 0.0,
            resid_var_r: 0.0,
        }
        .to_cone()
    }

    pub fn center_range(&self, x: &[Interval]) -> Result<(f64, f64)> {
        if x.len() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: x.len(),
            });
        }
        Ok((
            self.slope_c * x[0].center() + self.intercept_c,
            self.abs_slope_r * x[0].range() + self.spr_eps_mean,
        ))
    }
}

impl IntervalPredictor for MModelFit {
    fn arity(&self) -> usize {
        1
    }

    fn predict(&self, predictors: &[Interval]) -> Result<Prediction> {
        let (c, r) = self.center_range(predictors)?;
        Prediction::from_center_range(c, r)
    }
}
