//! Linear regression for interval-valued data built on affine operators of the
//! cone `{(x, y) : x <= y}`.
//!
//! An interval `[l, u]` is identified with the point `(l, u)` of the cone. The
//! model maps predictor intervals through a cone-preserving affine operator:
//!
//! ```text
//! Y^L = sum_j (alpha_j X_j^L + beta_j X_j^U) + eta
//! Y^U = sum_j ((alpha_j - gamma_j) X_j^L + (beta_j + gamma_j) X_j^U) + eta + theta
//! ```
//!
//! with `gamma_j >= 0` and `theta >= 0`. This crate holds the numerical pieces:
//! interval algebra, the operator itself, a small dense linear-algebra kernel,
//! least-squares estimation with positivity diagnostics and a bound-constrained
//! fallback, and the CCRM / M-model baselines. It needs only `alloc`.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod affine;
pub mod baselines;
mod error;
pub mod interval;
pub mod linalg;
pub mod lsq;
pub mod metrics;
pub mod regression;
pub mod stats;

pub use affine::AffineOperator;
pub use baselines::{fit_ccrm, fit_m_model, CcrmFit, MModelFit};
pub use error::{Error, Result};
pub use interval::{delta_metric, Interval, IntervalDataset};
pub use linalg::Matrix;
pub use regression::{
    build_design, range_bias_check, fit, fit_constrained, fit_unconstrained, positivity_diagnostics,
    predict, ConeCoefficients, DesignMatrices, FitPolicy, FitWarning, FittedModel, IntervalPredictor,
    PositivityDiagnostics, Prediction,
};
