//! Cone-preserving affine operators of the plane.
//!
//! ```text
//! T(x, y) = [ alpha          beta         ] [x] + [ eta         ]
//!           [ alpha - gamma  beta + gamma ] [y]   [ eta + theta ]
//! ```
//!
//! `T` maps the cone `x <= y` into itself exactly when `gamma, theta >= 0`.

use crate::error::{Error, Result};
use crate::interval::Interval;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineOperator {
    alpha: f64,
    beta: f64,
    gamma: f64,
    eta: f64,
    theta: f64,
}

impl AffineOperator {
    pub fn new(alpha: f64, beta: f64, gamma: f64, eta: f64, theta: f64) -> Result<Self> {
        if ![alpha, beta, gamma, eta, theta].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if gamma < 0.0 || theta < 0.0 {
            return Err(Error::InvalidOperator { gamma, theta });
        }
        Ok(AffineOperator {
            alpha,
            beta,
            gamma,
            eta,
            theta,
        })
    }

    /// `alpha = gamma = 1`, everything else zero.
    pub fn identity() -> Self {
        AffineOperator {
            alpha: 1.0,
            beta: 0.0,
            gamma: 1.0,
            eta: 0.0,
            theta: 0.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn eta(&self) -> f64 {
        self.eta
    }
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Image of `x`. Its range is `gamma * x.range() + theta`.
    pub fn apply(&self, x: &Interval) -> Interval {
        let lower = self.alpha * x.lower() + self.beta * x.upper() + self.eta;
        let range = self.gamma * x.range() + self.theta;
        // Built from the range so that lower <= upper holds bit-for-bit.
        Interval::new(lower, lower + range).expect("cone-preserving operator")
    }

    /// Image of the ray `U = aL + b` as `(slope, intercept)` of the image ray.
    pub fn map_ray(&self, a: f64, b: f64) -> Result<(f64, f64)> {
        let denom = self.alpha + self.beta * a;
        let scale = libm::fabs(self.alpha) + libm::fabs(self.beta * a);
        if denom == 0.0 || libm::fabs(denom) <= 1e-14 * scale {
            return Err(Error::SingularRay);
        }
        let k = self.gamma * (a - 1.0) / denom;
        let slope = 1.0 + k;
        let intercept = self.gamma * b + self.theta - k * (self.beta * b + self.eta);
        Ok((slope, intercept))
    }
}
