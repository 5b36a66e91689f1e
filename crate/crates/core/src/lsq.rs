//! Least squares with nonnegativity bounds on a subset of the coefficients.
//!
//! Works on the normal equations: minimize `½ xᵀHx − gᵀx` with `H = AᵀA`,
//! `g = Aᵀy`, subject to `x_i >= 0` for every `i` flagged in `bounded`. This is
//! `½‖y − Ax‖²` up to a constant. The solver is a primal active-set method in
//! the Lawson–Hanson style, generalized so that unbounded coordinates are
//! always free.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Cholesky, Matrix};

#[derive(Debug, Clone, PartialEq)]
pub struct BoundedSolution {
    pub x: Vec<f64>,
    /// `active[i]` is true when `x_i` is held at its bound.
    pub active: Vec<bool>,
    /// Outer iterations used (bounds released).
    pub iterations: usize,
}

impl BoundedSolution {
    pub fn any_active(&self) -> bool {
        self.active.iter().any(|&a| a)
    }
}

/// Solves `H_FF x_F = g_F` with `x_i = 0` off the free set `F`.
fn solve_free(h: &Matrix, g: &[f64], free: &[bool]) -> Result<Vec<f64>> {
    let idx: Vec<usize> = (0..g.len()).filter(|&i| free[i]).collect();
    let mut x = vec![0.0; g.len()];
    if idx.is_empty() {
        return Ok(x);
    }
    let sub = h.select(&idx);
    let rhs: Vec<f64> = idx.iter().map(|&i| g[i]).collect();
    let sol = Cholesky::factor(&sub)
        .map_err(|e| match e {
            Error::Singular { pivot } => Error::Singular { pivot: idx[pivot] },
            other => other,
        })?
        .solve(&rhs)?;
    for (&i, v) in idx.iter().zip(sol) {
        x[i] = v;
    }
    Ok(x)
}

/// `Hx − g`, half the gradient of `‖y − Ax‖²`.
pub fn half_gradient(h: &Matrix, g: &[f64], x: &[f64]) -> Vec<f64> {
    let hx = h.mul_vec(x).expect("dimensions checked by caller");
    hx.iter().zip(g).map(|(a, b)| a - b).collect()
}

/// Largest violation of the first-order optimality conditions, measured on
/// the full gradient `2(Hx − g)`: free or interior coordinates need a zero
/// gradient, coordinates at their bound a nonnegative one, and bounded
/// coordinates must be feasible.
pub fn kkt_violation(h: &Matrix, g: &[f64], bounded: &[bool], x: &[f64]) -> f64 {
    let grad = half_gradient(h, g, x);
    let mut worst = 0.0f64;
    for i in 0..x.len() {
        let gi = 2.0 * grad[i];
        let v = if bounded[i] && x[i] <= 0.0 {
            libm::fmax(-gi, -x[i])
        } else {
            libm::fabs(gi)
        };
        worst = libm::fmax(worst, v);
    }
    worst
}

/// Minimizes `½ xᵀHx − gᵀx` subject to `x_i >= 0` where `bounded[i]`.
///
/// Starts from the unconstrained minimizer. If that is infeasible, the
/// violated coordinates are pinned at zero and the reduced system re-solved;
/// when the reduced solution is itself feasible it becomes the starting point,
/// otherwise all bounded coordinates start pinned. From there bounds are
/// released one at a time (most negative multiplier first), stepping back to
/// the feasible region whenever a free coordinate would go negative.
pub fn solve_bounded(
    h: &Matrix,
    g: &[f64],
    bounded: &[bool],
    max_iterations: usize,
) -> Result<BoundedSolution> {
    let k = g.len();
    if h.shape() != (k, k) || bounded.len() != k {
        return Err(Error::DimensionMismatch {
            op: "solve_bounded",
            left: h.shape(),
            right: (k, bounded.len()),
        });
    }
    let unconstrained = solve_free(h, g, &vec![true; k])?;
    let violated: Vec<bool> = (0..k).map(|i| bounded[i] && unconstrained[i] < 0.0).collect();
    if !violated.iter().any(|&v| v) {
        return Ok(BoundedSolution {
            x: unconstrained,
            active: vec![false; k],
            iterations: 0,
        });
    }

    let feasible = |x: &[f64]| (0..k).all(|i| !bounded[i] || x[i] >= 0.0);
    let mut active = violated;
    let free: Vec<bool> = active.iter().map(|a| !a).collect();
    let mut x = solve_free(h, g, &free)?;
    if !feasible(&x) {
        active = bounded.to_vec();
        let free: Vec<bool> = active.iter().map(|a| !a).collect();
        x = solve_free(h, g, &free)?;
    }
    for i in 0..k {
        if active[i] {
            x[i] = 0.0;
        }
    }

    let g_scale = g.iter().fold(0.0f64, |m, v| libm::fmax(m, libm::fabs(*v)));
    let tol = 1e-12 * (1.0 + g_scale);
    let inner_cap = k + 1;

    for iteration in 0..=max_iterations {
        let grad = half_gradient(h, g, &x);
        let release = (0..k)
            .filter(|&i| active[i] && grad[i] < -tol)
            .min_by(|&a, &b| grad[a].total_cmp(&grad[b]));
        let Some(release) = release else {
            return Ok(BoundedSolution {
                x,
                active,
                iterations: iteration,
            });
        };
        if iteration == max_iterations {
            break;
        }
        active[release] = false;

        for _ in 0..inner_cap {
            let free: Vec<bool> = active.iter().map(|a| !a).collect();
            let z = solve_free(h, g, &free)?;
            let blocking: Vec<usize> = (0..k)
                .filter(|&i| bounded[i] && !active[i] && z[i] <= 0.0)
                .collect();
            if blocking.is_empty() {
                x = z;
                break;
            }
            // largest step towards z that keeps every bounded coordinate >= 0
            let step = blocking
                .iter()
                .map(|&i| {
                    let d = x[i] - z[i];
                    if d > 0.0 {
                        x[i] / d
                    } else {
                        0.0
                    }
                })
                .fold(1.0f64, libm::fmin);
            for i in 0..k {
                x[i] += step * (z[i] - x[i]);
            }
            for i in 0..k {
                if bounded[i] && !active[i] && x[i] <= tol * (1.0 + libm::fabs(z[i])) {
                    x[i] = 0.0;
                    active[i] = true;
                }
            }
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iterations,
    })
}

/// Nonnegative least squares on a design matrix, all coordinates bounded.
pub fn nnls(a: &Matrix, y: &[f64]) -> Result<BoundedSolution> {
    let h = a.gram();
    let g = a.tr_mul_vec(y)?;
    let k = a.cols();
    solve_bounded(&h, &g, &vec![true; k], 10 * k.max(1))
}
