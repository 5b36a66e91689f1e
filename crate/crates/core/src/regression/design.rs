use alloc::vec::Vec;

use crate::interval::IntervalDataset;
use crate::linalg::Matrix;

/// Design matrices of the stacked model `Y = X b + e`:
///
/// ```text
/// X1 = [1, X_1^L, X_1^U, ..., X_p^L, X_p^U]     (n x (2p+1))
/// X2 = [1, X_1^R, ..., X_p^R]                    (n x (p+1))
/// Y  = [Y^L; Y^U]                                (2n)
/// X  = [[X1, 0], [X1, X2]]                       (2n x (3p+2))
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct DesignMatrices {
    pub x1: Matrix,
    pub x2: Matrix,
    pub y_stacked: Vec<f64>,
    pub x_stacked: Matrix,
}

pub fn build_design(data: &IntervalDataset) -> DesignMatrices {
    let (n, p) = (data.n(), data.p());
    let k1 = 2 * p + 1;
    let k2 = p + 1;
    let mut x1 = Matrix::zeros(n, k1);
    let mut x2 = Matrix::zeros(n, k2);
    for (i, (row, _)) in data.rows().enumerate() {
        x1[(i, 0)] = 1.0;
        x2[(i, 0)] = 1.0;
        for (j, x) in row.iter().enumerate() {
            x1[(i, 1 + 2 * j)] = x.lower();
            x1[(i, 2 + 2 * j)] = x.upper();
            x2[(i, 1 + j)] = x.range();
        }
    }
    let mut x_stacked = Matrix::zeros(2 * n, k1 + k2);
    for i in 0..n {
        for c in 0..k1 {
            x_stacked[(i, c)] = x1[(i, c)];
            x_stacked[(n + i, c)] = x1[(i, c)];
        }
        for c in 0..k2 {
            x_stacked[(n + i, k1 + c)] = x2[(i, c)];
        }
    }
    let y_stacked = data
        .outcome()
        .iter()
        .map(|y| y.lower())
        .chain(data.outcome().iter().map(|y| y.upper()))
        .collect();
    DesignMatrices {
        x1,
        x2,
        y_stacked,
        x_stacked,
    }
}
