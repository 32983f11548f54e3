//! Fredholm determinants det(1 - K) on an interval by Nystrom
//! discretization: det(I - W^{1/2} K W^{1/2}) on a Gauss-Legendre grid,
//! which is symmetric whenever the kernel is and converges spectrally for
//! smooth kernels.

use crate::quad::GaussLegendre;
use crate::{Error, Result};
use nalgebra::DMatrix;

/// det(1 - K) on [a, b] with an n-point rule.
pub fn fredholm_det<K: Fn(f64, f64) -> f64>(kernel: K, a: f64, b: f64, n: usize) -> f64 {
    let rule = GaussLegendre::new(n);
    let pts: Vec<(f64, f64)> = rule.mapped(a, b).collect();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let w = (pts[i].1 * pts[j].1).sqrt();
            let delta = if i == j { 1.0 } else { 0.0 };
            m[(i, j)] = delta - w * kernel(pts[i].0, pts[j].0);
        }
    }
    m.lu().determinant()
}

/// det(1 - K) with the node count doubled until two successive values agree
/// to `tol`; errors out if 640 nodes are not enough.
pub fn fredholm_det_adaptive<K: Fn(f64, f64) -> f64>(
    kernel: K,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64> {
    let mut n = 20;
    let mut prev = fredholm_det(&kernel, a, b, n);
    while n < 640 {
        n *= 2;
        let next = fredholm_det(&kernel, a, b, n);
        if (next - prev).abs() < tol {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::Numeric(format!(
        "Fredholm determinant did not stabilize to {tol} within 640 nodes"
    )))
}
