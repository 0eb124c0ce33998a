//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use serde::Serialize;

use super::matrix::SymmetricMatrix;
use crate::error::{Error, Result};

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Sorts the values ascending. NaNs are rejected by the solver before
    /// they can get here.
    pub fn from_values(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Spectrum { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// `sum_i lambda_i^order`.
    pub fn power_sum(&self, order: i32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(order)).sum()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct JacobiConfig {
    /// Stop once `||offdiag||_F <= tolerance * ||A||_F`.
    pub tolerance: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiConfig {
    fn default() -> Self {
        JacobiConfig {
            tolerance: 1e-12,
            max_sweeps: 60,
        }
    }
}

pub fn eigenvalues(matrix: &SymmetricMatrix) -> Result<Spectrum> {
    eigenvalues_with(matrix, JacobiConfig::default())
}

/// Diagonalises a copy of `matrix` with cyclic sweeps of Jacobi plane
/// rotations, each rotation annihilating one off-diagonal pair.
pub fn eigenvalues_with(matrix: &SymmetricMatrix, config: JacobiConfig) -> Result<Spectrum> {
    let n = matrix.n();
    let mut work = matrix.clone();
    let total = matrix.frobenius_norm();
    let threshold = config.tolerance * total;
    let a = work.entries_mut();

    let mut off = off_diagonal_norm(a, n);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == config.max_sweeps || !off.is_finite() {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(a, n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(a, n);
    }
    log::debug!("jacobi converged after {sweeps} sweeps, off-diagonal norm {off:e}");
    Ok(Spectrum::from_values(
        (0..n).map(|i| a[i * n + i]).collect(),
    ))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Applies the rotation in the `(p, q)` plane that zeroes `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_ring_lattice;
    use crate::spectral::adjacency_matrix;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn zero_matrix() {
        let s = eigenvalues(&SymmetricMatrix::zeros(4)).unwrap();
        assert_eq!(s.eigenvalues(), &[0.0; 4]);
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = eigenvalues(&adjacency_matrix(&build_ring_lattice(5, 4).unwrap())).unwrap();
        for (got, want) in s.eigenvalues().iter().zip([-1.0, -1.0, -1.0, -1.0, 4.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn circulant_spectrum_of_lattice() {
        let (n, k) = (30, 6);
        let s = eigenvalues(&adjacency_matrix(&build_ring_lattice(n, k).unwrap())).unwrap();
        let expected = Spectrum::from_values(
            (0..n)
                .map(|j| {
                    (1..=k / 2)
                        .map(|d| 2.0 * (2.0 * PI * (j * d) as f64 / n as f64).cos())
                        .sum()
                })
                .collect(),
        );
        for (got, want) in s.eigenvalues().iter().zip(expected.eigenvalues()) {
            assert_abs_diff_eq!(*got, *want, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(s.max().unwrap(), k as f64, epsilon = 1e-9);
    }

    #[test]
    fn two_by_two() {
        let m = SymmetricMatrix::from_rows(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let s = eigenvalues(&m).unwrap();
        assert_abs_diff_eq!(s.eigenvalues()[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.eigenvalues()[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn exhausted_budget_is_an_error() {
        let m = adjacency_matrix(&build_ring_lattice(20, 4).unwrap());
        let config = JacobiConfig {
            tolerance: 1e-12,
            max_sweeps: 1,
        };
        assert!(matches!(
            eigenvalues_with(&m, config),
            Err(Error::NoConvergence { sweeps: 1, .. })
        ));
    }
}
