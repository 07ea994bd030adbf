//! Small dense linear algebra: square matrices and a symmetric
//! eigendecomposition via the cyclic Jacobi method.
//!
//! Only used at desk scale (a few hundred nodes), where Jacobi's
//! robustness beats anything fancier.

use alloc::vec;
use alloc::vec::Vec;

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }
}

/// Eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues sorted ascending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors; column `k` pairs with `values[k]`.
    pub vectors: Matrix,
}

impl SymmetricEigen {
    /// Gap between the two largest eigenvalues.
    pub fn dominant_gap(&self) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return f64::INFINITY;
        }
        self.values[n - 1] - self.values[n - 2]
    }
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
///
/// The caller is responsible for symmetry; only the upper triangle drives
/// the rotations while both triangles are updated.
pub fn symmetric_eigen(a: &Matrix) -> SymmetricEigen {
    let n = a.n();
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    if n <= 1 {
        return SymmetricEigen {
            values: (0..n).map(|i| m.get(i, i)).collect(),
            vectors: v,
        };
    }

    let frobenius: f64 = libm::sqrt(m.data.iter().map(|x| x * x).sum::<f64>());
    let target = 1e-14 * frobenius.max(1e-300);

    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m.get(i, j) * m.get(i, j);
            }
        }
        if libm::sqrt(2.0 * off) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                // Stable tangent of the rotation angle.
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;

                for k in 0..n {
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    m.set(k, p, c * mkp - s * mkq);
                    m.set(k, q, s * mkp + c * mkq);
                }
                for k in 0..n {
                    let mpk = m.get(p, k);
                    let mqk = m.get(q, k);
                    m.set(p, k, c * mpk - s * mqk);
                    m.set(q, k, s * mpk + c * mqk);
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }

    // Sort eigenpairs ascending by value.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).total_cmp(&m.get(j, j)));
    let values: Vec<f64> = order.iter().map(|&i| m.get(i, i)).collect();
    let mut vectors = Matrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, new_col, v.get(row, old_col));
        }
    }
    SymmetricEigen { values, vectors }
}

pub(crate) fn l2_norm(v: &[f64]) -> f64 {
    libm::sqrt(v.iter().map(|x| x * x).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_known_spectrum() {
        // [[0, w], [w, 0]] has eigenvalues -w and w.
        let mut a = Matrix::zeros(2);
        a.set(0, 1, 3.0);
        a.set(1, 0, 3.0);
        let eig = symmetric_eigen(&a);
        assert!((eig.values[0] + 3.0).abs() < 1e-12);
        assert!((eig.values[1] - 3.0).abs() < 1e-12);
        assert!((eig.dominant_gap() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn eigenpairs_satisfy_definition() {
        // Fixed symmetric matrix; check A v = lambda v for every pair.
        let n = 5;
        let mut a = Matrix::zeros(n);
        let entries = [
            (0, 1, 1.3), (0, 3, 0.4), (1, 2, 2.1), (2, 3, 0.9), (3, 4, 1.7), (1, 4, 0.6),
        ];
        for &(i, j, w) in &entries {
            a.set(i, j, w);
            a.set(j, i, w);
        }
        let eig = symmetric_eigen(&a);
        for k in 0..n {
            let v = eig.vectors.column(k);
            for i in 0..n {
                let av: f64 = (0..n).map(|j| a.get(i, j) * v[j]).sum();
                assert!((av - eig.values[k] * v[i]).abs() < 1e-10);
            }
            assert!((l2_norm(&v) - 1.0).abs() < 1e-12);
        }
        // Trace is preserved.
        let trace: f64 = eig.values.iter().sum();
        assert!(trace.abs() < 1e-10);
    }

    #[test]
    fn diagonal_matrix_is_already_solved() {
        let mut a = Matrix::zeros(3);
        a.set(0, 0, 2.0);
        a.set(1, 1, -1.0);
        a.set(2, 2, 5.0);
        let eig = symmetric_eigen(&a);
        assert_eq!(eig.values, alloc::vec![-1.0, 2.0, 5.0]);
    }
}
