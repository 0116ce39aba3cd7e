//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use crate::error::{Error, Result};

/// Sweeps attempted before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a real symmetric matrix, unsorted.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub n: usize,
    pub values: Vec<f64>,
    /// Column-major: `vectors[k * n + i]` is component `i` of eigenvector `k`.
    pub vectors: Vec<f64>,
}

impl SymmetricEigen {
    pub fn vector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.n..(k + 1) * self.n]
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Diagonalises the row-major symmetric matrix `a` by cyclic sweeps of plane
/// rotations until the off-diagonal Frobenius norm drops below `tol`.
pub fn jacobi_eigen(a: &[f64], n: usize, tol: f64) -> Result<SymmetricEigen> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    if a.len() != n * n {
        return Err(Error::DimensionMismatch { expected: n * n, got: a.len() });
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::NoConvergence { sweeps: 0, off_norm: f64::NAN });
    }
    let mut a = a.to_vec();
    // eigenvectors accumulate as columns of v, stored row-major here
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    loop {
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS || !off.is_finite() {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                if s == 0.0 {
                    continue;
                }
                rotated = true;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        off = off_diagonal_norm(&a, n);
        if !rotated {
            break;
        }
    }

    let values = (0..n).map(|i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for k in 0..n {
        for i in 0..n {
            vectors[k * n + i] = v[i * n + k];
        }
    }
    Ok(SymmetricEigen { n, values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &[f64], e: &SymmetricEigen) -> f64 {
        let n = e.n;
        let mut worst = 0.0f64;
        for k in 0..n {
            let x = e.vector(k);
            for i in 0..n {
                let ax: f64 = (0..n).map(|j| a[i * n + j] * x[j]).sum();
                worst = worst.max((ax - e.values[k] * x[i]).abs());
            }
        }
        worst
    }

    #[test]
    fn two_by_two() {
        let a = [2.0, 1.0, 1.0, 2.0];
        let e = jacobi_eigen(&a, 2, 1e-12).unwrap();
        let mut vals = e.values.clone();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 3.0).abs() < 1e-14);
        assert!(residual(&a, &e) < 1e-13);
    }

    #[test]
    fn already_diagonal_and_empty() {
        let e = jacobi_eigen(&[3.0, 0.0, 0.0, 1.0], 2, 1e-10).unwrap();
        assert_eq!(e.values, vec![3.0, 1.0]);
        assert!(jacobi_eigen(&[], 0, 1e-10).unwrap().values.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(jacobi_eigen(&[1.0], 1, 0.0).unwrap_err(), Error::InvalidTolerance(0.0));
        assert!(matches!(jacobi_eigen(&[1.0, 2.0], 2, 1e-10), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(
            jacobi_eigen(&[f64::NAN, 1.0, 1.0, 0.0], 2, 1e-10),
            Err(Error::NoConvergence { .. })
        ));
    }

    #[test]
    fn orthonormal_vectors_on_dense_matrix() {
        let n = 7;
        let a: Vec<f64> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                ((i * j + i + j) % 5) as f64 - 2.0
            })
            .collect();
        let e = jacobi_eigen(&a, n, 1e-12).unwrap();
        assert!(residual(&a, &e) < 1e-10);
        for p in 0..n {
            for q in 0..n {
                let dot: f64 = e.vector(p).iter().zip(e.vector(q)).map(|(x, y)| x * y).sum();
                assert!((dot - if p == q { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
    }
}
