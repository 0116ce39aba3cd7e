//! Eigenvalues, spectral decompositions and exact characteristic polynomials
//! of Hermitian matrices.
//!
//! A complex Hermitian `M = A + iB` is diagonalised through the real symmetric
//! embedding `[[A, -B], [B, A]]`, whose spectrum is that of `M` with every
//! eigenvalue doubled.

mod charpoly;
pub mod jacobi;

pub use charpoly::{char_poly_exact, determinant_exact, is_singular_exact, IntPolynomial};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrices::{HermitianMatrixExact, HermitianMatrixNumeric};
use crate::report::{CheckKind, ReportValue, TheoremReport};

/// Default off-diagonal convergence tolerance of the eigensolver.
pub const DEFAULT_CONVERGENCE_TOL: f64 = 1e-10;
/// Default absolute tolerance for spectral assertions.
pub const DEFAULT_ASSERTION_TOL: f64 = 1e-8;
/// Eigenvalue pairs of the real embedding further apart than this are logged.
pub const PAIR_GAP_WARNING: f64 = 1e-6;

/// Anything that can be handed to the eigensolver.
pub trait AsHermitian {
    fn to_hermitian_numeric(&self) -> HermitianMatrixNumeric;
}

impl AsHermitian for HermitianMatrixNumeric {
    fn to_hermitian_numeric(&self) -> HermitianMatrixNumeric {
        self.clone()
    }
}

impl AsHermitian for HermitianMatrixExact {
    fn to_hermitian_numeric(&self) -> HermitianMatrixNumeric {
        self.to_numeric()
    }
}

/// Real eigenvalues sorted in descending order, with multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue.
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// Smallest eigenvalue.
    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// Largest elementwise gap to another spectrum of the same length, or
    /// infinity when the lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

fn embed(m: &HermitianMatrixNumeric) -> Vec<f64> {
    let n = m.dim();
    let size = 2 * n;
    let mut r = vec![0.0; size * size];
    for i in 0..n {
        for j in 0..n {
            let z = m.get(i, j);
            r[i * size + j] = z.re;
            r[i * size + (j + n)] = -z.im;
            r[(i + n) * size + j] = z.im;
            r[(i + n) * size + (j + n)] = z.re;
        }
    }
    r
}

/// Real eigenpairs of the embedding, sorted by descending eigenvalue.
fn embedded_eigen(m: &HermitianMatrixNumeric, tol: f64) -> Result<Vec<(f64, Vec<f64>)>> {
    let n = m.dim();
    let eig = jacobi::jacobi_eigen(&embed(m), 2 * n, tol)?;
    let mut pairs: Vec<(f64, Vec<f64>)> = (0..2 * n)
        .map(|k| (eig.values[k], eig.vector(k).to_vec()))
        .collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    Ok(pairs)
}

fn collapse(doubled: &[f64]) -> Vec<f64> {
    doubled
        .chunks(2)
        .map(|pair| {
            let gap = (pair[0] - pair[1]).abs();
            if gap > PAIR_GAP_WARNING {
                log::warn!("embedded eigenvalue pair ({}, {}) differs by {gap:e}", pair[0], pair[1]);
            }
            0.5 * (pair[0] + pair[1])
        })
        .collect()
}

/// All eigenvalues of a Hermitian matrix, descending, with multiplicity.
pub fn eigenvalues(m: &impl AsHermitian, tol: f64) -> Result<Spectrum> {
    let m = m.to_hermitian_numeric();
    let pairs = embedded_eigen(&m, tol)?;
    let doubled: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    Ok(Spectrum { values: collapse(&doubled), tol })
}

/// `M = Σ λ_i x_i x_i*` with orthonormal eigenvectors `x_i`.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    n: usize,
    pairs: Vec<(f64, Vec<Complex64>)>,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `(λ_i, x_i)` with descending `λ_i`.
    pub fn eigenpairs(&self) -> &[(f64, Vec<Complex64>)] {
        &self.pairs
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum { values: self.pairs.iter().map(|p| p.0).collect(), tol: 0.0 }
    }

    /// `P_i = x_i x_i*`, row-major.
    pub fn projector(&self, i: usize) -> Vec<Complex64> {
        let x = &self.pairs[i].1;
        let n = self.n;
        let mut p = vec![Complex64::zero(); n * n];
        for r in 0..n {
            for s in 0..n {
                p[r * n + s] = x[r] * x[s].conj();
            }
        }
        p
    }

    /// `Σ c_i P_i` for the given weights.
    pub fn weighted_sum(&self, weights: impl Fn(usize, f64) -> f64) -> Vec<Complex64> {
        let n = self.n;
        let mut out = vec![Complex64::zero(); n * n];
        for (i, (lambda, _)) in self.pairs.iter().enumerate() {
            let w = weights(i, *lambda);
            for (o, p) in out.iter_mut().zip(self.projector(i)) {
                *o += p * w;
            }
        }
        out
    }

    /// `Σ P_i`, which should be the identity.
    pub fn projector_sum(&self) -> Vec<Complex64> {
        self.weighted_sum(|_, _| 1.0)
    }

    /// `Σ λ_i P_i`, which should reproduce the decomposed matrix.
    pub fn reconstruct(&self) -> Vec<Complex64> {
        self.weighted_sum(|_, lambda| lambda)
    }
}

fn project_out(v: &mut [Complex64], basis: &[Vec<Complex64>]) {
    for b in basis {
        let dot: Complex64 = b.iter().zip(v.iter()).map(|(x, y)| x.conj() * y).sum();
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi -= dot * bi;
        }
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
}

/// Orthonormal eigenvectors from the real embedding.
///
/// Each real eigenvector `(u, v)` gives the complex eigenvector `u + iv`. An
/// eigenvalue of multiplicity `r` yields `2r` real vectors spanning an
/// `r`-dimensional complex space, so within each cluster of equal eigenvalues
/// the vectors are orthonormalised greedily, always taking the candidate with
/// the largest remaining component.
pub fn spectral_decomposition(m: &impl AsHermitian, tol: f64) -> Result<SpectralDecomposition> {
    let m = m.to_hermitian_numeric();
    let n = m.dim();
    let real_pairs = embedded_eigen(&m, tol)?;
    let values = collapse(&real_pairs.iter().map(|p| p.0).collect::<Vec<_>>());
    let scale = values.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    let cluster_tol = 1e-9 * scale;

    let mut pairs: Vec<(f64, Vec<Complex64>)> = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (values[end - 1] - values[end]).abs() <= cluster_tol {
            end += 1;
        }
        let mut candidates: Vec<Vec<Complex64>> = real_pairs[2 * start..2 * end]
            .iter()
            .map(|(_, v)| (0..n).map(|i| Complex64::new(v[i], v[i + n])).collect())
            .collect();
        let mut accepted: Vec<Vec<Complex64>> = Vec::new();
        for &value in &values[start..end] {
            for c in candidates.iter_mut() {
                project_out(c, &accepted);
            }
            let best = candidates
                .iter()
                .enumerate()
                .max_by(|a, b| norm(a.1).total_cmp(&norm(b.1)))
                .map(|(i, _)| i)
                .expect("cluster has candidates");
            let mut v = candidates.swap_remove(best);
            let len = norm(&v);
            for z in v.iter_mut() {
                *z /= len;
            }
            accepted.push(v.clone());
            pairs.push((value, v));
        }
        start = end;
    }
    Ok(SpectralDecomposition { n, pairs })
}

/// Checks, for a unit vector `x`, that `Σ_{i,j} conj(x_i) x_j = |Σ x_i|² ≥ 0`
/// and that `|x_j|² Σ_{i≠j} |x_i|² = |x_j|²(1 - |x_j|²) ≤ 1/4` for every `j`.
///
/// The report's `lhs` is the largest of the per-coordinate products.
pub fn unit_vector_inequalities(x: &[Complex64], tol: f64) -> Result<TheoremReport> {
    let len = norm(x);
    if (len - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitVector(len));
    }
    let total: Complex64 = x.iter().sum();
    let gram_sum = total.norm_sqr();
    let weights: Vec<f64> = x.iter().map(Complex64::norm_sqr).collect();
    let sum_w: f64 = weights.iter().sum();
    let worst = weights
        .iter()
        .map(|w| w * (sum_w - w))
        .fold(0.0, f64::max);
    let first = gram_sum >= -tol;
    let mut report = TheoremReport::upper_bound("unit_vector_inequalities", CheckKind::Inequality, worst, 0.25, tol)
        .with_detail("entry_sum", format!("{gram_sum:.6}"))
        .with_detail("entry_sum_nonnegative", first);
    report.holds &= first;
    report.rhs = ReportValue::Real(0.25);
    Ok(report)
}
