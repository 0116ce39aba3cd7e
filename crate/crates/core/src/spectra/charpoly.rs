//! Exact characteristic polynomials by Faddeev–LeVerrier over `Q(ω)`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::eisenstein::EisensteinRational;
use crate::matrices::HermitianMatrixExact;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `λ + c`.
    pub fn linear(c: i64) -> Self {
        Self::from_i64(&[c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `p(λ + c)`, by Horner's scheme in the shifted variable.
    pub fn shift(&self, c: i64) -> Self {
        let lin = Self::linear(c);
        let mut acc = IntPolynomial::new(Vec::new());
        for a in self.coeffs.iter().rev() {
            acc = &acc * &lin;
            acc = acc.add_constant(a);
        }
        acc
    }

    fn add_constant(mut self, c: &BigInt) -> Self {
        if self.coeffs.is_empty() {
            self.coeffs.push(c.clone());
        } else {
            self.coeffs[0] += c;
        }
        Self::new(self.coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    /// Highest degree first in the variable `λ`, e.g. `λ^2 - 2λ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

/// `det(λI - M)` by the Faddeev–LeVerrier recurrence
///
/// ```text
/// N_1 = I,            c_{n-1} = -tr(M N_1)
/// N_k = M N_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(M N_k) / k
/// ```
///
/// carried out in `Q(ω)`.
///
/// # Panics
///
/// If a coefficient fails to be a rational integer, which cannot happen for a
/// Hermitian matrix over `Z[ω]` and would indicate an arithmetic bug.
pub fn char_poly_exact(m: &HermitianMatrixExact) -> IntPolynomial {
    let n = m.dim();
    let a: Vec<EisensteinRational> = m.entries().iter().map(|&x| x.into()).collect();
    let mut coeffs = vec![EisensteinRational::zero(); n + 1];
    coeffs[n] = EisensteinRational::one();
    let mut acc = vec![EisensteinRational::zero(); n * n];
    for k in 1..=n {
        // acc <- M acc + c_{n-k+1} I
        let mut next = vec![EisensteinRational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = EisensteinRational::zero();
                for l in 0..n {
                    if a[i * n + l].is_zero() || acc[l * n + j].is_zero() {
                        continue;
                    }
                    s = s + a[i * n + l].clone() * acc[l * n + j].clone();
                }
                next[i * n + j] = s;
            }
        }
        for i in 0..n {
            next[i * n + i] = next[i * n + i].clone() + coeffs[n - k + 1].clone();
        }
        acc = next;
        let mut trace = EisensteinRational::zero();
        for i in 0..n {
            for l in 0..n {
                if a[i * n + l].is_zero() || acc[l * n + i].is_zero() {
                    continue;
                }
                trace = trace + a[i * n + l].clone() * acc[l * n + i].clone();
            }
        }
        coeffs[n - k] = -trace.div_int(&BigInt::from(k));
    }
    IntPolynomial::new(
        coeffs
            .into_iter()
            .map(|c| {
                c.to_integer()
                    .unwrap_or_else(|| panic!("non-integer characteristic coefficient {c}"))
            })
            .collect(),
    )
}

/// `det(M)`, exactly.
pub fn determinant_exact(m: &HermitianMatrixExact) -> BigInt {
    let c0 = char_poly_exact(m).coeff(0);
    if m.dim().is_multiple_of(2) {
        c0
    } else {
        -c0
    }
}

/// `det(M) = 0`, decided on the constant term of the characteristic
/// polynomial.
pub fn is_singular_exact(m: &HermitianMatrixExact) -> bool {
    char_poly_exact(m).coeff(0).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::Eisenstein;
    use crate::graph::MixedGraph;
    use crate::matrices::{hermitian_adjacency, signless_laplacian};

    #[test]
    fn digon_polynomials() {
        let d = MixedGraph::new(2, [(0, 1)], []).unwrap();
        assert_eq!(char_poly_exact(&hermitian_adjacency(&d)), IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly_exact(&signless_laplacian(&d)), IntPolynomial::from_i64(&[0, -2, 1]));
    }

    #[test]
    fn directed_triangle_polynomial() {
        let t = MixedGraph::new(3, [], [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(char_poly_exact(&hermitian_adjacency(&t)), IntPolynomial::from_i64(&[-2, -3, 0, 1]));
    }

    #[test]
    fn brute_force_determinant_agrees() {
        // cofactor expansion over Z[ω] as an independent route
        fn det(m: &[Eisenstein], n: usize) -> Eisenstein {
            if n == 0 {
                return Eisenstein::one();
            }
            let mut total = Eisenstein::zero();
            for j in 0..n {
                let minor: Vec<Eisenstein> = (1..n)
                    .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
                    .map(|(i, c)| m[i * n + c])
                    .collect();
                let term = m[j] * det(&minor, n - 1);
                total = if j % 2 == 0 { total + term } else { total - term };
            }
            total
        }
        for seed in 0..30 {
            let x = crate::graph::random_mixed_graph(5, 0.3, 0.4, seed).unwrap();
            for m in [signless_laplacian(&x), hermitian_adjacency(&x)] {
                let brute = det(m.entries(), m.dim());
                assert_eq!(brute.b, 0);
                assert_eq!(determinant_exact(&m), BigInt::from(brute.a));
            }
        }
    }

    #[test]
    fn singularity_examples() {
        let d = MixedGraph::new(2, [(0, 1)], []).unwrap();
        assert!(is_singular_exact(&signless_laplacian(&d)));
        let k3 = MixedGraph::new(3, [(0, 1), (1, 2), (0, 2)], []).unwrap();
        assert!(!is_singular_exact(&signless_laplacian(&k3)));
        assert_eq!(determinant_exact(&signless_laplacian(&k3)), BigInt::from(4));
        let c4 = MixedGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)], []).unwrap();
        assert!(is_singular_exact(&signless_laplacian(&c4)));
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = IntPolynomial::from_i64(&[0, -2, 1]);
        // p(λ+2) = (λ+2)² - 2(λ+2) = λ² + 2λ
        assert_eq!(p.shift(2), IntPolynomial::from_i64(&[0, 2, 1]));
        assert_eq!(IntPolynomial::linear(2).pow(2), IntPolynomial::from_i64(&[4, 4, 1]));
        assert_eq!(IntPolynomial::linear(2).pow(0), IntPolynomial::one());
        assert_eq!(p.derivative(), IntPolynomial::from_i64(&[-2, 2]));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(IntPolynomial::new(vec![]).degree(), None);
        assert!((p.eval_f64(3.0) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[0, -2, 1]).to_string(), "λ^2 - 2λ");
        assert_eq!(IntPolynomial::from_i64(&[-2, -3, 0, 1]).to_string(), "λ^3 - 3λ - 2");
        assert_eq!(IntPolynomial::from_i64(&[1]).to_string(), "1");
        assert_eq!(IntPolynomial::from_i64(&[0, 0, -1]).to_string(), "-λ^2");
        assert_eq!(IntPolynomial::new(vec![]).to_string(), "0");
    }

    #[test]
    fn empty_matrix_has_unit_polynomial() {
        assert_eq!(char_poly_exact(&HermitianMatrixExact::zero(0)), IntPolynomial::one());
    }
}
