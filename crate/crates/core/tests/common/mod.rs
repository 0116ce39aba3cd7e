//! Independent oracles and graph generators shared by the integration tests.

#![allow(dead_code)]

use mixed_spectra::{random_mixed_graph, Eisenstein, HermitianMatrixExact, IntPolynomial, MixedGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense polynomial over the rationals, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RatPoly(c)
    }

    fn from_int(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return (Self::new(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - d.0.len() + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + d.0.len() - 1] / d.lead();
            for (j, dj) in d.0.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        (Self::new(q), Self::new(r))
    }

    fn monic(&self) -> Self {
        let l = self.lead().clone();
        Self::new(self.0.iter().map(|c| c / &l).collect())
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.0.is_empty() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn sign_at(&self, x: f64) -> i32 {
        let x = BigRational::from_float(x).expect("finite evaluation point");
        let v = self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Yun's square-free decomposition: `(factor, multiplicity)` pairs.
fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = RatPoly::gcd(f, &df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = RatPoly::gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Roots of a square-free polynomial whose roots are all real: the roots of
/// its derivative split the line into monotone pieces, each bisected on exact
/// signs.
fn real_rooted_simple_roots(p: &RatPoly, bound: f64) -> Vec<f64> {
    if p.degree() == 0 {
        return vec![];
    }
    let mut cuts = vec![-bound];
    cuts.extend(real_rooted_simple_roots(&p.derivative(), bound));
    cuts.push(bound);
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (slo, shi) = (p.sign_at(lo), p.sign_at(hi));
        if slo == 0 {
            roots.push(lo);
            continue;
        }
        if shi == 0 || slo == shi {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match p.sign_at(mid) {
                0 => {
                    lo = mid;
                    hi = mid;
                    break;
                }
                s if s == slo => lo = mid,
                _ => hi = mid,
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots.dedup();
    roots
}

/// All roots of an integer polynomial known to be real-rooted, with
/// multiplicity, in descending order.
pub fn real_roots(p: &IntPolynomial) -> Vec<f64> {
    let f = RatPoly::from_int(p);
    if f.is_constant() {
        return vec![];
    }
    let lead = f.lead().abs();
    let bound = 1.0
        + f.0[..f.0.len() - 1]
            .iter()
            .map(|c| num_traits::ToPrimitive::to_f64(&(c.abs() / &lead)).unwrap())
            .fold(0.0, f64::max);
    let mut roots = Vec::new();
    for (factor, mult) in squarefree_decomposition(&f) {
        for r in real_rooted_simple_roots(&factor, bound) {
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    roots
}

/// Random Hermitian matrix over `Z[ω]` of dimension `n`: integer diagonal in
/// `[-3, 3]`, off-diagonal coordinates in `[-2, 2]`.
pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> HermitianMatrixExact {
    let mut entries = vec![Eisenstein::from_int(0); n * n];
    for i in 0..n {
        entries[i * n + i] = Eisenstein::from_int(rng.gen_range(-3..=3));
        for j in i + 1..n {
            let z = Eisenstein { a: rng.gen_range(-2..=2), b: rng.gen_range(-2..=2) };
            entries[i * n + j] = z;
            entries[j * n + i] = z.conj();
        }
    }
    HermitianMatrixExact::new(n, entries).expect("Hermitian by construction")
}

/// Deterministic campaign: graph `i` has `1 + i mod n_max` vertices and
/// digon/arc probabilities drawn from a generator seeded by `seed`.
pub fn campaign(count: usize, n_max: usize, seed: u64) -> Vec<MixedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 1 + i % n_max;
            let pd: f64 = rng.gen_range(0.0..0.6);
            let pa: f64 = rng.gen_range(0.0..(1.0 - pd).min(0.6));
            random_mixed_graph(n, pd, pa, rng.gen()).expect("valid parameters")
        })
        .collect()
}

/// Sorted-multiset distance between two equally long value lists.
pub fn multiset_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
