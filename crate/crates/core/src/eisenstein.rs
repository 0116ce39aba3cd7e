//! Exact arithmetic in the Eisenstein integers `Z[ω]` and their fraction field.
//!
//! Values are stored in the basis `{1, ω}` where `ω = e^{2πi/3}` satisfies
//! `ω² = -1 - ω`. The unit `ω` is the weight carried by an arc in the
//! Hermitian adjacency matrix, so every matrix built from a mixed graph has
//! entries in this ring.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

/// The number `a + bω`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Eisenstein<T = i64> {
    pub a: T,
    pub b: T,
}

impl<T> Eisenstein<T> {
    pub const fn new(a: T, b: T) -> Self {
        Eisenstein { a, b }
    }
}

impl<T: Clone + Num> Eisenstein<T> {
    pub fn from_int(a: T) -> Self {
        Eisenstein::new(a, T::zero())
    }

    pub fn omega() -> Self {
        Eisenstein::new(T::zero(), T::one())
    }

    /// `ω² = -1 - ω`.
    pub fn omega_squared() -> Self {
        Eisenstein::new(T::zero() - T::one(), T::zero() - T::one())
    }

    /// Complex conjugate: `conj(a + bω) = (a - b) - bω`.
    pub fn conj(&self) -> Self {
        Eisenstein::new(self.a.clone() - self.b.clone(), T::zero() - self.b.clone())
    }

    /// Field norm `a² - ab + b²`, which equals `|x|²`.
    pub fn norm(&self) -> T {
        let (a, b) = (self.a.clone(), self.b.clone());
        a.clone() * a.clone() - a * b.clone() + b.clone() * b
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }
}

impl<T: Clone + Num + ToPrimitive> Eisenstein<T> {
    /// Embeds the value in the complex plane as `a + b(-1/2 + i√3/2)`.
    pub fn to_complex(&self) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        Complex64::new(a - 0.5 * b, HALF_SQRT3 * b)
    }
}

impl Eisenstein<i64> {
    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        Some(Eisenstein::new(self.a.checked_add(rhs.a)?, self.b.checked_add(rhs.b)?))
    }

    /// `(a+bω)(c+dω) = (ac - bd) + (ad + bc - bd)ω`, or `None` on overflow.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let ac = self.a.checked_mul(rhs.a)?;
        let bd = self.b.checked_mul(rhs.b)?;
        let ad = self.a.checked_mul(rhs.b)?;
        let bc = self.b.checked_mul(rhs.a)?;
        Some(Eisenstein::new(
            ac.checked_sub(bd)?,
            ad.checked_add(bc)?.checked_sub(bd)?,
        ))
    }

    pub fn to_big(self) -> Eisenstein<BigInt> {
        Eisenstein::new(BigInt::from(self.a), BigInt::from(self.b))
    }
}

impl<T: Clone + Num> Add for Eisenstein<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Eisenstein::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Clone + Num> Sub for Eisenstein<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Eisenstein::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Clone + Num> Neg for Eisenstein<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Eisenstein::new(T::zero() - self.a, T::zero() - self.b)
    }
}

impl<T: Clone + Num> Mul for Eisenstein<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let bd = self.b.clone() * rhs.b.clone();
        Eisenstein::new(
            self.a.clone() * rhs.a.clone() - bd.clone(),
            self.a * rhs.b + self.b * rhs.a - bd,
        )
    }
}

impl<T: Clone + Num> AddAssign for Eisenstein<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.clone() + rhs;
    }
}

impl<T: Clone + Num> SubAssign for Eisenstein<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = self.clone() - rhs;
    }
}

impl<T: Clone + Num> Zero for Eisenstein<T> {
    fn zero() -> Self {
        Eisenstein::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Clone + Num> One for Eisenstein<T> {
    fn one() -> Self {
        Eisenstein::new(T::one(), T::zero())
    }
}

impl<T: Clone + Num + Signed + fmt::Display> fmt::Display for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (&self.a, &self.b);
        if b.is_zero() {
            return write!(f, "{a}");
        }
        let coeff = |f: &mut fmt::Formatter<'_>, v: &T| {
            if v.abs().is_one() {
                Ok(())
            } else {
                write!(f, "{}", v.abs())
            }
        };
        if a.is_zero() {
            if b.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{a}{}", if b.is_negative() { "-" } else { "+" })?;
        }
        coeff(f, b)?;
        write!(f, "ω")
    }
}

/// A power of `ω`, i.e. one of the three cube roots of unity.
///
/// These are the only values a gauge may take and the only nonzero values an
/// adjacency or incidence entry may take.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OmegaPower(u8);

impl OmegaPower {
    pub const ONE: OmegaPower = OmegaPower(0);
    pub const OMEGA: OmegaPower = OmegaPower(1);
    pub const OMEGA_SQUARED: OmegaPower = OmegaPower(2);

    /// `ω^exponent`, with the exponent read mod 3.
    pub fn new(exponent: u32) -> Self {
        OmegaPower((exponent % 3) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Self {
        OmegaPower((3 - self.0) % 3)
    }

    pub fn to_eisenstein(self) -> Eisenstein {
        match self.0 {
            0 => Eisenstein::one(),
            1 => Eisenstein::omega(),
            _ => Eisenstein::omega_squared(),
        }
    }

    /// Recognises `1`, `ω` and `ω²`; anything else is not a unit of this form.
    pub fn from_eisenstein(x: &Eisenstein) -> Option<Self> {
        match (x.a, x.b) {
            (1, 0) => Some(OmegaPower(0)),
            (0, 1) => Some(OmegaPower(1)),
            (-1, -1) => Some(OmegaPower(2)),
            _ => None,
        }
    }
}

impl Mul for OmegaPower {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        OmegaPower((self.0 + rhs.0) % 3)
    }
}

/// An element of `Q(ω)` written as `numerator / denominator` with a shared
/// positive integer denominator, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinRational {
    numerator: Eisenstein<BigInt>,
    denominator: BigInt,
}

impl EisensteinRational {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: Eisenstein<BigInt>, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let mut r = EisensteinRational { numerator, denominator };
        r.reduce();
        r
    }

    pub fn from_eisenstein(x: Eisenstein<BigInt>) -> Self {
        EisensteinRational { numerator: x, denominator: BigInt::one() }
    }

    pub fn numerator(&self) -> &Eisenstein<BigInt> {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    fn reduce(&mut self) {
        if self.denominator.is_negative() {
            self.denominator = -self.denominator.clone();
            self.numerator = -self.numerator.clone();
        }
        if self.denominator.is_one() {
            return;
        }
        let g = self
            .numerator
            .a
            .gcd(&self.numerator.b)
            .gcd(&self.denominator);
        if !g.is_one() && !g.is_zero() {
            self.numerator.a /= &g;
            self.numerator.b /= &g;
            self.denominator /= &g;
        }
    }

    pub fn conj(&self) -> Self {
        EisensteinRational {
            numerator: self.numerator.conj(),
            denominator: self.denominator.clone(),
        }
    }

    /// Divides by a nonzero rational integer.
    pub fn div_int(&self, k: &BigInt) -> Self {
        EisensteinRational::new(self.numerator.clone(), &self.denominator * k)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.numerator.is_zero() {
            return None;
        }
        // 1/x = conj(x) / |x|²
        let norm = self.numerator.norm();
        let scaled = Eisenstein::new(
            self.numerator.conj().a * &self.denominator,
            self.numerator.conj().b * &self.denominator,
        );
        Some(EisensteinRational::new(scaled, norm))
    }

    /// The value as a rational integer when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.denominator.is_one() && self.numerator.b.is_zero()).then(|| self.numerator.a.clone())
    }
}

impl Add for EisensteinRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.denominator == rhs.denominator {
            return EisensteinRational::new(self.numerator + rhs.numerator, self.denominator);
        }
        let scale = |x: Eisenstein<BigInt>, k: &BigInt| Eisenstein::new(x.a * k, x.b * k);
        let num = scale(self.numerator, &rhs.denominator) + scale(rhs.numerator, &self.denominator);
        EisensteinRational::new(num, self.denominator * rhs.denominator)
    }
}

impl Neg for EisensteinRational {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinRational { numerator: -self.numerator, denominator: self.denominator }
    }
}

impl Sub for EisensteinRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for EisensteinRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        EisensteinRational::new(self.numerator * rhs.numerator, self.denominator * rhs.denominator)
    }
}

impl Zero for EisensteinRational {
    fn zero() -> Self {
        EisensteinRational::from_eisenstein(Eisenstein::zero())
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl One for EisensteinRational {
    fn one() -> Self {
        EisensteinRational::from_eisenstein(Eisenstein::one())
    }
}

impl From<Eisenstein> for EisensteinRational {
    fn from(x: Eisenstein) -> Self {
        EisensteinRational::from_eisenstein(x.to_big())
    }
}

impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/{}", self.numerator, self.denominator)
        }
    }
}
