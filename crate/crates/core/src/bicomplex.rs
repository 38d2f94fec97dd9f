//! Bicomplex and hyperbolic numbers.
//!
//! A bicomplex number `Z = z1 + j z2` with `z1, z2 ∈ ℂ(i)`, `ij = ji`, `j² = -1`
//! is stored through its idempotent components `Z = α e₊ + β e₋`, where
//! `e± = (1 ± ij)/2`, `α = z1 - i z2` and `β = z1 + i z2`. In these coordinates the
//! ring operations act componentwise, so every routine that needs to multiply,
//! invert or conjugate works on two independent complex numbers.
//!
//! The arithmetic is generic over `T: Clone + Num`, which admits exact scalars
//! such as `num_rational::Ratio<i64>`. Modulus, inversion with a tolerance and
//! positivity tests need a floating point [`Real`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{Num, One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{abs2, Real};

/// Relative threshold below which an idempotent component counts as zero.
pub const ZERO_DIVISOR_TOL: f64 = 1e-12;
/// Relative tolerance of [`Bicomplex::is_hyperbolic_positive`].
pub const POSITIVITY_TOL: f64 = 1e-10;

#[inline]
fn times_i<T: Clone + Num + Neg<Output = T>>(z: Complex<T>) -> Complex<T> {
    Complex::new(-z.im, z.re)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Bicomplex<T> {
    alpha: Complex<T>,
    beta: Complex<T>,
}

impl<T: Clone + Num + Neg<Output = T>> Bicomplex<T> {
    /// Builds `z1 + j z2` from its cartesian coefficients.
    pub fn new(z1: Complex<T>, z2: Complex<T>) -> Self {
        let iz2 = times_i(z2);
        Self {
            alpha: z1.clone() - iz2.clone(),
            beta: z1 + iz2,
        }
    }

    /// Builds `α e₊ + β e₋`.
    pub fn from_idempotent(alpha: Complex<T>, beta: Complex<T>) -> Self {
        Self { alpha, beta }
    }

    pub fn from_real(x: T) -> Self {
        let z = Complex::new(x, T::zero());
        Self::from_idempotent(z.clone(), z)
    }

    pub fn from_complex(z: Complex<T>) -> Self {
        Self::from_idempotent(z.clone(), z)
    }

    /// The idempotent `e₊ = (1 + ij)/2`.
    pub fn e_plus() -> Self {
        Self::from_idempotent(Complex::one(), Complex::zero())
    }

    /// The idempotent `e₋ = (1 - ij)/2`.
    pub fn e_minus() -> Self {
        Self::from_idempotent(Complex::zero(), Complex::one())
    }

    /// The imaginary unit `i` of the coefficient field.
    pub fn i() -> Self {
        Self::from_complex(Complex::i())
    }

    /// The second imaginary unit `j`.
    pub fn j() -> Self {
        Self::new(Complex::zero(), Complex::one())
    }

    /// The hyperbolic unit `ij = e₊ - e₋`.
    pub fn ij() -> Self {
        Self::from_idempotent(Complex::one(), -Complex::<T>::one())
    }

    #[inline]
    pub fn alpha(&self) -> Complex<T> {
        self.alpha.clone()
    }

    #[inline]
    pub fn beta(&self) -> Complex<T> {
        self.beta.clone()
    }

    /// `(α, β)` with `Z = α e₊ + β e₋`.
    #[inline]
    pub fn idempotent_split(&self) -> (Complex<T>, Complex<T>) {
        (self.alpha.clone(), self.beta.clone())
    }

    fn two() -> T {
        T::one() + T::one()
    }

    /// Coefficient of `1`: `z1 = (α + β)/2`.
    pub fn z1(&self) -> Complex<T> {
        (self.alpha.clone() + self.beta.clone()) / Self::two()
    }

    /// Coefficient of `j`: `z2 = i(α - β)/2`.
    pub fn z2(&self) -> Complex<T> {
        times_i(self.alpha.clone() - self.beta.clone()) / Self::two()
    }

    /// `(z1, z2)` with `Z = z1 + j z2`.
    pub fn cartesian(&self) -> (Complex<T>, Complex<T>) {
        (self.z1(), self.z2())
    }

    /// Conjugation with respect to `j`: `Z† = z1 - j z2 = β e₊ + α e₋`.
    pub fn conj_dagger(&self) -> Self {
        Self::from_idempotent(self.beta.clone(), self.alpha.clone())
    }

    /// Conjugation with respect to `i`: `Z̃ = z̄1 + j z̄2 = β̄ e₊ + ᾱ e₋`.
    pub fn conj_tilde(&self) -> Self {
        Self::from_idempotent(self.beta.conj(), self.alpha.conj())
    }

    /// Conjugation with respect to `ij`: `Z* = z̄1 - j z̄2 = ᾱ e₊ + β̄ e₋`.
    pub fn conj_star(&self) -> Self {
        Self::from_idempotent(self.alpha.conj(), self.beta.conj())
    }

    /// Scales both idempotent components by the complex number `c`.
    pub fn scale(&self, c: Complex<T>) -> Self {
        Self::from_idempotent(self.alpha.clone() * c.clone(), self.beta.clone() * c)
    }

    /// Product computed from the cartesian coefficients with `i² = j² = -1`:
    /// `(z1 + j z2)(w1 + j w2) = (z1 w1 - z2 w2) + j (z1 w2 + z2 w1)`.
    pub fn mul_cartesian(&self, other: &Self) -> Self {
        let (z1, z2) = self.cartesian();
        let (w1, w2) = other.cartesian();
        Self::new(
            z1.clone() * w1.clone() - z2.clone() * w2.clone(),
            z1 * w2 + z2 * w1,
        )
    }
}

impl<T: Real> Bicomplex<T> {
    /// Euclidean modulus in ℝ⁴: `|Z|² = |z1|² + |z2|² = (|α|² + |β|²)/2`.
    pub fn modulus(&self) -> T {
        self.modulus_sqr().sqrt()
    }

    pub fn modulus_sqr(&self) -> T {
        (abs2(self.alpha) + abs2(self.beta)) * T::half()
    }

    /// Modulus evaluated from the cartesian coefficients.
    pub fn modulus_cartesian(&self) -> T {
        let (z1, z2) = self.cartesian();
        (abs2(z1) + abs2(z2)).sqrt()
    }

    /// True when `min(|α|, |β|) ≤ 1e-12·(1 + max(|α|, |β|))`.
    pub fn is_zero_divisor(&self) -> bool {
        let (a, b) = (self.alpha.norm(), self.beta.norm());
        a.min(b) <= T::tol(ZERO_DIVISOR_TOL) * (T::one() + a.max(b))
    }

    /// `Z⁻¹ = α⁻¹ e₊ + β⁻¹ e₋`, or [`Error::ZeroDivisor`].
    pub fn try_invert(&self) -> Result<Self> {
        if self.is_zero_divisor() {
            return Err(Error::ZeroDivisor {
                alpha_abs: self.alpha.norm().to_f64().unwrap_or(f64::NAN),
                beta_abs: self.beta.norm().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self::from_idempotent(self.alpha.inv(), self.beta.inv()))
    }

    /// Membership in `𝔻⁺ = ℝ⁺e₊ + ℝ⁺e₋`, up to a scale-relative tolerance.
    pub fn is_hyperbolic_positive(&self) -> bool {
        let tol = T::tol(POSITIVITY_TOL) * (T::one() + self.modulus());
        [self.alpha, self.beta]
            .iter()
            .all(|c| c.im.abs() <= tol && c.re >= -tol)
    }

    /// Hyperbolic number formed by the real parts of the idempotent components.
    pub fn hyperbolic_part(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.alpha.re, self.beta.re)
    }

    /// `modulus(self - other)`.
    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).modulus()
    }
}

impl<T: Clone + Num + Neg<Output = T>> Add for Bicomplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_idempotent(self.alpha + rhs.alpha, self.beta + rhs.beta)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Sub for Bicomplex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_idempotent(self.alpha - rhs.alpha, self.beta - rhs.beta)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Mul for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_idempotent(self.alpha * rhs.alpha, self.beta * rhs.beta)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Mul<Complex<T>> for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: Complex<T>) -> Self {
        self.scale(rhs)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for Bicomplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_idempotent(-self.alpha, -self.beta)
    }
}

impl<T: Clone + Num + Neg<Output = T>> AddAssign for Bicomplex<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.clone() + rhs;
    }
}

impl<T: Clone + Num + Neg<Output = T>> SubAssign for Bicomplex<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = self.clone() - rhs;
    }
}

impl<T: Clone + Num + Neg<Output = T>> MulAssign for Bicomplex<T> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.clone() * rhs;
    }
}

impl<T: Clone + Num + Neg<Output = T>> Zero for Bicomplex<T> {
    fn zero() -> Self {
        Self::from_idempotent(Complex::zero(), Complex::zero())
    }
    fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }
}

impl<T: Clone + Num + Neg<Output = T>> One for Bicomplex<T> {
    fn one() -> Self {
        Self::from_idempotent(Complex::one(), Complex::one())
    }
}

impl<T: Clone + Num + Neg<Output = T>> Sum for Bicomplex<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, z| acc + z)
    }
}

impl<T: fmt::Debug> fmt::Debug for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})e+ + ({:?})e-", self.alpha, self.beta)
    }
}

impl<T: Clone + Num + Neg<Output = T> + PartialOrd + fmt::Display> fmt::Display for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (z1, z2) = self.cartesian();
        write!(f, "({}) + j({})", z1, z2)
    }
}

// JSON form: [re(z1), im(z1), re(z2), im(z2)].
impl<T> Serialize for Bicomplex<T>
where
    T: Clone + Num + Neg<Output = T> + Serialize,
{
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (z1, z2) = self.cartesian();
        [z1.re, z1.im, z2.re, z2.im].serialize(serializer)
    }
}

impl<'de, T> Deserialize<'de> for Bicomplex<T>
where
    T: Clone + Num + Neg<Output = T> + Deserialize<'de>,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [a, b, c, d] = <[T; 4]>::deserialize(deserializer)?;
        Ok(Self::new(Complex::new(a, b), Complex::new(c, d)))
    }
}

/// Hyperbolic number `p e₊ + m e₋` with real `p`, `m`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Hyperbolic<T> {
    pub p: T,
    pub m: T,
}

impl<T> Hyperbolic<T> {
    pub const fn new(p: T, m: T) -> Self {
        Self { p, m }
    }
}

impl<T: Real> Hyperbolic<T> {
    /// Membership in `𝔻⁺`: both components nonnegative.
    pub fn is_positive(&self) -> bool {
        self.p >= T::zero() && self.m >= T::zero()
    }

    /// Both components strictly positive.
    pub fn is_strictly_positive(&self) -> bool {
        self.p > T::zero() && self.m > T::zero()
    }

    /// True when the number lies on the real axis, i.e. `p == m` up to `rel_tol`.
    pub fn is_real(&self, rel_tol: T) -> bool {
        (self.p - self.m).abs() <= rel_tol * self.p.abs().max(self.m.abs()).max(T::one())
    }

    pub fn to_bicomplex(self) -> Bicomplex<T> {
        Bicomplex::from_idempotent(Complex::new(self.p, T::zero()), Complex::new(self.m, T::zero()))
    }
}

/// Componentwise product, the ring structure of the hyperbolic numbers.
impl<T: Real> Mul for Hyperbolic<T> {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        Self::new(self.p * other.p, self.m * other.m)
    }
}

impl<T: Real> From<Hyperbolic<T>> for Bicomplex<T> {
    fn from(h: Hyperbolic<T>) -> Self {
        h.to_bicomplex()
    }
}
