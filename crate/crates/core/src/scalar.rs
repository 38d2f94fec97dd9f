//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssignOps};

/// Real floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + NumAssignOps + Sum + Default + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal. Panics only for types that cannot hold finite `f64` values.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from(v).expect("f64 literal must be representable")
    }

    #[inline]
    fn from_usize(v: usize) -> Self {
        Self::from(v).expect("usize must be representable")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    /// Relative tolerance that is never tighter than a few ulps of the type.
    #[inline]
    fn tol(requested: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(16.0);
        Self::lit(requested).max(floor)
    }
}

impl<T> Real for T where
    T: Float + FloatConst + NumAssignOps + Sum + Default + Debug + Display + Send + Sync + 'static
{
}

/// `|z|²` without the square root.
#[inline]
pub fn abs2<T: Real>(z: Complex<T>) -> T {
    z.re * z.re + z.im * z.im
}

/// Standard Hermitian product on ℂ^d, linear in the first argument.
pub fn cdot<T: Real>(x: &[Complex<T>], y: &[Complex<T>]) -> Complex<T> {
    debug_assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a * b.conj())
}

/// Squared Euclidean norm on ℂ^d.
pub fn cnorm2<T: Real>(x: &[Complex<T>]) -> T {
    x.iter().map(|z| abs2(*z)).sum()
}
