//! Finite-dimensional bicomplex Hilbert modules `ℂ^d e₊ ⊕ ℂ^d e₋`.
//!
//! A [`BcVector`] stores its idempotent components `f⁺, f⁻ ∈ ℂ^d`. The bicomplex inner
//! product is `⟨f, g⟩ = ⟨f⁺, g⁺⟩ e₊ + ⟨f⁻, g⁻⟩ e₋`, linear in the first entry, and the
//! induced norm is `‖f‖² = (‖f⁺‖² + ‖f⁻‖²)/2`.

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::scalar::{cdot, cnorm2, Real};

/// Tolerance used by [`schwarz_check`].
pub const SCHWARZ_SLACK: f64 = 1e-12;

/// Which idempotent component of a bicomplex object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Plus,
    Minus,
}

impl Component {
    pub const BOTH: [Component; 2] = [Component::Plus, Component::Minus];
}

#[derive(Clone, Debug, PartialEq)]
pub struct BcVector<T> {
    plus: Vec<Complex<T>>,
    minus: Vec<Complex<T>>,
}

impl<T: Real> BcVector<T> {
    pub fn new(plus: Vec<Complex<T>>, minus: Vec<Complex<T>>) -> Result<Self> {
        if plus.is_empty() {
            return Err(Error::InvalidInput("bicomplex vectors need dimension ≥ 1".into()));
        }
        if plus.len() != minus.len() {
            return Err(Error::DimensionMismatch {
                expected: plus.len(),
                found: minus.len(),
            });
        }
        Ok(Self { plus, minus })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            plus: vec![Complex::zero(); dim],
            minus: vec![Complex::zero(); dim],
        }
    }

    /// Builds the vector whose coordinates are the given bicomplex numbers.
    pub fn from_coords(coords: &[Bicomplex<T>]) -> Result<Self> {
        Self::new(
            coords.iter().map(Bicomplex::alpha).collect(),
            coords.iter().map(Bicomplex::beta).collect(),
        )
    }

    /// Same complex vector in both components: the embedding `h ↦ h e₊ + h e₋ = h`.
    pub fn embed(v: Vec<Complex<T>>) -> Result<Self> {
        Self::new(v.clone(), v)
    }

    /// Standard basis vector `e_k` embedded in both components.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.plus[k] = Complex::new(T::one(), T::zero());
        v.minus[k] = Complex::new(T::one(), T::zero());
        v
    }

    /// Entries uniform in the unit square of ℂ for both components.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Self {
        let mut draw = || -> Vec<Complex<T>> {
            (0..dim)
                .map(|_| Complex::new(T::lit(rng.gen_range(-1.0..1.0)), T::lit(rng.gen_range(-1.0..1.0))))
                .collect()
        };
        let plus = draw();
        let minus = draw();
        Self { plus, minus }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.plus.len()
    }

    #[inline]
    pub fn plus(&self) -> &[Complex<T>] {
        &self.plus
    }

    #[inline]
    pub fn minus(&self) -> &[Complex<T>] {
        &self.minus
    }

    pub fn component(&self, c: Component) -> &[Complex<T>] {
        match c {
            Component::Plus => &self.plus,
            Component::Minus => &self.minus,
        }
    }

    pub fn into_components(self) -> (Vec<Complex<T>>, Vec<Complex<T>>) {
        (self.plus, self.minus)
    }

    /// Coordinate `k` as a bicomplex number.
    pub fn coord(&self, k: usize) -> Bicomplex<T> {
        Bicomplex::from_idempotent(self.plus[k], self.minus[k])
    }

    pub fn coords(&self) -> Vec<Bicomplex<T>> {
        (0..self.dim()).map(|k| self.coord(k)).collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// `⟨self, other⟩ = ⟨f⁺, g⁺⟩ e₊ + ⟨f⁻, g⁻⟩ e₋`.
    pub fn inner(&self, other: &Self) -> Result<Bicomplex<T>> {
        self.check_dim(other)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Self) -> Bicomplex<T> {
        Bicomplex::from_idempotent(cdot(&self.plus, &other.plus), cdot(&self.minus, &other.minus))
    }

    /// Inner product summed coordinatewise as `Σ_k f_k g_k*` in bicomplex arithmetic.
    pub fn inner_coordinatewise(&self, other: &Self) -> Result<Bicomplex<T>> {
        self.check_dim(other)?;
        Ok((0..self.dim()).map(|k| self.coord(k) * other.coord(k).conj_star()).sum())
    }

    pub fn norm_sqr(&self) -> T {
        (cnorm2(&self.plus) + cnorm2(&self.minus)) * T::half()
    }

    /// `‖f‖ = sqrt((‖f⁺‖² + ‖f⁻‖²)/2)`.
    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// `‖f‖²` computed as `Σ_k |f_k|²` with the ℝ⁴ modulus of each cartesian coordinate.
    pub fn norm_sqr_cartesian(&self) -> T {
        (0..self.dim())
            .map(|k| {
                let (z1, z2) = self.coord(k).cartesian();
                z1.norm_sqr() + z2.norm_sqr()
            })
            .sum()
    }

    /// Multiplication by a bicomplex scalar: `(λf)± = λ± f±`.
    pub fn scale(&self, lambda: Bicomplex<T>) -> Self {
        let (a, b) = lambda.idempotent_split();
        Self {
            plus: self.plus.iter().map(|z| z * a).collect(),
            minus: self.minus.iter().map(|z| z * b).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// `self += lambda * other`.
    pub fn axpy(&mut self, lambda: Bicomplex<T>, other: &Self) {
        let (a, b) = lambda.idempotent_split();
        for (x, y) in self.plus.iter_mut().zip(&other.plus) {
            *x += a * y;
        }
        for (x, y) in self.minus.iter_mut().zip(&other.minus) {
            *x += b * y;
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Self {
        Self {
            plus: self.plus.iter().zip(&other.plus).map(|(a, b)| f(*a, *b)).collect(),
            minus: self.minus.iter().zip(&other.minus).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    /// Largest coordinate distance measured with the bc norm of the difference.
    pub fn distance(&self, other: &Self) -> Result<T> {
        Ok(self.sub(other)?.norm())
    }

    /// Applies a ℂ-linear map to each component separately.
    pub fn map_components(
        &self,
        f_plus: impl Fn(&[Complex<T>]) -> Vec<Complex<T>>,
        f_minus: impl Fn(&[Complex<T>]) -> Vec<Complex<T>>,
    ) -> Self {
        Self {
            plus: f_plus(&self.plus),
            minus: f_minus(&self.minus),
        }
    }
}

/// Result of the generalized Schwarz inequality `|⟨f,g⟩| ≤ √2 ‖f‖ ‖g‖`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SchwarzCheck<T> {
    pub lhs: T,
    pub rhs: T,
    pub holds: bool,
}

pub fn schwarz_check<T: Real>(f: &BcVector<T>, g: &BcVector<T>) -> Result<SchwarzCheck<T>> {
    let lhs = f.inner(g)?.modulus();
    let rhs = T::SQRT_2() * f.norm() * g.norm();
    Ok(SchwarzCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + T::tol(SCHWARZ_SLACK),
    })
}

#[derive(Serialize, Deserialize)]
struct BcVectorRepr<T> {
    plus: Vec<[T; 2]>,
    minus: Vec<[T; 2]>,
}

impl<T: Real + Serialize> Serialize for BcVector<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs = |v: &[Complex<T>]| v.iter().map(|z| [z.re, z.im]).collect();
        BcVectorRepr {
            plus: pairs(&self.plus),
            minus: pairs(&self.minus),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for BcVector<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = BcVectorRepr::<T>::deserialize(deserializer)?;
        let unpair = |v: Vec<[T; 2]>| v.into_iter().map(|[re, im]| Complex::new(re, im)).collect();
        BcVector::new(unpair(repr.plus), unpair(repr.minus)).map_err(serde::de::Error::custom)
    }
}
