//! Classification of finite bicomplex frame families.
//!
//! A family `(f_n)` in `ℂ^d e₊ ⊕ ℂ^d e₋` is a bc-frame when
//! `A‖f‖² ≤ Σ_n |⟨f, f_n⟩|² ≤ B‖f‖²` for every `f`. Since
//! `|⟨f, f_n⟩|² = ½(|⟨f⁺, f_n⁺⟩|² + |⟨f⁻, f_n⁻⟩|²)` and `‖f‖² = ½(‖f⁺‖² + ‖f⁻‖²)`, this
//! holds exactly when both component families are frames of `ℂ^d`, with optimal bounds
//! `A = min(a⁺, a⁻)` and `B = max(b⁺, b⁻)`. The component bounds are the extreme
//! eigenvalues of the `d×d` frame operators `S± = Σ f_n± (f_n±)ᴴ`.
//!
//! [`FrameFamily::direct_bounds`] computes `A` and `B` a second way, straight from the
//! definition: it polarizes `f ↦ Σ |⟨f, f_n⟩|²` with bicomplex arithmetic into a
//! `2d×2d` Hermitian form and takes its extreme eigenvalues. The deletion oracle behind
//! [`FrameFamily::n_exact`] uses that route, while
//! [`FrameFamily::n_exact_by_components`] intersects the component sets.

use std::collections::BTreeSet;

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::hilbert::{BcVector, Component};
use crate::linalg::{CMatrix, HermitianEigen};
use crate::scalar::{abs2, cdot, cnorm2, Real};

/// A component is a frame when `a > FRAME_TOL·max(b, 1)`.
pub const FRAME_TOL: f64 = 1e-10;
/// Relative tolerance for `A ≈ B` and `A ≈ 1`.
pub const TIGHT_TOL: f64 = 1e-9;
/// Gram matrices count as nonsingular when `λ_min > RIESZ_TOL·λ_max`.
pub const RIESZ_TOL: f64 = 1e-10;
/// Relative slack for the sampled frame inequality.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Rank decision shared by frame-, completeness- and invertibility tests.
pub fn spans<T: Real>(lower: T, upper: T) -> bool {
    lower > T::tol(FRAME_TOL) * upper.max(T::one())
}

/// Optimal frame bounds of a family in `ℂ^d`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentBounds<T> {
    pub lower: T,
    pub upper: T,
    pub eigenvalues: Vec<T>,
}

impl<T: Real> ComponentBounds<T> {
    fn from_eigen(e: &HermitianEigen<T>) -> Self {
        // Frame operators are PSD; clamp rounding noise at zero.
        let eigenvalues: Vec<T> = e.values.iter().map(|&l| l.max(T::zero())).collect();
        Self {
            lower: eigenvalues.first().copied().unwrap_or_else(T::zero),
            upper: eigenvalues.last().copied().unwrap_or_else(T::zero),
            eigenvalues,
        }
    }

    pub fn is_frame(&self) -> bool {
        spans(self.lower, self.upper)
    }

    pub fn is_tight(&self) -> bool {
        self.is_frame() && (self.upper - self.lower) <= T::tol(TIGHT_TOL) * self.upper
    }
}

/// Smallest and largest eigenvalue of `Σ v vᴴ`.
pub fn component_bounds<'a, T, I>(dim: usize, vectors: I) -> ComponentBounds<T>
where
    T: Real,
    I: IntoIterator<Item = &'a [Complex<T>]>,
{
    ComponentBounds::from_eigen(&CMatrix::outer_sum(dim, vectors).hermitian_eigen())
}

/// Finite family of bicomplex vectors with cached component frame operators.
#[derive(Clone, Debug)]
pub struct FrameFamily<T> {
    dim: usize,
    vectors: Vec<BcVector<T>>,
    s_plus: CMatrix<T>,
    s_minus: CMatrix<T>,
    eig_plus: HermitianEigen<T>,
    eig_minus: HermitianEigen<T>,
}

impl<T: Real> FrameFamily<T> {
    pub fn new(vectors: Vec<BcVector<T>>) -> Result<Self> {
        let dim = vectors.first().ok_or(Error::EmptySequence("frame family"))?.dim();
        if let Some(bad) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        let s_plus = CMatrix::outer_sum(dim, vectors.iter().map(BcVector::plus));
        let s_minus = CMatrix::outer_sum(dim, vectors.iter().map(BcVector::minus));
        let eig_plus = s_plus.hermitian_eigen();
        let eig_minus = s_minus.hermitian_eigen();
        Ok(Self {
            dim,
            vectors,
            s_plus,
            s_minus,
            eig_plus,
            eig_minus,
        })
    }

    /// Pairs `plus[n]` with `minus[n]`.
    pub fn from_components(plus: Vec<Vec<Complex<T>>>, minus: Vec<Vec<Complex<T>>>) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::LengthMismatch {
                expected: plus.len(),
                found: minus.len(),
            });
        }
        let vectors = plus
            .into_iter()
            .zip(minus)
            .map(|(p, m)| BcVector::new(p, m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vectors)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[BcVector<T>] {
        &self.vectors
    }

    pub fn vector(&self, k: usize) -> &BcVector<T> {
        &self.vectors[k]
    }

    pub fn component_vectors(&self, c: Component) -> Vec<&[Complex<T>]> {
        self.vectors.iter().map(|v| v.component(c)).collect()
    }

    /// `S± = Σ f_n± (f_n±)ᴴ`.
    pub fn frame_matrix(&self, c: Component) -> &CMatrix<T> {
        match c {
            Component::Plus => &self.s_plus,
            Component::Minus => &self.s_minus,
        }
    }

    pub fn eigen(&self, c: Component) -> &HermitianEigen<T> {
        match c {
            Component::Plus => &self.eig_plus,
            Component::Minus => &self.eig_minus,
        }
    }

    pub fn bounds(&self, c: Component) -> ComponentBounds<T> {
        ComponentBounds::from_eigen(self.eigen(c))
    }

    pub fn is_frame(&self) -> bool {
        Component::BOTH.iter().all(|&c| self.bounds(c).is_frame())
    }

    /// Family with element `k` removed, or `None` if that leaves it empty.
    pub fn without(&self, k: usize) -> Option<Self> {
        if self.len() <= 1 {
            return None;
        }
        let vectors = self
            .vectors
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, v)| v.clone())
            .collect();
        Self::new(vectors).ok()
    }

    fn check_dim(&self, f: &BcVector<T>) -> Result<()> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: f.dim(),
            });
        }
        Ok(())
    }

    /// `Σ_n |⟨f, f_n⟩|²` with the bicomplex modulus.
    pub fn frame_sum(&self, f: &BcVector<T>) -> Result<T> {
        self.check_dim(f)?;
        Ok(self.frame_sum_unchecked(f))
    }

    fn frame_sum_unchecked(&self, f: &BcVector<T>) -> T {
        self.vectors.iter().map(|v| f.inner_unchecked(v).modulus_sqr()).sum()
    }

    /// Samples the bc-frame inequality at `f`.
    pub fn frame_inequality_sample(&self, f: &BcVector<T>) -> Result<FrameInequality<T>> {
        self.check_dim(f)?;
        let sum = self.frame_sum_unchecked(f);
        let component_sum = self
            .vectors
            .iter()
            .map(|v| abs2(cdot(f.plus(), v.plus())) + abs2(cdot(f.minus(), v.minus())))
            .sum::<T>()
            * T::half();
        let (a, b) = (
            self.bounds(Component::Plus).lower.min(self.bounds(Component::Minus).lower),
            self.bounds(Component::Plus).upper.max(self.bounds(Component::Minus).upper),
        );
        let n2 = f.norm_sqr();
        let lower = a * n2;
        let upper = b * n2;
        let eps = T::tol(INEQUALITY_SLACK) * upper;
        Ok(FrameInequality {
            sum,
            component_sum,
            lower,
            upper,
            holds: lower - eps <= sum && sum <= upper + eps,
        })
    }

    /// Hermitian matrix `H` on `ℂ^{2d}` with `vᴴ H v = Σ_n |⟨f, f_n⟩|²`, `v = (f⁺, f⁻)`,
    /// assembled by polarization `xᴴHy = ¼ Σ_k i^{-k} q(x + i^k y)` of the bicomplex sum.
    pub fn quadratic_form_matrix(&self) -> CMatrix<T> {
        let d = self.dim;
        let unit = |k: usize, s: Complex<T>| -> BcVector<T> {
            let mut plus = vec![Complex::zero(); d];
            let mut minus = vec![Complex::zero(); d];
            if k < d {
                plus[k] = s;
            } else {
                minus[k - d] = s;
            }
            BcVector::new(plus, minus).expect("d ≥ 1")
        };
        let one = Complex::new(T::one(), T::zero());
        let powers = [
            Complex::new(T::one(), T::zero()),
            Complex::new(T::zero(), T::one()),
            Complex::new(-T::one(), T::zero()),
            Complex::new(T::zero(), -T::one()),
        ];
        let q = |v: &BcVector<T>| self.frame_sum_unchecked(v);
        let mut h = CMatrix::zeros(2 * d);
        for i in 0..2 * d {
            h[(i, i)] = Complex::new(q(&unit(i, one)), T::zero());
            for j in i + 1..2 * d {
                let x = unit(i, one);
                let mut acc = Complex::zero();
                for (k, p) in powers.iter().enumerate() {
                    let v = x.add(&unit(j, *p)).expect("same dimension");
                    acc += powers[(4 - k) % 4] * q(&v);
                }
                h[(i, j)] = acc * T::lit(0.25);
                h[(j, i)] = h[(i, j)].conj();
            }
        }
        h
    }

    /// Optimal bc bounds from the definition: extreme eigenvalues of `2H` (the norm is
    /// `‖f‖² = ½ vᴴv`).
    pub fn direct_bounds(&self) -> ComponentBounds<T> {
        ComponentBounds::from_eigen(&self.quadratic_form_matrix().scaled(T::two()).hermitian_eigen())
    }

    /// Bicomplex deletion oracle: indices `k` such that `(f_n)_{n≠k}` is still a bc-frame,
    /// decided by [`Self::direct_bounds`].
    pub fn n_exact(&self) -> Result<Vec<usize>> {
        self.require_frame()?;
        Ok((0..self.len())
            .filter(|&k| self.without(k).is_some_and(|g| g.direct_bounds().is_frame()))
            .collect())
    }

    /// Removable indices of one component family, by rank-one downdates of `S±`.
    pub fn component_removable(&self, c: Component) -> Vec<usize> {
        let s = self.frame_matrix(c);
        (0..self.len())
            .filter(|&k| {
                let v = self.vectors[k].component(c);
                let downdated = s.sub(&CMatrix::outer_sum(self.dim, [v]));
                ComponentBounds::from_eigen(&downdated.hermitian_eigen()).is_frame()
            })
            .collect()
    }

    /// `N_Exact(f⁺) ∩ N_Exact(f⁻)`.
    pub fn n_exact_by_components(&self) -> Result<Vec<usize>> {
        self.require_frame()?;
        let plus: BTreeSet<usize> = self.component_removable(Component::Plus).into_iter().collect();
        let minus: BTreeSet<usize> = self.component_removable(Component::Minus).into_iter().collect();
        Ok(plus.intersection(&minus).copied().collect())
    }

    pub fn is_exact(&self) -> Result<bool> {
        Ok(self.n_exact()?.is_empty())
    }

    fn require_frame(&self) -> Result<()> {
        if self.is_frame() {
            Ok(())
        } else {
            Err(Error::NotAFrame {
                a_plus: self.bounds(Component::Plus).lower.to_f64().unwrap_or(f64::NAN),
                a_minus: self.bounds(Component::Minus).lower.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    /// Both component families span `ℂ^d`.
    pub fn is_complete(&self) -> bool {
        self.is_frame()
    }

    pub fn riesz_report(&self) -> RieszReport<T> {
        let square = self.len() == self.dim;
        let gram = |c: Component| -> ComponentBounds<T> {
            let vs = self.component_vectors(c);
            ComponentBounds::from_eigen(&CMatrix::gram(&vs).hermitian_eigen())
        };
        let (gp, gm) = (gram(Component::Plus), gram(Component::Minus));
        let nonsingular = |g: &ComponentBounds<T>| g.lower > T::tol(RIESZ_TOL) * g.upper;
        RieszReport {
            is_riesz: square && nonsingular(&gp) && nonsingular(&gm),
            lower: gp.lower.min(gm.lower),
            upper: gp.upper.max(gm.upper),
            gram_plus: gp,
            gram_minus: gm,
        }
    }

    pub fn is_riesz(&self) -> bool {
        self.riesz_report().is_riesz
    }

    /// Largest relative violation of `A'Σ|c_n|² ≤ ‖Σ c_n f_n‖² ≤ B'Σ|c_n|²` over random
    /// bicomplex coefficient vectors, using the Gram bounds of [`Self::riesz_report`].
    pub fn riesz_violation<R: Rng + ?Sized>(&self, rng: &mut R, trials: usize) -> T {
        let report = self.riesz_report();
        let mut worst = T::zero();
        for _ in 0..trials {
            let coeffs: Vec<Bicomplex<T>> = (0..self.len()).map(|_| random_bicomplex(rng)).collect();
            let mut combo = BcVector::zeros(self.dim);
            for (c, v) in coeffs.iter().zip(&self.vectors) {
                combo.axpy(*c, v);
            }
            let lhs = combo.norm_sqr();
            let mass: T = coeffs.iter().map(Bicomplex::modulus_sqr).sum();
            let scale = report.upper * mass;
            if scale == T::zero() {
                continue;
            }
            let low = (report.lower * mass - lhs).max(T::zero());
            let high = (lhs - report.upper * mass).max(T::zero());
            worst = worst.max(low.max(high) / scale);
        }
        worst
    }

    pub fn boundedness_stats(&self) -> BoundednessStats<T> {
        let self_inner: Vec<T> = self.vectors.iter().map(|v| v.inner_unchecked(v).modulus()).collect();
        let plus: Vec<T> = self.vectors.iter().map(|v| cnorm2(v.plus())).collect();
        let minus: Vec<T> = self.vectors.iter().map(|v| cnorm2(v.minus())).collect();
        let inf = |xs: &[T]| xs.iter().copied().fold(T::infinity(), T::min);
        let sup = |xs: &[T]| xs.iter().copied().fold(T::neg_infinity(), T::max);
        let inf_norm = inf(&self_inner);
        let sup_norm = sup(&self_inner);
        let sup_bound = (sup(&plus) + sup(&minus)) / T::SQRT_2();
        let inf_bound = inf(&plus).max(inf(&minus)) / T::SQRT_2();
        let slack = T::one() + T::tol(1e-12);
        BoundednessStats {
            inf_norm,
            sup_norm,
            inf_bound,
            sup_bound,
            bounds_hold: sup_norm <= sup_bound * slack && inf_bound <= inf_norm * slack,
        }
    }

    pub fn tightness_decomposition(&self) -> Result<TightnessDecomposition> {
        self.require_frame()?;
        let report = self.report();
        Ok(TightnessDecomposition {
            tight_bc: report.is_tight,
            tight_plus: self.bounds(Component::Plus).is_tight(),
            tight_minus: self.bounds(Component::Minus).is_tight(),
        })
    }

    /// Full classification.
    pub fn report(&self) -> FrameReport<T> {
        let bp = self.bounds(Component::Plus);
        let bm = self.bounds(Component::Minus);
        let lower = bp.lower.min(bm.lower);
        let upper = bp.upper.max(bm.upper);
        let is_frame = bp.is_frame() && bm.is_frame();
        let is_tight = is_frame && (upper - lower) <= T::tol(TIGHT_TOL) * upper;
        let is_parseval = is_tight && (lower - T::one()).abs() <= T::tol(TIGHT_TOL);
        let (n_exact, n_exact_plus, n_exact_minus) = if is_frame {
            (
                self.n_exact_by_components().ok(),
                Some(self.component_removable(Component::Plus)),
                Some(self.component_removable(Component::Minus)),
            )
        } else {
            (None, None, None)
        };
        let riesz = self.riesz_report();
        FrameReport {
            dim: self.dim,
            len: self.len(),
            a_plus: bp.lower,
            b_plus: bp.upper,
            a_minus: bm.lower,
            b_minus: bm.upper,
            lower,
            upper,
            is_frame,
            is_tight,
            is_parseval,
            is_exact: n_exact.as_ref().is_some_and(Vec::is_empty),
            is_riesz: riesz.is_riesz,
            is_complete: is_frame,
            n_exact,
            n_exact_plus,
            n_exact_minus,
            eigenvalues_plus: bp.eigenvalues,
            eigenvalues_minus: bm.eigenvalues,
            gram_bounds: [riesz.lower, riesz.upper],
            tolerances: Tolerances::default(),
        }
    }
}

pub(crate) fn random_bicomplex<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Bicomplex<T> {
    let mut u = || T::lit(rng.gen_range(-1.0..1.0));
    Bicomplex::new(Complex::new(u(), u()), Complex::new(u(), u()))
}

/// One evaluation of the frame inequality.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FrameInequality<T> {
    /// `Σ |⟨f, f_n⟩|²`.
    pub sum: T,
    /// `½(Σ|⟨f⁺, f_n⁺⟩|² + Σ|⟨f⁻, f_n⁻⟩|²)`.
    pub component_sum: T,
    pub lower: T,
    pub upper: T,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RieszReport<T> {
    pub is_riesz: bool,
    pub lower: T,
    pub upper: T,
    pub gram_plus: ComponentBounds<T>,
    pub gram_minus: ComponentBounds<T>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundednessStats<T> {
    /// `inf_n |⟨f_n, f_n⟩|`.
    pub inf_norm: T,
    /// `sup_n |⟨f_n, f_n⟩|`.
    pub sup_norm: T,
    /// `max(inf ‖f_n⁺‖², inf ‖f_n⁻‖²)/√2`.
    pub inf_bound: T,
    /// `(sup ‖f_n⁺‖² + sup ‖f_n⁻‖²)/√2`.
    pub sup_bound: T,
    pub bounds_hold: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessDecomposition {
    pub tight_bc: bool,
    pub tight_plus: bool,
    pub tight_minus: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    pub frame: f64,
    pub tight: f64,
    pub riesz: f64,
    pub inequality: f64,
    pub jacobi: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            frame: FRAME_TOL,
            tight: TIGHT_TOL,
            riesz: RIESZ_TOL,
            inequality: INEQUALITY_SLACK,
            jacobi: crate::linalg::JACOBI_TOL,
        }
    }
}

/// Classification of a bicomplex family together with its numeric evidence.
#[derive(Clone, Debug, Serialize)]
pub struct FrameReport<T> {
    pub dim: usize,
    pub len: usize,
    pub a_plus: T,
    pub b_plus: T,
    pub a_minus: T,
    pub b_minus: T,
    #[serde(rename = "A")]
    pub lower: T,
    #[serde(rename = "B")]
    pub upper: T,
    pub is_frame: bool,
    pub is_tight: bool,
    pub is_parseval: bool,
    pub is_exact: bool,
    pub is_riesz: bool,
    pub is_complete: bool,
    /// Indices whose removal keeps a bc-frame; `None` when the family is not a frame.
    pub n_exact: Option<Vec<usize>>,
    pub n_exact_plus: Option<Vec<usize>>,
    pub n_exact_minus: Option<Vec<usize>>,
    pub eigenvalues_plus: Vec<T>,
    pub eigenvalues_minus: Vec<T>,
    /// Smallest and largest component Gram eigenvalue.
    pub gram_bounds: [T; 2],
    pub tolerances: Tolerances,
}

/// The family `e_{m,n} = a_n e_m e₊ + b_m e_n e₋` generated by an orthonormal basis.
#[derive(Clone, Debug)]
pub struct WeightedOnbFamily<T> {
    pub family: FrameFamily<T>,
    /// `(m, n)` label of each element.
    pub labels: Vec<(usize, usize)>,
    /// `Σ|a_n|²`.
    pub a: T,
    /// `Σ|b_n|²`.
    pub b: T,
}

/// Builds `e_{m,n} = a_n e_m e₊ + b_m e_n e₋` for all `(m, n) ∈ [0, K)²`,
/// `K = max(d, len a, len b)`, with `e_k = 0` for `k ≥ d` and missing sequence entries taken
/// as zero. Elements that vanish in both components are dropped.
pub fn weighted_onb_family<T: Real>(
    basis: &[Vec<Complex<T>>],
    a_seq: &[Complex<T>],
    b_seq: &[Complex<T>],
) -> Result<WeightedOnbFamily<T>> {
    if a_seq.is_empty() {
        return Err(Error::EmptySequence("a_n"));
    }
    if b_seq.is_empty() {
        return Err(Error::EmptySequence("b_n"));
    }
    let d = basis.len();
    if d == 0 {
        return Err(Error::EmptySequence("orthonormal basis"));
    }
    if let Some(bad) = basis.iter().find(|e| e.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bad.len(),
        });
    }
    let k_max = d.max(a_seq.len()).max(b_seq.len());
    let coef = |s: &[Complex<T>], i: usize| s.get(i).copied().unwrap_or_else(Complex::zero);
    let scaled = |c: Complex<T>, i: usize| -> Vec<Complex<T>> {
        match basis.get(i) {
            Some(e) => e.iter().map(|x| x * c).collect(),
            None => vec![Complex::zero(); d],
        }
    };
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    for m in 0..k_max {
        for n in 0..k_max {
            let plus = scaled(coef(a_seq, n), m);
            let minus = scaled(coef(b_seq, m), n);
            if plus.iter().chain(&minus).all(Zero::is_zero) {
                continue;
            }
            vectors.push(BcVector::new(plus, minus)?);
            labels.push((m, n));
        }
    }
    Ok(WeightedOnbFamily {
        family: FrameFamily::new(vectors)?,
        labels,
        a: a_seq.iter().map(|z| abs2(*z)).sum(),
        b: b_seq.iter().map(|z| abs2(*z)).sum(),
    })
}

pub use crate::fixtures::counterexample_cexp;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type C = Complex<f64>;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    fn unit(d: usize, k: usize) -> Vec<C> {
        let mut v = vec![C::zero(); d];
        v[k] = c(1.0);
        v
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn component_bounds_examples() {
        let onb = [unit(2, 0), unit(2, 1)];
        let b = component_bounds(2, onb.iter().map(Vec::as_slice));
        assert!(close(b.lower, 1.0, 1e-14) && close(b.upper, 1.0, 1e-14));

        let two = [unit(2, 0), unit(2, 1), vec![c(0.5f64.sqrt()), c(0.5f64.sqrt())], vec![
            c(0.5f64.sqrt()),
            c(-(0.5f64.sqrt())),
        ]];
        let b = component_bounds(2, two.iter().map(Vec::as_slice));
        assert!(close(b.lower, 2.0, 1e-14) && close(b.upper, 2.0, 1e-14));

        let e = [unit(2, 0), unit(2, 0), unit(2, 1)];
        let b = component_bounds(2, e.iter().map(Vec::as_slice));
        assert!(close(b.lower, 1.0, 1e-14) && close(b.upper, 2.0, 1e-14));
        assert!(b.is_frame() && !b.is_tight());

        let e = [unit(3, 0), unit(3, 1)];
        assert!(!component_bounds(3, e.iter().map(Vec::as_slice)).is_frame());
    }

    #[test]
    fn report_examples() {
        let r = fixtures::embedded_onb::<f64>(4).report();
        assert!(r.is_frame && r.is_tight && r.is_parseval && r.is_exact && r.is_riesz);
        assert!(close(r.lower, 1.0, 1e-14) && close(r.upper, 1.0, 1e-14));
        assert_eq!(r.n_exact, Some(vec![]));

        let r = fixtures::onb_and_doubled_onb::<f64>(3).report();
        assert!(close(r.a_plus, 1.0, 1e-14) && close(r.b_plus, 1.0, 1e-14));
        assert!(close(r.a_minus, 2.0, 1e-14) && close(r.b_minus, 2.0, 1e-14));
        assert!(close(r.lower, 1.0, 1e-14) && close(r.upper, 2.0, 1e-14));
        assert!(r.is_frame && !r.is_tight && !r.is_parseval);

        let r = fixtures::non_spanning_plus::<f64>(3).report();
        assert!(!r.is_frame && !r.is_tight && r.n_exact.is_none() && !r.is_exact);
        assert!(r.a_minus > 0.5);
    }

    #[test]
    fn frame_inequality_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let parseval = fixtures::embedded_onb::<f64>(3);
        for _ in 0..20 {
            let f = BcVector::random(&mut rng, 3);
            let s = parseval.frame_inequality_sample(&f).unwrap();
            assert!(close(s.sum, f.norm_sqr(), 1e-13) && s.holds);
            assert!(close(s.sum, s.component_sum, 1e-12));
        }
        // saturation at A on the shared smallest eigenvector
        let fam = fixtures::onb_and_doubled_onb::<f64>(3);
        let f = BcVector::new(unit(3, 1), unit(3, 1)).unwrap();
        let s = fam.frame_inequality_sample(&f).unwrap();
        // a⁺ = 1 on plus, a⁻ = 2 on minus: sum = ½(1 + 2), lower = 1·1
        assert!(close(s.sum, 1.5, 1e-14) && close(s.lower, 1.0, 1e-14) && s.holds);
        let f = BcVector::new(unit(3, 1), vec![C::zero(); 3]).unwrap();
        let s = fam.frame_inequality_sample(&f).unwrap();
        assert!(close(s.sum, s.lower, 1e-14));
        assert!(fam.frame_inequality_sample(&BcVector::zeros(2)).is_err());
    }

    #[test]
    fn direct_bounds_match_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let d = rng.gen_range(2..6);
            let n = rng.gen_range(d..2 * d + 3);
            let fam = fixtures::random_family::<f64, _>(&mut rng, d, n);
            let direct = fam.direct_bounds();
            let r = fam.report();
            assert!(close(direct.lower, r.lower, 1e-10));
            assert!(close(direct.upper, r.upper, 1e-10));
            assert!(fam.quadratic_form_matrix().max_asymmetry() < 1e-13);
        }
    }

    #[test]
    fn weighted_onb_examples() {
        let d = 3;
        let basis: Vec<Vec<C>> = (0..d).map(|k| unit(d, k)).collect();
        let w = weighted_onb_family(&basis, &[c(1.0)], &[c(1.0)]).unwrap();
        let r = w.family.report();
        assert!(r.is_parseval);

        let a = [c(1.0), C::new(0.0, 1.0)]; // Σ = 2
        let b = [c(1.0), c(1.0), c(1.0)]; // Σ = 3
        let w = weighted_onb_family(&basis, &a, &b).unwrap();
        let r = w.family.report();
        assert!(close(r.lower, 2.0, 1e-13) && close(r.upper, 3.0, 1e-13));
        assert!((w.a - 2.0).abs() < 1e-15 && (w.b - 3.0).abs() < 1e-15);

        let w = weighted_onb_family(&basis, &[c(0.6), c(0.8)], &[c(0.8), c(0.6)]).unwrap();
        assert!(w.family.report().is_parseval);
        assert!(w.family.report().is_tight);

        // Gram identity ⟨e_{m,n}, e_{j,k}⟩ = a_n ā_k δ_{mj} e₊ + b_m b̄_j δ_{nk} e₋
        let a = [C::new(0.3, 0.4), c(1.1), C::new(-0.2, 0.9)];
        let b = [c(0.7), C::new(0.0, -0.5), c(2.0)];
        let w = weighted_onb_family(&basis, &a, &b).unwrap();
        for (x, &(m, n)) in w.labels.iter().enumerate() {
            for (y, &(j, k)) in w.labels.iter().enumerate() {
                let g = w.family.vector(x).inner(w.family.vector(y)).unwrap();
                let dp = if m == j { a[n] * a[k].conj() } else { C::zero() };
                let dm = if n == k { b[m] * b[j].conj() } else { C::zero() };
                assert!(g.distance(&Bicomplex::from_idempotent(dp, dm)) < 1e-14);
            }
        }
        assert!(matches!(weighted_onb_family(&basis, &[], &b), Err(Error::EmptySequence(_))));
    }

    #[test]
    fn n_exact_routes_agree_on_fixtures() {
        for fam in [
            fixtures::embedded_onb::<f64>(3),
            fixtures::repeated_onb(3),
            fixtures::onb_and_doubled_onb(2),
            counterexample_cexp(2),
            counterexample_cexp(3),
            counterexample_cexp(5),
        ] {
            assert_eq!(fam.n_exact().unwrap(), fam.n_exact_by_components().unwrap());
        }
        assert_eq!(fixtures::embedded_onb::<f64>(3).n_exact().unwrap(), Vec::<usize>::new());
        assert_eq!(fixtures::repeated_onb::<f64>(3).n_exact().unwrap(), (0..6).collect::<Vec<_>>());
        assert!(matches!(fixtures::non_spanning_plus::<f64>(2).n_exact(), Err(Error::NotAFrame { .. })));
    }

    #[test]
    fn cexp_is_exact_with_non_exact_components() {
        for d in 2..6 {
            let fam = counterexample_cexp::<f64>(d);
            let r = fam.report();
            assert!(r.is_frame && r.is_exact, "d = {d}");
            assert!(!r.n_exact_plus.as_ref().unwrap().is_empty());
            assert!(!r.n_exact_minus.as_ref().unwrap().is_empty());
            assert!(!r.is_riesz);
            assert!(close(r.lower, 1.0, 1e-14) && close(r.upper, 2.0, 1e-14));
        }
        // frozen arrangements found by the deletion search
        let r = counterexample_cexp::<f64>(2).report();
        assert_eq!(r.n_exact_plus, Some(vec![0, 1]));
        assert_eq!(r.n_exact_minus, Some(vec![2]));
        let r = counterexample_cexp::<f64>(3).report();
        assert_eq!(r.n_exact_plus, Some(vec![0, 1]));
        assert_eq!(r.n_exact_minus, Some(vec![2, 3]));
    }

    #[test]
    fn riesz_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let onb = fixtures::embedded_onb::<f64>(4);
        assert!(onb.is_riesz());
        assert!(onb.riesz_violation(&mut rng, 50) < 1e-12);
        assert!(onb.is_exact().unwrap());
        assert!(!fixtures::repeated_onb::<f64>(2).is_riesz());
        let fam = fixtures::random_family::<f64, _>(&mut rng, 4, 4);
        assert!(fam.is_riesz() && fam.is_exact().unwrap());
        assert!(fam.riesz_violation(&mut rng, 200) < 1e-10);
    }

    #[test]
    fn boundedness_examples() {
        let s = fixtures::embedded_onb::<f64>(3).boundedness_stats();
        assert!(close(s.inf_norm, 1.0, 1e-15) && close(s.sup_norm, 1.0, 1e-15) && s.bounds_hold);

        let fam = FrameFamily::from_components(vec![unit(2, 0), unit(2, 1)], vec![unit(2, 0), vec![C::zero(); 2]])
            .unwrap();
        let s = fam.boundedness_stats();
        assert!(s.bounds_hold);
        assert!(close(s.inf_norm, 0.5f64.sqrt(), 1e-15));

        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let d = rng.gen_range(1..5);
            let n = rng.gen_range(1..8);
            let scale = rng.gen_range(0.1..10.0);
            let fam = fixtures::random_family::<f64, _>(&mut rng, d, n);
            let scaled: Vec<_> = fam.vectors().iter().map(|v| v.scale(Bicomplex::from_real(scale))).collect();
            assert!(fam.boundedness_stats().bounds_hold);
            assert!(FrameFamily::new(scaled).unwrap().boundedness_stats().bounds_hold);
        }
    }

    #[test]
    fn tightness_examples() {
        let both = fixtures::embedded_onb::<f64>(3).tightness_decomposition().unwrap();
        assert_eq!(both, TightnessDecomposition { tight_bc: true, tight_plus: true, tight_minus: true });
        let split = fixtures::onb_and_doubled_onb::<f64>(3).tightness_decomposition().unwrap();
        assert_eq!(split, TightnessDecomposition { tight_bc: false, tight_plus: true, tight_minus: true });
        assert!(fixtures::non_spanning_plus::<f64>(3).tightness_decomposition().is_err());
    }

    #[test]
    fn completeness_examples() {
        assert!(fixtures::embedded_onb::<f64>(3).is_complete());
        assert!(!fixtures::non_spanning_plus::<f64>(3).is_complete());
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let d = rng.gen_range(1..6);
            let n = d + rng.gen_range(0..4);
            let fam = fixtures::random_family::<f64, _>(&mut rng, d, n);
            assert!(fam.is_complete());
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(FrameFamily::<f64>::new(vec![]), Err(Error::EmptySequence(_))));
        let bad = vec![BcVector::<f64>::zeros(2), BcVector::zeros(3)];
        assert!(matches!(FrameFamily::new(bad), Err(Error::DimensionMismatch { .. })));
        assert!(FrameFamily::<f64>::from_components(vec![unit(2, 0)], vec![]).is_err());
    }

    #[test]
    fn report_json_has_named_bounds() {
        let r = fixtures::embedded_onb::<f64>(2).report();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["A"], 1.0);
        assert_eq!(v["B"], 1.0);
        assert_eq!(v["n_exact"], serde_json::json!([]));
        assert!(v["eigenvalues_plus"].is_array());
    }
}
