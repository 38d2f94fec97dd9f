//! bc-frame operator `S = S₊e₊ + S₋e₋`, analysis/synthesis and canonical duals.

use num_complex::Complex;
use num_traits::Zero;
use serde::Serialize;

use crate::bicomplex::{Bicomplex, Hyperbolic};
use crate::error::{Error, Result};
use crate::frame::{spans, FrameFamily};
use crate::hilbert::{BcVector, Component};
use crate::linalg::{CMatrix, HermitianEigen};
use crate::scalar::Real;

/// Largest entrywise asymmetry accepted for a frame operator.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Coefficients `(c_n)` in `ℓ²_𝔹ℂ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent, bound(serialize = "T: Real + Serialize"))]
pub struct CoefficientSequence<T> {
    values: Vec<Bicomplex<T>>,
}

impl<T: Real> CoefficientSequence<T> {
    pub fn new(values: Vec<Bicomplex<T>>) -> Self {
        Self { values }
    }

    /// Unit coefficient at `k`.
    pub fn unit(len: usize, k: usize) -> Self {
        let mut values = vec![Bicomplex::zero(); len];
        values[k] = Bicomplex::from_real(T::one());
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Bicomplex<T>] {
        &self.values
    }

    /// `Σ c_n d_n*`.
    pub fn inner(&self, other: &Self) -> Result<Bicomplex<T>> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.values.iter().zip(&other.values).map(|(c, d)| *c * d.conj_star()).sum())
    }

    /// `Σ |c_n|²`.
    pub fn norm_sqr(&self) -> T {
        self.values.iter().map(Bicomplex::modulus_sqr).sum()
    }
}

/// `c_n = ⟨f, f_n⟩`.
pub fn analysis<T: Real>(family: &FrameFamily<T>, f: &BcVector<T>) -> Result<CoefficientSequence<T>> {
    if f.dim() != family.dim() {
        return Err(Error::DimensionMismatch {
            expected: family.dim(),
            found: f.dim(),
        });
    }
    Ok(CoefficientSequence::new(family.vectors().iter().map(|v| f.inner_unchecked(v)).collect()))
}

/// `Σ c_n f_n`.
pub fn synthesis<T: Real>(family: &FrameFamily<T>, c: &CoefficientSequence<T>) -> Result<BcVector<T>> {
    if c.len() != family.len() {
        return Err(Error::LengthMismatch {
            expected: family.len(),
            found: c.len(),
        });
    }
    let mut out = BcVector::zeros(family.dim());
    for (z, v) in c.values().iter().zip(family.vectors()) {
        out.axpy(*z, v);
    }
    Ok(out)
}

/// Componentwise pair `(S₊, S₋)` with cached eigensystems.
#[derive(Clone, Debug)]
pub struct BcFrameOperator<T> {
    s_plus: CMatrix<T>,
    s_minus: CMatrix<T>,
    eig_plus: HermitianEigen<T>,
    eig_minus: HermitianEigen<T>,
}

impl<T: Real> BcFrameOperator<T> {
    pub fn from_family(family: &FrameFamily<T>) -> Self {
        Self {
            s_plus: family.frame_matrix(Component::Plus).clone(),
            s_minus: family.frame_matrix(Component::Minus).clone(),
            eig_plus: family.eigen(Component::Plus).clone(),
            eig_minus: family.eigen(Component::Minus).clone(),
        }
    }

    pub fn from_components(s_plus: CMatrix<T>, s_minus: CMatrix<T>) -> Result<Self> {
        if s_plus.dim() != s_minus.dim() {
            return Err(Error::DimensionMismatch {
                expected: s_plus.dim(),
                found: s_minus.dim(),
            });
        }
        for s in [&s_plus, &s_minus] {
            let asym = s.max_asymmetry();
            if asym > T::tol(HERMITIAN_TOL) * s.max_abs().max(T::one()) {
                return Err(Error::InvalidInput(format!("matrix is not Hermitian (asymmetry {asym})")));
            }
        }
        let eig_plus = s_plus.hermitian_eigen();
        let eig_minus = s_minus.hermitian_eigen();
        Ok(Self {
            s_plus,
            s_minus,
            eig_plus,
            eig_minus,
        })
    }

    /// `d·Id` for a hyperbolic scalar `d`.
    pub fn scalar(dim: usize, d: Hyperbolic<T>) -> Self {
        Self::from_components(CMatrix::identity(dim).scaled(d.p), CMatrix::identity(dim).scaled(d.m))
            .expect("diagonal")
    }

    pub fn dim(&self) -> usize {
        self.s_plus.dim()
    }

    pub fn component(&self, c: Component) -> &CMatrix<T> {
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

    fn check_dim(&self, f: &BcVector<T>) -> Result<()> {
        if f.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: f.dim(),
            });
        }
        Ok(())
    }

    /// `Sf = S₊f⁺ e₊ + S₋f⁻ e₋`.
    pub fn apply(&self, f: &BcVector<T>) -> Result<BcVector<T>> {
        self.check_dim(f)?;
        BcVector::new(self.s_plus.apply(f.plus()), self.s_minus.apply(f.minus()))
    }

    /// `⟨Sf, f⟩`; hyperbolic with parts `⟨S₊f⁺, f⁺⟩`, `⟨S₋f⁻, f⁻⟩`.
    pub fn quadratic_form(&self, f: &BcVector<T>) -> Result<Bicomplex<T>> {
        Ok(self.apply(f)?.inner_unchecked(f))
    }

    pub fn is_invertible(&self) -> bool {
        spans(self.eig_plus.min(), self.eig_plus.max()) && spans(self.eig_minus.min(), self.eig_minus.max())
    }

    /// Componentwise inverse through the eigensystems.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible {
                lambda_plus: self.eig_plus.min().to_f64().unwrap_or(f64::NAN),
                lambda_minus: self.eig_minus.min().to_f64().unwrap_or(f64::NAN),
            });
        }
        let inv = |e: &HermitianEigen<T>| e.spectral_map(|l| l.recip());
        Self::from_components(inv(&self.eig_plus), inv(&self.eig_minus))
    }

    /// Operator norm for `‖·‖_bc`, equal to `max(b⁺, b⁻)`.
    pub fn operator_norm(&self) -> T {
        self.eig_plus.max().abs().max(self.eig_minus.max().abs())
    }

    /// `max(‖S₊‖², ‖S₋‖²)`, the squared bound on `‖S‖²`.
    pub fn squared_norm_bound(&self) -> T {
        let p = self.eig_plus.max().abs();
        let m = self.eig_minus.max().abs();
        (p * p).max(m * m)
    }

    /// `max |S± − d± Id|` entrywise.
    pub fn identity_deviation(&self, d: Hyperbolic<T>) -> T {
        let n = self.dim();
        let dev = |s: &CMatrix<T>, x: T| s.sub(&CMatrix::identity(n).scaled(x)).max_abs();
        dev(&self.s_plus, d.p).max(dev(&self.s_minus, d.m))
    }

    /// `d = a⁺e₊ + a⁻e₋` from the smallest eigenvalues.
    pub fn lower_hyperbolic_bound(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.eig_plus.min(), self.eig_minus.min())
    }

    /// `|⟨Sf, g⟩ − ⟨f, Sg⟩|`.
    pub fn self_adjoint_residual(&self, f: &BcVector<T>, g: &BcVector<T>) -> Result<T> {
        let lhs = self.apply(f)?.inner(g)?;
        let rhs = f.inner(&self.apply(g)?)?;
        Ok(lhs.distance(&rhs))
    }

    /// Largest entrywise asymmetry of either component.
    pub fn max_asymmetry(&self) -> T {
        self.s_plus.max_asymmetry().max(self.s_minus.max_asymmetry())
    }
}

/// `S` assembled from the family.
pub fn frame_operator<T: Real>(family: &FrameFamily<T>) -> BcFrameOperator<T> {
    BcFrameOperator::from_family(family)
}

/// Canonical dual `g_n = S⁻¹ f_n`.
pub fn canonical_dual<T: Real>(family: &FrameFamily<T>) -> Result<FrameFamily<T>> {
    let inv = frame_operator(family).invert()?;
    let dual = family
        .vectors()
        .iter()
        .map(|v| inv.apply(v))
        .collect::<Result<Vec<_>>>()?;
    FrameFamily::new(dual)
}

/// Relative errors of `f = Σ⟨f, g_n⟩f_n` and `f = Σ⟨f, f_n⟩g_n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Reconstruction<T> {
    pub dual_analysis: T,
    pub dual_synthesis: T,
}

impl<T: Real> Reconstruction<T> {
    pub fn worst(&self) -> T {
        self.dual_analysis.max(self.dual_synthesis)
    }
}

pub fn reconstruction_residual<T: Real>(
    family: &FrameFamily<T>,
    dual: &FrameFamily<T>,
    f: &BcVector<T>,
) -> Result<Reconstruction<T>> {
    if dual.len() != family.len() {
        return Err(Error::LengthMismatch {
            expected: family.len(),
            found: dual.len(),
        });
    }
    let norm = f.norm();
    let rel = |g: BcVector<T>| -> Result<T> {
        let e = g.distance(f)?;
        Ok(if norm > T::zero() { e / norm } else { e })
    };
    Ok(Reconstruction {
        dual_analysis: rel(synthesis(family, &analysis(dual, f)?)?)?,
        dual_synthesis: rel(synthesis(dual, &analysis(family, f)?)?)?,
    })
}

/// Matrix of `S` restricted to one component, rebuilt as `T±ᴴ T±` by applying the
/// composition to basis vectors.
pub fn composed_component<T: Real>(family: &FrameFamily<T>, c: Component) -> CMatrix<T> {
    let d = family.dim();
    let mut out = CMatrix::zeros(d);
    for j in 0..d {
        let mut e = vec![Complex::zero(); d];
        e[j] = Complex::new(T::one(), T::zero());
        let f = match c {
            Component::Plus => BcVector::new(e, vec![Complex::zero(); d]),
            Component::Minus => BcVector::new(vec![Complex::zero(); d], e),
        }
        .expect("d ≥ 1");
        let coeffs = analysis(family, &f).expect("same dimension");
        let col = synthesis(family, &coeffs).expect("same length");
        for (i, z) in col.component(c).iter().enumerate() {
            out[(i, j)] = *z;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_coeffs(rng: &mut ChaCha8Rng, n: usize) -> CoefficientSequence<f64> {
        CoefficientSequence::new((0..n).map(|_| crate::frame::random_bicomplex(rng)).collect())
    }

    #[test]
    fn analysis_examples() {
        let onb = fixtures::embedded_onb::<f64>(3);
        let c = analysis(&onb, &BcVector::basis(3, 0)).unwrap();
        assert_eq!(c.values()[0], Bicomplex::from_real(1.0));
        assert!(c.values()[1..].iter().all(|z| *z == Bicomplex::zero()));
        let z = analysis(&onb, &BcVector::zeros(3)).unwrap();
        assert!(z.values().iter().all(|z| *z == Bicomplex::zero()));
        assert!(analysis(&onb, &BcVector::zeros(2)).is_err());
    }

    #[test]
    fn analysis_is_componentwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fam = fixtures::random_family::<f64, _>(&mut rng, 3, 5);
        let f = BcVector::random(&mut rng, 3);
        let c = analysis(&fam, &f).unwrap();
        for (z, v) in c.values().iter().zip(fam.vectors()) {
            let p = crate::scalar::cdot(f.plus(), v.plus());
            let m = crate::scalar::cdot(f.minus(), v.minus());
            assert!(z.distance(&Bicomplex::from_idempotent(p, m)) < 1e-14);
        }
    }

    #[test]
    fn synthesis_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let parseval = fixtures::embedded_onb::<f64>(4);
        let f = BcVector::random(&mut rng, 4);
        let back = synthesis(&parseval, &analysis(&parseval, &f).unwrap()).unwrap();
        assert!(back.distance(&f).unwrap() < 1e-14);

        let fam = fixtures::random_family::<f64, _>(&mut rng, 3, 6);
        let fk = synthesis(&fam, &CoefficientSequence::unit(6, 4)).unwrap();
        assert!(fk.distance(fam.vector(4)).unwrap() < 1e-15);
        assert!(matches!(
            synthesis(&fam, &CoefficientSequence::unit(5, 0)),
            Err(Error::LengthMismatch { .. })
        ));

        for _ in 0..100 {
            let f = BcVector::random(&mut rng, 3);
            let c = random_coeffs(&mut rng, 6);
            let lhs = analysis(&fam, &f).unwrap().inner(&c).unwrap();
            let rhs = f.inner(&synthesis(&fam, &c).unwrap()).unwrap();
            assert!(lhs.distance(&rhs) < 1e-12);
        }
    }

    #[test]
    fn frame_operator_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = frame_operator(&fixtures::embedded_onb::<f64>(3));
        assert!(s.identity_deviation(Hyperbolic::new(1.0, 1.0)) < 1e-15);

        let fam = fixtures::harmonic_tight::<f64>(3, 5);
        let s = frame_operator(&fam);
        let d = s.lower_hyperbolic_bound();
        assert!(fam.report().is_tight && d.is_strictly_positive());
        assert!(s.identity_deviation(d) < 1e-10 * fam.report().upper);

        let fam = fixtures::random_family::<f64, _>(&mut rng, 4, 7);
        let s = frame_operator(&fam);
        for _ in 0..20 {
            let f = BcVector::random(&mut rng, 4);
            let direct = s.apply(&f).unwrap();
            let sum = synthesis(&fam, &analysis(&fam, &f).unwrap()).unwrap();
            assert!(direct.distance(&sum).unwrap() < 1e-11);
        }
        for c in Component::BOTH {
            let composed = composed_component(&fam, c);
            assert!(composed.sub(s.component(c)).max_abs() < 1e-12);
        }
    }

    #[test]
    fn quadratic_form_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let onb = frame_operator(&fixtures::embedded_onb::<f64>(3));
        assert_eq!(onb.quadratic_form(&BcVector::zeros(3)).unwrap(), Bicomplex::zero());
        let f = BcVector::random(&mut rng, 3);
        let q = onb.quadratic_form(&f).unwrap();
        let want = Bicomplex::from_idempotent(
            Complex::new(crate::scalar::cnorm2(f.plus()), 0.0),
            Complex::new(crate::scalar::cnorm2(f.minus()), 0.0),
        );
        assert!(q.distance(&want) < 1e-14);

        let fam = fixtures::random_family::<f64, _>(&mut rng, 3, 5);
        let s = frame_operator(&fam);
        for _ in 0..1000 {
            let f = BcVector::random(&mut rng, 3);
            let q = s.quadratic_form(&f).unwrap();
            assert!(q.is_hyperbolic_positive());
            // halving between the hyperbolic parts and the real frame sum
            let half = (q.alpha().re + q.beta().re) / 2.0;
            assert!((half - fam.frame_sum(&f).unwrap()).abs() < 1e-12 * (1.0 + half));
        }
    }

    #[test]
    fn weighted_onb_quadratic_form_is_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d = 3;
        let basis: Vec<Vec<Complex<f64>>> = (0..d)
            .map(|k| (0..d).map(|j| Complex::new(if j == k { 1.0 } else { 0.0 }, 0.0)).collect())
            .collect();
        let a = [Complex::new(1.0, 0.0), Complex::new(0.0, 1.0)];
        let b = [Complex::new(1.0, 0.0); 3];
        let w = crate::frame::weighted_onb_family(&basis, &a, &b).unwrap();
        let s = frame_operator(&w.family);
        for _ in 0..20 {
            let f = BcVector::random(&mut rng, d);
            let q = s.quadratic_form(&f).unwrap();
            assert!((q.alpha().re - 2.0 * crate::scalar::cnorm2(f.plus())).abs() < 1e-12);
            assert!((q.beta().re - 3.0 * crate::scalar::cnorm2(f.minus())).abs() < 1e-12);
        }
    }

    #[test]
    fn invert_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let two = BcFrameOperator::scalar(3, Hyperbolic::new(2.0, 2.0));
        assert!(two.invert().unwrap().identity_deviation(Hyperbolic::new(0.5, 0.5)) < 1e-15);

        let s = frame_operator(&fixtures::onb_and_doubled_onb::<f64>(3));
        assert!(s.invert().unwrap().identity_deviation(Hyperbolic::new(1.0, 0.5)) < 1e-15);

        let bad = frame_operator(&fixtures::non_spanning_plus::<f64>(3));
        assert!(matches!(bad.invert(), Err(Error::NotInvertible { .. })));

        let s = frame_operator(&fixtures::random_family::<f64, _>(&mut rng, 5, 8));
        let inv = s.invert().unwrap();
        for _ in 0..20 {
            let f = BcVector::random(&mut rng, 5);
            let back = inv.apply(&s.apply(&f).unwrap()).unwrap();
            assert!(back.distance(&f).unwrap() < 1e-10 * f.norm());
        }
    }

    #[test]
    fn canonical_dual_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let onb = fixtures::embedded_onb::<f64>(3);
        let dual = canonical_dual(&onb).unwrap();
        for (g, f) in dual.vectors().iter().zip(onb.vectors()) {
            assert!(g.distance(f).unwrap() < 1e-15);
        }

        let tight = fixtures::harmonic_tight::<f64>(2, 3);
        let d = frame_operator(&tight).lower_hyperbolic_bound().to_bicomplex();
        let dinv = d.try_invert().unwrap();
        let dual = canonical_dual(&tight).unwrap();
        for (g, f) in dual.vectors().iter().zip(tight.vectors()) {
            assert!(g.distance(&f.scale(dinv)).unwrap() < 1e-14);
        }

        for fam in [crate::frame::counterexample_cexp::<f64>(4), fixtures::random_family(&mut rng, 4, 9)] {
            let dual = canonical_dual(&fam).unwrap();
            for _ in 0..100 {
                let f = BcVector::random(&mut rng, 4);
                assert!(reconstruction_residual(&fam, &dual, &f).unwrap().worst() < 1e-9);
            }
        }
        assert!(canonical_dual(&fixtures::non_spanning_plus::<f64>(2)).is_err());
    }

    #[test]
    fn operator_norm_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        assert_eq!(frame_operator(&fixtures::embedded_onb::<f64>(3)).operator_norm(), 1.0);
        let s = frame_operator(&fixtures::onb_and_doubled_onb::<f64>(3));
        assert!((s.operator_norm() - 2.0).abs() < 1e-14);
        assert!(s.operator_norm().powi(2) <= s.squared_norm_bound() * (1.0 + 1e-14));

        // power iteration on the bc norm
        let fam = fixtures::random_family::<f64, _>(&mut rng, 4, 6);
        let s = frame_operator(&fam);
        let mut f = BcVector::random(&mut rng, 4);
        let mut ratio = 0.0;
        for _ in 0..500 {
            let g = s.apply(&f).unwrap();
            ratio = g.norm() / f.norm();
            f = g.scale(Bicomplex::from_real(1.0 / g.norm()));
        }
        assert!((ratio - s.operator_norm()).abs() < 1e-6 * s.operator_norm());

        for _ in 0..50 {
            let f = BcVector::random(&mut rng, 4);
            let g = BcVector::random(&mut rng, 4);
            assert!(s.self_adjoint_residual(&f, &g).unwrap() < 1e-12);
            let ratio = s.apply(&f).unwrap().norm() / f.norm();
            assert!(ratio <= s.operator_norm() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn hyperbolic_identity_converse_witness() {
        let fam = fixtures::onb_and_doubled_onb::<f64>(3);
        let s = frame_operator(&fam);
        let d = Hyperbolic::new(1.0, 2.0);
        assert!(d.is_strictly_positive());
        assert!(s.identity_deviation(d) < 1e-15);
        assert!(!fam.report().is_tight);
    }

    #[test]
    fn bounds_sandwich() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let d = rng.gen_range(1..5);
            let fam = fixtures::random_family::<f64, _>(&mut rng, d, d + 2);
            let r = fam.report();
            let s = frame_operator(&fam);
            let f = BcVector::random(&mut rng, d);
            let q = s.quadratic_form(&f).unwrap();
            let half = (q.alpha().re + q.beta().re) / 2.0;
            let n2 = f.norm_sqr();
            assert!(r.lower * n2 <= half * (1.0 + 1e-12) && half <= r.upper * n2 * (1.0 + 1e-12));
        }
    }

    #[test]
    fn from_components_rejects_non_hermitian() {
        let mut m = CMatrix::<f64>::identity(2);
        m[(0, 1)] = Complex::new(1.0, 0.0);
        assert!(BcFrameOperator::from_components(m, CMatrix::identity(2)).is_err());
        assert!(BcFrameOperator::<f64>::from_components(CMatrix::identity(2), CMatrix::identity(3)).is_err());
    }
}
