//! Stock frame families with known classifications.

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;

use crate::frame::FrameFamily;
use crate::hilbert::BcVector;
use crate::scalar::Real;

fn unit<T: Real>(d: usize, k: usize) -> Vec<Complex<T>> {
    let mut v = vec![Complex::zero(); d];
    v[k] = Complex::new(T::one(), T::zero());
    v
}

fn from_parts<T: Real>(plus: Vec<Vec<Complex<T>>>, minus: Vec<Vec<Complex<T>>>) -> FrameFamily<T> {
    FrameFamily::from_components(plus, minus).expect("fixture shapes are consistent")
}

/// `f_n = e_n e₊ + e_n e₋`: Parseval, exact, Riesz.
pub fn embedded_onb<T: Real>(d: usize) -> FrameFamily<T> {
    FrameFamily::new((0..d).map(|k| BcVector::basis(d, k)).collect()).expect("d ≥ 1")
}

/// Plus component `e_n`, minus component `√2 e_n`, so `S = (1e₊ + 2e₋)·Id`.
///
/// Each component is tight, the bc family is not (`A = 1`, `B = 2`).
pub fn onb_and_doubled_onb<T: Real>(d: usize) -> FrameFamily<T> {
    let s = T::SQRT_2();
    from_parts(
        (0..d).map(|k| unit(d, k)).collect(),
        (0..d).map(|k| unit::<T>(d, k).into_iter().map(|z| z * s).collect()).collect(),
    )
}

/// The embedded basis listed twice; every index is removable.
pub fn repeated_onb<T: Real>(d: usize) -> FrameFamily<T> {
    FrameFamily::new((0..2 * d).map(|k| BcVector::basis(d, k % d)).collect()).expect("d ≥ 1")
}

/// Plus component misses `e_{d-1}`; minus is the full basis.
pub fn non_spanning_plus<T: Real>(d: usize) -> FrameFamily<T> {
    let plus = (0..d)
        .map(|k| if k + 1 == d { vec![Complex::zero(); d] } else { unit(d, k) })
        .collect();
    from_parts(plus, (0..d).map(|k| unit(d, k)).collect())
}

/// Harmonic frame `v_k[j] = exp(2πi (j + shift) k / n)`, `k < n`, with `S = n·Id`.
pub fn harmonic_vectors<T: Real>(d: usize, n: usize, shift: usize) -> Vec<Vec<Complex<T>>> {
    let n_t = T::from_usize(n);
    (0..n)
        .map(|k| {
            (0..d)
                .map(|j| {
                    let phase = T::TAU() * T::from_usize(((j + shift) * k) % n) / n_t;
                    Complex::new(phase.cos(), phase.sin())
                })
                .collect()
        })
        .collect()
}

/// Tight bc-frame with `S = n·Id` on both components, `n > d`.
pub fn harmonic_tight<T: Real>(d: usize, n: usize) -> FrameFamily<T> {
    assert!(n >= d && d >= 1);
    from_parts(harmonic_vectors(d, n, 0), harmonic_vectors(d, n, 1))
}

/// A square family with independent, non-orthogonal components.
pub fn riesz_fixture<T: Real>(d: usize) -> FrameFamily<T> {
    // upper triangular with unit diagonal on the plus side, lower on the minus side
    let entry = |i: usize, j: usize| Complex::new(T::lit(0.3 + 0.1 * i as f64), T::lit(-0.2 * j as f64));
    let plus = (0..d)
        .map(|k| (0..d).map(|j| if j == k { Complex::new(T::one(), T::zero()) } else if j < k { entry(j, k) } else { Complex::zero() }).collect())
        .collect();
    let minus = (0..d)
        .map(|k| (0..d).map(|j| if j == k { Complex::new(T::two(), T::zero()) } else if j > k { entry(k, j) } else { Complex::zero() }).collect())
        .collect();
    from_parts(plus, minus)
}

/// `n` vectors with entries uniform in the unit square of each component.
pub fn random_family<T: Real, R: Rng + ?Sized>(rng: &mut R, d: usize, n: usize) -> FrameFamily<T> {
    FrameFamily::new((0..n).map(|_| BcVector::random(rng, d)).collect()).expect("d, n ≥ 1")
}

/// An exact bc-frame whose components are both non-exact.
///
/// Plus component `(e₀, e₀, e₁, …, e_{d-1})`, removable set `{0, 1}`. For `d ≥ 3` the minus
/// component is `(e₀, …, e_{d-1}, e_{d-1})`, removable set `{d-1, d}`. For `d = 2` no
/// arrangement of basis vectors avoids `{0, 1}`, so the minus component is `(e₀, e₁, 0)`
/// with removable set `{2}`.
pub fn counterexample_cexp<T: Real>(d: usize) -> FrameFamily<T> {
    assert!(d >= 2, "needs d ≥ 2");
    let plus = std::iter::once(unit(d, 0)).chain((0..d).map(|k| unit(d, k))).collect();
    let tail = if d == 2 { vec![Complex::zero(); d] } else { unit(d, d - 1) };
    let minus = (0..d).map(|k| unit(d, k)).chain(std::iter::once(tail)).collect();
    from_parts(plus, minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::Component;

    #[test]
    fn harmonic_is_tight() {
        let f = harmonic_tight::<f64>(3, 5);
        for c in Component::BOTH {
            let b = f.bounds(c);
            assert!((b.lower - 5.0).abs() < 1e-12 && (b.upper - 5.0).abs() < 1e-12);
        }
    }

    #[test]
    fn riesz_fixture_is_square_and_independent() {
        let f = riesz_fixture::<f64>(4);
        assert_eq!(f.len(), 4);
        assert!(f.is_riesz());
        let r = f.report();
        assert!(r.is_frame && !r.is_tight);
    }

    #[test]
    fn cexp_shapes() {
        for d in 2..7 {
            let f = counterexample_cexp::<f64>(d);
            assert_eq!(f.len(), d + 1);
            assert_eq!(f.component_removable(Component::Plus), vec![0, 1]);
        }
    }
}
