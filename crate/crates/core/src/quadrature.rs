//! Uniform trapezoid rules.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Nodes and weights of the composite trapezoid rule on `[lo, hi]` with `n ≥ 2` points.
pub fn trapezoid<T: Real>(lo: T, hi: T, n: usize) -> Result<(Vec<T>, Vec<T>)> {
    if n < 2 || !(hi > lo) {
        return Err(Error::InvalidInput(format!(
            "trapezoid rule needs n ≥ 2 and lo < hi (n = {n}, lo = {lo}, hi = {hi})"
        )));
    }
    let h = (hi - lo) / T::from_usize(n - 1);
    let nodes = (0..n).map(|k| lo + h * T::from_usize(k)).collect();
    let weights = (0..n)
        .map(|k| if k == 0 || k == n - 1 { h * T::half() } else { h })
        .collect();
    Ok((nodes, weights))
}

/// `Σ w_k f(x_k)`.
pub fn integrate<T: Real>(nodes: &[T], weights: &[T], f: impl Fn(T) -> T) -> T {
    nodes.iter().zip(weights).map(|(&x, &w)| w * f(x)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_integral_is_spectrally_accurate() {
        let (x, w) = trapezoid(-8.0f64, 8.0, 257).unwrap();
        let v = integrate(&x, &w, |t| (-t * t).exp());
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn polynomial_exactness_and_errors() {
        let (x, w) = trapezoid(0.0f64, 1.0, 3).unwrap();
        assert_eq!(w, vec![0.25, 0.5, 0.25]);
        assert!((integrate(&x, &w, |t| 3.0 * t + 1.0) - 2.5).abs() < 1e-15);
        assert!(trapezoid(0.0f64, 1.0, 1).is_err());
        assert!(trapezoid(1.0f64, 1.0, 5).is_err());
    }
}
