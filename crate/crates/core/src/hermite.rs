//! L²-normalized Hermite functions on sample grids.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Highest order accepted unless the caller raises it.
pub const DEFAULT_ORDER_CAP: usize = 64;

/// `h_0, …, h_order` sampled on `x`, from
/// `h_{k+1} = √(2/(k+1)) x h_k − √(k/(k+1)) h_{k−1}`.
pub fn hermite_functions<T: Real>(order: usize, x: &[T]) -> Vec<Vec<T>> {
    let h0: Vec<T> = x
        .iter()
        .map(|&x| T::PI().powf(T::lit(-0.25)) * (-x * x * T::half()).exp())
        .collect();
    let mut out = vec![h0];
    if order == 0 {
        return out;
    }
    out.push(x.iter().zip(&out[0]).map(|(&x, &h)| T::SQRT_2() * x * h).collect());
    for k in 1..order {
        let kt = T::from_usize(k);
        let c1 = (T::two() / (kt + T::one())).sqrt();
        let c0 = (kt / (kt + T::one())).sqrt();
        let next = x
            .iter()
            .enumerate()
            .map(|(i, &x)| c1 * x * out[k][i] - c0 * out[k - 1][i])
            .collect();
        out.push(next);
    }
    out
}

/// `h_u` sampled on `x`.
pub fn hermite_function<T: Real>(u: usize, x: &[T], cap: usize) -> Result<Vec<T>> {
    if u > cap {
        return Err(Error::OrderTooHigh { order: u, cap });
    }
    Ok(hermite_functions(u, x).pop().expect("order ≥ 0"))
}

/// `max_{u,v ≤ order} |Σ_k w_k h_u(x_k) h_v(x_k) − δ_{uv}|`.
pub fn orthonormality_residual<T: Real>(order: usize, nodes: &[T], weights: &[T]) -> T {
    let h = hermite_functions(order, nodes);
    let mut worst = T::zero();
    for u in 0..=order {
        for v in u..=order {
            let g: T = weights.iter().enumerate().map(|(k, &w)| w * h[u][k] * h[v][k]).sum();
            let target = if u == v { T::one() } else { T::zero() };
            worst = worst.max((g - target).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::trapezoid;

    #[test]
    fn ground_state_norm() {
        let (x, w) = trapezoid(-8.0, 8.0, 257).unwrap();
        let h0 = hermite_function(0, &x, 8).unwrap();
        let n: f64 = h0.iter().zip(&w).map(|(h, w)| h * h * w).sum();
        assert!((n - 1.0).abs() < 1e-8);
        let h1 = hermite_function(1, &x, 8).unwrap();
        let p: f64 = h0.iter().zip(&h1).zip(&w).map(|((a, b), w)| a * b * w).sum();
        assert!(p.abs() < 1e-14);
    }

    #[test]
    fn orthonormal_to_order_eight() {
        let (x, w) = trapezoid(-8.0, 8.0, 257).unwrap();
        assert!(orthonormality_residual(8, &x, &w) < 1e-8);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(hermite_function(9, &[0.0f64], 8), Err(Error::OrderTooHigh { order: 9, cap: 8 })));
    }

    #[test]
    fn low_orders_closed_form() {
        // h_2 = (2x² − 1)/√2 · h_0
        for &x in &[-1.3f64, 0.0, 0.4, 2.2] {
            let h = hermite_functions(2, &[x]);
            assert!((h[2][0] - (2.0 * x * x - 1.0) / 2f64.sqrt() * h[0][0]).abs() < 1e-15);
        }
    }
}
