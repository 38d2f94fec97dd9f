use bcframe::hermite::hermite_functions;

/// Physicists' Hermite polynomials written out by hand.
fn hermite_poly(u: usize, x: f64) -> f64 {
    let x2 = x * x;
    match u {
        0 => 1.0,
        1 => 2.0 * x,
        2 => 4.0 * x2 - 2.0,
        3 => 8.0 * x2 * x - 12.0 * x,
        4 => 16.0 * x2 * x2 - 48.0 * x2 + 12.0,
        5 => 32.0 * x2 * x2 * x - 160.0 * x2 * x + 120.0 * x,
        6 => 64.0 * x2 * x2 * x2 - 480.0 * x2 * x2 + 720.0 * x2 - 120.0,
        _ => unreachable!(),
    }
}

#[test]
fn recurrence_matches_closed_forms() {
    let xs: Vec<f64> = (0..81).map(|k| -4.0 + 0.1 * k as f64).collect();
    let h = hermite_functions(6, &xs);
    let mut fact = 1.0;
    for u in 0..=6 {
        if u > 0 {
            fact *= u as f64;
        }
        let norm = (2f64.powi(u as i32) * fact * std::f64::consts::PI.sqrt()).sqrt();
        for (k, &x) in xs.iter().enumerate() {
            let want = hermite_poly(u, x) * (-x * x / 2.0).exp() / norm;
            assert!((h[u][k] - want).abs() < 1e-10, "u={u} x={x}: {} vs {want}", h[u][k]);
        }
    }
}
