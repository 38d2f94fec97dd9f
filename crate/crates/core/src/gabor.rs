//! Discrete Weyl–Heisenberg systems on `ℤ_N` and their bicomplex pairings.
//!
//! `W(n, m) g (t) = exp(2πi m t / M) · g((t − n a) mod N)` for `0 ≤ n < N/a`, `0 ≤ m < M`.
//! With `a | N` and `M | N` the operators form a group up to phases, which makes the frame
//! operator commute with every lattice operator.

use std::collections::BTreeSet;

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bicomplex::Hyperbolic;
use crate::error::{Error, Result};
use crate::frame::{component_bounds, ComponentBounds, FrameFamily, FrameReport};
use crate::hilbert::{BcVector, Component};
use crate::linalg::CMatrix;
use crate::scalar::{abs2, Real};

/// Relative agreement required between painless predictions and eigenvalues.
pub const PAINLESS_TOL: f64 = 1e-10;

/// `t ↦ exp(2πi m t / M) · v((t − shift) mod N)`.
pub fn shift_modulate<T: Real>(v: &[Complex<T>], shift: usize, m: usize, modulations: usize) -> Vec<Complex<T>> {
    let n = v.len();
    let mt = T::from_usize(modulations);
    (0..n)
        .map(|t| {
            let phase = T::TAU() * T::from_usize((m * t) % modulations) / mt;
            Complex::from_polar(T::one(), phase) * v[(t + n - shift % n) % n]
        })
        .collect()
}

/// A Gabor system `{W(n, m) g}` on `ℤ_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaborSystem<T> {
    n: usize,
    a: usize,
    m: usize,
    window: Vec<Complex<T>>,
}

impl<T: Real> GaborSystem<T> {
    pub fn new(n: usize, a: usize, m: usize, window: Vec<Complex<T>>) -> Result<Self> {
        if n == 0 || a == 0 || m == 0 || !n.is_multiple_of(a) || !n.is_multiple_of(m) {
            return Err(Error::IncompatibleLattice(format!(
                "need a | N and M | N, got N = {n}, a = {a}, M = {m}"
            )));
        }
        if window.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: window.len(),
            });
        }
        Ok(Self { n, a, m, window })
    }

    pub fn signal_len(&self) -> usize {
        self.n
    }

    pub fn time_step(&self) -> usize {
        self.a
    }

    pub fn modulations(&self) -> usize {
        self.m
    }

    pub fn shifts(&self) -> usize {
        self.n / self.a
    }

    /// `(N/a)·M`.
    pub fn len(&self) -> usize {
        self.shifts() * self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn window(&self) -> &[Complex<T>] {
        &self.window
    }

    /// `(N/a)·M = N`.
    pub fn is_critical(&self) -> bool {
        self.len() == self.n
    }

    pub fn weyl_apply(&self, n: usize, m: usize) -> Result<Vec<Complex<T>>> {
        if n >= self.shifts() || m >= self.m {
            return Err(Error::IndexOutOfRange {
                n,
                m,
                n_max: self.shifts(),
                m_max: self.m,
            });
        }
        Ok(self.weyl(n, m))
    }

    fn weyl(&self, n: usize, m: usize) -> Vec<Complex<T>> {
        self.weyl_on(&self.window, n, m)
    }

    /// `W(n, m)` applied to an arbitrary signal, indices taken cyclically.
    pub fn weyl_on(&self, v: &[Complex<T>], n: usize, m: usize) -> Vec<Complex<T>> {
        shift_modulate(v, (n % self.shifts()) * self.a, m % self.m, self.m)
    }

    /// `c` with `W(n, m) W(n', m') = c · W(n + n', m + m')`, which depends only on `n` and `m'`: `exp(−2πi m' n a / M)`.
    pub fn compose_phase(&self, n: usize, m2: usize) -> Complex<T> {
        let k = (m2 * n * self.a) % self.m;
        Complex::from_polar(T::one(), -T::TAU() * T::from_usize(k) / T::from_usize(self.m))
    }

    /// All system vectors, index `n·M + m`.
    pub fn vectors(&self) -> Vec<Vec<Complex<T>>> {
        (0..self.shifts())
            .flat_map(|n| (0..self.m).map(move |m| (n, m)))
            .map(|(n, m)| self.weyl(n, m))
            .collect()
    }

    pub fn frame_matrix(&self) -> CMatrix<T> {
        let vs = self.vectors();
        CMatrix::outer_sum(self.n, vs.iter().map(Vec::as_slice))
    }

    /// Optimal bounds from the eigenvalues of the `N×N` frame operator.
    pub fn frame_bounds(&self) -> ComponentBounds<T> {
        let vs = self.vectors();
        component_bounds(self.n, vs.iter().map(Vec::as_slice))
    }

    /// Length of the shortest cyclic interval containing the support of the window.
    pub fn support_len(&self) -> usize {
        let nz: Vec<bool> = self.window.iter().map(|z| !z.is_zero()).collect();
        if !nz.iter().any(|&b| b) {
            return 0;
        }
        // longest cyclic run of zeros
        let mut best = 0;
        let mut run = 0;
        for k in 0..2 * self.n {
            if nz[k % self.n] {
                run = 0;
            } else {
                run += 1;
                best = best.max(run.min(self.n));
            }
        }
        self.n - best
    }

    /// `G(t) = Σ_n |g(t − n a)|²`.
    pub fn coverage(&self) -> Vec<T> {
        (0..self.n)
            .map(|t| {
                (0..self.shifts())
                    .map(|k| abs2(self.window[(t + self.n - k * self.a) % self.n]))
                    .sum()
            })
            .collect()
    }

    pub fn heil_walnut_check(&self) -> HeilWalnut<T> {
        let g = self.coverage();
        let alpha = g.iter().copied().fold(T::infinity(), T::min);
        let beta = g.iter().copied().fold(T::neg_infinity(), T::max);
        let mt = T::from_usize(self.m);
        let computed = self.frame_bounds();
        let support = self.support_len();
        let applicable = support <= self.m;
        let predicted = [mt * alpha, mt * beta];
        let scale = T::one().max(predicted[1]);
        let matches = applicable
            && (predicted[0] - computed.lower).abs() <= T::tol(PAINLESS_TOL) * scale
            && (predicted[1] - computed.upper).abs() <= T::tol(PAINLESS_TOL) * scale;
        HeilWalnut {
            applicable,
            support_len: support,
            alpha,
            beta,
            predicted,
            computed: [computed.lower, computed.upper],
            matches,
            coverage: g,
        }
    }
}

/// Painless-case prediction against the eigenvalue bounds.
#[derive(Clone, Debug, Serialize)]
pub struct HeilWalnut<T> {
    /// Window support fits in `M` consecutive samples.
    pub applicable: bool,
    pub support_len: usize,
    /// `min_t G(t)`.
    pub alpha: T,
    /// `max_t G(t)`.
    pub beta: T,
    /// `(M·alpha, M·beta)`.
    pub predicted: [T; 2],
    /// Extreme eigenvalues of the frame operator.
    pub computed: [T; 2],
    pub matches: bool,
    pub coverage: Vec<T>,
}

/// `ℤA + ℤB` with `A = a e₊ + c e₋` (time steps) and `B = b e₊ + d e₋` (modulation steps
/// `1/M±`), so `ab = 1` is the critical density of the plus component.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HyperbolicLattice<T> {
    pub time: Hyperbolic<T>,
    pub frequency: Hyperbolic<T>,
}

impl<T: Real> HyperbolicLattice<T> {
    pub fn new(time: Hyperbolic<T>, frequency: Hyperbolic<T>) -> Result<Self> {
        let parts = [time.p, time.m, frequency.p, frequency.m];
        if parts.iter().any(|&x| !(x > T::zero()) || !x.is_finite()) {
            return Err(Error::IncompatibleLattice("lattice generators must lie in 𝔻⁺ with positive parts".into()));
        }
        Ok(Self { time, frequency })
    }

    pub fn from_counts(a: usize, m_plus: usize, c: usize, m_minus: usize) -> Result<Self> {
        if m_plus == 0 || m_minus == 0 {
            return Err(Error::IncompatibleLattice("modulation count must be positive".into()));
        }
        Self::new(
            Hyperbolic::new(T::from_usize(a), T::from_usize(c)),
            Hyperbolic::new(T::from_usize(m_plus).recip(), T::from_usize(m_minus).recip()),
        )
    }

    /// `ab e₊ + cd e₋`.
    pub fn density(&self) -> Hyperbolic<T> {
        self.time * self.frequency
    }

    /// `(a, M₊, c, M₋)` when every generator is integral on `ℤ_N`.
    pub fn counts(&self, n: usize) -> Result<(usize, usize, usize, usize)> {
        let int = |x: T, what: &str| -> Result<usize> {
            let r = x.round();
            if (x - r).abs() > T::tol(1e-9) * x.abs().max(T::one()) || r < T::one() {
                return Err(Error::IncompatibleLattice(format!("{what} = {x} is not a positive integer")));
            }
            r.to_usize().ok_or_else(|| Error::IncompatibleLattice(format!("{what} out of range")))
        };
        let a = int(self.time.p, "a")?;
        let c = int(self.time.m, "c")?;
        let mp = int(self.frequency.p.recip(), "1/b")?;
        let mm = int(self.frequency.m.recip(), "1/d")?;
        for (what, x) in [("a", a), ("c", c), ("M+", mp), ("M-", mm)] {
            if !n.is_multiple_of(x) {
                return Err(Error::IncompatibleLattice(format!("{what} = {x} does not divide N = {n}")));
            }
        }
        Ok((a, mp, c, mm))
    }
}

/// Paired system `f_{n,m} = W₊(n, m) g e₊ + W₋(n, m) h e₋` on a common index grid.
///
/// The grid takes the finer count on each axis; the coarser component repeats cyclically,
/// which requires its count to divide the finer one.
#[derive(Clone, Debug)]
pub struct BcGaborSystem<T> {
    plus: GaborSystem<T>,
    minus: GaborSystem<T>,
    lattice: HyperbolicLattice<T>,
    grid: (usize, usize),
    family: FrameFamily<T>,
}

fn common_count(x: usize, y: usize, axis: &str) -> Result<usize> {
    let (lo, hi) = (x.min(y), x.max(y));
    if hi % lo != 0 {
        return Err(Error::IncompatibleLattice(format!(
            "{axis} counts {x} and {y}: the coarser must divide the finer"
        )));
    }
    Ok(hi)
}

impl<T: Real> BcGaborSystem<T> {
    pub fn new(plus: GaborSystem<T>, minus: GaborSystem<T>) -> Result<Self> {
        if plus.signal_len() != minus.signal_len() {
            return Err(Error::IncompatibleLattice(format!(
                "components live on ℤ_{} and ℤ_{}",
                plus.signal_len(),
                minus.signal_len()
            )));
        }
        let lattice = HyperbolicLattice::from_counts(plus.a, plus.m, minus.a, minus.m)?;
        let k1 = common_count(plus.shifts(), minus.shifts(), "shift")?;
        let k2 = common_count(plus.m, minus.m, "modulation")?;
        let mut vectors = Vec::with_capacity(k1 * k2);
        for n in 0..k1 {
            for m in 0..k2 {
                vectors.push(BcVector::new(plus.weyl_on(&plus.window, n, m), minus.weyl_on(&minus.window, n, m))?);
            }
        }
        let family = FrameFamily::new(vectors)?;
        Ok(Self {
            plus,
            minus,
            lattice,
            grid: (k1, k2),
            family,
        })
    }

    pub fn plus(&self) -> &GaborSystem<T> {
        &self.plus
    }

    pub fn minus(&self) -> &GaborSystem<T> {
        &self.minus
    }

    pub fn component(&self, c: Component) -> &GaborSystem<T> {
        match c {
            Component::Plus => &self.plus,
            Component::Minus => &self.minus,
        }
    }

    pub fn lattice(&self) -> &HyperbolicLattice<T> {
        &self.lattice
    }

    /// `(shifts, modulations)` of the common index grid.
    pub fn grid(&self) -> (usize, usize) {
        self.grid
    }

    pub fn family(&self) -> &FrameFamily<T> {
        &self.family
    }

    pub fn report(&self) -> FrameReport<T> {
        self.family.report()
    }

    /// How often each component vector appears in the enumeration.
    pub fn multiplicity(&self, c: Component) -> usize {
        self.family.len() / self.component(c).len()
    }

    /// Component lattice at critical density and enumerated once.
    pub fn is_critical(&self, c: Component) -> bool {
        self.component(c).is_critical() && self.multiplicity(c) == 1
    }

    /// `G_bc(t) = Σ_n |(T_{na} g)(t) e₊ + (T_{nc} h)(t) e₋|²` over the common shift grid,
    /// with its extremes `(α', β')`, next to the component coverages.
    pub fn composite_coverage(&self) -> CompositeCoverage<T> {
        let n = self.plus.n;
        let k1 = self.grid.0;
        let g = &self.plus.window;
        let h = &self.minus.window;
        let (a, c) = (self.plus.a, self.minus.a);
        let cov: Vec<T> = (0..n)
            .map(|t| {
                (0..k1)
                    .map(|k| {
                        let sp = ((k % self.plus.shifts()) * a) % n;
                        let sm = ((k % self.minus.shifts()) * c) % n;
                        (abs2(g[(t + n - sp) % n]) + abs2(h[(t + n - sm) % n])) * T::half()
                    })
                    .sum()
            })
            .collect();
        let min = |v: &[T]| v.iter().copied().fold(T::infinity(), T::min);
        let max = |v: &[T]| v.iter().copied().fold(T::neg_infinity(), T::max);
        let (pc, mc) = (self.plus.coverage(), self.minus.coverage());
        CompositeCoverage {
            alpha_prime: min(&cov),
            beta_prime: max(&cov),
            alpha_plus: min(&pc),
            beta_plus: max(&pc),
            alpha_minus: min(&mc),
            beta_minus: max(&mc),
        }
    }

    /// Analysis bundle used by the command-line tool.
    pub fn analysis(&self) -> BcGaborAnalysis<T> {
        let report = self.report();
        BcGaborAnalysis {
            grid: self.grid,
            lattice: self.lattice,
            plus: ComponentGabor::of(&self.plus, self.multiplicity(Component::Plus)),
            minus: ComponentGabor::of(&self.minus, self.multiplicity(Component::Minus)),
            bounds_match_components: bounds_match(
                &self.plus.frame_bounds(),
                self.multiplicity(Component::Plus),
                &self.minus.frame_bounds(),
                self.multiplicity(Component::Minus),
                &report,
            ),
            composite: self.composite_coverage(),
            critical: critical_density_exactness(self).ok(),
            report,
        }
    }
}

// A component vector repeated k times scales its frame operator by k.
fn bounds_match<T: Real>(p: &ComponentBounds<T>, kp: usize, m: &ComponentBounds<T>, km: usize, r: &FrameReport<T>) -> bool {
    let (kp, km) = (T::from_usize(kp), T::from_usize(km));
    let tol = T::tol(PAINLESS_TOL) * r.upper.max(T::one());
    (r.lower - (kp * p.lower).min(km * m.lower)).abs() <= tol && (r.upper - (kp * p.upper).max(km * m.upper)).abs() <= tol
}

/// Builds the bc system of two windows over a hyperbolic lattice.
pub fn bc_gabor_system<T: Real>(
    lattice: &HyperbolicLattice<T>,
    g: Vec<Complex<T>>,
    h: Vec<Complex<T>>,
    n: usize,
) -> Result<BcGaborSystem<T>> {
    let (a, mp, c, mm) = lattice.counts(n)?;
    BcGaborSystem::new(GaborSystem::new(n, a, mp, g)?, GaborSystem::new(n, c, mm, h)?)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CompositeCoverage<T> {
    pub alpha_prime: T,
    pub beta_prime: T,
    pub alpha_plus: T,
    pub beta_plus: T,
    pub alpha_minus: T,
    pub beta_minus: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentGabor<T> {
    pub a: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub len: usize,
    pub multiplicity: usize,
    pub critical_lattice: bool,
    pub bounds: ComponentBounds<T>,
    pub heil_walnut: HeilWalnut<T>,
}

impl<T: Real> ComponentGabor<T> {
    fn of(sys: &GaborSystem<T>, multiplicity: usize) -> Self {
        Self {
            a: sys.a,
            m: sys.m,
            len: sys.len(),
            multiplicity,
            critical_lattice: sys.is_critical(),
            bounds: sys.frame_bounds(),
            heil_walnut: sys.heil_walnut_check(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BcGaborAnalysis<T> {
    pub grid: (usize, usize),
    pub lattice: HyperbolicLattice<T>,
    pub plus: ComponentGabor<T>,
    pub minus: ComponentGabor<T>,
    pub report: FrameReport<T>,
    /// `A = min(a⁺, a⁻)` and `B = max(b⁺, b⁻)` against the component Gabor bounds.
    pub bounds_match_components: bool,
    pub composite: CompositeCoverage<T>,
    /// `None` when the system is not a bc-frame.
    pub critical: Option<CriticalDensity>,
}

/// Exactness at critical density.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalDensity {
    pub plus_critical: bool,
    pub minus_critical: bool,
    pub n_exact: Vec<usize>,
    pub exact: bool,
    /// Some component critical implies exact.
    pub prediction_holds: bool,
}

pub fn critical_density_exactness<T: Real>(sys: &BcGaborSystem<T>) -> Result<CriticalDensity> {
    let n_exact = sys.family().n_exact_by_components()?;
    let plus_critical = sys.is_critical(Component::Plus);
    let minus_critical = sys.is_critical(Component::Minus);
    let exact = n_exact.is_empty();
    Ok(CriticalDensity {
        plus_critical,
        minus_critical,
        exact,
        prediction_holds: exact || !(plus_critical || minus_critical),
        n_exact,
    })
}

/// Window description: explicit samples or a named preset.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WindowSpec {
    Preset(String),
    Samples(Vec<[f64; 2]>),
}

impl WindowSpec {
    pub fn resolve<T: Real>(&self, n: usize) -> Result<Vec<Complex<T>>> {
        match self {
            WindowSpec::Samples(s) => {
                if s.len() != n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        found: s.len(),
                    });
                }
                Ok(s.iter().map(|[re, im]| Complex::new(T::lit(*re), T::lit(*im))).collect())
            }
            WindowSpec::Preset(name) => window_preset(name, n),
        }
    }
}

/// `"indicator:k"` (first `k` samples), `"gaussian:sigma"` (cyclic distance to 0),
/// `"exponential:r"` (`r^t`), `"delta"`.
pub fn window_preset<T: Real>(name: &str, n: usize) -> Result<Vec<Complex<T>>> {
    let bad = || Error::InvalidInput(format!("unknown window preset {name:?}"));
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (name, None),
    };
    let one = Complex::new(T::one(), T::zero());
    match (kind, arg) {
        ("delta", None) => {
            let mut w = vec![Complex::zero(); n];
            w[0] = one;
            Ok(w)
        }
        ("indicator", Some(k)) => {
            let k: usize = k.parse().map_err(|_| bad())?;
            if k > n {
                return Err(Error::InvalidInput(format!("indicator length {k} exceeds N = {n}")));
            }
            Ok((0..n).map(|t| if t < k { one } else { Complex::zero() }).collect())
        }
        ("gaussian", Some(s)) => {
            let sigma: f64 = s.parse().map_err(|_| bad())?;
            if !(sigma > 0.0) {
                return Err(Error::InvalidInput(format!("gaussian width must be positive, got {sigma}")));
            }
            let s = T::lit(sigma);
            Ok((0..n)
                .map(|t| {
                    let d = T::from_usize(t.min(n - t));
                    Complex::new((-(d * d) / (T::two() * s * s)).exp(), T::zero())
                })
                .collect())
        }
        ("exponential", Some(r)) => {
            let r: f64 = r.parse().map_err(|_| bad())?;
            if !(r > 0.0 && r < 1.0) {
                return Err(Error::InvalidInput(format!("exponential ratio must lie in (0, 1), got {r}")));
            }
            let r = T::lit(r);
            Ok((0..n).map(|t| Complex::new(r.powi(t as i32), T::zero())).collect())
        }
        _ => Err(bad()),
    }
}

/// Outcome of the exhaustive search for an exact bc Gabor frame with no critical component.
#[derive(Clone, Debug, Serialize)]
pub struct ConverseSearch {
    pub systems_examined: usize,
    pub frames: usize,
    pub exact_frames: usize,
    /// `(N, a, M₊, c, M₋, window index)` of the first witness.
    pub witness: Option<(usize, usize, usize, usize, usize, usize)>,
}

/// Runs over `N ≤ max_n`, every compatible pair of lattices and a panel of windows (presets
/// plus `random_windows` random ones per `N`), looking for an exact bc-frame in which neither
/// component is critical.
pub fn converse_failure_search<R: Rng + ?Sized>(max_n: usize, random_windows: usize, rng: &mut R) -> ConverseSearch {
    let mut out = ConverseSearch {
        systems_examined: 0,
        frames: 0,
        exact_frames: 0,
        witness: None,
    };
    for n in 2..=max_n {
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        let mut windows: Vec<Vec<Complex<f64>>> = ["delta", "indicator:2", "gaussian:1", "exponential:0.6"]
            .iter()
            .filter_map(|p| window_preset(p, n).ok())
            .collect();
        for _ in 0..random_windows {
            windows.push((0..n).map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect());
        }
        for &a in &divisors {
            for &mp in &divisors {
                for &c in &divisors {
                    for &mm in &divisors {
                        for (wi, g) in windows.iter().enumerate() {
                            for h in &windows {
                                let (Ok(p), Ok(m)) =
                                    (GaborSystem::new(n, a, mp, g.clone()), GaborSystem::new(n, c, mm, h.clone()))
                                else {
                                    continue;
                                };
                                let Ok(sys) = BcGaborSystem::new(p, m) else { continue };
                                out.systems_examined += 1;
                                let Ok(crit) = critical_density_exactness(&sys) else { continue };
                                out.frames += 1;
                                if crit.exact {
                                    out.exact_frames += 1;
                                }
                                if crit.exact && !crit.plus_critical && !crit.minus_critical && out.witness.is_none() {
                                    out.witness = Some((n, a, mp, c, mm, wi));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Index sets `N_Exact(F±)` of a bc Gabor system, as ordered sets.
pub fn removable_sets<T: Real>(sys: &BcGaborSystem<T>) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let f = sys.family();
    (
        f.component_removable(Component::Plus).into_iter().collect(),
        f.component_removable(Component::Minus).into_iter().collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cnorm2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type C = Complex<f64>;

    fn painless() -> GaborSystem<f64> {
        GaborSystem::new(8, 2, 4, window_preset("indicator:4", 8).unwrap()).unwrap()
    }

    fn random_window(rng: &mut ChaCha8Rng, n: usize) -> Vec<C> {
        (0..n).map(|_| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
    }

    #[test]
    fn weyl_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let sys = GaborSystem::new(12, 3, 6, random_window(&mut rng, 12)).unwrap();
        assert_eq!(sys.weyl_apply(0, 0).unwrap(), sys.window());
        let s = sys.weyl_apply(1, 0).unwrap();
        assert!((cnorm2(&s) - cnorm2(sys.window())).abs() < 1e-14);
        assert_eq!(s[3], sys.window()[0]);
        assert!(matches!(sys.weyl_apply(4, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(sys.weyl_apply(0, 6), Err(Error::IndexOutOfRange { .. })));
        for (n, m, n2, m2) in [(1, 2, 3, 5), (2, 5, 1, 1), (3, 3, 3, 4)] {
            let lhs = sys.weyl_on(&sys.weyl_apply(n2, m2).unwrap(), n, m);
            let rhs = sys.weyl_on(sys.window(), n + n2, m + m2);
            let c = sys.compose_phase(n, m2);
            for (l, r) in lhs.iter().zip(&rhs) {
                assert!((l - c * r).norm() < 1e-13);
            }
            assert!((c.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn weyl_is_isometry() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let sys = GaborSystem::new(10, 2, 5, random_window(&mut rng, 10)).unwrap();
        let g2 = cnorm2(sys.window());
        for v in sys.vectors() {
            assert!((cnorm2(&v) - g2).abs() < 1e-13 * g2);
        }
    }

    #[test]
    fn frame_bound_examples() {
        let delta = GaborSystem::new(8, 1, 8, window_preset::<f64>("delta", 8).unwrap()).unwrap();
        let b = delta.frame_bounds();
        assert!((b.lower - 8.0).abs() < 1e-12 && (b.upper - 8.0).abs() < 1e-12);

        let b = painless().frame_bounds();
        assert!((b.lower - 8.0).abs() < 1e-12 && (b.upper - 8.0).abs() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let single = GaborSystem::new(8, 8, 1, random_window(&mut rng, 8)).unwrap();
        assert_eq!(single.len(), 1);
        assert!(!single.frame_bounds().is_frame());
    }

    #[test]
    fn heil_walnut_examples() {
        let hw = painless().heil_walnut_check();
        assert!(hw.applicable && hw.matches);
        assert_eq!((hw.alpha, hw.beta), (2.0, 2.0));
        assert_eq!(hw.predicted, [8.0, 8.0]);

        let gap = GaborSystem::new(8, 2, 4, window_preset::<f64>("indicator:1", 8).unwrap()).unwrap();
        let hw = gap.heil_walnut_check();
        assert!(hw.applicable && hw.alpha == 0.0);
        assert!(hw.computed[0] < 1e-10);

        let long = GaborSystem::new(8, 2, 2, window_preset::<f64>("indicator:5", 8).unwrap()).unwrap();
        assert!(!long.heil_walnut_check().applicable);
    }

    #[test]
    fn support_len_is_cyclic() {
        let mut w = vec![C::zero(); 8];
        w[7] = C::new(1.0, 0.0);
        w[1] = C::new(1.0, 0.0);
        let sys = GaborSystem::new(8, 1, 8, w).unwrap();
        assert_eq!(sys.support_len(), 3);
        let zero = GaborSystem::new(4, 1, 4, vec![C::zero(); 4]).unwrap();
        assert_eq!(zero.support_len(), 0);
    }

    #[test]
    fn painless_frame_operator_is_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for (n, a, m, supp) in [(8, 2, 4, 4), (12, 3, 6, 5), (12, 2, 4, 3), (16, 4, 8, 8)] {
            let mut w = random_window(&mut rng, n);
            for z in w.iter_mut().skip(supp) {
                *z = C::zero();
            }
            let sys = GaborSystem::new(n, a, m, w).unwrap();
            assert!(sys.heil_walnut_check().applicable);
            let s = sys.frame_matrix();
            let trace = s.trace().re;
            assert!(s.off_diagonal_norm() <= 1e-11 * trace);
            for (t, gt) in sys.coverage().iter().enumerate() {
                assert!((s[(t, t)].re - m as f64 * gt).abs() < 1e-12 * trace);
            }
        }
    }

    #[test]
    fn frame_operator_commutes_with_lattice() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let sys = GaborSystem::new(12, 3, 4, random_window(&mut rng, 12)).unwrap();
        let s = sys.frame_matrix();
        let v = random_window(&mut rng, 12);
        for (k, m) in [(1, 0), (2, 3), (3, 1)] {
            let lhs = s.apply(&sys.weyl_on(&v, k, m));
            let rhs = sys.weyl_on(&s.apply(&v), k, m);
            for (l, r) in lhs.iter().zip(&rhs) {
                assert!((l - r).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn bc_gabor_examples() {
        let ind = window_preset::<f64>("indicator:4", 8).unwrap();
        let lat = HyperbolicLattice::from_counts(2, 4, 2, 4).unwrap();
        let sys = bc_gabor_system(&lat, ind.clone(), ind.clone(), 8).unwrap();
        let r = sys.report();
        let single = painless().frame_bounds();
        assert!((r.lower - single.lower).abs() < 1e-12 && (r.upper - single.upper).abs() < 1e-12);

        // plus tight at 8; minus tight at 2, enumerated twice
        let lat = HyperbolicLattice::from_counts(2, 4, 4, 4).unwrap();
        let faint: Vec<_> = ind.iter().map(|z| z * 0.5f64.sqrt()).collect();
        let sys = bc_gabor_system(&lat, ind.clone(), faint, 8).unwrap();
        let r = sys.report();
        assert!((r.lower - 4.0).abs() < 1e-12 && (r.upper - 8.0).abs() < 1e-12 && !r.is_tight);
        assert!(sys.analysis().bounds_match_components);
        assert_eq!(sys.multiplicity(Component::Minus), 2);

        let gap = window_preset::<f64>("indicator:1", 8).unwrap();
        let lat = HyperbolicLattice::from_counts(2, 4, 2, 4).unwrap();
        assert!(!bc_gabor_system(&lat, gap, ind.clone(), 8).unwrap().report().is_frame);

        let lat = HyperbolicLattice::from_counts(3, 4, 2, 4).unwrap();
        assert!(matches!(bc_gabor_system(&lat, ind.clone(), ind.clone(), 8), Err(Error::IncompatibleLattice(_))));
        let lat = HyperbolicLattice::new(Hyperbolic::new(1.5, 2.0), Hyperbolic::new(0.25, 0.25)).unwrap();
        assert!(bc_gabor_system(&lat, ind.clone(), ind, 8).is_err());
        assert!(HyperbolicLattice::<f64>::new(Hyperbolic::new(-1.0, 2.0), Hyperbolic::new(1.0, 1.0)).is_err());
    }

    #[test]
    fn bc_bounds_are_component_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for (n, a, mp, c, mm) in [(8, 2, 4, 2, 8), (12, 3, 6, 6, 6), (6, 1, 3, 3, 6), (8, 4, 8, 2, 4)] {
            let sys = BcGaborSystem::new(
                GaborSystem::new(n, a, mp, random_window(&mut rng, n)).unwrap(),
                GaborSystem::new(n, c, mm, random_window(&mut rng, n)).unwrap(),
            )
            .unwrap();
            assert!(sys.analysis().bounds_match_components);
        }
    }

    #[test]
    fn critical_density_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // critical lattices a = M = 4 on both sides; an even window would have a Zak zero
        let plus = GaborSystem::new(8, 4, 4, window_preset("exponential:0.7", 8).unwrap()).unwrap();
        let minus = GaborSystem::new(8, 4, 4, random_window(&mut rng, 8)).unwrap();
        let sys = BcGaborSystem::new(plus.clone(), minus).unwrap();
        let crit = critical_density_exactness(&sys).unwrap();
        assert!(crit.plus_critical && crit.minus_critical && crit.exact && crit.prediction_holds);

        // a critical lattice enumerated twice is no longer critical
        let minus = GaborSystem::new(8, 2, 4, random_window(&mut rng, 8)).unwrap();
        let sys = BcGaborSystem::new(plus, minus).unwrap();
        let crit = critical_density_exactness(&sys).unwrap();
        assert!(!crit.plus_critical && !crit.exact);
        assert_eq!(sys.family().n_exact().unwrap(), (0..16).collect::<Vec<_>>());

        // both doubly oversampled, same structure: not exact
        let w = random_window(&mut rng, 8);
        let sys = BcGaborSystem::new(
            GaborSystem::new(8, 2, 8, w.clone()).unwrap(),
            GaborSystem::new(8, 2, 8, w).unwrap(),
        )
        .unwrap();
        let crit = critical_density_exactness(&sys).unwrap();
        assert!(!crit.exact && crit.n_exact.len() == sys.family().len());

        let gap = GaborSystem::<f64>::new(8, 2, 4, window_preset("indicator:1", 8).unwrap()).unwrap();
        let sys = BcGaborSystem::new(gap.clone(), gap).unwrap();
        assert!(matches!(critical_density_exactness(&sys), Err(Error::NotAFrame { .. })));
    }

    #[test]
    fn oversampled_orbits_are_all_removable() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let sys = BcGaborSystem::new(
            GaborSystem::new(6, 1, 3, random_window(&mut rng, 6)).unwrap(),
            GaborSystem::new(6, 3, 6, random_window(&mut rng, 6)).unwrap(),
        )
        .unwrap();
        let (p, m) = removable_sets(&sys);
        assert!(p.len() == sys.family().len() || p.is_empty());
        assert!(m.len() == sys.family().len() || m.is_empty());
    }

    #[test]
    fn presets() {
        let g = window_preset::<f64>("gaussian:2", 8).unwrap();
        assert_eq!(g[0].re, 1.0);
        assert!((g[1].re - g[7].re).abs() < 1e-15);
        assert!(window_preset::<f64>("indicator:9", 8).is_err());
        assert!(window_preset::<f64>("hann", 8).is_err());
        assert!(window_preset::<f64>("gaussian:-1", 8).is_err());
        let spec: WindowSpec = serde_json::from_str("\"delta\"").unwrap();
        assert_eq!(spec.resolve::<f64>(4).unwrap()[0], C::new(1.0, 0.0));
        let spec: WindowSpec = serde_json::from_str("[[1,0],[0,1]]").unwrap();
        assert_eq!(spec.resolve::<f64>(2).unwrap()[1], C::new(0.0, 1.0));
        assert!(spec.resolve::<f64>(3).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(GaborSystem::<f64>::new(8, 3, 4, vec![C::zero(); 8]).is_err());
        assert!(GaborSystem::<f64>::new(8, 2, 3, vec![C::zero(); 8]).is_err());
        assert!(matches!(GaborSystem::<f64>::new(8, 2, 4, vec![C::zero(); 7]), Err(Error::LengthMismatch { .. })));
        let a = GaborSystem::<f64>::new(8, 2, 4, vec![C::zero(); 8]).unwrap();
        let b = GaborSystem::<f64>::new(4, 2, 4, vec![C::zero(); 4]).unwrap();
        assert!(BcGaborSystem::new(a.clone(), b).is_err());
        let c = GaborSystem::<f64>::new(12, 4, 3, vec![C::zero(); 12]).unwrap();
        let d = GaborSystem::<f64>::new(12, 3, 4, vec![C::zero(); 12]).unwrap();
        assert!(matches!(BcGaborSystem::new(c, d), Err(Error::IncompatibleLattice(_))));
    }
}
