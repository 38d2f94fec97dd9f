//! The hyperbolic-plane system
//! `ψ_{n,m}(x e₊ + y e₋) = e^{-y²/2} [W_{na,mb} g](x) e₊ + e^{-x²/2} [W_{nc,md} h](y) e₋`
//! on `L²_𝔹ℂ(𝔻)`, sampled on a tensor trapezoid grid.
//!
//! Line Gabor atoms are `W_{na,mb} g (x) = e^{i m b x} g(x − n a)` for `|n| ≤ n_max`,
//! `|m| ≤ m_max`. The system is Bessel, but every plus atom is a multiple of `e^{-y²/2}` in
//! `y`, so test functions odd in `y` are invisible to it and no lower frame bound exists.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::{hermite_functions, orthonormality_residual};
use crate::quadrature::trapezoid;
use crate::scalar::{abs2, Real};

/// Hermite orthonormality residual above which results are refused.
pub const QUADRATURE_LIMIT: f64 = 1e-6;
/// Witness inner products must stay below this magnitude.
pub const WITNESS_TOL: f64 = 1e-6;
/// Relative agreement of the two sides of the `v = 0` identity.
pub const IDENTITY_TOL: f64 = 1e-6;
/// Largest relative change of the Bessel constant under grid refinement.
pub const REFINEMENT_TOL: f64 = 1e-2;

/// Shift, modulation and Gaussian window width of one line system.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineGabor {
    /// Time step.
    pub a: f64,
    /// Modulation step in `e^{i m b x}`.
    pub b: f64,
    /// Window `exp(−x²/(2σ²))`.
    pub sigma: f64,
}

/// Parameters of the sampled system.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PsiSpec {
    #[serde(default = "default_half_width")]
    pub half_width: f64,
    #[serde(default = "default_points")]
    pub points: usize,
    pub plus: LineGabor,
    pub minus: LineGabor,
    #[serde(default = "default_n_max")]
    pub n_max: usize,
    #[serde(default = "default_m_max")]
    pub m_max: usize,
    /// Highest Hermite order used by the witnesses.
    #[serde(default = "default_order_cap")]
    pub order_cap: usize,
}

fn default_half_width() -> f64 {
    8.0
}
fn default_points() -> usize {
    257
}
fn default_n_max() -> usize {
    4
}
fn default_m_max() -> usize {
    6
}
fn default_order_cap() -> usize {
    8
}

impl Default for PsiSpec {
    fn default() -> Self {
        Self {
            half_width: default_half_width(),
            points: default_points(),
            plus: LineGabor {
                a: 1.5,
                b: 2.0,
                sigma: 1.0,
            },
            minus: LineGabor {
                a: 1.2,
                b: 2.5,
                sigma: 0.8,
            },
            n_max: default_n_max(),
            m_max: default_m_max(),
            order_cap: default_order_cap(),
        }
    }
}

impl PsiSpec {
    /// Same system on a grid with `2·points − 1` nodes.
    pub fn refined(&self) -> Self {
        Self {
            points: 2 * self.points - 1,
            ..self.clone()
        }
    }
}

/// Sampled system with precomputed line atoms.
#[derive(Clone, Debug)]
pub struct HyperbolicPlaneSystem<T> {
    spec: PsiSpec,
    nodes: Vec<T>,
    weights: Vec<T>,
    /// `e^{-x²/2}` on the nodes.
    damp: Vec<T>,
    plus_atoms: Vec<Vec<Complex<T>>>,
    minus_atoms: Vec<Vec<Complex<T>>>,
    labels: Vec<(i64, i64)>,
}

fn line_atoms<T: Real>(x: &[T], p: &LineGabor, n_max: usize, m_max: usize) -> Vec<Vec<Complex<T>>> {
    let (a, b, s) = (T::lit(p.a), T::lit(p.b), T::lit(p.sigma));
    let mut out = Vec::new();
    for n in -(n_max as i64)..=n_max as i64 {
        for m in -(m_max as i64)..=m_max as i64 {
            let (nt, mt) = (T::lit(n as f64), T::lit(m as f64));
            out.push(
                x.iter()
                    .map(|&x| {
                        let u = (x - nt * a) / s;
                        Complex::from_polar((-u * u * T::half()).exp(), mt * b * x)
                    })
                    .collect(),
            );
        }
    }
    out
}

impl<T: Real> HyperbolicPlaneSystem<T> {
    pub fn new(spec: PsiSpec) -> Result<Self> {
        for p in [&spec.plus, &spec.minus] {
            if !(p.a > 0.0 && p.b > 0.0 && p.sigma > 0.0) {
                return Err(Error::InvalidInput(format!("line system parameters must be positive: {p:?}")));
            }
        }
        if !(spec.half_width > 0.0) {
            return Err(Error::InvalidInput("half_width must be positive".into()));
        }
        let (nodes, weights) = trapezoid(T::lit(-spec.half_width), T::lit(spec.half_width), spec.points)?;
        let damp = nodes.iter().map(|&x| (-x * x * T::half()).exp()).collect();
        let plus_atoms = line_atoms(&nodes, &spec.plus, spec.n_max, spec.m_max);
        let minus_atoms = line_atoms(&nodes, &spec.minus, spec.n_max, spec.m_max);
        let (nm, mm) = (spec.n_max as i64, spec.m_max as i64);
        let labels = (-nm..=nm).flat_map(|n| (-mm..=mm).map(move |m| (n, m))).collect();
        Ok(Self {
            spec,
            nodes,
            weights,
            damp,
            plus_atoms,
            minus_atoms,
            labels,
        })
    }

    pub fn spec(&self) -> &PsiSpec {
        &self.spec
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `(n, m)` of each atom.
    pub fn labels(&self) -> &[(i64, i64)] {
        &self.labels
    }

    /// Hermite orthonormality residual of the grid up to `order_cap`.
    pub fn quadrature_residual(&self) -> T {
        orthonormality_residual(self.spec.order_cap, &self.nodes, &self.weights)
    }

    fn require_resolution(&self) -> Result<T> {
        let r = self.quadrature_residual();
        if !(r <= T::lit(QUADRATURE_LIMIT)) {
            return Err(Error::QuadratureTooCoarse {
                residual: r.to_f64().unwrap_or(f64::NAN),
                limit: QUADRATURE_LIMIT,
            });
        }
        Ok(r)
    }

    /// `⟨Φ, ψ_{n,m}⟩` by direct double sums over the grid, returned as idempotent parts.
    /// `phi_plus[i][j]` and `phi_minus[i][j]` are samples at `(x_i, y_j)`.
    pub fn inner_products_2d(&self, phi_plus: &[Vec<Complex<T>>], phi_minus: &[Vec<Complex<T>>]) -> Vec<(Complex<T>, Complex<T>)> {
        let w = &self.weights;
        let n = self.nodes.len();
        (0..self.len())
            .map(|k| {
                let (gp, gm) = (&self.plus_atoms[k], &self.minus_atoms[k]);
                let mut p = Complex::zero();
                let mut q = Complex::zero();
                for i in 0..n {
                    for j in 0..n {
                        let ww = w[i] * w[j];
                        p += phi_plus[i][j] * (gp[i] * self.damp[j]).conj() * ww;
                        q += phi_minus[i][j] * (gm[j] * self.damp[i]).conj() * ww;
                    }
                }
                (p, q)
            })
            .collect()
    }

    /// `Σ |⟨Φ, ψ⟩|²` and `‖Φ‖²` using the tensor factorization
    /// `⟨Φ⁺, ψ⁺⟩ = ∫ P(x) conj(Wg(x)) dx`, `P(x) = ∫ Φ⁺(x, y) e^{-y²/2} dy`.
    pub fn frame_sum(&self, phi_plus: &[Vec<Complex<T>>], phi_minus: &[Vec<Complex<T>>]) -> (T, T) {
        let w = &self.weights;
        let n = self.nodes.len();
        let p: Vec<Complex<T>> = (0..n)
            .map(|i| (0..n).map(|j| phi_plus[i][j] * (w[j] * self.damp[j])).sum())
            .collect();
        let q: Vec<Complex<T>> = (0..n)
            .map(|j| (0..n).map(|i| phi_minus[i][j] * (w[i] * self.damp[i])).sum())
            .collect();
        let line = |f: &[Complex<T>], g: &[Complex<T>]| -> Complex<T> {
            (0..n).map(|i| f[i] * g[i].conj() * w[i]).sum()
        };
        let sum = (0..self.len())
            .map(|k| (abs2(line(&p, &self.plus_atoms[k])) + abs2(line(&q, &self.minus_atoms[k]))) * T::half())
            .sum();
        (sum, self.norm_sqr(phi_plus, phi_minus))
    }

    /// `‖Φ‖² = ½(‖Φ⁺‖² + ‖Φ⁻‖²)`.
    pub fn norm_sqr(&self, phi_plus: &[Vec<Complex<T>>], phi_minus: &[Vec<Complex<T>>]) -> T {
        let w = &self.weights;
        let n = self.nodes.len();
        let mut acc = T::zero();
        for i in 0..n {
            for j in 0..n {
                acc += (abs2(phi_plus[i][j]) + abs2(phi_minus[i][j])) * w[i] * w[j];
            }
        }
        acc * T::half()
    }

    /// Samples `f(x_i, y_j)`.
    pub fn sample(&self, f: impl Fn(T, T) -> Complex<T>) -> Vec<Vec<Complex<T>>> {
        self.nodes.iter().map(|&x| self.nodes.iter().map(|&y| f(x, y)).collect()).collect()
    }

    fn hermite_tensor(&self, h: &[Vec<T>], u: usize, v: usize) -> Vec<Vec<Complex<T>>> {
        let n = self.nodes.len();
        (0..n)
            .map(|i| (0..n).map(|j| Complex::new(h[u][i] * h[v][j], T::zero())).collect())
            .collect()
    }

    /// Ratios `Σ|⟨Φ, ψ⟩|² / ‖Φ‖²` over the fixed test panel.
    pub fn bessel_panel(&self) -> Vec<PanelEntry<T>> {
        panel::<T>()
            .into_iter()
            .map(|(name, fp, fm)| {
                let (sum, norm) = self.frame_sum(&self.sample(fp), &self.sample(fm));
                PanelEntry {
                    name,
                    sum,
                    norm_sqr: norm,
                    ratio: sum / norm,
                }
            })
            .collect()
    }

    /// Witnesses `Φ = (h_u⊗h_1) e₊ + (h_1⊗h_u) e₋`: all inner products vanish, `‖Φ‖ = 1`.
    pub fn witnesses(&self) -> Result<Vec<WitnessRow<T>>> {
        self.require_resolution()?;
        let cap = self.spec.order_cap;
        let h = hermite_functions(cap, &self.nodes);
        (0..=cap)
            .map(|u| {
                let fp = self.hermite_tensor(&h, u, 1);
                let fm = self.hermite_tensor(&h, 1, u);
                let ips = self.inner_products_2d(&fp, &fm);
                let max_inner = ips.iter().map(|(p, q)| p.norm().max(q.norm())).fold(T::zero(), T::max);
                let sum: T = ips.iter().map(|(p, q)| (abs2(*p) + abs2(*q)) * T::half()).sum();
                Ok(WitnessRow {
                    u,
                    v: 1,
                    max_inner,
                    frame_sum: sum,
                    norm: self.norm_sqr(&fp, &fm).sqrt(),
                })
            })
            .collect()
    }

    /// Both sides of `Σ|⟨h_u ⊗ e^{-y²/2}, W g ⊗ e^{-y²/2}⟩|² = π Σ|⟨h_u, W g⟩|²` for
    /// `u ≤ order_cap`; the left side by 2-D quadrature, the right by 1-D quadrature.
    pub fn identity_v0(&self) -> Result<Vec<IdentityRow<T>>> {
        self.require_resolution()?;
        let cap = self.spec.order_cap;
        let h = hermite_functions(cap, &self.nodes);
        let n = self.nodes.len();
        let zero = vec![vec![Complex::zero(); n]; n];
        (0..=cap)
            .map(|u| {
                let fp: Vec<Vec<Complex<T>>> = (0..n)
                    .map(|i| (0..n).map(|j| Complex::new(h[u][i] * self.damp[j], T::zero())).collect())
                    .collect();
                let lhs: T = self.inner_products_2d(&fp, &zero).iter().map(|(p, _)| abs2(*p)).sum();
                let rhs = T::PI()
                    * self
                        .plus_atoms
                        .iter()
                        .map(|g| abs2((0..n).map(|i| g[i].conj() * h[u][i] * self.weights[i]).sum::<Complex<T>>()))
                        .sum::<T>();
                let scale = lhs.abs().max(rhs.abs());
                Ok(IdentityRow {
                    u,
                    lhs,
                    rhs,
                    relative_error: if scale > T::zero() { (lhs - rhs).abs() / scale } else { T::zero() },
                })
            })
            .collect()
    }
}

type PanelFn<T> = Box<dyn Fn(T, T) -> Complex<T>>;

fn panel<T: Real>() -> Vec<(&'static str, PanelFn<T>, PanelFn<T>)> {
    let gauss = |x0: f64, y0: f64, s: f64, k: f64| -> PanelFn<T> {
        Box::new(move |x: T, y: T| {
            let (dx, dy) = (x - T::lit(x0), y - T::lit(y0));
            let r = (-(dx * dx + dy * dy) / (T::two() * T::lit(s * s))).exp();
            Complex::from_polar(r, T::lit(k) * x)
        })
    };
    vec![
        ("centered gaussian", gauss(0.0, 0.0, 1.0, 0.0), gauss(0.0, 0.0, 1.0, 0.0)),
        ("shifted gaussian", gauss(1.0, -0.5, 0.8, 0.0), gauss(-0.7, 0.3, 1.2, 0.0)),
        ("modulated gaussian", gauss(0.0, 0.0, 1.0, 2.0), gauss(0.5, 0.0, 0.9, -1.5)),
        ("plus only", gauss(0.3, 0.3, 0.7, 1.0), Box::new(|_, _| Complex::zero())),
        ("minus only", Box::new(|_, _| Complex::zero()), gauss(-0.4, 0.2, 1.1, 0.5)),
        (
            "hermite mix",
            Box::new(|x: T, y: T| Complex::new((T::one() + x * y) * (-(x * x + y * y) * T::half()).exp(), T::zero())),
            Box::new(|x: T, y: T| Complex::new((x - y * y) * (-(x * x + y * y) / T::lit(3.0)).exp(), T::zero())),
        ),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct PanelEntry<T> {
    pub name: &'static str,
    pub sum: T,
    pub norm_sqr: T,
    pub ratio: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRow<T> {
    pub u: usize,
    pub v: usize,
    /// Largest `|⟨Φ, ψ⟩|` component over the system.
    pub max_inner: T,
    pub frame_sum: T,
    pub norm: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityRow<T> {
    pub u: usize,
    pub lhs: T,
    pub rhs: T,
    pub relative_error: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct BesselEstimate<T> {
    pub constant: T,
    pub refined_constant: T,
    pub relative_change: T,
    pub panel: Vec<PanelEntry<T>>,
}

/// Full analysis: Bessel constant with refinement check, non-frame witnesses, `v = 0` identity.
#[derive(Clone, Debug, Serialize)]
pub struct PsiAnalysis<T> {
    pub spec: PsiSpec,
    pub atoms: usize,
    pub quadrature_residual: T,
    pub bessel: BesselEstimate<T>,
    pub witnesses: Vec<WitnessRow<T>>,
    pub identity: Vec<IdentityRow<T>>,
    /// Every panel ratio is finite and at most the reported constant.
    pub bessel_holds: bool,
    /// Some witness has unit norm and frame sum below `WITNESS_TOL²`.
    pub lower_bound_fails: bool,
}

pub fn psi_system_analysis<T: Real>(spec: &PsiSpec) -> Result<PsiAnalysis<T>> {
    let sys = HyperbolicPlaneSystem::<T>::new(spec.clone())?;
    let fine = HyperbolicPlaneSystem::<T>::new(spec.refined())?;
    let quadrature_residual = sys.require_resolution()?;
    let panel = sys.bessel_panel();
    let constant = panel.iter().map(|e| e.ratio).fold(T::zero(), T::max);
    let refined_constant = fine.bessel_panel().iter().map(|e| e.ratio).fold(T::zero(), T::max);
    let relative_change = (refined_constant - constant).abs() / constant.max(T::min_positive_value());
    let witnesses = sys.witnesses()?;
    let identity = sys.identity_v0()?;
    let tol = T::lit(WITNESS_TOL);
    Ok(PsiAnalysis {
        spec: spec.clone(),
        atoms: sys.len(),
        quadrature_residual,
        bessel_holds: constant.is_finite() && panel.iter().all(|e| e.ratio <= constant),
        lower_bound_fails: witnesses
            .iter()
            .any(|w| w.max_inner < tol && (w.norm - T::one()).abs() < T::lit(1e-8)),
        bessel: BesselEstimate {
            constant,
            refined_constant,
            relative_change,
            panel,
        },
        witnesses,
        identity,
    })
}
