//! Sampled bicomplex-valued functions on `𝔹ℂ ≅ ℝ⁴` with the Gaussian-weighted inner product
//! `⟨f, g⟩ = ∫ ⟨f(Z), g(Z)⟩ e^{-ν|Z|²} dλ(Z)`.
//!
//! Integrals use tensor-product trapezoid rules. A grid lives either in cartesian
//! coordinates `(Re z1, Im z1, Re z2, Im z2)` or in idempotent coordinates
//! `(Re α, Im α, Re β, Im β)`. The map `(z1, z2) ↦ (α, β) = (z1 - i z2, z1 + i z2)` has
//! real Jacobian 4, and the idempotent grids carry the measure `dλ(α, β)/4`, so the two
//! coordinate systems integrate the same functions to the same values.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::hilbert::Component;
use crate::quadrature::trapezoid;
use crate::scalar::{abs2, Real};

/// JSON grid description: `{"box": [lo, hi], "points_per_axis": n, "nu": ν}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec<T> {
    #[serde(rename = "box")]
    pub bounds: [T; 2],
    pub points_per_axis: usize,
    pub nu: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coordinates {
    Cartesian,
    Idempotent,
}

/// Quadrature nodes in ℝ⁴ with positive weights and the Gaussian parameter `ν ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGrid<T> {
    nodes: Vec<[T; 4]>,
    weights: Vec<T>,
    nu: T,
    coordinates: Coordinates,
}

impl<T: Real> WeightedGrid<T> {
    pub fn new(nodes: Vec<[T; 4]>, weights: Vec<T>, nu: T, coordinates: Coordinates) -> Result<Self> {
        if nodes.len() != weights.len() {
            return Err(Error::LengthMismatch {
                expected: nodes.len(),
                found: weights.len(),
            });
        }
        if nodes.is_empty() {
            return Err(Error::EmptySequence("quadrature grid"));
        }
        if weights.iter().any(|&w| !(w > T::zero())) {
            return Err(Error::InvalidInput("quadrature weights must be positive".into()));
        }
        if !(nu >= T::zero()) {
            return Err(Error::InvalidInput(format!("Gaussian parameter must be ≥ 0, got {nu}")));
        }
        Ok(Self {
            nodes,
            weights,
            nu,
            coordinates,
        })
    }

    /// Tensor trapezoid grid on `[lo, hi]⁴` in cartesian coordinates.
    pub fn cartesian(spec: &GridSpec<T>) -> Result<Self> {
        let (nodes, weights) = tensor4(spec, T::one())?;
        Self::new(nodes, weights, spec.nu, Coordinates::Cartesian)
    }

    /// Tensor trapezoid grid on `[lo, hi]⁴` in idempotent coordinates `(α, β)`.
    pub fn idempotent(spec: &GridSpec<T>) -> Result<Self> {
        let (nodes, weights) = tensor4(spec, T::lit(0.25))?;
        Self::new(nodes, weights, spec.nu, Coordinates::Idempotent)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nu(&self) -> T {
        self.nu
    }

    pub fn coordinates(&self) -> Coordinates {
        self.coordinates
    }

    pub fn nodes(&self) -> &[[T; 4]] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// The bicomplex number sitting at node `k`.
    pub fn point(&self, k: usize) -> Bicomplex<T> {
        let [a, b, c, d] = self.nodes[k];
        match self.coordinates {
            Coordinates::Cartesian => Bicomplex::new(Complex::new(a, b), Complex::new(c, d)),
            Coordinates::Idempotent => Bicomplex::from_idempotent(Complex::new(a, b), Complex::new(c, d)),
        }
    }

    /// Gaussian factor at node `k`: `e^{-ν|Z|²}`, i.e. `e^{-(ν/2)(|α|² + |β|²)}` in
    /// idempotent coordinates.
    pub fn gaussian(&self, k: usize) -> T {
        let r2: T = self.nodes[k].iter().map(|&x| x * x).sum();
        let rate = match self.coordinates {
            Coordinates::Cartesian => self.nu,
            Coordinates::Idempotent => self.nu * T::half(),
        };
        (-rate * r2).exp()
    }

    /// Quadrature weight times the Gaussian factor.
    fn measure(&self, k: usize) -> T {
        self.weights[k] * self.gaussian(k)
    }

    pub fn sample(&self, f: impl Fn(Bicomplex<T>) -> Bicomplex<T>) -> BcFunctionSample<'_, T> {
        BcFunctionSample {
            grid: self,
            values: (0..self.len()).map(|k| f(self.point(k))).collect(),
        }
    }
}

fn tensor4<T: Real>(spec: &GridSpec<T>, weight_scale: T) -> Result<(Vec<[T; 4]>, Vec<T>)> {
    let (x, w) = trapezoid(spec.bounds[0], spec.bounds[1], spec.points_per_axis)?;
    let n = x.len();
    let mut nodes = Vec::with_capacity(n.pow(4));
    let mut weights = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    nodes.push([x[i], x[j], x[k], x[l]]);
                    weights.push(w[i] * w[j] * w[k] * w[l] * weight_scale);
                }
            }
        }
    }
    Ok((nodes, weights))
}

/// Values of a bicomplex function at every node of a grid.
#[derive(Clone, Debug)]
pub struct BcFunctionSample<'g, T> {
    grid: &'g WeightedGrid<T>,
    values: Vec<Bicomplex<T>>,
}

impl<'g, T: Real> BcFunctionSample<'g, T> {
    pub fn new(grid: &'g WeightedGrid<T>, values: Vec<Bicomplex<T>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                found: values.len(),
            });
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &'g WeightedGrid<T> {
        self.grid
    }

    pub fn values(&self) -> &[Bicomplex<T>] {
        &self.values
    }

    fn same_grid(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.grid, other.grid) || self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// Component values `f±(Z_k)`.
    pub fn component(&self, c: Component) -> Vec<Complex<T>> {
        self.values
            .iter()
            .map(|z| match c {
                Component::Plus => z.alpha(),
                Component::Minus => z.beta(),
            })
            .collect()
    }

    /// `Σ_k w_k ⟨f(Z_k), g(Z_k)⟩ e^{-ν|Z_k|²}`.
    pub fn inner(&self, other: &Self) -> Result<Bicomplex<T>> {
        self.same_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(k, (f, g))| (*f * g.conj_star()).scale(Complex::new(self.grid.measure(k), T::zero())))
            .sum())
    }

    /// `⟨f±, g±⟩_{L^{2,ν}}` for one idempotent component, as a complex integral.
    pub fn component_inner(&self, other: &Self, c: Component) -> Result<Complex<T>> {
        self.same_grid(other)?;
        let f = self.component(c);
        let g = other.component(c);
        Ok(f.iter()
            .zip(&g)
            .enumerate()
            .fold(Complex::new(T::zero(), T::zero()), |acc, (k, (a, b))| {
                acc + a * b.conj() * self.grid.measure(k)
            }))
    }

    /// `⟨f₁, g₁⟩ e₊ + ⟨f₂, g₂⟩ e₋` from two complex integrals.
    pub fn inner_split(&self, other: &Self) -> Result<Bicomplex<T>> {
        Ok(Bicomplex::from_idempotent(
            self.component_inner(other, Component::Plus)?,
            self.component_inner(other, Component::Minus)?,
        ))
    }

    /// `½(‖f₁‖² + ‖f₂‖²)` from the component integrals.
    pub fn norm_sqr_split(&self) -> T {
        let plus: T = self.component_norm_sqr(Component::Plus);
        let minus: T = self.component_norm_sqr(Component::Minus);
        (plus + minus) * T::half()
    }

    pub fn component_norm_sqr(&self, c: Component) -> T {
        self.component(c)
            .iter()
            .enumerate()
            .map(|(k, z)| abs2(*z) * self.grid.measure(k))
            .sum()
    }

    /// `∫ |f(Z)|² e^{-ν|Z|²} dλ` with the ℝ⁴ modulus taken on the cartesian coefficients.
    pub fn norm_sqr_direct(&self) -> T {
        self.values
            .iter()
            .enumerate()
            .map(|(k, z)| {
                let (z1, z2) = z.cartesian();
                (abs2(z1) + abs2(z2)) * self.grid.measure(k)
            })
            .sum()
    }

    /// Rewrites `f(α e₊ + β e₋) = φ⁺(α, β) e₊ + φ⁻(α, β) e₋` on the image of the cartesian
    /// grid under the exact linear change of variables.
    pub fn idempotent_change_of_variables(&self) -> Result<IdempotentSample<T>> {
        if self.grid.coordinates != Coordinates::Cartesian {
            return Err(Error::GridMismatch);
        }
        let nodes = self
            .grid
            .nodes
            .iter()
            .map(|&[x0, x1, x2, x3]| [x0 + x3, x1 - x2, x0 - x3, x1 + x2])
            .collect();
        // The image cell has measure 4w in dλ(α, β); with the dλ/4 normalisation the
        // weight is unchanged.
        let grid = WeightedGrid::new(nodes, self.grid.weights.clone(), self.grid.nu, Coordinates::Idempotent)?;
        Ok(IdempotentSample {
            grid,
            phi_plus: self.component(Component::Plus),
            phi_minus: self.component(Component::Minus),
        })
    }
}

/// `φ±` sampled on an idempotent-coordinate grid with weight `e^{-(ν/2)(|α|²+|β|²)}`.
#[derive(Clone, Debug)]
pub struct IdempotentSample<T> {
    pub grid: WeightedGrid<T>,
    pub phi_plus: Vec<Complex<T>>,
    pub phi_minus: Vec<Complex<T>>,
}

impl<T: Real> IdempotentSample<T> {
    /// `‖φ±‖²_{L^{2,ν/2}}`.
    pub fn norm_sqr(&self, c: Component) -> T {
        let phi = match c {
            Component::Plus => &self.phi_plus,
            Component::Minus => &self.phi_minus,
        };
        phi.iter()
            .enumerate()
            .map(|(k, z)| abs2(*z) * self.grid.measure(k))
            .sum()
    }

    /// `½(‖φ⁺‖² + ‖φ⁻‖²)`.
    pub fn bc_norm_sqr(&self) -> T {
        (self.norm_sqr(Component::Plus) + self.norm_sqr(Component::Minus)) * T::half()
    }

    /// Checks that every mapped node reproduces the bicomplex point of the source grid.
    pub fn max_node_error(&self, source: &WeightedGrid<T>) -> T {
        (0..source.len())
            .map(|k| source.point(k).distance(&self.grid.point(k)))
            .fold(T::zero(), T::max)
    }
}
