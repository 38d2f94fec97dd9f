//! Dense complex matrices and a cyclic Jacobi eigensolver for Hermitian matrices.

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::{abs2, Real};

/// Off-diagonal Frobenius mass, relative to the Frobenius norm, at which Jacobi stops.
pub const JACOBI_TOL: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// `Σ v vᴴ` over the given vectors, each of length `n`.
    pub fn outer_sum<'a, I>(n: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a [Complex<T>]>,
    {
        let mut m = Self::zeros(n);
        for v in vectors {
            debug_assert_eq!(v.len(), n);
            for i in 0..n {
                if v[i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    m.data[i * n + j] += v[i] * v[j].conj();
                }
            }
        }
        m
    }

    /// Gram matrix `G[i][j] = ⟨v_j, v_i⟩`, i.e. `Vᴴ V` for columns `v_i`.
    pub fn gram(vectors: &[&[Complex<T>]]) -> Self {
        let n = vectors.len();
        Self::from_fn(n, |i, j| crate::scalar::cdot(vectors[j], vectors[i]))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn apply(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        debug_assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(x)
                    .fold(Complex::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn frobenius(&self) -> T {
        self.data.iter().map(|z| abs2(*z)).sum::<T>().sqrt()
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.n).map(|i| self[(i, i)]).fold(Complex::zero(), |a, b| a + b)
    }

    /// Frobenius norm of the off-diagonal part.
    pub fn off_diagonal_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += abs2(self[(i, j)]);
                }
            }
        }
        s.sqrt()
    }

    /// `max |A[i][j] - conj(A[j][i])|`.
    pub fn max_asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.n {
            for j in 0..=i {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
    ///
    /// Only the Hermitian part `(A + Aᴴ)/2` is used.
    pub fn hermitian_eigen(&self) -> HermitianEigen<T> {
        jacobi_eigen(self)
    }
}

impl<T> std::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.n + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.n + j]
    }
}

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors (columns).
#[derive(Clone, Debug)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: CMatrix<T>,
    pub sweeps: usize,
    pub converged: bool,
}

impl<T: Real> HermitianEigen<T> {
    pub fn min(&self) -> T {
        self.values.first().copied().unwrap_or_else(T::zero)
    }

    pub fn max(&self) -> T {
        self.values.last().copied().unwrap_or_else(T::zero)
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex<T>> {
        self.vectors.column(k)
    }

    /// `V f(Λ) Vᴴ`.
    pub fn spectral_map(&self, f: impl Fn(T) -> T) -> CMatrix<T> {
        let n = self.vectors.dim();
        let fv: Vec<T> = self.values.iter().map(|&l| f(l)).collect();
        CMatrix::from_fn(n, |i, j| {
            (0..n).fold(Complex::zero(), |acc, k| {
                acc + self.vectors[(i, k)] * self.vectors[(j, k)].conj() * fv[k]
            })
        })
    }
}

fn jacobi_eigen<T: Real>(input: &CMatrix<T>) -> HermitianEigen<T> {
    let n = input.dim();
    let mut a = CMatrix::from_fn(n, |i, j| (input[(i, j)] + input[(j, i)].conj()) * T::half());
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius();
    let tol = T::tol(JACOBI_TOL) * scale;
    let mut sweeps = 0;
    let mut converged = scale == T::zero() || a.off_diagonal_norm() <= tol;

    while !converged && sweeps < JACOBI_MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        converged = a.off_diagonal_norm() <= tol;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalues"));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = CMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    HermitianEigen {
        values,
        vectors,
        sweeps,
        converged,
    }
}

/// Annihilates `a[p][q]` by the unitary `U = D R` where `D = diag(1, e^{-iφ})` makes the
/// pivot real and `R` is the real plane rotation diagonalizing the resulting 2×2 block.
fn rotate<T: Real>(a: &mut CMatrix<T>, v: &mut CMatrix<T>, p: usize, q: usize) {
    let w = a[(p, q)];
    let r = w.norm();
    if r <= T::min_positive_value() {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = w / r; // e^{iφ}
    let theta = T::half() * (T::two() * r).atan2(app - aqq);
    let (s, c) = theta.sin_cos();
    let n = a.dim();

    // U columns in the (p, q) plane: u_p = (c, s e^{-iφ}), u_q = (-s, c e^{-iφ}).
    let upp = Complex::new(c, T::zero());
    let uqp = phase.conj() * s;
    let upq = Complex::new(-s, T::zero());
    let uqq = phase.conj() * c;

    // A ← A U
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * upp + akq * uqp;
        a[(k, q)] = akp * upq + akq * uqq;
    }
    // A ← Uᴴ A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = upp.conj() * apk + uqp.conj() * aqk;
        a[(q, k)] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)].im = T::zero();
    a[(q, q)].im = T::zero();

    // V ← V U
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * upp + vkq * uqp;
        v[(k, q)] = vkp * upq + vkq * uqq;
    }
}
