//! Bicomplex frame theory at desk scale.
//!
//! The crate models bicomplex numbers `Z = α e₊ + β e₋`, finite bicomplex Hilbert modules
//! `ℂ^d e₊ ⊕ ℂ^d e₋`, and frames in them. A bicomplex family is a frame exactly when both
//! idempotent component families are frames, and its optimal bounds are
//! `A = min(a⁺, a⁻)`, `B = max(b⁺, b⁻)`. Around that characterization the crate provides
//! frame classification ([`frame`]), frame operators and canonical duals ([`operator`]),
//! discrete Weyl–Heisenberg systems on `ℤ_N` ([`gabor`]) and the hyperbolic-plane
//! system built from Hermite functions ([`psi`]).
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`); the `*64` aliases
//! below fix the double-precision types used by the command-line tool.
//!
//! ```
//! use bcframe::{fixtures, FrameFamily64};
//!
//! let fam: FrameFamily64 = fixtures::counterexample_cexp(3);
//! let r = fam.report();
//! assert!(r.is_frame && r.is_exact && !r.is_riesz);
//! assert_eq!((r.lower, r.upper), (1.0, 2.0));
//! ```

// `!(x > 0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bicomplex;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod function_space;
pub mod gabor;
pub mod hermite;
pub mod hilbert;
pub mod linalg;
pub mod operator;
pub mod psi;
pub mod quadrature;
pub mod scalar;
pub mod selftest;

pub use bicomplex::{Bicomplex, Hyperbolic};
pub use error::{Error, Result};
pub use frame::{FrameFamily, FrameReport};
pub use hilbert::{BcVector, Component};
pub use operator::{BcFrameOperator, CoefficientSequence};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type Bicomplex64 = Bicomplex<f64>;
pub type Hyperbolic64 = Hyperbolic<f64>;
pub type BcVector64 = BcVector<f64>;
pub type FrameFamily64 = FrameFamily<f64>;
pub type FrameReport64 = FrameReport<f64>;
pub type BcFrameOperator64 = BcFrameOperator<f64>;
pub type GaborSystem64 = gabor::GaborSystem<f64>;
pub type BcGaborSystem64 = gabor::BcGaborSystem<f64>;
