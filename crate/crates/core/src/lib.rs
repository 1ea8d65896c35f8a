//! Numerical differential geometry on four-manifolds with boundary.
//!
//! The crate computes curvature tensors (Riemann, Ricci, Schouten, Weyl,
//! Bach), boundary geometry (second fundamental form, S-tensor, the
//! Chern–Gauss–Bonnet boundary integrand), conformal invariants, and the
//! Fefferman–Graham expansion of conformally compact metrics, all from
//! coordinate expressions for the metric. Derivatives are exact Taylor-mode
//! jets; integration is tensor-product Gauss–Legendre.
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature is on
//! by default and `parallel` enables rayon-backed node evaluation.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod boundary;
pub mod catalog;
pub mod cce;
pub mod conformal;
pub mod curvature;
pub mod error;
pub mod expr;
pub mod fit;
pub mod invariants;
pub mod jet;
pub mod metric;
pub mod model;
pub mod quadrature;
pub mod rng;
pub mod tensor;

mod float;

pub use error::Error;
pub use jet::Jet;
