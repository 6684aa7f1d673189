//! Zeta and L-functions at desk scale.
//!
//! The crate is organised around a handful of independent families of zeta
//! functions, each realised exactly or to a stated floating tolerance:
//!
//! * [`ff_curves`]: point counts of odd-degree hyperelliptic curves over finite
//!   fields and exact recovery of the zeta numerator `P(T)`.
//! * [`arith_equiv`]: splitting types of integer polynomials modulo primes,
//!   truncated Dedekind Euler products, and Gassmann's conjugacy-class criterion
//!   on explicit permutation groups.
//! * [`bc_system`]: the Bost–Connes system over `Q` at finite level, its
//!   partition function and Gibbs states.
//! * [`dirichlet`]: Dirichlet characters and their L-series for real `s > 1`.
//! * [`spectral_torus`]: Epstein zeta of binary quadratic forms, Eisenstein
//!   series, spectral zeta of flat 2-tori and a length bound between tori.
//!
//! The shared floating kernels (Hurwitz zeta, dilogarithm, incomplete gamma)
//! live in [`numeric`]. With the default `parallel` feature the data-parallel
//! loops run on rayon; without it every loop runs sequentially and produces
//! the same results.

pub mod arith_equiv;
pub mod bc_system;
pub mod dirichlet;
mod error;
pub mod ff_curves;
pub mod fp_poly;
pub mod numeric;
pub mod par;
pub mod spectral_torus;

pub use error::{Error, Result};
pub use numeric::{ComplexValue, PrecisionPolicy};
