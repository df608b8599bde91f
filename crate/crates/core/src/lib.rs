//! Certified arbitrary-precision evaluation of D-finite functions (solutions
//! of linear ODEs with polynomial coefficients) and P-recursive sequences.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact`]: Gaussian rationals, polynomials, jets, matrices, product trees;
//! - [`model`]: problem ingestion (ODEs, recurrences), coefficient recurrences,
//!   first-order matrix form, certified convergence radii;
//! - [`binsplit`]: binary-splitting evaluation of P-recursive terms and
//!   truncated series, including the jet variant that carries derivatives;
//! - [`bounds`]: majorant series, truncation orders, Frobenius norms, error
//!   budgets;
//! - [`continuation`]: path subdivision, transition matrices, bit-burst paths,
//!   and the top-level certified evaluator;
//! - [`approx`]: precomputed certified polynomial approximations on disks with
//!   a dispatching evaluator and plot output;
//! - [`text`]: exact rational parsing and certified decimal printing.
//!
//! All values are immutable and all operations are pure; with the default
//! `parallel` feature the product trees evaluate their halves on a rayon
//! pool, without changing any result.

pub mod approx;
pub mod binsplit;
pub mod bounds;
pub mod continuation;
pub mod error;
pub mod exact;
pub mod model;
pub mod text;

pub use error::{Error, Result};
