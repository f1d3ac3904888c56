//! Exact free-fermion six-vertex model with a reflecting boundary.
//!
//! The crate evaluates wavefunctions and dual wavefunctions of the model by
//! direct lattice contraction over exact scalars — arbitrary-precision
//! rationals or Laurent polynomials in the deformation parameter t — and
//! provides the symplectic Schur functions (ordinary and factorial) plus
//! the closed-form matrix elements these contractions must reproduce.

pub mod closed_form;
pub mod error;
pub mod lattice;
pub mod laurent;
pub mod matrix;
pub mod rational;
pub mod scalar;
pub mod schur;
pub mod wavefunction;
pub mod young;

pub use error::{Error, Result};
pub use laurent::LaurentT;
pub use rational::Rational;
pub use scalar::Scalar;
