//! Chebyshev polynomials of a discrete variable and their operator calculus
//! for spin-j systems.
//!
//! The scalar polynomials `f_lambda^(j)(m)` are dual to the Clebsch-Gordan
//! coefficients `C^{lambda 0}_{j m j -m}`; their operator forms
//! `f_lambda^(j)(n.J)` give orthonormal Hermitian bases for rotation
//! operators, projectors, transition probabilities (the Meckler
//! Fourier-Legendre series), the Stratonovich-Weyl kernel, and tomographic
//! reconstruction of spin density matrices.

pub mod angular;
pub mod cheb;
pub mod direction;
pub mod error;
pub mod factorial;
pub mod half;
pub mod operators;
pub mod recoupling;
pub mod tomography;
pub mod transitions;
pub mod verify;

pub use direction::UnitVector;
pub use error::{Error, Result};
pub use half::HalfInt;
