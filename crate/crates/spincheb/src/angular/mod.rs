//! Exact and floating-point angular-momentum primitives: Clebsch-Gordan
//! coefficients, Wigner rotation matrices, orthogonal polynomials, spherical
//! harmonics, and generalized characters.

mod cg;
mod harmonics;
mod rotation;

pub use cg::{clebsch_gordan, clebsch_gordan_exact, ExactCg};
pub use harmonics::{
    character_direct, gegenbauer_c, generalized_character, legendre_p, racah_c,
};
pub use rotation::{wigner_big_d, wigner_small_d, RotationParams};

#[allow(unused_imports)]
pub(crate) use cg::triangle_ok;
