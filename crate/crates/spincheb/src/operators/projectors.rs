//! Projection operators onto `|n, m>` eigenstates of `n.J`.

use num_complex::Complex64;

use crate::cheb::cheb_scalar;
use crate::direction::UnitVector;
use crate::error::{Error, Result};
use crate::half::HalfInt;

use super::{cheb_op_n, dot_j, SpinOperator};

/// `Pi^(j)(m, n) = sum_lambda f_lambda(m) f_lambda(n.J)`: rank-1 projector
/// onto the `n.J = m` eigenstate.
pub fn projector(j: HalfInt, m: HalfInt, n: &UnitVector) -> Result<SpinOperator> {
    if !m.is_projection_of(j) {
        return Err(Error::InvalidProjection { j, m });
    }
    let mut acc = SpinOperator::zeros(j);
    for lambda in 0..=j.twice() as u32 {
        let f = cheb_scalar(j, lambda, m)?;
        acc = acc.add(&cheb_op_n(j, lambda, n)?.scale(Complex64::new(f, 0.0)));
    }
    Ok(acc)
}

/// The Sylvester product form
/// `Pi^(j)(m, n) = prod_{r != m} (r I - n.J)/(r - m)`, i.e. each factor is 1
/// on the target eigenvector and 0 on the eigenvector with eigenvalue `r`.
///
/// The near-cancelling factors amplify roundoff, so this route is held to a
/// looser tolerance than the Chebyshev expansion and is intended as a
/// cross-check for `2j <= 12`.
pub fn projector_canonical(j: HalfInt, m: HalfInt, n: &UnitVector) -> Result<SpinOperator> {
    if !m.is_projection_of(j) {
        return Err(Error::InvalidProjection { j, m });
    }
    let x = dot_j(j, n);
    let mut acc = SpinOperator::identity(j);
    for r in HalfInt::projections(j) {
        if r == m {
            continue;
        }
        let factor = SpinOperator::identity(j)
            .scale(Complex64::new(r.to_f64(), 0.0))
            .sub(&x)
            .scale(Complex64::new(1.0 / (r.to_f64() - m.to_f64()), 0.0));
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Coherent-state projector `|n, j><n, j| = Pi^(j)(j, n)`, whose expansion
/// coefficients are `f_lambda^(j)(j)`.
pub fn coherent_projector(j: HalfInt, n: &UnitVector) -> Result<SpinOperator> {
    projector(j, j, n)
}
