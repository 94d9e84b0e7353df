//! Legendre polynomial operators: the recursion-built `Pbar_lambda(n.J)` and
//! the diagonal `P_lambda(J)`.

use num_complex::Complex64;

use crate::direction::UnitVector;
use crate::error::Result;
use crate::half::HalfInt;

use super::{cheb_op_jz, dot_j, ensure_rank, SpinOperator};

/// The scalar `[J^2]^l = prod_{n=1}^{l} (kappa - (n^2 - 1)/4)` with
/// `kappa = j(j+1)`; equivalently `prod_{n=1}^{l} ((j + 1/2)^2 - n^2/4)`.
pub fn j_squared_bracket(j: HalfInt, l: u32) -> f64 {
    let kappa = j.kappa();
    (1..=l)
        .map(|n| kappa - ((n * n - 1) as f64) / 4.0)
        .product()
}

/// Zemach's Legendre polynomial operator `Pbar_lambda(n.J)` from the operator
/// recursion `(2 lambda + 1)(n.J) Pbar_lambda = (lambda + 1) Pbar_{lambda+1}
/// + lambda [J^2 - (lambda^2 - 1)/4] Pbar_{lambda-1}`.
pub fn legendre_op_zemach(j: HalfInt, lambda: u32, n: &UnitVector) -> Result<SpinOperator> {
    ensure_rank(j, lambda)?;
    let x = dot_j(j, n);
    let kappa = j.kappa();
    let mut prev = SpinOperator::identity(j);
    if lambda == 0 {
        return Ok(prev);
    }
    let mut cur = x.clone();
    for l in 1..lambda {
        let lf = l as f64;
        let bracket = kappa - (lf * lf - 1.0) / 4.0;
        let next = x
            .mul(&cur)
            .scale(Complex64::new(2.0 * lf + 1.0, 0.0))
            .sub(&prev.scale(Complex64::new(lf * bracket, 0.0)))
            .scale(Complex64::new(1.0 / (lf + 1.0), 0.0));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Schwinger's Legendre polynomial operator
/// `P_lambda(J) = sqrt((2j+1)/(2 lambda + 1)) f_lambda^(j)(J_z)`, diagonal
/// with entries `P_lambda(j, m)`.
pub fn legendre_op_schwinger(j: HalfInt, lambda: u32) -> Result<SpinOperator> {
    ensure_rank(j, lambda)?;
    let scale = ((j.dimension() as f64) / ((2 * lambda + 1) as f64)).sqrt();
    Ok(cheb_op_jz(j, lambda)?.scale(Complex64::new(scale, 0.0)))
}
