//! Rotation operators: the eigendecomposition route and the Chebyshev
//! operator expansion.
//!
//! Sign conventions: [`rotation_exact`] implements `e^{-i psi (n.J)}` (the
//! basis-change convention, matching `wigner_big_d`), while
//! [`rotation_corio`] implements the expansion of `e^{+i psi (n.J)}`; callers
//! needing the other sign negate `psi`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::angular::{generalized_character, RotationParams};
use crate::direction::UnitVector;
use crate::error::Result;
use crate::half::HalfInt;

use super::{cheb_op_n, dot_j, spin_matrices, SpinOperator};

/// `e^{i t H}` for Hermitian `H` via eigendecomposition; unitary to roundoff.
pub fn matrix_exp_i_hermitian(h: &DMatrix<Complex64>, t: f64) -> DMatrix<Complex64> {
    let eig = h.clone().symmetric_eigen();
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::from_polar(1.0, t * x)));
    &eig.eigenvectors * phases * eig.eigenvectors.adjoint()
}

/// Exact rotation operator for the given parameters.
///
/// Angle-axis gives `e^{-i psi (n.J)} = V e^{-i psi m} V^dagger` from the
/// eigendecomposition of the Hermitian generator `n.J`; Euler angles give
/// `e^{-i alpha J_z} e^{-i beta J_y} e^{-i gamma J_z}` with the middle factor
/// by the same eigendecomposition route.
pub fn rotation_exact(j: HalfInt, params: &RotationParams) -> SpinOperator {
    match *params {
        RotationParams::AngleAxis { psi, axis } => {
            let gen = dot_j(j, &axis);
            SpinOperator::new(j, matrix_exp_i_hermitian(gen.matrix(), -psi))
        }
        RotationParams::Euler { alpha, beta, gamma } => {
            let (_, jy, _) = spin_matrices(j);
            let mid = matrix_exp_i_hermitian(jy.matrix(), -beta);
            let dim = j.dimension();
            let mut za = DMatrix::<Complex64>::zeros(dim, dim);
            let mut zg = DMatrix::<Complex64>::zeros(dim, dim);
            for m in HalfInt::projections(j) {
                let i = m.basis_index(j);
                za[(i, i)] = Complex64::from_polar(1.0, -m.to_f64() * alpha);
                zg[(i, i)] = Complex64::from_polar(1.0, -m.to_f64() * gamma);
            }
            SpinOperator::new(j, za * mid * zg)
        }
    }
}

/// Chebyshev operator expansion of the rotation operator,
/// `e^{+i psi (n.J)} = sum_lambda i^lambda sqrt((2 lambda + 1)/(2j+1))
/// chi_lambda^(j)(psi) f_lambda^(j)(n.J)`.
pub fn rotation_corio(j: HalfInt, psi: f64, n: &UnitVector) -> Result<SpinOperator> {
    let dim_f = j.dimension() as f64;
    let mut acc = SpinOperator::zeros(j);
    for lambda in 0..=j.twice() as u32 {
        let chi = generalized_character(j, lambda, psi)?;
        let coef = Complex64::i().powu(lambda)
            * Complex64::new((((2 * lambda + 1) as f64) / dim_f).sqrt() * chi, 0.0);
        acc = acc.add(&cheb_op_n(j, lambda, n)?.scale(coef));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::wigner_big_d;
    use approx::assert_abs_diff_eq;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn identity_at_zero_angle() {
        let j = h(4);
        let n = UnitVector::new(1.0, 0.0);
        let r = rotation_exact(j, &RotationParams::angle_axis(0.0, n));
        assert!(r.max_diff(&SpinOperator::identity(j)) < 1e-14);
        let r = rotation_corio(j, 0.0, &n).unwrap();
        assert!(r.max_diff(&SpinOperator::identity(j)) < 1e-12);
    }

    #[test]
    fn unitary() {
        let j = h(5);
        let r = rotation_exact(j, &RotationParams::angle_axis(2.3, UnitVector::new(0.7, 3.3)));
        let prod = SpinOperator::new(j, r.matrix() * r.matrix().adjoint());
        assert!(prod.max_diff(&SpinOperator::identity(j)) < 1e-13);
    }

    #[test]
    fn spin_half_closed_form() {
        // e^{-i psi (n.J)} = cos(psi/2) I - 2 i sin(psi/2) (n.J) at j = 1/2
        let j = h(1);
        let psi = 1.9;
        let n = UnitVector::new(0.6, 2.0);
        let r = rotation_exact(j, &RotationParams::angle_axis(psi, n));
        let expect = SpinOperator::identity(j)
            .scale(Complex64::new((psi / 2.0).cos(), 0.0))
            .add(&dot_j(j, &n).scale(Complex64::new(0.0, -2.0 * (psi / 2.0).sin())));
        assert!(r.max_diff(&expect) < 1e-14);
    }

    #[test]
    fn matches_wigner_big_d() {
        for (tj, psi) in [(1, 0.8), (2, 2.0), (4, 4.9), (5, 1.3)] {
            let j = h(tj);
            let axis = UnitVector::new(1.1, 0.4 + tj as f64);
            let params = RotationParams::angle_axis(psi, axis);
            let a = rotation_exact(j, &params);
            let b = SpinOperator::new(j, wigner_big_d(j, &params).unwrap());
            assert!(a.max_diff(&b) < 1e-12, "j = {j}");
            // Euler route as well
            let params = RotationParams::euler(0.3, psi, -0.9);
            let a = rotation_exact(j, &params);
            let b = SpinOperator::new(j, wigner_big_d(j, &params).unwrap());
            assert!(a.max_diff(&b) < 1e-12, "euler j = {j}");
        }
    }

    #[test]
    fn corio_is_adjoint_of_exact() {
        for (tj, psi) in [(1, 0.4), (3, 2.2), (4, 5.6)] {
            let j = h(tj);
            let n = UnitVector::new(2.1, 1.0 + tj as f64);
            let corio = rotation_corio(j, psi, &n).unwrap();
            let exact = rotation_exact(j, &RotationParams::angle_axis(psi, n));
            assert!(corio.max_diff(&exact.adjoint()) < 1e-11, "j = {j}");
        }
    }

    #[test]
    fn spin_half_trace_identity() {
        // Tr[f_1(n.J) D(psi,n)] = sqrt(2) sin(psi/2) Tr[2 i J_z ...] route:
        // the coefficient of the expansion reproduces chi_1^(1/2)
        let j = h(1);
        let n = UnitVector::new(1.3, 0.2);
        for k in 0..20 {
            let psi = 0.31 * k as f64;
            let f1 = cheb_op_n(j, 1, &n).unwrap();
            // e^{+i psi n.J} is the adjoint of the exact e^{-i psi n.J}
            let rot = rotation_exact(j, &RotationParams::angle_axis(psi, n)).adjoint();
            let tr = f1.trace_product(&rot);
            // i^{3 lambda} sqrt((2j+1)/(2 lambda + 1)) Tr[...] at lambda = 1
            let chi = (Complex64::i().powu(3) * Complex64::new((2f64 / 3.0).sqrt(), 0.0) * tr).re;
            assert_abs_diff_eq!(
                chi,
                2.0 / 3f64.sqrt() * (psi / 2.0).sin(),
                epsilon = 1e-13
            );
        }
    }
}
