//! Legendre, associated Legendre and Gegenbauer polynomials, Racah spherical
//! harmonics, and the generalized characters of the rotation group.

use num_complex::Complex64;

use crate::direction::UnitVector;
use crate::error::{Error, Result};
use crate::half::HalfInt;

/// Legendre polynomial `P_l(x)` by the three-term recurrence.
pub fn legendre_p(l: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if l == 0 {
        return prev;
    }
    let mut cur = x;
    for k in 1..l {
        let k = k as f64;
        let next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Legendre `P_l^m(cos theta)` with the Condon-Shortley phase,
/// `m >= 0`.
fn assoc_legendre(l: u32, m: u32, cos_theta: f64, sin_theta: f64) -> f64 {
    debug_assert!(m <= l);
    // P_m^m = (-1)^m (2m-1)!! sin^m
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= -((2 * k - 1) as f64) * sin_theta;
    }
    if l == m {
        return pmm;
    }
    let mut pm1 = cos_theta * (2 * m + 1) as f64 * pmm; // P_{m+1}^m
    if l == m + 1 {
        return pm1;
    }
    for k in (m + 2)..=l {
        let k = k as f64;
        let mf = m as f64;
        let next = ((2.0 * k - 1.0) * cos_theta * pm1 - (k + mf - 1.0) * pmm) / (k - mf);
        pmm = pm1;
        pm1 = next;
    }
    pm1
}

/// Gegenbauer polynomial `C_n^alpha(x)`, integer `alpha >= 1`.
pub fn gegenbauer_c(n: u32, alpha: u32, x: f64) -> f64 {
    debug_assert!(alpha >= 1);
    let a = alpha as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * a * x;
    for k in 1..n {
        let k = k as f64;
        let next = (2.0 * (k + a) * x * cur - (k + 2.0 * a - 1.0) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Racah spherical harmonic `C_{lambda mu}(n) = sqrt(4 pi / (2 lambda + 1))
/// Y_{lambda mu}(n)`, so that `C_00 = 1`.
pub fn racah_c(lambda: u32, mu: i32, n: &UnitVector) -> Result<Complex64> {
    if mu.unsigned_abs() > lambda {
        return Err(Error::OrderOutOfRange { lambda, mu });
    }
    let m = mu.unsigned_abs();
    // sqrt((l-m)!/(l+m)!) as a running product
    let mut ratio = 1.0;
    for k in (lambda - m + 1)..=(lambda + m) {
        ratio /= k as f64;
    }
    let norm = ratio.sqrt();
    let p = assoc_legendre(lambda, m, n.theta().cos(), n.theta().sin());
    let value = norm * p * Complex64::from_polar(1.0, m as f64 * n.phi());
    if mu >= 0 {
        Ok(value)
    } else {
        // C_{l,-m} = (-1)^m conj(C_{l,m})
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(sign * value.conj())
    }
}

/// Generalized character of the rotation group,
/// `chi_lambda^(j)(psi) = (2 lambda)!! sqrt(2j+1) sqrt((2j-lambda)!/(2j+lambda+1)!)
/// sin^lambda(psi/2) C_{2j-lambda}^{lambda+1}(cos(psi/2))`.
pub fn generalized_character(j: HalfInt, lambda: u32, psi: f64) -> Result<f64> {
    if j.is_negative() {
        return Err(Error::NegativeJ { j });
    }
    let two_j = j.twice() as u32;
    if lambda > two_j {
        return Err(Error::RankOutOfRange { lambda, max: two_j });
    }
    let s = (psi / 2.0).sin();
    let c = (psi / 2.0).cos();
    // (2 lambda)!! = 2^lambda lambda!
    let mut coef = ((two_j + 1) as f64).sqrt();
    for k in 1..=lambda {
        coef *= 2.0 * k as f64;
    }
    // sqrt((2j - lambda)! / (2j + lambda + 1)!) as a running product
    let mut ratio = 1.0;
    for n in (two_j - lambda + 1)..=(two_j + lambda + 1) {
        ratio /= n as f64;
    }
    coef *= ratio.sqrt();
    Ok(coef * s.powi(lambda as i32) * gegenbauer_c(two_j - lambda, lambda + 1, c))
}

/// The ordinary character `chi^(j)(psi) = sum_m e^{i m psi}`, evaluated
/// directly as a reference route.
pub fn character_direct(j: HalfInt, psi: f64) -> f64 {
    HalfInt::projections(j)
        .map(|m| Complex64::from_polar(1.0, m.to_f64() * psi))
        .sum::<Complex64>()
        .re
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use crate::factorial::odd_even_double_factorial_ratio;

    #[test]
    fn legendre_low_orders() {
        for &x in &[-0.9, -0.3, 0.0, 0.5, 1.0] {
            assert_eq!(legendre_p(0, x), 1.0);
            assert_eq!(legendre_p(1, x), x);
            assert_abs_diff_eq!(legendre_p(2, x), 0.5 * (3.0 * x * x - 1.0), epsilon = 1e-15);
        }
    }

    #[test]
    fn legendre_at_origin() {
        // P_{2n}(0) = (-1)^n (2n-1)!!/(2n)!!, odd orders vanish
        for n in 0..12u32 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let expected = sign * odd_even_double_factorial_ratio(n);
            assert_abs_diff_eq!(legendre_p(2 * n, 0.0), expected, epsilon = 1e-14);
            assert_abs_diff_eq!(legendre_p(2 * n + 1, 0.0), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn gegenbauer_low_orders() {
        for &x in &[-0.8, 0.1, 0.9] {
            for alpha in 1..4u32 {
                assert_eq!(gegenbauer_c(0, alpha, x), 1.0);
                assert_abs_diff_eq!(
                    gegenbauer_c(1, alpha, x),
                    2.0 * alpha as f64 * x,
                    epsilon = 1e-15
                );
            }
        }
    }

    #[test]
    fn racah_c00_is_one() {
        let n = UnitVector::new(0.4, 1.7);
        let v = racah_c(0, 0, &n).unwrap();
        assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn racah_c1_components_are_the_direction() {
        let n = UnitVector::new(1.1, 0.6);
        let [x, y, z] = n.cartesian();
        let c10 = racah_c(1, 0, &n).unwrap();
        let c11 = racah_c(1, 1, &n).unwrap();
        let c1m1 = racah_c(1, -1, &n).unwrap();
        assert_abs_diff_eq!(c10.re, z, epsilon = 1e-14);
        let expect = -Complex64::new(x, y) / 2f64.sqrt();
        assert_abs_diff_eq!(c11.re, expect.re, epsilon = 1e-14);
        assert_abs_diff_eq!(c11.im, expect.im, epsilon = 1e-14);
        let expect = Complex64::new(x, -y) / 2f64.sqrt();
        assert_abs_diff_eq!(c1m1.re, expect.re, epsilon = 1e-14);
        assert_abs_diff_eq!(c1m1.im, expect.im, epsilon = 1e-14);
    }

    #[test]
    fn racah_sum_rule() {
        // sum_mu |C_{lambda mu}|^2 = 1
        let n = UnitVector::new(2.2, 4.0);
        for lambda in 0..7u32 {
            let sum: f64 = (-(lambda as i32)..=lambda as i32)
                .map(|mu| racah_c(lambda, mu, &n).unwrap().norm_sqr())
                .sum();
            assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn character_lambda_zero_recovers_character() {
        for tj in 0..=8 {
            let j = HalfInt::from_twice(tj);
            for &psi in &[0.3, 1.0, 2.8, 5.5] {
                assert_abs_diff_eq!(
                    generalized_character(j, 0, psi).unwrap(),
                    character_direct(j, psi),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn character_spin_half_closed_form() {
        // chi_1^(1/2)(psi) = (2/sqrt(3)) sin(psi/2)
        let j = HalfInt::from_twice(1);
        for k in 0..50 {
            let psi = k as f64 * 0.13;
            assert_abs_diff_eq!(
                generalized_character(j, 1, psi).unwrap(),
                2.0 / 3f64.sqrt() * (psi / 2.0).sin(),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn character_rank_bound() {
        assert!(matches!(
            generalized_character(HalfInt::new(1), 3, 0.5),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn characters_vanish_at_zero_angle_for_positive_rank() {
        // Tr f_lambda = 0 for lambda >= 1, so chi_lambda(0) = 0
        for tj in 1..=8 {
            let j = HalfInt::from_twice(tj);
            for lambda in 1..=tj as u32 {
                assert_eq!(generalized_character(j, lambda, 0.0).unwrap(), 0.0);
            }
            assert_abs_diff_eq!(
                generalized_character(j, 0, 0.0).unwrap(),
                (tj + 1) as f64,
                epsilon = 1e-12
            );
        }
    }
}
