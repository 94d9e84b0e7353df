//! Wigner rotation matrices in Euler-angle and angle-axis parametrizations.
//!
//! Conventions, fixed once for the whole crate:
//! * basis order is `m` ascending from `-j` to `+j`;
//! * `D^j[r][c] = <j r| e^{-i alpha J_z} e^{-i beta J_y} e^{-i gamma J_z} |j c>
//!   = e^{-i r alpha} d^j_{rc}(beta) e^{-i c gamma}`;
//! * the angle-axis operator is `e^{-i psi (n.J)}`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::direction::UnitVector;
use crate::error::{Error, Result};
use crate::factorial::factorial;
use crate::half::HalfInt;

/// Rotation parameters: angle-axis `(psi; Theta, Phi)` or Euler `(alpha,
/// beta, gamma)` in the z-y-z convention.
#[derive(Clone, Copy, Debug)]
pub enum RotationParams {
    AngleAxis { psi: f64, axis: UnitVector },
    Euler { alpha: f64, beta: f64, gamma: f64 },
}

impl RotationParams {
    pub fn angle_axis(psi: f64, axis: UnitVector) -> Self {
        RotationParams::AngleAxis { psi, axis }
    }

    pub fn euler(alpha: f64, beta: f64, gamma: f64) -> Self {
        RotationParams::Euler { alpha, beta, gamma }
    }

    /// Euler angles of the rotation. Angle-axis converts via
    /// `sin(beta/2) = sin Theta sin(psi/2)`,
    /// `tan((alpha+gamma)/2) = cos Theta tan(psi/2)`,
    /// `(alpha-gamma)/2 = Phi - pi/2`.
    pub fn to_euler(&self) -> (f64, f64, f64) {
        match *self {
            RotationParams::Euler { alpha, beta, gamma } => (alpha, beta, gamma),
            RotationParams::AngleAxis { psi, axis } => {
                let half = psi / 2.0;
                let beta = 2.0 * (axis.theta().sin() * half.sin()).clamp(-1.0, 1.0).asin();
                let sum_half = (axis.theta().cos() * half.sin()).atan2(half.cos());
                let diff_half = axis.phi() - std::f64::consts::FRAC_PI_2;
                (sum_half + diff_half, beta, sum_half - diff_half)
            }
        }
    }
}

/// Reduced rotation matrix `d^j(beta)` with entries
/// `d[a][b] = <j a| e^{-i beta J_y} |j b>`, built from the factorial sum with
/// exact rational coefficients.
pub fn wigner_small_d(j: HalfInt, beta: f64) -> Result<DMatrix<f64>> {
    if j.is_negative() {
        return Err(Error::NegativeJ { j });
    }
    let dim = j.dimension();
    let c = (beta / 2.0).cos();
    let s = (beta / 2.0).sin();
    let mut out = DMatrix::zeros(dim, dim);
    for a in HalfInt::projections(j) {
        for b in HalfInt::projections(j) {
            out[(a.basis_index(j), b.basis_index(j))] = small_d_element(j, a, b, c, s);
        }
    }
    Ok(out)
}

fn small_d_element(j: HalfInt, a: HalfInt, b: HalfInt, c: f64, s: f64) -> f64 {
    let whole = |x: HalfInt| -> i64 {
        debug_assert!(x.is_integer());
        i64::from(x.twice()) / 2
    };
    let jpa = whole(j + a);
    let jma = whole(j - a);
    let jpb = whole(j + b);
    let jmb = whole(j - b);
    let ab = whole(a - b);

    let pref_sq = BigRational::from_integer(
        factorial(jpa as u32) * factorial(jma as u32) * factorial(jpb as u32)
            * factorial(jmb as u32),
    );
    let pref = pref_sq.to_f64().unwrap_or(f64::INFINITY).sqrt();

    let two_j = i64::from(j.twice());
    let s_lo = 0.max(-ab);
    let s_hi = jpb.min(jma);
    let mut sum = 0.0;
    for k in s_lo..=s_hi {
        let den = factorial((jpb - k) as u32)
            * factorial(k as u32)
            * factorial((ab + k) as u32)
            * factorial((jma - k) as u32);
        let coef = BigRational::new(1.into(), den).to_f64().unwrap_or(0.0);
        let sign = if (ab + k) % 2 == 0 { 1.0 } else { -1.0 };
        let cos_pow = (two_j + whole(b - a) - 2 * k) as i32;
        let sin_pow = (ab + 2 * k) as i32;
        sum += sign * coef * c.powi(cos_pow) * s.powi(sin_pow);
    }
    pref * sum
}

/// Full rotation matrix `D^j` for either parametrization.
///
/// Euler parameters evaluate `e^{-i r alpha} d_{rc}(beta) e^{-i c gamma}`;
/// angle-axis parameters evaluate the explicit closed form
/// `i^{r-c} e^{-i(r-c)Phi} B^{r+c} d_{rc}(xi)` with
/// `B = (cos(psi/2) - i sin(psi/2) cos Theta)/|...|` and
/// `sin(xi/2) = sin(psi/2) sin Theta`. Both agree entrywise.
pub fn wigner_big_d(j: HalfInt, params: &RotationParams) -> Result<DMatrix<Complex64>> {
    match *params {
        RotationParams::Euler { alpha, beta, gamma } => {
            let d = wigner_small_d(j, beta)?;
            let dim = j.dimension();
            let mut out = DMatrix::zeros(dim, dim);
            for r in HalfInt::projections(j) {
                for c in HalfInt::projections(j) {
                    let phase =
                        Complex64::from_polar(1.0, -(r.to_f64() * alpha + c.to_f64() * gamma));
                    out[(r.basis_index(j), c.basis_index(j))] =
                        phase * d[(r.basis_index(j), c.basis_index(j))];
                }
            }
            Ok(out)
        }
        RotationParams::AngleAxis { psi, axis } => {
            let half = psi / 2.0;
            let u = half.cos();
            let v = half.sin() * axis.theta().cos();
            let norm = (u * u + v * v).sqrt();
            // norm = 0 only when psi = pi (mod 2pi) and Theta = pi/2; then xi = pi
            // and d(xi) kills every entry with r + c != 0, so B^0 = 1 is all we use.
            let b_phase = if norm > 1e-300 {
                Complex64::new(u / norm, -v / norm)
            } else {
                Complex64::new(1.0, 0.0)
            };
            let xi = 2.0 * (half.sin() * axis.theta().sin()).clamp(-1.0, 1.0).asin();
            let d = wigner_small_d(j, xi)?;
            let dim = j.dimension();
            let mut out = DMatrix::zeros(dim, dim);
            for r in HalfInt::projections(j) {
                for c in HalfInt::projections(j) {
                    let diff = (r - c).twice() / 2; // integer r - c
                    let sum = (r + c).twice() / 2; // integer r + c
                    let i_pow = Complex64::i().powi(diff);
                    let phi_phase = Complex64::from_polar(1.0, -(diff as f64) * axis.phi());
                    out[(r.basis_index(j), c.basis_index(j))] = i_pow
                        * phi_phase
                        * b_phase.powi(sum)
                        * d[(r.basis_index(j), c.basis_index(j))];
                }
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use crate::angular::harmonics::{legendre_p, racah_c};

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn small_d_identity_at_zero() {
        for tj in 0..=7 {
            let d = wigner_small_d(h(tj), 0.0).unwrap();
            let id = DMatrix::<f64>::identity(d.nrows(), d.ncols());
            assert!((d - id).amax() < 1e-15);
        }
    }

    #[test]
    fn small_d_spin_half_closed_form() {
        let beta = 0.83;
        let d = wigner_small_d(h(1), beta).unwrap();
        let (c, s) = ((beta / 2.0).cos(), (beta / 2.0).sin());
        // ascending basis: index 0 is m = -1/2
        assert_abs_diff_eq!(d[(0, 0)], c, epsilon = 1e-15);
        assert_abs_diff_eq!(d[(0, 1)], s, epsilon = 1e-15);
        assert_abs_diff_eq!(d[(1, 0)], -s, epsilon = 1e-15);
        assert_abs_diff_eq!(d[(1, 1)], c, epsilon = 1e-15);
    }

    #[test]
    fn small_d_rows_orthogonal() {
        let j = h(5);
        let d = wigner_small_d(j, 1.234).unwrap();
        let prod = &d * d.transpose();
        assert!((prod - DMatrix::<f64>::identity(6, 6)).amax() < 1e-13);
    }

    #[test]
    fn big_d_identity_rotation() {
        let j = h(4);
        let d = wigner_big_d(j, &RotationParams::euler(0.0, 0.0, 0.0)).unwrap();
        let id = DMatrix::<Complex64>::identity(5, 5);
        assert!((d.clone() - &id).map(|z| z.norm()).max() < 1e-15);
        let d = wigner_big_d(j, &RotationParams::angle_axis(0.0, UnitVector::new(1.0, 2.0)))
            .unwrap();
        assert!((d - id).map(|z| z.norm()).max() < 1e-15);
    }

    #[test]
    fn angle_axis_case_i_d00_is_legendre() {
        // D^L_{00}(psi, n) = P_L(cos beta), cos beta = 1 - 2 sin^2(psi/2) sin^2 Theta
        for lam in 0..6u32 {
            let j = HalfInt::new(lam as i32);
            for &(psi, theta) in &[(0.7, 1.1), (2.9, 0.3), (4.4, 2.0)] {
                let axis = UnitVector::new(theta, 0.9);
                let d = wigner_big_d(j, &RotationParams::angle_axis(psi, axis)).unwrap();
                let zero = HalfInt::ZERO.basis_index(j);
                let cos_beta =
                    1.0 - 2.0 * (psi / 2.0).sin().powi(2) * theta.sin().powi(2);
                let expect = legendre_p(lam, cos_beta);
                assert_abs_diff_eq!(d[(zero, zero)].re, expect, epsilon = 1e-13);
                assert_abs_diff_eq!(d[(zero, zero)].im, 0.0, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn angle_axis_case_ii_column_is_racah_conjugate() {
        // D^lambda_{mu 0}(theta, n_perp) = conj(C_{lambda mu}(theta, phi))
        let n = UnitVector::new(1.2, 2.5);
        for lam in 0..5u32 {
            let j = HalfInt::new(lam as i32);
            let d = wigner_big_d(
                j,
                &RotationParams::angle_axis(n.theta(), n.perp_axis()),
            )
            .unwrap();
            let zero = HalfInt::ZERO.basis_index(j);
            for mu in -(lam as i32)..=lam as i32 {
                let row = HalfInt::new(mu).basis_index(j);
                let expect = racah_c(lam, mu, &n).unwrap().conj();
                let got = d[(row, zero)];
                assert_abs_diff_eq!(got.re, expect.re, epsilon = 1e-13);
                assert_abs_diff_eq!(got.im, expect.im, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn euler_and_angle_axis_routes_agree() {
        let js = [h(1), h(2), h(3), h(5)];
        for (k, &j) in js.iter().enumerate() {
            let psi = 0.3 + 1.1 * k as f64;
            let axis = UnitVector::new(0.2 + 0.5 * k as f64, 1.0 + k as f64);
            let aa = RotationParams::angle_axis(psi, axis);
            let (alpha, beta, gamma) = aa.to_euler();
            let via_euler = wigner_big_d(j, &RotationParams::euler(alpha, beta, gamma)).unwrap();
            let direct = wigner_big_d(j, &aa).unwrap();
            assert!((via_euler - direct).map(|z| z.norm()).max() < 1e-13);
        }
    }

    #[test]
    fn routes_agree_over_two_hundred_draws() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let mut worst: f64 = 0.0;
        for k in 0..200 {
            let j = h(k % 13);
            let psi: f64 = rng.gen_range(-8.0..8.0);
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
            let phi: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
            let aa = RotationParams::angle_axis(psi, UnitVector::new(theta, phi));
            let (alpha, beta, gamma) = aa.to_euler();
            let via_euler =
                wigner_big_d(j, &RotationParams::euler(alpha, beta, gamma)).unwrap();
            let direct = wigner_big_d(j, &aa).unwrap();
            worst = worst.max((via_euler - direct).map(|z| z.norm()).max());
        }
        assert!(worst < 1e-11, "worst disagreement {worst}");
    }

    #[test]
    fn double_cover_sign_for_half_integer_spin() {
        let j = h(1);
        let axis = UnitVector::new(1.0, 0.5);
        let d = wigner_big_d(j, &RotationParams::angle_axis(2.0 * std::f64::consts::PI, axis))
            .unwrap();
        let minus_id = -DMatrix::<Complex64>::identity(2, 2);
        assert!((d - minus_id).map(|z| z.norm()).max() < 1e-13);
    }

    #[test]
    fn negative_j_rejected() {
        assert!(matches!(
            wigner_small_d(h(-1), 0.2),
            Err(Error::NegativeJ { .. })
        ));
    }
}
