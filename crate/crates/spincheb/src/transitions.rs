//! Spin transition probabilities.
//!
//! The Meckler form of the Majorana formula writes `P^(j)_{m m'}` as a
//! Fourier-Legendre series with Chebyshev-product coefficients,
//! `P = sum_lambda f_lambda(m) f_lambda(m') P_lambda(cos beta)`. The
//! geometry/time parameter is always carried as `cos beta`; radiofrequency
//! drive parameters convert through `cos beta = 1 - 2 sin^2(omega_e t / 2)
//! (omega_1/omega_e)^2`.

use num_complex::Complex64;

use crate::angular::{clebsch_gordan, legendre_p, wigner_small_d};
use crate::cheb::cheb_scalar;
use crate::direction::UnitVector;
use crate::error::{Error, Result};
use crate::factorial::odd_even_double_factorial_ratio;
use crate::half::HalfInt;
use crate::operators::projector;

/// A single transition `m -> m'` in a spin-`j` system at relative axis
/// orientation `cos beta`.
#[derive(Clone, Copy, Debug)]
pub struct TransitionSpec {
    pub j: HalfInt,
    pub m: HalfInt,
    pub m_prime: HalfInt,
    pub cos_beta: f64,
}

impl TransitionSpec {
    pub fn from_beta(j: HalfInt, m: HalfInt, m_prime: HalfInt, beta: f64) -> Result<Self> {
        Self::from_cos_beta(j, m, m_prime, beta.cos())
    }

    pub fn from_cos_beta(j: HalfInt, m: HalfInt, m_prime: HalfInt, cos_beta: f64) -> Result<Self> {
        if !m.is_projection_of(j) {
            return Err(Error::InvalidProjection { j, m });
        }
        if !m_prime.is_projection_of(j) {
            return Err(Error::InvalidProjection { j, m: m_prime });
        }
        Ok(TransitionSpec { j, m, m_prime, cos_beta })
    }

    pub fn from_drive(j: HalfInt, m: HalfInt, m_prime: HalfInt, drive: &RfDrive) -> Result<Self> {
        Self::from_cos_beta(j, m, m_prime, drive.cos_beta())
    }
}

/// Radiofrequency drive: field strength `omega_1`, resonance offset
/// `detuning = omega_0 - omega`, and elapsed time.
#[derive(Clone, Copy, Debug)]
pub struct RfDrive {
    pub omega1: f64,
    pub detuning: f64,
    pub t: f64,
}

impl RfDrive {
    /// Effective field strength `omega_e = sqrt(omega_1^2 + detuning^2)`.
    pub fn omega_e(&self) -> f64 {
        self.omega1.hypot(self.detuning)
    }

    /// `cos beta = 1 - 2 sin^2(psi/2) sin^2 Theta` with `psi = omega_e t` and
    /// `sin Theta = omega_1/omega_e`.
    pub fn cos_beta(&self) -> f64 {
        let we = self.omega_e();
        if we == 0.0 {
            return 1.0;
        }
        let sin_theta_sq = (self.omega1 / we) * (self.omega1 / we);
        1.0 - 2.0 * (we * self.t / 2.0).sin().powi(2) * sin_theta_sq
    }
}

/// Meckler's Fourier-Legendre series for the transition probability.
pub fn meckler_probability(spec: &TransitionSpec) -> Result<f64> {
    let mut p = 0.0;
    for lambda in 0..=spec.j.twice() as u32 {
        p += cheb_scalar(spec.j, lambda, spec.m)?
            * cheb_scalar(spec.j, lambda, spec.m_prime)?
            * legendre_p(lambda, spec.cos_beta);
    }
    Ok(p)
}

/// The projector-trace route `P = Tr[Pi(m, a) Pi(m', b)]`; equals the series
/// with `cos beta = a.b`.
pub fn meckler_via_projector_trace(
    j: HalfInt,
    m: HalfInt,
    m_prime: HalfInt,
    a: &UnitVector,
    b: &UnitVector,
) -> Result<f64> {
    let pa = projector(j, m, a)?;
    let pb = projector(j, m_prime, b)?;
    let t = pa.trace_product(&pb);
    debug_assert!(t.im.abs() < 1e-10);
    Ok(t.re)
}

/// Extreme spin flip `P^(j)_{j,-j} = sin^{4j}(beta/2)` in closed form.
pub fn spin_flip_extreme(j: HalfInt, beta: f64) -> f64 {
    let s2 = (beta / 2.0).sin().powi(2);
    // sin^{4j} = (sin^2)^{2j}, with 0^0 = 1 at j = 0
    powi_zero_safe(s2, j.twice())
}

/// Next-to-extreme spin flip
/// `P^(j)_{j-1,-(j-1)} = sin^{4(j-1)}(beta/2) [2j cos^2(beta/2) - 1]^2`.
pub fn spin_flip_next(j: HalfInt, beta: f64) -> f64 {
    let s2 = (beta / 2.0).sin().powi(2);
    let c2 = (beta / 2.0).cos().powi(2);
    let bracket = f64::from(j.twice()) * c2 - 1.0;
    powi_zero_safe(s2, j.twice() - 2) * bracket * bracket
}

/// `x^n` with the series-limit convention `0^0 = 1`.
fn powi_zero_safe(x: f64, n: i32) -> f64 {
    if n == 0 {
        1.0
    } else {
        x.powi(n)
    }
}

/// Multi-level Landau-Zener mapping: the Meckler series evaluated at
/// `P_L(2p - 1)` for a given two-level transition probability `p`.
pub fn landau_zener_probability(s: HalfInt, m: HalfInt, m_prime: HalfInt, p: f64) -> Result<f64> {
    let spec = TransitionSpec::from_cos_beta(s, m, m_prime, 2.0 * p - 1.0)?;
    meckler_probability(&spec)
}

/// Squared rotation matrix element at `beta = pi/2`:
/// `[D_{m m'}(alpha, pi/2, gamma)]^2 = e^{-2i(m alpha + m' gamma)}
/// (-1)^{m - m'} sum_{L even} (-1)^{L/2} ((L-1)!!/L!!) C^{L0}_{j m j -m}
/// C^{L0}_{j m' j -m'}`.
pub fn squared_d_halfpi(
    j: HalfInt,
    m: HalfInt,
    m_prime: HalfInt,
    alpha: f64,
    gamma: f64,
) -> Result<Complex64> {
    if !m.is_projection_of(j) {
        return Err(Error::InvalidProjection { j, m });
    }
    if !m_prime.is_projection_of(j) {
        return Err(Error::InvalidProjection { j, m: m_prime });
    }
    let mut sum = 0.0;
    let mut l = 0u32;
    while l <= j.twice() as u32 {
        let lam = HalfInt::new(l as i32);
        let sign = if (l / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        let c1 = clebsch_gordan(j, m, j, -m, lam, HalfInt::ZERO)?;
        let c2 = clebsch_gordan(j, m_prime, j, -m_prime, lam, HalfInt::ZERO)?;
        sum += sign * odd_even_double_factorial_ratio(l / 2) * c1 * c2;
        l += 2;
    }
    let phase = Complex64::from_polar(
        1.0,
        -2.0 * (m.to_f64() * alpha + m_prime.to_f64() * gamma),
    );
    Ok(phase * (m - m_prime).parity_phase() * sum)
}

/// Inverse Meckler relation:
/// `P_L(cos beta) = sum_{m m'} f_L(m) f_L(m') [d^(j)_{m m'}(beta)]^2`,
/// independent of `j`.
pub fn inverse_meckler(j: HalfInt, rank: u32, beta: f64) -> Result<f64> {
    if rank > j.twice() as u32 {
        return Err(Error::RankOutOfRange { lambda: rank, max: j.twice() as u32 });
    }
    let d = wigner_small_d(j, beta)?;
    let mut sum = 0.0;
    for m in HalfInt::projections(j) {
        let fm = cheb_scalar(j, rank, m)?;
        for mp in HalfInt::projections(j) {
            let fmp = cheb_scalar(j, rank, mp)?;
            let dd = d[(m.basis_index(j), mp.basis_index(j))];
            sum += fm * fmp * dd * dd;
        }
    }
    Ok(sum)
}

/// `sum_{m'} P_{m m'} = 1`.
pub fn total_probability(j: HalfInt, m: HalfInt, beta: f64) -> Result<f64> {
    let mut sum = 0.0;
    for mp in HalfInt::projections(j) {
        sum += meckler_probability(&TransitionSpec::from_beta(j, m, mp, beta)?)?;
    }
    Ok(sum)
}
