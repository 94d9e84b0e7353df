//! Chebyshev polynomials of a discrete variable, `f_lambda^(j)(m)`.
//!
//! Three independent construction routes are kept side by side:
//!
//! * [`cheb_scalar`] - the three-term recursion run downward from the exact
//!   top-degree value; production path, `O(2j)` per column and stable across
//!   the classically forbidden band.
//! * [`cheb_scalar_cg`] - the duality `f_lambda^(j)(m) = (-1)^{j-m}
//!   C^{lambda 0}_{j m j -m}` through the exact-rational Clebsch-Gordan sum.
//! * [`cheb_scalar_bateman`] - the finite-difference definition
//!   `F(L,j) L! Delta^L[binom(j+m, L) binom(m-j-1, L)]`, evaluated in exact
//!   rationals because the alternating difference cancels catastrophically in
//!   floats.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::angular::clebsch_gordan_exact;
use crate::error::{Error, Result};
use crate::factorial::factorial;
use crate::half::HalfInt;

fn check(j: HalfInt, lambda: u32, m: HalfInt) -> Result<()> {
    if j.is_negative() {
        return Err(Error::NegativeJ { j });
    }
    if lambda > j.twice() as u32 {
        return Err(Error::RankOutOfRange {
            lambda,
            max: j.twice() as u32,
        });
    }
    if !m.is_projection_of(j) {
        return Err(Error::InvalidProjection { j, m });
    }
    Ok(())
}

/// Recursion coefficient `G(a, j) = sqrt(a^2 ((2j+1)^2 - a^2) / (4a^2 - 1))`.
pub(crate) fn recursion_g(a: u32, j: HalfInt) -> f64 {
    let a2 = (a as f64) * (a as f64);
    let n = (j.twice() + 1) as f64;
    (a2 * (n * n - a2) / (4.0 * a2 - 1.0)).sqrt()
}

/// Top-degree value `f_{2j}^(j)(m) = (-1)^{j-m} (2j)!^2 /
/// (sqrt((4j)!) (j+m)! (j-m)!)` from the stretched coupling, exact rationals
/// under the square root.
fn top_degree_value(j: HalfInt, m: HalfInt) -> f64 {
    let two_j = j.twice() as u32;
    let jpm = ((j + m).twice() / 2) as u32;
    let jmm = ((j - m).twice() / 2) as u32;
    let f2j = factorial(two_j);
    let fpm = factorial(jpm) * factorial(jmm);
    let sq = BigRational::new(&f2j * &f2j * &f2j * &f2j, factorial(2 * two_j) * (&fpm * &fpm));
    (j - m).parity_phase() * sq.to_f64().unwrap_or(0.0).sqrt()
}

/// The full column `f_lambda^(j)(m)` for `lambda = 0 ..= 2j`.
///
/// The three-term recursion
/// `G(L+1,j) f_{L+1}(m) = 2m f_L(m) - G(L,j) f_{L-1}(m)` is run downward from
/// the exact top value `f_{2j}(m)` (where `G(2j+1, j) = 0` closes the
/// system). Downward is the stable direction: the values decay toward
/// `lambda = 2j` in the classically forbidden band near `|m| = j`, and an
/// upward sweep lets roundoff from the growing companion solution overwhelm
/// that tail by `2j ~ 24`.
fn recursion_column(j: HalfInt, m: HalfInt) -> Vec<f64> {
    let two_j = j.twice() as usize;
    let mut col = vec![0.0; two_j + 1];
    col[two_j] = top_degree_value(j, m);
    if two_j == 0 {
        return col;
    }
    let two_m = m.to_f64() * 2.0;
    // G(2j+1, j) = 0, so the top equation determines f_{2j-1} from f_{2j}
    col[two_j - 1] = two_m * col[two_j] / recursion_g(two_j as u32, j);
    for l in (1..two_j).rev() {
        col[l - 1] = (two_m * col[l] - recursion_g(l as u32 + 1, j) * col[l + 1])
            / recursion_g(l as u32, j);
    }
    col
}

/// `f_lambda^(j)(m)` from the downward three-term recursion.
pub fn cheb_scalar(j: HalfInt, lambda: u32, m: HalfInt) -> Result<f64> {
    check(j, lambda, m)?;
    Ok(recursion_column(j, m)[lambda as usize])
}

/// `f_lambda^(j)(m) = (-1)^{j-m} C^{lambda 0}_{j m j -m}` (exact-rational CG
/// route).
pub fn cheb_scalar_cg(j: HalfInt, lambda: u32, m: HalfInt) -> Result<f64> {
    check(j, lambda, m)?;
    let lam = HalfInt::new(lambda as i32);
    let cg = clebsch_gordan_exact(j, m, j, -m, lam, HalfInt::ZERO)?;
    Ok((j - m).parity_phase() * cg.to_f64())
}

/// Binomial `binom(x, l)` for integer `x` of either sign, as an exact
/// rational: the product formula `x (x-1) ... (x-l+1) / l!`.
fn binomial_any(x: i64, l: u32) -> BigRational {
    let mut num = BigInt::one();
    for i in 0..l as i64 {
        num *= BigInt::from(x - i);
    }
    BigRational::new(num, factorial(l))
}

/// `f_lambda^(j)(m)` from the finite-difference (Bateman) definition.
pub fn cheb_scalar_bateman(j: HalfInt, lambda: u32, m: HalfInt) -> Result<f64> {
    check(j, lambda, m)?;
    let l = lambda;
    // H(m) = binom(j+m, L) * binom(m-j-1, L); both arguments are integers
    let h = |m: HalfInt| -> BigRational {
        let jpm = i64::from((j + m).twice()) / 2;
        let mjm1 = i64::from((m - j).twice()) / 2 - 1;
        binomial_any(jpm, l) * binomial_any(mjm1, l)
    };
    // t_L = L! Delta^L[H](m) = L! sum_k (-1)^{L-k} binom(L,k) H(m+k)
    let mut t = BigRational::zero();
    for k in 0..=l {
        let mk = m + HalfInt::new(k as i32);
        let coef = BigRational::from_integer(
            factorial(l) / (factorial(k) * factorial(l - k)),
        );
        let term = coef * h(mk);
        if (l - k).is_multiple_of(2) {
            t += term;
        } else {
            t -= term;
        }
    }
    t *= BigRational::from_integer(factorial(l));
    // F(L,j)^2 = (2L+1) (2j-L)! / (2j+L+1)!
    let two_j = j.twice() as u32;
    let f_sq = BigRational::new(
        BigInt::from(2 * l + 1) * factorial(two_j - l),
        factorial(two_j + l + 1),
    );
    Ok(t.to_f64().unwrap_or(0.0) * f_sq.to_f64().unwrap_or(0.0).sqrt())
}

/// `sum_m f_lambda^(j)(m) = sqrt(2j+1) delta_{lambda 0}`.
pub fn cheb_sum_over_m(j: HalfInt, lambda: u32) -> Result<f64> {
    if j.is_negative() {
        return Err(Error::NegativeJ { j });
    }
    if lambda > j.twice() as u32 {
        return Err(Error::RankOutOfRange {
            lambda,
            max: j.twice() as u32,
        });
    }
    let mut sum = 0.0;
    for m in HalfInt::projections(j) {
        sum += cheb_scalar(j, lambda, m)?;
    }
    Ok(sum)
}

/// Generalized character via the Chebyshev sum
/// `chi_lambda^(j)(psi) = i^lambda sqrt((2j+1)/(2 lambda + 1))
/// sum_m e^{-i m psi} f_lambda^(j)(m)`; cross-route check against the
/// Gegenbauer definition.
pub fn character_via_cheb_sum(j: HalfInt, lambda: u32, psi: f64) -> Result<f64> {
    if j.is_negative() {
        return Err(Error::NegativeJ { j });
    }
    if lambda > j.twice() as u32 {
        return Err(Error::RankOutOfRange {
            lambda,
            max: j.twice() as u32,
        });
    }
    let mut sum = Complex64::zero();
    for m in HalfInt::projections(j) {
        sum += Complex64::from_polar(1.0, -m.to_f64() * psi) * cheb_scalar(j, lambda, m)?;
    }
    let scale = (((j.twice() + 1) as f64) / ((2 * lambda + 1) as f64)).sqrt();
    let value = Complex64::i().powu(lambda) * scale * sum;
    debug_assert!(value.im.abs() < 1e-10 * (1.0 + value.re.abs()));
    Ok(value.re)
}

/// All `f_lambda^(j)(m)` for one `j`, rows indexed by `lambda`, columns by the
/// basis index of `m`.
#[derive(Clone, Debug)]
pub struct ChebTable {
    j: HalfInt,
    values: Vec<Vec<f64>>,
}

impl ChebTable {
    pub fn build(j: HalfInt) -> Result<ChebTable> {
        if j.is_negative() {
            return Err(Error::NegativeJ { j });
        }
        let dim = j.dimension();
        let mut values = vec![vec![0.0; dim]; dim];
        for m in HalfInt::projections(j) {
            let col = m.basis_index(j);
            for (lambda, v) in recursion_column(j, m).into_iter().enumerate() {
                values[lambda][col] = v;
            }
        }
        Ok(ChebTable { j, values })
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn value(&self, lambda: u32, m: HalfInt) -> f64 {
        self.values[lambda as usize][m.basis_index(self.j)]
    }

    pub fn row(&self, lambda: u32) -> &[f64] {
        &self.values[lambda as usize]
    }

    /// Largest deviation of `sum_m f_a(m) f_b(m)` from the identity over all
    /// row pairs.
    pub fn orthonormality_residual(&self) -> f64 {
        let dim = self.j.dimension();
        let mut worst: f64 = 0.0;
        for a in 0..dim {
            for b in a..dim {
                let dot: f64 = (0..dim).map(|i| self.values[a][i] * self.values[b][i]).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}
