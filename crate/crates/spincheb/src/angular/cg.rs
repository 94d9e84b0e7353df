//! Exact Clebsch-Gordan coefficients from the Wigner algebraic sum.
//!
//! The coefficient factors as `series * sqrt(radicand)` with both pieces exact
//! rationals; conversion to `f64` is the only lossy step, so the supported
//! range `2j <= 100` is limited by patience, not overflow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factorial::factorial;
use crate::half::HalfInt;

/// An exact Clebsch-Gordan value `series * sqrt(radicand)`.
#[derive(Clone, Debug)]
pub struct ExactCg {
    pub series: BigRational,
    pub radicand: BigRational,
}

impl ExactCg {
    pub fn to_f64(&self) -> f64 {
        let s = self.series.to_f64().unwrap_or(0.0);
        let r = self.radicand.to_f64().unwrap_or(0.0);
        s * r.sqrt()
    }

    fn zero() -> Self {
        ExactCg {
            series: BigRational::zero(),
            radicand: BigRational::one(),
        }
    }
}

pub(crate) fn triangle_ok(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (ta, tb, tc) = (a.twice(), b.twice(), c.twice());
    (ta + tb + tc) % 2 == 0 && tc <= ta + tb && ta <= tb + tc && tb <= tc + ta
}

fn check_domain(
    a: HalfInt,
    alpha: HalfInt,
    b: HalfInt,
    beta: HalfInt,
    c: HalfInt,
    gamma: HalfInt,
) -> Result<()> {
    if a.is_negative() {
        return Err(Error::NegativeJ { j: a });
    }
    if b.is_negative() {
        return Err(Error::NegativeJ { j: b });
    }
    if c.is_negative() {
        return Err(Error::NegativeJ { j: c });
    }
    if !triangle_ok(a, b, c) {
        return Err(Error::TriangleViolation { a, b, c });
    }
    if !alpha.is_projection_of(a) {
        return Err(Error::InvalidProjection { j: a, m: alpha });
    }
    if !beta.is_projection_of(b) {
        return Err(Error::InvalidProjection { j: b, m: beta });
    }
    if !gamma.is_projection_of(c) {
        return Err(Error::InvalidProjection { j: c, m: gamma });
    }
    Ok(())
}

/// Integer value of a half-integer combination known to be whole.
fn whole(x: HalfInt) -> i64 {
    debug_assert!(x.is_integer(), "expected integer, got {x}");
    i64::from(x.twice()) / 2
}

fn fact_i(n: i64) -> BigInt {
    debug_assert!(n >= 0);
    factorial(n as u32)
}

/// Exact `C^{c gamma}_{a alpha, b beta}` via the Wigner sum.
pub fn clebsch_gordan_exact(
    a: HalfInt,
    alpha: HalfInt,
    b: HalfInt,
    beta: HalfInt,
    c: HalfInt,
    gamma: HalfInt,
) -> Result<ExactCg> {
    check_domain(a, alpha, b, beta, c, gamma)?;
    if gamma != alpha + beta {
        return Ok(ExactCg::zero());
    }

    // triangle coefficient squared and the projection factorial ratio
    let delta_sq = BigRational::new(
        fact_i(whole(a + b - c)) * fact_i(whole(a - b + c)) * fact_i(whole(-a + b + c)),
        fact_i(whole(a + b + c) + 1),
    );
    let ratio = BigRational::new(
        fact_i(whole(c + gamma)) * fact_i(whole(c - gamma)) * (BigInt::from(c.twice()) + 1),
        fact_i(whole(a + alpha))
            * fact_i(whole(a - alpha))
            * fact_i(whole(b + beta))
            * fact_i(whole(b - beta)),
    );

    // z-sum with every factorial argument non-negative
    let z_lo = 0.max(whole(b + gamma - a));
    let z_hi = whole(c - a + b).min(whole(c + gamma));
    let base_sign = whole(b + beta);
    let mut series = BigRational::zero();
    for z in z_lo..=z_hi {
        let num = fact_i(whole(c + b + alpha) - z) * fact_i(whole(a - alpha) + z);
        let den = fact_i(z)
            * fact_i(whole(c - a + b) - z)
            * fact_i(whole(c + gamma) - z)
            * fact_i(whole(a - b - gamma) + z);
        let term = BigRational::new(num, den);
        if (base_sign + z) % 2 == 0 {
            series += term;
        } else {
            series -= term;
        }
    }

    Ok(ExactCg {
        series,
        radicand: delta_sq * ratio,
    })
}

/// `C^{c gamma}_{a alpha, b beta}` as a float.
pub fn clebsch_gordan(
    a: HalfInt,
    alpha: HalfInt,
    b: HalfInt,
    beta: HalfInt,
    c: HalfInt,
    gamma: HalfInt,
) -> Result<f64> {
    Ok(clebsch_gordan_exact(a, alpha, b, beta, c, gamma)?.to_f64())
}
