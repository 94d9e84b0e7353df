//! Independent oracles for the integration suites.
//!
//! Everything here is deliberately written against different formulas and
//! different factorial code than the library: the Clebsch-Gordan oracle uses
//! Racah's algebraic sum (the library uses Wigner's), and the matrix
//! exponential uses scaling-and-squaring Taylor (the library diagonalizes).

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use spincheb::half::HalfInt;

/// Plain loop factorial, independent of the library's cache.
fn fact(n: i64) -> BigInt {
    assert!(n >= 0, "negative factorial argument {n}");
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

fn whole(x: HalfInt) -> i64 {
    assert!(x.is_integer(), "expected integer, got {x}");
    i64::from(x.twice()) / 2
}

/// Clebsch-Gordan coefficient `C^{c gamma}_{a alpha b beta}` from Racah's
/// algebraic sum, in exact rationals until the final square root.
pub fn racah_cg_oracle(
    a: HalfInt,
    alpha: HalfInt,
    b: HalfInt,
    beta: HalfInt,
    c: HalfInt,
    gamma: HalfInt,
) -> f64 {
    if gamma != alpha + beta {
        return 0.0;
    }
    // radicand: (2c+1) * triangle(abc) * product of projection factorials
    let triangle = BigRational::new(
        fact(whole(a + b - c)) * fact(whole(a - b + c)) * fact(whole(-a + b + c)),
        fact(whole(a + b + c) + 1),
    );
    let proj = BigRational::from_integer(
        fact(whole(a + alpha))
            * fact(whole(a - alpha))
            * fact(whole(b + beta))
            * fact(whole(b - beta))
            * fact(whole(c + gamma))
            * fact(whole(c - gamma)),
    );
    let radicand =
        BigRational::from_integer(BigInt::from(i64::from(c.twice()) + 1)) * triangle * proj;

    let z_lo = 0i64
        .max(whole(b - c - alpha))
        .max(whole(a - c + beta));
    let z_hi = whole(a + b - c).min(whole(a - alpha)).min(whole(b + beta));
    let mut series = BigRational::zero();
    for z in z_lo..=z_hi {
        let den = fact(z)
            * fact(whole(a + b - c) - z)
            * fact(whole(a - alpha) - z)
            * fact(whole(b + beta) - z)
            * fact(whole(c - b + alpha) + z)
            * fact(whole(c - a - beta) + z);
        let term = BigRational::new(BigInt::one(), den);
        if z % 2 == 0 {
            series += term;
        } else {
            series -= term;
        }
    }
    series.to_f64().unwrap() * radicand.to_f64().unwrap().sqrt()
}

/// `f_lambda^(j)(m) = (-1)^{j-m} C^{lambda 0}_{j m j -m}` through the oracle.
pub fn cheb_oracle(j: HalfInt, lambda: u32, m: HalfInt) -> f64 {
    let phase = (j - m).parity_phase();
    phase * racah_cg_oracle(j, m, j, -m, HalfInt::new(lambda as i32), HalfInt::ZERO)
}

/// `e^A` by scaling-and-squaring Taylor; accurate to ~1e-13 for the small
/// matrices used in these suites.
pub fn expm_taylor(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = a.nrows();
    let norm = a.map(|z| z.norm()).max();
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scaled = a * Complex64::new(1.0 / 2f64.powi(s), 0.0);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=24 {
        term = (&term * &scaled) / Complex64::new(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

#[allow(dead_code)]
pub fn max_norm(a: &DMatrix<Complex64>) -> f64 {
    a.map(|z| z.norm()).max()
}

#[cfg(test)]
mod oracle_self_tests {
    use super::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn oracle_reproduces_frozen_table_values() {
        // <1 1; 1 -1 | 2 0> = 1/sqrt(6)
        let v = racah_cg_oracle(h(2), h(2), h(2), h(-2), h(4), h(0));
        assert!((v - 1.0 / 6f64.sqrt()).abs() < 1e-15);
        // <1/2 1/2; 1/2 -1/2 | 0 0> = 1/sqrt(2)
        let v = racah_cg_oracle(h(1), h(1), h(1), h(-1), h(0), h(0));
        assert!((v - 0.5f64.sqrt()).abs() < 1e-15);
        // C^{00}_{j m j -m} = (-1)^{j-m}/sqrt(2j+1) at j=1, m=1
        let v = racah_cg_oracle(h(2), h(2), h(2), h(-2), h(0), h(0));
        assert!((v - 1.0 / 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn expm_matches_scalar_exponential() {
        let a = DMatrix::from_row_slice(1, 1, &[Complex64::new(0.3, -1.2)]);
        let e = expm_taylor(&a);
        let expect = Complex64::new(0.3, -1.2).exp();
        assert!((e[(0, 0)] - expect).norm() < 1e-14);
    }
}
