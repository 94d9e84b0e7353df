//! Operator equivalents: polynomial-in-`J_z` forms for the polarization
//! operators `T_{lambda k}`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::half::HalfInt;

use super::{polarization_t, spin_matrices, spin_plus, SpinOperator};

/// Proportionality report between a polarization operator and its polynomial
/// equivalent.
#[derive(Clone, Debug)]
pub struct EquivalentReport {
    /// Least-squares proportionality constant `T = ratio * polynomial`.
    pub ratio: Complex64,
    /// Largest entrywise ratio deviation across significant entries.
    pub ratio_spread: f64,
    /// `max |T - ratio * polynomial|` after fitting.
    pub residual: f64,
    /// Number of significant entries compared.
    pub entries_used: usize,
}

fn diagonal_polynomial(j: HalfInt, coeffs: &[f64]) -> SpinOperator {
    // coeffs[p] multiplies J_z^p
    let (_, _, jz) = spin_matrices(j);
    let mut acc = SpinOperator::zeros(j);
    let mut pow = SpinOperator::identity(j);
    for &c in coeffs {
        acc = acc.add(&pow.scale(Complex64::new(c, 0.0)));
        pow = pow.mul(&jz);
    }
    acc
}

/// Proportionality between two operators: least-squares constant, entrywise
/// ratio spread, and fit residual.
pub fn proportionality(t: &SpinOperator, poly: &SpinOperator) -> EquivalentReport {
    let n = t.dim();
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = 0.0;
    let mut max_poly: f64 = 0.0;
    for r in 0..n {
        for c in 0..n {
            let p = poly.matrix()[(r, c)];
            num += t.matrix()[(r, c)] * p.conj();
            den += p.norm_sqr();
            max_poly = max_poly.max(p.norm());
        }
    }
    let ratio = num / den;
    let mut spread: f64 = 0.0;
    let mut residual: f64 = 0.0;
    let mut used = 0;
    for r in 0..n {
        for c in 0..n {
            let p = poly.matrix()[(r, c)];
            let tv = t.matrix()[(r, c)];
            residual = residual.max((tv - ratio * p).norm());
            if p.norm() > 1e-9 * max_poly {
                spread = spread.max((tv / p - ratio).norm());
                used += 1;
            }
        }
    }
    EquivalentReport { ratio, ratio_spread: spread, residual, entries_used: used }
}

/// The derivative-sum bracket `sum_{n=1}^{4} (1/n!) (d/dJ_z)^n p(J_z)` applied
/// to the quartic `p = 35 J_z^4 - 5 (6 kappa - 5) J_z^2 + 3 kappa (kappa - 2)`,
/// which reproduces `14 J_z^3 + 21 J_z^2 + (19 - 6 kappa) J_z + 3(2 - kappa)`
/// up to the overall factor 10.
pub fn marinelli_bracket(j: HalfInt) -> SpinOperator {
    let kappa = j.kappa();
    // p coefficients by power of J_z: [c0, c1, c2, c3, c4]
    let mut p = [3.0 * kappa * (kappa - 2.0), 0.0, -5.0 * (6.0 * kappa - 5.0), 0.0, 35.0];
    let mut acc = SpinOperator::zeros(j);
    let mut fact = 1.0;
    for n in 1..=4u32 {
        fact *= n as f64;
        // differentiate once
        let mut d = [0.0; 5];
        for (k, slot) in d.iter_mut().enumerate().take(4) {
            *slot = p[k + 1] * (k as f64 + 1.0);
        }
        p = d;
        acc = acc.add(&diagonal_polynomial(j, &p).scale(Complex64::new(1.0 / fact, 0.0)));
    }
    acc
}

/// Checks that `T_{lambda k}` is proportional to its tabulated polynomial
/// equivalent. Implemented pairs: `(0,0)`, `(6,0)`, and `(4,1)` (the latter
/// additionally cross-checked against the derivative-sum construction).
pub fn operator_equivalent_check(j: HalfInt, lambda: u32, k: u32) -> Result<EquivalentReport> {
    let kappa = j.kappa();
    let t = polarization_t(j, lambda, k as i32)?;
    let poly = match (lambda, k) {
        (0, 0) => SpinOperator::identity(j),
        (6, 0) => diagonal_polynomial(
            j,
            &[
                -5.0 * kappa * (kappa * kappa - 8.0 * kappa + 12.0),
                0.0,
                21.0 * (5.0 * kappa * kappa - 25.0 * kappa + 14.0),
                0.0,
                -105.0 * (3.0 * kappa - 7.0),
                0.0,
                231.0,
            ],
        ),
        (4, 1) => {
            let bracket = diagonal_polynomial(
                j,
                &[3.0 * (2.0 - kappa), 19.0 - 6.0 * kappa, 21.0, 14.0],
            );
            spin_plus(j).mul(&bracket)
        }
        _ => {
            return Err(Error::RankOutOfRange { lambda, max: 6 });
        }
    };
    Ok(proportionality(&t, &poly))
}
