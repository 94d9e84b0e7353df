//! Shared exact factorial cache.
//!
//! Clebsch-Gordan sums and the finite-difference Chebyshev route both need
//! exact factorials well past the `u64` range (`2j <= 100` means arguments up
//! to ~201). The cache grows on demand behind a mutex and is only ever
//! appended to.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

static CACHE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `n!` as an exact big integer.
pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    let mut cache = CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(BigInt::one());
    }
    while cache.len() <= n {
        let next = cache.last().unwrap() * cache.len();
        cache.push(next);
    }
    cache[n].clone()
}

/// `(2n - 1)!! / (2n)!!` in `f64`; the empty product at `n = 0` is 1.
pub fn odd_even_double_factorial_ratio(n: u32) -> f64 {
    let mut r = 1.0;
    for k in 1..=n {
        r *= (2 * k - 1) as f64 / (2 * k) as f64;
    }
    r
}

/// `sign(r) * sqrt(|r|)` of an exact rational, converted at the end.
pub fn signed_sqrt(r: &BigRational) -> f64 {
    let x = r.abs().to_f64().unwrap_or(f64::INFINITY).sqrt();
    if r.is_negative() {
        -x
    } else {
        x
    }
}
