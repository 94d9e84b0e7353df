//! Exact half-integer arithmetic for angular momenta and projections.
//!
//! A [`HalfInt`] stores twice its value, so all quantum-number arithmetic
//! (sums, differences, parity checks) is exact integer arithmetic. Conversion
//! to `f64` happens only at the boundary of a numerical computation.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// A half-integer: `value = twice / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// Builds from twice the value, e.g. `from_twice(3)` is 3/2.
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    /// Builds from an integer value.
    pub const fn new(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }

    /// `m` is a valid projection of `j` iff they have the same parity and
    /// `|m| <= j`.
    pub const fn is_projection_of(self, j: HalfInt) -> bool {
        (self.twice - j.twice) % 2 == 0 && self.twice.abs() <= j.twice
    }

    /// Hilbert-space dimension `2j + 1` of a spin-`j` multiplet.
    pub fn dimension(self) -> usize {
        debug_assert!(self.twice >= 0);
        self.twice as usize + 1
    }

    /// Basis index of projection `m`: `(twice(m) + twice(j)) / 2`, i.e. `m`
    /// ascending from `-j` to `+j`.
    pub fn basis_index(self, j: HalfInt) -> usize {
        debug_assert!(self.is_projection_of(j));
        ((self.twice + j.twice) / 2) as usize
    }

    /// Projection with the given basis index (inverse of [`basis_index`]).
    ///
    /// [`basis_index`]: HalfInt::basis_index
    pub fn projection_at(j: HalfInt, index: usize) -> HalfInt {
        HalfInt::from_twice(2 * index as i32 - j.twice)
    }

    /// Iterates the projections `-j, -j+1, ..., +j`.
    pub fn projections(j: HalfInt) -> impl DoubleEndedIterator<Item = HalfInt> {
        (0..j.dimension()).map(move |i| HalfInt::projection_at(j, i))
    }

    /// `j(j+1)`, exact in `f64` for any representable `j`.
    pub fn kappa(self) -> f64 {
        let t = i64::from(self.twice);
        (t * (t + 2)) as f64 / 4.0
    }

    /// `(-1)^self`; requires an integer value.
    pub fn parity_phase(self) -> f64 {
        debug_assert!(self.is_integer(), "phase of non-integer {self}");
        if (self.twice / 2) % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `"2"`, `"-3/2"`, and decimal forms `"1.5"`, `"-0.5"`.
impl FromStr for HalfInt {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(format!("half-integer denominator must be 2: {s}"));
            }
            let n: i32 = num
                .trim()
                .parse()
                .map_err(|_| format!("invalid half-integer: {s}"))?;
            return Ok(HalfInt::from_twice(n));
        }
        if let Ok(n) = s.parse::<i32>() {
            return Ok(HalfInt::new(n));
        }
        let x: f64 = s.parse().map_err(|_| format!("invalid half-integer: {s}"))?;
        let twice = 2.0 * x;
        if (twice - twice.round()).abs() > 1e-9 {
            return Err(format!("not a half-integer: {s}"));
        }
        Ok(HalfInt::from_twice(twice.round() as i32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let j = HalfInt::from_twice(3); // 3/2
        let m = HalfInt::from_twice(-1); // -1/2
        assert_eq!((j + m).twice(), 2);
        assert_eq!((j - m).twice(), 4);
        assert_eq!((-m).twice(), 1);
        assert!(m < j);
        assert_eq!(j.to_f64(), 1.5);
    }

    #[test]
    fn projection_validity_requires_parity_and_range() {
        let j = HalfInt::from_twice(3);
        assert!(HalfInt::from_twice(1).is_projection_of(j));
        assert!(!HalfInt::new(1).is_projection_of(j)); // wrong parity
        assert!(!HalfInt::from_twice(5).is_projection_of(j)); // out of range
    }

    #[test]
    fn basis_ordering_ascends_from_minus_j() {
        let j = HalfInt::new(1);
        let ms: Vec<i32> = HalfInt::projections(j).map(|m| m.twice()).collect();
        assert_eq!(ms, vec![-2, 0, 2]);
        assert_eq!(HalfInt::new(-1).basis_index(j), 0);
        assert_eq!(HalfInt::new(1).basis_index(j), 2);
    }

    #[test]
    fn parity_phase_agrees_both_ways() {
        // (-1)^{j-m} = (-1)^{m-j} since j-m is an integer
        for tj in 0..=9 {
            let j = HalfInt::from_twice(tj);
            for m in HalfInt::projections(j) {
                assert_eq!((j - m).parity_phase(), (m - j).parity_phase());
            }
        }
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap().twice(), 3);
        assert_eq!("-1/2".parse::<HalfInt>().unwrap().twice(), -1);
        assert_eq!("2".parse::<HalfInt>().unwrap().twice(), 4);
        assert_eq!("1.5".parse::<HalfInt>().unwrap().twice(), 3);
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn kappa_is_j_times_j_plus_one() {
        assert_eq!(HalfInt::from_twice(1).kappa(), 0.75);
        assert_eq!(HalfInt::new(2).kappa(), 6.0);
    }
}
