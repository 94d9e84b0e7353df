//! Directions on the unit sphere.

use std::f64::consts::{FRAC_PI_2, PI};

/// A direction on S², stored as polar angles in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVector {
    theta: f64,
    phi: f64,
}

impl UnitVector {
    pub const Z: UnitVector = UnitVector { theta: 0.0, phi: 0.0 };
    pub const X: UnitVector = UnitVector { theta: FRAC_PI_2, phi: 0.0 };
    pub const Y: UnitVector = UnitVector { theta: FRAC_PI_2, phi: FRAC_PI_2 };

    /// From polar angles; `theta` is clamped to `[0, pi]`, `phi` wrapped to
    /// `[0, 2pi)`.
    pub fn new(theta: f64, phi: f64) -> Self {
        UnitVector {
            theta: theta.clamp(0.0, PI),
            phi: phi.rem_euclid(2.0 * PI),
        }
    }

    pub fn from_cartesian(x: f64, y: f64, z: f64) -> Self {
        let r = (x * x + y * y + z * z).sqrt();
        assert!(r > 0.0, "zero vector has no direction");
        UnitVector::new((z / r).clamp(-1.0, 1.0).acos(), y.atan2(x))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn cartesian(&self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }

    pub fn dot(&self, other: &UnitVector) -> f64 {
        let a = self.cartesian();
        let b = other.cartesian();
        (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]).clamp(-1.0, 1.0)
    }

    /// The axis `(-sin phi, cos phi, 0)` perpendicular to the plane spanned by
    /// `z` and `self`; rotating `z` about it by `theta` yields `self`.
    pub fn perp_axis(&self) -> UnitVector {
        UnitVector::new(FRAC_PI_2, self.phi + FRAC_PI_2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartesian_round_trip() {
        let n = UnitVector::new(1.1, 2.3);
        let [x, y, z] = n.cartesian();
        let m = UnitVector::from_cartesian(x, y, z);
        assert!((n.theta() - m.theta()).abs() < 1e-14);
        assert!((n.phi() - m.phi()).abs() < 1e-14);
        assert!((x * x + y * y + z * z - 1.0).abs() < 1e-14);
    }

    #[test]
    fn perp_axis_is_orthogonal() {
        let n = UnitVector::new(0.7, 5.1);
        let p = n.perp_axis();
        assert!(n.dot(&p).abs() < 1e-14);
        assert!(p.cartesian()[2].abs() < 1e-14);
        let c = p.cartesian();
        assert!((c[0] + n.phi().sin()).abs() < 1e-14);
        assert!((c[1] - n.phi().cos()).abs() < 1e-14);
    }
}
