//! Matrix representations on the spin-j multiplet: spin components,
//! polarization operators, Chebyshev polynomial operators, projectors,
//! rotation operators, and operator-equivalent checks.

mod equivalents;
mod legendre_ops;
mod projectors;
mod rotations;

pub use equivalents::{
    marinelli_bracket, operator_equivalent_check, proportionality, EquivalentReport,
};
pub use legendre_ops::{j_squared_bracket, legendre_op_schwinger, legendre_op_zemach};
pub use projectors::{coherent_projector, projector, projector_canonical};
pub use rotations::{matrix_exp_i_hermitian, rotation_corio, rotation_exact};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::angular::racah_c;
use crate::cheb::{cheb_scalar, recursion_g};
use crate::direction::UnitVector;
use crate::error::{Error, Result};
use crate::half::HalfInt;

/// A dense complex operator on the spin-`j` multiplet, basis ordered by `m`
/// ascending from `-j` to `+j`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinOperator {
    j: HalfInt,
    mat: DMatrix<Complex64>,
}

impl SpinOperator {
    pub fn new(j: HalfInt, mat: DMatrix<Complex64>) -> Self {
        assert_eq!(mat.nrows(), j.dimension());
        assert_eq!(mat.ncols(), j.dimension());
        SpinOperator { j, mat }
    }

    pub fn zeros(j: HalfInt) -> Self {
        let d = j.dimension();
        SpinOperator { j, mat: DMatrix::zeros(d, d) }
    }

    pub fn identity(j: HalfInt) -> Self {
        let d = j.dimension();
        SpinOperator { j, mat: DMatrix::identity(d, d) }
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.j.dimension()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.mat
    }

    pub fn entry(&self, row: HalfInt, col: HalfInt) -> Complex64 {
        self.mat[(row.basis_index(self.j), col.basis_index(self.j))]
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    pub fn adjoint(&self) -> SpinOperator {
        SpinOperator { j: self.j, mat: self.mat.adjoint() }
    }

    /// `max_ij |M - M^dagger|_ij`.
    pub fn hermiticity_residual(&self) -> f64 {
        (&self.mat - self.mat.adjoint()).map(|z| z.norm()).max()
    }

    /// `max_ij |A - B|_ij`.
    pub fn max_diff(&self, other: &SpinOperator) -> f64 {
        (&self.mat - &other.mat).map(|z| z.norm()).max()
    }

    pub fn frobenius_diff(&self, other: &SpinOperator) -> f64 {
        (&self.mat - &other.mat).norm()
    }

    pub fn scale(&self, factor: Complex64) -> SpinOperator {
        SpinOperator { j: self.j, mat: &self.mat * factor }
    }

    pub fn mul(&self, other: &SpinOperator) -> SpinOperator {
        debug_assert_eq!(self.j, other.j);
        SpinOperator { j: self.j, mat: &self.mat * &other.mat }
    }

    pub fn add(&self, other: &SpinOperator) -> SpinOperator {
        debug_assert_eq!(self.j, other.j);
        SpinOperator { j: self.j, mat: &self.mat + &other.mat }
    }

    pub fn sub(&self, other: &SpinOperator) -> SpinOperator {
        debug_assert_eq!(self.j, other.j);
        SpinOperator { j: self.j, mat: &self.mat - &other.mat }
    }

    /// `Tr[A B]`.
    pub fn trace_product(&self, other: &SpinOperator) -> Complex64 {
        debug_assert_eq!(self.j, other.j);
        let mut t = Complex64::new(0.0, 0.0);
        let n = self.dim();
        for r in 0..n {
            for k in 0..n {
                t += self.mat[(r, k)] * other.mat[(k, r)];
            }
        }
        t
    }
}

fn ensure_rank(j: HalfInt, lambda: u32) -> Result<()> {
    if j.is_negative() {
        return Err(Error::NegativeJ { j });
    }
    if lambda > j.twice() as u32 {
        return Err(Error::RankOutOfRange { lambda, max: j.twice() as u32 });
    }
    Ok(())
}

/// Cartesian spin components `(J_x, J_y, J_z)` from the ladder construction.
pub fn spin_matrices(j: HalfInt) -> (SpinOperator, SpinOperator, SpinOperator) {
    let dim = j.dimension();
    let mut jp = DMatrix::<Complex64>::zeros(dim, dim);
    for m in HalfInt::projections(j) {
        if m == j {
            continue;
        }
        // <m+1| J_+ |m> = sqrt(j(j+1) - m(m+1))
        let up = m + HalfInt::new(1);
        let amp = (j.kappa() - m.to_f64() * up.to_f64()).sqrt();
        jp[(up.basis_index(j), m.basis_index(j))] = Complex64::new(amp, 0.0);
    }
    let jm = jp.adjoint();
    let jx = (&jp + &jm) * Complex64::new(0.5, 0.0);
    let jy = (&jp - &jm) * Complex64::new(0.0, -0.5);
    let mut jz = DMatrix::<Complex64>::zeros(dim, dim);
    for m in HalfInt::projections(j) {
        jz[(m.basis_index(j), m.basis_index(j))] = Complex64::new(m.to_f64(), 0.0);
    }
    (
        SpinOperator::new(j, jx),
        SpinOperator::new(j, jy),
        SpinOperator::new(j, jz),
    )
}

/// Raising operator `J_+`.
pub fn spin_plus(j: HalfInt) -> SpinOperator {
    let (jx, jy, _) = spin_matrices(j);
    SpinOperator::new(j, jx.mat + jy.mat * Complex64::i())
}

/// `n.J` for a direction `n`.
pub fn dot_j(j: HalfInt, n: &UnitVector) -> SpinOperator {
    let (jx, jy, jz) = spin_matrices(j);
    let [x, y, z] = n.cartesian();
    SpinOperator::new(
        j,
        jx.mat * Complex64::new(x, 0.0)
            + jy.mat * Complex64::new(y, 0.0)
            + jz.mat * Complex64::new(z, 0.0),
    )
}

/// Spin polarization operator `T_{lambda mu}` with matrix elements
/// `<j m'| T_{lambda mu} |j m> = sqrt((2 lambda + 1)/(2j+1)) C^{j m'}_{j m
/// lambda mu}`.
pub fn polarization_t(j: HalfInt, lambda: u32, mu: i32) -> Result<SpinOperator> {
    ensure_rank(j, lambda)?;
    if mu.unsigned_abs() > lambda {
        return Err(Error::OrderOutOfRange { lambda, mu });
    }
    let lam = HalfInt::new(lambda as i32);
    let muh = HalfInt::new(mu);
    let dim = j.dimension();
    let scale = (((2 * lambda + 1) as f64) / (dim as f64)).sqrt();
    let mut mat = DMatrix::<Complex64>::zeros(dim, dim);
    for m in HalfInt::projections(j) {
        let mp = m + muh;
        if !mp.is_projection_of(j) {
            continue;
        }
        let cg = crate::angular::clebsch_gordan(j, m, lam, muh, j, mp)?;
        mat[(mp.basis_index(j), m.basis_index(j))] = Complex64::new(scale * cg, 0.0);
    }
    Ok(SpinOperator::new(j, mat))
}

/// `f_lambda^(j)(J_z) = T_{lambda 0}`: the diagonal matrix of the scalar
/// Chebyshev values.
pub fn cheb_op_jz(j: HalfInt, lambda: u32) -> Result<SpinOperator> {
    ensure_rank(j, lambda)?;
    let dim = j.dimension();
    let mut mat = DMatrix::<Complex64>::zeros(dim, dim);
    for m in HalfInt::projections(j) {
        let i = m.basis_index(j);
        mat[(i, i)] = Complex64::new(cheb_scalar(j, lambda, m)?, 0.0);
    }
    Ok(SpinOperator::new(j, mat))
}

/// `f_lambda^(j)(n.J) = sum_mu conj(C_{lambda mu}(n)) T_{lambda mu}`
/// (production route).
pub fn cheb_op_n(j: HalfInt, lambda: u32, n: &UnitVector) -> Result<SpinOperator> {
    ensure_rank(j, lambda)?;
    let mut acc = SpinOperator::zeros(j);
    for mu in -(lambda as i32)..=lambda as i32 {
        let c = racah_c(lambda, mu, n)?.conj();
        acc = acc.add(&polarization_t(j, lambda, mu)?.scale(c));
    }
    Ok(acc)
}

/// Precomputed polarization operators for one `j`, so that
/// `f_lambda^(j)(n.J)` for many directions costs only harmonics and matrix
/// scale-adds instead of fresh Clebsch-Gordan sums.
#[derive(Clone, Debug)]
pub struct ChebOpBasis {
    j: HalfInt,
    // t[lambda][mu + lambda]
    t: Vec<Vec<SpinOperator>>,
}

impl ChebOpBasis {
    pub fn build(j: HalfInt) -> Result<ChebOpBasis> {
        let mut t = Vec::with_capacity(j.dimension());
        for lambda in 0..=j.twice() as u32 {
            let mut row = Vec::with_capacity(2 * lambda as usize + 1);
            for mu in -(lambda as i32)..=lambda as i32 {
                row.push(polarization_t(j, lambda, mu)?);
            }
            t.push(row);
        }
        Ok(ChebOpBasis { j, t })
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    /// `f_lambda^(j)(n.J)` from the cached `T_{lambda mu}`.
    pub fn op(&self, lambda: u32, n: &UnitVector) -> Result<SpinOperator> {
        ensure_rank(self.j, lambda)?;
        let dim = self.j.dimension();
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for mu in -(lambda as i32)..=lambda as i32 {
            let c = racah_c(lambda, mu, n)?.conj();
            let t = self.t[lambda as usize][(mu + lambda as i32) as usize].matrix();
            acc.zip_apply(t, |a, b| *a += c * b);
        }
        Ok(SpinOperator::new(self.j, acc))
    }

    /// All ranks for one direction.
    pub fn ops_for(&self, n: &UnitVector) -> Result<Vec<SpinOperator>> {
        (0..=self.j.twice() as u32).map(|l| self.op(l, n)).collect()
    }
}

/// `f_lambda^(j)(n.J)` by the similarity transform
/// `e^{-i theta (n_perp.J)} f_lambda(J_z) e^{+i theta (n_perp.J)}`.
pub fn cheb_op_n_similarity(j: HalfInt, lambda: u32, n: &UnitVector) -> Result<SpinOperator> {
    ensure_rank(j, lambda)?;
    let u = rotation_exact_angle_axis(j, n.theta(), &n.perp_axis());
    Ok(SpinOperator::new(
        j,
        u.matrix() * cheb_op_jz(j, lambda)?.matrix() * u.matrix().adjoint(),
    ))
}

/// `f_lambda^(j)(n.J)` by running the scalar three-term recursion directly on
/// the operator argument `n.J`.
pub fn cheb_op_n_recursion(j: HalfInt, lambda: u32, n: &UnitVector) -> Result<SpinOperator> {
    ensure_rank(j, lambda)?;
    let x2 = dot_j(j, n).scale(Complex64::new(2.0, 0.0));
    let mut prev = SpinOperator::zeros(j);
    let mut cur =
        SpinOperator::identity(j).scale(Complex64::new(1.0 / (j.dimension() as f64).sqrt(), 0.0));
    for l in 0..lambda {
        let next = x2
            .mul(&cur)
            .sub(&prev.scale(Complex64::new(recursion_g(l, j), 0.0)))
            .scale(Complex64::new(1.0 / recursion_g(l + 1, j), 0.0));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn rotation_exact_angle_axis(j: HalfInt, psi: f64, axis: &UnitVector) -> SpinOperator {
    rotations::rotation_exact(
        j,
        &crate::angular::RotationParams::angle_axis(psi, *axis),
    )
}

/// `Tr[f_lambda(a.J) f_lambda'(b.J)] = delta_{lambda lambda'} P_lambda(a.b)`.
pub fn cheb_op_trace_pair(
    j: HalfInt,
    lambda: u32,
    lambda_p: u32,
    a: &UnitVector,
    b: &UnitVector,
) -> Result<f64> {
    let fa = cheb_op_n(j, lambda, a)?;
    let fb = cheb_op_n(j, lambda_p, b)?;
    let t = fa.trace_product(&fb);
    debug_assert!(t.im.abs() < 1e-10);
    Ok(t.re)
}
