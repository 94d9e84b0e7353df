//! Phase-space and tomographic maps: the Stratonovich-Weyl kernel, spin
//! tomogram / Husimi Q / Wigner W distributions, the quantizer-dequantizer
//! pair, and reconstruction of the density operator by spherical quadrature.

mod grid;

pub use grid::{gauss_legendre, GridNode, KahanSum, SphericalGrid};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::angular::{legendre_p, racah_c};
use crate::cheb::ChebTable;
use crate::direction::UnitVector;
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::operators::{
    cheb_op_n, coherent_projector, matrix_exp_i_hermitian, projector, ChebOpBasis,
    SpinOperator,
};

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    op: SpinOperator,
}

impl DensityMatrix {
    /// Validates Hermiticity (`1e-12`), trace (`1e-12`), and eigenvalue
    /// positivity (`>= -1e-12`).
    pub fn new(op: SpinOperator) -> Result<DensityMatrix> {
        let herm = op.hermiticity_residual();
        if herm >= 1e-12 {
            return Err(Error::InvalidDensity {
                reason: format!("hermiticity residual {herm:.3e}"),
            });
        }
        let tr = op.trace();
        if (tr.re - 1.0).abs() >= 1e-12 || tr.im.abs() >= 1e-12 {
            return Err(Error::InvalidDensity { reason: format!("trace {tr}") });
        }
        let eig = op.matrix().clone().symmetric_eigen();
        if let Some(min) = eig
            .eigenvalues
            .iter()
            .cloned()
            .min_by(|a, b| a.partial_cmp(b).unwrap())
        {
            if min < -1e-12 {
                return Err(Error::InvalidDensity {
                    reason: format!("negative eigenvalue {min:.3e}"),
                });
            }
        }
        Ok(DensityMatrix { op })
    }

    pub fn j(&self) -> HalfInt {
        self.op.j()
    }

    pub fn op(&self) -> &SpinOperator {
        &self.op
    }

    /// Maximally mixed state `I/(2j+1)`.
    pub fn maximally_mixed(j: HalfInt) -> DensityMatrix {
        let d = j.dimension() as f64;
        DensityMatrix {
            op: SpinOperator::identity(j).scale(Complex64::new(1.0 / d, 0.0)),
        }
    }

    /// Projector onto the basis state `|j m>`.
    pub fn basis_state(j: HalfInt, m: HalfInt) -> Result<DensityMatrix> {
        if !m.is_projection_of(j) {
            return Err(Error::InvalidProjection { j, m });
        }
        let mut mat = DMatrix::zeros(j.dimension(), j.dimension());
        mat[(m.basis_index(j), m.basis_index(j))] = Complex64::new(1.0, 0.0);
        Ok(DensityMatrix { op: SpinOperator::new(j, mat) })
    }

    /// Coherent state `|n, j><n, j|`.
    pub fn coherent(j: HalfInt, n: &UnitVector) -> Result<DensityMatrix> {
        let op = coherent_projector(j, n)?;
        // symmetrize away expansion roundoff before validating
        let sym = op.add(&op.adjoint()).scale(Complex64::new(0.5, 0.0));
        DensityMatrix::new(sym)
    }

    /// Seeded random density matrix `A A^dagger / Tr[A A^dagger]` with `A`
    /// complex Gaussian; PSD by construction. The generator is ChaCha8 with a
    /// 64-bit seed, so the state is reproducible across runs and platforms.
    pub fn random(j: HalfInt, seed: u64) -> DensityMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = j.dimension();
        let mut gauss = || {
            // Box-Muller
            let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
            let u2: f64 = rng.gen_range(0.0..1.0);
            let r = (-2.0 * u1.ln()).sqrt();
            (r * (2.0 * std::f64::consts::PI * u2).cos(),
             r * (2.0 * std::f64::consts::PI * u2).sin())
        };
        let a = DMatrix::from_fn(dim, dim, |_, _| {
            let (re, im) = gauss();
            Complex64::new(re, im)
        });
        let prod = &a * a.adjoint();
        let tr = prod.trace();
        DensityMatrix {
            op: SpinOperator::new(j, prod / tr),
        }
    }

    pub fn frobenius_diff(&self, other: &DensityMatrix) -> f64 {
        self.op.frobenius_diff(&other.op)
    }
}

/// Stratonovich-Weyl kernel
/// `Delta^(j)(n) = (1/sqrt(2j+1)) sum_lambda sqrt(2 lambda + 1)
/// f_lambda(n.J)`; Hermitian with unit trace.
pub fn sw_kernel(j: HalfInt, n: &UnitVector) -> Result<SpinOperator> {
    let mut acc = SpinOperator::zeros(j);
    for lambda in 0..=j.twice() as u32 {
        let c = ((2 * lambda + 1) as f64).sqrt();
        acc = acc.add(&cheb_op_n(j, lambda, n)?.scale(Complex64::new(c, 0.0)));
    }
    Ok(acc.scale(Complex64::new(1.0 / (j.dimension() as f64).sqrt(), 0.0)))
}

/// Reproducing kernel for the Stratonovich-Weyl operators,
/// `delta_Delta(n, n') = sum_lambda ((2 lambda + 1)/4 pi) P_lambda(n.n')`.
pub fn sw_delta(j: HalfInt, n: &UnitVector, n_prime: &UnitVector) -> f64 {
    let x = n.dot(n_prime);
    let mut sum = 0.0;
    for lambda in 0..=j.twice() as u32 {
        sum += (2 * lambda + 1) as f64 * legendre_p(lambda, x);
    }
    sum / (4.0 * std::f64::consts::PI)
}

/// Dequantizer `Pi(m, n)`: the projection operator.
pub fn dequantizer(j: HalfInt, m: HalfInt, n: &UnitVector) -> Result<SpinOperator> {
    projector(j, m, n)
}

/// Quantizer `Xi(m, n) = sum_lambda (2 lambda + 1) f_lambda(m)
/// f_lambda(n.J)`.
pub fn quantizer(j: HalfInt, m: HalfInt, n: &UnitVector) -> Result<SpinOperator> {
    if !m.is_projection_of(j) {
        return Err(Error::InvalidProjection { j, m });
    }
    let table = ChebTable::build(j)?;
    let mut acc = SpinOperator::zeros(j);
    for lambda in 0..=j.twice() as u32 {
        let c = (2 * lambda + 1) as f64 * table.value(lambda, m);
        acc = acc.add(&cheb_op_n(j, lambda, n)?.scale(Complex64::new(c, 0.0)));
    }
    Ok(acc)
}

/// Tomogram kernel
/// `delta_w(m, n; m', n') = sum_lambda (2 lambda + 1) f_lambda(m)
/// f_lambda(m') P_lambda(n.n') = Tr[Xi(m', n') Pi(m, n)]`.
pub fn tomogram_kernel(
    j: HalfInt,
    m: HalfInt,
    n: &UnitVector,
    m_prime: HalfInt,
    n_prime: &UnitVector,
) -> Result<f64> {
    let table = ChebTable::build(j)?;
    let x = n.dot(n_prime);
    let mut sum = 0.0;
    for lambda in 0..=j.twice() as u32 {
        sum += (2 * lambda + 1) as f64
            * table.value(lambda, m)
            * table.value(lambda, m_prime)
            * legendre_p(lambda, x);
    }
    Ok(sum)
}

/// Spin tomogram of a state: `w(m, k) = Tr[rho Pi(m, n_k)]` over grid nodes.
#[derive(Clone, Debug)]
pub struct Tomogram {
    j: HalfInt,
    /// `values[m_index][node_index]`
    values: Vec<Vec<f64>>,
}

impl Tomogram {
    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn value(&self, m: HalfInt, node: usize) -> f64 {
        self.values[m.basis_index(self.j)][node]
    }

    /// Worst deviation of `sum_m w(m, n)` from 1 over all nodes.
    pub fn normalization_residual(&self) -> f64 {
        let nodes = self.values[0].len();
        let mut worst: f64 = 0.0;
        for k in 0..nodes {
            let s: f64 = self.values.iter().map(|row| row[k]).sum();
            worst = worst.max((s - 1.0).abs());
        }
        worst
    }

    /// Most negative tomogram value (0 if none).
    pub fn min_value(&self) -> f64 {
        self.values
            .iter()
            .flat_map(|row| row.iter().cloned())
            .fold(0.0, f64::min)
    }
}

/// Per-node Chebyshev operator basis `f_lambda(n_k.J)`, shared by the
/// distribution and reconstruction routines. The polarization operators are
/// built once; each node then costs only harmonics and scale-adds.
fn node_basis(j: HalfInt, grid: &SphericalGrid) -> Result<Vec<Vec<SpinOperator>>> {
    let cached = ChebOpBasis::build(j)?;
    let mut basis = Vec::with_capacity(grid.len());
    for node in grid.nodes() {
        basis.push(cached.ops_for(&node.dir)?);
    }
    Ok(basis)
}

/// Measures the spin tomogram of `rho` on every grid node.
pub fn tomogram_of(rho: &DensityMatrix, grid: &SphericalGrid) -> Result<Tomogram> {
    let j = rho.j();
    let table = ChebTable::build(j)?;
    let basis = node_basis(j, grid)?;
    let dim = j.dimension();
    let mut values = vec![vec![0.0; grid.len()]; dim];
    for (k, per_node) in basis.iter().enumerate() {
        // F_lambda = Tr[rho f_lambda(n.J)] once per node
        let f: Vec<f64> = per_node
            .iter()
            .map(|op| rho.op().trace_product(op).re)
            .collect();
        for m in HalfInt::projections(j) {
            let mut w = 0.0;
            for (lambda, fl) in f.iter().enumerate() {
                w += table.value(lambda as u32, m) * fl;
            }
            values[m.basis_index(j)][k] = w;
        }
    }
    Ok(Tomogram { j, values })
}

fn ensure_grid(j: HalfInt, grid: &SphericalGrid) -> Result<()> {
    let need = 2 * j.twice() as u32;
    if grid.exactness_degree() < need {
        return Err(Error::GridTooCoarse { have: grid.exactness_degree(), need });
    }
    Ok(())
}

/// Reconstructs the density operator from a tomogram:
/// `rho = (1/4 pi) sum_m (integral of w(m, n) Xi(m, n) dn)`.
pub fn reconstruct_density(w: &Tomogram, grid: &SphericalGrid) -> Result<DensityMatrix> {
    let j = w.j;
    ensure_grid(j, grid)?;
    let table = ChebTable::build(j)?;
    let basis = node_basis(j, grid)?;
    let dim = j.dimension();
    let mut re = vec![KahanSum::default(); dim * dim];
    let mut im = vec![KahanSum::default(); dim * dim];
    for (k, node) in grid.nodes().iter().enumerate() {
        // sum_m w(m, n_k) Xi(m, n_k), assembled on the shared basis
        let mut coef = vec![0.0; dim];
        for m in HalfInt::projections(j) {
            let wv = w.value(m, k);
            for (lambda, c) in coef.iter_mut().enumerate() {
                *c += (2 * lambda as u32 + 1) as f64 * table.value(lambda as u32, m) * wv;
            }
        }
        let scale = node.weight / (4.0 * std::f64::consts::PI);
        for (lambda, c) in coef.iter().enumerate() {
            for (idx, z) in basis[k][lambda].matrix().iter().enumerate() {
                re[idx].add(scale * c * z.re);
                im[idx].add(scale * c * z.im);
            }
        }
    }
    let mat = DMatrix::from_iterator(
        dim,
        dim,
        re.iter().zip(im.iter()).map(|(a, b)| Complex64::new(a.value(), b.value())),
    );
    DensityMatrix::new(SpinOperator::new(j, mat))
}

/// Husimi function `Q(n) = Tr[rho Pi(j, n)] = <n, j| rho |n, j>`.
pub fn husimi_q(rho: &DensityMatrix, n: &UnitVector) -> Result<f64> {
    let p = coherent_projector(rho.j(), n)?;
    Ok(rho.op().trace_product(&p).re)
}

/// Wigner function `W(n) = Tr[rho Delta(n)]`.
pub fn wigner_w(rho: &DensityMatrix, n: &UnitVector) -> Result<f64> {
    let k = sw_kernel(rho.j(), n)?;
    Ok(rho.op().trace_product(&k).re)
}

/// `Q` and `W` sampled on every grid node through one shared operator basis:
/// `Q = sum_lambda f_lambda(j) F_lambda(n)` and
/// `W = sum_lambda sqrt((2 lambda + 1)/(2j+1)) F_lambda(n)` with
/// `F_lambda(n) = Tr[rho f_lambda(n.J)]`.
pub fn husimi_wigner_samples(
    rho: &DensityMatrix,
    grid: &SphericalGrid,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let j = rho.j();
    let table = ChebTable::build(j)?;
    let basis = node_basis(j, grid)?;
    let dim_f = j.dimension() as f64;
    let mut q = Vec::with_capacity(grid.len());
    let mut w = Vec::with_capacity(grid.len());
    for per_node in &basis {
        let mut qv = 0.0;
        let mut wv = 0.0;
        for (lambda, op) in per_node.iter().enumerate() {
            let f = rho.op().trace_product(op).re;
            qv += table.value(lambda as u32, j) * f;
            wv += ((2 * lambda as u32 + 1) as f64 / dim_f).sqrt() * f;
        }
        q.push(qv);
        w.push(wv);
    }
    Ok((q, w))
}

/// Shared reconstruction core `rho = sum_lambda g_lambda (integral of D(n)
/// F_lambda(n) f_lambda(n.J) dn)` with `F_lambda = (2 lambda + 1)/(4 pi)`
/// and per-rank gains `g_lambda`.
fn reconstruct_from_samples(
    j: HalfInt,
    samples: &[f64],
    grid: &SphericalGrid,
    gains: &[f64],
) -> Result<DensityMatrix> {
    ensure_grid(j, grid)?;
    assert_eq!(samples.len(), grid.len());
    let basis = node_basis(j, grid)?;
    let dim = j.dimension();
    let mut re = vec![KahanSum::default(); dim * dim];
    let mut im = vec![KahanSum::default(); dim * dim];
    for (k, node) in grid.nodes().iter().enumerate() {
        for (lambda, gain) in gains.iter().enumerate() {
            let c = node.weight * samples[k] * gain * (2 * lambda as u32 + 1) as f64
                / (4.0 * std::f64::consts::PI);
            for (idx, z) in basis[k][lambda].matrix().iter().enumerate() {
                re[idx].add(c * z.re);
                im[idx].add(c * z.im);
            }
        }
    }
    let mat = DMatrix::from_iterator(
        dim,
        dim,
        re.iter().zip(im.iter()).map(|(a, b)| Complex64::new(a.value(), b.value())),
    );
    DensityMatrix::new(SpinOperator::new(j, mat))
}

/// Reconstruction from Husimi samples divides by `f_lambda(j)`, which is
/// small near `lambda = 2j`; returns the result together with the largest
/// inverse-coefficient magnitude as a conditioning figure.
pub fn reconstruct_from_husimi(
    j: HalfInt,
    samples: &[f64],
    grid: &SphericalGrid,
) -> Result<(DensityMatrix, f64)> {
    let table = ChebTable::build(j)?;
    let gains: Vec<f64> = (0..=j.twice() as u32)
        .map(|l| 1.0 / table.value(l, j))
        .collect();
    let cond = gains.iter().fold(0.0f64, |a, &g| a.max(g.abs()));
    Ok((reconstruct_from_samples(j, samples, grid, &gains)?, cond))
}

/// Reconstruction from Wigner samples uses gains
/// `sqrt((2j+1)/(2 lambda + 1))`.
pub fn reconstruct_from_wigner(
    j: HalfInt,
    samples: &[f64],
    grid: &SphericalGrid,
) -> Result<DensityMatrix> {
    let dim_f = j.dimension() as f64;
    let gains: Vec<f64> = (0..=j.twice() as u32)
        .map(|l| (dim_f / (2 * l + 1) as f64).sqrt())
        .collect();
    reconstruct_from_samples(j, samples, grid, &gains)
}

/// Direct single-sum reconstruction
/// `rho = sum_lambda ((2 lambda + 1)/4 pi) integral f_lambda(n.J)
/// Tr[rho f_lambda(n.J)] dn`, sampling the state itself.
pub fn reconstruct_density_direct(
    rho: &DensityMatrix,
    grid: &SphericalGrid,
) -> Result<DensityMatrix> {
    let j = rho.j();
    ensure_grid(j, grid)?;
    let basis = node_basis(j, grid)?;
    let dim = j.dimension();
    let mut re = vec![KahanSum::default(); dim * dim];
    let mut im = vec![KahanSum::default(); dim * dim];
    for (k, node) in grid.nodes().iter().enumerate() {
        for (lambda, op) in basis[k].iter().enumerate() {
            let f = rho.op().trace_product(op).re;
            let c = node.weight * f * (2 * lambda as u32 + 1) as f64
                / (4.0 * std::f64::consts::PI);
            for (idx, z) in op.matrix().iter().enumerate() {
                re[idx].add(c * z.re);
                im[idx].add(c * z.im);
            }
        }
    }
    let mat = DMatrix::from_iterator(
        dim,
        dim,
        re.iter().zip(im.iter()).map(|(a, b)| Complex64::new(a.value(), b.value())),
    );
    DensityMatrix::new(SpinOperator::new(j, mat))
}

/// Group-theoretic reconstruction
/// `rho = ((2j+1)/4 pi^2) int_0^{2 pi} d psi sin^2(psi/2) integral
/// Tr[rho e^{i psi n.J}] e^{-i psi n.J} dn`, with the psi integral on a
/// Gauss-Legendre grid of `n_psi` points.
///
/// The psi quadrature is not exact for the trigonometric integrand, so the
/// raw operator is returned; accuracy improves rapidly with `n_psi`.
pub fn reconstruct_density_group(
    rho: &DensityMatrix,
    grid: &SphericalGrid,
    n_psi: usize,
) -> Result<SpinOperator> {
    let j = rho.j();
    ensure_grid(j, grid)?;
    let dim = j.dimension();
    let psi_rule = gauss_legendre(n_psi);
    let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
    for node in grid.nodes() {
        let gen = crate::operators::dot_j(j, &node.dir);
        let eig = gen.matrix().clone().symmetric_eigen();
        for &(x, wpsi) in &psi_rule {
            // map [-1, 1] -> [0, 2 pi]
            let psi = (x + 1.0) * std::f64::consts::PI;
            let weight = wpsi * std::f64::consts::PI;
            let phases = DVector::from_iterator(
                dim,
                eig.eigenvalues.iter().map(|&ev| Complex64::from_polar(1.0, psi * ev)),
            );
            let plus = &eig.eigenvectors
                * DMatrix::from_diagonal(&phases)
                * eig.eigenvectors.adjoint();
            let minus = plus.adjoint();
            let tr: Complex64 = rho
                .op()
                .matrix()
                .iter()
                .zip(plus.transpose().iter())
                .map(|(a, b)| a * b)
                .sum();
            let s = (psi / 2.0).sin();
            acc += minus * (tr * weight * node.weight * s * s);
        }
    }
    let scale = dim as f64 / (4.0 * std::f64::consts::PI * std::f64::consts::PI);
    Ok(SpinOperator::new(j, acc * Complex64::new(scale, 0.0)))
}

/// `max |(2j+1)/(4 pi) integral |n,j><n,j| dn - I|`.
pub fn coherent_closure_residual(j: HalfInt, grid: &SphericalGrid) -> Result<f64> {
    let dim = j.dimension();
    let table = ChebTable::build(j)?;
    let basis = node_basis(j, grid)?;
    let mut k = 0;
    let integral = grid.integrate_matrix(dim, |_| {
        // Pi(j, n_k) assembled from the shared basis
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for (lambda, op) in basis[k].iter().enumerate() {
            acc += op.matrix() * Complex64::new(table.value(lambda as u32, j), 0.0);
        }
        k += 1;
        acc
    });
    let scaled = integral * Complex64::new(dim as f64 / (4.0 * std::f64::consts::PI), 0.0);
    let id = DMatrix::<Complex64>::identity(dim, dim);
    Ok((scaled - id).map(|z| z.norm()).max())
}

/// `T_{lambda mu}` recovered from the integral transform
/// `((2 lambda + 1)/4 pi) integral C_{lambda mu}(n) f_lambda(n.J) dn`.
pub fn t_from_integral(
    j: HalfInt,
    lambda: u32,
    mu: i32,
    grid: &SphericalGrid,
) -> Result<SpinOperator> {
    ensure_grid(j, grid)?;
    let dim = j.dimension();
    let mut ops = Vec::with_capacity(grid.len());
    for node in grid.nodes() {
        let c = racah_c(lambda, mu, &node.dir)?;
        ops.push(cheb_op_n(j, lambda, &node.dir)?.matrix() * c);
    }
    let mut k = 0;
    let integral = grid.integrate_matrix(dim, |_| {
        let m = ops[k].clone();
        k += 1;
        m
    });
    let scale = (2 * lambda + 1) as f64 / (4.0 * std::f64::consts::PI);
    Ok(SpinOperator::new(j, integral * Complex64::new(scale, 0.0)))
}

/// `T_{lambda mu}` from the coherent-state decomposition
/// `((2 lambda + 1)/4 pi) [f_lambda(j)]^{-1} integral C_{lambda mu}(n)
/// |n,j><n,j| dn`.
pub fn t_from_coherent_integral(
    j: HalfInt,
    lambda: u32,
    mu: i32,
    grid: &SphericalGrid,
) -> Result<SpinOperator> {
    ensure_grid(j, grid)?;
    let table = ChebTable::build(j)?;
    let basis = node_basis(j, grid)?;
    let dim = j.dimension();
    let mut ops = Vec::with_capacity(grid.len());
    for (k, node) in grid.nodes().iter().enumerate() {
        let c = racah_c(lambda, mu, &node.dir)?;
        let mut proj = DMatrix::<Complex64>::zeros(dim, dim);
        for (l, op) in basis[k].iter().enumerate() {
            proj += op.matrix() * Complex64::new(table.value(l as u32, j), 0.0);
        }
        ops.push(proj * c);
    }
    let mut k = 0;
    let integral = grid.integrate_matrix(dim, |_| {
        let m = ops[k].clone();
        k += 1;
        m
    });
    let scale = (2 * lambda + 1) as f64
        / (4.0 * std::f64::consts::PI * table.value(lambda, j));
    Ok(SpinOperator::new(j, integral * Complex64::new(scale, 0.0)))
}

/// Expansion coefficient route to `e^{-i psi n.J}` used by the group
/// reconstruction; exposed for tests of the character orthogonality weight.
pub fn rotation_plus(j: HalfInt, psi: f64, n: &UnitVector) -> SpinOperator {
    let gen = crate::operators::dot_j(j, n);
    SpinOperator::new(j, matrix_exp_i_hermitian(gen.matrix(), psi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::polarization_t;
    use approx::assert_abs_diff_eq;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn sw_kernel_unit_trace_and_hermitian() {
        for tj in 0..=6 {
            let j = h(tj);
            let n = UnitVector::new(0.8, 2.0);
            let k = sw_kernel(j, &n).unwrap();
            assert_abs_diff_eq!(k.trace().re, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(k.trace().im, 0.0, epsilon = 1e-12);
            assert!(k.hermiticity_residual() < 1e-13);
        }
    }

    #[test]
    fn sw_kernel_spin_half_closed_form() {
        // Delta = I/2 + sqrt(3) (n.J) at j = 1/2
        let j = h(1);
        let n = UnitVector::new(1.7, 0.1);
        let expect = SpinOperator::identity(j)
            .scale(Complex64::new(0.5, 0.0))
            .add(&crate::operators::dot_j(j, &n).scale(Complex64::new(3f64.sqrt(), 0.0)));
        assert!(sw_kernel(j, &n).unwrap().max_diff(&expect) < 1e-13);
    }

    #[test]
    fn sw_delta_closed_sum_matches_trace() {
        let j = h(3);
        let n = UnitVector::new(0.9, 0.4);
        let np = UnitVector::new(2.2, 3.9);
        let lhs = (j.dimension() as f64 / (4.0 * std::f64::consts::PI))
            * sw_kernel(j, &n)
                .unwrap()
                .trace_product(&sw_kernel(j, &np).unwrap())
                .re;
        assert_abs_diff_eq!(lhs, sw_delta(j, &n, &np), epsilon = 1e-11);
        // coincident directions: sum (2 lambda + 1) = (2j+1)^2 over 4 pi
        let dim2 = (j.dimension() * j.dimension()) as f64;
        assert_abs_diff_eq!(
            sw_delta(j, &n, &n),
            dim2 / (4.0 * std::f64::consts::PI),
            epsilon = 1e-12
        );
    }

    #[test]
    fn sw_traciality_by_quadrature() {
        let j = h(2);
        let grid = SphericalGrid::for_spin(j);
        let n = UnitVector::new(1.3, 5.1);
        let mut kernels = Vec::with_capacity(grid.len());
        for node in grid.nodes() {
            let d = sw_delta(j, &n, &node.dir);
            kernels.push(sw_kernel(j, &node.dir).unwrap().matrix() * Complex64::new(d, 0.0));
        }
        let mut k = 0;
        let integral = grid.integrate_matrix(j.dimension(), |_| {
            let m = kernels[k].clone();
            k += 1;
            m
        });
        let expect = sw_kernel(j, &n).unwrap();
        let diff = (integral - expect.matrix()).map(|z| z.norm()).max();
        assert!(diff < 1e-9, "traciality residual {diff}");
    }

    #[test]
    fn reproducing_kernel_for_cheb_ops() {
        // f_lambda(n.J) = (2 lambda + 1)/(4 pi) integral P_lambda(n.n')
        // f_lambda(n'.J) dn'
        let j = h(3);
        let grid = SphericalGrid::for_spin(j);
        let n = UnitVector::new(0.6, 1.9);
        for lambda in 0..=3u32 {
            let mut mats = Vec::with_capacity(grid.len());
            for node in grid.nodes() {
                let p = legendre_p(lambda, n.dot(&node.dir));
                mats.push(cheb_op_n(j, lambda, &node.dir).unwrap().matrix() * Complex64::new(p, 0.0));
            }
            let mut k = 0;
            let integral = grid.integrate_matrix(j.dimension(), |_| {
                let m = mats[k].clone();
                k += 1;
                m
            }) * Complex64::new((2 * lambda + 1) as f64 / (4.0 * std::f64::consts::PI), 0.0);
            let expect = cheb_op_n(j, lambda, &n).unwrap();
            let diff = (integral - expect.matrix()).map(|z| z.norm()).max();
            assert!(diff < 1e-11, "lambda={lambda}: {diff}");
        }
    }

    #[test]
    fn quantizer_dequantizer_duality() {
        // Tr[Xi(m', n') Pi(m, n)] equals the tomogram kernel
        let j = h(2);
        let n = UnitVector::new(0.35, 1.1);
        let np = UnitVector::new(2.4, 4.2);
        for m in HalfInt::projections(j) {
            for mp in HalfInt::projections(j) {
                let tr = quantizer(j, mp, &np)
                    .unwrap()
                    .trace_product(&dequantizer(j, m, &n).unwrap())
                    .re;
                let kernel = tomogram_kernel(j, m, &n, mp, &np).unwrap();
                assert_abs_diff_eq!(tr, kernel, epsilon = 1e-11);
            }
        }
    }

    #[test]
    fn quantizer_at_spin_zero_is_identity() {
        let q = quantizer(h(0), h(0), &UnitVector::new(1.0, 2.0)).unwrap();
        assert!(q.max_diff(&SpinOperator::identity(h(0))) < 1e-15);
    }

    #[test]
    fn tomogram_of_known_states() {
        let j = h(4);
        let grid = SphericalGrid::for_spin(j);
        // maximally mixed: w = 1/(2j+1) everywhere
        let w = tomogram_of(&DensityMatrix::maximally_mixed(j), &grid).unwrap();
        for m in HalfInt::projections(j) {
            for k in 0..grid.len() {
                assert_abs_diff_eq!(w.value(m, k), 0.2, epsilon = 1e-12);
            }
        }
        // random state: normalized and nonnegative
        let rho = DensityMatrix::random(j, 11);
        let w = tomogram_of(&rho, &grid).unwrap();
        assert!(w.normalization_residual() < 1e-12);
        assert!(w.min_value() > -1e-12);
    }

    #[test]
    fn tomogram_of_top_state_along_z() {
        let j = h(3);
        let rho = DensityMatrix::basis_state(j, j).unwrap();
        // at the north-pole-most grid node the tomogram concentrates on m = j
        let grid = SphericalGrid::for_spin(j);
        let w = tomogram_of(&rho, &grid).unwrap();
        // compare against Pi directly on the first node
        let n0 = grid.nodes()[0].dir;
        for m in HalfInt::projections(j) {
            let expect = rho
                .op()
                .trace_product(&dequantizer(j, m, &n0).unwrap())
                .re;
            assert_abs_diff_eq!(w.value(m, 0), expect, epsilon = 1e-12);
        }
    }

    #[test]
    fn round_trip_reconstruction() {
        for tj in [1, 2, 4] {
            let j = h(tj);
            let grid = SphericalGrid::for_spin(j);
            let rho = DensityMatrix::random(j, 42 + tj as u64);
            let w = tomogram_of(&rho, &grid).unwrap();
            let back = reconstruct_density(&w, &grid).unwrap();
            assert!(rho.frobenius_diff(&back) < 1e-12, "tj={tj}");
            let direct = reconstruct_density_direct(&rho, &grid).unwrap();
            assert!(rho.frobenius_diff(&direct) < 1e-12, "direct tj={tj}");
        }
    }

    #[test]
    fn round_trip_husimi_and_wigner() {
        for tj in [1, 3, 4] {
            let j = h(tj);
            let grid = SphericalGrid::for_spin(j);
            let rho = DensityMatrix::random(j, 7 + tj as u64);
            let q: Vec<f64> = grid
                .nodes()
                .iter()
                .map(|n| husimi_q(&rho, &n.dir).unwrap())
                .collect();
            let (back, cond) = reconstruct_from_husimi(j, &q, &grid).unwrap();
            assert!(rho.frobenius_diff(&back) < 1e-10, "husimi tj={tj}");
            assert!(cond >= 1.0);
            let wv: Vec<f64> = grid
                .nodes()
                .iter()
                .map(|n| wigner_w(&rho, &n.dir).unwrap())
                .collect();
            let back = reconstruct_from_wigner(j, &wv, &grid).unwrap();
            assert!(rho.frobenius_diff(&back) < 1e-11, "wigner tj={tj}");
        }
    }

    #[test]
    fn husimi_of_maximally_mixed() {
        let j = h(4);
        let rho = DensityMatrix::maximally_mixed(j);
        let n = UnitVector::new(1.9, 2.2);
        assert_abs_diff_eq!(husimi_q(&rho, &n).unwrap(), 0.2, epsilon = 1e-12);
    }

    #[test]
    fn distribution_normalization() {
        // (2j+1)/(4 pi) integral D(n) dn = 1 for Q and W
        let j = h(3);
        let grid = SphericalGrid::for_spin(j);
        let rho = DensityMatrix::random(j, 3);
        let scale = j.dimension() as f64 / (4.0 * std::f64::consts::PI);
        let q = grid.integrate(|n| husimi_q(&rho, n).unwrap()) * scale;
        assert_abs_diff_eq!(q, 1.0, epsilon = 1e-11);
        let w = grid.integrate(|n| wigner_w(&rho, n).unwrap()) * scale;
        assert_abs_diff_eq!(w, 1.0, epsilon = 1e-11);
    }

    #[test]
    fn kernel_acts_as_delta_on_tomograms() {
        // integral sum_m' delta_w(m, n; m', n') w(m', n')/(4 pi) dn' = w(m, n)
        let j = h(2);
        let grid = SphericalGrid::for_spin(j);
        let rho = DensityMatrix::random(j, 19);
        let w = tomogram_of(&rho, &grid).unwrap();
        let probe = UnitVector::new(1.0, 0.7);
        for m in HalfInt::projections(j) {
            let mut acc = KahanSum::default();
            for (k, node) in grid.nodes().iter().enumerate() {
                let mut s = 0.0;
                for mp in HalfInt::projections(j) {
                    s += tomogram_kernel(j, m, &probe, mp, &node.dir).unwrap()
                        * w.value(mp, k);
                }
                acc.add(node.weight * s / (4.0 * std::f64::consts::PI));
            }
            let expect = rho
                .op()
                .trace_product(&dequantizer(j, m, &probe).unwrap())
                .re;
            assert_abs_diff_eq!(acc.value(), expect, epsilon = 1e-9);
        }
    }

    #[test]
    fn closure_residual_small() {
        for tj in [0, 1, 4, 8] {
            let j = h(tj);
            let grid = SphericalGrid::for_spin(j);
            let r = coherent_closure_residual(j, &grid).unwrap();
            assert!(r < 1e-11, "tj={tj}: {r}");
        }
    }

    #[test]
    fn t_from_integrals_match_polarization() {
        let j = h(3);
        let grid = SphericalGrid::for_spin(j);
        for (lambda, mu) in [(0u32, 0i32), (1, -1), (2, 1), (3, 2)] {
            let expect = polarization_t(j, lambda, mu).unwrap();
            let direct = t_from_integral(j, lambda, mu, &grid).unwrap();
            assert!(direct.max_diff(&expect) < 1e-10, "direct ({lambda},{mu})");
            let coherent = t_from_coherent_integral(j, lambda, mu, &grid).unwrap();
            assert!(coherent.max_diff(&expect) < 1e-10, "coherent ({lambda},{mu})");
        }
    }

    #[test]
    fn racah_recovered_from_trace() {
        // C_{lambda mu}(n) = Tr[T_{lambda mu} f_lambda(n.J)]
        let j = h(3);
        let n = UnitVector::new(0.85, 3.3);
        for lambda in 0..=3u32 {
            for mu in -(lambda as i32)..=lambda as i32 {
                let t = polarization_t(j, lambda, mu).unwrap();
                let f = cheb_op_n(j, lambda, &n).unwrap();
                let got = t.trace_product(&f);
                let expect = racah_c(lambda, mu, &n).unwrap();
                assert_abs_diff_eq!(got.re, expect.re, epsilon = 1e-12);
                assert_abs_diff_eq!(got.im, expect.im, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn group_route_matches_direct() {
        for tj in [1, 2, 3] {
            let j = h(tj);
            let grid = SphericalGrid::for_spin(j);
            let rho = DensityMatrix::random(j, 5 + tj as u64);
            // psi integrand has trig degree 2j + 1; Gauss-Legendre needs a
            // comfortable margin over that to push the error below 1e-7
            let n_psi = 16 + 8 * tj as usize;
            let back = reconstruct_density_group(&rho, &grid, n_psi).unwrap();
            assert!(rho.op().frobenius_diff(&back) < 1e-7, "tj={tj}");
        }
    }

    #[test]
    fn grid_too_coarse_is_refused() {
        let j = h(4);
        let grid = SphericalGrid::with_counts(2, 4); // far below 4j
        let rho = DensityMatrix::random(j, 1);
        let w = tomogram_of(&rho, &grid).unwrap();
        assert!(matches!(
            reconstruct_density(&w, &grid),
            Err(Error::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn density_validation_rejects_bad_input() {
        let j = h(1);
        let bad = SpinOperator::identity(j); // trace 2
        assert!(matches!(
            DensityMatrix::new(bad),
            Err(Error::InvalidDensity { .. })
        ));
    }

    #[test]
    fn random_density_is_reproducible() {
        let a = DensityMatrix::random(h(3), 99);
        let b = DensityMatrix::random(h(3), 99);
        assert_eq!(a.op().matrix(), b.op().matrix());
    }
}
