//! Product quadrature on S²: Gauss-Legendre in `cos theta` times a uniform
//! azimuthal rule.
//!
//! With `n_theta` Gauss nodes and `n_phi` uniform nodes the rule integrates
//! exactly any integrand whose `cos theta` dependence is polynomial of degree
//! `<= 2 n_theta - 1` and whose azimuthal frequencies are `< n_phi`; the grid
//! advertises `exactness_degree = min(2 n_theta - 1, n_phi - 1)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::direction::UnitVector;
use crate::half::HalfInt;

#[derive(Clone, Copy, Debug)]
pub struct GridNode {
    pub dir: UnitVector,
    pub weight: f64,
}

#[derive(Clone, Debug)]
pub struct SphericalGrid {
    nodes: Vec<GridNode>,
    exactness_degree: u32,
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on the
/// recurrence evaluation of `P_n`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Tricomi-style initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..60 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let k = k as f64;
        let p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Compensated (Kahan) scalar accumulator; quadrature sums run in fixed node
/// order so results are bit-reproducible.
#[derive(Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn add(&mut self, value: f64) {
        let y = value - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

impl SphericalGrid {
    /// Product rule with explicit node counts.
    pub fn with_counts(n_theta: usize, n_phi: usize) -> SphericalGrid {
        let gl = gauss_legendre(n_theta);
        let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
        let mut nodes = Vec::with_capacity(n_theta * n_phi);
        for &(x, w) in &gl {
            let theta = x.clamp(-1.0, 1.0).acos();
            for k in 0..n_phi {
                nodes.push(GridNode {
                    dir: UnitVector::new(theta, k as f64 * dphi),
                    weight: w * dphi,
                });
            }
        }
        let exactness = u32::min(2 * n_theta as u32 - 1, n_phi as u32 - 1);
        SphericalGrid { nodes, exactness_degree: exactness }
    }

    /// Minimal grid exact for products of two rank `<= 2j` harmonics:
    /// `(2j+1)` polar times `(4j+2)` azimuthal nodes.
    pub fn for_spin(j: HalfInt) -> SphericalGrid {
        let two_j = j.twice() as usize;
        SphericalGrid::with_counts(two_j + 1, 2 * two_j + 2)
    }

    /// Same layout with doubled node counts, for conditioning studies.
    pub fn for_spin_doubled(j: HalfInt) -> SphericalGrid {
        let two_j = j.twice() as usize;
        SphericalGrid::with_counts(2 * (two_j + 1), 2 * (2 * two_j + 2))
    }

    pub fn exactness_degree(&self) -> u32 {
        self.exactness_degree
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[GridNode] {
        &self.nodes
    }

    /// `sum_k w_k f(n_k)` with compensated summation in node order.
    pub fn integrate<F: FnMut(&UnitVector) -> f64>(&self, mut f: F) -> f64 {
        let mut acc = KahanSum::default();
        for node in &self.nodes {
            acc.add(node.weight * f(&node.dir));
        }
        acc.value()
    }

    /// Matrix-valued integral with per-entry compensated accumulation.
    pub fn integrate_matrix<F>(&self, dim: usize, mut f: F) -> DMatrix<Complex64>
    where
        F: FnMut(&UnitVector) -> DMatrix<Complex64>,
    {
        let mut re = vec![KahanSum::default(); dim * dim];
        let mut im = vec![KahanSum::default(); dim * dim];
        for node in &self.nodes {
            let m = f(&node.dir);
            for (k, z) in m.iter().enumerate() {
                re[k].add(node.weight * z.re);
                im[k].add(node.weight * z.im);
            }
        }
        DMatrix::from_iterator(
            dim,
            dim,
            re.iter().zip(im.iter()).map(|(a, b)| Complex64::new(a.value(), b.value())),
        )
    }
}
