//! Recoupling of spin and spatial tensors: composite irreducible products
//! `{R (x) S}^K_Q` and the rank-1/rank-2 identities that rewrite
//! `f_lambda(n.J)` as a rank-zero composite of spin and spatial tensors.

use num_complex::Complex64;

use crate::angular::clebsch_gordan;
use crate::direction::UnitVector;
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::operators::{dot_j, polarization_t, spin_matrices, SpinOperator};

/// An irreducible spin tensor of rank `k`: operator components indexed by
/// `q = -k ..= k`.
#[derive(Clone, Debug)]
pub struct CompositeTensor {
    k: u32,
    comps: Vec<SpinOperator>,
}

/// An irreducible spatial tensor of rank `k`: scalar components indexed by
/// `q = -k ..= k`.
#[derive(Clone, Debug)]
pub struct SpatialTensor {
    k: u32,
    comps: Vec<Complex64>,
}

impl CompositeTensor {
    pub fn rank(&self) -> u32 {
        self.k
    }

    pub fn component(&self, q: i32) -> &SpinOperator {
        &self.comps[(q + self.k as i32) as usize]
    }

    /// The spherical components of `J` itself:
    /// `tau_{1,+1} = -(J_x + i J_y)/sqrt(2)`, `tau_{1,0} = J_z`,
    /// `tau_{1,-1} = (J_x - i J_y)/sqrt(2)`.
    pub fn spin_vector(j: HalfInt) -> CompositeTensor {
        let (jx, jy, jz) = spin_matrices(j);
        let s = Complex64::new(1.0 / 2f64.sqrt(), 0.0);
        let minus = jx.sub(&jy.scale(Complex64::i())).scale(s);
        let plus = jx.add(&jy.scale(Complex64::i())).scale(-s);
        CompositeTensor { k: 1, comps: vec![minus, jz, plus] }
    }

    /// The polarization operators `T_{lambda mu}` collected as a tensor.
    pub fn polarization(j: HalfInt, lambda: u32) -> Result<CompositeTensor> {
        let mut comps = Vec::with_capacity(2 * lambda as usize + 1);
        for mu in -(lambda as i32)..=lambda as i32 {
            comps.push(polarization_t(j, lambda, mu)?);
        }
        Ok(CompositeTensor { k: lambda, comps })
    }
}

impl SpatialTensor {
    pub fn rank(&self) -> u32 {
        self.k
    }

    pub fn component(&self, q: i32) -> Complex64 {
        self.comps[(q + self.k as i32) as usize]
    }

    /// Rank-1 spherical components of a classical vector, same pattern as the
    /// spin components.
    pub fn from_vector(v: [f64; 3]) -> SpatialTensor {
        let [x, y, z] = v;
        let s = 1.0 / 2f64.sqrt();
        SpatialTensor {
            k: 1,
            comps: vec![
                Complex64::new(x, -y) * s,
                Complex64::new(z, 0.0),
                -Complex64::new(x, y) * s,
            ],
        }
    }

    pub fn from_direction(n: &UnitVector) -> SpatialTensor {
        SpatialTensor::from_vector(n.cartesian())
    }

    pub fn rescaled(t: &SpatialTensor, factor: Complex64) -> SpatialTensor {
        SpatialTensor {
            k: t.k,
            comps: t.comps.iter().map(|z| z * factor).collect(),
        }
    }
}

fn product_ranks(k: u32, k_prime: u32, rank: u32) -> Result<()> {
    let lo = k.abs_diff(k_prime);
    let hi = k + k_prime;
    if rank < lo || rank > hi {
        return Err(Error::TriangleViolation {
            a: HalfInt::new(k as i32),
            b: HalfInt::new(k_prime as i32),
            c: HalfInt::new(rank as i32),
        });
    }
    Ok(())
}

/// `{R (x) S}^K_Q = sum_{q+q'=Q} R_q S_{q'} C^{KQ}_{k q k' q'}` for spin
/// tensors.
pub fn compose(
    r: &CompositeTensor,
    s: &CompositeTensor,
    rank: u32,
) -> Result<CompositeTensor> {
    product_ranks(r.k, s.k, rank)?;
    let j = r.comps[0].j();
    let (hk, hkp, hrank) = (
        HalfInt::new(r.k as i32),
        HalfInt::new(s.k as i32),
        HalfInt::new(rank as i32),
    );
    let mut comps = Vec::with_capacity(2 * rank as usize + 1);
    for big_q in -(rank as i32)..=rank as i32 {
        let mut acc = SpinOperator::zeros(j);
        for q in -(r.k as i32)..=r.k as i32 {
            let qp = big_q - q;
            if qp.unsigned_abs() > s.k {
                continue;
            }
            let cg = clebsch_gordan(
                hk,
                HalfInt::new(q),
                hkp,
                HalfInt::new(qp),
                hrank,
                HalfInt::new(big_q),
            )?;
            if cg == 0.0 {
                continue;
            }
            acc = acc.add(
                &r.component(q)
                    .mul(s.component(qp))
                    .scale(Complex64::new(cg, 0.0)),
            );
        }
        comps.push(acc);
    }
    Ok(CompositeTensor { k: rank, comps })
}

/// Composite product of two spatial (scalar-component) tensors.
pub fn compose_spatial(
    r: &SpatialTensor,
    s: &SpatialTensor,
    rank: u32,
) -> Result<SpatialTensor> {
    product_ranks(r.k, s.k, rank)?;
    let (hk, hkp, hrank) = (
        HalfInt::new(r.k as i32),
        HalfInt::new(s.k as i32),
        HalfInt::new(rank as i32),
    );
    let mut comps = Vec::with_capacity(2 * rank as usize + 1);
    for big_q in -(rank as i32)..=rank as i32 {
        let mut acc = Complex64::new(0.0, 0.0);
        for q in -(r.k as i32)..=r.k as i32 {
            let qp = big_q - q;
            if qp.unsigned_abs() > s.k {
                continue;
            }
            let cg = clebsch_gordan(
                hk,
                HalfInt::new(q),
                hkp,
                HalfInt::new(qp),
                hrank,
                HalfInt::new(big_q),
            )?;
            acc += r.component(q) * s.component(qp) * cg;
        }
        comps.push(acc);
    }
    Ok(SpatialTensor { k: rank, comps })
}

/// Rank-zero composite of a spin and a spatial tensor of equal rank:
/// `{T (x) C}^0_0 = sum_q T_q C_{-q} C^{00}_{k q k -q}`.
pub fn compose_spin_spatial_scalar(
    t: &CompositeTensor,
    c: &SpatialTensor,
) -> Result<SpinOperator> {
    if t.k != c.k {
        return Err(Error::RankOutOfRange { lambda: c.k, max: t.k });
    }
    let k = t.k;
    let j = t.comps[0].j();
    let norm = 1.0 / ((2 * k + 1) as f64).sqrt();
    let mut acc = SpinOperator::zeros(j);
    for q in -(k as i32)..=k as i32 {
        // C^{00}_{k q k -q} = (-1)^{k-q} / sqrt(2k+1)
        let sign = if (k as i32 - q).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        acc = acc.add(
            &t.component(q)
                .scale(c.component(-q) * Complex64::new(sign * norm, 0.0)),
        );
    }
    Ok(acc)
}

/// Scalar product `T_k . C_k = sum_q (-1)^q T_q C_{-q}`.
pub fn scalar_product(t: &CompositeTensor, c: &SpatialTensor) -> Result<SpinOperator> {
    if t.k != c.k {
        return Err(Error::RankOutOfRange { lambda: c.k, max: t.k });
    }
    let j = t.comps[0].j();
    let mut acc = SpinOperator::zeros(j);
    for q in -(t.k as i32)..=t.k as i32 {
        let sign = if q.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        acc = acc.add(&t.component(q).scale(c.component(-q) * Complex64::new(sign, 0.0)));
    }
    Ok(acc)
}

/// Residuals for the rank-1 identity `J . C_1(n) = (n.J)`.
#[derive(Clone, Debug)]
pub struct Rank1Report {
    pub residual: f64,
}

pub fn verify_rank1(j: HalfInt, n: &UnitVector) -> Result<Rank1Report> {
    let tau = CompositeTensor::spin_vector(j);
    let c1 = SpatialTensor::from_direction(n);
    let lhs = scalar_product(&tau, &c1)?;
    Ok(Rank1Report { residual: lhs.max_diff(&dot_j(j, n)) })
}

/// Residuals among the three forms of the rank-2 recoupling identity:
/// `A = 3 (n.J)^2 - J.J`,
/// `B = sqrt(6) {J (x) J}^2 . C_2(n)`,
/// `C = 3 sqrt(5) {{J (x) J}^2 (x) {n (x) n}^2}^0_0`.
#[derive(Clone, Debug)]
pub struct Rank2Report {
    pub direct_vs_scalar: f64,
    pub direct_vs_composite: f64,
    pub scalar_vs_composite: f64,
}

impl Rank2Report {
    pub fn max_residual(&self) -> f64 {
        self.direct_vs_scalar
            .max(self.direct_vs_composite)
            .max(self.scalar_vs_composite)
    }
}

pub fn verify_rank2_recoupling(j: HalfInt, n: &UnitVector) -> Result<Rank2Report> {
    let x = dot_j(j, n);
    let direct = x
        .mul(&x)
        .scale(Complex64::new(3.0, 0.0))
        .sub(&SpinOperator::identity(j).scale(Complex64::new(j.kappa(), 0.0)));

    let tau = CompositeTensor::spin_vector(j);
    let jj2 = compose(&tau, &tau, 2)?;
    let nvec = SpatialTensor::from_direction(n);
    let nn2 = compose_spatial(&nvec, &nvec, 2)?;
    // C_2(n) = sqrt(3/2) {n (x) n}^2
    let c2 = SpatialTensor {
        k: 2,
        comps: nn2.comps.iter().map(|z| z * (1.5f64).sqrt()).collect(),
    };
    let scalar_form = scalar_product(&jj2, &c2)?.scale(Complex64::new(6f64.sqrt(), 0.0));

    let composite = compose_spin_spatial(&jj2, &nn2)?;
    let composite_form = composite.scale(Complex64::new(3.0 * 5f64.sqrt(), 0.0));

    Ok(Rank2Report {
        direct_vs_scalar: direct.max_diff(&scalar_form),
        direct_vs_composite: direct.max_diff(&composite_form),
        scalar_vs_composite: scalar_form.max_diff(&composite_form),
    })
}

/// Rank-zero composite of a rank-2 spin tensor with a rank-2 spatial tensor.
fn compose_spin_spatial(t: &CompositeTensor, c: &SpatialTensor) -> Result<SpinOperator> {
    compose_spin_spatial_scalar(t, c)
}

/// The single proportionality constant `a_lambda(j)` between `T_{lambda mu}`
/// and the spherical-component construction, checked to be mu-independent.
/// Returns `(ratio, spread)`.
pub fn a_lambda_ratio(j: HalfInt, lambda: u32) -> Result<(f64, f64)> {
    let tau = CompositeTensor::spin_vector(j);
    let constructed = match lambda {
        1 => tau.clone(),
        2 => {
            let jj2 = compose(&tau, &tau, 2)?;
            CompositeTensor {
                k: 2,
                comps: jj2
                    .comps
                    .iter()
                    .map(|op| op.scale(Complex64::new(6f64.sqrt(), 0.0)))
                    .collect(),
            }
        }
        _ => {
            return Err(Error::RankOutOfRange { lambda, max: 2 });
        }
    };
    let mut ratios = Vec::new();
    for mu in -(lambda as i32)..=lambda as i32 {
        let t = polarization_t(j, lambda, mu)?;
        let rep = crate::operators::proportionality(&t, constructed.component(mu));
        ratios.push(rep.ratio.re);
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let spread = ratios.iter().fold(0.0f64, |a, r| a.max((r - mean).abs()));
    Ok((mean, spread))
}
