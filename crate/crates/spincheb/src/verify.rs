//! Identity suites behind the `verify` command: each suite evaluates a set of
//! operator identities with fixed internal seeds and reports the worst
//! residual per identity.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::angular::{
    character_direct, generalized_character, legendre_p, wigner_big_d, wigner_small_d,
    RotationParams,
};
use crate::cheb::character_via_cheb_sum;
use crate::direction::UnitVector;
use crate::error::Result;
use crate::half::HalfInt;
use crate::operators::{cheb_op_trace_pair, rotation_corio, rotation_exact};
use crate::recoupling::{a_lambda_ratio, verify_rank1, verify_rank2_recoupling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Traces,
    Rotation,
    Recoupling,
    Characters,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "all" => Some(Suite::All),
            "traces" => Some(Suite::Traces),
            "rotation" => Some(Suite::Rotation),
            "recoupling" => Some(Suite::Recoupling),
            "characters" => Some(Suite::Characters),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdentityResidual {
    pub suite: &'static str,
    pub name: &'static str,
    pub residual: f64,
    pub tolerance: f64,
}

impl IdentityResidual {
    pub fn passed(&self) -> bool {
        self.residual < self.tolerance
    }
}

fn random_direction(rng: &mut ChaCha8Rng) -> UnitVector {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
    UnitVector::new(z.acos(), phi)
}

/// Runs the selected suite; `tol` overrides every per-identity tolerance and
/// `perturb` is added to every residual (negative control for the exit-code
/// contract).
pub fn run_suite(suite: Suite, tol: Option<f64>, perturb: f64) -> Result<Vec<IdentityResidual>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Traces) {
        traces_suite(&mut out)?;
    }
    if matches!(suite, Suite::All | Suite::Rotation) {
        rotation_suite(&mut out)?;
    }
    if matches!(suite, Suite::All | Suite::Recoupling) {
        recoupling_suite(&mut out)?;
    }
    if matches!(suite, Suite::All | Suite::Characters) {
        characters_suite(&mut out)?;
    }
    for r in &mut out {
        r.residual += perturb;
        if let Some(t) = tol {
            r.tolerance = t;
        }
    }
    Ok(out)
}

fn traces_suite(out: &mut Vec<IdentityResidual>) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut same_axis: f64 = 0.0;
    let mut cross_axis: f64 = 0.0;
    for tj in 0..=8 {
        let j = HalfInt::from_twice(tj);
        for _ in 0..4 {
            let a = random_direction(&mut rng);
            let b = random_direction(&mut rng);
            for l in 0..=tj as u32 {
                same_axis =
                    same_axis.max((cheb_op_trace_pair(j, l, l, &a, &a)? - 1.0).abs());
                for lp in 0..=tj as u32 {
                    let t = cheb_op_trace_pair(j, l, lp, &a, &b)?;
                    let expect = if l == lp { legendre_p(l, a.dot(&b)) } else { 0.0 };
                    cross_axis = cross_axis.max((t - expect).abs());
                }
            }
        }
    }
    out.push(IdentityResidual {
        suite: "traces",
        name: "orthonormality_trace_same_axis",
        residual: same_axis,
        tolerance: 1e-10,
    });
    out.push(IdentityResidual {
        suite: "traces",
        name: "trace_pair_legendre",
        residual: cross_axis,
        tolerance: 1e-10,
    });
    Ok(())
}

fn rotation_suite(out: &mut Vec<IdentityResidual>) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut corio_vs_exact: f64 = 0.0;
    let mut route_agreement: f64 = 0.0;
    let mut d_orthogonality: f64 = 0.0;
    let mut squared_sum: f64 = 0.0;
    for tj in 0..=8 {
        let j = HalfInt::from_twice(tj);
        let dim = j.dimension();
        for _ in 0..4 {
            let psi: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
            let axis = random_direction(&mut rng);
            let corio = rotation_corio(j, psi, &axis)?;
            let exact = rotation_exact(j, &RotationParams::angle_axis(psi, axis));
            corio_vs_exact = corio_vs_exact.max(corio.max_diff(&exact.adjoint()));

            let params = RotationParams::angle_axis(psi, axis);
            let (alpha, beta, gamma) = params.to_euler();
            let via_euler = wigner_big_d(j, &RotationParams::euler(alpha, beta, gamma))?;
            let direct = wigner_big_d(j, &params)?;
            route_agreement = route_agreement
                .max((via_euler - direct).map(|z| z.norm()).max());

            let beta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
            let d = wigner_small_d(j, beta)?;
            let gram = &d * d.transpose();
            let id = nalgebra::DMatrix::<f64>::identity(dim, dim);
            d_orthogonality = d_orthogonality.max((gram - id).amax());
            let total: f64 = d.iter().map(|x| x * x).sum();
            squared_sum = squared_sum.max((total - dim as f64).abs());
        }
    }
    out.push(IdentityResidual {
        suite: "rotation",
        name: "corio_expansion_vs_eigendecomposition",
        residual: corio_vs_exact,
        tolerance: 1e-9,
    });
    out.push(IdentityResidual {
        suite: "rotation",
        name: "angle_axis_vs_euler_matrix",
        residual: route_agreement,
        tolerance: 1e-11,
    });
    out.push(IdentityResidual {
        suite: "rotation",
        name: "reduced_d_orthogonality",
        residual: d_orthogonality,
        tolerance: 1e-11,
    });
    out.push(IdentityResidual {
        suite: "rotation",
        name: "squared_d_sum_rule",
        residual: squared_sum,
        tolerance: 1e-11,
    });
    Ok(())
}

fn recoupling_suite(out: &mut Vec<IdentityResidual>) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut rank1: f64 = 0.0;
    let mut rank2: f64 = 0.0;
    let mut ratio_spread: f64 = 0.0;
    for tj in [2, 3, 5] {
        let j = HalfInt::from_twice(tj);
        for _ in 0..5 {
            let n = random_direction(&mut rng);
            rank1 = rank1.max(verify_rank1(j, &n)?.residual);
            rank2 = rank2.max(verify_rank2_recoupling(j, &n)?.max_residual());
        }
        ratio_spread = ratio_spread.max(a_lambda_ratio(j, 1)?.1);
        ratio_spread = ratio_spread.max(a_lambda_ratio(j, 2)?.1);
    }
    out.push(IdentityResidual {
        suite: "recoupling",
        name: "rank1_scalar_contraction",
        residual: rank1,
        tolerance: 1e-13,
    });
    out.push(IdentityResidual {
        suite: "recoupling",
        name: "rank2_three_forms",
        residual: rank2,
        tolerance: 1e-11,
    });
    out.push(IdentityResidual {
        suite: "recoupling",
        name: "a_lambda_mu_independence",
        residual: ratio_spread,
        tolerance: 1e-12,
    });
    Ok(())
}

fn characters_suite(out: &mut Vec<IdentityResidual>) -> Result<()> {
    let mut gegenbauer_vs_sum: f64 = 0.0;
    let mut spin_half_closed: f64 = 0.0;
    let mut lambda_zero: f64 = 0.0;
    for tj in 0..=10 {
        let j = HalfInt::from_twice(tj);
        for k in 0..24 {
            let psi = 0.27 * k as f64;
            for l in 0..=tj as u32 {
                let a = generalized_character(j, l, psi)?;
                let b = character_via_cheb_sum(j, l, psi)?;
                gegenbauer_vs_sum = gegenbauer_vs_sum.max((a - b).abs());
            }
            lambda_zero = lambda_zero
                .max((generalized_character(j, 0, psi)? - character_direct(j, psi)).abs());
        }
    }
    let half = HalfInt::from_twice(1);
    for k in 0..48 {
        let psi = 0.13 * k as f64;
        let expect = 2.0 / 3f64.sqrt() * (psi / 2.0).sin();
        spin_half_closed =
            spin_half_closed.max((generalized_character(half, 1, psi)? - expect).abs());
    }
    out.push(IdentityResidual {
        suite: "characters",
        name: "gegenbauer_vs_chebyshev_sum",
        residual: gegenbauer_vs_sum,
        tolerance: 1e-11,
    });
    out.push(IdentityResidual {
        suite: "characters",
        name: "spin_half_rank1_closed_form",
        residual: spin_half_closed,
        tolerance: 1e-13,
    });
    out.push(IdentityResidual {
        suite: "characters",
        name: "rank0_recovers_character",
        residual: lambda_zero,
        tolerance: 1e-11,
    });
    Ok(())
}
