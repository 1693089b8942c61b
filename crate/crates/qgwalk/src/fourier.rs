//! The Fourier map between the algebra and its dual, Fourier transforms at
//! irreps, and the exact distance-to-random metrics.
//!
//! `ℱ(a) = haar(·a)` has a closed form in the canonical basis thanks to the
//! tracial Haar weights: the coefficient of `ℱ(a)` on `E^{(b)}_{pq}` is
//! `w_b·(a_b)_{qp}`, and the inverse divides by the weight instead of solving
//! a Gram system. All distances are spectral computations on `ℱ⁻¹(ν−μ)`:
//! total variation is half the Haar 1-norm, the 2-norm distance is the
//! Plancherel image of `‖ν−μ‖₂` on the dual, separation is the operator norm.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::blockalg::{c, cr, p_norm, AlgebraElement, NormP, C64};
use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;
use crate::irreps::{Irrep, IrrepTable};
use crate::walks::{convolve, Functional, State};

/// `ℱ(a) = haar(·a)` as a functional.
pub fn fourier_map(a: &AlgebraElement, qg: &QuantumGroup) -> Functional {
    let mut coeffs = vec![cr(0.0); qg.dim()];
    for (idx, v) in coeffs.iter_mut().enumerate() {
        let (b, p, q) = qg.shape.locate(idx);
        *v = cr(qg.haar.weights[b]) * a.blocks[b][(q, p)];
    }
    Functional::from_coeffs(qg, coeffs).expect("dims match")
}

/// `ℱ⁻¹(φ)`: the Riesz element of the functional.
pub fn fourier_inverse(phi: &Functional, _qg: &QuantumGroup) -> AlgebraElement {
    phi.riesz().clone()
}

/// The Fourier transform of a functional at one irrep:
/// the `d×d` matrix `M_{ij} = φ((ρᵢⱼ)*)`.
#[derive(Debug, Clone)]
pub struct FourierBlock {
    pub name: String,
    pub matrix: nalgebra::DMatrix<C64>,
}

pub fn fourier_at_irrep(phi: &Functional, irrep: &Irrep) -> FourierBlock {
    let d = irrep.dim;
    let matrix = nalgebra::DMatrix::from_fn(d, d, |i, j| {
        phi.apply(&irrep.element(i, j).adjoint())
    });
    FourierBlock {
        name: irrep.name.clone(),
        matrix,
    }
}

/// Quantum total variation distance `½‖ℱ⁻¹(ν−μ)‖₁`.
pub fn tv_distance(nu: &Functional, mu: &Functional, qg: &QuantumGroup) -> f64 {
    let diff = nu.sub(mu, qg).expect("same group");
    0.5 * p_norm(&fourier_inverse(&diff, qg), &qg.haar, NormP::One)
}

/// 2-norm distance `‖ν−μ‖₂^{ℂ𝔾} = ‖ℱ⁻¹(ν−μ)‖₂` (Plancherel).
pub fn l2_distance(nu: &Functional, mu: &Functional, qg: &QuantumGroup) -> f64 {
    let diff = nu.sub(mu, qg).expect("same group");
    p_norm(&fourier_inverse(&diff, qg), &qg.haar, NormP::Two)
}

/// Separation distance `‖ℱ⁻¹(ν−μ)‖_∞`.
pub fn separation_distance(nu: &Functional, mu: &Functional, qg: &QuantumGroup) -> f64 {
    let diff = nu.sub(mu, qg).expect("same group");
    p_norm(&fourier_inverse(&diff, qg), &qg.haar, NormP::Inf)
}

/// 2-norm of a functional in the dual algebra, via Plancherel.
pub fn dual_two_norm(phi: &Functional, qg: &QuantumGroup) -> f64 {
    p_norm(&fourier_inverse(phi, qg), &qg.haar, NormP::Two)
}

/// The unnormalised dual integral `φ ↦ ε(ℱ⁻¹(φ))`.
pub fn dual_integral(phi: &Functional, qg: &QuantumGroup) -> C64 {
    qg.counit
        .iter()
        .zip(fourier_inverse(phi, qg).coeffs())
        .map(|(&e, x)| e * x)
        .sum()
}

/// Exact distances of one walk step against a reference state.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DistanceReport {
    pub k: usize,
    pub tv: f64,
    pub l2: f64,
    pub sep: f64,
    pub reference: String,
}

pub fn distance_report(
    k: usize,
    nu: &Functional,
    mu: &Functional,
    qg: &QuantumGroup,
    reference: &str,
) -> DistanceReport {
    DistanceReport {
        k,
        tv: tv_distance(nu, mu, qg),
        l2: l2_distance(nu, mu, qg),
        sep: separation_distance(nu, mu, qg),
        reference: reference.to_string(),
    }
}

/// Lower bound on the distance to the Haar state from a projection test
/// element: `|ν(p) − π(p)|` for `p² = p = p*`.
pub fn tv_lower_via_projection(
    nu: &State,
    p: &AlgebraElement,
    qg: &QuantumGroup,
) -> Result<f64> {
    let idem = p.mul(p)?.sub(p)?.sup_coeff();
    let selfadj = p.sub(&p.adjoint())?.sup_coeff();
    if idem > 1e-10 || selfadj > 1e-10 {
        return Err(Error::Validation(format!(
            "test element is not a projection: |p²−p| = {idem:e}, |p−p*| = {selfadj:e}"
        )));
    }
    let pi = Functional::haar_state(qg);
    Ok((nu.functional().apply(p) - pi.apply(p)).norm())
}

/// Van Daele's convolution product on the algebra:
/// `a ⋆_A b = Σ b₍₂₎ · haar(S(b₍₁₎)·a)`.
pub fn star_a_product(
    a: &AlgebraElement,
    b: &AlgebraElement,
    qg: &QuantumGroup,
) -> AlgebraElement {
    let dim = qg.dim();
    // g[s] = haar(S(E_s)·a) = Σ_{s'} S[s',s]·ℱ(a)_{s'}
    let fa = fourier_map(a, qg);
    let mut g = vec![cr(0.0); dim];
    for (s, gs) in g.iter_mut().enumerate() {
        let mut acc = cr(0.0);
        for sp in 0..dim {
            let sv = qg.antipode.matrix[(sp, s)];
            if sv.norm_sqr() != 0.0 {
                acc += sv * fa.coeffs[sp];
            }
        }
        *gs = acc;
    }
    let db = qg.delta.apply(&b.coeffs());
    let mut out = vec![cr(0.0); dim];
    for (idx, v) in db.iter().enumerate() {
        if v.norm_sqr() != 0.0 {
            out[idx % dim] += *v * g[idx / dim];
        }
    }
    AlgebraElement::from_coeffs(&qg.shape, &out).expect("dims match")
}

fn random_element(qg: &QuantumGroup, rng: &mut impl Rng) -> AlgebraElement {
    let mut a = AlgebraElement::zero(&qg.shape);
    for block in a.blocks.iter_mut() {
        for v in block.iter_mut() {
            *v = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    a
}

/// Max residual of `Î(ℱ(a)*⋆ℱ(a)) = haar(a*a)` over a deterministic sample.
pub fn verify_plancherel(qg: &QuantumGroup, seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = random_element(qg, &mut rng);
        let fa = fourier_map(&a, qg);
        let conv = convolve(&fa.star(qg), &fa, qg).expect("same group");
        let lhs = dual_integral(&conv, qg);
        let rhs = qg.haar.integrate(&a.adjoint().mul(&a).expect("same shape"));
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

/// Max residual of `ε(a) = Σ_α d_α·Tr(â(α))` over a deterministic sample.
pub fn verify_inversion(
    qg: &QuantumGroup,
    irreps: &IrrepTable,
    seed: u64,
    samples: usize,
) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = random_element(qg, &mut rng);
        let fa = fourier_map(&a, qg);
        let mut total = cr(0.0);
        for irrep in &irreps.irreps {
            let block = fourier_at_irrep(&fa, irrep);
            total += block.matrix.diagonal().iter().sum::<C64>() * cr(irrep.dim as f64);
        }
        let eps: C64 = qg
            .counit
            .iter()
            .zip(a.coeffs())
            .map(|(&e, x)| e * x)
            .sum();
        worst = worst.max((total - eps).norm());
    }
    worst
}

/// Max residuals of the two convolution theorems over a deterministic sample:
/// `(a⋆_A b)^(α) = â(α)∘b̂(α)` per irrep, and `ℱ(a)⋆ℱ(b) = ℱ(a⋆_A b)`.
pub fn verify_convolution(
    qg: &QuantumGroup,
    irreps: &IrrepTable,
    seed: u64,
    samples: usize,
) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_irrep = 0.0f64;
    let mut worst_map = 0.0f64;
    for _ in 0..samples {
        let a = random_element(qg, &mut rng);
        let b = random_element(qg, &mut rng);
        let prod = star_a_product(&a, &b, qg);
        let fa = fourier_map(&a, qg);
        let fb = fourier_map(&b, qg);
        let fprod = fourier_map(&prod, qg);
        for irrep in &irreps.irreps {
            let lhs = fourier_at_irrep(&fprod, irrep).matrix;
            let rhs =
                fourier_at_irrep(&fa, irrep).matrix * fourier_at_irrep(&fb, irrep).matrix;
            let res = (&lhs - &rhs).iter().map(|z| z.norm()).fold(0.0, f64::max);
            worst_irrep = worst_irrep.max(res);
        }
        let conv = convolve(&fa, &fb, qg).expect("same group");
        worst_map = worst_map.max(crate::blockalg::max_abs_diff(&conv.coeffs, &fprod.coeffs));
    }
    (worst_irrep, worst_map)
}
