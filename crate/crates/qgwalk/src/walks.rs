//! States on a quantum group and their convolution dynamics: the driving
//! probabilities, convolution powers, the stochastic operator and Cesàro
//! means of a random walk.

use nalgebra::{DMatrix, DVector};
use rand::prelude::*;

use crate::blockalg::{cr, AlgebraElement, LinearMap, C64};
use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;

/// Tolerance for the state checks (positivity of the Riesz element and
/// normalisation).
pub const STATE_TOL: f64 = 1e-8;

/// A linear functional on the algebra, stored as its values on the canonical
/// matrix-unit basis, with the Riesz element `a` (`φ = haar(·a)`) cached.
#[derive(Debug, Clone)]
pub struct Functional {
    pub coeffs: Vec<C64>,
    riesz: AlgebraElement,
}

impl Functional {
    pub fn from_coeffs(qg: &QuantumGroup, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != qg.dim() {
            return Err(Error::ShapeMismatch(format!(
                "functional needs {} coefficients, got {}",
                qg.dim(),
                coeffs.len()
            )));
        }
        let riesz = riesz_element(qg, &coeffs);
        Ok(Self { coeffs, riesz })
    }

    /// The counit as a functional.
    pub fn counit(qg: &QuantumGroup) -> Self {
        Self::from_coeffs(qg, qg.counit.clone()).expect("counit has dim entries")
    }

    /// The Haar state as a functional.
    pub fn haar_state(qg: &QuantumGroup) -> Self {
        Self::from_coeffs(qg, qg.haar.as_functional_coeffs()).expect("haar has dim entries")
    }

    /// Apply to an algebra element.
    pub fn apply(&self, a: &AlgebraElement) -> C64 {
        self.coeffs
            .iter()
            .zip(a.coeffs())
            .map(|(&f, x)| f * x)
            .sum()
    }

    /// The element `a` with `φ(x) = haar(x·a)` for all `x`.
    pub fn riesz(&self) -> &AlgebraElement {
        &self.riesz
    }

    /// Involution of the dual algebra: `φ*(x) = conj(φ(S(x)*))`.
    pub fn star(&self, qg: &QuantumGroup) -> Self {
        let dim = qg.dim();
        let mut out = vec![cr(0.0); dim];
        for (r, o) in out.iter_mut().enumerate() {
            let mut acc = cr(0.0);
            for q in 0..dim {
                let s = qg.antipode.matrix[(q, r)];
                if s.norm_sqr() != 0.0 {
                    acc += s * self.coeffs[qg.shape.adjoint_index(q)].conj();
                }
            }
            *o = acc;
        }
        Self::from_coeffs(qg, out).expect("same dim")
    }

    /// `φ∘S`.
    pub fn compose_antipode(&self, qg: &QuantumGroup) -> Self {
        let row = DVector::from_column_slice(&self.coeffs).transpose() * &qg.antipode.matrix;
        Self::from_coeffs(qg, row.iter().copied().collect()).expect("same dim")
    }

    /// Symmetric means `φ = φ∘S`.
    pub fn is_symmetric(&self, qg: &QuantumGroup) -> bool {
        let s = self.compose_antipode(qg);
        crate::blockalg::max_abs_diff(&self.coeffs, &s.coeffs) <= 1e-10
    }

    pub fn sub(&self, other: &Functional, qg: &QuantumGroup) -> Result<Functional> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::ShapeMismatch("functional dims differ".into()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a - b)
            .collect();
        Functional::from_coeffs(qg, coeffs)
    }
}

/// Riesz element of a functional: block matrix with `a_b[q,p] = φ_{(b,p,q)}/w_b`.
fn riesz_element(qg: &QuantumGroup, coeffs: &[C64]) -> AlgebraElement {
    let mut a = AlgebraElement::zero(&qg.shape);
    for (idx, &v) in coeffs.iter().enumerate() {
        let (b, p, q) = qg.shape.locate(idx);
        a.blocks[b][(q, p)] = v / cr(qg.haar.weights[b]);
    }
    a
}

/// Validity report for a functional as a state.
#[derive(Debug, Clone, serde::Serialize)]
pub struct StateReport {
    /// smallest eigenvalue of the Riesz element over all blocks
    pub min_riesz_eigenvalue: f64,
    /// `|φ(1) − 1|`
    pub normalisation: f64,
}

impl StateReport {
    pub fn is_state(&self) -> bool {
        self.min_riesz_eigenvalue >= -STATE_TOL && self.normalisation <= STATE_TOL
    }
}

/// Positivity criterion: `φ` is a state iff its Riesz element is positive and
/// `φ(1) = 1`.
pub fn is_state(phi: &Functional, qg: &QuantumGroup) -> StateReport {
    let min = phi.riesz().min_eigenvalue();
    let norm = (phi.apply(&qg.unit()) - cr(1.0)).norm();
    StateReport {
        min_riesz_eigenvalue: min,
        normalisation: norm,
    }
}

/// A functional that passed the state checks; the driving law of a walk.
#[derive(Debug, Clone)]
pub struct State(Functional);

impl State {
    pub fn new(phi: Functional, qg: &QuantumGroup) -> Result<Self> {
        let report = is_state(&phi, qg);
        if !report.is_state() {
            return Err(Error::Validation(format!(
                "functional is not a state: min Riesz eigenvalue {:e}, |phi(1)-1| = {:e}",
                report.min_riesz_eigenvalue, report.normalisation
            )));
        }
        Ok(Self(phi))
    }

    pub fn functional(&self) -> &Functional {
        &self.0
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.0.coeffs
    }

    pub fn counit(qg: &QuantumGroup) -> Self {
        Self(Functional::counit(qg))
    }

    pub fn haar(qg: &QuantumGroup) -> Self {
        Self(Functional::haar_state(qg))
    }

    /// Point mass concentrated on one canonical basis functional (classical
    /// groups only: the dual basis `δ^s` of `F(G)`).
    pub fn point_mass(qg: &QuantumGroup, idx: usize) -> Result<Self> {
        let mut coeffs = vec![cr(0.0); qg.dim()];
        coeffs[idx] = cr(1.0);
        Self::new(Functional::from_coeffs(qg, coeffs)?, qg)
    }

    /// Classical probability vector on `F(G)`.
    pub fn classical(qg: &QuantumGroup, probs: &[f64]) -> Result<Self> {
        if probs.len() != qg.dim() {
            return Err(Error::ShapeMismatch("one probability per point".into()));
        }
        let coeffs = probs.iter().map(|&p| cr(p)).collect();
        Self::new(Functional::from_coeffs(qg, coeffs)?, qg)
    }
}

/// Convolution `(φ⋆ψ) = (φ⊗ψ)∘Δ`.
pub fn convolve(phi: &Functional, psi: &Functional, qg: &QuantumGroup) -> Result<Functional> {
    let dim = qg.dim();
    if phi.coeffs.len() != dim || psi.coeffs.len() != dim {
        return Err(Error::ShapeMismatch("functionals on the wrong group".into()));
    }
    let mut out = vec![cr(0.0); dim];
    for (r, o) in out.iter_mut().enumerate() {
        let mut acc = cr(0.0);
        for (idx, v) in qg.delta.matrix.column(r).iter().enumerate() {
            if v.norm_sqr() != 0.0 {
                acc += *v * phi.coeffs[idx / dim] * psi.coeffs[idx % dim];
            }
        }
        *o = acc;
    }
    Functional::from_coeffs(qg, out)
}

/// The stochastic operator `P_ν = (ν⊗I)∘Δ` of a functional.
pub fn stochastic_operator(nu: &Functional, qg: &QuantumGroup) -> LinearMap {
    let dim = qg.dim();
    let mut m = DMatrix::zeros(dim, dim);
    for r in 0..dim {
        for (idx, v) in qg.delta.matrix.column(r).iter().enumerate() {
            if v.norm_sqr() != 0.0 {
                m[(idx % dim, r)] += *v * nu.coeffs[idx / dim];
            }
        }
    }
    LinearMap::new(m)
}

/// Action of the transpose of the stochastic operator on a functional:
/// `P_νᵀ μ = ν ⋆ μ`.
pub fn transpose_apply(p: &LinearMap, mu: &Functional, qg: &QuantumGroup) -> Functional {
    let v = p.matrix.transpose() * DVector::from_column_slice(&mu.coeffs);
    Functional::from_coeffs(qg, v.iter().copied().collect()).expect("square operator")
}

/// `ν^{⋆k}` by binary powering of the stochastic-operator matrix applied to
/// the counit (`ν^{⋆0} = ε`). The result is re-validated as a state.
pub fn convolution_power(nu: &State, k: usize, qg: &QuantumGroup) -> Result<State> {
    let phi = convolution_power_functional(nu.functional(), k, qg);
    State::new(phi, qg).map_err(|_| {
        Error::Numerical(format!(
            "convolution power k={k} drifted outside the state cone"
        ))
    })
}

/// Same as [`convolution_power`] without the state re-validation.
pub fn convolution_power_functional(
    nu: &Functional,
    k: usize,
    qg: &QuantumGroup,
) -> Functional {
    let p = stochastic_operator(nu, qg);
    let mut pk = p.matrix.transpose();
    let mut acc = DMatrix::identity(qg.dim(), qg.dim());
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &pk;
        }
        pk = &pk * &pk;
        e >>= 1;
    }
    let v = acc * DVector::from_column_slice(&qg.counit);
    Functional::from_coeffs(qg, v.iter().copied().collect()).expect("square operator")
}

/// Cesàro mean `ν_n = (1/n) Σ_{k=1}^n ν^{⋆k}`.
pub fn cesaro(nu: &State, n: usize, qg: &QuantumGroup) -> Result<State> {
    if n == 0 {
        return Err(Error::Validation("Cesàro mean needs n >= 1".into()));
    }
    let p = stochastic_operator(nu.functional(), qg).matrix.transpose();
    let mut current = DVector::from_column_slice(&qg.counit);
    let mut sum = DVector::zeros(qg.dim());
    for _ in 0..n {
        current = &p * current;
        sum += &current;
    }
    sum /= cr(n as f64);
    let phi = Functional::from_coeffs(qg, sum.iter().copied().collect())?;
    State::new(phi, qg)
}

/// State on the Kac–Paljutkin group from the five convex weights and the
/// Bloch parameters of its matrix part:
/// `ν = Σ μᵢ eⁱ + (μ₅/2)((1+z)E^{11} + (x−iy)E^{12} + (x+iy)E^{21} + (1−z)E^{22})`.
pub fn kp_state(
    qg: &QuantumGroup,
    mu: [f64; 5],
    x: f64,
    y: f64,
    z: f64,
) -> Result<State> {
    if mu.iter().any(|&m| m < -1e-12) {
        return Err(Error::Validation("convex weights must be nonnegative".into()));
    }
    let total: f64 = mu.iter().sum();
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::Validation(format!(
            "convex weights sum to {total}, need 1"
        )));
    }
    if x * x + y * y + z * z > 1.0 + 1e-10 {
        return Err(Error::Validation("need x² + y² + z² <= 1".into()));
    }
    if qg.shape.dims() != [1, 1, 1, 1, 2] {
        return Err(Error::ShapeMismatch("kp_state needs the Kac-Paljutkin shape".into()));
    }
    let half = mu[4] / 2.0;
    let coeffs = vec![
        cr(mu[0]),
        cr(mu[1]),
        cr(mu[2]),
        cr(mu[3]),
        cr(half * (1.0 + z)),
        crate::blockalg::c(half * x, -half * y),
        crate::blockalg::c(half * x, half * y),
        cr(half * (1.0 - z)),
    ];
    State::new(Functional::from_coeffs(qg, coeffs)?, qg)
}

/// The walk state `¼(e^{(0,1)} + e^{(1,0)} + E^{11} + E^{12} + E^{21} + E^{22})`
/// on the Sekine group of parameter `n`; matrix-unit labels follow the
/// family's 1-based convention (`0 ≡ n`).
pub fn sekine_walk_state(qg: &QuantumGroup, n: usize) -> Result<State> {
    if qg.shape != crate::catalog::sekine_shape(n) || n < 3 {
        return Err(Error::ShapeMismatch(
            "sekine_walk_state needs the Sekine shape with n >= 3".into(),
        ));
    }
    let mut coeffs = vec![cr(0.0); qg.dim()];
    coeffs[1] = cr(0.25); // e_{(0,1)}
    coeffs[n] = cr(0.25); // e_{(1,0)}
    for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        coeffs[qg.shape.index_of(n * n, p, q)] = cr(0.25);
    }
    State::new(Functional::from_coeffs(qg, coeffs)?, qg)
}

/// Random state: draw a Gaussian element `b`, form the positive element
/// `b*b`, and normalise its Haar integral to one. Sound by the positivity
/// criterion for Riesz elements.
pub fn random_state(qg: &QuantumGroup, rng: &mut impl Rng) -> State {
    loop {
        let mut b = AlgebraElement::zero(&qg.shape);
        for block in b.blocks.iter_mut() {
            for v in block.iter_mut() {
                *v = crate::blockalg::c(gaussian(rng), gaussian(rng));
            }
        }
        let pos = b.adjoint().mul(&b).expect("same shape");
        let total = qg.haar.integrate(&pos).re;
        if total < 1e-8 {
            continue;
        }
        let a = pos.scale(cr(1.0 / total));
        // φ(x) = haar(x·a): coefficients φ_{(b,p,q)} = w_b·a[q,p]
        let mut coeffs = vec![cr(0.0); qg.dim()];
        for (idx, c) in coeffs.iter_mut().enumerate() {
            let (blk, p, q) = qg.shape.locate(idx);
            *c = cr(qg.haar.weights[blk]) * a.blocks[blk][(q, p)];
        }
        let phi = Functional::from_coeffs(qg, coeffs).expect("dims match");
        match State::new(phi, qg) {
            Ok(s) => return s,
            Err(_) => continue,
        }
    }
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    // Box-Muller
    let u: f64 = rng.gen_range(f64::EPSILON..1.0);
    let v: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    (-2.0 * u.ln()).sqrt() * v.cos()
}

/// The positive-definite state on a dual group `ℂG ⊂ L(ℂⁿ)` induced by a
/// permutation representation and a unit vector: `u(σ) = Σᵢ ξᵢ ξ_{σ(i)}`.
pub fn permutation_vector_state(
    ga: &crate::catalog::GroupAlgebra,
    perms: &[Vec<usize>],
    xi: &[f64],
) -> Result<State> {
    if perms.len() != ga.table.order {
        return Err(Error::ShapeMismatch("one permutation per group element".into()));
    }
    let values: Vec<C64> = perms
        .iter()
        .map(|p| cr(p.iter().enumerate().map(|(i, &pi)| xi[i] * xi[pi]).sum()))
        .collect();
    let coeffs = ga.functional_from_point_values(&values)?;
    let phi = Functional::from_coeffs(&ga.algebra, coeffs)?;
    State::new(phi, &ga.algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counit_is_convolution_unit() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let eps = Functional::counit(&qg);
        for _ in 0..5 {
            let phi = random_state(&qg, &mut rng);
            let left = convolve(&eps, phi.functional(), &qg).unwrap();
            let right = convolve(phi.functional(), &eps, &qg).unwrap();
            assert!(crate::blockalg::max_abs_diff(&left.coeffs, phi.coeffs()) <= 1e-12);
            assert!(crate::blockalg::max_abs_diff(&right.coeffs, phi.coeffs()) <= 1e-12);
        }
    }

    #[test]
    fn haar_absorbs_convolution() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let pi = Functional::haar_state(&qg);
        for _ in 0..5 {
            let phi = random_state(&qg, &mut rng);
            let conv = convolve(&pi, phi.functional(), &qg).unwrap();
            assert!(crate::blockalg::max_abs_diff(&conv.coeffs, &pi.coeffs) <= 1e-12);
        }
    }

    #[test]
    fn z3_measure_convolution_matches_hand_value() {
        // μ*⋆μ for μ = ½δ⁰+⅓δ¹+⅙δ² on F(ℤ₃)
        let qg = catalog::function_algebra(&catalog::cyclic(3).unwrap()).unwrap();
        let mu = Functional::from_coeffs(
            &qg,
            vec![cr(0.5), cr(1.0 / 3.0), cr(1.0 / 6.0)],
        )
        .unwrap();
        let star = mu.star(&qg);
        assert!(crate::blockalg::max_abs_diff(
            &star.coeffs,
            &[cr(0.5), cr(1.0 / 6.0), cr(1.0 / 3.0)]
        ) < 1e-15);
        let conv = convolve(&star, &mu, &qg).unwrap();
        let expected = [cr(7.0 / 18.0), cr(11.0 / 36.0), cr(11.0 / 36.0)];
        assert!(crate::blockalg::max_abs_diff(&conv.coeffs, &expected) < 1e-12);
    }

    #[test]
    fn kp_e2_walk_is_periodic() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let e2 = kp_state(&qg, [0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0).unwrap();
        let eps = Functional::counit(&qg);
        for k in 0..6 {
            let nk = convolution_power(&e2, k, &qg).unwrap();
            let expected = if k % 2 == 1 { e2.coeffs() } else { &eps.coeffs };
            assert!(
                crate::blockalg::max_abs_diff(nk.coeffs(), expected) <= 1e-12,
                "k={k}"
            );
        }
    }

    #[test]
    fn z5_simple_walk_second_power() {
        let qg = catalog::function_algebra(&catalog::cyclic(5).unwrap()).unwrap();
        let nu = State::classical(&qg, &[0.0, 0.5, 0.0, 0.0, 0.5]).unwrap();
        let n2 = convolution_power(&nu, 2, &qg).unwrap();
        let expected = [cr(0.5), cr(0.0), cr(0.25), cr(0.25), cr(0.0)];
        assert!(crate::blockalg::max_abs_diff(n2.coeffs(), &expected) <= 1e-12);
    }

    #[test]
    fn convolution_power_agrees_with_iterated_comultiplication() {
        // ν^{⊗k}∘Δ^{(k-1)} = ν^{⋆k} on F(ℤ₅)
        let qg = catalog::function_algebra(&catalog::cyclic(5).unwrap()).unwrap();
        let nu = State::classical(&qg, &[0.0, 0.5, 0.0, 0.0, 0.5]).unwrap();
        let k = 3usize;
        let dk = crate::hopf::delta_power(&qg, k - 1).unwrap();
        let dim = qg.dim();
        let mut via_delta = vec![cr(0.0); dim];
        for (r, out) in via_delta.iter_mut().enumerate() {
            for (idx, v) in dk.matrix.column(r).iter().enumerate() {
                if v.norm_sqr() == 0.0 {
                    continue;
                }
                // decode tensor index, left factor major
                let mut rem = idx;
                let mut weight = cr(1.0);
                let mut divisor = dim.pow((k - 1) as u32);
                for _ in 0..k {
                    let fac = rem / divisor;
                    rem %= divisor;
                    weight *= nu.coeffs()[fac];
                    if divisor > 1 {
                        divisor /= dim;
                    }
                }
                *out += *v * weight;
            }
        }
        let direct = convolution_power(&nu, k, &qg).unwrap();
        assert!(crate::blockalg::max_abs_diff(&via_delta, direct.coeffs()) <= 1e-12);
    }

    #[test]
    fn stochastic_operator_basics() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let eps = Functional::counit(&qg);
        let p_eps = stochastic_operator(&eps, &qg);
        assert!(p_eps.max_abs_diff(&LinearMap::identity(qg.dim())) <= 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..5 {
            let nu = random_state(&qg, &mut rng);
            let p = stochastic_operator(nu.functional(), &qg);
            // unital
            let one = qg.unit().coeffs();
            assert!(crate::blockalg::max_abs_diff(&p.apply(&one), &one) <= 1e-11);
            // transpose action is convolution
            let mu = random_state(&qg, &mut rng);
            let via_p = transpose_apply(&p, mu.functional(), &qg);
            let via_conv = convolve(nu.functional(), mu.functional(), &qg).unwrap();
            assert!(crate::blockalg::max_abs_diff(&via_p.coeffs, &via_conv.coeffs) <= 1e-11);
            // positivity on a random positive element
            let b = random_state(&qg, &mut rng);
            let pos = b.functional().riesz().clone();
            let img = p.apply(&pos.coeffs());
            let img = AlgebraElement::from_coeffs(&qg.shape, &img).unwrap();
            assert!(img.min_eigenvalue() >= -1e-9);
        }
    }

    #[test]
    fn symmetric_state_has_self_adjoint_operator() {
        // ¼(e³+e⁴)+¼(E¹¹+E¹²+E²¹+E²²) is ν = ν∘S; P_ν self-adjoint in the
        // Haar inner product: G·P = P*·G with G the Gram matrix
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let nu = kp_state(&qg, [0.0, 0.0, 0.25, 0.25, 0.5], 1.0, 0.0, 0.0).unwrap();
        assert!(nu.functional().is_symmetric(&qg));
        let p = stochastic_operator(nu.functional(), &qg);
        let dim = qg.dim();
        let mut gram = DMatrix::zeros(dim, dim);
        for s in 0..dim {
            let es = AlgebraElement::basis_element(&qg.shape, s);
            for t in 0..dim {
                let et = AlgebraElement::basis_element(&qg.shape, t);
                gram[(s, t)] = qg.haar.integrate(&es.adjoint().mul(&et).unwrap());
            }
        }
        let lhs = &gram * &p.matrix;
        let rhs = p.matrix.adjoint() * &gram;
        let res = (&lhs - &rhs).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(res <= 1e-9, "self-adjointness residual {res:e}");
    }

    #[test]
    fn counit_and_haar_are_states() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        for phi in [Functional::counit(&qg), Functional::haar_state(&qg)] {
            let report = is_state(&phi, &qg);
            assert!(report.is_state(), "{report:?}");
        }
    }

    #[test]
    fn pal_idempotent() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let coeffs = vec![
            cr(0.25),
            cr(0.0),
            cr(0.0),
            cr(0.25),
            cr(0.5),
            cr(0.0),
            cr(0.0),
            cr(0.0),
        ];
        let phi = Functional::from_coeffs(&qg, coeffs).unwrap();
        assert!(is_state(&phi, &qg).is_state());
        let conv = convolve(&phi, &phi, &qg).unwrap();
        assert!(crate::blockalg::max_abs_diff(&conv.coeffs, &phi.coeffs) <= 1e-10);
    }

    #[test]
    fn z3_probability_is_state_but_not_positive_element() {
        let qg = catalog::function_algebra(&catalog::cyclic(3).unwrap()).unwrap();
        let mu = Functional::from_coeffs(&qg, vec![cr(0.5), cr(1.0 / 3.0), cr(1.0 / 6.0)])
            .unwrap();
        assert!(is_state(&mu, &qg).is_state());
        // viewed inside ℂℤ₃ the same coefficients are not a positive element
        let ga = catalog::group_algebra(&catalog::cyclic(3).unwrap()).unwrap();
        let elt = ga
            .element_from_measure(&[cr(0.5), cr(1.0 / 3.0), cr(1.0 / 6.0)])
            .unwrap();
        // not even self-adjoint, so certainly not positive in ℂℤ₃
        let skew = elt.sub(&elt.adjoint()).unwrap().sup_coeff();
        assert!(skew > 1e-3, "skew part {skew:e}");
    }

    #[test]
    fn cesaro_identities() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let e2 = kp_state(&qg, [0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0).unwrap();
        // n = 1 is ν itself
        let c1 = cesaro(&e2, 1, &qg).unwrap();
        assert!(crate::blockalg::max_abs_diff(c1.coeffs(), e2.coeffs()) <= 1e-13);
        // even n: ½(e² + ε) for the periodic walk
        let c4 = cesaro(&e2, 4, &qg).unwrap();
        let eps = Functional::counit(&qg);
        let expected: Vec<C64> = e2
            .coeffs()
            .iter()
            .zip(&eps.coeffs)
            .map(|(&a, &b)| (a + b) * cr(0.5))
            .collect();
        assert!(crate::blockalg::max_abs_diff(c4.coeffs(), &expected) <= 1e-12);

        // P_ν(ν_n) = ((n+1)/n)·ν_{n+1} − (1/n)·ν on KP₃ with a random state
        let s3 = catalog::sekine(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let nu = random_state(&s3, &mut rng);
        let n = 5usize;
        let cn = cesaro(&nu, n, &s3).unwrap();
        let cn1 = cesaro(&nu, n + 1, &s3).unwrap();
        let p = stochastic_operator(nu.functional(), &s3);
        let lhs = transpose_apply(&p, cn.functional(), &s3);
        let rhs: Vec<C64> = cn1
            .coeffs()
            .iter()
            .zip(nu.coeffs())
            .map(|(&a, &b)| a * cr((n as f64 + 1.0) / n as f64) - b * cr(1.0 / n as f64))
            .collect();
        assert!(crate::blockalg::max_abs_diff(&lhs.coeffs, &rhs) <= 1e-9);
    }

    #[test]
    fn kp_state_examples_and_fourier_values() {
        let (qg, table) = catalog::kac_paljutkin().unwrap();
        // μ₁=1 is ε, μ₂=1 is e²
        let eps = kp_state(&qg, [1.0, 0.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0).unwrap();
        assert!(crate::blockalg::max_abs_diff(eps.coeffs(), &qg.counit) <= 1e-15);
        let e2 = kp_state(&qg, [0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0).unwrap();
        let mut expected = vec![cr(0.0); 8];
        expected[1] = cr(1.0);
        assert!(crate::blockalg::max_abs_diff(e2.coeffs(), &expected) <= 1e-15);

        // closed forms of ν(ρ) for generic parameters
        let mu = [0.15, 0.2, 0.25, 0.3, 0.1];
        let (x, y, z) = (0.3, 0.2, 0.4);
        let nu = kp_state(&qg, mu, x, y, z).unwrap();
        let val = |name: &str, i: usize, j: usize| {
            let irrep = table.irreps.iter().find(|k| k.name == name).unwrap();
            nu.functional().apply(irrep.element(i, j))
        };
        let close = |a: C64, b: C64| (a - b).norm() < 1e-12;
        assert!(close(val("rho_a", 0, 0), cr(mu[0] - mu[1] - mu[2] + mu[3] - z * mu[4])));
        assert!(close(val("rho_b", 0, 0), cr(mu[0] - mu[1] - mu[2] + mu[3] + z * mu[4])));
        assert!(close(val("rho_c", 0, 0), cr(mu[0] + mu[1] + mu[2] + mu[3] - mu[4])));
        assert!(close(val("rho", 0, 0), cr(mu[0] + mu[1] - mu[2] - mu[3])));
        assert!(close(val("rho", 1, 1), cr(mu[0] - mu[1] + mu[2] - mu[3])));
        let s2 = std::f64::consts::SQRT_2;
        assert!(close(val("rho", 0, 1), cr((x + y) * mu[4] / s2)));
        assert!(close(val("rho", 1, 0), cr((x - y) * mu[4] / s2)));

        // Example 2 state kills the one-dimensional matrix elements
        let ex2 = kp_state(&qg, [0.0, 0.0, 0.25, 0.25, 0.5], 1.0, 0.0, 0.0).unwrap();
        for name in ["rho_a", "rho_b", "rho_c"] {
            let irrep = table.irreps.iter().find(|k| k.name == name).unwrap();
            assert!(ex2.functional().apply(irrep.element(0, 0)).norm() < 1e-13);
        }
        let rho = table.irreps.iter().find(|k| k.name == "rho").unwrap();
        assert!((ex2.functional().apply(rho.element(0, 0)) - cr(-0.5)).norm() < 1e-13);
        assert!(ex2.functional().apply(rho.element(1, 1)).norm() < 1e-13);
        assert!((ex2.functional().apply(rho.element(0, 1)) - cr(1.0 / (2.0 * s2))).norm() < 1e-13);

        // constraint violations are rejected
        assert!(kp_state(&qg, [0.5, 0.5, 0.0, 0.0, 0.0], 2.0, 0.0, 0.0).is_err());
        assert!(kp_state(&qg, [0.9, 0.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn random_states_are_states_and_convolution_closed() {
        let s3 = catalog::sekine(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..10 {
            let a = random_state(&s3, &mut rng);
            let b = random_state(&s3, &mut rng);
            let c = convolve(a.functional(), b.functional(), &s3).unwrap();
            let report = is_state(&c, &s3);
            assert!(report.min_riesz_eigenvalue >= -1e-9);
            assert!(report.normalisation <= 1e-9);
        }
    }

    #[test]
    fn convolution_is_associative() {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..10 {
            let a = random_state(&qg, &mut rng);
            let b = random_state(&qg, &mut rng);
            let c = random_state(&qg, &mut rng);
            let ab_c = convolve(
                &convolve(a.functional(), b.functional(), &qg).unwrap(),
                c.functional(),
                &qg,
            )
            .unwrap();
            let a_bc = convolve(
                a.functional(),
                &convolve(b.functional(), c.functional(), &qg).unwrap(),
                &qg,
            )
            .unwrap();
            assert!(crate::blockalg::max_abs_diff(&ab_c.coeffs, &a_bc.coeffs) <= 1e-10);
        }
    }
}
