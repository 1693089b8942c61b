//! Property-style coverage that cuts across modules: algebra laws under
//! random inputs, convolution laws on random states, user-supplied irrep
//! ingestion, and the cube-walk projection lower bound.

use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qgwalk::blockalg::{c, cr, p_norm, AlgebraElement, BlockShape, NormP};
use qgwalk::catalog;
use qgwalk::fourier::{fourier_inverse, fourier_map, tv_distance, tv_lower_via_projection};
use qgwalk::irreps::{Irrep, IrrepTable};
use qgwalk::walks::{convolution_power, convolve, random_state, Functional, State};

fn element_from_parts(shape: &BlockShape, parts: &[f64]) -> AlgebraElement {
    let mut e = AlgebraElement::zero(shape);
    let mut it = parts.iter();
    for block in e.blocks.iter_mut() {
        for v in block.iter_mut() {
            let re = it.next().copied().unwrap_or(0.0);
            let im = it.next().copied().unwrap_or(0.0);
            *v = c(re, im);
        }
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_and_product_laws(parts_a in prop::collection::vec(-5.0f64..5.0, 16),
                                   parts_b in prop::collection::vec(-5.0f64..5.0, 16)) {
        let shape = BlockShape::new(vec![1, 1, 2]).unwrap();
        let a = element_from_parts(&shape, &parts_a);
        let b = element_from_parts(&shape, &parts_b);
        let lhs = a.mul(&b).unwrap().adjoint();
        let rhs = b.adjoint().mul(&a.adjoint()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero(1e-12));
        prop_assert!(a.adjoint().adjoint().sub(&a).unwrap().is_zero(0.0));
        // |a| is positive and squares to a*a
        let m = a.abs();
        prop_assert!(m.min_eigenvalue() >= -1e-10);
        let target = a.adjoint().mul(&a).unwrap();
        prop_assert!(m.mul(&m).unwrap().sub(&target).unwrap().sup_coeff() <= 1e-9);
    }

    #[test]
    fn fourier_round_trip_on_kp(parts in prop::collection::vec(-3.0f64..3.0, 16)) {
        let (qg, _) = catalog::kac_paljutkin().unwrap();
        let a = element_from_parts(&qg.shape, &parts);
        let back = fourier_inverse(&fourier_map(&a, &qg), &qg);
        prop_assert!(back.sub(&a).unwrap().sup_coeff() <= 1e-12);
    }

    #[test]
    fn cauchy_schwarz_one_norm(parts_a in prop::collection::vec(-2.0f64..2.0, 16),
                               parts_b in prop::collection::vec(-2.0f64..2.0, 16)) {
        let h = catalog::kp_haar();
        let x = element_from_parts(&h.shape, &parts_a);
        let y = element_from_parts(&h.shape, &parts_b);
        let lhs = p_norm(&x.mul(&y).unwrap(), &h, NormP::One);
        let rhs = p_norm(&x, &h, NormP::Two) * p_norm(&y, &h, NormP::Two);
        prop_assert!(lhs <= rhs + 1e-10);
    }
}

#[test]
fn convolution_laws_on_random_states() {
    let s3 = catalog::sekine(3).unwrap();
    let (kp, _) = catalog::kac_paljutkin().unwrap();
    for qg in [&s3, &kp] {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let a = random_state(qg, &mut rng);
            let b = random_state(qg, &mut rng);
            let c_state = random_state(qg, &mut rng);
            let ab = convolve(a.functional(), b.functional(), qg).unwrap();
            let bc = convolve(b.functional(), c_state.functional(), qg).unwrap();
            let lhs = convolve(&ab, c_state.functional(), qg).unwrap();
            let rhs = convolve(a.functional(), &bc, qg).unwrap();
            assert!(qgwalk::blockalg::max_abs_diff(&lhs.coeffs, &rhs.coeffs) <= 1e-10);
            // states are closed under convolution
            let report = qgwalk::walks::is_state(&ab, qg);
            assert!(report.min_riesz_eigenvalue >= -1e-9 && report.normalisation <= 1e-9);
        }
    }
}

#[test]
fn user_irrep_table_for_s3_is_ingested() {
    // the two-dimensional representation of S3 on the zero-sum plane,
    // built from permutation matrices restricted to an orthonormal basis
    let (table, perms) = catalog::symmetric_with_permutations(3).unwrap();
    let qg = catalog::function_algebra(&table).unwrap();
    let shape = qg.shape.clone();

    let u1 = [1.0 / 2.0f64.sqrt(), -1.0 / 2.0f64.sqrt(), 0.0];
    let u2 = [
        1.0 / 6.0f64.sqrt(),
        1.0 / 6.0f64.sqrt(),
        -2.0 / 6.0f64.sqrt(),
    ];
    let rep_matrix = |p: &[usize]| -> DMatrix<f64> {
        // ρ(σ)ᵢⱼ = ⟨uᵢ, P_σ uⱼ⟩ with (P_σ v)_{σ(i)} = v_i
        let basis = [u1, u2];
        DMatrix::from_fn(2, 2, |i, j| {
            let mut permuted = [0.0f64; 3];
            for (src, &dst) in p.iter().enumerate() {
                permuted[dst] = basis[j][src];
            }
            (0..3).map(|t| basis[i][t] * permuted[t]).sum()
        })
    };

    let triv = Irrep {
        name: "triv".into(),
        dim: 1,
        elements: vec![AlgebraElement::unit(&shape)],
    };
    let sign_values: Vec<_> = perms
        .iter()
        .map(|p| {
            let mut inversions = 0;
            for i in 0..3 {
                for j in i + 1..3 {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            cr(if inversions % 2 == 0 { 1.0 } else { -1.0 })
        })
        .collect();
    let sign = Irrep {
        name: "sign".into(),
        dim: 1,
        elements: vec![AlgebraElement::from_coeffs(&shape, &sign_values).unwrap()],
    };
    let mut std_elements = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let values: Vec<_> = perms.iter().map(|p| cr(rep_matrix(p)[(i, j)])).collect();
            std_elements.push(AlgebraElement::from_coeffs(&shape, &values).unwrap());
        }
    }
    let standard = Irrep {
        name: "std".into(),
        dim: 2,
        elements: std_elements,
    };
    let user = IrrepTable::new(shape, vec![triv, sign, standard]);
    assert_eq!(user.square_sum(), 6);

    let accepted = catalog::classical_irreps(&qg, &table, Some(user)).unwrap();
    assert!(accepted.diagnostics(&qg).pass());

    // a corrupted table is rejected by the orthogonality invariants
    let mut broken = accepted.clone();
    broken.irreps[2].elements[1] = AlgebraElement::unit(&qg.shape);
    assert!(catalog::classical_irreps(&qg, &table, Some(broken)).is_err());
}

#[test]
fn cube_projection_lower_bound_before_mixing() {
    let n = 6usize;
    let table = catalog::z2_power(n).unwrap();
    let qg = catalog::function_algebra(&table).unwrap();
    let order = 1usize << n;
    let mut probs = vec![0.0; order];
    for s in 0..order {
        if (s as u32).count_ones() <= 1 {
            probs[s] = 1.0 / (n as f64 + 1.0);
        }
    }
    let nu = State::classical(&qg, &probs).unwrap();
    let pi = Functional::haar_state(&qg);

    // indicator of the central weight window is a projection in F(Z2^6)
    let beta = 1.0;
    let mut window = AlgebraElement::zero(&qg.shape);
    for s in 0..order {
        let w = (s as u32).count_ones() as f64;
        if (n as f64 - 2.0 * w).abs() < beta * (n as f64).sqrt() {
            window.blocks[s][(0, 0)] = cr(1.0);
        }
    }
    let k = 2usize; // well below the mixing time
    let nk = convolution_power(&nu, k, &qg).unwrap();
    let lower = tv_lower_via_projection(&nk, &window, &qg).unwrap();
    let tv = tv_distance(nk.functional(), &pi, &qg);
    assert!(lower > 0.05, "window bound should be effective early: {lower}");
    assert!(lower <= tv + 1e-9);

    // exhaustive classical check of the same quantity over the 64 points
    let pi_mass = 1.0 / order as f64;
    let mut brute = 0.0;
    for s in 0..order {
        let w = (s as u32).count_ones() as f64;
        if (n as f64 - 2.0 * w).abs() < beta * (n as f64).sqrt() {
            brute += nk.coeffs()[s].re - pi_mass;
        }
    }
    assert!((lower - brute.abs()) <= 1e-12);
}

#[test]
fn descriptor_export_accepts_only_valid_groups() {
    // corrupting the Haar weights must be caught on load
    let (qg, _) = catalog::kac_paljutkin().unwrap();
    let mut file = qgwalk::io::descriptor_from_group(&qg, None);
    file.haar_weights[0] += 0.25;
    assert!(qgwalk::io::group_from_descriptor(&file).is_err());

    let mut file = qgwalk::io::descriptor_from_group(&qg, None);
    file.counit.pop();
    assert!(qgwalk::io::group_from_descriptor(&file).is_err());
}

#[test]
fn classical_tv_is_monotone_quantum_only_logged() {
    // monotone total variation is a theorem for classical groups; on the
    // truly quantum members we only record the values (no assertion)
    for spec in ["zn:8", "cube:4"] {
        let built = qgwalk::io::build_group(spec, None).unwrap();
        let qg = built.group().unwrap();
        let nu = qgwalk::io::build_state("simple", &built, 0).unwrap();
        let pi = Functional::haar_state(qg);
        let p = qgwalk::walks::stochastic_operator(nu.functional(), qg);
        let mut current = Functional::counit(qg);
        let mut prev = f64::INFINITY;
        for _ in 1..=12 {
            current = qgwalk::walks::transpose_apply(&p, &current, qg);
            let tv = tv_distance(&current, &pi, qg);
            assert!(tv <= prev + 1e-10, "{spec}: tv increased");
            prev = tv;
        }
    }
    let (kp, _) = catalog::kac_paljutkin().unwrap();
    let nu = qgwalk::walks::kp_state(&kp, [0.0, 0.0, 0.25, 0.25, 0.5], 1.0, 0.0, 0.0).unwrap();
    let pi = Functional::haar_state(&kp);
    let p = qgwalk::walks::stochastic_operator(nu.functional(), &kp);
    let mut current = Functional::counit(&kp);
    let mut log = Vec::new();
    for _ in 1..=6 {
        current = qgwalk::walks::transpose_apply(&p, &current, &kp);
        log.push(tv_distance(&current, &pi, &kp));
    }
    println!("quantum walk tv sequence (recorded only): {log:?}");
}
