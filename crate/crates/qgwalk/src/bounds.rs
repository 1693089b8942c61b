//! Representation-theoretic mixing bounds: the upper bound lemma
//! `‖ν^{⋆k}−π‖² ≤ ¼ Σ_{α≠τ} d_α·Tr[(ν̂(α)*)^k ν̂(α)^k]`, the matching
//! one-dimensional lower bound `½|ν(ρ)|^k`, the closed-form bounds for each
//! walk family, and an experiment driver that runs them next to the exact
//! spectral distances.

use std::f64::consts::PI;

use crate::blockalg::C64;
use crate::error::{Error, Result};
use crate::fourier::{
    fourier_at_irrep, l2_distance, separation_distance, tv_distance,
};
use crate::hopf::QuantumGroup;
use crate::irreps::IrrepTable;
use crate::walks::{stochastic_operator, transpose_apply, Functional, State};

/// One closed-form family bound, with the hypothesis it was checked under.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FamilyBound {
    pub value: f64,
    pub hypothesis: &'static str,
}

fn require(cond: bool, hypothesis: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(hypothesis.into()))
    }
}

// ---------------------------------------------------------------------------
// Generic upper / lower bound lemmas
// ---------------------------------------------------------------------------

fn check_table(nu: &State, irreps: &IrrepTable, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Validation("bounds need k >= 1".into()));
    }
    if irreps.square_sum() != nu.coeffs().len() {
        return Err(Error::Validation(format!(
            "irrep table is incomplete: sum of d² is {} on a dimension-{} algebra",
            irreps.square_sum(),
            nu.coeffs().len()
        )));
    }
    let unit = crate::blockalg::AlgebraElement::unit(&irreps.shape);
    let trivial_first = irreps
        .irreps
        .first()
        .filter(|k| k.dim == 1)
        .map(|k| k.elements[0].sub(&unit).map(|d| d.sup_coeff()).unwrap_or(f64::INFINITY))
        .unwrap_or(f64::INFINITY);
    if trivial_first > 1e-10 {
        return Err(Error::Validation(
            "irrep table must list the trivial representation first".into(),
        ));
    }
    Ok(())
}

/// Per-irrep traces `d_α·Tr[(ν̂(α)*)^k ν̂(α)^k]` over the nontrivial irreps.
pub fn ubl_contributions(
    nu: &State,
    irreps: &IrrepTable,
    k: usize,
) -> Result<Vec<(String, f64)>> {
    check_table(nu, irreps, k)?;
    let mut out = Vec::with_capacity(irreps.irreps.len() - 1);
    for irrep in irreps.irreps.iter().skip(1) {
        let m = fourier_at_irrep(nu.functional(), irrep).matrix;
        // ν̂^k by repeated squaring; no diagonalisability assumed
        let mut pk = nalgebra::DMatrix::<C64>::identity(irrep.dim, irrep.dim);
        let mut base = m;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                pk = &pk * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        let gram = pk.adjoint() * &pk;
        let trace: f64 = gram.diagonal().iter().map(|z| z.re).sum();
        out.push((irrep.name.clone(), irrep.dim as f64 * trace));
    }
    Ok(out)
}

/// Upper bound lemma, returned as a bound on `‖ν^{⋆k}−π‖` (the square root of
/// the quarter-sum).
pub fn upper_bound(nu: &State, irreps: &IrrepTable, k: usize) -> Result<f64> {
    let contributions = ubl_contributions(nu, irreps, k)?;
    Ok(total_from_contributions(&contributions))
}

pub fn total_from_contributions(contributions: &[(String, f64)]) -> f64 {
    (0.25 * contributions.iter().map(|(_, c)| c.max(0.0)).sum::<f64>()).sqrt()
}

/// Lower bound lemma: `max_ρ ½|ν(ρ)|^k` over nontrivial one-dimensional
/// irreps; zero when none exist.
pub fn lower_bound(nu: &State, irreps: &IrrepTable, k: usize) -> Result<f64> {
    check_table(nu, irreps, k)?;
    let mut best = 0.0f64;
    for irrep in irreps.irreps.iter().skip(1) {
        if irrep.dim != 1 {
            continue;
        }
        let v = nu.functional().apply(&irrep.elements[0]).norm();
        best = best.max(0.5 * v.powi(k as i32));
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Closed-form family bounds
// ---------------------------------------------------------------------------

/// Simple walk on the cyclic group: upper bound `e^{−π²k/2n²}` (n odd,
/// k ≥ n²/40).
pub fn zn_upper(n: usize, k: usize) -> Result<FamilyBound> {
    let hypothesis = "n odd and k >= n^2/40";
    require(n % 2 == 1 && (k as f64) >= (n * n) as f64 / 40.0, hypothesis)?;
    Ok(FamilyBound {
        value: (-PI * PI * k as f64 / (2.0 * (n * n) as f64)).exp(),
        hypothesis,
    })
}

/// Simple walk on the cyclic group: lower bound
/// `½·e^{−π²k/2n² − π⁴k/2n⁴}` for `n ≥ 7`.
pub fn zn_lower(n: usize, k: usize) -> Result<FamilyBound> {
    let hypothesis = "n >= 7";
    require(n >= 7, hypothesis)?;
    let n2 = (n * n) as f64;
    let value = 0.5 * (-PI.powi(2) * k as f64 / (2.0 * n2) - PI.powi(4) * k as f64 / (2.0 * n2 * n2)).exp();
    Ok(FamilyBound { value, hypothesis })
}

/// Per-character contribution of the cyclic simple walk: `cos^{2k}(2πα/n)`.
pub fn zn_contribution(n: usize, alpha: usize, k: usize) -> f64 {
    (2.0 * PI * alpha as f64 / n as f64).cos().powi(2 * k as i32)
}

/// Number of steps the n-cube bound is stated at: `k = (n+1)(ln n + c)/4`.
pub fn cube_mixing_k(n: usize, c: f64) -> f64 {
    (n as f64 + 1.0) * ((n as f64).ln() + c) / 4.0
}

/// Nearest-neighbour walk on `ℤ₂ⁿ`: bound on `‖ν^{⋆k}−π‖²` at
/// `k = (n+1)(ln n + c)/4`, `c > 0`.
pub fn cube_upper(n: usize, c: f64) -> Result<FamilyBound> {
    let hypothesis = "n > 1 and c > 0";
    require(n > 1 && c > 0.0, hypothesis)?;
    Ok(FamilyBound {
        value: 0.5 * ((-c).exp().exp() - 1.0),
        hypothesis,
    })
}

/// Dual symmetric group walk: bound on `‖u^{⋆k}−π‖²` at `k = α·nⁿ`.
/// Evaluated in the log domain so large `n` stays finite.
pub fn dual_sn_upper(n: usize, alpha: f64) -> Result<FamilyBound> {
    let hypothesis = "n >= 4 and alpha > 0 at k = alpha*n^n";
    require(n >= 4 && alpha > 0.0, hypothesis)?;
    let nf = n as f64;
    // intermediate fact used by the chain: f1 <= 2 f0 / sqrt(n)
    let f0 = (1.0 - nf.powf(2.0 - nf)) / (nf - 1.0) + 2.0 * nf.sqrt() * nf.powf(-nf);
    let f1 = 2.0 * nf.sqrt() / (nf * nf) + nf.powf(-2.0) * (1.0 - nf.powf(2.0 - nf)) / (nf - 1.0);
    if f1 > 2.0 * f0 / nf.sqrt() + 1e-15 {
        return Err(Error::Numerical(
            "transposition maximum inequality f1 <= 2 f0/sqrt(n) failed".into(),
        ));
    }
    let log_front = 2.0 - (4.0f64).ln() + (nf - 0.5) * (nf - 1.0).ln() - nf;
    let log_decay = -2.0 * (nf - 1.0) * (nf.sqrt() - 1.0).powi(2) * alpha;
    // (n−4)·n^{n−1}·α in the tail exponent; exp saturates harmlessly
    let log_nn1 = (nf - 1.0) * nf.ln();
    let tail = if log_nn1 > 700.0 {
        0.0
    } else {
        (nf - 1.0) * (-(nf - 4.0) * log_nn1.exp() * alpha).exp()
    };
    let value = (log_front + log_decay).exp() * (1.0 + tail);
    Ok(FamilyBound { value, hypothesis })
}

/// Dual symmetric group walk: lower bound on `‖u^{⋆k}−π‖²` at `k = β(nⁿ−1)`.
pub fn dual_sn_lower(n: usize, beta: f64) -> Result<FamilyBound> {
    let hypothesis = "n >= 4 and beta > 0 at k = beta*(n^n - 1)";
    require(n >= 4 && beta > 0.0, hypothesis)?;
    let nf = n as f64;
    let s = (nf.sqrt() - 1.0).powi(2);
    let log_nn = nf * nf.ln();
    let ratio = if log_nn > 700.0 {
        0.0
    } else {
        (nf - 1.0).powi(2) * s * s / (log_nn.exp() - 1.0)
    };
    let value = 0.25 * (-2.0 * (ratio + (nf - 1.0) * s) * beta).exp();
    Ok(FamilyBound { value, hypothesis })
}

/// Closed-form upper bound for a symmetric state on the Kac–Paljutkin group,
/// with the per-irrep terms in the same normalisation as
/// [`ubl_contributions`]. The eigenvalues of the matrix block are
/// `λ± = μ₁−μ₄ ± √((μ₂−μ₃)² + μ₅²x²/2)`.
pub fn kp_symmetric_upper(
    mu: [f64; 5],
    x: f64,
    z: f64,
    k: usize,
) -> Result<(FamilyBound, Vec<(String, f64)>)> {
    let hypothesis = "convex weights, x^2 + z^2 <= 1, y = 0 (symmetric state), k >= 1";
    let total: f64 = mu.iter().sum();
    require(
        k >= 1 && mu.iter().all(|&m| m >= -1e-12) && (total - 1.0).abs() <= 1e-10
            && x * x + z * z <= 1.0 + 1e-10,
        hypothesis,
    )?;
    let e = 2 * k as i32;
    let root = ((mu[1] - mu[2]).powi(2) + mu[4] * mu[4] * x * x / 2.0).sqrt();
    let lambda_plus = mu[0] - mu[3] + root;
    let lambda_minus = mu[0] - mu[3] - root;
    let contributions = vec![
        (
            "rho_a".to_string(),
            (mu[0] - mu[1] - mu[2] + mu[3] - z * mu[4]).powi(e),
        ),
        (
            "rho_b".to_string(),
            (mu[0] - mu[1] - mu[2] + mu[3] + z * mu[4]).powi(e),
        ),
        (
            "rho_c".to_string(),
            (mu[0] + mu[1] + mu[2] + mu[3] - mu[4]).powi(e),
        ),
        (
            "rho".to_string(),
            2.0 * (lambda_plus.powi(e) + lambda_minus.powi(e)),
        ),
    ];
    let value = total_from_contributions(&contributions);
    Ok((FamilyBound { value, hypothesis }, contributions))
}

const ALPHA: f64 = 2.0 + 1.7320508075688772; // 2+√3
const BETA: f64 = 2.0 - 1.7320508075688772; // 2−√3

/// Lower bound for the second Kac–Paljutkin example walk, valid at every `k`:
/// `(1/2√6)·((8β)^{−k/2} − (8α)^{−k/2})` with `α = 2+√3`, `β = 2−√3`.
pub fn kp_example2_lower(k: usize) -> Result<FamilyBound> {
    let hypothesis = "k >= 1";
    require(k >= 1, hypothesis)?;
    let half_k = k as f64 / 2.0;
    let value = ((8.0 * BETA).powf(-half_k) - (8.0 * ALPHA).powf(-half_k))
        / (2.0 * 6.0f64.sqrt());
    Ok(FamilyBound { value, hypothesis })
}

/// Exact value of `½|ν^{⋆k}(ρ₁₂)|` for the second example walk: the parity
/// of `k` flips the sign of the `(8α)^{−k/2}` term.
pub fn kp_example2_exact_lower(k: usize) -> f64 {
    let half_k = k as f64 / 2.0;
    let a = (8.0 * BETA).powf(-half_k);
    let b = (8.0 * ALPHA).powf(-half_k);
    if k % 2 == 0 {
        (a - b) / (2.0 * 6.0f64.sqrt())
    } else {
        (a + b) / (2.0 * 6.0f64.sqrt())
    }
}

/// Upper bound for the second Kac–Paljutkin example walk: `((√2+1)/4)^k`.
pub fn kp_example2_upper(k: usize) -> f64 {
    ((2.0f64.sqrt() + 1.0) / 4.0).powi(k as i32)
}

/// Sekine family walk: `‖ν^{⋆k}−π‖ ≤ 1.11·e^{−απ²}` at `k = ⌈n²/80 + αn²⌉`
/// for odd `n ≥ 7` and `α ≥ 1`.
///
/// The intermediate inequalities of the chain are asserted rather than
/// re-derived: the geometric-tail bounds need `1−e^{−3π²k/n²} > ½`, and the
/// assembled trace bound must be dominated by the closed form.
pub fn sekine_upper(n: usize, alpha: f64) -> Result<FamilyBound> {
    let hypothesis = "n odd, n >= 7, alpha >= 1 at k = ceil(n^2/80 + alpha n^2)";
    let n2 = (n * n) as f64;
    require(n % 2 == 1 && n >= 7 && alpha >= 1.0, hypothesis)?;
    let k = sekine_mixing_k(n, alpha);
    let kf = k as f64;
    let tail_half = 1.0 - (-3.0 * PI * PI * kf / n2).exp();
    let tail_half2 = 1.0 - (-3.0 * PI * PI * (2.0 * kf - 1.0) / n2).exp();
    if tail_half <= 0.5 || tail_half2 <= 0.5 {
        return Err(Error::Numerical(
            "geometric tail bound 1 - e^{-3pi^2 k/n^2} > 1/2 failed".into(),
        ));
    }
    // f(k,n)·[1 + ½(γ/4)^{2k} + (n²−½)(3γ/4)^{2k} + (2n−4)(√γ/2)^{2k}]
    let gamma = (PI * PI / n2).exp();
    let f = (-PI * PI * (2.0 * kf - 1.0) / n2).exp();
    let bracket = 1.0
        + 0.5 * (gamma / 4.0).powf(2.0 * kf)
        + (n2 - 0.5) * (0.75 * gamma).powf(2.0 * kf)
        + (2.0 * n as f64 - 4.0) * (gamma.sqrt() / 2.0).powf(2.0 * kf);
    let assembled = (f * bracket).sqrt();
    let value = 1.11 * (-alpha * PI * PI).exp();
    if assembled > value {
        return Err(Error::Numerical(format!(
            "closed form 1.11 e^{{-alpha pi^2}} fails to dominate the assembled bound: \
             {assembled:e} > {value:e}"
        )));
    }
    Ok(FamilyBound { value, hypothesis })
}

/// Number of steps the Sekine bound is stated at: `⌈n²/80 + αn²⌉`.
pub fn sekine_mixing_k(n: usize, alpha: f64) -> usize {
    let n2 = (n * n) as f64;
    (n2 / 80.0 + alpha * n2).ceil() as usize
}

/// Sekine family walk: lower bound `½|ν(ρ₁⁺)|^k = 2^{−(2k+1)}(5+4cos(2π/n))^{k/2}`.
pub fn sekine_lower(n: usize, k: usize) -> Result<FamilyBound> {
    let hypothesis = "n >= 3 and k >= 1";
    require(n >= 3 && k >= 1, hypothesis)?;
    let c = (5.0 + 4.0 * (2.0 * PI / n as f64).cos()).sqrt();
    Ok(FamilyBound {
        value: 0.5 * (c / 4.0).powi(k as i32),
        hypothesis,
    })
}

/// Closed-form per-irrep contributions of the Sekine walk, in the same
/// normalisation and naming as [`ubl_contributions`] on
/// [`crate::catalog::sekine_irreps`].
pub fn sekine_contributions(n: usize, k: usize) -> Result<Vec<(String, f64)>> {
    require(n >= 3 && n % 2 == 1 && k >= 1, "n odd >= 3, k >= 1")?;
    let zeta = crate::catalog::zeta(n);
    let zp = |e: i64| -> C64 {
        let e = e.rem_euclid(n as i64) as u32;
        zeta.powu(e)
    };
    let nn = n as i64;
    let e2k = 2 * k as i32;
    let mut out = Vec::new();
    // one-dimensional values: ν(ρ_ℓ^±) = ¼(1 + ζ^ℓ ± m_ℓ) with the matrix part
    // m₀ = 2, m₁ = m_{n−1} = 1, otherwise 0
    let matrix_part = |l: i64| -> f64 {
        let l = l.rem_euclid(nn);
        if l == 0 {
            2.0
        } else if l == 1 || l == nn - 1 {
            1.0
        } else {
            0.0
        }
    };
    let one_dim = |l: i64, sign: f64| -> f64 {
        let v = (crate::blockalg::cr(1.0) + zp(l)) * crate::blockalg::cr(0.25)
            + crate::blockalg::cr(sign * matrix_part(l) * 0.25);
        v.norm().powi(e2k)
    };
    out.push(("rho0-".to_string(), one_dim(0, -1.0)));
    for l in 1..nn {
        out.push((format!("rho{l}+"), one_dim(l, 1.0)));
        out.push((format!("rho{l}-"), one_dim(l, -1.0)));
    }
    for u in 0..nn {
        for v in 1..=((nn - 1) / 2) {
            let name = format!("kappa{u}.{v}");
            let val = if u == 0 {
                // rank-one transform: Tr[(A*)^k A^k] = 4·(4cos²(πv/n))^{2k−1}
                let c2 = 4.0 * (PI * v as f64 / n as f64).cos().powi(2);
                2.0 * 4.0 * c2.powi(2 * k as i32 - 1) / 4.0f64.powi(e2k)
            } else if u == 1 || u == nn - 1 {
                // sec²-weighted trace of the non-normal transform
                let alpha_v = zp(v) + zp(-v) + zp(-1);
                let phase = (alpha_v * zeta).powu(k as u32);
                let s2 = (2.0 * PI * v as f64 / n as f64).sin().powi(2);
                let sec2 = 1.0 / (2.0 * PI * v as f64 / n as f64).cos().powi(2);
                let tr = 0.25
                    * sec2
                    * (4.0 + 4.0 * alpha_v.norm().powi(e2k) - 8.0 * s2 * phase.re);
                2.0 * tr / 4.0f64.powi(e2k)
            } else {
                // diagonal transform: |ζ^u+ζ^v|^{2k} + |ζ^u+ζ^{−v}|^{2k}
                let a = (zp(u) + zp(v)).norm().powi(e2k);
                let b = (zp(u) + zp(-v)).norm().powi(e2k);
                2.0 * (a + b) / 4.0f64.powi(e2k)
            };
            out.push((name, val));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Combinatorial oracles
// ---------------------------------------------------------------------------

fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as f64
}

/// Residuals of the two binomial identities behind the second example's
/// path count: `Σ C(N+w, 2w+1)·2^w = (α^N−β^N)/(2√3)` and
/// `Σ C(N+w, 2w)·2^w = ((5α−1)α^N + (α+1)β^N)/(6α)`.
pub fn lemmasum_check(n: usize) -> Result<(f64, f64)> {
    require(n >= 1 && n <= 30, "1 <= N <= 30 (binomials exact in doubles)")?;
    let nf = n as u64;
    let mut sum1 = 0.0f64;
    let mut sum2 = 0.0f64;
    for w in 0..=nf {
        let p = 2.0f64.powi(w as i32);
        sum1 += binomial(nf + w, 2 * w + 1) * p;
        sum2 += binomial(nf + w, 2 * w) * p;
    }
    let an = ALPHA.powi(n as i32);
    let bn = BETA.powi(n as i32);
    let rhs1 = (an - bn) / (2.0 * 3.0f64.sqrt());
    let rhs2 = ((5.0 * ALPHA - 1.0) * an + (ALPHA + 1.0) * bn) / (6.0 * ALPHA);
    let rel = |lhs: f64, rhs: f64| (lhs - rhs).abs() / rhs.abs().max(1.0);
    Ok((rel(sum1, rhs1), rel(sum2, rhs2)))
}

/// `ν^{⋆k}(ρ₁₂)` for the second example walk, two ways.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PathOracle {
    /// via generic convolution powers paired with ρ₁₂
    pub direct: f64,
    /// via the loop/return/go path count on the two-node graph
    pub combinatorial: f64,
    pub difference: f64,
}

/// The walk `ν = ¼(e³+e⁴) + ¼(E¹¹+E¹²+E²¹+E²²)` visits `ρ₁₂` along paths
/// `1→…→2` whose steps carry `ν(ρ₁₁) = −½`, `ν(ρ₁₂) = ν(ρ₂₁) = 1/(2√2)`,
/// `ν(ρ₂₂) = 0`; with no `2→2` step a length-k path is `ℓ` loops and
/// `(k−ℓ−1)/2` returns followed by one go.
pub fn kp_example2_path_oracle(
    qg: &QuantumGroup,
    irreps: &IrrepTable,
    k: usize,
) -> Result<PathOracle> {
    require(k >= 1, "k >= 1")?;
    let nu = crate::walks::kp_state(qg, [0.0, 0.0, 0.25, 0.25, 0.5], 1.0, 0.0, 0.0)?;
    let nk = crate::walks::convolution_power(&nu, k, qg)?;
    let rho = irreps
        .irreps
        .iter()
        .find(|i| i.dim == 2)
        .ok_or_else(|| Error::Validation("no two-dimensional irrep in table".into()))?;
    let direct_c = nk.functional().apply(rho.element(0, 1));
    if direct_c.im.abs() > 1e-10 {
        return Err(Error::Numerical(format!(
            "expected a real path sum, got imaginary part {:e}",
            direct_c.im
        )));
    }
    let direct = direct_c.re;

    let mut sum = 0.0f64;
    let start = if (k - 1) % 2 == 0 { 0 } else { 1 };
    let mut l = start;
    while l + 1 <= k {
        let slots = (k + l - 1) / 2;
        let paths = binomial(slots as u64, l as u64);
        sum += paths * (-2.0f64.sqrt()).powi(l as i32);
        l += 2;
    }
    let combinatorial = sum / 2.0f64.powf(1.5 * k as f64);
    Ok(PathOracle {
        direct,
        combinatorial,
        difference: (direct - combinatorial).abs(),
    })
}

// ---------------------------------------------------------------------------
// Experiment driver
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundRow {
    pub k: usize,
    pub tv: f64,
    pub l2: f64,
    pub sep: f64,
    pub ubl: f64,
    pub lbl: f64,
    pub contributions: Vec<f64>,
}

/// Per-step records of one walk: exact distances to the Haar state plus the
/// two bounds, with the per-irrep trace contributions retained.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundSeries {
    pub irrep_names: Vec<String>,
    pub rows: Vec<BoundRow>,
}

/// Run a walk to `kmax`, recording exact distances and both bounds.
/// The sandwich `lbl ≤ tv ≤ ubl` is enforced at every step.
pub fn run_experiment(
    qg: &QuantumGroup,
    irreps: &IrrepTable,
    nu: &State,
    kmax: usize,
) -> Result<BoundSeries> {
    run_experiment_with_lower(qg, irreps, nu, kmax, None)
}

/// [`run_experiment`] with an extra state-specific lower bound merged into
/// the `lbl` column (e.g. a path-counting oracle where no one-dimensional
/// irrep sees the walk).
pub fn run_experiment_with_lower(
    qg: &QuantumGroup,
    irreps: &IrrepTable,
    nu: &State,
    kmax: usize,
    extra_lower: Option<&dyn Fn(usize) -> f64>,
) -> Result<BoundSeries> {
    if kmax == 0 {
        return Err(Error::Validation("kmax >= 1".into()));
    }
    irreps
        .diagnostics(qg)
        .pass()
        .then_some(())
        .ok_or_else(|| Error::Validation("irrep table fails invariants".into()))?;
    let pi = Functional::haar_state(qg);
    let p = stochastic_operator(nu.functional(), qg);
    let mut current = Functional::counit(qg);
    let irrep_names: Vec<String> = irreps
        .irreps
        .iter()
        .skip(1)
        .map(|i| i.name.clone())
        .collect();
    let mut rows = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        current = transpose_apply(&p, &current, qg);
        let tv = tv_distance(&current, &pi, qg);
        let l2 = l2_distance(&current, &pi, qg);
        let sep = separation_distance(&current, &pi, qg);
        let contributions = ubl_contributions(nu, irreps, k)?;
        let ubl = total_from_contributions(&contributions);
        let mut lbl = lower_bound(nu, irreps, k)?;
        if let Some(extra) = extra_lower {
            lbl = lbl.max(extra(k));
        }
        if lbl > tv + 1e-9 || tv > ubl + 1e-9 {
            return Err(Error::Numerical(format!(
                "sandwich violated at k={k}: lbl={lbl:e}, tv={tv:e}, ubl={ubl:e}"
            )));
        }
        rows.push(BoundRow {
            k,
            tv,
            l2,
            sep,
            ubl,
            lbl,
            contributions: contributions.into_iter().map(|(_, c)| c).collect(),
        });
    }
    Ok(BoundSeries { irrep_names, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::walks::kp_state;

    fn kp() -> (QuantumGroup, IrrepTable) {
        catalog::kac_paljutkin().unwrap()
    }

    #[test]
    fn haar_state_has_zero_upper_bound() {
        let (qg, table) = kp();
        let pi = State::haar(&qg);
        for k in [1usize, 3, 7] {
            assert!(upper_bound(&pi, &table, k).unwrap() <= 1e-9);
            assert!(lower_bound(&pi, &table, k).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn kp_periodic_walk_bound_is_sqrt7_over_2() {
        let (qg, table) = kp();
        let e2 = kp_state(&qg, [0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0).unwrap();
        for k in 1..=6 {
            let b = upper_bound(&e2, &table, k).unwrap();
            assert!((b - 7.0f64.sqrt() / 2.0).abs() <= 1e-12, "k={k}");
        }
    }

    #[test]
    fn kp_example1_bounds_match_closed_forms() {
        let (qg, table) = kp();
        let mu = [0.0, 0.25, 0.25, 0.25, 0.25];
        let nu = kp_state(&qg, mu, 0.0, 0.0, 0.0).unwrap();
        for k in 1..=12 {
            let generic = upper_bound(&nu, &table, k).unwrap();
            let closed =
                (1.5 * 0.25f64.powi(2 * k as i32) + 0.25 * 0.5f64.powi(2 * k as i32)).sqrt();
            assert!((generic - closed).abs() <= 1e-12, "k={k}");
            let (fam, terms) = kp_symmetric_upper(mu, 0.0, 0.0, k).unwrap();
            assert!((fam.value - closed).abs() <= 1e-12);
            // per-irrep agreement with the generic traces
            let generic_terms = ubl_contributions(&nu, &table, k).unwrap();
            for ((na, va), (nb, vb)) in terms.iter().zip(&generic_terms) {
                assert_eq!(na, nb);
                assert!((va - vb).abs() <= 1e-12, "{na}: {va} vs {vb}");
            }
            let lower = lower_bound(&nu, &table, k).unwrap();
            assert!((lower - 0.5 * 0.5f64.powi(k as i32)).abs() <= 1e-13);
        }
    }

    #[test]
    fn kp_symmetric_upper_reduces_to_periodic_case() {
        let (fam, _) = kp_symmetric_upper([0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 5).unwrap();
        assert!((fam.value - 7.0f64.sqrt() / 2.0).abs() <= 1e-12);
        assert!(kp_symmetric_upper([0.5, 0.0, 0.0, 0.0, 0.0], 0.0, 0.0, 1).is_err());
    }

    #[test]
    fn lemmasum_small_cases_and_residuals() {
        // N=1: both sides 1; N=2: C(2,1)+C(3,3)·2 = 4 = (α²−β²)/(2√3)
        let (r1, _) = lemmasum_check(1).unwrap();
        assert!(r1 <= 1e-15);
        let mut sum = 0.0;
        for w in 0..=2u64 {
            sum += binomial(2 + w, 2 * w + 1) * 2.0f64.powi(w as i32);
        }
        assert!((sum - 4.0).abs() < 1e-15);
        for n in 1..=20 {
            let (a, b) = lemmasum_check(n).unwrap();
            assert!(a <= 1e-9 && b <= 1e-9, "N={n}");
        }
        assert!(lemmasum_check(31).is_err());
    }

    #[test]
    fn path_oracle_agrees_both_ways() {
        let (qg, table) = kp();
        let first = kp_example2_path_oracle(&qg, &table, 1).unwrap();
        assert!((first.direct - 1.0 / (2.0 * 2.0f64.sqrt())).abs() <= 1e-12);
        for k in 1..=20 {
            let oracle = kp_example2_path_oracle(&qg, &table, k).unwrap();
            assert!(oracle.difference <= 1e-10, "k={k}: {oracle:?}");
            // closed α,β form of the lower bound ½|ν^{⋆k}(ρ₁₂)|
            let closed = kp_example2_exact_lower(k);
            assert!(
                (0.5 * oracle.direct.abs() - closed).abs() <= 1e-9,
                "k={k}"
            );
            assert!(kp_example2_lower(k).unwrap().value <= closed + 1e-12);
        }
    }

    #[test]
    fn ubl_equals_half_l2_of_power() {
        // the lemma's 2-norm step is an equality for complete tables
        let s3 = catalog::sekine(3).unwrap();
        let table = catalog::sekine_irreps(3).unwrap();
        let nu = crate::walks::sekine_walk_state(&s3, 3).unwrap();
        let pi = Functional::haar_state(&s3);
        for k in 1..=6 {
            let nk = crate::walks::convolution_power(&nu, k, &s3).unwrap();
            let l2 = l2_distance(nk.functional(), &pi, &s3);
            let ub = upper_bound(&nu, &table, k).unwrap();
            assert!((ub - 0.5 * l2).abs() <= 1e-8, "k={k}: {ub} vs {}", 0.5 * l2);
        }
    }

    #[test]
    fn sekine_closed_contributions_match_generic() {
        for n in [5usize, 7] {
            let qg = catalog::sekine(n).unwrap();
            let table = catalog::sekine_irreps(n).unwrap();
            let nu = crate::walks::sekine_walk_state(&qg, n).unwrap();
            for k in [1usize, 2, 5, 17, 50] {
                let generic = ubl_contributions(&nu, &table, k).unwrap();
                let closed = sekine_contributions(n, k).unwrap();
                assert_eq!(generic.len(), closed.len());
                for ((na, va), (nb, vb)) in generic.iter().zip(&closed) {
                    assert_eq!(na, nb);
                    assert!(
                        (va - vb).abs() <= 1e-8 * va.abs().max(1.0),
                        "n={n} k={k} {na}: generic {va:e} closed {vb:e}"
                    );
                }
            }
        }
    }

    #[test]
    fn zn_contributions_match_generic() {
        let n = 5usize;
        let t = catalog::cyclic(n).unwrap();
        let qg = catalog::function_algebra(&t).unwrap();
        let table = catalog::classical_irreps(&qg, &t, None).unwrap();
        let mut probs = vec![0.0; n];
        probs[1] = 0.5;
        probs[n - 1] = 0.5;
        let nu = State::classical(&qg, &probs).unwrap();
        for k in [1usize, 3, 10, 50] {
            let generic = ubl_contributions(&nu, &table, k).unwrap();
            for (alpha, (_, v)) in generic.iter().enumerate() {
                let closed = zn_contribution(n, alpha + 1, k);
                assert!((v - closed).abs() <= 1e-10, "alpha={} k={k}", alpha + 1);
            }
        }
    }

    #[test]
    fn incomplete_irrep_table_is_rejected() {
        let (qg, mut table) = kp();
        table.irreps.pop();
        let nu = State::haar(&qg);
        assert!(matches!(
            upper_bound(&nu, &table, 3),
            Err(Error::Validation(_))
        ));
        let (qg2, table2) = kp();
        let pi = State::haar(&qg2);
        assert!(matches!(
            upper_bound(&pi, &table2, 0),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn family_bound_hypotheses_are_enforced() {
        assert!(zn_upper(9, 1).is_err()); // k below n²/40
        assert!(zn_upper(8, 100).is_err()); // even n
        assert!(zn_lower(5, 10).is_err()); // n < 7
        assert!(cube_upper(1, 1.0).is_err());
        assert!(dual_sn_upper(3, 1.0).is_err());
        assert!(sekine_upper(5, 2.0).is_err()); // n < 7
        assert!(sekine_upper(7, 0.5).is_err()); // alpha below 1
        assert!(sekine_upper(7, 1.0).is_ok());
        assert!(sekine_lower(7, 3).is_ok());
        assert!(matches!(zn_upper(9, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn experiment_on_periodic_walk() {
        let (qg, table) = kp();
        let e2 = kp_state(&qg, [0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0).unwrap();
        let series = run_experiment(&qg, &table, &e2, 6).unwrap();
        assert_eq!(series.rows.len(), 6);
        for row in &series.rows {
            assert!((row.tv - 0.875).abs() <= 1e-10);
            assert!(row.lbl <= row.tv + 1e-9 && row.tv <= row.ubl + 1e-9);
            assert_eq!(row.contributions.len(), series.irrep_names.len());
        }
    }
}
