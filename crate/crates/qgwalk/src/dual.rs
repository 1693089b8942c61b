//! The dual quantum group, realised concretely in block form.
//!
//! The dual space carries the convolution product `(φ⋆ψ) = (φ⊗ψ)∘Δ`, the
//! involution `φ*(a) = conj(φ(S(a)*))`, and the (unnormalised) integral
//! `φ ↦ ε(ℱ⁻¹(φ))`. This module block-diagonalises that C*-algebra
//! numerically — find the center, split isotypic components with a generic
//! central element, build matrix units inside each simple summand — and
//! transports the dual comultiplication, counit and antipode into the new
//! basis. The result is an ordinary [`QuantumGroup`] that must pass the full
//! axiom suite before it is returned.

use nalgebra::{DMatrix, DVector};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::blockalg::{cr, AlgebraElement, BlockShape, HaarWeights, LinearMap, C64};
use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;

/// Seed for the generic elements drawn during block diagonalisation; fixed so
/// that `dual` is a deterministic function of its input.
pub const DEFAULT_SEED: u64 = 0x5eed_daa1;

const SPLIT_TOL: f64 = 1e-7;
const CHECK_TOL: f64 = 1e-8;

/// The dual quantum group together with the change of basis that produced it.
#[derive(Debug, Clone)]
pub struct DualStructure {
    pub group: QuantumGroup,
    /// dual-basis coordinates (values on the primal matrix units) → block coefficients
    pub to_block: DMatrix<C64>,
    /// block coefficients → dual-basis coordinates
    pub from_block: DMatrix<C64>,
}

impl DualStructure {
    /// Realise a functional (given by its values on the primal canonical
    /// basis) as an element of the dual block algebra.
    pub fn element_of_dual(&self, dual_coords: &[C64]) -> AlgebraElement {
        let v = &self.to_block * DVector::from_column_slice(dual_coords);
        AlgebraElement::from_coeffs(&self.group.shape, v.as_slice()).expect("dims match")
    }

    pub fn dual_coords_of(&self, a: &AlgebraElement) -> Vec<C64> {
        let v = &self.from_block * DVector::from_column_slice(&a.coeffs());
        v.iter().copied().collect()
    }
}

/// Convolution in dual coordinates: `(E^s ⋆ E^t)_r = Δ[(s,t), r]`.
struct DualAlgebra {
    dim: usize,
    /// per output index r, the sparse list of ((s,t), c) with Δ(E_r) = Σ c·E_s⊗E_t
    delta_cols: Vec<Vec<((usize, usize), C64)>>,
    star_perm: Vec<usize>,
    antipode: DMatrix<C64>,
    unit: Vec<C64>,
    /// normalised dual Haar state in dual coordinates
    haar: Vec<C64>,
}

impl DualAlgebra {
    fn new(qg: &QuantumGroup) -> Self {
        let dim = qg.dim();
        let delta_cols = qg
            .delta
            .sparse_columns()
            .into_iter()
            .map(|col| {
                col.into_iter()
                    .map(|(idx, v)| ((idx / dim, idx % dim), v))
                    .collect()
            })
            .collect();
        // unnormalised integral: Î(E^r) = ε(ℱ⁻¹(E^r)) = counit[r*] / w_block(r)
        let mut haar = vec![cr(0.0); dim];
        for r in 0..dim {
            let (b, _, _) = qg.shape.locate(r);
            let w = qg.haar.weights[b];
            haar[r] = qg.counit[qg.shape.adjoint_index(r)] / cr(w) / cr(dim as f64);
        }
        Self {
            dim,
            delta_cols,
            star_perm: (0..dim).map(|i| qg.shape.adjoint_index(i)).collect(),
            antipode: qg.antipode.matrix.clone(),
            unit: qg.counit.clone(),
            haar,
        }
    }

    fn conv(&self, a: &[C64], b: &[C64]) -> Vec<C64> {
        let mut out = vec![cr(0.0); self.dim];
        for (r, col) in self.delta_cols.iter().enumerate() {
            let mut acc = cr(0.0);
            for &((s, t), c) in col {
                acc += a[s] * b[t] * c;
            }
            out[r] = acc;
        }
        out
    }

    /// `φ*(E_r) = Σ_q S[q,r] · conj(φ(E_q*))`
    fn star(&self, a: &[C64]) -> Vec<C64> {
        let mut out = vec![cr(0.0); self.dim];
        for r in 0..self.dim {
            let mut acc = cr(0.0);
            for q in 0..self.dim {
                let s = self.antipode[(q, r)];
                if s.norm_sqr() != 0.0 {
                    acc += s * a[self.star_perm[q]].conj();
                }
            }
            out[r] = acc;
        }
        out
    }

    fn haar_of(&self, a: &[C64]) -> C64 {
        self.haar.iter().zip(a).map(|(&h, &x)| h * x).sum()
    }

    /// Matrix of left multiplication by `z`.
    fn left_mul(&self, z: &[C64]) -> DMatrix<C64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for t in 0..self.dim {
            let mut e = vec![cr(0.0); self.dim];
            e[t] = cr(1.0);
            let col = self.conv(z, &e);
            for r in 0..self.dim {
                m[(r, t)] = col[r];
            }
        }
        m
    }
}

fn norm_inf(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Cluster sorted real values at relative gap `SPLIT_TOL`; returns index groups.
fn cluster(vals: &[f64]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
    let spread = (vals[order[vals.len() - 1]] - vals[order[0]]).max(1.0);
    let mut groups: Vec<Vec<usize>> = vec![vec![order[0]]];
    for win in order.windows(2) {
        if vals[win[1]] - vals[win[0]] > SPLIT_TOL * spread {
            groups.push(Vec::new());
        }
        groups.last_mut().unwrap().push(win[1]);
    }
    groups
}

fn random_vec(dim: usize, rng: &mut impl Rng) -> Vec<C64> {
    (0..dim)
        .map(|_| cr(rng.gen_range(-1.0..1.0)) + cr(rng.gen_range(-1.0..1.0)) * C64::i())
        .collect()
}

struct Gns {
    /// `v ↦ L^H v`, taking algebra coefficients to orthonormal coordinates
    to_onb: DMatrix<C64>,
    from_onb: DMatrix<C64>,
}

impl Gns {
    fn new(alg: &DualAlgebra) -> Result<Self> {
        let dim = alg.dim;
        let mut gram = DMatrix::zeros(dim, dim);
        for s in 0..dim {
            let mut es = vec![cr(0.0); dim];
            es[s] = cr(1.0);
            let star_s = alg.star(&es);
            for t in 0..dim {
                let mut et = vec![cr(0.0); dim];
                et[t] = cr(1.0);
                gram[(s, t)] = alg.haar_of(&alg.conv(&star_s, &et));
            }
        }
        let gram = (gram.adjoint() + &gram).scale(0.5);
        let chol = nalgebra::Cholesky::new(gram).ok_or_else(|| {
            Error::Numerical("dual Haar Gram matrix is not positive definite".into())
        })?;
        let l = chol.l();
        let to_onb = l.adjoint();
        let from_onb = to_onb.clone().try_inverse().ok_or_else(|| {
            Error::Numerical("Cholesky factor not invertible".into())
        })?;
        Ok(Self { to_onb, from_onb })
    }

    /// Conjugate a left-multiplication matrix into orthonormal coordinates and
    /// symmetrise (it is Hermitian there whenever the element is self-adjoint).
    fn hermitian_rep(&self, lmat: &DMatrix<C64>) -> DMatrix<C64> {
        let m = &self.to_onb * lmat * &self.from_onb;
        (m.adjoint() + &m).scale(0.5)
    }
}

/// Central projections of the convolution algebra, found from a generic
/// self-adjoint central element.
fn central_idempotents(
    alg: &DualAlgebra,
    gns: &Gns,
    rng: &mut impl Rng,
) -> Result<Vec<Vec<C64>>> {
    let dim = alg.dim;

    // center: z with z⋆E_t = E_t⋆z for all t, i.e. kernel of the commutator map
    let mut k: DMatrix<C64> = DMatrix::zeros(dim * dim, dim);
    for (r, col) in alg.delta_cols.iter().enumerate() {
        for &((s, t), c) in col {
            k[(t * dim + r, s)] += c;
            k[(s * dim + r, t)] -= c;
        }
    }
    let ktk = k.adjoint() * &k;
    let ktk = (ktk.adjoint() + &ktk).scale(0.5);
    let eig = nalgebra::SymmetricEigen::new(ktk);
    let evals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    let lmax = evals.iter().fold(1.0f64, |m, &l| m.max(l.abs()));
    let kernel: Vec<usize> = (0..dim)
        .filter(|&i| evals[i].abs() <= 1e-12 * lmax)
        .collect();
    let m = kernel.len();
    if m == 0 {
        return Err(Error::Numerical("convolution algebra has empty center".into()));
    }

    for _attempt in 0..8 {
        // generic self-adjoint central element; complex coefficients so the
        // symmetrised z still separates conjugate blocks
        let mut z = vec![cr(0.0); dim];
        for &ki in &kernel {
            let t = crate::blockalg::c(rng.gen_range(0.25..1.0), rng.gen_range(0.25..1.0));
            for r in 0..dim {
                z[r] += t * eig.eigenvectors[(r, ki)];
            }
        }
        let zs = alg.star(&z);
        let z: Vec<C64> = z.iter().zip(&zs).map(|(&a, &b)| (a + b) * cr(0.5)).collect();
        if norm_inf(&z) < 1e-8 {
            continue;
        }

        let lz = gns.hermitian_rep(&alg.left_mul(&z));
        let eigz = nalgebra::SymmetricEigen::new(lz);
        let vals: Vec<f64> = eigz.eigenvalues.iter().copied().collect();
        let groups = cluster(&vals);
        if groups.len() != m {
            continue; // eigenvalue collision, redraw
        }
        if groups.iter().any(|g| {
            let n = (g.len() as f64).sqrt().round() as usize;
            n * n != g.len()
        }) {
            continue;
        }

        // p_i = spectral projection of z applied to the unit of the dual
        let unit_onb = &gns.to_onb * DVector::from_column_slice(&alg.unit);
        let mut idempotents = Vec::with_capacity(m);
        let mut ok = true;
        for g in &groups {
            let mut proj = DVector::zeros(dim);
            for &col in g {
                let q = eigz.eigenvectors.column(col);
                let coef: C64 = q.iter().zip(unit_onb.iter()).map(|(a, b)| a.conj() * b).sum();
                proj += q * coef;
            }
            let p = &gns.from_onb * proj;
            let p: Vec<C64> = p.iter().copied().collect();
            let pp = alg.conv(&p, &p);
            let idem_res = pp
                .iter()
                .zip(&p)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            let star_res = alg
                .star(&p)
                .iter()
                .zip(&p)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if idem_res > CHECK_TOL || star_res > CHECK_TOL {
                ok = false;
                break;
            }
            idempotents.push(p);
        }
        if !ok {
            continue;
        }
        let mut total = vec![cr(0.0); dim];
        for p in &idempotents {
            for (t, &v) in total.iter_mut().zip(p.iter()) {
                *t += v;
            }
        }
        let sum_res = total
            .iter()
            .zip(&alg.unit)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        if sum_res > CHECK_TOL {
            continue;
        }
        return Ok(idempotents);
    }
    Err(Error::Numerical(
        "central idempotent search failed after 8 attempts".into(),
    ))
}

/// Matrix units of the simple summand with unit `p`, as dual-coordinate vectors.
fn matrix_units_of_block(
    alg: &DualAlgebra,
    gns: &Gns,
    p: &[C64],
    rng: &mut impl Rng,
) -> Result<Vec<Vec<C64>>> {
    let dim = alg.dim;
    // orthonormal basis of the ideal p⋆A in GNS coordinates
    let mut ideal_cols: Vec<DVector<C64>> = Vec::new();
    for t in 0..dim {
        let mut e = vec![cr(0.0); dim];
        e[t] = cr(1.0);
        let v = alg.conv(p, &e);
        let mut w = &gns.to_onb * DVector::from_column_slice(&v);
        for b in &ideal_cols {
            let coef: C64 = b.iter().zip(w.iter()).map(|(a, x)| a.conj() * x).sum();
            w -= b * coef;
        }
        let n = w.norm();
        if n > 1e-8 {
            ideal_cols.push(w / cr(n));
        }
    }
    let k = ideal_cols.len();
    let n = (k as f64).sqrt().round() as usize;
    if n * n != k {
        return Err(Error::Numerical(format!(
            "ideal dimension {k} is not a perfect square"
        )));
    }
    if n == 1 {
        return Ok(vec![p.to_vec()]);
    }
    let basis = DMatrix::from_columns(&ideal_cols);

    'attempt: for _ in 0..8 {
        // generic self-adjoint element of the summand
        let r = random_vec(dim, rng);
        let rs = alg.star(&r);
        let h: Vec<C64> = r.iter().zip(&rs).map(|(&a, &b)| (a + b) * cr(0.5)).collect();
        let h = alg.conv(p, &alg.conv(&h, p));

        let lh = gns.hermitian_rep(&alg.left_mul(&h));
        let local = (basis.adjoint() * &lh * &basis).scale(1.0);
        let local = (local.adjoint() + &local).scale(0.5);
        let eig = nalgebra::SymmetricEigen::new(local);
        let vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        let mut groups = cluster(&vals);
        if groups.len() != n || groups.iter().any(|g| g.len() != n) {
            continue;
        }
        // deterministic order: descending eigenvalue per cluster
        groups.sort_by(|a, b| {
            vals[b[0]]
                .partial_cmp(&vals[a[0]])
                .unwrap()
        });

        let p_onb = &gns.to_onb * DVector::from_column_slice(p);
        let p_local = basis.adjoint() * p_onb;
        let mut diag_units: Vec<Vec<C64>> = Vec::with_capacity(n);
        for g in &groups {
            let mut proj = DVector::zeros(k);
            for &col in g {
                let q = eig.eigenvectors.column(col);
                let coef: C64 = q.iter().zip(p_local.iter()).map(|(a, b)| a.conj() * b).sum();
                proj += q * coef;
            }
            let f = &gns.from_onb * (&basis * proj);
            let f: Vec<C64> = f.iter().copied().collect();
            let ff = alg.conv(&f, &f);
            if ff.iter().zip(&f).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) > CHECK_TOL {
                continue 'attempt;
            }
            diag_units.push(f);
        }

        // partial isometries f₀ → f_j
        let mut first_row: Vec<Vec<C64>> = vec![diag_units[0].clone()];
        for fj in diag_units.iter().skip(1) {
            let mut found = None;
            for _ in 0..8 {
                let r = random_vec(dim, rng);
                let w = alg.conv(&diag_units[0], &alg.conv(&r, fj));
                let gamma = alg.haar_of(&alg.conv(&w, &alg.star(&w)));
                let denom = alg.haar_of(&diag_units[0]);
                let ratio = gamma / denom;
                if ratio.re > 1e-10 {
                    let scale = cr(1.0 / ratio.re.sqrt());
                    found = Some(w.iter().map(|&x| x * scale).collect::<Vec<C64>>());
                    break;
                }
            }
            match found {
                Some(w) => first_row.push(w),
                None => continue 'attempt,
            }
        }

        // e_{jk} = e_{0j}* ⋆ e_{0k}
        let mut units = vec![vec![cr(0.0); dim]; n * n];
        for j in 0..n {
            let ej0 = alg.star(&first_row[j]);
            for l in 0..n {
                units[j * n + l] = if j == 0 {
                    first_row[l].clone()
                } else {
                    alg.conv(&ej0, &first_row[l])
                };
            }
        }

        // matrix-unit relations
        let mut res = 0.0f64;
        for j in 0..n {
            for l in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        let prod = alg.conv(&units[j * n + l], &units[a * n + b]);
                        let expect = if l == a {
                            units[j * n + b].clone()
                        } else {
                            vec![cr(0.0); dim]
                        };
                        res = res.max(
                            prod.iter()
                                .zip(&expect)
                                .map(|(x, y)| (x - y).norm())
                                .fold(0.0, f64::max),
                        );
                    }
                }
            }
        }
        let mut diag_sum = vec![cr(0.0); dim];
        for j in 0..n {
            for (t, &v) in diag_sum.iter_mut().zip(units[j * n + j].iter()) {
                *t += v;
            }
        }
        res = res.max(
            diag_sum
                .iter()
                .zip(p)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        );
        if res > CHECK_TOL {
            continue;
        }
        return Ok(units);
    }
    Err(Error::Numerical(
        "matrix-unit construction failed after 8 attempts".into(),
    ))
}

/// Block-diagonalise the dual of `qg` and transport its Hopf structure.
pub fn dual_structure_seeded(qg: &QuantumGroup, seed: u64) -> Result<DualStructure> {
    qg.validate_structure()?;
    let dim = qg.dim();
    let alg = DualAlgebra::new(qg);
    let gns = Gns::new(&alg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let idempotents = central_idempotents(&alg, &gns, &mut rng)?;

    // one block per idempotent: compute its matrix units and Haar weight
    struct Block {
        n: usize,
        units: Vec<Vec<C64>>,
        weight: f64,
        counit_mass: f64,
    }
    let mut blocks = Vec::with_capacity(idempotents.len());
    for p in &idempotents {
        let units = matrix_units_of_block(&alg, &gns, p, &mut rng)?;
        let n = (units.len() as f64).sqrt().round() as usize;
        let weight = alg.haar_of(&units[0]).re;
        if weight <= 0.0 {
            return Err(Error::Numerical("non-positive dual Haar weight".into()));
        }
        // the dual counit ε̂(φ)=φ(𝟙) is a character; it lives on one 1-dim block
        let one = qg.unit().coeffs();
        let counit_mass = p.iter().zip(&one).map(|(&a, &b)| a * b).sum::<C64>().norm();
        blocks.push(Block {
            n,
            units,
            weight,
            counit_mass,
        });
    }

    // counit block first, the rest ordered by (n, weight) for determinism
    blocks.sort_by(|a, b| {
        let ka = (
            (a.counit_mass - 1.0).abs() > 0.5 || a.n != 1,
            a.n,
            ordered(b.weight, a.weight),
        );
        let kb = (
            (b.counit_mass - 1.0).abs() > 0.5 || b.n != 1,
            b.n,
            ordered(a.weight, b.weight),
        );
        ka.partial_cmp(&kb).unwrap()
    });

    let shape = BlockShape::new(blocks.iter().map(|b| b.n).collect())?;
    let weights: Vec<f64> = blocks.iter().map(|b| b.weight).collect();
    let haar = HaarWeights::new(shape.clone(), weights).map_err(|e| {
        Error::Numerical(format!("dual Haar weights fail normalisation: {e}"))
    })?;

    // change of basis: columns are the matrix units in dual coordinates
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(dim);
    for b in &blocks {
        for u in &b.units {
            cols.push(u.clone());
        }
    }
    let from_block = DMatrix::from_fn(dim, dim, |i, j| cols[j][i]);
    let to_block = from_block.clone().try_inverse().ok_or_else(|| {
        Error::Numerical("matrix units do not span the dual".into())
    })?;

    // dual comultiplication in dual coordinates: Δ̂(E^k) = Σ_{E_s E_t = E_k} E^s⊗E^t
    let mut delta_hat_cols: Vec<Vec<((usize, usize), C64)>> = vec![Vec::new(); dim];
    for s in 0..dim {
        let (blk, p, q) = qg.shape.locate(s);
        let nblk = qg.shape.dims()[blk];
        for r2 in 0..nblk {
            let t = qg.shape.index_of(blk, q, r2);
            let k = qg.shape.index_of(blk, p, r2);
            delta_hat_cols[k].push(((s, t), cr(1.0)));
        }
    }
    // transported: Δ_new(col c) = (Uinv ⊗ Uinv) Δ̂(Σ_r U[r,c] E^r)
    let mut delta_new = DMatrix::zeros(dim * dim, dim);
    for cidx in 0..dim {
        let mut tensor = DMatrix::<C64>::zeros(dim, dim);
        for r in 0..dim {
            let f = from_block[(r, cidx)];
            if f.norm_sqr() == 0.0 {
                continue;
            }
            for &((s, t), c) in &delta_hat_cols[r] {
                tensor[(s, t)] += f * c;
            }
        }
        let transported = &to_block * tensor * to_block.transpose();
        for s in 0..dim {
            for t in 0..dim {
                delta_new[(s * dim + t, cidx)] = transported[(s, t)];
            }
        }
    }

    // counit: ε̂(E^r) = 𝟙_r; antipode: Ŝ = Sᵀ in dual coordinates
    let one = qg.unit().coeffs();
    let counit: Vec<C64> = (0..dim)
        .map(|cidx| {
            (0..dim)
                .map(|r| from_block[(r, cidx)] * one[r])
                .sum::<C64>()
        })
        .collect();
    let antipode = LinearMap::new(&to_block * qg.antipode.matrix.transpose() * &from_block);

    let group = QuantumGroup {
        label: format!("dual({})", qg.label),
        shape,
        delta: LinearMap::new(delta_new),
        counit,
        antipode,
        haar,
    };
    let report = group.verify()?;
    if !report.is_quantum_group() {
        return Err(Error::Numerical(format!(
            "transported dual fails the axiom suite: max residual {:e}",
            report.max_residual()
        )));
    }

    Ok(DualStructure {
        group,
        to_block,
        from_block,
    })
}

fn ordered(a: f64, b: f64) -> std::cmp::Ordering {
    a.partial_cmp(&b).unwrap_or(std::cmp::Ordering::Equal)
}

/// Dual of a verified quantum group (deterministic seed).
pub fn dual(qg: &QuantumGroup) -> Result<QuantumGroup> {
    Ok(dual_structure_seeded(qg, DEFAULT_SEED)?.group)
}

/// Group-like elements (`Δx = x⊗x`, `ε(x)=1`), derived from the
/// one-dimensional blocks of the dual rather than solved as a quadratic
/// system: the coordinate functional of a scalar dual block is an algebra
/// character of the convolution algebra, and its representing element is
/// group-like.
pub fn group_like_elements(qg: &QuantumGroup) -> Result<Vec<AlgebraElement>> {
    let ds = dual_structure_seeded(qg, DEFAULT_SEED)?;
    let dim = qg.dim();
    let mut out = Vec::new();
    for (blk, &n) in ds.group.shape.dims().iter().enumerate() {
        if n != 1 {
            continue;
        }
        let row = ds.group.shape.index_of(blk, 0, 0);
        let coeffs: Vec<C64> = (0..dim).map(|r| ds.to_block[(row, r)]).collect();
        let x = AlgebraElement::from_coeffs(&qg.shape, &coeffs)?;
        // sanity: group-like to working precision
        let lhs = qg.delta.apply(&coeffs);
        let mut res = 0.0f64;
        for s in 0..dim {
            for t in 0..dim {
                res = res.max((lhs[s * dim + t] - coeffs[s] * coeffs[t]).norm());
            }
        }
        if res > CHECK_TOL {
            return Err(Error::Numerical(format!(
                "dual character fails the group-like identity: {res:e}"
            )));
        }
        out.push(x);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dual_of_abelian_function_algebra_is_scalar() {
        let z5 = catalog::function_algebra(&catalog::cyclic(5).unwrap()).unwrap();
        let d = dual(&z5).unwrap();
        assert_eq!(d.shape.sorted_dims(), vec![1; 5]);
        let report = d.verify().unwrap();
        assert!(report.is_quantum_group());
        assert!(report.commutative && report.cocommutative);
    }

    #[test]
    fn dual_of_nonabelian_function_algebra() {
        let s3 = catalog::function_algebra(&catalog::symmetric(3).unwrap()).unwrap();
        let d = dual(&s3).unwrap();
        assert_eq!(d.shape.sorted_dims(), vec![1, 1, 2]);
        let report = d.verify().unwrap();
        assert!(!report.commutative && report.cocommutative);
    }

    #[test]
    fn double_dual_preserves_block_multiset() {
        let z5 = catalog::function_algebra(&catalog::cyclic(5).unwrap()).unwrap();
        let cs3 = catalog::group_algebra(&catalog::symmetric(3).unwrap())
            .unwrap()
            .algebra;
        let (kp, _) = catalog::kac_paljutkin().unwrap();
        for qg in [z5, cs3, kp] {
            let dd = dual(&dual(&qg).unwrap()).unwrap();
            assert_eq!(
                dd.shape.sorted_dims(),
                qg.shape.sorted_dims(),
                "{}",
                qg.label
            );
            assert!(dd.verify().unwrap().is_quantum_group());
        }
    }

    #[test]
    fn second_sekine_group_is_a_dual_group() {
        // commutative dual with eight scalar blocks, and eight group-likes
        // forming the dihedral group of order eight (six involutions)
        let s2 = catalog::sekine(2).unwrap();
        let d = dual(&s2).unwrap();
        assert_eq!(d.shape.dims(), &[1usize; 8][..]);
        assert!(d.verify().unwrap().commutative);

        let likes = group_like_elements(&s2).unwrap();
        assert_eq!(likes.len(), 8);
        let one = AlgebraElement::unit(&s2.shape);
        let involutions = likes
            .iter()
            .filter(|x| {
                x.mul(x)
                    .map(|sq| sq.sub(&one).map(|d| d.is_zero(1e-8)).unwrap_or(false))
                    .unwrap_or(false)
            })
            .count();
        assert_eq!(involutions, 6);
    }

    #[test]
    fn kac_paljutkin_has_four_group_likes() {
        // the dual of KP has shape (1,1,1,1,2): four characters
        let (kp, _) = catalog::kac_paljutkin().unwrap();
        let d = dual(&kp).unwrap();
        assert_eq!(d.shape.sorted_dims(), vec![1, 1, 1, 1, 2]);
        let likes = group_like_elements(&kp).unwrap();
        assert_eq!(likes.len(), 4);
    }
}
