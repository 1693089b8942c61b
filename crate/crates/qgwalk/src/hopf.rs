//! Quantum-group descriptors and numerical verification of the Hopf axioms.
//!
//! A [`QuantumGroup`] packages a block shape with the three structure maps
//! (comultiplication, counit, antipode) and the Haar weights. Nothing is
//! trusted: [`verify`] evaluates every defining identity on the canonical
//! basis and reports the max-norm residual of each, so a descriptor is
//! accepted as a quantum group only when all residuals sit at rounding level.
//!
//! The same engine runs on a raw [`HopfDescriptor`], whose multiplication and
//! involution are given by structure constants instead of a block shape. That
//! carrier exists for Hopf algebras that are not C*-algebras (the antipode
//! square test fixture) and for transported duals mid-construction.

use std::collections::HashMap;

use serde::Serialize;

use crate::blockalg::{
    cr, max_abs, max_abs_diff, AlgebraElement, BlockShape, HaarWeights, LinearMap, C64,
};
use crate::error::{Error, Result};

/// Residual tolerance below which a descriptor counts as a quantum group.
pub const AXIOM_TOL: f64 = 1e-9;

/// Block-shaped quantum-group descriptor.
#[derive(Debug, Clone)]
pub struct QuantumGroup {
    pub label: String,
    pub shape: BlockShape,
    /// Comultiplication `Δ: A → A⊗A`; rows indexed left-factor-major.
    pub delta: LinearMap,
    /// Counit coefficients `ε(E_r)`.
    pub counit: Vec<C64>,
    /// Antipode `S: A → A`.
    pub antipode: LinearMap,
    pub haar: HaarWeights,
}

impl QuantumGroup {
    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    /// Structural sanity: all map dimensions agree with the shape.
    pub fn validate_structure(&self) -> Result<()> {
        let dim = self.dim();
        if self.delta.source_dim != dim || self.delta.target_dim != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "delta is {}→{}, expected {}→{}",
                self.delta.source_dim,
                self.delta.target_dim,
                dim,
                dim * dim
            )));
        }
        if self.counit.len() != dim {
            return Err(Error::ShapeMismatch("counit length != dim".into()));
        }
        if self.antipode.source_dim != dim || self.antipode.target_dim != dim {
            return Err(Error::ShapeMismatch("antipode is not dim×dim".into()));
        }
        if self.haar.shape != self.shape {
            return Err(Error::ShapeMismatch("haar weights on wrong shape".into()));
        }
        Ok(())
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::unit(&self.shape)
    }

    pub fn descriptor(&self) -> HopfDescriptor {
        let dim = self.dim();
        let mut unit_products = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            let (b, p, q) = self.shape.locate(i);
            let n = self.shape.dims()[b];
            for r in 0..n {
                // E_{pq}·E_{qr} = E_{pr} within a block, zero otherwise
                let j = self.shape.index_of(b, q, r);
                unit_products[i * dim + j].push((self.shape.index_of(b, p, r), cr(1.0)));
            }
        }
        HopfDescriptor {
            label: self.label.clone(),
            dim,
            unit_products,
            star_perm: (0..dim).map(|i| self.shape.adjoint_index(i)).collect(),
            star_phase: vec![cr(1.0); dim],
            unit_vec: self.unit().coeffs(),
            delta: self.delta.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            integral: self.haar.as_functional_coeffs(),
        }
    }

    /// Full axiom report for this descriptor.
    pub fn verify(&self) -> Result<AxiomReport> {
        self.validate_structure()?;
        Ok(verify_descriptor(&self.descriptor()))
    }
}

/// Basis-level Hopf data: multiplication and involution as structure constants.
#[derive(Debug, Clone)]
pub struct HopfDescriptor {
    pub label: String,
    pub dim: usize,
    /// `E_i · E_j = Σ (k, c)`, flattened at `i*dim + j`.
    pub unit_products: Vec<Vec<(usize, C64)>>,
    /// `(Σ cᵢ E_i)* = Σ conj(cᵢ)·phaseᵢ·E_{permᵢ}`.
    pub star_perm: Vec<usize>,
    pub star_phase: Vec<C64>,
    pub unit_vec: Vec<C64>,
    pub delta: LinearMap,
    pub counit: Vec<C64>,
    pub antipode: LinearMap,
    /// Functional tested for invariance and traciality (the Haar candidate).
    pub integral: Vec<C64>,
}

impl HopfDescriptor {
    pub fn mul_coeffs(&self, a: &[C64], b: &[C64]) -> Vec<C64> {
        let mut out = vec![cr(0.0); self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x.norm_sqr() == 0.0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y.norm_sqr() == 0.0 {
                    continue;
                }
                for &(k, c) in &self.unit_products[i * self.dim + j] {
                    out[k] += x * y * c;
                }
            }
        }
        out
    }

    pub fn star_coeffs(&self, a: &[C64]) -> Vec<C64> {
        let mut out = vec![cr(0.0); self.dim];
        for (i, &x) in a.iter().enumerate() {
            out[self.star_perm[i]] += x.conj() * self.star_phase[i];
        }
        out
    }

    fn pair(&self, phi: &[C64], x: &[C64]) -> C64 {
        phi.iter().zip(x).map(|(&f, &v)| f * v).sum()
    }
}

/// Residuals of every Hopf-algebra identity, max-norm over the canonical basis.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub label: String,
    pub coassociativity: f64,
    pub counit_left: f64,
    pub counit_right: f64,
    pub antipode_left: f64,
    pub antipode_right: f64,
    pub delta_homomorphism: f64,
    pub delta_star: f64,
    pub haar_left_invariance: f64,
    pub haar_right_invariance: f64,
    pub haar_traciality: f64,
    pub kac: f64,
    pub commutative_residual: f64,
    pub cocommutative_residual: f64,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl AxiomReport {
    /// Largest residual among the defining axioms (classification residuals excluded).
    pub fn max_residual(&self) -> f64 {
        [
            self.coassociativity,
            self.counit_left,
            self.counit_right,
            self.antipode_left,
            self.antipode_right,
            self.delta_homomorphism,
            self.delta_star,
            self.haar_left_invariance,
            self.haar_right_invariance,
            self.haar_traciality,
            self.kac,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn is_quantum_group(&self) -> bool {
        self.max_residual() <= AXIOM_TOL
    }
}

type SparseCol = Vec<(usize, C64)>;

fn sparse_pair_cols(map: &LinearMap, dim: usize) -> Vec<Vec<((usize, usize), C64)>> {
    map.sparse_columns()
        .into_iter()
        .map(|col| {
            col.into_iter()
                .map(|(idx, v)| ((idx / dim, idx % dim), v))
                .collect()
        })
        .collect()
}

/// Evaluate every axiom on the canonical basis and collect the residuals.
pub fn verify_descriptor(d: &HopfDescriptor) -> AxiomReport {
    let dim = d.dim;
    let delta_cols = sparse_pair_cols(&d.delta, dim);
    let antipode_cols: Vec<SparseCol> = d.antipode.sparse_columns();

    // coassociativity: (Δ⊗I)Δ = (I⊗Δ)Δ, accumulated sparsely per column
    let mut coassociativity = 0.0f64;
    {
        let mut lhs: HashMap<(usize, usize, usize), C64> = HashMap::new();
        let mut rhs: HashMap<(usize, usize, usize), C64> = HashMap::new();
        for col in &delta_cols {
            lhs.clear();
            rhs.clear();
            for &((s, t), c) in col {
                for &((u, v), c2) in &delta_cols[s] {
                    *lhs.entry((u, v, t)).or_insert(cr(0.0)) += c * c2;
                }
                for &((u, v), c2) in &delta_cols[t] {
                    *rhs.entry((s, u, v)).or_insert(cr(0.0)) += c * c2;
                }
            }
            for (k, v) in &lhs {
                let w = rhs.get(k).copied().unwrap_or(cr(0.0));
                coassociativity = coassociativity.max((v - w).norm());
            }
            for (k, w) in &rhs {
                if !lhs.contains_key(k) {
                    coassociativity = coassociativity.max(w.norm());
                }
            }
        }
    }

    // counit property: (ε⊗I)Δ = I = (I⊗ε)Δ
    let mut counit_left = 0.0f64;
    let mut counit_right = 0.0f64;
    for (r, col) in delta_cols.iter().enumerate() {
        let mut left = vec![cr(0.0); dim];
        let mut right = vec![cr(0.0); dim];
        for &((s, t), c) in col {
            left[t] += d.counit[s] * c;
            right[s] += d.counit[t] * c;
        }
        left[r] -= cr(1.0);
        right[r] -= cr(1.0);
        counit_left = counit_left.max(max_abs(&left));
        counit_right = counit_right.max(max_abs(&right));
    }

    // antipode property: M(S⊗I)Δ = η∘ε = M(I⊗S)Δ
    let mut antipode_left = 0.0f64;
    let mut antipode_right = 0.0f64;
    for (r, col) in delta_cols.iter().enumerate() {
        let mut left = vec![cr(0.0); dim];
        let mut right = vec![cr(0.0); dim];
        for &((s, t), c) in col {
            for &(s2, cs) in &antipode_cols[s] {
                for &(k, cm) in &d.unit_products[s2 * dim + t] {
                    left[k] += c * cs * cm;
                }
            }
            for &(t2, ct) in &antipode_cols[t] {
                for &(k, cm) in &d.unit_products[s * dim + t2] {
                    right[k] += c * ct * cm;
                }
            }
        }
        for k in 0..dim {
            left[k] -= d.counit[r] * d.unit_vec[k];
            right[k] -= d.counit[r] * d.unit_vec[k];
        }
        antipode_left = antipode_left.max(max_abs(&left));
        antipode_right = antipode_right.max(max_abs(&right));
    }

    // Δ and ε are unital algebra morphisms
    let mut delta_homomorphism = 0.0f64;
    {
        // Δ(1) = 1⊗1 and ε(1) = 1
        let delta_unit = d.delta.apply(&d.unit_vec);
        let mut unit_tensor = vec![cr(0.0); dim * dim];
        for s in 0..dim {
            for t in 0..dim {
                unit_tensor[s * dim + t] = d.unit_vec[s] * d.unit_vec[t];
            }
        }
        delta_homomorphism = delta_homomorphism.max(max_abs_diff(&delta_unit, &unit_tensor));
        let eps_unit = d.pair(&d.counit, &d.unit_vec);
        delta_homomorphism = delta_homomorphism.max((eps_unit - cr(1.0)).norm());

        // on basis pairs: Δ(E_i E_j) = Δ(E_i)Δ(E_j), ε(E_i E_j) = ε(E_i)ε(E_j)
        let mut acc: HashMap<(usize, usize), C64> = HashMap::new();
        for i in 0..dim {
            for j in 0..dim {
                acc.clear();
                for &((s, t), c1) in &delta_cols[i] {
                    for &((u, v), c2) in &delta_cols[j] {
                        let c12 = c1 * c2;
                        for &(su, csu) in &d.unit_products[s * dim + u] {
                            for &(tv, ctv) in &d.unit_products[t * dim + v] {
                                *acc.entry((su, tv)).or_insert(cr(0.0)) += c12 * csu * ctv;
                            }
                        }
                    }
                }
                let mut eps_prod = cr(0.0);
                for &(k, cm) in &d.unit_products[i * dim + j] {
                    eps_prod += cm * d.counit[k];
                    for &((s, t), c) in &delta_cols[k] {
                        *acc.entry((s, t)).or_insert(cr(0.0)) -= cm * c;
                    }
                }
                for v in acc.values() {
                    delta_homomorphism = delta_homomorphism.max(v.norm());
                }
                delta_homomorphism =
                    delta_homomorphism.max((eps_prod - d.counit[i] * d.counit[j]).norm());
            }
        }
    }

    // Δ(a*) = Δ(a)* with (x⊗y)* = x*⊗y*
    let mut delta_star = 0.0f64;
    {
        let mut acc: HashMap<(usize, usize), C64> = HashMap::new();
        for r in 0..dim {
            acc.clear();
            // Δ(E_r*): E_r* = phase_r · E_{perm r}
            let pr = d.star_perm[r];
            for &((s, t), c) in &delta_cols[pr] {
                *acc.entry((s, t)).or_insert(cr(0.0)) += d.star_phase[r] * c;
            }
            // minus Δ(E_r)* term by term
            for &((s, t), c) in &delta_cols[r] {
                let key = (d.star_perm[s], d.star_perm[t]);
                *acc.entry(key).or_insert(cr(0.0)) -=
                    c.conj() * d.star_phase[s] * d.star_phase[t];
            }
            for v in acc.values() {
                delta_star = delta_star.max(v.norm());
            }
        }
    }

    // Haar invariance: (I⊗h)Δ(f) = h(f)·1 = (h⊗I)Δ(f); plus normalisation h(1)=1
    let normalisation = (d.pair(&d.integral, &d.unit_vec) - cr(1.0)).norm();
    let mut haar_left_invariance = normalisation;
    let mut haar_right_invariance = normalisation;
    for (r, col) in delta_cols.iter().enumerate() {
        let mut left = vec![cr(0.0); dim];
        let mut right = vec![cr(0.0); dim];
        for &((s, t), c) in col {
            left[s] += d.integral[t] * c;
            right[t] += d.integral[s] * c;
        }
        for k in 0..dim {
            left[k] -= d.integral[r] * d.unit_vec[k];
            right[k] -= d.integral[r] * d.unit_vec[k];
        }
        haar_left_invariance = haar_left_invariance.max(max_abs(&left));
        haar_right_invariance = haar_right_invariance.max(max_abs(&right));
    }

    // traciality and commutativity from the same product loop
    let mut haar_traciality = 0.0f64;
    let mut commutative_residual = 0.0f64;
    {
        let mut comm = vec![cr(0.0); dim];
        for i in 0..dim {
            for j in i..dim {
                for v in comm.iter_mut() {
                    *v = cr(0.0);
                }
                let mut hij = cr(0.0);
                let mut hji = cr(0.0);
                for &(k, c) in &d.unit_products[i * dim + j] {
                    comm[k] += c;
                    hij += c * d.integral[k];
                }
                for &(k, c) in &d.unit_products[j * dim + i] {
                    comm[k] -= c;
                    hji += c * d.integral[k];
                }
                haar_traciality = haar_traciality.max((hij - hji).norm());
                commutative_residual = commutative_residual.max(max_abs(&comm));
            }
        }
    }

    // S² = I (Kac property)
    let s2 = d.antipode.compose(&d.antipode).expect("square map");
    let kac = s2.max_abs_diff(&LinearMap::identity(dim));

    // flip∘Δ = Δ
    let mut cocommutative_residual = 0.0f64;
    {
        let mut acc: HashMap<(usize, usize), C64> = HashMap::new();
        for col in &delta_cols {
            acc.clear();
            for &((s, t), c) in col {
                *acc.entry((s, t)).or_insert(cr(0.0)) += c;
                *acc.entry((t, s)).or_insert(cr(0.0)) -= c;
            }
            for v in acc.values() {
                cocommutative_residual = cocommutative_residual.max(v.norm());
            }
        }
    }

    AxiomReport {
        label: d.label.clone(),
        coassociativity,
        counit_left,
        counit_right,
        antipode_left,
        antipode_right,
        delta_homomorphism,
        delta_star,
        haar_left_invariance,
        haar_right_invariance,
        haar_traciality,
        kac,
        commutative_residual,
        cocommutative_residual,
        commutative: commutative_residual <= AXIOM_TOL,
        cocommutative: cocommutative_residual <= AXIOM_TOL,
    }
}

/// Convenience wrapper for [`QuantumGroup::verify`].
pub fn verify(qg: &QuantumGroup) -> Result<AxiomReport> {
    qg.verify()
}

/// Iterated comultiplication `Δ^{(k)}: A → A^{⊗(k+1)}`, `Δ^{(0)} = I`.
///
/// Guarded: refuses when a column would exceed 10⁷ coefficients.
pub fn delta_power(qg: &QuantumGroup, k: usize) -> Result<LinearMap> {
    let dim = qg.dim();
    let mut size: usize = dim;
    for _ in 0..k {
        size = size
            .checked_mul(dim)
            .filter(|&s| s <= 10_000_000)
            .ok_or_else(|| {
                Error::Resource(format!("delta_power({k}) needs dim^{} coefficients", k + 1))
            })?;
    }
    let _ = size;
    let delta_cols = sparse_pair_cols(&qg.delta, dim);
    // columns held sparsely; index in dim^{j+1} is (first factor)·dim^j + rest
    let mut cols: Vec<Vec<(usize, C64)>> = (0..dim).map(|r| vec![(r, cr(1.0))]).collect();
    let mut tail: usize = 1; // dim^j for current iteration
    for _ in 0..k {
        for col in cols.iter_mut() {
            let mut next = Vec::with_capacity(col.len() * dim);
            for &(idx, c) in col.iter() {
                let s = idx / tail;
                let rest = idx % tail;
                for &((u, v), c2) in &delta_cols[s] {
                    next.push(((u * dim + v) * tail + rest, c * c2));
                }
            }
            *col = next;
        }
        tail *= dim;
    }
    let mut matrix = nalgebra::DMatrix::zeros(tail * dim, dim);
    for (r, col) in cols.iter().enumerate() {
        for &(idx, c) in col {
            matrix[(idx, r)] += c;
        }
    }
    Ok(LinearMap::new(matrix))
}
