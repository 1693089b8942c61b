//! Builders for the quantum groups and irrep tables used throughout:
//! function algebras and group rings of classical groups (with Cayley-table
//! generators), the Kac–Paljutkin quantum group, the Sekine family, and the
//! four-dimensional non-involutive-antipode Hopf fixture.

use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::blockalg::{cr, AlgebraElement, BlockShape, HaarWeights, LinearMap, NormP, C64};
use crate::dual::{dual_structure_seeded, DualStructure, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::hopf::{HopfDescriptor, QuantumGroup};
use crate::irreps::{reconstruct_group, Irrep, IrrepTable};

/// `exp(2πi/n)`, the single primitive root all phases are derived from.
pub fn zeta(n: usize) -> C64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64)
}

fn zeta_pow(n: usize, k: i64) -> C64 {
    let k = k.rem_euclid(n as i64);
    zeta(n).powu(k as u32)
}

// ---------------------------------------------------------------------------
// Cayley tables
// ---------------------------------------------------------------------------

/// Multiplication table of a finite group, elements indexed `0..order`.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    pub order: usize,
    /// row-major: `product[s*order + t] = s·t`
    pub product: Vec<usize>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub label: String,
    pub element_labels: Option<Vec<String>>,
}

impl CayleyTable {
    /// Validate a raw table: Latin square, two-sided identity, inverses, and
    /// (exhaustively, for order ≤ 128) associativity.
    pub fn new(product: Vec<usize>, label: &str) -> Result<Self> {
        let order = (product.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != product.len() {
            return Err(Error::Validation("product table is not square".into()));
        }
        if product.iter().any(|&x| x >= order) {
            return Err(Error::Validation("table entry out of range".into()));
        }
        for s in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for t in 0..order {
                let r = product[s * order + t];
                let c = product[t * order + s];
                if row[r] || col[c] {
                    return Err(Error::Validation(format!(
                        "row/column {s} is not a permutation"
                    )));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|s| product[e * order + s] == s && product[s * order + e] == s))
            .ok_or_else(|| Error::Validation("no two-sided identity".into()))?;
        let mut inverse = vec![0usize; order];
        for s in 0..order {
            inverse[s] = (0..order)
                .find(|&t| product[s * order + t] == identity && product[t * order + s] == identity)
                .ok_or_else(|| Error::Validation(format!("element {s} has no inverse")))?;
        }
        if order <= 128 {
            for a in 0..order {
                for b in 0..order {
                    let ab = product[a * order + b];
                    for c in 0..order {
                        if product[ab * order + c] != product[a * order + product[b * order + c]] {
                            return Err(Error::Validation(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self {
            order,
            product,
            identity,
            inverse,
            label: label.to_string(),
            element_labels: None,
        })
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.product[s * self.order + t]
    }

    pub fn pow(&self, s: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, s);
        }
        acc
    }

    pub fn element_order(&self, s: usize) -> usize {
        let mut acc = s;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, s);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|s| (s..self.order).all(|t| self.mul(s, t) == self.mul(t, s)))
    }
}

pub fn cyclic(n: usize) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::Validation("cyclic group needs n >= 1".into()));
    }
    let mut product = vec![0usize; n * n];
    for s in 0..n {
        for t in 0..n {
            product[s * n + t] = (s + t) % n;
        }
    }
    CayleyTable::new(product, &format!("Z{n}"))
}

/// `ℤ₂ⁿ`, elements as bitmasks, product = xor.
pub fn z2_power(n: usize) -> Result<CayleyTable> {
    if n == 0 || n > 20 {
        return Err(Error::Validation("Z2^n supported for 1 <= n <= 20".into()));
    }
    let order = 1usize << n;
    let mut product = vec![0usize; order * order];
    for s in 0..order {
        for t in 0..order {
            product[s * order + t] = s ^ t;
        }
    }
    CayleyTable::new(product, &format!("Z2^{n}"))
}

/// Symmetric group together with its permutations in lexicographic order.
/// Composition convention: `(σ·τ)(i) = σ(τ(i))`.
pub fn symmetric_with_permutations(n: usize) -> Result<(CayleyTable, Vec<Vec<usize>>)> {
    if n == 0 || n > 6 {
        return Err(Error::Validation("symmetric group supported for n <= 6".into()));
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let order = perms.len();
    let mut product = vec![0usize; order * order];
    for (s, ps) in perms.iter().enumerate() {
        for (t, pt) in perms.iter().enumerate() {
            let comp: Vec<usize> = (0..n).map(|i| ps[pt[i]]).collect();
            product[s * order + t] = index[&comp];
        }
    }
    let table = CayleyTable::new(product, &format!("S{n}"))?;
    Ok((table, perms))
}

pub fn symmetric(n: usize) -> Result<CayleyTable> {
    symmetric_with_permutations(n).map(|(t, _)| t)
}

/// Dihedral group of order 2n: indices `0..n` are rotations `rⁱ`,
/// `n..2n` are reflections `s·r^{i-n}`, with `r^a·s = s·r^{-a}`.
pub fn dihedral(n: usize) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::Validation("dihedral group needs n >= 1".into()));
    }
    let order = 2 * n;
    let idx = |refl: bool, a: usize| if refl { n + a } else { a };
    let mut product = vec![0usize; order * order];
    for s in 0..order {
        for t in 0..order {
            let (rs, a) = (s >= n, s % n);
            let (rt, b) = (t >= n, t % n);
            let val = match (rs, rt) {
                (false, false) => idx(false, (a + b) % n),
                (false, true) => idx(true, (b + n - a % n) % n),
                (true, false) => idx(true, (a + b) % n),
                (true, true) => idx(false, (b + n - a % n) % n),
            };
            product[s * order + t] = val;
        }
    }
    CayleyTable::new(product, &format!("D{n}"))
}

/// The quaternion group Q₈: `{±1, ±i, ±j, ±k}` with indices
/// `0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k`.
pub fn quaternion() -> Result<CayleyTable> {
    // unit table over {1,i,j,k} with sign
    let base = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) | (2, 2) | (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut product = vec![0usize; 64];
    for s in 0..8 {
        for t in 0..8 {
            let (ua, na) = (s / 2, s % 2 == 1);
            let (ub, nb) = (t / 2, t % 2 == 1);
            let (u, neg) = base(ua, ub);
            let negative = neg ^ na ^ nb;
            product[s * 8 + t] = 2 * u + negative as usize;
        }
    }
    CayleyTable::new(product, "Q8")
}

// ---------------------------------------------------------------------------
// Function algebra F(G)
// ---------------------------------------------------------------------------

/// `F(G)`: the commutative quantum group of functions on a classical group.
///
/// `Δ(δ_s) = Σ_t δ_{st⁻¹}⊗δ_t`, `ε(δ_s) = [s = e]`, `S(δ_s) = δ_{s⁻¹}`,
/// Haar weights `1/|G|`.
pub fn function_algebra(g: &CayleyTable) -> Result<QuantumGroup> {
    let n = g.order;
    let shape = BlockShape::scalars(n);
    let mut delta = DMatrix::zeros(n * n, n);
    for s in 0..n {
        for t in 0..n {
            let left = g.mul(s, g.inverse[t]);
            delta[(left * n + t, s)] = cr(1.0);
        }
    }
    let mut counit = vec![cr(0.0); n];
    counit[g.identity] = cr(1.0);
    let mut antipode = DMatrix::zeros(n, n);
    for s in 0..n {
        antipode[(g.inverse[s], s)] = cr(1.0);
    }
    Ok(QuantumGroup {
        label: format!("F({})", g.label),
        shape: shape.clone(),
        delta: LinearMap::new(delta),
        counit,
        antipode: LinearMap::new(antipode),
        haar: HaarWeights::uniform_scalars(n),
    })
}

// ---------------------------------------------------------------------------
// Abelian characters
// ---------------------------------------------------------------------------

/// Invariant-factor generators `(gᵢ, dᵢ)` of an abelian group: every element
/// is uniquely `Π gᵢ^{aᵢ}` with `0 ≤ aᵢ < dᵢ` and `d₁ ≥ d₂ ≥ …`.
fn abelian_generators(g: &CayleyTable) -> Result<Vec<(usize, usize)>> {
    if !g.is_abelian() {
        return Err(Error::Unsupported(format!(
            "{} is not abelian; supply an irrep table",
            g.label
        )));
    }
    fn decompose(g: &CayleyTable) -> Vec<(usize, usize)> {
        if g.order == 1 {
            return Vec::new();
        }
        let g1 = (0..g.order)
            .max_by_key(|&s| (g.element_order(s), usize::MAX - s))
            .unwrap();
        let n1 = g.element_order(g1);
        if n1 == g.order {
            return vec![(g1, n1)];
        }
        // quotient by ⟨g1⟩
        let mut in_h = vec![false; g.order];
        let mut acc = g.identity;
        for _ in 0..n1 {
            in_h[acc] = true;
            acc = g.mul(acc, g1);
        }
        let mut coset_of = vec![usize::MAX; g.order];
        let mut reps: Vec<usize> = Vec::new();
        for s in 0..g.order {
            if coset_of[s] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(s);
            for (h, &inh) in in_h.iter().enumerate() {
                if inh {
                    coset_of[g.mul(s, h)] = id;
                }
            }
        }
        let m = reps.len();
        let mut qprod = vec![0usize; m * m];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                qprod[a * m + b] = coset_of[g.mul(ra, rb)];
            }
        }
        let quotient = CayleyTable::new(qprod, "quotient").expect("quotient of abelian group");
        let mut out = vec![(g1, n1)];
        for (qgen, ord) in decompose(&quotient) {
            // lift to an element of the same order: h^ord = g1^c with ord | c
            let h = reps[qgen];
            let hm = g.pow(h, ord);
            let mut c = 0usize;
            let mut acc = g.identity;
            while acc != hm {
                acc = g.mul(acc, g1);
                c += 1;
            }
            debug_assert_eq!(c % ord, 0);
            let corr = g.pow(g1, (n1 - (c / ord) % n1) % n1);
            out.push((g.mul(h, corr), ord));
        }
        out
    }
    let gens = decompose(g);
    let total: usize = gens.iter().map(|&(_, d)| d).product::<usize>().max(1);
    if total != g.order {
        return Err(Error::Numerical(
            "invariant-factor decomposition does not span the group".into(),
        ));
    }
    Ok(gens)
}

/// Exponent coordinates of every element against the invariant generators.
fn exponent_coordinates(g: &CayleyTable, gens: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let k = gens.len();
    let mut coords = vec![Vec::new(); g.order];
    let mut seen = vec![false; g.order];
    let mut tuple = vec![0usize; k];
    loop {
        let mut elem = g.identity;
        for (i, &(gen, _)) in gens.iter().enumerate() {
            elem = g.mul(elem, g.pow(gen, tuple[i]));
        }
        if seen[elem] {
            return Err(Error::Numerical("generator coordinates not unique".into()));
        }
        seen[elem] = true;
        coords[elem] = tuple.clone();
        // mixed-radix increment
        let mut i = k;
        loop {
            if i == 0 {
                if seen.iter().all(|&s| s) {
                    return Ok(coords);
                }
                return Err(Error::Numerical("generators do not span the group".into()));
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < gens[i].1 {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Character table of an abelian group as one-dimensional irreps of `F(G)`,
/// trivial character first.
pub fn abelian_character_irreps(qg: &QuantumGroup, g: &CayleyTable) -> Result<IrrepTable> {
    if qg.dim() != g.order || qg.shape.dims().iter().any(|&n| n != 1) {
        return Err(Error::ShapeMismatch(
            "character irreps need the function algebra of the same group".into(),
        ));
    }
    let gens = abelian_generators(g)?;
    let coords = exponent_coordinates(g, &gens)?;
    let k = gens.len();
    let mut irreps = Vec::with_capacity(g.order);
    let mut label = vec![0usize; k];
    for idx in 0..g.order {
        let mut values = vec![cr(0.0); g.order];
        for (s, c) in coords.iter().enumerate() {
            let mut v = cr(1.0);
            for i in 0..k {
                v *= zeta_pow(gens[i].1, (c[i] * label[i]) as i64);
            }
            values[s] = v;
        }
        let element = AlgebraElement::from_coeffs(&qg.shape, &values)?;
        irreps.push(Irrep {
            name: format!("chi{idx}"),
            dim: 1,
            elements: vec![element],
        });
        let mut i = k;
        while i > 0 {
            i -= 1;
            label[i] += 1;
            if label[i] < gens[i].1 {
                break;
            }
            label[i] = 0;
        }
    }
    Ok(IrrepTable::new(qg.shape.clone(), irreps))
}

/// Irreps of a classical function algebra: abelian characters, or a
/// user-supplied table validated against all invariants.
pub fn classical_irreps(
    qg: &QuantumGroup,
    g: &CayleyTable,
    user_table: Option<IrrepTable>,
) -> Result<IrrepTable> {
    if let Some(table) = user_table {
        table.validate(qg)?;
        return Ok(table);
    }
    let table = abelian_character_irreps(qg, g)?;
    table.validate(qg)?;
    Ok(table)
}

// ---------------------------------------------------------------------------
// Group algebra ℂG (the dual group)
// ---------------------------------------------------------------------------

/// `ℂG` in block form, with the transport needed to move between measures on
/// `G` and elements of the block algebra.
#[derive(Debug, Clone)]
pub struct GroupAlgebra {
    pub algebra: QuantumGroup,
    pub table: CayleyTable,
    /// image of each Dirac measure `δ^s` in the block algebra
    pub point_images: Vec<AlgebraElement>,
    dual: DualStructure,
}

impl GroupAlgebra {
    /// `Σ_s coeffs[s]·δ^s` as a block element.
    pub fn element_from_measure(&self, coeffs: &[C64]) -> Result<AlgebraElement> {
        if coeffs.len() != self.table.order {
            return Err(Error::ShapeMismatch("one coefficient per group element".into()));
        }
        Ok(self.dual.element_of_dual(coeffs))
    }

    /// Coefficients against `{δ^s}` of a block element.
    pub fn measure_from_element(&self, a: &AlgebraElement) -> Vec<C64> {
        self.dual.dual_coords_of(a)
    }

    /// The functional on `ℂG` determined by its values `u(δ^s)`.
    pub fn functional_from_point_values(&self, values: &[C64]) -> Result<Vec<C64>> {
        if values.len() != self.table.order {
            return Err(Error::ShapeMismatch("one value per group element".into()));
        }
        // f with Σ_r T(δ^s)_r f_r = values[s]: solve to_blockᵀ... (V = to_block columns)
        let v = DMatrix::from_fn(self.table.order, self.table.order, |r, s| {
            self.point_images[s].coeffs()[r]
        });
        let rhs = DVector::from_column_slice(values);
        let sol = v
            .transpose()
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::Numerical("point images are degenerate".into()))?;
        Ok(sol.iter().copied().collect())
    }

    /// The `2n` … rather `|G|` one-dimensional irreps `κ_s`, identity first.
    pub fn irreps(&self) -> IrrepTable {
        let mut order: Vec<usize> = (0..self.table.order).collect();
        order.sort_by_key(|&s| (s != self.table.identity, s));
        let irreps = order
            .into_iter()
            .map(|s| Irrep {
                name: if s == self.table.identity {
                    "kappa_e".to_string()
                } else {
                    format!("kappa{s}")
                },
                dim: 1,
                elements: vec![self.point_images[s].clone()],
            })
            .collect();
        IrrepTable::new(self.algebra.shape.clone(), irreps)
    }

    /// The von Neumann 1-norm of a measure, taken against the *unnormalised*
    /// dual integral (`dim ×` the Haar state).
    pub fn group_ring_one_norm(&self, coeffs: &[C64]) -> Result<f64> {
        let elt = self.element_from_measure(coeffs)?;
        Ok(self.algebra.dim() as f64 * crate::blockalg::p_norm(&elt, &self.algebra.haar, NormP::One))
    }
}

/// The group ring `ℂG` as a cocommutative quantum group, realised in block
/// form via Wedderburn decomposition of the convolution algebra.
pub fn group_algebra(g: &CayleyTable) -> Result<GroupAlgebra> {
    let f = function_algebra(g)?;
    let mut ds = dual_structure_seeded(&f, DEFAULT_SEED)?;
    ds.group.label = format!("C[{}]", g.label);
    let point_images: Vec<AlgebraElement> = (0..g.order)
        .map(|s| {
            let mut coords = vec![cr(0.0); g.order];
            coords[s] = cr(1.0);
            ds.element_of_dual(&coords)
        })
        .collect();
    Ok(GroupAlgebra {
        algebra: ds.group.clone(),
        table: g.clone(),
        point_images,
        dual: ds,
    })
}

// ---------------------------------------------------------------------------
// Kac–Paljutkin
// ---------------------------------------------------------------------------

pub fn kp_shape() -> BlockShape {
    BlockShape::new(vec![1, 1, 1, 1, 2]).expect("static shape")
}

pub fn kp_haar() -> HaarWeights {
    HaarWeights::new(kp_shape(), vec![0.125, 0.125, 0.125, 0.125, 0.25]).expect("static weights")
}

fn kp_element(one_dim: [f64; 4], m: [[C64; 2]; 2]) -> AlgebraElement {
    let shape = kp_shape();
    let mut e = AlgebraElement::zero(&shape);
    for (b, v) in one_dim.iter().enumerate() {
        e.blocks[b][(0, 0)] = cr(*v);
    }
    for p in 0..2 {
        for q in 0..2 {
            e.blocks[4][(p, q)] = m[p][q];
        }
    }
    e
}

/// Matrix elements of the irreducible corepresentations of the
/// Kac–Paljutkin quantum group: three nontrivial one-dimensional ones and one
/// two-dimensional, labelled so the state parameterisation of [`crate::walks::kp_state`]
/// evaluates on them in closed form.
pub fn kp_irreps() -> IrrepTable {
    let shape = kp_shape();
    let z = cr(0.0);
    let s2 = std::f64::consts::FRAC_1_SQRT_2;
    let eta = crate::blockalg::c(s2, s2); // (1+i)/√2
    let triv = kp_element([1.0, 1.0, 1.0, 1.0], [[cr(1.0), z], [z, cr(1.0)]]);
    let rho_a = kp_element([1.0, -1.0, -1.0, 1.0], [[cr(-1.0), z], [z, cr(1.0)]]);
    let rho_b = kp_element([1.0, -1.0, -1.0, 1.0], [[cr(1.0), z], [z, cr(-1.0)]]);
    let rho_c = kp_element([1.0, 1.0, 1.0, 1.0], [[cr(-1.0), z], [z, cr(-1.0)]]);
    let r11 = kp_element([1.0, 1.0, -1.0, -1.0], [[z, z], [z, z]]);
    let r12 = kp_element([0.0; 4], [[z, eta], [eta.conj(), z]]);
    let r21 = kp_element([0.0; 4], [[z, eta.conj()], [eta, z]]);
    let r22 = kp_element([1.0, -1.0, 1.0, -1.0], [[z, z], [z, z]]);
    IrrepTable::new(
        shape,
        vec![
            Irrep {
                name: "triv".into(),
                dim: 1,
                elements: vec![triv],
            },
            Irrep {
                name: "rho_a".into(),
                dim: 1,
                elements: vec![rho_a],
            },
            Irrep {
                name: "rho_b".into(),
                dim: 1,
                elements: vec![rho_b],
            },
            Irrep {
                name: "rho_c".into(),
                dim: 1,
                elements: vec![rho_c],
            },
            Irrep {
                name: "rho".into(),
                dim: 2,
                elements: vec![r11, r12, r21, r22],
            },
        ],
    )
}

/// The Kac–Paljutkin quantum group: shape `(1,1,1,1,2)`, Haar weights
/// `(⅛,⅛,⅛,⅛,¼)`.
///
/// The comultiplication is not written out anywhere as a matrix; it is
/// reconstructed from the matrix elements through the corepresentation
/// identity and then pushed through the full axiom suite.
pub fn kac_paljutkin() -> Result<(QuantumGroup, IrrepTable)> {
    let table = kp_irreps();
    let qg = reconstruct_group(&kp_shape(), kp_haar(), &table, "KP")?;
    let report = qg.verify()?;
    if !report.is_quantum_group() {
        return Err(Error::Numerical(format!(
            "Kac-Paljutkin reconstruction fails axioms: {:e}",
            report.max_residual()
        )));
    }
    table.validate(&qg)?;
    Ok((qg, table))
}

// ---------------------------------------------------------------------------
// Sekine family
// ---------------------------------------------------------------------------

pub fn sekine_shape(n: usize) -> BlockShape {
    let mut dims = vec![1usize; n * n];
    dims.push(n);
    BlockShape::new(dims).expect("n >= 1")
}

fn sek_e(n: usize, i: i64, j: i64) -> usize {
    let i = i.rem_euclid(n as i64) as usize;
    let j = j.rem_euclid(n as i64) as usize;
    i * n + j
}

fn sek_m(shape: &BlockShape, n: usize, p: i64, q: i64) -> usize {
    let p = p.rem_euclid(n as i64) as usize;
    let q = q.rem_euclid(n as i64) as usize;
    shape.index_of(n * n, p, q)
}

/// The Sekine quantum group of order `2n²`: `n²` one-dimensional blocks
/// `e_{(i,j)}` plus one `Mₙ(ℂ)` block, with root-of-unity comultiplication.
pub fn sekine(n: usize) -> Result<QuantumGroup> {
    if n == 0 {
        return Err(Error::Validation("sekine needs n >= 1".into()));
    }
    let shape = sekine_shape(n);
    let dim = shape.dim();
    let nn = n as i64;
    let mut delta = DMatrix::zeros(dim * dim, dim);

    // one-dimensional factors
    for i in 0..nn {
        for j in 0..nn {
            let col = sek_e(n, i, j);
            for l in 0..nn {
                for m in 0..nn {
                    let a = sek_e(n, l, m);
                    let b = sek_e(n, i - l, j - m);
                    delta[(a * dim + b, col)] += cr(1.0);
                }
            }
            for l in 0..nn {
                for m in 0..nn {
                    let a = sek_m(&shape, n, l, m);
                    let b = sek_m(&shape, n, l + j, m + j);
                    delta[(a * dim + b, col)] += zeta_pow(n, i * (l - m)) / cr(n as f64);
                }
            }
        }
    }
    // matrix factor
    for p in 0..nn {
        for q in 0..nn {
            let col = sek_m(&shape, n, p, q);
            for l in 0..nn {
                for m in 0..nn {
                    let a = sek_e(n, -l, -m);
                    let b = sek_m(&shape, n, p - m, q - m);
                    delta[(a * dim + b, col)] += zeta_pow(n, l * (p - q));
                    let a2 = sek_m(&shape, n, p - m, q - m);
                    let b2 = sek_e(n, l, m);
                    delta[(a2 * dim + b2, col)] += zeta_pow(n, l * (q - p));
                }
            }
        }
    }

    let mut counit = vec![cr(0.0); dim];
    counit[sek_e(n, 0, 0)] = cr(1.0);

    let mut antipode = DMatrix::zeros(dim, dim);
    for i in 0..nn {
        for j in 0..nn {
            antipode[(sek_e(n, -i, -j), sek_e(n, i, j))] = cr(1.0);
        }
    }
    for p in 0..nn {
        for q in 0..nn {
            antipode[(sek_m(&shape, n, q, p), sek_m(&shape, n, p, q))] = cr(1.0);
        }
    }

    let mut weights = vec![1.0 / (2.0 * (n * n) as f64); n * n];
    weights.push(1.0 / (2.0 * n as f64));
    let haar = HaarWeights::new(shape.clone(), weights)?;

    Ok(QuantumGroup {
        label: format!("KP_{n}"),
        shape,
        delta: LinearMap::new(delta),
        counit,
        antipode: LinearMap::new(antipode),
        haar,
    })
}

/// Matrix elements of the irreducible corepresentations of `sekine(n)` for
/// odd `n ≥ 3`: `2n` one-dimensional and `n(n−1)/2` two-dimensional ones.
pub fn sekine_irreps(n: usize) -> Result<IrrepTable> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "Sekine irreps are implemented for odd n >= 3 only (got {n})"
        )));
    }
    let shape = sekine_shape(n);
    let nn = n as i64;
    let one_dim = |l: i64, sign: f64| -> AlgebraElement {
        let mut e = AlgebraElement::zero(&shape);
        for i in 0..nn {
            for j in 0..nn {
                let idx = sek_e(n, i, j);
                let (b, _, _) = shape.locate(idx);
                e.blocks[b][(0, 0)] = zeta_pow(n, i * l);
            }
        }
        for m in 0..nn {
            let p = m.rem_euclid(nn) as usize;
            let q = (m + l).rem_euclid(nn) as usize;
            e.blocks[n * n][(p, q)] = cr(sign);
        }
        e
    };
    let mut irreps = Vec::new();
    irreps.push(Irrep {
        name: "rho0+".into(),
        dim: 1,
        elements: vec![one_dim(0, 1.0)],
    });
    irreps.push(Irrep {
        name: "rho0-".into(),
        dim: 1,
        elements: vec![one_dim(0, -1.0)],
    });
    for l in 1..nn {
        irreps.push(Irrep {
            name: format!("rho{l}+"),
            dim: 1,
            elements: vec![one_dim(l, 1.0)],
        });
        irreps.push(Irrep {
            name: format!("rho{l}-"),
            dim: 1,
            elements: vec![one_dim(l, -1.0)],
        });
    }
    for u in 0..nn {
        for v in 1..=((nn - 1) / 2) {
            let mut r11 = AlgebraElement::zero(&shape);
            let mut r22 = AlgebraElement::zero(&shape);
            for i in 0..nn {
                for j in 0..nn {
                    let idx = sek_e(n, i, j);
                    let (b, _, _) = shape.locate(idx);
                    r11.blocks[b][(0, 0)] = zeta_pow(n, i * u + j * v);
                    r22.blocks[b][(0, 0)] = zeta_pow(n, i * u - j * v);
                }
            }
            let mut r12 = AlgebraElement::zero(&shape);
            let mut r21 = AlgebraElement::zero(&shape);
            for m in 0..nn {
                let p = m.rem_euclid(nn) as usize;
                let q = (m + u).rem_euclid(nn) as usize;
                r12.blocks[n * n][(p, q)] = zeta_pow(n, -m * v);
                r21.blocks[n * n][(p, q)] = zeta_pow(n, m * v);
            }
            irreps.push(Irrep {
                name: format!("kappa{u}.{v}"),
                dim: 2,
                elements: vec![r11, r12, r21, r22],
            });
        }
    }
    Ok(IrrepTable::new(shape, irreps))
}

// ---------------------------------------------------------------------------
// Sweedler fixture
// ---------------------------------------------------------------------------

/// The four-dimensional Hopf algebra on generators `g, x` with `g²=1`,
/// `x²=0`, `gx=−xg`. It is a Hopf *-algebra but not a C*-one: its antipode
/// squares to `x ↦ −x`, so [`crate::hopf::verify_descriptor`] rejects it.
///
/// Basis order: `1, g, x, gx`. The integral provided is the one-sided
/// invariant functional dual to `gx` (there is no normalised two-sided one).
pub fn sweedler() -> HopfDescriptor {
    let dim = 4;
    let z = cr(0.0);
    let o = cr(1.0);
    // multiplication table rows: 1, g, x, gx
    let table: [[(usize, f64); 4]; 4] = [
        [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0)],
        [(1, 1.0), (0, 1.0), (3, 1.0), (2, 1.0)],
        [(2, 1.0), (3, -1.0), (0, 0.0), (0, 0.0)],
        [(3, 1.0), (2, -1.0), (0, 0.0), (0, 0.0)],
    ];
    let mut unit_products = vec![Vec::new(); dim * dim];
    for (i, row) in table.iter().enumerate() {
        for (j, &(k, c)) in row.iter().enumerate() {
            if c != 0.0 {
                unit_products[i * dim + j].push((k, cr(c)));
            }
        }
    }
    let mut delta = DMatrix::zeros(dim * dim, dim);
    delta[(0, 0)] = o; // Δ(1) = 1⊗1
    delta[(1 * dim + 1, 1)] = o; // Δ(g) = g⊗g
    delta[(2, 2)] = o; // Δ(x) = 1⊗x + x⊗g
    delta[(2 * dim + 1, 2)] = o;
    delta[(1 * dim + 3, 3)] = o; // Δ(gx) = g⊗gx + gx⊗1
    delta[(3 * dim, 3)] = o;
    let mut antipode = DMatrix::zeros(dim, dim);
    antipode[(0, 0)] = o; // S(1) = 1
    antipode[(1, 1)] = o; // S(g) = g
    antipode[(3, 2)] = o; // S(x) = gx
    antipode[(2, 3)] = -o; // S(gx) = −x
    HopfDescriptor {
        label: "Sweedler".into(),
        dim,
        unit_products,
        star_perm: vec![0, 1, 2, 3],
        star_phase: vec![o, o, o, -o],
        unit_vec: vec![o, z, z, z],
        delta: LinearMap::new(delta),
        counit: vec![o, o, z, z],
        antipode: LinearMap::new(antipode),
        integral: vec![z, z, z, o],
    }
}
