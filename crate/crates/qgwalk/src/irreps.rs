//! Irreducible corepresentations: matrix-element tables and their invariants.
//!
//! An [`Irrep`] stores the d×d array of matrix elements `ρᵢⱼ` as algebra
//! elements; an [`IrrepTable`] is a complete list with the trivial
//! representation first. [`IrrepTable::diagnostics`] checks everything the
//! theory demands of such a table: the corepresentation identity, the counit
//! values, unitarity, orthogonality with the `1/d` factor, character
//! integrals, and Peter–Weyl completeness `Σ d² = dim`.

use nalgebra::DMatrix;

use crate::blockalg::{cr, AlgebraElement, BlockShape, HaarWeights, LinearMap, C64};
use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;

#[derive(Debug, Clone)]
pub struct Irrep {
    pub name: String,
    pub dim: usize,
    /// Row-major `d×d`: `elements[i*d + j] = ρᵢⱼ`.
    pub elements: Vec<AlgebraElement>,
}

impl Irrep {
    pub fn element(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.elements[i * self.dim + j]
    }

    /// Character `χ = Σᵢ ρᵢᵢ`.
    pub fn character(&self) -> AlgebraElement {
        let mut chi = AlgebraElement::zero(&self.elements[0].shape);
        for i in 0..self.dim {
            chi = chi.add(self.element(i, i)).expect("same shape");
        }
        chi
    }
}

#[derive(Debug, Clone)]
pub struct IrrepTable {
    pub shape: BlockShape,
    pub irreps: Vec<Irrep>,
}

/// Residuals of the corepresentation-table invariants.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IrrepDiagnostics {
    pub corepresentation: f64,
    pub counit: f64,
    pub unitarity: f64,
    pub character: f64,
    pub orthogonality: f64,
    pub trivial_first: f64,
    pub complete: bool,
    pub square_sum: usize,
    pub dim: usize,
}

impl IrrepDiagnostics {
    pub fn pass(&self) -> bool {
        self.complete
            && self.corepresentation <= 1e-9
            && self.counit <= 1e-10
            && self.unitarity <= 1e-9
            && self.character <= 1e-8
            && self.orthogonality <= 1e-9
            && self.trivial_first <= 1e-10
    }
}

impl IrrepTable {
    pub fn new(shape: BlockShape, irreps: Vec<Irrep>) -> Self {
        Self { shape, irreps }
    }

    pub fn square_sum(&self) -> usize {
        self.irreps.iter().map(|k| k.dim * k.dim).sum()
    }

    /// All matrix elements flattened, table order.
    pub fn matrix_elements(&self) -> impl Iterator<Item = &AlgebraElement> {
        self.irreps.iter().flat_map(|k| k.elements.iter())
    }

    pub fn diagnostics(&self, qg: &QuantumGroup) -> IrrepDiagnostics {
        let dim = qg.dim();
        let h = &qg.haar;
        let one = qg.unit();

        let trivial_first = if self.irreps.is_empty() || self.irreps[0].dim != 1 {
            f64::INFINITY
        } else {
            self.irreps[0].elements[0]
                .sub(&one)
                .map(|d| d.sup_coeff())
                .unwrap_or(f64::INFINITY)
        };

        // Δ(ρᵢⱼ) = Σ_k ρᵢₖ⊗ρₖⱼ, checked on pair coefficients
        let mut corep = 0.0f64;
        let mut counit = 0.0f64;
        for k in &self.irreps {
            for i in 0..k.dim {
                for j in 0..k.dim {
                    let lhs = qg.delta.apply(&k.element(i, j).coeffs());
                    let mut rhs = vec![cr(0.0); dim * dim];
                    for m in 0..k.dim {
                        let a = k.element(i, m).coeffs();
                        let b = k.element(m, j).coeffs();
                        for (s, &x) in a.iter().enumerate() {
                            if x.norm_sqr() == 0.0 {
                                continue;
                            }
                            for (t, &y) in b.iter().enumerate() {
                                rhs[s * dim + t] += x * y;
                            }
                        }
                    }
                    corep = corep.max(crate::blockalg::max_abs_diff(&lhs, &rhs));

                    let eps: C64 = qg
                        .counit
                        .iter()
                        .zip(k.element(i, j).coeffs())
                        .map(|(&e, x)| e * x)
                        .sum();
                    let expected = if i == j { cr(1.0) } else { cr(0.0) };
                    counit = counit.max((eps - expected).norm());
                }
            }
        }

        // Σ_k ρₖᵢ*ρₖⱼ = δᵢⱼ·𝟙
        let mut unitarity = 0.0f64;
        for k in &self.irreps {
            for i in 0..k.dim {
                for j in 0..k.dim {
                    let mut sum = AlgebraElement::zero(&self.shape);
                    for m in 0..k.dim {
                        let term = k
                            .element(m, i)
                            .adjoint()
                            .mul(k.element(m, j))
                            .expect("same shape");
                        sum = sum.add(&term).expect("same shape");
                    }
                    if i == j {
                        sum = sum.sub(&one).expect("same shape");
                    }
                    unitarity = unitarity.max(sum.sup_coeff());
                }
            }
        }

        // haar(χ*χ) = 1 per irrep
        let mut character = 0.0f64;
        for k in &self.irreps {
            let chi = k.character();
            let val = h.integrate(&chi.adjoint().mul(&chi).expect("same shape"));
            character = character.max((val - cr(1.0)).norm());
        }

        // haar((ρᵢⱼ^β)* ρₖₗ^α) = δ_{αβ} δᵢₖ δⱼₗ / d_α
        let mut orthogonality = 0.0f64;
        for (a_idx, ka) in self.irreps.iter().enumerate() {
            for (b_idx, kb) in self.irreps.iter().enumerate() {
                for i in 0..kb.dim {
                    for j in 0..kb.dim {
                        let left = kb.element(i, j).adjoint();
                        for k in 0..ka.dim {
                            for l in 0..ka.dim {
                                let val =
                                    h.integrate(&left.mul(ka.element(k, l)).expect("same shape"));
                                let expected = if a_idx == b_idx && i == k && j == l {
                                    cr(1.0 / ka.dim as f64)
                                } else {
                                    cr(0.0)
                                };
                                orthogonality = orthogonality.max((val - expected).norm());
                            }
                        }
                    }
                }
            }
        }

        IrrepDiagnostics {
            corepresentation: corep,
            counit,
            unitarity,
            character,
            orthogonality,
            trivial_first,
            complete: self.square_sum() == dim,
            square_sum: self.square_sum(),
            dim,
        }
    }

    pub fn validate(&self, qg: &QuantumGroup) -> Result<IrrepDiagnostics> {
        let diag = self.diagnostics(qg);
        if diag.pass() {
            Ok(diag)
        } else {
            Err(Error::Validation(format!(
                "irrep table fails invariants: {diag:?}"
            )))
        }
    }
}

/// Rebuild the Hopf structure maps from a complete matrix-element table.
///
/// The matrix elements form a linear basis (Peter–Weyl), so
/// `Δ(ρᵢⱼ)=Σρᵢₖ⊗ρₖⱼ`, `ε(ρᵢⱼ)=δᵢⱼ` and `S(ρᵢⱼ)=ρⱼᵢ*` extend linearly to the
/// canonical basis by a change of basis.
pub fn reconstruct_group(
    shape: &BlockShape,
    haar: HaarWeights,
    table: &IrrepTable,
    label: &str,
) -> Result<QuantumGroup> {
    let dim = shape.dim();
    if table.square_sum() != dim {
        return Err(Error::Validation(format!(
            "matrix-element table spans {} of {} dimensions",
            table.square_sum(),
            dim
        )));
    }
    let cols: Vec<Vec<C64>> = table.matrix_elements().map(|e| e.coeffs()).collect();
    let basis = LinearMap::from_columns(dim, &cols);
    let inv = basis
        .matrix
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Numerical("matrix elements are linearly dependent".into()))?;

    // structure maps on the Peter–Weyl basis, one column per matrix element
    let mut delta_pw = DMatrix::zeros(dim * dim, dim);
    let mut antipode_pw = DMatrix::zeros(dim, dim);
    let mut counit_pw = vec![cr(0.0); dim];
    let mut col = 0usize;
    for irrep in &table.irreps {
        let d = irrep.dim;
        for i in 0..d {
            for j in 0..d {
                for m in 0..d {
                    let a = irrep.element(i, m).coeffs();
                    let b = irrep.element(m, j).coeffs();
                    for (s, &x) in a.iter().enumerate() {
                        if x.norm_sqr() == 0.0 {
                            continue;
                        }
                        for (t, &y) in b.iter().enumerate() {
                            delta_pw[(s * dim + t, col)] += x * y;
                        }
                    }
                }
                for (s, &x) in irrep.element(j, i).adjoint().coeffs().iter().enumerate() {
                    antipode_pw[(s, col)] = x;
                }
                counit_pw[col] = if i == j { cr(1.0) } else { cr(0.0) };
                col += 1;
            }
        }
    }

    let delta = LinearMap::new(delta_pw * &inv);
    let antipode = LinearMap::new(antipode_pw * &inv);
    let counit_row = nalgebra::RowDVector::from_row_slice(&counit_pw) * &inv;
    let counit: Vec<C64> = counit_row.iter().copied().collect();

    Ok(QuantumGroup {
        label: label.to_string(),
        shape: shape.clone(),
        delta,
        counit,
        antipode,
        haar,
    })
}
