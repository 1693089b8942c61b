//! Complex multi-matrix *-algebras: direct sums of full matrix blocks.
//!
//! Everything downstream (Hopf descriptors, states, Fourier theory) is built
//! on elements of `⊕ᵢ M_{nᵢ}(ℂ)` together with a tracial weight per block.
//! The canonical linear basis is the set of matrix units, ordered block-major
//! and row-major within a block; coefficient vectors, `LinearMap`s and all
//! file formats use that ordering.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Direct-sum signature `(n₁, …, n_m)` of a multi-matrix algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockShape {
    dims: Vec<usize>,
    offsets: Vec<usize>,
    dim: usize,
}

impl BlockShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&n| n == 0) {
            return Err(Error::Validation(
                "block shape needs at least one block, all dims >= 1".into(),
            ));
        }
        let mut offsets = Vec::with_capacity(dims.len());
        let mut dim = 0;
        for &n in &dims {
            offsets.push(dim);
            dim += n * n;
        }
        Ok(Self { dims, offsets, dim })
    }

    /// `n` one-dimensional blocks (a commutative algebra ≅ ℂⁿ).
    pub fn scalars(n: usize) -> Self {
        Self::new(vec![1; n]).expect("n >= 1")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn block_count(&self) -> usize {
        self.dims.len()
    }

    /// Total linear dimension `Σ nᵢ²`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical index of the matrix unit `E^{(b)}_{pq}` (0-based p, q).
    pub fn index_of(&self, b: usize, p: usize, q: usize) -> usize {
        debug_assert!(p < self.dims[b] && q < self.dims[b]);
        self.offsets[b] + p * self.dims[b] + q
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn locate(&self, idx: usize) -> (usize, usize, usize) {
        debug_assert!(idx < self.dim);
        let b = match self.offsets.binary_search(&idx) {
            Ok(b) => b,
            Err(b) => b - 1,
        };
        let rel = idx - self.offsets[b];
        let n = self.dims[b];
        (b, rel / n, rel % n)
    }

    /// Index of the adjoint of basis element `idx`: `(E_{pq})* = E_{qp}`.
    pub fn adjoint_index(&self, idx: usize) -> usize {
        let (b, p, q) = self.locate(idx);
        self.index_of(b, q, p)
    }

    /// Shape of the tensor product algebra, blocks ordered left-factor-major.
    pub fn tensor(&self, other: &BlockShape) -> BlockShape {
        let mut dims = Vec::with_capacity(self.dims.len() * other.dims.len());
        for &a in &self.dims {
            for &b in &other.dims {
                dims.push(a * b);
            }
        }
        BlockShape::new(dims).expect("nonempty")
    }

    /// Multiset of block dimensions, sorted.
    pub fn sorted_dims(&self) -> Vec<usize> {
        let mut d = self.dims.clone();
        d.sort_unstable();
        d
    }
}

/// An element of the multi-matrix algebra: one square complex matrix per block.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    pub shape: BlockShape,
    pub blocks: Vec<DMatrix<C64>>,
}

impl AlgebraElement {
    pub fn zero(shape: &BlockShape) -> Self {
        let blocks = shape
            .dims()
            .iter()
            .map(|&n| DMatrix::zeros(n, n))
            .collect();
        Self {
            shape: shape.clone(),
            blocks,
        }
    }

    pub fn unit(shape: &BlockShape) -> Self {
        let blocks = shape.dims().iter().map(|&n| DMatrix::identity(n, n)).collect();
        Self {
            shape: shape.clone(),
            blocks,
        }
    }

    /// The basis element `E^{(b)}_{pq}` (0-based indices).
    pub fn matrix_unit(shape: &BlockShape, b: usize, p: usize, q: usize) -> Self {
        let mut e = Self::zero(shape);
        e.blocks[b][(p, q)] = cr(1.0);
        e
    }

    pub fn basis_element(shape: &BlockShape, idx: usize) -> Self {
        let (b, p, q) = shape.locate(idx);
        Self::matrix_unit(shape, b, p, q)
    }

    pub fn from_coeffs(shape: &BlockShape, coeffs: &[C64]) -> Result<Self> {
        if coeffs.len() != shape.dim() {
            return Err(Error::ShapeMismatch(format!(
                "coefficient vector has length {}, shape dim is {}",
                coeffs.len(),
                shape.dim()
            )));
        }
        let mut e = Self::zero(shape);
        for (idx, &v) in coeffs.iter().enumerate() {
            let (b, p, q) = shape.locate(idx);
            e.blocks[b][(p, q)] = v;
        }
        Ok(e)
    }

    /// Coefficients against the canonical matrix-unit basis.
    pub fn coeffs(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.shape.dim());
        for (b, &n) in self.shape.dims().iter().enumerate() {
            for p in 0..n {
                for q in 0..n {
                    out.push(self.blocks[b][(p, q)]);
                }
            }
        }
        out
    }

    pub fn coeff(&self, idx: usize) -> C64 {
        let (b, p, q) = self.shape.locate(idx);
        self.blocks[b][(p, q)]
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!(
                "{:?} vs {:?}",
                self.shape.dims(),
                other.shape.dims()
            )));
        }
        Ok(())
    }

    /// Blockwise matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a * b)
            .collect();
        Ok(Self {
            shape: self.shape.clone(),
            blocks,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            shape: self.shape.clone(),
            blocks,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            shape: self.shape.clone(),
            blocks,
        })
    }

    pub fn scale(&self, s: C64) -> Self {
        let blocks = self.blocks.iter().map(|b| b * s).collect();
        Self {
            shape: self.shape.clone(),
            blocks,
        }
    }

    /// Conjugate-transpose involution, blockwise.
    pub fn adjoint(&self) -> Self {
        let blocks = self.blocks.iter().map(|b| b.adjoint()).collect();
        Self {
            shape: self.shape.clone(),
            blocks,
        }
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.sup_coeff() <= tol
    }

    /// Largest coefficient magnitude (max-norm over the canonical basis).
    pub fn sup_coeff(&self) -> f64 {
        self.blocks
            .iter()
            .flat_map(|b| b.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Operator norm: largest singular value over all blocks.
    pub fn operator_norm(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| {
                if b.nrows() == 1 {
                    b[(0, 0)].norm()
                } else {
                    let h = b.adjoint() * b;
                    hermitian_eigenvalues(&h)
                        .iter()
                        .fold(0.0f64, |m, &l| m.max(l.max(0.0)))
                        .sqrt()
                }
            })
            .fold(0.0, f64::max)
    }

    /// `(a*a)^{1/2}`: positive part via blockwise Hermitian functional calculus.
    ///
    /// Eigenvalues of `a*a` below `1e-12·‖a*a‖_∞` (per block) are clamped to
    /// zero before the square root so rounding noise cannot produce NaN. The
    /// clamp is relative: well-separated tiny blocks keep their spectrum, so
    /// norms of strongly decayed elements stay meaningful.
    pub fn abs(&self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let h = b.adjoint() * b;
                let (vals, vecs) = hermitian_eigendecomposition(&h);
                let scale = vals.iter().fold(0.0f64, |m, &l| m.max(l.abs()));
                let clamp = 1e-12 * scale;
                let roots: Vec<f64> = vals
                    .iter()
                    .map(|&l| if l.abs() < clamp || l < 0.0 { 0.0 } else { l.sqrt() })
                    .collect();
                let d = DMatrix::from_fn(roots.len(), roots.len(), |i, j| {
                    if i == j {
                        cr(roots[i])
                    } else {
                        cr(0.0)
                    }
                });
                &vecs * d * vecs.adjoint()
            })
            .collect();
        Self {
            shape: self.shape.clone(),
            blocks,
        }
    }

    /// Smallest eigenvalue over all blocks of a self-adjoint element.
    pub fn min_eigenvalue(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| {
                hermitian_eigenvalues(b)
                    .iter()
                    .fold(f64::INFINITY, |m, &l| m.min(l))
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Eigenvalues of a Hermitian matrix (symmetrised first to shed rounding skew).
pub fn hermitian_eigenvalues(h: &DMatrix<C64>) -> Vec<f64> {
    let sym = (h + h.adjoint()).scale(0.5);
    nalgebra::SymmetricEigen::new(sym).eigenvalues.iter().copied().collect()
}

/// Eigendecomposition of a Hermitian matrix: `(eigenvalues, unitary of eigenvectors)`.
pub fn hermitian_eigendecomposition(h: &DMatrix<C64>) -> (Vec<f64>, DMatrix<C64>) {
    let sym = (h + h.adjoint()).scale(0.5);
    let eig = nalgebra::SymmetricEigen::new(sym);
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

/// Tracial weight vector `(w₁, …, w_m)`: `haar(a) = Σ wᵢ·Tr(aᵢ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HaarWeights {
    pub shape: BlockShape,
    pub weights: Vec<f64>,
}

impl HaarWeights {
    pub fn new(shape: BlockShape, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != shape.block_count() {
            return Err(Error::ShapeMismatch(
                "one Haar weight per block required".into(),
            ));
        }
        if weights.iter().any(|&w| w <= 0.0) {
            return Err(Error::Validation("Haar weights must be positive".into()));
        }
        let total: f64 = weights
            .iter()
            .zip(shape.dims())
            .map(|(w, &n)| w * n as f64)
            .sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Validation(format!(
                "Haar weights not normalised: sum w_i * n_i = {total}"
            )));
        }
        Ok(Self { shape, weights })
    }

    /// Uniform weights on `n` scalar blocks (classical uniform measure).
    pub fn uniform_scalars(n: usize) -> Self {
        Self::new(BlockShape::scalars(n), vec![1.0 / n as f64; n]).expect("valid")
    }

    /// The tracial integral `Σ wᵢ·Tr(aᵢ)`.
    pub fn integrate(&self, a: &AlgebraElement) -> C64 {
        debug_assert_eq!(self.shape, a.shape);
        self.weights
            .iter()
            .zip(&a.blocks)
            .map(|(&w, b)| b.diagonal().iter().sum::<C64>() * cr(w))
            .sum()
    }

    /// Coefficients of the integral as a functional on the canonical basis.
    pub fn as_functional_coeffs(&self) -> Vec<C64> {
        let mut out = vec![cr(0.0); self.shape.dim()];
        for (b, &n) in self.shape.dims().iter().enumerate() {
            for p in 0..n {
                out[self.shape.index_of(b, p, p)] = cr(self.weights[b]);
            }
        }
        out
    }
}

/// Which von Neumann p-norm to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormP {
    One,
    Two,
    Inf,
}

/// Haar-weighted p-norm `(haar(|a|^p))^{1/p}`, with `p = ∞` the operator norm.
pub fn p_norm(a: &AlgebraElement, h: &HaarWeights, p: NormP) -> f64 {
    match p {
        NormP::One => h.integrate(&a.abs()).re,
        // haar(|a|²) = haar(a*a), no functional calculus needed
        NormP::Two => h
            .integrate(&a.adjoint().mul(a).expect("same shape"))
            .re
            .max(0.0)
            .sqrt(),
        NormP::Inf => a.operator_norm(),
    }
}

/// Coefficients of `a ⊗ b` in the left-factor-major pair basis
/// (`E_s ⊗ E_t ↦ s·dim_b + t`).
pub fn tensor_coeffs(a: &AlgebraElement, b: &AlgebraElement) -> Vec<C64> {
    let ca = a.coeffs();
    let cb = b.coeffs();
    let mut out = Vec::with_capacity(ca.len() * cb.len());
    for &x in &ca {
        for &y in &cb {
            out.push(x * y);
        }
    }
    out
}

/// Index translation between the pair basis of `A ⊗ B` and the canonical
/// matrix-unit basis of the tensor-shape algebra.
///
/// `E^{(i)}_{pq} ⊗ E^{(j)}_{rs}` is the matrix unit `E_{(p·mⱼ+r),(q·mⱼ+s)}`
/// of tensor block `(i,j)`, so a coefficient vector over pairs reshapes to a
/// block element and back without loss.
pub struct TensorLayout {
    pub left: BlockShape,
    pub right: BlockShape,
    pub product: BlockShape,
    /// pair index `s·dim_right + t` → canonical index in `product`
    pair_to_prod: Vec<usize>,
}

impl TensorLayout {
    pub fn new(left: &BlockShape, right: &BlockShape) -> Self {
        let product = left.tensor(right);
        let dim = left.dim() * right.dim();
        let mut pair_to_prod = vec![0usize; dim];
        for s in 0..left.dim() {
            let (i, p, q) = left.locate(s);
            for t in 0..right.dim() {
                let (j, r, w) = right.locate(t);
                let m = right.dims()[j];
                let block = i * right.block_count() + j;
                let idx = product.index_of(block, p * m + r, q * m + w);
                pair_to_prod[s * right.dim() + t] = idx;
            }
        }
        Self {
            left: left.clone(),
            right: right.clone(),
            product,
            pair_to_prod,
        }
    }

    pub fn pair_index(&self, s: usize, t: usize) -> usize {
        self.pair_to_prod[s * self.right.dim() + t]
    }

    pub fn element_from_pair_coeffs(&self, v: &[C64]) -> AlgebraElement {
        debug_assert_eq!(v.len(), self.pair_to_prod.len());
        let mut e = AlgebraElement::zero(&self.product);
        for (pair, &idx) in self.pair_to_prod.iter().enumerate() {
            if v[pair] != cr(0.0) {
                let (b, p, q) = self.product.locate(idx);
                e.blocks[b][(p, q)] = v[pair];
            }
        }
        e
    }

    pub fn pair_coeffs_from_element(&self, e: &AlgebraElement) -> Vec<C64> {
        let coeffs = e.coeffs();
        self.pair_to_prod.iter().map(|&idx| coeffs[idx]).collect()
    }
}

/// A linear map between canonical coefficient spaces, stored densely.
///
/// `matrix` is `target_dim × source_dim`; tensor-product targets are indexed
/// left-factor-major, matching [`tensor_coeffs`].
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: DMatrix<C64>,
}

impl LinearMap {
    pub fn new(matrix: DMatrix<C64>) -> Self {
        Self {
            source_dim: matrix.ncols(),
            target_dim: matrix.nrows(),
            matrix,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(DMatrix::identity(dim, dim))
    }

    pub fn from_columns(target_dim: usize, cols: &[Vec<C64>]) -> Self {
        let source_dim = cols.len();
        let matrix = DMatrix::from_fn(target_dim, source_dim, |i, j| cols[j][i]);
        Self::new(matrix)
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        debug_assert_eq!(v.len(), self.source_dim);
        let x = nalgebra::DVector::from_column_slice(v);
        (&self.matrix * x).iter().copied().collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.source_dim != other.target_dim {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}→{} after {}→{}",
                other.source_dim, other.target_dim, self.source_dim, self.target_dim
            )));
        }
        Ok(LinearMap::new(&self.matrix * &other.matrix))
    }

    /// Kronecker product, left-factor-major on both sides.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.kronecker(&other.matrix))
    }

    /// Nonzero entries of each column (structural zeros are exact).
    pub fn sparse_columns(&self) -> Vec<Vec<(usize, C64)>> {
        (0..self.source_dim)
            .map(|j| {
                (0..self.target_dim)
                    .filter_map(|i| {
                        let v = self.matrix[(i, j)];
                        (v.norm_sqr() != 0.0).then_some((i, v))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn max_abs_diff(&self, other: &LinearMap) -> f64 {
        debug_assert_eq!(self.matrix.shape(), other.matrix.shape());
        (&self.matrix - &other.matrix)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

pub fn max_abs_diff(a: &[C64], b: &[C64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn max_abs(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_element(shape: &BlockShape, rng: &mut impl Rng) -> AlgebraElement {
        let blocks = shape
            .dims()
            .iter()
            .map(|&n| {
                DMatrix::from_fn(n, n, |_, _| {
                    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                })
            })
            .collect();
        AlgebraElement {
            shape: shape.clone(),
            blocks,
        }
    }

    fn kp_shape() -> BlockShape {
        BlockShape::new(vec![1, 1, 1, 1, 2]).unwrap()
    }

    fn kp_haar() -> HaarWeights {
        HaarWeights::new(kp_shape(), vec![0.125, 0.125, 0.125, 0.125, 0.25]).unwrap()
    }

    #[test]
    fn canonical_indexing_round_trips() {
        let shape = BlockShape::new(vec![2, 3, 1]).unwrap();
        assert_eq!(shape.dim(), 4 + 9 + 1);
        for idx in 0..shape.dim() {
            let (b, p, q) = shape.locate(idx);
            assert_eq!(shape.index_of(b, p, q), idx);
        }
        // block-major, row-major within a block
        assert_eq!(shape.index_of(0, 1, 0), 2);
        assert_eq!(shape.index_of(1, 0, 0), 4);
        assert_eq!(shape.index_of(1, 1, 2), 4 + 5);
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let shape = BlockShape::new(vec![2, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_element(&shape, &mut rng);
        let one = AlgebraElement::unit(&shape);
        assert!(one.mul(&a).unwrap().sub(&a).unwrap().is_zero(0.0));
        assert!(a.mul(&one).unwrap().sub(&a).unwrap().is_zero(0.0));
    }

    #[test]
    fn matrix_units_multiply_by_index_contraction() {
        // on shape (2): E₀₁·E₁₀ = E₀₀
        let shape = BlockShape::new(vec![2]).unwrap();
        let e01 = AlgebraElement::matrix_unit(&shape, 0, 0, 1);
        let e10 = AlgebraElement::matrix_unit(&shape, 0, 1, 0);
        let e00 = AlgebraElement::matrix_unit(&shape, 0, 0, 0);
        assert!(e01.mul(&e10).unwrap().sub(&e00).unwrap().is_zero(0.0));
        assert!(e10.mul(&e01).unwrap().coeff(0).norm() == 0.0);
    }

    #[test]
    fn involution_is_antimultiplicative() {
        let shape = BlockShape::new(vec![1, 2, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let a = random_element(&shape, &mut rng);
            let b = random_element(&shape, &mut rng);
            let lhs = a.mul(&b).unwrap().adjoint();
            let rhs = b.adjoint().mul(&a.adjoint()).unwrap();
            assert!(lhs.sub(&rhs).unwrap().is_zero(1e-12));
            assert!(a.adjoint().adjoint().sub(&a).unwrap().is_zero(0.0));
        }
    }

    #[test]
    fn cstar_identity_per_block() {
        let shape = BlockShape::new(vec![2, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = random_element(&shape, &mut rng);
            let lhs = a.adjoint().mul(&a).unwrap().operator_norm();
            let rhs = a.operator_norm().powi(2);
            assert!((lhs - rhs).abs() <= 1e-9 * rhs.max(1.0));
        }
    }

    #[test]
    fn haar_trace_is_tracial() {
        let h = kp_haar();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let a = random_element(&h.shape, &mut rng);
            let b = random_element(&h.shape, &mut rng);
            let ab = h.integrate(&a.mul(&b).unwrap());
            let ba = h.integrate(&b.mul(&a).unwrap());
            let bound = 1e-10 * a.operator_norm() * b.operator_norm();
            assert!((ab - ba).norm() <= bound.max(1e-12));
        }
    }

    #[test]
    fn abs_squares_back_to_a_star_a() {
        let shape = BlockShape::new(vec![1, 2, 4]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a = random_element(&shape, &mut rng);
            let m = a.abs();
            assert!(m.min_eigenvalue() >= -1e-10);
            let sq = m.mul(&m).unwrap();
            let target = a.adjoint().mul(&a).unwrap();
            assert!(sq.sub(&target).unwrap().sup_coeff() <= 1e-10);
        }
        assert!(AlgebraElement::zero(&shape).abs().is_zero(0.0));
    }

    #[test]
    fn abs_of_diagonally_realised_measure() {
        // diagonal realisation of ½δ⁰+⅓δ¹+⅙δ² in the character basis of ℂℤ₃:
        // |μ| = diag(1, √(1/12), √(1/12))
        let shape = BlockShape::scalars(3);
        let om = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let z = cr(0.5) + cr(1.0 / 3.0) * om + cr(1.0 / 6.0) * om * om;
        let mu = AlgebraElement::from_coeffs(&shape, &[cr(1.0), z, z.conj()]).unwrap();
        let abs = mu.abs();
        let expected = (1.0f64 / 12.0).sqrt();
        assert!((abs.coeff(0).re - 1.0).abs() < 1e-12);
        assert!((abs.coeff(1).re - expected).abs() < 1e-12);
        assert!((abs.coeff(2).re - expected).abs() < 1e-12);
    }

    #[test]
    fn p_norms_of_unit_are_one() {
        let h = kp_haar();
        let one = AlgebraElement::unit(&h.shape);
        for p in [NormP::One, NormP::Two, NormP::Inf] {
            assert!((p_norm(&one, &h, p) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn one_norm_of_periodic_walk_difference() {
        // ‖−e₁+7e₂−e₃−e₄−I₂‖₁ = 7/4 with the (⅛,⅛,⅛,⅛,¼) weights
        let h = kp_haar();
        let mut a = AlgebraElement::zero(&h.shape);
        a.blocks[0][(0, 0)] = cr(-1.0);
        a.blocks[1][(0, 0)] = cr(7.0);
        a.blocks[2][(0, 0)] = cr(-1.0);
        a.blocks[3][(0, 0)] = cr(-1.0);
        a.blocks[4][(0, 0)] = cr(-1.0);
        a.blocks[4][(1, 1)] = cr(-1.0);
        assert!((p_norm(&a, &h, NormP::One) - 1.75).abs() < 1e-12);
    }

    #[test]
    fn cauchy_schwarz_for_one_norm() {
        let h = kp_haar();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..30 {
            let x = random_element(&h.shape, &mut rng);
            let y = random_element(&h.shape, &mut rng);
            let lhs = p_norm(&x.mul(&y).unwrap(), &h, NormP::One);
            let rhs = p_norm(&x, &h, NormP::Two) * p_norm(&y, &h, NormP::Two);
            assert!(lhs <= rhs + 1e-10);
        }
    }

    #[test]
    fn tensor_of_units_and_basis_elements() {
        let shape = BlockShape::new(vec![1, 2]).unwrap();
        let one = AlgebraElement::unit(&shape);
        let layout = TensorLayout::new(&shape, &shape);
        let v = tensor_coeffs(&one, &one);
        let as_elem = layout.element_from_pair_coeffs(&v);
        assert!(as_elem
            .sub(&AlgebraElement::unit(&layout.product))
            .unwrap()
            .is_zero(0.0));

        let e1 = AlgebraElement::basis_element(&shape, 0);
        let e2 = AlgebraElement::basis_element(&shape, 1);
        let t = tensor_coeffs(&e1, &e2);
        let nonzero: Vec<_> = t.iter().filter(|z| z.norm() > 0.0).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(*nonzero[0], cr(1.0));
    }

    #[test]
    fn tensor_pairing_with_functionals_factorises() {
        let shape = BlockShape::new(vec![1, 2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let dim = shape.dim();
        for _ in 0..10 {
            let a = random_element(&shape, &mut rng);
            let b = random_element(&shape, &mut rng);
            let phi: Vec<C64> = (0..dim)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let psi: Vec<C64> = (0..dim)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let t = tensor_coeffs(&a, &b);
            let mut paired = cr(0.0);
            for s in 0..dim {
                for u in 0..dim {
                    paired += phi[s] * psi[u] * t[s * dim + u];
                }
            }
            let ca = a.coeffs();
            let cb = b.coeffs();
            let lhs: C64 = (0..dim).map(|i| phi[i] * ca[i]).sum();
            let rhs: C64 = (0..dim).map(|i| psi[i] * cb[i]).sum();
            assert!((paired - lhs * rhs).norm() < 1e-10);
        }
    }

    #[test]
    fn tensor_layout_respects_multiplication() {
        // reshaped pair coefficients multiply like the tensor algebra
        let shape = BlockShape::new(vec![1, 2]).unwrap();
        let layout = TensorLayout::new(&shape, &shape);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = random_element(&shape, &mut rng);
        let b = random_element(&shape, &mut rng);
        let x = random_element(&shape, &mut rng);
        let y = random_element(&shape, &mut rng);
        let lhs = layout
            .element_from_pair_coeffs(&tensor_coeffs(&a, &b))
            .mul(&layout.element_from_pair_coeffs(&tensor_coeffs(&x, &y)))
            .unwrap();
        let rhs = layout.element_from_pair_coeffs(&tensor_coeffs(
            &a.mul(&x).unwrap(),
            &b.mul(&y).unwrap(),
        ));
        assert!(lhs.sub(&rhs).unwrap().is_zero(1e-12));
    }

    #[test]
    fn linear_map_compose_and_tensor() {
        let id = LinearMap::identity(3);
        assert_eq!(id.compose(&id).unwrap().matrix, id.matrix);
        let m = LinearMap::new(DMatrix::from_row_slice(2, 2, &[
            cr(1.0),
            cr(2.0),
            cr(0.0),
            cr(1.0),
        ]));
        let t = m.tensor(&id);
        assert_eq!(t.source_dim, 6);
        assert_eq!(t.target_dim, 6);
        let bad = LinearMap::identity(2).compose(&LinearMap::identity(3));
        assert!(bad.is_err());
    }
}
