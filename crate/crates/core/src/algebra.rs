//! Finite-dimensional algebras presented by structure constants, with the
//! structural predicates every later computation rests on: non-degeneracy
//! of the multiplication and idempotency.
//!
//! An algebra here is *not* assumed unital, and its product is *not*
//! assumed non-degenerate — both are properties to be computed. The only
//! invariant enforced at construction is associativity (checked on all
//! basis triples) and, when an involution is supplied, the star axioms.

use crate::error::{Error, Result};
use crate::linalg::{vec_is_zero, vec_zero, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// Which side of a one-sided condition is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A finite-dimensional associative algebra over an exact field, given by a
/// basis and the structure tensor `bᵢ·bⱼ = Σₖ c[i][j][k]·bₖ`.
///
/// The optional involution is stored as a matrix `S` acting conjugate-
/// linearly: `star(v) = S·conj(v)` on coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    /// `left_mult[i]` is the matrix of `x ↦ bᵢ·x`.
    left_mult: Vec<Matrix>,
    /// `right_mult[j]` is the matrix of `x ↦ x·bⱼ`.
    right_mult: Vec<Matrix>,
    star: Option<Matrix>,
}

impl FiniteAlgebra {
    /// Builds and validates an algebra from sparse structure constants
    /// `(i, j, k, c)` meaning `bᵢ·bⱼ` has coefficient `c` on `bₖ`.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        product: &[(usize, usize, usize, Scalar)],
        star: Option<Matrix>,
    ) -> Result<FiniteAlgebra> {
        let dim = labels.len();
        let mut left_mult = vec![Matrix::zero(field, dim, dim); dim];
        for &(i, j, k, ref c) in product {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "structure constant ({i}, {j}, {k}) lies in {}, algebra is over {}",
                    c.field(),
                    field
                )));
            }
            let prev = left_mult[i].at(k, j).clone();
            left_mult[i].set(k, j, prev.add(c));
        }
        let right_mult = (0..dim)
            .map(|j| {
                Matrix::from_fn(field, dim, dim, |k, i| left_mult[i].at(k, j).clone())
            })
            .collect();
        let alg = FiniteAlgebra {
            field,
            dim,
            labels,
            left_mult,
            right_mult,
            star: None,
        };
        alg.check_associativity()?;
        match star {
            None => Ok(alg),
            Some(s) => alg.with_star(s),
        }
    }

    /// Attaches a (validated) involution to an algebra.
    pub fn with_star(mut self, star: Matrix) -> Result<FiniteAlgebra> {
        if star.rows != self.dim || star.cols != self.dim {
            return Err(Error::InvalidInvolution(format!(
                "star matrix is {}×{}, algebra has dimension {}",
                star.rows, star.cols, self.dim
            )));
        }
        // (a*)* = a: star(star(v)) = S·conj(S·conj(v)) = S·conj(S)·v.
        if star.matmul(&star.conj()) != Matrix::identity(self.field, self.dim) {
            return Err(Error::InvalidInvolution(
                "star is not an involution: S·conj(S) ≠ I".into(),
            ));
        }
        self.star = Some(star);
        // (ab)* = b*·a* on all basis pairs.
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.star_of(&self.mul_basis(i, j)).unwrap();
                let rhs = self.mul(
                    &self.star_of(&self.basis_element(j)).unwrap(),
                    &self.star_of(&self.basis_element(i)).unwrap(),
                );
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!(
                        "(bᵢbⱼ)* ≠ bⱼ*·bᵢ* at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(self)
    }

    fn check_associativity(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul_basis(i, j);
                for k in 0..self.dim {
                    let jk = self.mul_basis(j, k);
                    let lhs = self.mul(&ij, &self.basis_element(k));
                    let rhs = self.mul(&self.basis_element(i), &jk);
                    if lhs != rhs {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    /// The involution matrix, if the algebra carries one.
    pub fn star_matrix(&self) -> Option<&Matrix> {
        self.star.as_ref()
    }

    /// The coordinate vector of the `i`-th basis element.
    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        crate::linalg::std_basis_vec(self.field, self.dim, i)
    }

    /// The zero element.
    pub fn zero_element(&self) -> Vec<Scalar> {
        vec_zero(self.field, self.dim)
    }

    /// The product of two basis elements, as a coordinate vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.left_mult[i].col(j)
    }

    /// The structure constant `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.left_mult[i].at(k, j)
    }

    /// The sparse structure tensor, sorted by `(i, j, k)` with zero entries
    /// omitted. This is the canonical serialization order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// The matrix of left multiplication `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        self.combination(&self.left_mult, a)
    }

    /// The matrix of right multiplication `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        self.combination(&self.right_mult, a)
    }

    /// The matrix of left multiplication by the `i`-th basis element.
    pub fn basis_left_mult(&self, i: usize) -> &Matrix {
        &self.left_mult[i]
    }

    /// The matrix of right multiplication by the `j`-th basis element.
    pub fn basis_right_mult(&self, j: usize) -> &Matrix {
        &self.right_mult[j]
    }

    fn combination(&self, mats: &[Matrix], coeffs: &[Scalar]) -> Matrix {
        assert_eq!(coeffs.len(), self.dim, "element has wrong length");
        let mut acc = Matrix::zero(self.field, self.dim, self.dim);
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..self.dim {
                for col in 0..self.dim {
                    let e = mats[i].at(r, col);
                    if !e.is_zero() {
                        let v = acc.at(r, col).add(&c.mul(e));
                        acc.set(r, col, v);
                    }
                }
            }
        }
        acc
    }

    /// The product of two elements (bilinear expansion through the
    /// structure tensor).
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "left factor has wrong length");
        self.left_mult_matrix(x).apply(y)
    }

    /// The involution applied to an element.
    pub fn star_of(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let s = self.star.as_ref().ok_or(Error::NoInvolution)?;
        let conj: Vec<Scalar> = x.iter().map(Scalar::conj).collect();
        Ok(s.apply(&conj))
    }

    /// The span of `{ p·q : p ∈ basis(P), q ∈ basis(Q) }`.
    pub fn subspace_product(&self, p: &Subspace, q: &Subspace) -> Result<Subspace> {
        if p.ambient != self.dim || q.ambient != self.dim {
            return Err(Error::DimensionMismatch(
                "subspace ambient differs from algebra dimension".into(),
            ));
        }
        let mut products = Vec::new();
        for a in p.basis_vectors() {
            for b in q.basis_vectors() {
                products.push(self.mul(&a, &b));
            }
        }
        Ok(Subspace::from_spanning(self.field, self.dim, &products))
    }

    /// The full coordinate space as a subspace.
    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// Is `A² = A`?
    pub fn check_idempotent(&self) -> bool {
        let full = self.full_space();
        self.subspace_product(&full, &full).expect("full space fits") == full
    }

    /// The left annihilator `{ a : a·A = 0 }` — nonzero elements witness a
    /// degenerate multiplication.
    pub fn left_annihilator(&self) -> Subspace {
        // a·bⱼ = 0 for all j: stack the right-multiplication matrices.
        let parts: Vec<&Matrix> = self.right_mult.iter().collect();
        crate::linalg::nullspace(&Matrix::vstack(self.field, self.dim, &parts))
    }

    /// The right annihilator `{ a : A·a = 0 }`.
    pub fn right_annihilator(&self) -> Subspace {
        let parts: Vec<&Matrix> = self.left_mult.iter().collect();
        crate::linalg::nullspace(&Matrix::vstack(self.field, self.dim, &parts))
    }

    /// Non-degeneracy check. The left verdict asks that no nonzero `a` has
    /// `a·A = 0`; on failure a nonzero annihilator element is returned as a
    /// witness. `side` selects which annihilators are inspected.
    pub fn check_nondegenerate(&self, side: Side) -> NondegeneracyVerdict {
        let left_witness = match side {
            Side::Left | Side::TwoSided => {
                let ann = self.left_annihilator();
                (ann.dim() > 0).then(|| ann.basis_vectors().remove(0))
            }
            Side::Right => None,
        };
        let right_witness = match side {
            Side::Right | Side::TwoSided => {
                let ann = self.right_annihilator();
                (ann.dim() > 0).then(|| ann.basis_vectors().remove(0))
            }
            Side::Left => None,
        };
        NondegeneracyVerdict {
            side,
            left_witness,
            right_witness,
        }
    }

    /// Shorthand for "non-degenerate on both sides".
    pub fn is_nondegenerate(&self) -> bool {
        self.check_nondegenerate(Side::TwoSided).holds()
    }

    /// Errors with [`Error::DegenerateProduct`] unless the multiplication is
    /// non-degenerate; used as the precondition guard by multiplier-level
    /// operations.
    pub fn require_nondegenerate(&self) -> Result<()> {
        let verdict = self.check_nondegenerate(Side::TwoSided);
        if let Some(w) = &verdict.left_witness {
            return Err(Error::DegenerateProduct(format!(
                "nonzero element with a·A = 0: {}",
                self.format_element(w)
            )));
        }
        if let Some(w) = &verdict.right_witness {
            return Err(Error::DegenerateProduct(format!(
                "nonzero element with A·a = 0: {}",
                self.format_element(w)
            )));
        }
        Ok(())
    }

    /// The two-sided unit, if one exists: the solution of `u·bᵢ = bᵢ` and
    /// `bᵢ·u = bᵢ` for every basis element.
    pub fn unit(&self) -> Option<Vec<Scalar>> {
        let mut parts: Vec<&Matrix> = Vec::new();
        let mut target = Vec::new();
        for i in 0..self.dim {
            // u·bᵢ = bᵢ
            parts.push(&self.right_mult[i]);
            target.extend(self.basis_element(i));
        }
        for i in 0..self.dim {
            // bᵢ·u = bᵢ
            parts.push(&self.left_mult[i]);
            target.extend(self.basis_element(i));
        }
        let system = Matrix::vstack(self.field, self.dim, &parts);
        crate::linalg::solve(&system, &target)
    }

    /// The opposite algebra (product reversed); right modules over A are
    /// left modules over this.
    pub fn opposite(&self) -> FiniteAlgebra {
        FiniteAlgebra {
            field: self.field,
            dim: self.dim,
            labels: self.labels.clone(),
            left_mult: self.right_mult.clone(),
            right_mult: self.left_mult.clone(),
            star: self.star.clone(),
        }
    }

    /// The algebra structure induced on a subspace closed under the product.
    /// Returns the subalgebra (basis = the canonical rows of `s`) together
    /// with the inclusion matrix mapping its coordinates into the parent's.
    pub fn induced_subalgebra(&self, s: &Subspace) -> Result<(FiniteAlgebra, Matrix)> {
        if s.ambient != self.dim {
            return Err(Error::DimensionMismatch(
                "subspace ambient differs from algebra dimension".into(),
            ));
        }
        let rows = s.basis_vectors();
        let d = rows.len();
        let mut constants = Vec::new();
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate() {
                let p = self.mul(a, b);
                let coords = s.coordinates_of(&p).ok_or_else(|| {
                    Error::PreconditionViolated(
                        "subspace is not closed under the product".into(),
                    )
                })?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        constants.push((i, j, k, c));
                    }
                }
            }
        }
        let labels = (0..d).map(|i| format!("s{i}")).collect();
        let sub = FiniteAlgebra::new(self.field, labels, &constants, None)?;
        let inclusion = s.basis().transpose();
        Ok((sub, inclusion))
    }

    /// Direct sum of two algebras over the same field.
    pub fn direct_sum(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        let n = self.dim;
        let mut constants = Vec::new();
        for (i, j, k, c) in self.structure_constants() {
            constants.push((i, j, k, c));
        }
        for (i, j, k, c) in other.structure_constants() {
            constants.push((i + n, j + n, k + n, c));
        }
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("l.{l}")).collect();
        labels.extend(other.labels.iter().map(|l| format!("r.{l}")));
        FiniteAlgebra::new(self.field, labels, &constants, None)
    }

    /// Pretty-prints an element as a combination of basis labels.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        if vec_is_zero(x) {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("({})·{}", c, self.labels[i]));
            }
        }
        parts.join(" + ")
    }
}

/// The outcome of [`FiniteAlgebra::check_nondegenerate`]: a side is
/// degenerate exactly when its witness is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondegeneracyVerdict {
    pub side: Side,
    /// A nonzero element with `a·A = 0`, if one exists.
    pub left_witness: Option<Vec<Scalar>>,
    /// A nonzero element with `A·a = 0`, if one exists.
    pub right_witness: Option<Vec<Scalar>>,
}

impl NondegeneracyVerdict {
    /// Does non-degeneracy hold on every requested side?
    pub fn holds(&self) -> bool {
        self.left_witness.is_none() && self.right_witness.is_none()
    }
}
