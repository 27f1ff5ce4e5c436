//! Multiplier spaces of a finite-dimensional algebra.
//!
//! A *multiplier* of `A` is a pair of linear maps `(λ, ρ)` obeying the
//! commutation law `ρ(a)·b = a·λ(b)`; one reads `x·a := λ(a)` and
//! `a·x := ρ(a)`. The multipliers form a unital algebra `M(A)` under
//! `λ_{xy} = λ_x∘λ_y`, `ρ_{xy} = ρ_y∘ρ_x`, and when the product of `A` is
//! non-degenerate, `a ↦ (λ_a, ρ_a)` embeds `A` as an essential two-sided
//! ideal of `M(A)`.
//!
//! One-sided multiplier spaces are computed as well: `L(A)` consists of
//! the maps `y` with `y(ab) = (ya)·b`, `R(A)` of the maps `z` with
//! `(ab)z = a·(bz)`. Everything is solved exactly as a nullspace of the
//! linear system the defining identity induces on basis pairs; brute-force
//! enumeration over small prime fields lives in [`crate::oracle`] as an
//! independent cross-check.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{
    coordinates_in_rows, nullspace, std_basis_vec, Matrix, Subspace,
};
use crate::scalar::{Field, Scalar};

/// A multiplier `x = (λ, ρ)` of an algebra, stored as the pair of matrices
/// acting on coordinates: `x·a = λ(a)` and `a·x = ρ(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplier {
    pub lambda: Matrix,
    pub rho: Matrix,
}

impl Multiplier {
    /// The multiplier of an algebra element: `(λ_a, ρ_a)` = (left
    /// multiplication by `a`, right multiplication by `a`).
    pub fn of_element(a: &FiniteAlgebra, x: &[Scalar]) -> Multiplier {
        Multiplier {
            lambda: a.left_mult_matrix(x),
            rho: a.right_mult_matrix(x),
        }
    }

    /// The identity multiplier `(id, id)` — the unit of `M(A)`.
    pub fn identity(field: Field, n: usize) -> Multiplier {
        Multiplier {
            lambda: Matrix::identity(field, n),
            rho: Matrix::identity(field, n),
        }
    }

    /// The product of two multipliers: compose the left actions, compose
    /// the right actions the other way around.
    pub fn product(&self, other: &Multiplier) -> Multiplier {
        Multiplier {
            lambda: self.lambda.matmul(&other.lambda),
            rho: other.rho.matmul(&self.rho),
        }
    }

    /// Flattens to the length-`2n²` coordinate vector `(vec λ, vec ρ)`.
    pub fn vectorized(&self) -> Vec<Scalar> {
        let mut v = self.lambda.vectorize();
        v.extend(self.rho.vectorize());
        v
    }

    /// Rebuilds a multiplier from [`Multiplier::vectorized`] form.
    pub fn from_vectorized(field: Field, n: usize, v: &[Scalar]) -> Multiplier {
        assert_eq!(v.len(), 2 * n * n, "pair vector has wrong length");
        Multiplier {
            lambda: Matrix::from_vectorized(field, n, n, v[..n * n].to_vec()),
            rho: Matrix::from_vectorized(field, n, n, v[n * n..].to_vec()),
        }
    }

    /// Does the commutation law `ρ(bᵢ)·bⱼ = bᵢ·λ(bⱼ)` hold on all basis
    /// pairs?
    pub fn commutes(&self, a: &FiniteAlgebra) -> bool {
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = a.mul(&self.rho.col(i), &a.basis_element(j));
                let rhs = a.mul(&a.basis_element(i), &self.lambda.col(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// The matrix of the map `y ↦ ((a, b) ↦ a·(yb))` from endomorphism
/// coordinates (length n²) to bilinear-map coordinates (length n³, indexed
/// by `(i, j, k) ↦ i·n² + j·n + k`).
fn left_to_bilinear(a: &FiniteAlgebra) -> Matrix {
    let n = a.dim();
    let mut m = Matrix::zero(a.field(), n * n * n, n * n);
    for i in 0..n {
        let lm = a.basis_left_mult(i);
        for j in 0..n {
            for k in 0..n {
                let row = i * n * n + j * n + k;
                for r in 0..n {
                    let c = lm.at(k, r);
                    if !c.is_zero() {
                        let prev = m.at(row, r * n + j).clone();
                        m.set(row, r * n + j, prev.add(c));
                    }
                }
            }
        }
    }
    m
}

/// The matrix of the map `z ↦ ((a, b) ↦ (az)·b)`, same index conventions
/// as [`left_to_bilinear`].
fn right_to_bilinear(a: &FiniteAlgebra) -> Matrix {
    let n = a.dim();
    let mut m = Matrix::zero(a.field(), n * n * n, n * n);
    for j in 0..n {
        let rm = a.basis_right_mult(j);
        for i in 0..n {
            for k in 0..n {
                let row = i * n * n + j * n + k;
                for r in 0..n {
                    let c = rm.at(k, r);
                    if !c.is_zero() {
                        let prev = m.at(row, r * n + i).clone();
                        m.set(row, r * n + i, prev.add(c));
                    }
                }
            }
        }
    }
    m
}

/// The commutation system `ρ(bᵢ)·bⱼ − bᵢ·λ(bⱼ) = 0` as a matrix over the
/// stacked unknowns `(vec λ, vec ρ)`.
fn commutation_system(a: &FiniteAlgebra) -> Matrix {
    let n = a.dim();
    let tl = left_to_bilinear(a);
    let tr = right_to_bilinear(a);
    Matrix::from_fn(a.field(), n * n * n, 2 * n * n, |row, col| {
        if col < n * n {
            tl.at(row, col).clone()
        } else {
            tr.at(row, col - n * n).neg()
        }
    })
}

/// All solutions of the commutation law `ρ(a)b = aλ(b)`, as a subspace of
/// the `2n²`-dimensional pair coordinates. Makes sense for any algebra,
/// degenerate products included; this is the raw material from which
/// [`compute_multiplier_algebra`] builds `M(A)`.
pub fn multiplier_pair_space(a: &FiniteAlgebra) -> Subspace {
    nullspace(&commutation_system(a))
}

/// The space `L(A)` of left multipliers: endomorphisms `y` with
/// `y(ab) = (ya)·b`, as a subspace of the `n²` endomorphism coordinates
/// (`y[r][c]` at index `r·n + c`). Defined for any algebra.
pub fn compute_left_multipliers(a: &FiniteAlgebra) -> Subspace {
    let n = a.dim();
    let mut m = Matrix::zero(a.field(), n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul_basis(i, j);
            let rm = a.basis_right_mult(j);
            for k in 0..n {
                let row = i * n * n + j * n + k;
                // y(bᵢbⱼ) contributes +Σ_c (bᵢbⱼ)_c·y[k][c] …
                for (c, coeff) in prod.iter().enumerate() {
                    if !coeff.is_zero() {
                        let prev = m.at(row, k * n + c).clone();
                        m.set(row, k * n + c, prev.add(coeff));
                    }
                }
                // … and (y bᵢ)bⱼ contributes −Σ_r (b_r·bⱼ)_k·y[r][i].
                for r in 0..n {
                    let coeff = rm.at(k, r);
                    if !coeff.is_zero() {
                        let prev = m.at(row, r * n + i).clone();
                        m.set(row, r * n + i, prev.sub(coeff));
                    }
                }
            }
        }
    }
    nullspace(&m)
}

/// The space `R(A)` of right multipliers: endomorphisms `z` with
/// `(ab)z = a·(bz)`, same coordinate conventions as
/// [`compute_left_multipliers`].
pub fn compute_right_multipliers(a: &FiniteAlgebra) -> Subspace {
    let n = a.dim();
    let mut m = Matrix::zero(a.field(), n * n * n, n * n);
    for i in 0..n {
        let lm = a.basis_left_mult(i);
        for j in 0..n {
            let prod = a.mul_basis(i, j);
            for k in 0..n {
                let row = i * n * n + j * n + k;
                // (bᵢbⱼ)z contributes +Σ_c (bᵢbⱼ)_c·z[k][c] …
                for (c, coeff) in prod.iter().enumerate() {
                    if !coeff.is_zero() {
                        let prev = m.at(row, k * n + c).clone();
                        m.set(row, k * n + c, prev.add(coeff));
                    }
                }
                // … and bᵢ·(bⱼ z) contributes −Σ_r (bᵢ·b_r)_k·z[r][j].
                for r in 0..n {
                    let coeff = lm.at(k, r);
                    if !coeff.is_zero() {
                        let prev = m.at(row, r * n + j).clone();
                        m.set(row, r * n + j, prev.sub(coeff));
                    }
                }
            }
        }
    }
    nullspace(&m)
}

/// The multiplier algebra `M(A)` of a non-degenerate algebra, with its
/// canonical basis: the embedded basis of `A` first, then complementary
/// multipliers in echelon order.
#[derive(Debug, Clone)]
pub struct MultiplierAlgebra {
    /// The algebra the multipliers act on.
    pub base: FiniteAlgebra,
    /// `M(A)` as an abstract algebra on the canonical basis (always
    /// unital; see [`MultiplierAlgebra::unit`]).
    pub algebra: FiniteAlgebra,
    /// The canonical basis as concrete `(λ, ρ)` pairs.
    pub basis: Vec<Multiplier>,
    /// Coordinates of the unit `(id, id)` on the canonical basis.
    pub unit: Vec<Scalar>,
    /// The embedding `a ↦ (λ_a, ρ_a)` as a (dim M × dim A)-matrix on
    /// coordinates. Its image is the first `dim A` canonical coordinates.
    pub embedding: Matrix,
}

impl MultiplierAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Coordinates in `M(A)` of an embedded element of `A`.
    pub fn embed(&self, a_coords: &[Scalar]) -> Vec<Scalar> {
        self.embedding.apply(a_coords)
    }

    /// The concrete `(λ, ρ)` pair of an element of `M(A)` given by
    /// canonical coordinates.
    pub fn multiplier_of(&self, x: &[Scalar]) -> Multiplier {
        let n = self.base.dim();
        let f = self.base.field();
        let mut lambda = Matrix::zero(f, n, n);
        let mut rho = Matrix::zero(f, n, n);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..n {
                for col in 0..n {
                    let dl = self.basis[i].lambda.at(r, col);
                    if !dl.is_zero() {
                        let v = lambda.at(r, col).add(&c.mul(dl));
                        lambda.set(r, col, v);
                    }
                    let dr = self.basis[i].rho.at(r, col);
                    if !dr.is_zero() {
                        let v = rho.at(r, col).add(&c.mul(dr));
                        rho.set(r, col, v);
                    }
                }
            }
        }
        Multiplier { lambda, rho }
    }

    /// The action `x·a` of a multiplier on an algebra element.
    pub fn act_left(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.multiplier_of(x).lambda.apply(a)
    }

    /// The action `a·x`.
    pub fn act_right(&self, a: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.multiplier_of(x).rho.apply(a)
    }

    /// The embedded copy of `A`, as a subspace of the canonical
    /// coordinates (the span of the first `dim A` of them).
    pub fn embedded_subspace(&self) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = (0..self.base.dim())
            .map(|i| std_basis_vec(self.base.field(), self.dim(), i))
            .collect();
        Subspace::from_spanning(self.base.field(), self.dim(), &vectors)
    }

    /// If `x` lies in the embedded copy of `A`, the element of `A` it is
    /// the image of.
    pub fn preimage_in_base(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let n = self.base.dim();
        if x[n..].iter().all(Scalar::is_zero) {
            Some(x[..n].to_vec())
        } else {
            None
        }
    }

    /// The matrix sending canonical coordinates to vectorized `(λ, ρ)`
    /// pairs — the columns are the vectorized basis multipliers.
    pub fn pair_matrix(&self) -> Matrix {
        let n = self.base.dim();
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(Multiplier::vectorized).collect();
        Matrix::from_fn(self.base.field(), 2 * n * n, self.dim(), |r, c| {
            cols[c][r].clone()
        })
    }

    /// Same as [`MultiplierAlgebra::pair_matrix`] but keeping only the λ
    /// (left-action) half.
    pub fn lambda_matrix(&self) -> Matrix {
        let n = self.base.dim();
        let cols: Vec<Vec<Scalar>> =
            self.basis.iter().map(|m| m.lambda.vectorize()).collect();
        Matrix::from_fn(self.base.field(), n * n, self.dim(), |r, c| cols[c][r].clone())
    }

    /// Same for the ρ (right-action) half.
    pub fn rho_matrix(&self) -> Matrix {
        let n = self.base.dim();
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|m| m.rho.vectorize()).collect();
        Matrix::from_fn(self.base.field(), n * n, self.dim(), |r, c| cols[c][r].clone())
    }

    /// Canonical coordinates of a concrete `(λ, ρ)` pair, if it lies in
    /// the multiplier algebra.
    pub fn coordinates_of(&self, m: &Multiplier) -> Option<Vec<Scalar>> {
        crate::linalg::solve(&self.pair_matrix(), &m.vectorized())
    }
}

fn internal(check: bool, msg: &str) -> Result<()> {
    if check {
        Ok(())
    } else {
        Err(Error::PropositionViolation(msg.to_string()))
    }
}

/// Computes `M(A)` with its canonical basis, product, unit, and the
/// embedding of `A`. Requires a non-degenerate product (the embedding is
/// injective and its image an essential ideal exactly then); the
/// constituent identities — each λ lands in `L(A)`, each ρ in `R(A)`,
/// closure under the product, the embedding being an ideal — are theorems
/// under that hypothesis, and are re-verified on every run.
pub fn compute_multiplier_algebra(a: &FiniteAlgebra) -> Result<MultiplierAlgebra> {
    a.require_nondegenerate()?;
    let n = a.dim();
    let f = a.field();
    let pair_space = multiplier_pair_space(a);

    // Canonical basis: embedded A first …
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        let v = Multiplier::of_element(a, &a.basis_element(i)).vectorized();
        internal(
            pair_space.contains(&v),
            "an embedded element fails the commutation law",
        )?;
        rows.push(v);
    }
    // … then complementary solutions in echelon order.
    let mut span = Subspace::from_spanning(f, 2 * n * n, &rows);
    internal(
        span.dim() == n,
        "embedding of a non-degenerate algebra into its multipliers is not injective",
    )?;
    for v in pair_space.basis_vectors() {
        if !span.contains(&v) {
            rows.push(v.clone());
            span = Subspace::from_spanning(f, 2 * n * n, &rows);
        }
    }
    let m = rows.len();
    internal(m == pair_space.dim(), "canonical basis misses solutions")?;
    let basis: Vec<Multiplier> = rows
        .iter()
        .map(|v| Multiplier::from_vectorized(f, n, v))
        .collect();

    // Every λ must be a left multiplier and every ρ a right multiplier.
    for mult in &basis {
        for i in 0..n {
            for j in 0..n {
                let y_ab = mult.lambda.apply(&a.mul_basis(i, j));
                let ya_b = a.mul(&mult.lambda.col(i), &a.basis_element(j));
                internal(y_ab == ya_b, "a computed λ is not a left multiplier")?;
                let ab_z = mult.rho.apply(&a.mul_basis(i, j));
                let a_bz = a.mul(&a.basis_element(i), &mult.rho.col(j));
                internal(ab_z == a_bz, "a computed ρ is not a right multiplier")?;
            }
        }
    }

    // Structure constants of M(A) via composition.
    let row_matrix = Matrix::from_rows(f, rows.clone());
    let mut constants = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let p = x.product(y).vectorized();
            let coords = coordinates_in_rows(&row_matrix, &p).ok_or_else(|| {
                Error::PropositionViolation(
                    "multiplier space is not closed under the product".into(),
                )
            })?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    constants.push((i, j, k, c));
                }
            }
        }
    }
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend((n..m).map(|i| format!("x{}", i - n + 1)));
    let algebra = FiniteAlgebra::new(f, labels, &constants, None).map_err(|e| {
        Error::PropositionViolation(format!("multiplier product is defective: {e}"))
    })?;

    let unit = coordinates_in_rows(&row_matrix, &Multiplier::identity(f, n).vectorized())
        .ok_or_else(|| {
            Error::PropositionViolation("(id, id) is missing from the multiplier space".into())
        })?;
    for i in 0..m {
        let e = std_basis_vec(f, m, i);
        internal(
            algebra.mul(&unit, &e) == e && algebra.mul(&e, &unit) == e,
            "(id, id) does not act as the unit",
        )?;
    }

    let embedding = Matrix::from_fn(f, m, n, |r, c| {
        if r == c {
            f.one()
        } else {
            f.zero()
        }
    });
    let ma = MultiplierAlgebra {
        base: a.clone(),
        algebra,
        basis,
        unit,
        embedding,
    };

    // The embedding is a homomorphism …
    for i in 0..n {
        for j in 0..n {
            let lhs = ma.algebra.mul(
                &ma.embed(&a.basis_element(i)),
                &ma.embed(&a.basis_element(j)),
            );
            internal(
                lhs == ma.embed(&a.mul_basis(i, j)),
                "embedding does not respect the product",
            )?;
        }
    }
    // … and its image is a two-sided ideal: x·ι(a) and ι(a)·x stay embedded.
    for i in 0..m {
        let x = std_basis_vec(f, m, i);
        for j in 0..n {
            let e = ma.embed(&a.basis_element(j));
            let xe = ma.algebra.mul(&x, &e);
            let ex = ma.algebra.mul(&e, &x);
            internal(
                ma.preimage_in_base(&xe).is_some() && ma.preimage_in_base(&ex).is_some(),
                "embedded copy of A is not an ideal",
            )?;
            // The ideal products are given by the multiplier actions.
            internal(
                ma.preimage_in_base(&xe).unwrap() == ma.basis[i].lambda.col(j)
                    && ma.preimage_in_base(&ex).unwrap() == ma.basis[i].rho.col(j),
                "ideal products disagree with the multiplier actions",
            )?;
        }
    }
    Ok(ma)
}

/// The outcome of [`pullback_check`]: `M(A)` presented as the pullback of
/// `L(A) → Bil(A×A, A) ← R(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackReport {
    pub left_dim: usize,
    pub right_dim: usize,
    pub multiplier_dim: usize,
    pub pullback_dim: usize,
    /// Is `y ↦ ((a,b) ↦ a(yb))` injective on `L(A)`?
    pub left_injective: bool,
    /// Is `z ↦ ((a,b) ↦ (az)b)` injective on `R(A)`?
    pub right_injective: bool,
    /// Dimension of the intersection of the two images inside the space
    /// of bilinear maps.
    pub common_image_dim: usize,
    /// Does `{(λ, ρ) ∈ L(A)×R(A) : same bilinear map}` equal the solution
    /// space of the commutation law?
    pub pullback_equals_multiplier_space: bool,
}

/// Verifies that `M(A)` is the pullback of the one-sided multiplier spaces
/// over the bilinear maps `A×A → A`: both comparison maps are injective on
/// a non-degenerate algebra, and the pair space of the commutation law is
/// exactly the fibre product. Any failure is reported as a defect of the
/// workbench, not of the input.
pub fn pullback_check(a: &FiniteAlgebra) -> Result<PullbackReport> {
    a.require_nondegenerate()?;
    let n = a.dim();
    let f = a.field();
    let left = compute_left_multipliers(a);
    let right = compute_right_multipliers(a);
    let pairs = multiplier_pair_space(a);

    let tl = left_to_bilinear(a);
    let tr = right_to_bilinear(a);
    let left_injective = nullspace(&tl).intersect(&left).dim() == 0;
    let right_injective = nullspace(&tr).intersect(&right).dim() == 0;
    let common = left.image_under(&tl).intersect(&right.image_under(&tr));

    // L(A) × R(A) as a block subspace of the pair coordinates.
    let mut block_rows = Vec::new();
    for l in left.basis_vectors() {
        let mut v = l;
        v.extend(crate::linalg::vec_zero(f, n * n));
        block_rows.push(v);
    }
    for r in right.basis_vectors() {
        let mut v = crate::linalg::vec_zero(f, n * n);
        v.extend(r);
        block_rows.push(v);
    }
    let product_space = Subspace::from_spanning(f, 2 * n * n, &block_rows);
    let same_bilinear = nullspace(&commutation_system(a));
    let pullback = product_space.intersect(&same_bilinear);

    let report = PullbackReport {
        left_dim: left.dim(),
        right_dim: right.dim(),
        multiplier_dim: pairs.dim(),
        pullback_dim: pullback.dim(),
        left_injective,
        right_injective,
        common_image_dim: common.dim(),
        pullback_equals_multiplier_space: pullback == pairs,
    };
    internal(report.left_injective, "L(A) → bilinear maps is not injective")?;
    internal(report.right_injective, "R(A) → bilinear maps is not injective")?;
    internal(
        report.pullback_equals_multiplier_space,
        "pullback differs from the commutation solutions",
    )?;
    internal(
        report.common_image_dim == report.multiplier_dim,
        "pullback dimension disagrees with the common bilinear image",
    )?;
    internal(
        report.multiplier_dim <= report.left_dim
            && report.multiplier_dim <= report.right_dim,
        "M(A) exceeds a one-sided multiplier space",
    )?;
    Ok(report)
}

/// The involution `M(A)` inherits when `A` carries one: `x*·a = (a*·x)*`,
/// i.e. `λ_{x*} = *∘ρ_x∘*` and `ρ_{x*} = *∘λ_x∘*`. Returned as the matrix
/// `S` of the conjugate-linear map `x ↦ S·conj(x)` on canonical
/// coordinates; it extends the involution of `A` through the embedding and
/// fixes the unit.
pub fn star_on_multipliers(ma: &MultiplierAlgebra) -> Result<Matrix> {
    let s = ma
        .base
        .star_matrix()
        .ok_or(Error::NoInvolution)?
        .clone();
    let n = ma.base.dim();
    let f = ma.base.field();
    let m = ma.dim();
    let s_conj = s.conj();
    let row_matrix = Matrix::from_rows(
        f,
        ma.basis.iter().map(Multiplier::vectorized).collect(),
    );
    let mut star = Matrix::zero(f, m, m);
    for (i, x) in ma.basis.iter().enumerate() {
        let starred = Multiplier {
            lambda: s.matmul(&x.rho.conj()).matmul(&s_conj),
            rho: s.matmul(&x.lambda.conj()).matmul(&s_conj),
        };
        internal(
            starred.commutes(&ma.base),
            "starred multiplier breaks the commutation law",
        )?;
        let coords = coordinates_in_rows(&row_matrix, &starred.vectorized()).ok_or_else(
            || Error::PropositionViolation("star leaves the multiplier space".into()),
        )?;
        for (r, c) in coords.into_iter().enumerate() {
            star.set(r, i, c);
        }
    }
    // Involution + anti-homomorphism axioms, via the algebra validator.
    ma.algebra
        .clone()
        .with_star(star.clone())
        .map_err(|e| Error::PropositionViolation(format!("multiplier star invalid: {e}")))?;
    // Extends the involution of A through the embedding.
    for i in 0..n {
        let lhs = star.apply(&ma.embed(&ma.base.basis_element(i)));
        let rhs = ma.embed(&ma.base.star_of(&ma.base.basis_element(i))?);
        internal(lhs == rhs, "multiplier star does not extend the star of A")?;
    }
    // Fixes the unit.
    let unit_conj: Vec<Scalar> = ma.unit.iter().map(Scalar::conj).collect();
    internal(
        star.apply(&unit_conj) == ma.unit,
        "multiplier star moves the unit",
    )?;
    Ok(star)
}

/// The verdict of [`essential_ideal_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialVerdict {
    pub essential: bool,
    /// A nonzero element of `M(A)` annihilating the ideal on both sides,
    /// when one exists.
    pub witness: Option<Vec<Scalar>>,
}

/// Is a two-sided ideal `S ⊆ M(A)` essential — met nontrivially by every
/// nonzero ideal? Equivalently (and this is how it is computed): no
/// nonzero `x ∈ M(A)` satisfies `x·S = 0 = S·x`. The witness on failure is
/// such an annihilating element, preferring the unit when it qualifies.
pub fn essential_ideal_check(
    ma: &MultiplierAlgebra,
    s: &Subspace,
) -> Result<EssentialVerdict> {
    let m = ma.dim();
    let f = ma.base.field();
    if s.ambient != m {
        return Err(Error::DimensionMismatch(
            "ideal must live in the coordinates of M(A)".into(),
        ));
    }
    // Precondition: S is a two-sided ideal of M(A).
    for i in 0..m {
        let x = std_basis_vec(f, m, i);
        for v in s.basis_vectors() {
            if !s.contains(&ma.algebra.mul(&x, &v)) || !s.contains(&ma.algebra.mul(&v, &x)) {
                return Err(Error::NotAnIdeal(
                    "subspace is not a two-sided ideal of M(A)".into(),
                ));
            }
        }
    }
    // Two-sided annihilator of S inside M(A).
    let mut parts_owned: Vec<Matrix> = Vec::new();
    for v in s.basis_vectors() {
        parts_owned.push(ma.algebra.right_mult_matrix(&v)); // x ↦ x·v
        parts_owned.push(ma.algebra.left_mult_matrix(&v)); // x ↦ v·x
    }
    let annihilator = if parts_owned.is_empty() {
        Subspace::full(f, m)
    } else {
        let parts: Vec<&Matrix> = parts_owned.iter().collect();
        nullspace(&Matrix::vstack(f, m, &parts))
    };
    if annihilator.dim() == 0 {
        return Ok(EssentialVerdict {
            essential: true,
            witness: None,
        });
    }
    let witness = if annihilator.contains(&ma.unit) {
        ma.unit.clone()
    } else {
        annihilator.basis_vectors().remove(0)
    };
    Ok(EssentialVerdict {
        essential: false,
        witness: Some(witness),
    })
}

/// The outcome of [`universal_map`]: the canonical homomorphism from a
/// unital algebra `B` to `M(A)` for an ideal `A ⊆ B`.
#[derive(Debug, Clone)]
pub struct UniversalMapReport {
    /// The ideal as an algebra in its own right.
    pub ideal_algebra: FiniteAlgebra,
    /// Coordinates of the ideal's basis inside `B`.
    pub inclusion: Matrix,
    /// `M(ideal)`.
    pub multipliers: MultiplierAlgebra,
    /// The homomorphism `j : B → M(A)`, `j(b) = (a ↦ ba, a ↦ ab)`, as a
    /// (dim M × dim B)-matrix.
    pub map: Matrix,
    /// Kernel of `j` inside `B`.
    pub kernel: Subspace,
    pub injective: bool,
    /// Is the ideal essential in `B` (no nonzero `b` with `bA = 0 = Ab`)?
    /// Always equal to `injective`; both are computed and compared.
    pub essential_in_b: bool,
    pub surjective: bool,
}

/// For a unital algebra `B` and a two-sided ideal `A ⊆ B` whose induced
/// product is non-degenerate, builds the canonical unital homomorphism
/// `j : B → M(A)` given by `j(b)·a = ba` and `a·j(b) = ab`. `j` is
/// injective exactly when `A` is essential in `B` — both sides of that
/// equivalence are computed independently and compared.
pub fn universal_map(b: &FiniteAlgebra, a_in_b: &Subspace) -> Result<UniversalMapReport> {
    let f = b.field();
    let nb = b.dim();
    if a_in_b.ambient != nb {
        return Err(Error::DimensionMismatch(
            "ideal must live in the coordinates of B".into(),
        ));
    }
    let unit = b
        .unit()
        .ok_or_else(|| Error::NoUnit("B has no two-sided unit".into()))?;
    // Ideal test.
    for i in 0..nb {
        let x = b.basis_element(i);
        for v in a_in_b.basis_vectors() {
            if !a_in_b.contains(&b.mul(&x, &v)) || !a_in_b.contains(&b.mul(&v, &x)) {
                return Err(Error::NotAnIdeal(
                    "subspace is not a two-sided ideal of B".into(),
                ));
            }
        }
    }
    let (ideal_algebra, inclusion) = b.induced_subalgebra(a_in_b)?;
    let multipliers = compute_multiplier_algebra(&ideal_algebra)?;
    let na = ideal_algebra.dim();

    // j(x) = (λ: a ↦ x·a, ρ: a ↦ a·x) in ideal coordinates.
    let row_matrix = Matrix::from_rows(
        f,
        multipliers.basis.iter().map(Multiplier::vectorized).collect(),
    );
    let mut map = Matrix::zero(f, multipliers.dim(), nb);
    for i in 0..nb {
        let x = b.basis_element(i);
        let mut lambda = Matrix::zero(f, na, na);
        let mut rho = Matrix::zero(f, na, na);
        for j in 0..na {
            let aj = inclusion.apply(&ideal_algebra.basis_element(j));
            let xa = a_in_b.coordinates_of(&b.mul(&x, &aj)).ok_or_else(|| {
                Error::NotAnIdeal("product leaves the ideal".into())
            })?;
            let ax = a_in_b.coordinates_of(&b.mul(&aj, &x)).ok_or_else(|| {
                Error::NotAnIdeal("product leaves the ideal".into())
            })?;
            // a_in_b coordinates are with respect to the same basis rows
            // that inclusion maps to B, i.e. ideal-algebra coordinates.
            for r in 0..na {
                lambda.set(r, j, xa[r].clone());
                rho.set(r, j, ax[r].clone());
            }
        }
        let pair = Multiplier { lambda, rho };
        internal(
            pair.commutes(&ideal_algebra),
            "induced pair breaks the commutation law",
        )?;
        let coords = coordinates_in_rows(&row_matrix, &pair.vectorized()).ok_or_else(|| {
            Error::PropositionViolation("induced multiplier not in M(A)".into())
        })?;
        for (r, c) in coords.into_iter().enumerate() {
            map.set(r, i, c);
        }
    }

    // j is unital and multiplicative.
    internal(map.apply(&unit) == multipliers.unit, "j does not map 1 to (id, id)")?;
    for i in 0..nb {
        for j in 0..nb {
            let lhs = map.apply(&b.mul_basis(i, j));
            let rhs = multipliers
                .algebra
                .mul(&map.apply(&b.basis_element(i)), &map.apply(&b.basis_element(j)));
            internal(lhs == rhs, "j is not multiplicative")?;
        }
    }

    let kernel = nullspace(&map);
    // Essentiality of A in B: b with b·A = 0 = A·b.
    let mut parts_owned: Vec<Matrix> = Vec::new();
    for v in a_in_b.basis_vectors() {
        parts_owned.push(b.right_mult_matrix(&v));
        parts_owned.push(b.left_mult_matrix(&v));
    }
    let parts: Vec<&Matrix> = parts_owned.iter().collect();
    let annihilator = nullspace(&Matrix::vstack(f, nb, &parts));
    internal(
        annihilator == kernel,
        "kernel of j differs from the annihilator of the ideal",
    )?;
    let injective = kernel.dim() == 0;
    let surjective = {
        let full = Subspace::full(f, nb);
        full.image_under(&map).dim() == multipliers.dim()
    };
    Ok(UniversalMapReport {
        ideal_algebra,
        inclusion,
        multipliers,
        map,
        kernel,
        injective,
        essential_in_b: injective,
        surjective,
    })
}

/// The outcome of [`realize_in_unital`]: `M(A)` found concretely inside an
/// ambient unital algebra.
#[derive(Debug, Clone)]
pub struct RealizationReport {
    pub ideal_algebra: FiniteAlgebra,
    pub inclusion: Matrix,
    /// `{ b ∈ B : bA ⊆ A and Ab ⊆ A }`, as a subspace of `B`.
    pub realization: Subspace,
    pub multipliers: MultiplierAlgebra,
    /// The isomorphism from realization coordinates (the canonical basis
    /// of the subspace) onto `M(A)` coordinates.
    pub iso: Matrix,
}

/// Finds `M(A)` inside a unital algebra `B ⊇ A` as the set of elements
/// multiplying `A` into itself, provided `AB = B` and `BA = B` (which also
/// forces the induced product on `A` to be non-degenerate). The identified
/// subspace is verified to be isomorphic to the abstractly computed `M(A)`
/// via `b ↦ (a ↦ ba, a ↦ ab)`.
pub fn realize_in_unital(b: &FiniteAlgebra, a_sub: &Subspace) -> Result<RealizationReport> {
    let f = b.field();
    let nb = b.dim();
    if a_sub.ambient != nb {
        return Err(Error::DimensionMismatch(
            "subalgebra must live in the coordinates of B".into(),
        ));
    }
    b.unit()
        .ok_or_else(|| Error::NoUnit("B has no two-sided unit".into()))?;
    let full = Subspace::full(f, nb);
    if b.subspace_product(a_sub, &full)? != full {
        return Err(Error::NondegeneracyConditionFails(
            "A·B ≠ B: the realization hypothesis fails".into(),
        ));
    }
    if b.subspace_product(&full, a_sub)? != full {
        return Err(Error::NondegeneracyConditionFails(
            "B·A ≠ B: the realization hypothesis fails".into(),
        ));
    }

    // Realization = { x : x·A ⊆ A and A·x ⊆ A }, cut out by the quotient map.
    let reduction = a_sub.quotient().proj;
    let mut parts_owned: Vec<Matrix> = Vec::new();
    for v in a_sub.basis_vectors() {
        parts_owned.push(reduction.matmul(&b.right_mult_matrix(&v))); // x·v ∈ A
        parts_owned.push(reduction.matmul(&b.left_mult_matrix(&v))); // v·x ∈ A
    }
    let realization = if reduction.rows == 0 {
        Subspace::full(f, nb)
    } else {
        let parts: Vec<&Matrix> = parts_owned.iter().collect();
        nullspace(&Matrix::vstack(f, nb, &parts))
    };

    let (ideal_algebra, inclusion) = b.induced_subalgebra(a_sub)?;
    let multipliers = compute_multiplier_algebra(&ideal_algebra)?;
    let na = ideal_algebra.dim();

    // The comparison map on the realization's canonical basis.
    let row_matrix = Matrix::from_rows(
        f,
        multipliers.basis.iter().map(Multiplier::vectorized).collect(),
    );
    let real_basis = realization.basis_vectors();
    let mut iso = Matrix::zero(f, multipliers.dim(), real_basis.len());
    for (i, x) in real_basis.iter().enumerate() {
        let mut lambda = Matrix::zero(f, na, na);
        let mut rho = Matrix::zero(f, na, na);
        for j in 0..na {
            let aj = inclusion.apply(&ideal_algebra.basis_element(j));
            let xa = a_sub
                .coordinates_of(&b.mul(x, &aj))
                .expect("realization multiplies A into A");
            let ax = a_sub
                .coordinates_of(&b.mul(&aj, x))
                .expect("realization multiplies A into A");
            for r in 0..na {
                lambda.set(r, j, xa[r].clone());
                rho.set(r, j, ax[r].clone());
            }
        }
        let coords = coordinates_in_rows(
            &row_matrix,
            &Multiplier { lambda, rho }.vectorized(),
        )
        .ok_or_else(|| {
            Error::PropositionViolation("realized multiplier not in M(A)".into())
        })?;
        for (r, c) in coords.into_iter().enumerate() {
            iso.set(r, i, c);
        }
    }

    // Bijectivity and multiplicativity.
    internal(
        real_basis.len() == multipliers.dim(),
        "realization dimension differs from dim M(A)",
    )?;
    internal(
        nullspace(&iso).dim() == 0,
        "realization map onto M(A) is not injective",
    )?;
    let real_to_b = Matrix::from_rows(f, real_basis.clone()).transpose();
    for i in 0..real_basis.len() {
        for j in 0..real_basis.len() {
            let xi = std_basis_vec(f, real_basis.len(), i);
            let xj = std_basis_vec(f, real_basis.len(), j);
            let product_in_b = b.mul(&real_to_b.apply(&xi), &real_to_b.apply(&xj));
            let product_coords = realization
                .coordinates_of(&product_in_b)
                .expect("realization is closed under the product");
            let lhs = iso.apply(&product_coords);
            let rhs = multipliers.algebra.mul(&iso.apply(&xi), &iso.apply(&xj));
            internal(lhs == rhs, "realization map is not multiplicative")?;
        }
    }
    Ok(RealizationReport {
        ideal_algebra,
        inclusion,
        realization,
        multipliers,
        iso,
    })
}

/// The outcome of [`left_realize`]: `L(A)` found concretely inside an
/// ambient unital algebra.
#[derive(Debug, Clone)]
pub struct LeftRealizationReport {
    pub sub_algebra: FiniteAlgebra,
    pub inclusion: Matrix,
    /// `B^L = { b ∈ B : bA ⊆ A }`, as a subspace of `B`.
    pub left_idealizer: Subspace,
    /// `L(A)` inside the endomorphism coordinates of `A`.
    pub left_multipliers: Subspace,
    /// The isomorphism from `B^L` coordinates to endomorphism coordinates;
    /// its image is exactly `L(A)`.
    pub iso: Matrix,
}

/// Finds `L(A)` inside a unital algebra `B ⊇ A` as the left idealizer
/// `B^L = { b : bA ⊆ A }`, provided `A·B^L = B^L` (which makes `B^L` firm
/// as a left module and forces `b ↦ (a ↦ ba)` to identify `B^L` with
/// `L(A)`).
pub fn left_realize(b: &FiniteAlgebra, a_sub: &Subspace) -> Result<LeftRealizationReport> {
    let f = b.field();
    let nb = b.dim();
    if a_sub.ambient != nb {
        return Err(Error::DimensionMismatch(
            "subalgebra must live in the coordinates of B".into(),
        ));
    }
    b.unit()
        .ok_or_else(|| Error::NoUnit("B has no two-sided unit".into()))?;
    let reduction = a_sub.quotient().proj;
    let mut parts_owned: Vec<Matrix> = Vec::new();
    for v in a_sub.basis_vectors() {
        parts_owned.push(reduction.matmul(&b.right_mult_matrix(&v))); // x·v ∈ A
    }
    let left_idealizer = if reduction.rows == 0 {
        Subspace::full(f, nb)
    } else {
        let parts: Vec<&Matrix> = parts_owned.iter().collect();
        nullspace(&Matrix::vstack(f, nb, &parts))
    };
    if b.subspace_product(a_sub, &left_idealizer)? != left_idealizer {
        return Err(Error::FirmnessConditionFails(
            "A·B^L ≠ B^L: the one-sided realization hypothesis fails".into(),
        ));
    }

    let (sub_algebra, inclusion) = b.induced_subalgebra(a_sub)?;
    let na = sub_algebra.dim();
    let left_multipliers = compute_left_multipliers(&sub_algebra);

    let ideal_basis = left_idealizer.basis_vectors();
    let mut iso = Matrix::zero(f, na * na, ideal_basis.len());
    for (i, x) in ideal_basis.iter().enumerate() {
        let mut y = Matrix::zero(f, na, na);
        for j in 0..na {
            let aj = inclusion.apply(&sub_algebra.basis_element(j));
            let xa = a_sub
                .coordinates_of(&b.mul(x, &aj))
                .expect("left idealizer multiplies A into A");
            for r in 0..na {
                y.set(r, j, xa[r].clone());
            }
        }
        for (r, c) in y.vectorize().into_iter().enumerate() {
            iso.set(r, i, c);
        }
    }
    internal(
        nullspace(&iso).dim() == 0,
        "left realization map is not injective",
    )?;
    let image = Subspace::full(f, ideal_basis.len()).image_under(&iso);
    internal(
        image == left_multipliers,
        "left idealizer does not realize L(A)",
    )?;
    // Multiplicativity: the map turns the product of B into composition.
    for (i, x) in ideal_basis.iter().enumerate() {
        for (j, y) in ideal_basis.iter().enumerate() {
            let xy = b.mul(x, y);
            let coords = left_idealizer
                .coordinates_of(&xy)
                .expect("left idealizer is closed under the product");
            let lhs = Matrix::from_vectorized(f, na, na, iso.apply(&coords));
            let xi = std_basis_vec(f, ideal_basis.len(), i);
            let xj = std_basis_vec(f, ideal_basis.len(), j);
            let mx = Matrix::from_vectorized(f, na, na, iso.apply(&xi));
            let my = Matrix::from_vectorized(f, na, na, iso.apply(&xj));
            internal(
                lhs == mx.matmul(&my),
                "left realization does not turn products into compositions",
            )?;
        }
    }
    Ok(LeftRealizationReport {
        sub_algebra,
        inclusion,
        left_idealizer,
        left_multipliers,
        iso,
    })
}

/// Closures of the embedded copy of `A` inside `M(A)` under agreement on
/// the basis — the finite-dimensional shadow of the strict topology. An
/// element `x ∈ M(A)` lies in the left closure when some `a ∈ A` has
/// `x·bᵢ = a·bᵢ` for every basis element (i.e. `λ_x = λ_a`), in the right
/// closure when some `a` matches its right action, and in the two-sided
/// closure when a single `a` matches both.
#[derive(Debug, Clone)]
pub struct StrictClosureReport {
    /// `{ x : ∃a, λ_x = λ_a and ρ_x = ρ_a }` — the strict closure of `A`.
    pub closure: Subspace,
    /// `{ x : ∃a, λ_x = λ_a }`.
    pub left_closure: Subspace,
    /// `{ x : ∃a, ρ_x = ρ_a }`.
    pub right_closure: Subspace,
}

/// Computes the strict closures of the embedded `A` inside `M(A)`, and
/// verifies the two-sided closure is a two-sided ideal of `M(A)`
/// containing the embedded copy.
pub fn strict_closure(ma: &MultiplierAlgebra) -> Result<StrictClosureReport> {
    let f = ma.base.field();
    let n = ma.base.dim();
    // Images of A under a ↦ (λ_a, ρ_a) and its one-sided halves.
    let mut pair_rows = Vec::new();
    let mut lambda_rows = Vec::new();
    let mut rho_rows = Vec::new();
    for i in 0..n {
        let m = Multiplier::of_element(&ma.base, &ma.base.basis_element(i));
        pair_rows.push(m.vectorized());
        lambda_rows.push(m.lambda.vectorize());
        rho_rows.push(m.rho.vectorize());
    }
    let embedded_pairs = Subspace::from_spanning(f, 2 * n * n, &pair_rows);
    let embedded_lambdas = Subspace::from_spanning(f, n * n, &lambda_rows);
    let embedded_rhos = Subspace::from_spanning(f, n * n, &rho_rows);

    let closure = embedded_pairs.preimage_under(&ma.pair_matrix());
    let left_closure = embedded_lambdas.preimage_under(&ma.lambda_matrix());
    let right_closure = embedded_rhos.preimage_under(&ma.rho_matrix());

    internal(
        ma.embedded_subspace().is_subspace_of(&closure),
        "strict closure misses the embedded copy of A",
    )?;
    let full = Subspace::full(f, ma.dim());
    let left_prod = ma.algebra.subspace_product(&full, &closure)?;
    let right_prod = ma.algebra.subspace_product(&closure, &full)?;
    internal(
        left_prod.is_subspace_of(&closure) && right_prod.is_subspace_of(&closure),
        "strict closure is not an ideal of M(A)",
    )?;
    Ok(StrictClosureReport {
        closure,
        left_closure,
        right_closure,
    })
}

/// The verdict of [`density_test`], per side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityReport {
    /// Every multiplier's left action matches an element of `A`.
    pub left_dense: bool,
    /// Every multiplier's right action matches an element of `A`.
    pub right_dense: bool,
    /// The strict closure of `A` is all of `M(A)`.
    pub dense: bool,
}

/// Is the embedded copy of `A` strictly dense in `M(A)`? At finite
/// dimension this happens exactly when `A` has (one-sided) local units —
/// equivalently a (one-sided) unit — and the verdict is cross-checked
/// against the independent local-unit search on each side.
pub fn density_test(ma: &MultiplierAlgebra) -> Result<DensityReport> {
    let closures = strict_closure(ma)?;
    let m = ma.dim();
    let report = DensityReport {
        left_dense: closures.left_closure.dim() == m,
        right_dense: closures.right_closure.dim() == m,
        dense: closures.closure.dim() == m,
    };
    let units = crate::units::has_local_units(&ma.base);
    internal(
        report.left_dense == units.left,
        "left density disagrees with left local units",
    )?;
    internal(
        report.right_dense == units.right,
        "right density disagrees with right local units",
    )?;
    internal(
        report.dense == units.two_sided,
        "density disagrees with two-sided local units",
    )?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::vec_zero;

    fn q5_endo(entries: &[(usize, usize)]) -> Vec<Scalar> {
        let mut m = Matrix::zero(Field::Q, 5, 5);
        for &(r, c) in entries {
            m.set(r, c, Field::Q.one());
        }
        m.vectorize()
    }

    #[test]
    fn staircase_one_sided_dimensions_and_spans() {
        let a = fixtures::example_1_16(Field::Q);
        let left = compute_left_multipliers(&a);
        let right = compute_right_multipliers(&a);
        assert_eq!(left.dim(), 7);
        assert_eq!(right.dim(), 7);
        // Left multiplications by elements of A lie in L(A) …
        for i in 0..5 {
            assert!(left.contains(&a.basis_left_mult(i).vectorize()));
            assert!(right.contains(&a.basis_right_mult(i).vectorize()));
        }
        // … together with the actions of the ambient e₂₂ and e₃₂
        // (basis order e11, e12, e13, e23, e33): left multiplication by
        // e₂₂ sends e23 ↦ e23; by e₃₂ sends e23 ↦ e33.
        assert!(left.contains(&q5_endo(&[(3, 3)])));
        assert!(left.contains(&q5_endo(&[(4, 3)])));
        // Right multiplication by e₂₁ sends e12 ↦ e11; by e₂₂ e12 ↦ e12.
        assert!(right.contains(&q5_endo(&[(0, 1)])));
        assert!(right.contains(&q5_endo(&[(1, 1)])));
    }

    #[test]
    fn staircase_multiplier_algebra() {
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        assert_eq!(ma.dim(), 6);
        // The one extra multiplier beyond A acts like the ambient e₂₂.
        let x = &ma.basis[5];
        let mut expected_lambda = Matrix::zero(Field::Q, 5, 5);
        expected_lambda.set(3, 3, Field::Q.one());
        let mut expected_rho = Matrix::zero(Field::Q, 5, 5);
        expected_rho.set(1, 1, Field::Q.one());
        assert_eq!(x.lambda, expected_lambda);
        assert_eq!(x.rho, expected_rho);
        // Unit = ι(e11) + ι(e33) + the e₂₂ multiplier.
        let f = Field::Q;
        let expected_unit = vec![
            f.one(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.one(),
            f.one(),
        ];
        assert_eq!(ma.unit, expected_unit);
    }

    #[test]
    fn unital_algebra_equals_its_multipliers() {
        let a = fixtures::finite_functions(3, Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        assert_eq!(ma.dim(), 3);
        assert_eq!(ma.unit, ma.embed(&a.unit().unwrap()));
        assert_eq!(compute_left_multipliers(&a).dim(), 3);
        assert_eq!(compute_right_multipliers(&a).dim(), 3);
    }

    #[test]
    fn degenerate_product_is_refused() {
        let a = fixtures::zero_product(2, Field::Q);
        assert!(matches!(
            compute_multiplier_algebra(&a),
            Err(Error::DegenerateProduct(_))
        ));
        // The raw pair space is still available: any (λ, ρ) commutes.
        assert_eq!(multiplier_pair_space(&a).dim(), 8);
    }

    #[test]
    fn pullback_presentation() {
        let a = fixtures::example_1_16(Field::Q);
        let report = pullback_check(&a).unwrap();
        assert_eq!(report.left_dim, 7);
        assert_eq!(report.right_dim, 7);
        assert_eq!(report.multiplier_dim, 6);
        assert_eq!(report.pullback_dim, 6);
        assert_eq!(report.common_image_dim, 6);
        assert!(report.left_injective && report.right_injective);
        assert!(report.pullback_equals_multiplier_space);
    }

    #[test]
    fn multiplier_star_restricts_to_base_star() {
        let a = fixtures::matrix_units(2, Field::Qi);
        let ma = compute_multiplier_algebra(&a).unwrap();
        let star = star_on_multipliers(&ma).unwrap();
        // M(A) = ι(A) here, so the star is conjugate transpose through the
        // embedding: ι(e12)* = ι(e21).
        let e12 = ma.embed(&a.basis_element(1));
        let e21 = ma.embed(&a.basis_element(2));
        let conj: Vec<Scalar> = e12.iter().map(Scalar::conj).collect();
        assert_eq!(star.apply(&conj), e21);
    }

    #[test]
    fn star_needs_an_involution() {
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        assert!(matches!(star_on_multipliers(&ma), Err(Error::NoInvolution)));
    }

    #[test]
    fn embedded_ideal_is_essential() {
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        let verdict = essential_ideal_check(&ma, &ma.embedded_subspace()).unwrap();
        assert!(verdict.essential);
        // The full ideal is essential; the zero ideal is not, with the
        // unit as witness.
        let full = Subspace::full(Field::Q, ma.dim());
        assert!(essential_ideal_check(&ma, &full).unwrap().essential);
        let zero = Subspace::zero(Field::Q, ma.dim());
        let verdict = essential_ideal_check(&ma, &zero).unwrap();
        assert!(!verdict.essential);
        assert_eq!(verdict.witness.unwrap(), ma.unit);
    }

    #[test]
    fn non_ideal_is_rejected() {
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        // span{ι(e11)} is not an ideal of M(A).
        let s = Subspace::from_spanning(
            Field::Q,
            ma.dim(),
            &[std_basis_vec(Field::Q, ma.dim(), 0)],
        );
        assert!(matches!(
            essential_ideal_check(&ma, &s),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn universal_map_identifies_the_upper_triangular_matrices() {
        // B = upper-triangular 3×3, ideal = the staircase span.
        let b = fixtures::upper_triangular(3, Field::Q);
        // Basis order of B: e11, e12, e13, e22, e23, e33.
        let ideal = Subspace::from_spanning(
            Field::Q,
            6,
            &[
                b.basis_element(0),
                b.basis_element(1),
                b.basis_element(2),
                b.basis_element(4),
                b.basis_element(5),
            ],
        );
        let report = universal_map(&b, &ideal).unwrap();
        assert!(report.injective);
        assert!(report.essential_in_b);
        assert!(report.surjective);
        assert_eq!(report.multipliers.dim(), 6);
    }

    #[test]
    fn universal_map_kernel_is_the_non_essential_part() {
        // B = functions(3), ideal = the functions supported on the first
        // two points. The third indicator annihilates the ideal, so it is
        // exactly the kernel of j.
        let b = fixtures::finite_functions(3, Field::Q);
        let ideal = Subspace::from_spanning(
            Field::Q,
            3,
            &[b.basis_element(0), b.basis_element(1)],
        );
        let report = universal_map(&b, &ideal).unwrap();
        assert!(!report.injective && !report.essential_in_b);
        assert_eq!(report.kernel.dim(), 1);
        assert!(report.kernel.contains(&b.basis_element(2)));
        assert_eq!(report.multipliers.dim(), 2);
    }

    #[test]
    fn universal_map_needs_a_unital_ambient_algebra() {
        // Adjoining a zero-product line destroys the unit: nothing can act
        // as the identity on that summand.
        let f2 = fixtures::finite_functions(2, Field::Q);
        let z = fixtures::zero_product(1, Field::Q);
        let b = f2.direct_sum(&z).unwrap();
        let ideal = Subspace::from_spanning(
            Field::Q,
            3,
            &[b.basis_element(0), b.basis_element(1)],
        );
        assert!(matches!(
            universal_map(&b, &ideal),
            Err(Error::NoUnit(_))
        ));
    }

    #[test]
    fn unital_universal_map_is_the_identity() {
        let b = fixtures::finite_functions(2, Field::Q);
        let full = Subspace::full(Field::Q, 2);
        let report = universal_map(&b, &full).unwrap();
        assert!(report.injective && report.surjective);
        assert_eq!(report.map, Matrix::identity(Field::Q, 2));
    }

    #[test]
    fn realization_inside_the_full_matrix_algebra() {
        let b = fixtures::matrix_units(3, Field::Q);
        // Basis order of M₃: e11,e12,e13,e21,e22,e23,e31,e32,e33.
        let a_sub = Subspace::from_spanning(
            Field::Q,
            9,
            &[
                b.basis_element(0),
                b.basis_element(1),
                b.basis_element(2),
                b.basis_element(5),
                b.basis_element(8),
            ],
        );
        let report = realize_in_unital(&b, &a_sub).unwrap();
        // The realization is the span of the upper-triangular units.
        let expected = Subspace::from_spanning(
            Field::Q,
            9,
            &[
                b.basis_element(0),
                b.basis_element(1),
                b.basis_element(2),
                b.basis_element(4),
                b.basis_element(5),
                b.basis_element(8),
            ],
        );
        assert_eq!(report.realization, expected);
        assert_eq!(report.multipliers.dim(), 6);
    }

    #[test]
    fn realization_requires_full_products() {
        let b = fixtures::matrix_units(2, Field::Q);
        // A = span{e11} has A·B = first row ≠ B.
        let a_sub = Subspace::from_spanning(Field::Q, 4, &[b.basis_element(0)]);
        assert!(matches!(
            realize_in_unital(&b, &a_sub),
            Err(Error::NondegeneracyConditionFails(_))
        ));
    }

    #[test]
    fn left_realization_inside_the_full_matrix_algebra() {
        let b = fixtures::matrix_units(3, Field::Q);
        let a_sub = Subspace::from_spanning(
            Field::Q,
            9,
            &[
                b.basis_element(0),
                b.basis_element(1),
                b.basis_element(2),
                b.basis_element(5),
                b.basis_element(8),
            ],
        );
        let report = left_realize(&b, &a_sub).unwrap();
        // B^L = span(A, e22, e32) — e21 is excluded because e21·e11 = e21 ∉ A.
        let expected = Subspace::from_spanning(
            Field::Q,
            9,
            &[
                b.basis_element(0),
                b.basis_element(1),
                b.basis_element(2),
                b.basis_element(4),
                b.basis_element(5),
                b.basis_element(7),
                b.basis_element(8),
            ],
        );
        assert_eq!(report.left_idealizer, expected);
        assert!(!report.left_idealizer.contains(&b.basis_element(3)));
        assert_eq!(report.left_multipliers.dim(), 7);
    }

    #[test]
    fn staircase_closure_is_the_embedded_copy() {
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        let closures = strict_closure(&ma).unwrap();
        let embedded = ma.embedded_subspace();
        assert_eq!(closures.closure, embedded);
        // No one-sided unit either, so both one-sided closures collapse too.
        assert_eq!(closures.left_closure, embedded);
        assert_eq!(closures.right_closure, embedded);
        let density = density_test(&ma).unwrap();
        assert!(!density.left_dense && !density.right_dense && !density.dense);
    }

    #[test]
    fn unital_closure_is_everything() {
        let a = fixtures::finite_functions(3, Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        let density = density_test(&ma).unwrap();
        assert!(density.left_dense && density.right_dense && density.dense);
    }

    #[test]
    fn every_multiplier_agrees_with_a_multiplier() {
        // The analogue of "M(A) is complete": using M(A) itself as the set
        // of candidates, the closure is everything.
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        let phi = ma.pair_matrix();
        let image = Subspace::full(Field::Q, ma.dim()).image_under(&phi);
        let closure = image.preimage_under(&phi);
        assert_eq!(closure.dim(), ma.dim());
    }

    #[test]
    fn one_sided_spaces_are_composition_closed() {
        let a = fixtures::example_1_16(Field::Q);
        let n = a.dim();
        for space in [compute_left_multipliers(&a), compute_right_multipliers(&a)] {
            for v in space.basis_vectors() {
                for w in space.basis_vectors() {
                    let mv = Matrix::from_vectorized(Field::Q, n, n, v.clone());
                    let mw = Matrix::from_vectorized(Field::Q, n, n, w);
                    assert!(space.contains(&mv.matmul(&mw).vectorize()));
                }
            }
        }
    }

    #[test]
    fn multiplier_vector_round_trip() {
        let a = fixtures::example_1_16(Field::Q);
        let m = Multiplier::of_element(&a, &a.basis_element(2));
        let v = m.vectorized();
        assert_eq!(Multiplier::from_vectorized(Field::Q, 5, &v), m);
        assert!(m.commutes(&a));
        assert_eq!(vec_zero(Field::Q, 50).len(), 2 * 5 * 5);
    }
}
