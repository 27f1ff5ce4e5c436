//! Homomorphisms `A → M(B)` and their unique unital extensions
//! `M(A) → M(B)`.
//!
//! A homomorphism into a multiplier algebra is *non-degenerate* when
//! `γ(A)·B = B` and `B·γ(A) = B`.  Such maps correspond to idempotent
//! bimodule structures on `B`, extend uniquely to unital homomorphisms of
//! the multiplier algebras, and the extension is functorial.  This file
//! houses the hom type, the non-degeneracy verdict, the bimodule
//! correspondence, the extension, and the functoriality check.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, std_basis_vec, vec_zero, Matrix, Subspace};
use crate::multiplier::{compute_multiplier_algebra, Multiplier, MultiplierAlgebra};
use crate::scalar::Scalar;

/// Internal-consistency assertion: these conditions are guaranteed by the
/// mathematics, so a failure means the workbench itself is wrong.
fn internal(check: bool, msg: &str) -> Result<()> {
    if check {
        Ok(())
    } else {
        Err(Error::PropositionViolation(msg.to_string()))
    }
}

/// A multiplicative linear map `γ: A → M(B)`, stored as the multiplier
/// images of the `A`-basis.  Multiplicativity is validated at
/// construction; non-degeneracy (`γ(A)·B = B = B·γ(A)`) is a separate
/// verdict from [`check_nondegenerate_hom`], required by [`extend_hom`].
#[derive(Debug, Clone)]
pub struct NonDegenerateHom {
    source: FiniteAlgebra,
    target: MultiplierAlgebra,
    images: Vec<Multiplier>,
}

impl NonDegenerateHom {
    /// Builds the hom from the images of the source basis elements and
    /// validates that each image is a genuine multiplier of the target's
    /// base and that the map is multiplicative on all basis pairs.
    pub fn new(
        source: &FiniteAlgebra,
        target: &MultiplierAlgebra,
        images: Vec<Multiplier>,
    ) -> Result<NonDegenerateHom> {
        if source.field() != target.base.field() {
            return Err(Error::FieldMismatch(format!(
                "source is over {}, target over {}",
                source.field().tag(),
                target.base.field().tag()
            )));
        }
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "need one multiplier image per source basis element: got {}, need {}",
                images.len(),
                source.dim()
            )));
        }
        for (i, image) in images.iter().enumerate() {
            if target.coordinates_of(image).is_none() {
                return Err(Error::PreconditionViolated(format!(
                    "the image of basis element {} ({}) is not a multiplier of the target",
                    i,
                    source.labels()[i]
                )));
            }
        }
        let hom = NonDegenerateHom {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let of_product = hom.image_of(&source.mul_basis(i, j));
                let product_of = hom.images[i].product(&hom.images[j]);
                if of_product != product_of {
                    return Err(Error::PreconditionViolated(format!(
                        "the map is not multiplicative: γ({lbl_i}·{lbl_j}) ≠ γ({lbl_i})·γ({lbl_j})",
                        lbl_i = source.labels()[i],
                        lbl_j = source.labels()[j]
                    )));
                }
            }
        }
        Ok(hom)
    }

    /// Builds the hom from an algebra map `A → B` given as a matrix on
    /// coordinates (each source basis element lands in `B` itself, then is
    /// embedded into `M(B)`).
    pub fn from_element_map(
        source: &FiniteAlgebra,
        target: &MultiplierAlgebra,
        map: &Matrix,
    ) -> Result<NonDegenerateHom> {
        if map.rows != target.base.dim() || map.cols != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "the element map must be {}×{}, got {}×{}",
                target.base.dim(),
                source.dim(),
                map.rows,
                map.cols
            )));
        }
        let images = (0..source.dim())
            .map(|i| Multiplier::of_element(&target.base, &map.col(i)))
            .collect();
        NonDegenerateHom::new(source, target, images)
    }

    /// The embedding `ι: A → M(A)` as a hom, the identity example of a
    /// non-degenerate homomorphism for idempotent `A`.
    pub fn embedding(ma: &MultiplierAlgebra) -> NonDegenerateHom {
        let images = (0..ma.base.dim())
            .map(|i| Multiplier::of_element(&ma.base, &ma.base.basis_element(i)))
            .collect();
        NonDegenerateHom {
            source: ma.base.clone(),
            target: ma.clone(),
            images,
        }
    }

    /// The pullback of functions along `alpha: X → Y` between finite sets:
    /// `γ(δ_y) = Σ_{x: α(x)=y} δ_x`, a non-degenerate hom from functions
    /// on `Y` (with `points_target` elements) to the multiplier algebra of
    /// functions on `X` (with `alpha.len()` elements).  `alpha` is
    /// 0-indexed.
    pub fn pullback(
        alpha: &[usize],
        points_target: usize,
        field: crate::scalar::Field,
    ) -> Result<NonDegenerateHom> {
        if alpha.iter().any(|&y| y >= points_target) {
            return Err(Error::DimensionMismatch(format!(
                "the map must land in a set with {points_target} points"
            )));
        }
        let source = crate::fixtures::finite_functions(points_target, field);
        let base = crate::fixtures::finite_functions(alpha.len(), field);
        let target = compute_multiplier_algebra(&base)?;
        let images = (0..points_target)
            .map(|y| {
                let mut elem = vec_zero(field, alpha.len());
                for (x, &image) in alpha.iter().enumerate() {
                    if image == y {
                        elem[x] = field.one();
                    }
                }
                Multiplier::of_element(&base, &elem)
            })
            .collect();
        NonDegenerateHom::new(&source, &target, images)
    }

    /// The source algebra `A`.
    pub fn source(&self) -> &FiniteAlgebra {
        &self.source
    }

    /// The target multiplier algebra `M(B)`.
    pub fn target(&self) -> &MultiplierAlgebra {
        &self.target
    }

    /// The multiplier image of the `i`-th source basis element.
    pub fn image(&self, i: usize) -> &Multiplier {
        &self.images[i]
    }

    /// All basis images at once.
    pub fn images(&self) -> &[Multiplier] {
        &self.images
    }

    /// The multiplier image of an arbitrary source element.
    pub fn image_of(&self, a: &[Scalar]) -> Multiplier {
        assert_eq!(a.len(), self.source.dim(), "element has wrong length");
        let n = self.target.base.dim();
        let field = self.source.field();
        let mut lambda = Matrix::zero(field, n, n);
        let mut rho = Matrix::zero(field, n, n);
        for (i, coeff) in a.iter().enumerate() {
            if !coeff.is_zero() {
                lambda = lambda.add(&self.images[i].lambda.scale(coeff));
                rho = rho.add(&self.images[i].rho.scale(coeff));
            }
        }
        Multiplier { lambda, rho }
    }

    /// Canonical `M(B)`-coordinates of the image of a source element.
    pub fn image_coordinates(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.target
            .coordinates_of(&self.image_of(a))
            .expect("images were validated as multipliers at construction")
    }

    /// The matrix of `γ` from source coordinates to canonical
    /// `M(B)`-coordinates.
    pub fn matrix_into_target(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.source.dim())
            .map(|i| self.image_coordinates(&self.source.basis_element(i)))
            .collect();
        Matrix::from_fn(
            self.source.field(),
            self.target.dim(),
            self.source.dim(),
            |r, c| cols[c][r].clone(),
        )
    }
}

/// The non-degeneracy verdict for a hom, with the two product subspaces as
/// witnesses.
#[derive(Debug, Clone)]
pub struct HomNondegeneracy {
    /// The subspace `γ(A)·B` of `B`.
    pub left_product: Subspace,
    /// The subspace `B·γ(A)` of `B`.
    pub right_product: Subspace,
    /// `true` iff both equal `B`.
    pub nondegenerate: bool,
}

/// Computes `γ(A)·B` and `B·γ(A)`; the hom is non-degenerate exactly when
/// both are all of `B`.
pub fn check_nondegenerate_hom(gamma: &NonDegenerateHom) -> HomNondegeneracy {
    let b = &gamma.target.base;
    let field = b.field();
    let mut left_vectors = Vec::new();
    let mut right_vectors = Vec::new();
    for image in &gamma.images {
        for l in 0..b.dim() {
            left_vectors.push(image.lambda.col(l));
            right_vectors.push(image.rho.col(l));
        }
    }
    let left_product = Subspace::from_spanning(field, b.dim(), &left_vectors);
    let right_product = Subspace::from_spanning(field, b.dim(), &right_vectors);
    let full = Subspace::full(field, b.dim());
    let nondegenerate = left_product == full && right_product == full;
    HomNondegeneracy {
        left_product,
        right_product,
        nondegenerate,
    }
}

/// An `A`-bimodule structure on an algebra `B`, compatible with `B`'s own
/// multiplication: `a·(bb') = (a·b)b'`, `(bb')·a = b(b'·a)`, and
/// `(b·a)b' = b(a·b')`.  These are exactly the structures that correspond
/// to multiplicative maps `A → M(B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    algebra: FiniteAlgebra,
    ring: FiniteAlgebra,
    /// `left[i]` is the matrix of `b ↦ aᵢ·b`.
    left: Vec<Matrix>,
    /// `right[i]` is the matrix of `b ↦ b·aᵢ`.
    right: Vec<Matrix>,
}

impl Bimodule {
    /// Validates every bimodule identity and the three compatibilities
    /// with the ring's own multiplication, reporting the first violated
    /// one by name.
    pub fn new(
        algebra: &FiniteAlgebra,
        ring: &FiniteAlgebra,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Bimodule> {
        if algebra.field() != ring.field() {
            return Err(Error::FieldMismatch(format!(
                "acting algebra is over {}, ring over {}",
                algebra.field().tag(),
                ring.field().tag()
            )));
        }
        let n = algebra.dim();
        let d = ring.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "need one left and one right action matrix per algebra basis element \
                 ({} and {} given, need {n})",
                left.len(),
                right.len()
            )));
        }
        for mat in left.iter().chain(right.iter()) {
            if mat.rows != d || mat.cols != d || mat.field != ring.field() {
                return Err(Error::DimensionMismatch(format!(
                    "action matrices must be {d}×{d} over {}",
                    ring.field().tag()
                )));
            }
        }
        let bm = Bimodule {
            algebra: algebra.clone(),
            ring: ring.clone(),
            left,
            right,
        };
        let combine = |mats: &[Matrix], coeffs: &[Scalar]| -> Matrix {
            let mut total = Matrix::zero(ring.field(), d, d);
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    total = total.add(&mats[i].scale(c));
                }
            }
            total
        };
        for i in 0..n {
            for j in 0..n {
                let product = algebra.mul_basis(i, j);
                if combine(&bm.left, &product) != bm.left[i].matmul(&bm.left[j]) {
                    return Err(Error::BimoduleAxiomFails(format!(
                        "(aᵢaⱼ)·b = aᵢ·(aⱼ·b) fails at i={i}, j={j}"
                    )));
                }
                if combine(&bm.right, &product) != bm.right[j].matmul(&bm.right[i]) {
                    return Err(Error::BimoduleAxiomFails(format!(
                        "b·(aᵢaⱼ) = (b·aᵢ)·aⱼ fails at i={i}, j={j}"
                    )));
                }
                if bm.right[j].matmul(&bm.left[i]) != bm.left[i].matmul(&bm.right[j]) {
                    return Err(Error::BimoduleAxiomFails(format!(
                        "(aᵢ·b)·aⱼ = aᵢ·(b·aⱼ) fails at i={i}, j={j}"
                    )));
                }
            }
        }
        for i in 0..n {
            for l in 0..d {
                // a·(b_l·b') = (a·b_l)·b'
                if bm.left[i].matmul(ring.basis_left_mult(l))
                    != ring.left_mult_matrix(&bm.left[i].col(l))
                {
                    return Err(Error::BimoduleAxiomFails(format!(
                        "aᵢ·(bb') = (aᵢ·b)·b' fails at i={i}, b index {l}"
                    )));
                }
                // (b·b_l)·a = b·(b_l·a)
                if bm.right[i].matmul(ring.basis_right_mult(l))
                    != ring.right_mult_matrix(&bm.right[i].col(l))
                {
                    return Err(Error::BimoduleAxiomFails(format!(
                        "(bb')·aᵢ = b·(b'·aᵢ) fails at i={i}, b index {l}"
                    )));
                }
                // (b·a)·b_l = b·(a·b_l)
                if ring.basis_right_mult(l).matmul(&bm.right[i])
                    != ring.right_mult_matrix(&bm.left[i].col(l))
                {
                    return Err(Error::BimoduleAxiomFails(format!(
                        "(b·aᵢ)·b' = b·(aᵢ·b') fails at i={i}, b index {l}"
                    )));
                }
            }
        }
        Ok(bm)
    }

    /// The acting algebra `A`.
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// The ring `B` being acted on.
    pub fn ring(&self) -> &FiniteAlgebra {
        &self.ring
    }

    /// The matrix of `b ↦ aᵢ·b`.
    pub fn left_action(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// The matrix of `b ↦ b·aᵢ`.
    pub fn right_action(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    /// Is `A·B = B = B·A`?
    pub fn is_idempotent(&self) -> bool {
        let d = self.ring.dim();
        let field = self.ring.field();
        let span = |mats: &[Matrix]| {
            let cols: Vec<Vec<Scalar>> = mats
                .iter()
                .flat_map(|m| (0..d).map(move |c| m.col(c)))
                .collect();
            Subspace::from_spanning(field, d, &cols)
        };
        let full = Subspace::full(field, d);
        span(&self.left) == full && span(&self.right) == full
    }
}

/// The bimodule structure `a·b = γ(a)b`, `b·a = bγ(a)` induced on `B` by a
/// hom `γ: A → M(B)`.
pub fn hom_to_bimodule(gamma: &NonDegenerateHom) -> Result<Bimodule> {
    let left = gamma.images.iter().map(|m| m.lambda.clone()).collect();
    let right = gamma.images.iter().map(|m| m.rho.clone()).collect();
    Bimodule::new(&gamma.source, &gamma.target.base, left, right).map_err(|e| {
        Error::PropositionViolation(format!(
            "a validated hom induced an invalid bimodule: {e}"
        ))
    })
}

/// The inverse correspondence: reads a hom `γ: A → M(B)` off a compatible
/// `A`-bimodule structure on `B`, via `γ(a) = (b ↦ a·b, b ↦ b·a)`.
/// Requires the bimodule to be idempotent (`A·B = B = B·A`); the bimodule
/// identities themselves were validated when the [`Bimodule`] was built.
pub fn bimodule_to_hom(
    bimodule: &Bimodule,
    target: &MultiplierAlgebra,
) -> Result<NonDegenerateHom> {
    if target.base != *bimodule.ring() {
        return Err(Error::PreconditionViolated(
            "the target multiplier algebra must be over the bimodule's ring".into(),
        ));
    }
    if !bimodule.is_idempotent() {
        return Err(Error::BimoduleAxiomFails(
            "the bimodule is not idempotent: A·B = B = B·A fails".into(),
        ));
    }
    let images = (0..bimodule.algebra.dim())
        .map(|i| Multiplier {
            lambda: bimodule.left[i].clone(),
            rho: bimodule.right[i].clone(),
        })
        .collect();
    NonDegenerateHom::new(&bimodule.algebra, target, images).map_err(|e| {
        Error::PropositionViolation(format!(
            "a validated idempotent bimodule induced an invalid hom: {e}"
        ))
    })
}

/// The unique unital extension `γ₁: M(A) → M(B)` of a non-degenerate hom.
#[derive(Debug, Clone)]
pub struct ExtendedHom {
    /// The multiplier algebra `M(A)` of the source.
    pub source: MultiplierAlgebra,
    /// The matrix of `γ₁` from canonical `M(A)`-coordinates to canonical
    /// `M(B)`-coordinates.  Verified unital, multiplicative, and restricting
    /// to `γ` along the embedding of `A`.
    pub matrix: Matrix,
    /// The multiplier images of the `M(A)` basis elements.
    pub images: Vec<Multiplier>,
    /// The image subspace `γ₁(M(A))` inside `M(B)`.
    pub image: Subspace,
}

/// A factorization apparatus for `b = Σ γ(aᵢ)bₗ` (or its right-handed
/// mirror): the particular solution for every `B`-basis element, plus a
/// second, different solution whenever one exists, used to re-verify that
/// the extension does not depend on the factorization chosen.
struct Factorizations {
    solutions: Vec<Vec<Scalar>>,
    alternates: Vec<Option<Vec<Scalar>>>,
}

fn factor_all(system: &Matrix) -> Result<Factorizations> {
    let d = system.rows;
    let kernel = nullspace(system);
    let shift = (kernel.dim() > 0).then(|| kernel.basis_vectors()[0].clone());
    let mut solutions = Vec::with_capacity(d);
    let mut alternates = Vec::with_capacity(d);
    for k in 0..d {
        let rhs = std_basis_vec(system.field, d, k);
        let particular = solve(system, &rhs).ok_or_else(|| {
            Error::NondegeneracyFails(format!(
                "basis element {k} does not factor through the hom's image"
            ))
        })?;
        let alternate = shift.as_ref().map(|s| {
            particular
                .iter()
                .zip(s.iter())
                .map(|(p, q)| p.add(q))
                .collect::<Vec<Scalar>>()
        });
        solutions.push(particular);
        alternates.push(alternate);
    }
    Ok(Factorizations { solutions, alternates })
}

/// Applies one multiplier-image column combination: given the per-basis
/// images `g[i]` of `m·aᵢ` (or `aᵢ·m`), assembles
/// `Σ_{(i,l)} t[(i,l)] · column l of (side of g[i])`.
fn assemble_column(
    g: &[Multiplier],
    t: &[Scalar],
    d: usize,
    use_lambda: bool,
) -> Vec<Scalar> {
    let field = g[0].lambda.field;
    let mut out = vec_zero(field, d);
    for (idx, coeff) in t.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (i, l) = (idx / d, idx % d);
        let mat = if use_lambda { &g[i].lambda } else { &g[i].rho };
        for r in 0..d {
            let term = coeff.mul(mat.at(r, l));
            out[r] = out[r].add(&term);
        }
    }
    out
}

/// Extends a non-degenerate hom `γ: A → M(B)` to the unique unital
/// homomorphism `γ₁: M(A) → M(B)`: every `b ∈ B` factors as
/// `b = Σ γ(aᵢ)bₗ`, and `γ₁(m)·b := Σ γ(m·aᵢ)bₗ` (mirrored on the right).
/// Independence of the chosen factorization is re-verified against a
/// second solution, and the result is checked unital, multiplicative, and
/// equal to `γ` on the embedded copy of `A`.
pub fn extend_hom(gamma: &NonDegenerateHom) -> Result<ExtendedHom> {
    let verdict = check_nondegenerate_hom(gamma);
    if !verdict.nondegenerate {
        return Err(Error::NondegeneracyFails(format!(
            "the hom is degenerate: γ(A)·B has dimension {}, B·γ(A) has dimension {}, \
             the base has dimension {}",
            verdict.left_product.dim(),
            verdict.right_product.dim(),
            gamma.target.base.dim()
        )));
    }
    let a = &gamma.source;
    let b = &gamma.target.base;
    let field = a.field();
    let (n, d) = (a.dim(), b.dim());
    let ma = compute_multiplier_algebra(a)?;

    // γ(aᵢ)·bₗ and bₗ·γ(aᵢ), columns of the two factorization systems.
    let left_system = Matrix::from_fn(field, d, n * d, |r, col| {
        let (i, l) = (col / d, col % d);
        gamma.images[i].lambda.at(r, l).clone()
    });
    let right_system = Matrix::from_fn(field, d, n * d, |r, col| {
        let (i, l) = (col / d, col % d);
        gamma.images[i].rho.at(r, l).clone()
    });
    let left_factors = factor_all(&left_system)?;
    let right_factors = factor_all(&right_system)?;

    let mut images: Vec<Multiplier> = Vec::with_capacity(ma.dim());
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(ma.dim());
    for m in 0..ma.dim() {
        let m_coords = ma.algebra.basis_element(m);
        // Images of m·aᵢ and aᵢ·m under γ, reused across all of B.
        let left_shifted: Vec<Multiplier> = (0..n)
            .map(|i| gamma.image_of(&ma.act_left(&m_coords, &a.basis_element(i))))
            .collect();
        let right_shifted: Vec<Multiplier> = (0..n)
            .map(|i| gamma.image_of(&ma.act_right(&a.basis_element(i), &m_coords)))
            .collect();
        let mut lambda = Matrix::zero(field, d, d);
        let mut rho = Matrix::zero(field, d, d);
        for k in 0..d {
            let col = assemble_column(&left_shifted, &left_factors.solutions[k], d, true);
            if let Some(t2) = &left_factors.alternates[k] {
                internal(
                    assemble_column(&left_shifted, t2, d, true) == col,
                    "the left extension depends on the factorization chosen",
                )?;
            }
            for r in 0..d {
                lambda.set(r, k, col[r].clone());
            }
            let col = assemble_column(&right_shifted, &right_factors.solutions[k], d, false);
            if let Some(t2) = &right_factors.alternates[k] {
                internal(
                    assemble_column(&right_shifted, t2, d, false) == col,
                    "the right extension depends on the factorization chosen",
                )?;
            }
            for r in 0..d {
                rho.set(r, k, col[r].clone());
            }
        }
        let image = Multiplier { lambda, rho };
        let coords = gamma.target.coordinates_of(&image).ok_or_else(|| {
            Error::PropositionViolation(
                "the extension of a basis multiplier is not itself a multiplier".into(),
            )
        })?;
        images.push(image);
        columns.push(coords);
    }
    let matrix = Matrix::from_fn(field, gamma.target.dim(), ma.dim(), |r, c| {
        columns[c][r].clone()
    });

    internal(
        matrix.apply(&ma.unit) == gamma.target.unit,
        "the extension is not unital",
    )?;
    for x in 0..ma.dim() {
        for y in 0..ma.dim() {
            let of_product = matrix.apply(&ma.algebra.mul_basis(x, y));
            let product_of = gamma
                .target
                .algebra
                .mul(&matrix.apply(&ma.algebra.basis_element(x)), &matrix.apply(&ma.algebra.basis_element(y)));
            internal(
                of_product == product_of,
                "the extension is not multiplicative",
            )?;
        }
    }
    for i in 0..n {
        internal(
            matrix.apply(&ma.embed(&a.basis_element(i)))
                == gamma.image_coordinates(&a.basis_element(i)),
            "the extension does not restrict to the original hom",
        )?;
    }
    let image = Subspace::from_spanning(field, gamma.target.dim(), &columns);
    Ok(ExtendedHom {
        source: ma,
        matrix,
        images,
        image,
    })
}

/// Checks functoriality of the extension: for composable non-degenerate
/// homs `γ: A → M(B)` and `δ: B → M(C)`, the composite `δ₁∘γ: A → M(C)`
/// is again non-degenerate and `(δ₁∘γ)₁ = δ₁∘γ₁`.
pub fn functoriality_check(
    gamma: &NonDegenerateHom,
    delta: &NonDegenerateHom,
) -> Result<bool> {
    if gamma.target.base != delta.source {
        return Err(Error::PreconditionViolated(
            "the homs do not compose: γ must land in the multiplier algebra of δ's source"
                .into(),
        ));
    }
    let delta_ext = extend_hom(delta)?;
    let composite_images: Vec<Multiplier> = (0..gamma.source.dim())
        .map(|i| {
            let in_mb = gamma.image_coordinates(&gamma.source.basis_element(i));
            delta.target.multiplier_of(&delta_ext.matrix.apply(&in_mb))
        })
        .collect();
    let composite = NonDegenerateHom::new(&gamma.source, &delta.target, composite_images)?;
    if !check_nondegenerate_hom(&composite).nondegenerate {
        return Err(Error::NondegeneracyFails(
            "the composite δ₁∘γ is degenerate".into(),
        ));
    }
    let gamma_ext = extend_hom(gamma)?;
    let composite_ext = extend_hom(&composite)?;
    Ok(composite_ext.matrix == delta_ext.matrix.matmul(&gamma_ext.matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::multiplier::realize_in_unital;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Q
    }

    fn multiplier_algebra_of(a: &FiniteAlgebra) -> MultiplierAlgebra {
        compute_multiplier_algebra(a).unwrap()
    }

    #[test]
    fn unital_homs_are_nondegenerate_iff_unit_goes_to_unit() {
        let a = fixtures::finite_functions(2, q());
        let b = fixtures::finite_functions(3, q());
        let mb = multiplier_algebra_of(&b);
        // δ₁ ↦ δ₁, δ₂ ↦ δ₂+δ₃ sends 1 to 1.
        let good = Matrix::from_fn(q(), 3, 2, |r, c| {
            if (r == 0 && c == 0) || (r > 0 && c == 1) {
                q().one()
            } else {
                q().zero()
            }
        });
        let gamma = NonDegenerateHom::from_element_map(&a, &mb, &good).unwrap();
        assert!(check_nondegenerate_hom(&gamma).nondegenerate);
        // δ₁ ↦ δ₁, δ₂ ↦ δ₂ misses δ₃: the unit does not go to the unit.
        let partial = Matrix::from_fn(q(), 3, 2, |r, c| {
            if r == c {
                q().one()
            } else {
                q().zero()
            }
        });
        let gamma = NonDegenerateHom::from_element_map(&a, &mb, &partial).unwrap();
        let verdict = check_nondegenerate_hom(&gamma);
        assert!(!verdict.nondegenerate);
        assert_eq!(verdict.left_product.dim(), 2);
        // The zero map is as degenerate as it gets.
        let zero = NonDegenerateHom::from_element_map(&a, &mb, &Matrix::zero(q(), 3, 2)).unwrap();
        assert_eq!(check_nondegenerate_hom(&zero).left_product.dim(), 0);
    }

    #[test]
    fn pullbacks_of_functions_are_nondegenerate() {
        // X = 4 points onto Y = 2 points; and a non-surjective map, which
        // is still non-degenerate because every δₓ = δₓ·γ(δ_{α(x)}).
        for alpha in [vec![0, 1, 0, 1], vec![0, 0, 0, 0]] {
            let gamma = NonDegenerateHom::pullback(&alpha, 2, q()).unwrap();
            assert!(check_nondegenerate_hom(&gamma).nondegenerate);
        }
    }

    #[test]
    fn multiplicativity_is_validated() {
        let a = fixtures::finite_functions(2, q());
        let mb = multiplier_algebra_of(&a);
        // δ₁ ↦ δ₁, δ₂ ↦ δ₁ gives γ(δ₁δ₂) = γ(0) = 0 ≠ δ₁ = γ(δ₁)γ(δ₂).
        let bad = Matrix::from_fn(q(), 2, 2, |r, _| {
            if r == 0 {
                q().one()
            } else {
                q().zero()
            }
        });
        let err = NonDegenerateHom::from_element_map(&a, &mb, &bad).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
    }

    #[test]
    fn extension_of_a_unital_source_changes_nothing() {
        // A unital: M(A) = A, and γ₁ is γ itself in the canonical bases.
        let a = fixtures::matrix_units(2, q());
        let ma = multiplier_algebra_of(&a);
        let gamma = NonDegenerateHom::embedding(&ma);
        let ext = extend_hom(&gamma).unwrap();
        assert_eq!(ext.matrix, Matrix::identity(q(), 4));
    }

    #[test]
    fn extension_of_the_embedding_is_the_identity() {
        // A = the staircase is idempotent and non-unital: the embedding
        // A → M(A) extends to the identity on all of M(A).
        let a = fixtures::example_1_16(q());
        let ma = multiplier_algebra_of(&a);
        let gamma = NonDegenerateHom::embedding(&ma);
        let ext = extend_hom(&gamma).unwrap();
        assert_eq!(ext.matrix, Matrix::identity(q(), 6));
    }

    #[test]
    fn staircase_inclusion_extends_to_the_realization_in_matrix_units() {
        // γ: A ↪ M₃ (positions of the staircase), which is non-degenerate;
        // γ₁ embeds M(A) into M₃ with image the realization subspace
        // that realize_in_unital computes independently.
        let a = fixtures::example_1_16(q());
        let b = fixtures::matrix_units(3, q());
        let mb = multiplier_algebra_of(&b);
        let positions = [(1usize, 1usize), (1, 2), (1, 3), (2, 3), (3, 3)];
        let inclusion = Matrix::from_fn(q(), 9, 5, |r, c| {
            let (row, col) = positions[c];
            if r == (row - 1) * 3 + (col - 1) {
                q().one()
            } else {
                q().zero()
            }
        });
        let gamma = NonDegenerateHom::from_element_map(&a, &mb, &inclusion).unwrap();
        let ext = extend_hom(&gamma).unwrap();
        assert_eq!(ext.source.dim(), 6);
        assert_eq!(ext.image.dim(), 6);
        // M(B) = B here since B is unital, so M(B) coordinates are B
        // coordinates and the image can be compared with the realization.
        let a_inside_b = Subspace::from_spanning(
            q(),
            9,
            &(0..5).map(|c| inclusion.col(c)).collect::<Vec<_>>(),
        );
        let realization = realize_in_unital(&b, &a_inside_b).unwrap();
        assert_eq!(ext.image, realization.realization);
    }

    #[test]
    fn pullback_extensions_compose_functorially() {
        // X (4 points) → Y (3 points) → Z (2 points): the extension of the
        // composite pullback is the composite of the extensions, and both
        // are pullbacks along the composite map.
        let alpha = [0usize, 1, 2, 1]; // X → Y
        let beta = [0usize, 1, 1]; // Y → Z
        let delta = NonDegenerateHom::pullback(&alpha, 3, q()).unwrap(); // F(Y) → M(F(X))
        let gamma = NonDegenerateHom::pullback(&beta, 2, q()).unwrap(); // F(Z) → M(F(Y))
        assert!(functoriality_check(&gamma, &delta).unwrap());
        // The composite pullback is along x ↦ beta[alpha[x]].
        let composed: Vec<usize> = alpha.iter().map(|&x| beta[x]).collect();
        let direct = NonDegenerateHom::pullback(&composed, 2, q()).unwrap();
        let delta_ext = extend_hom(&delta).unwrap();
        let via_extension = delta_ext.matrix.matmul(&gamma.matrix_into_target());
        assert_eq!(via_extension, direct.matrix_into_target());
    }

    #[test]
    fn functoriality_on_a_matrix_unit_inclusion_chain() {
        // UT₂ ↪ M₂ = M(M₂), then the embedding of M₂.
        let a = fixtures::upper_triangular(2, q());
        let b = fixtures::matrix_units(2, q());
        let mb = multiplier_algebra_of(&b);
        let positions = [(1usize, 1usize), (1, 2), (2, 2)];
        let inclusion = Matrix::from_fn(q(), 4, 3, |r, c| {
            let (row, col) = positions[c];
            if r == (row - 1) * 2 + (col - 1) {
                q().one()
            } else {
                q().zero()
            }
        });
        let gamma = NonDegenerateHom::from_element_map(&a, &mb, &inclusion).unwrap();
        let delta = NonDegenerateHom::embedding(&mb);
        assert!(functoriality_check(&gamma, &delta).unwrap());
    }

    #[test]
    fn degenerate_homs_are_refused_by_extension() {
        let a = fixtures::finite_functions(2, q());
        let mb = multiplier_algebra_of(&a);
        let partial = Matrix::from_fn(q(), 2, 2, |r, c| {
            if r == 0 && c == 0 {
                q().one()
            } else {
                q().zero()
            }
        });
        let gamma = NonDegenerateHom::from_element_map(&a, &mb, &partial).unwrap();
        let err = extend_hom(&gamma).unwrap_err();
        assert!(matches!(err, Error::NondegeneracyFails(_)));
    }

    #[test]
    fn bimodule_round_trip_recovers_the_hom() {
        let alpha = [0usize, 1, 0];
        let gamma = NonDegenerateHom::pullback(&alpha, 2, q()).unwrap();
        let bm = hom_to_bimodule(&gamma).unwrap();
        assert!(bm.is_idempotent());
        let back = bimodule_to_hom(&bm, gamma.target()).unwrap();
        for i in 0..gamma.source().dim() {
            assert_eq!(back.image(i), gamma.image(i));
        }
        // And the other direction: hom_to_bimodule(back) == bm.
        assert_eq!(hom_to_bimodule(&back).unwrap(), bm);
    }

    #[test]
    fn bimodule_round_trip_over_gf2() {
        // The coordinate swap on functions over GF(2) is an algebra
        // automorphism; its bimodule and hom forms convert back and forth.
        let f = Field::Fp(2);
        let a = fixtures::finite_functions(2, f);
        let mb = multiplier_algebra_of(&a);
        let swap = Matrix::from_fn(f, 2, 2, |r, c| if r != c { f.one() } else { f.zero() });
        let gamma = NonDegenerateHom::from_element_map(&a, &mb, &swap).unwrap();
        let bm = hom_to_bimodule(&gamma).unwrap();
        let back = bimodule_to_hom(&bm, &mb).unwrap();
        for i in 0..2 {
            assert_eq!(back.image(i), gamma.image(i));
        }
    }

    #[test]
    fn identity_hom_gives_the_regular_bimodule() {
        let a = fixtures::matrix_units(2, q());
        let ma = multiplier_algebra_of(&a);
        let gamma = NonDegenerateHom::embedding(&ma);
        let bm = hom_to_bimodule(&gamma).unwrap();
        for i in 0..a.dim() {
            assert_eq!(bm.left_action(i), a.basis_left_mult(i));
            assert_eq!(bm.right_action(i), a.basis_right_mult(i));
        }
    }

    #[test]
    fn unbalanced_bimodules_are_rejected() {
        // Left regular action, zero right action: the balance identity
        // (b·a)·b' = b·(a·b') fails.
        let a = fixtures::finite_functions(2, q());
        let left: Vec<Matrix> = (0..2).map(|i| a.basis_left_mult(i).clone()).collect();
        let right = vec![Matrix::zero(q(), 2, 2), Matrix::zero(q(), 2, 2)];
        let err = Bimodule::new(&a, &a, left, right).unwrap_err();
        assert!(matches!(err, Error::BimoduleAxiomFails(_)));
    }

    #[test]
    fn non_idempotent_bimodules_cannot_become_homs() {
        // A = span{e₁₁} acting on B = M₂ by actual multiplication: a
        // perfectly valid bimodule, but e₁₁·M₂ is only the first row.
        let a = fixtures::subalgebra_of_matrix_units(2, &[(1, 1)], q()).unwrap();
        let b = fixtures::matrix_units(2, q());
        let mb = multiplier_algebra_of(&b);
        let e11 = b.basis_element(0);
        let left = vec![b.left_mult_matrix(&e11)];
        let right = vec![b.right_mult_matrix(&e11)];
        let bm = Bimodule::new(&a, &b, left, right).unwrap();
        assert!(!bm.is_idempotent());
        let err = bimodule_to_hom(&bm, &mb).unwrap_err();
        assert!(matches!(err, Error::BimoduleAxiomFails(_)));
    }
}
