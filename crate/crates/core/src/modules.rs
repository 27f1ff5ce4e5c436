//! Finite modules over a finite-dimensional algebra.
//!
//! A left module is a list of action matrices, one per algebra basis
//! element, validated against the algebra product on construction.  On top
//! of that this file provides balanced tensor products `P ⊗_A Q`, the
//! firmness test for a module (`A ⊗_A M → M` bijective), the four
//! equivalent descriptions of firm modules when the algebra has local
//! units, extension of scalars to the multiplier algebra together with its
//! unit map `η_M` and the triangle identities, and spaces of module
//! homomorphisms with the induced-hom half of the adjunction.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, vec_is_zero, vec_zero, Matrix, QuotientSpace, Subspace};
use crate::multiplier::MultiplierAlgebra;
use crate::scalar::{Field, Scalar};

/// Internal-consistency assertion: these conditions are guaranteed by the
/// mathematics, so a failure means the workbench itself is wrong.
fn internal(check: bool, msg: &str) -> Result<()> {
    if check {
        Ok(())
    } else {
        Err(Error::PropositionViolation(msg.to_string()))
    }
}

/// A finite-dimensional left module over a [`FiniteAlgebra`], given by the
/// matrices of the action of each algebra basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    algebra: FiniteAlgebra,
    dim: usize,
    /// `action[i]` is the `dim × dim` matrix of `m ↦ bᵢ·m`.
    action: Vec<Matrix>,
}

impl FiniteModule {
    /// Builds and validates a left module.  `action[i]` must be the matrix
    /// of the action of the `i`-th algebra basis element; the constructor
    /// checks shapes, fields, and the axiom `(bᵢbⱼ)·m = bᵢ·(bⱼ·m)`.
    pub fn new(algebra: &FiniteAlgebra, dim: usize, action: Vec<Matrix>) -> Result<FiniteModule> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "need one action matrix per algebra basis element: got {}, need {}",
                action.len(),
                algebra.dim()
            )));
        }
        for (i, mat) in action.iter().enumerate() {
            if mat.field != algebra.field() {
                return Err(Error::FieldMismatch(format!(
                    "action matrix {} is over {}, module algebra is over {}",
                    i,
                    mat.field.tag(),
                    algebra.field().tag()
                )));
            }
            if mat.rows != dim || mat.cols != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix {} is {}×{}, expected {dim}×{dim}",
                    i, mat.rows, mat.cols
                )));
            }
        }
        let module = FiniteModule {
            algebra: algebra.clone(),
            dim,
            action,
        };
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                let product_action = module.action_of(&algebra.mul_basis(i, j));
                let composed = module.action[i].matmul(&module.action[j]);
                if product_action != composed {
                    return Err(Error::ModuleAxiomFails(format!(
                        "({}·{})·m ≠ {}·({}·m)",
                        algebra.labels()[i],
                        algebra.labels()[j],
                        algebra.labels()[i],
                        algebra.labels()[j]
                    )));
                }
            }
        }
        Ok(module)
    }

    /// The algebra acting on this module.
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// The scalar field.
    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// Dimension of the module as a vector space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The action matrix of the `i`-th algebra basis element.
    pub fn action_matrix(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// The action matrix of an arbitrary algebra element.
    pub fn action_of(&self, a: &[Scalar]) -> Matrix {
        assert_eq!(a.len(), self.algebra.dim(), "element has wrong length");
        let mut total = Matrix::zero(self.field(), self.dim, self.dim);
        for (i, coeff) in a.iter().enumerate() {
            if !coeff.is_zero() {
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        let term = coeff.mul(self.action[i].at(r, c));
                        total.set(r, c, total.at(r, c).add(&term));
                    }
                }
            }
        }
        total
    }

    /// `a·m` for an algebra element `a` and module element `m`.
    pub fn act(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.action_of(a).apply(m)
    }

    /// The regular module: `A` acting on itself by left multiplication.
    pub fn regular(algebra: &FiniteAlgebra) -> FiniteModule {
        let action = (0..algebra.dim())
            .map(|i| algebra.basis_left_mult(i).clone())
            .collect();
        FiniteModule::new(algebra, algebra.dim(), action)
            .expect("left multiplication always satisfies the module axiom")
    }

    /// A `dim`-dimensional space on which every algebra element acts as 0.
    pub fn zero_action(algebra: &FiniteAlgebra, dim: usize) -> FiniteModule {
        let action = (0..algebra.dim())
            .map(|_| Matrix::zero(algebra.field(), dim, dim))
            .collect();
        FiniteModule::new(algebra, dim, action).expect("the zero action is a module")
    }

    /// Direct sum of two modules over the same algebra.
    pub fn direct_sum(&self, other: &FiniteModule) -> Result<FiniteModule> {
        if self.algebra != other.algebra {
            return Err(Error::PreconditionViolated(
                "direct sum needs modules over the same algebra".into(),
            ));
        }
        let total = self.dim + other.dim;
        let action = (0..self.algebra.dim())
            .map(|i| {
                Matrix::from_fn(self.field(), total, total, |r, c| {
                    if r < self.dim && c < self.dim {
                        self.action[i].at(r, c).clone()
                    } else if r >= self.dim && c >= self.dim {
                        other.action[i].at(r - self.dim, c - self.dim).clone()
                    } else {
                        self.field().zero()
                    }
                })
            })
            .collect();
        FiniteModule::new(&self.algebra, total, action)
    }

    /// The smallest subspace containing `A·M` — the span of all columns of
    /// all action matrices.
    pub fn action_span(&self) -> Subspace {
        let mut columns = Vec::new();
        for mat in &self.action {
            for c in 0..self.dim {
                columns.push(mat.col(c));
            }
        }
        Subspace::from_spanning(self.field(), self.dim, &columns)
    }
}

/// The balanced tensor product `P ⊗_A Q` of a right module `P` (given by
/// the matrices of `p ↦ p·bᵢ`) and a left module `Q` (matrices of
/// `q ↦ bᵢ·q`): the quotient of `P ⊗ Q` by `span{ p·a ⊗ q − p ⊗ a·q }`.
/// Pure tensors use row-major indexing: `p_x ⊗ q_k` sits at `x·dim(Q) + k`.
pub fn balanced_tensor(
    field: Field,
    right_on_p: &[Matrix],
    left_on_q: &[Matrix],
) -> Result<QuotientSpace> {
    if right_on_p.len() != left_on_q.len() {
        return Err(Error::DimensionMismatch(format!(
            "balanced tensor needs matching algebras: {} right-action matrices vs {} left-action",
            right_on_p.len(),
            left_on_q.len()
        )));
    }
    let p_dim = right_on_p.first().map_or(0, |m| m.rows);
    let q_dim = left_on_q.first().map_or(0, |m| m.rows);
    let ambient = p_dim * q_dim;
    let index = |x: usize, k: usize| x * q_dim + k;
    let mut relations: Vec<Vec<Scalar>> = Vec::new();
    for (ra, la) in right_on_p.iter().zip(left_on_q.iter()) {
        for x in 0..p_dim {
            for k in 0..q_dim {
                // (p_x·a) ⊗ q_k − p_x ⊗ (a·q_k)
                let mut rel = vec_zero(field, ambient);
                for c in 0..p_dim {
                    let coeff = ra.at(c, x);
                    if !coeff.is_zero() {
                        rel[index(c, k)] = rel[index(c, k)].add(coeff);
                    }
                }
                for l in 0..q_dim {
                    let coeff = la.at(l, k);
                    if !coeff.is_zero() {
                        rel[index(x, l)] = rel[index(x, l)].sub(coeff);
                    }
                }
                if !vec_is_zero(&rel) {
                    relations.push(rel);
                }
            }
        }
    }
    Ok(Subspace::from_spanning(field, ambient, &relations).quotient())
}

/// What [`tensor_over_a`] reports about `A ⊗_A M`.
#[derive(Debug, Clone)]
pub struct TensorReport {
    /// Coordinates for `A ⊗_A M` inside the ambient `A ⊗ M`.
    pub quotient: QuotientSpace,
    /// Dimension of `A ⊗_A M`.
    pub dim: usize,
    /// The matrix of the action-induced map `A ⊗_A M → M`, `a⊗m ↦ a·m`,
    /// on quotient coordinates.
    pub induced: Matrix,
    /// Is the induced map bijective — is `M` a firm module?
    pub firm: bool,
}

/// Computes the balanced tensor square `A ⊗_A M` for a left module `M`,
/// with `A` as the right regular module, and tests whether the induced map
/// to `M` is bijective (firmness of the module).
pub fn tensor_over_a(m: &FiniteModule) -> TensorReport {
    let a = m.algebra();
    let n = a.dim();
    let d = m.dim();
    let right_on_a: Vec<Matrix> = (0..n).map(|i| a.basis_right_mult(i).clone()).collect();
    let quotient = balanced_tensor(a.field(), &right_on_a, &m.action)
        .expect("a module always matches its own algebra");
    // a ⊗ m ↦ a·m on the ambient A ⊗ M, then restricted along the lift.
    let mu = Matrix::from_fn(a.field(), d, n * d, |r, col| {
        let (i, k) = (col / d, col % d);
        m.action[i].at(r, k).clone()
    });
    let induced = mu.matmul(&quotient.lift);
    let dim = quotient.dim();
    let firm = dim == d && induced.inverse().is_some();
    TensorReport {
        quotient,
        dim,
        induced,
        firm,
    }
}

/// The four descriptions compared by [`module_equivalences`].  When the
/// algebra has local units the four are equivalent, and the function
/// verifies that they agree on the given module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleEquivalences {
    /// `A ⊗_A M → M` is bijective.
    pub firm: bool,
    /// `A·M = M`.
    pub full_action: bool,
    /// Some single `a ∈ A` acts as the identity on all of `M`.
    pub pointwise_unit: bool,
    /// Every multiplier acts through `A`: transporting the `M(A)`-action
    /// onto `M` along the firm isomorphism, each `x ∈ M(A)` acts as some
    /// element of `A` does.  (`false` whenever `M` is not firm, since the
    /// transport needs the isomorphism.)
    pub multiplier_approximated: bool,
}

impl ModuleEquivalences {
    /// The common truth value of the four equivalent conditions.
    pub fn verdict(&self) -> bool {
        self.firm
    }
}

/// Kronecker product `lam ⊗ I_d` acting on `P ⊗ Q` coordinates
/// (`x·d + k`): applies `lam` to the left tensor factor.
fn left_factor_map(lam: &Matrix, d: usize) -> Matrix {
    let n_rows = lam.rows * d;
    let n_cols = lam.cols * d;
    Matrix::from_fn(lam.field, n_rows, n_cols, |rr, cc| {
        let (r, k) = (rr / d, rr % d);
        let (i, l) = (cc / d, cc % d);
        if k == l {
            lam.at(r, i).clone()
        } else {
            lam.field.zero()
        }
    })
}

/// Solves `Σᵢ aᵢ·action[i] = target` for an algebra element `a`, i.e. finds
/// an element of `A` acting on `M` as the given matrix does.
fn element_acting_as(m: &FiniteModule, target: &Matrix) -> Option<Vec<Scalar>> {
    let n = m.algebra().dim();
    let d = m.dim();
    let system = Matrix::from_fn(m.field(), d * d, n, |row, i| {
        let (r, c) = (row / d, row % d);
        m.action[i].at(r, c).clone()
    });
    solve(&system, &target.vectorize())
}

/// For an algebra `A` with (two-sided) local units, evaluates the four
/// equivalent descriptions of a firm module and checks that they agree:
/// firmness, `A·M = M`, a single element of `A` acting as the identity,
/// and every multiplier action being realized by an element of `A`.
///
/// Errors with [`Error::NoLocalUnits`] when `A` lacks two-sided local
/// units (the hypothesis under which the equivalence holds), and with
/// [`Error::PropositionViolation`] if the four verdicts ever disagree.
pub fn module_equivalences(m: &FiniteModule) -> Result<ModuleEquivalences> {
    let a = m.algebra();
    if !crate::units::has_local_units(a).two_sided {
        return Err(Error::NoLocalUnits(
            "the four module descriptions are only equivalent over an algebra with \
             two-sided local units"
                .into(),
        ));
    }
    let d = m.dim();
    let tensor = tensor_over_a(m);
    let firm = tensor.firm;

    let full_action = m.action_span() == Subspace::full(m.field(), d);

    // A single a ∈ A with a·m = m for every m: the identity matrix realized
    // inside the span of the action matrices.
    let pointwise_unit = element_acting_as(m, &Matrix::identity(m.field(), d)).is_some();

    // Transport the M(A)-action on A ⊗_A M over to M along the firm
    // isomorphism and ask whether each multiplier acts as an element of A.
    let multiplier_approximated = if firm {
        let ma = crate::multiplier::compute_multiplier_algebra(a)?;
        let inverse = tensor
            .induced
            .inverse()
            .expect("firm means the induced map is invertible");
        let mut all_realized = true;
        for (x, pair) in ma.basis.iter().enumerate() {
            let ambient_map = left_factor_map(&pair.lambda, d);
            // λ_x(a·b) = λ_x(a)·b makes x ⊗ id balanced, so it descends.
            internal(
                tensor
                    .quotient
                    .relations
                    .image_under(&ambient_map)
                    .is_subspace_of(&tensor.quotient.relations),
                "a multiplier action failed to preserve the balancing relations",
            )?;
            let on_tensor = tensor
                .quotient
                .proj
                .matmul(&ambient_map)
                .matmul(&tensor.quotient.lift);
            let transported = tensor.induced.matmul(&on_tensor).matmul(&inverse);
            // Sanity: elements of A transported this way act as themselves.
            if let Some(b) = ma.preimage_in_base(&ma.algebra.basis_element(x)) {
                internal(
                    transported == m.action_of(&b),
                    "transporting an embedded element changed its action",
                )?;
            }
            if element_acting_as(m, &transported).is_none() {
                all_realized = false;
                break;
            }
        }
        all_realized
    } else {
        false
    };

    let report = ModuleEquivalences {
        firm,
        full_action,
        pointwise_unit,
        multiplier_approximated,
    };
    internal(
        firm == full_action && firm == pointwise_unit && firm == multiplier_approximated,
        &format!(
            "the four equivalent module descriptions disagree: firm={firm}, \
             full_action={full_action}, pointwise_unit={pointwise_unit}, \
             multiplier_approximated={multiplier_approximated}"
        ),
    )?;
    Ok(report)
}

/// What [`extension_of_scalars`] returns.
#[derive(Debug, Clone)]
pub struct ScalarExtensionReport {
    /// `N = M(A) ⊗_A M` as a module over the multiplier algebra, verified
    /// unital (the multiplier unit acts as the identity).
    pub module: FiniteModule,
    /// Coordinates of `N` inside the ambient `M(A) ⊗ M`.
    pub quotient: QuotientSpace,
    /// The unit map `η_M : M → N`, `m ↦ 1 ⊗ m`, as a matrix.  It is
    /// `A`-linear for the action of `A` on `N` through the embedding.
    pub eta: Matrix,
    /// Is `η_M` bijective?
    pub eta_iso: bool,
    /// Both triangle identities of the extension/restriction adjunction,
    /// verified on `N`: `ε_N ∘ (extension of η_M) = id` and
    /// `ε_N ∘ η_{N as A-module} = id`.
    pub triangle_identities: bool,
}

/// The extension-of-scalars construction used throughout this module: the
/// tensor quotient `M(A) ⊗_A M`, the `M(A)`-action on the left factor, and
/// the evaluation map down to `target` (a unital `M(A)`-module containing
/// the data of `f : M → target`).
fn multiplier_tensor(ma: &MultiplierAlgebra, m: &FiniteModule) -> Result<(QuotientSpace, Vec<Matrix>)> {
    let field = m.field();
    let mm = ma.dim();
    // Right A-action on M(A): x ↦ x·ι(a).
    let right_on_ma: Vec<Matrix> = (0..ma.base.dim())
        .map(|i| {
            ma.algebra
                .right_mult_matrix(&ma.embed(&ma.base.basis_element(i)))
        })
        .collect();
    let quotient = balanced_tensor(field, &right_on_ma, module_action(m))?;
    // M(A) acts on the left tensor factor; multiplication in M(A) is
    // associative, so the action descends to the quotient.
    let mut action = Vec::with_capacity(mm);
    for p in 0..mm {
        let ambient_map = left_factor_map(ma.algebra.basis_left_mult(p), m.dim());
        internal(
            quotient
                .relations
                .image_under(&ambient_map)
                .is_subspace_of(&quotient.relations),
            "the multiplier action failed to preserve the balancing relations",
        )?;
        action.push(quotient.proj.matmul(&ambient_map).matmul(&quotient.lift));
    }
    Ok((quotient, action))
}

fn module_action(m: &FiniteModule) -> &[Matrix] {
    &m.action
}

/// Extends scalars along `A ↪ M(A)`: builds `N = M(A) ⊗_A M` as a unital
/// module over the multiplier algebra, the natural map `η_M : M → N`,
/// and verifies the triangle identities of the adjunction between
/// extension and restriction.  For firm `M` (over idempotent `A`), `η_M`
/// is an isomorphism, reported in `eta_iso`.
pub fn extension_of_scalars(
    ma: &MultiplierAlgebra,
    m: &FiniteModule,
) -> Result<ScalarExtensionReport> {
    if m.algebra() != &ma.base {
        return Err(Error::PreconditionViolated(
            "extension of scalars needs a module over the multiplier algebra's base".into(),
        ));
    }
    let field = m.field();
    let d = m.dim();
    let mm = ma.dim();
    let (quotient, action) = multiplier_tensor(ma, m)?;
    let t = quotient.dim();
    let module = FiniteModule::new(&ma.algebra, t, action).map_err(|e| {
        Error::PropositionViolation(format!(
            "extension of scalars produced an invalid module: {e}"
        ))
    })?;
    internal(
        module.action_of(&ma.unit) == Matrix::identity(field, t),
        "the multiplier unit does not act as the identity on the extended module",
    )?;

    // η_M(m_k) = class(1 ⊗ m_k).
    let unit_tensor = Matrix::from_fn(field, mm * d, d, |row, k| {
        let (p, l) = (row / d, row % d);
        if l == k {
            ma.unit[p].clone()
        } else {
            field.zero()
        }
    });
    let eta = quotient.proj.matmul(&unit_tensor);
    // η is A-linear: η(a·m) = ι(a)·η(m).
    for i in 0..ma.base.dim() {
        let through_m = eta.matmul(m.action_matrix(i));
        let through_n = module
            .action_of(&ma.embed(&ma.base.basis_element(i)))
            .matmul(&eta);
        internal(
            through_m == through_n,
            "η_M is not A-linear on the extended module",
        )?;
    }
    let eta_iso = t == d && eta.inverse().is_some();

    // Triangle identities, both verified on N = the extension of M.
    // ε_N : M(A) ⊗_A N → N is the action map x ⊗ n ↦ x·n.
    let restricted = restrict_to_base(ma, &module)?;
    let (quotient2, action2) = multiplier_tensor(ma, &restricted)?;
    let eval_ambient = Matrix::from_fn(field, t, mm * t, |r, col| {
        let (p, l) = (col / t, col % t);
        module.action_matrix(p).at(r, l).clone()
    });
    internal(
        quotient2
            .relations
            .image_under(&eval_ambient)
            .dim()
            == 0,
        "the evaluation map is not balanced over A",
    )?;
    let epsilon = eval_ambient.matmul(&quotient2.lift);
    internal(
        {
            let t2 = quotient2.dim();
            let module2 = FiniteModule::new(&ma.algebra, t2, action2).map_err(|e| {
                Error::PropositionViolation(format!(
                    "extension of scalars produced an invalid module: {e}"
                ))
            })?;
            // ε_N is M(A)-linear.
            (0..mm).all(|p| {
                epsilon.matmul(module2.action_matrix(p))
                    == module.action_matrix(p).matmul(&epsilon)
            })
        },
        "the counit of the adjunction is not multiplier-linear",
    )?;
    // Triangle 1: ε_N ∘ F(η_M) = id on N, where F(η_M) = id ⊗ η_M.
    let eta_extended_ambient = Matrix::from_fn(field, mm * t, mm * d, |row, col| {
        let (p, l) = (row / t, row % t);
        let (q, k) = (col / d, col % d);
        if p == q {
            eta.at(l, k).clone()
        } else {
            field.zero()
        }
    });
    let f_eta = quotient2
        .proj
        .matmul(&eta_extended_ambient)
        .matmul(&quotient.lift);
    let triangle_one = epsilon.matmul(&f_eta) == Matrix::identity(field, t);
    // Triangle 2: ε_N ∘ η_{G(N)} = id on N, where η_{G(N)}(n) = 1 ⊗ n.
    let unit_tensor_n = Matrix::from_fn(field, mm * t, t, |row, k| {
        let (p, l) = (row / t, row % t);
        if l == k {
            ma.unit[p].clone()
        } else {
            field.zero()
        }
    });
    let eta_gn = quotient2.proj.matmul(&unit_tensor_n);
    let triangle_two = epsilon.matmul(&eta_gn) == Matrix::identity(field, t);
    internal(
        triangle_one && triangle_two,
        "a triangle identity of the extension/restriction adjunction fails",
    )?;

    Ok(ScalarExtensionReport {
        module,
        quotient,
        eta,
        eta_iso,
        triangle_identities: triangle_one && triangle_two,
    })
}

/// Restricts a module over the multiplier algebra back to the base algebra
/// along the embedding `A ↪ M(A)`.
pub fn restrict_to_base(ma: &MultiplierAlgebra, n: &FiniteModule) -> Result<FiniteModule> {
    if n.algebra() != &ma.algebra {
        return Err(Error::PreconditionViolated(
            "restriction needs a module over the multiplier algebra".into(),
        ));
    }
    let action = (0..ma.base.dim())
        .map(|i| n.action_of(&ma.embed(&ma.base.basis_element(i))))
        .collect();
    FiniteModule::new(&ma.base, n.dim(), action)
}

/// The space of module homomorphisms `P → Q` (matrices commuting with the
/// two actions), as a subspace of row-major-vectorized `dim(Q) × dim(P)`
/// matrices.
pub fn module_hom_space(p: &FiniteModule, q: &FiniteModule) -> Result<Subspace> {
    if p.algebra() != q.algebra() {
        return Err(Error::PreconditionViolated(
            "hom spaces need modules over the same algebra".into(),
        ));
    }
    let field = p.field();
    let (dp, dq) = (p.dim(), q.dim());
    let ambient = dq * dp;
    let index = |r: usize, c: usize| r * dp + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..p.algebra().dim() {
        let pa = p.action_matrix(i);
        let qa = q.action_matrix(i);
        // F·P_i − Q_i·F = 0, one scalar equation per matrix entry.
        for r in 0..dq {
            for c in 0..dp {
                let mut row = vec_zero(field, ambient);
                for s in 0..dp {
                    let coeff = pa.at(s, c);
                    if !coeff.is_zero() {
                        row[index(r, s)] = row[index(r, s)].add(coeff);
                    }
                }
                for s in 0..dq {
                    let coeff = qa.at(r, s);
                    if !coeff.is_zero() {
                        row[index(s, c)] = row[index(s, c)].sub(coeff);
                    }
                }
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(field, ambient));
    }
    Ok(nullspace(&Matrix::from_rows(field, rows)))
}

/// The other half of the extension/restriction adjunction: given an
/// `A`-linear map `f : M → N` into (the restriction of) a unital
/// `M(A)`-module `N`, produces the unique `M(A)`-linear map
/// `M(A) ⊗_A M → N` sending `x ⊗ m ↦ x·f(m)`.
pub fn induced_hom(
    ma: &MultiplierAlgebra,
    m: &FiniteModule,
    n: &FiniteModule,
    f: &Matrix,
) -> Result<Matrix> {
    if m.algebra() != &ma.base || n.algebra() != &ma.algebra {
        return Err(Error::PreconditionViolated(
            "induced hom needs an A-module source and an M(A)-module target".into(),
        ));
    }
    if f.rows != n.dim() || f.cols != m.dim() {
        return Err(Error::DimensionMismatch(format!(
            "the map must be {}×{}, got {}×{}",
            n.dim(),
            m.dim(),
            f.rows,
            f.cols
        )));
    }
    if n.action_of(&ma.unit) != Matrix::identity(n.field(), n.dim()) {
        return Err(Error::PreconditionViolated(
            "the target must be a unital module over the multiplier algebra".into(),
        ));
    }
    let restricted = restrict_to_base(ma, n)?;
    for i in 0..ma.base.dim() {
        if f.matmul(m.action_matrix(i)) != restricted.action_matrix(i).matmul(f) {
            return Err(Error::PreconditionViolated(
                "the map to extend along the adjunction is not A-linear".into(),
            ));
        }
    }
    let (quotient, _) = multiplier_tensor(ma, m)?;
    let field = m.field();
    let (mm, d) = (ma.dim(), m.dim());
    // x ⊗ m ↦ x·f(m) on the ambient M(A) ⊗ M.
    let mut ambient = Matrix::zero(field, n.dim(), mm * d);
    for p in 0..mm {
        let xf = n.action_matrix(p).matmul(f);
        for k in 0..d {
            for r in 0..n.dim() {
                ambient.set(r, p * d + k, xf.at(r, k).clone());
            }
        }
    }
    internal(
        quotient.relations.image_under(&ambient).dim() == 0,
        "the induced hom is not balanced over A",
    )?;
    let induced = ambient.matmul(&quotient.lift);
    // The induced map is M(A)-linear by construction; verify it.
    let (_, ext_action) = multiplier_tensor(ma, m)?;
    for (p, act) in ext_action.iter().enumerate() {
        internal(
            induced.matmul(act) == n.action_matrix(p).matmul(&induced),
            "the induced hom is not multiplier-linear",
        )?;
    }
    Ok(induced)
}
