//! Locally finite infinite algebras: finitely supported functions on a
//! countable set and infinite matrix units, with lazily represented
//! multipliers and probe-based verification.
//!
//! These algebras have local units but no unit; a multiplier is known
//! only through finite corners of its action, so equality and agreement
//! are always relative to an explicit finite probe.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Which locally finite family an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Finitely supported functions on the naturals, pointwise product.
    Functions,
    /// Finitely supported infinite matrices, matrix-unit product.
    MatrixUnits,
}

/// A finitely supported element of one of the two families.  The stored
/// maps hold exactly the nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinSuppElement {
    Function {
        field: Field,
        values: BTreeMap<u64, Scalar>,
    },
    Matrix {
        field: Field,
        entries: BTreeMap<(u64, u64), Scalar>,
    },
}

impl FinSuppElement {
    /// The zero function.
    pub fn zero_function(field: Field) -> FinSuppElement {
        FinSuppElement::Function {
            field,
            values: BTreeMap::new(),
        }
    }

    /// The zero matrix.
    pub fn zero_matrix(field: Field) -> FinSuppElement {
        FinSuppElement::Matrix {
            field,
            entries: BTreeMap::new(),
        }
    }

    /// The point mass `δ_x`.
    pub fn delta(field: Field, x: u64) -> FinSuppElement {
        FinSuppElement::function_from(field, &[(x, field.one())])
    }

    /// A function from explicit (index, value) pairs; repeated indices
    /// accumulate, zero values are dropped.
    pub fn function_from(field: Field, pairs: &[(u64, Scalar)]) -> FinSuppElement {
        let mut values: BTreeMap<u64, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            let total = values.get(i).map_or_else(|| v.clone(), |old| old.add(v));
            if total.is_zero() {
                values.remove(i);
            } else {
                values.insert(*i, total);
            }
        }
        FinSuppElement::Function { field, values }
    }

    /// The matrix unit `e_{rc}`.
    pub fn matrix_unit(field: Field, r: u64, c: u64) -> FinSuppElement {
        FinSuppElement::matrix_from(field, &[((r, c), field.one())])
    }

    /// A matrix from explicit ((row, col), value) entries; repeated
    /// positions accumulate, zero values are dropped.
    pub fn matrix_from(field: Field, pairs: &[((u64, u64), Scalar)]) -> FinSuppElement {
        let mut entries: BTreeMap<(u64, u64), Scalar> = BTreeMap::new();
        for (rc, v) in pairs {
            let total = entries.get(rc).map_or_else(|| v.clone(), |old| old.add(v));
            if total.is_zero() {
                entries.remove(rc);
            } else {
                entries.insert(*rc, total);
            }
        }
        FinSuppElement::Matrix { field, entries }
    }

    /// The family this element belongs to.
    pub fn family(&self) -> Family {
        match self {
            FinSuppElement::Function { .. } => Family::Functions,
            FinSuppElement::Matrix { .. } => Family::MatrixUnits,
        }
    }

    /// The scalar field.
    pub fn field(&self) -> Field {
        match self {
            FinSuppElement::Function { field, .. } => *field,
            FinSuppElement::Matrix { field, .. } => *field,
        }
    }

    /// Is this the zero element?
    pub fn is_zero(&self) -> bool {
        match self {
            FinSuppElement::Function { values, .. } => values.is_empty(),
            FinSuppElement::Matrix { entries, .. } => entries.is_empty(),
        }
    }

    /// All indices the support touches (matrix case: rows and columns).
    pub fn support_indices(&self) -> BTreeSet<u64> {
        match self {
            FinSuppElement::Function { values, .. } => values.keys().copied().collect(),
            FinSuppElement::Matrix { entries, .. } => entries
                .keys()
                .flat_map(|&(r, c)| [r, c])
                .collect(),
        }
    }

    /// The coefficient at a function index (zero off the support).
    pub fn value_at(&self, i: u64) -> Scalar {
        match self {
            FinSuppElement::Function { field, values } => {
                values.get(&i).cloned().unwrap_or_else(|| field.zero())
            }
            FinSuppElement::Matrix { field, entries } => entries
                .get(&(i, i))
                .cloned()
                .unwrap_or_else(|| field.zero()),
        }
    }

    /// Sum of two elements of the same family.
    pub fn add(&self, other: &FinSuppElement) -> Result<FinSuppElement> {
        check_compatible(self, other)?;
        match (self, other) {
            (
                FinSuppElement::Function { field, values: a },
                FinSuppElement::Function { values: b, .. },
            ) => {
                let pairs: Vec<_> = a
                    .iter()
                    .map(|(i, v)| (*i, v.clone()))
                    .chain(b.iter().map(|(i, v)| (*i, v.clone())))
                    .collect();
                Ok(FinSuppElement::function_from(*field, &pairs))
            }
            (
                FinSuppElement::Matrix { field, entries: a },
                FinSuppElement::Matrix { entries: b, .. },
            ) => {
                let pairs: Vec<_> = a
                    .iter()
                    .map(|(rc, v)| (*rc, v.clone()))
                    .chain(b.iter().map(|(rc, v)| (*rc, v.clone())))
                    .collect();
                Ok(FinSuppElement::matrix_from(*field, &pairs))
            }
            _ => Err(Error::FamilyMismatch),
        }
    }
}

fn check_compatible(x: &FinSuppElement, y: &FinSuppElement) -> Result<()> {
    if x.family() != y.family() {
        return Err(Error::FamilyMismatch);
    }
    if x.field() != y.field() {
        return Err(Error::FieldMismatch(
            "finitely supported elements over different fields".into(),
        ));
    }
    Ok(())
}

/// The exact product of two finitely supported elements: pointwise for
/// functions, the matrix-unit rule `e_{ab}·e_{cd} = δ_{bc}·e_{ad}` for
/// matrices.
pub fn multiply(x: &FinSuppElement, y: &FinSuppElement) -> Result<FinSuppElement> {
    check_compatible(x, y)?;
    match (x, y) {
        (
            FinSuppElement::Function { field, values: a },
            FinSuppElement::Function { values: b, .. },
        ) => {
            let pairs: Vec<_> = a
                .iter()
                .filter_map(|(i, v)| b.get(i).map(|w| (*i, v.mul(w))))
                .collect();
            Ok(FinSuppElement::function_from(*field, &pairs))
        }
        (
            FinSuppElement::Matrix { field, entries: a },
            FinSuppElement::Matrix { entries: b, .. },
        ) => {
            let mut pairs = Vec::new();
            for (&(i, k), v) in a {
                for (&(kk, j), w) in b {
                    if k == kk {
                        pairs.push(((i, j), v.mul(w)));
                    }
                }
            }
            Ok(FinSuppElement::matrix_from(*field, &pairs))
        }
        _ => Err(Error::FamilyMismatch),
    }
}

/// A two-sided local unit for a finite set of elements: the indicator of
/// the union of supports (functions), or `Σ eᵢᵢ` over every touched row
/// and column index (matrices).  The unit property `e·f = f = f·e` is
/// re-verified on every member before returning.
pub fn local_unit_for(f: &[FinSuppElement]) -> Result<FinSuppElement> {
    let first = f.first().ok_or_else(|| {
        Error::PreconditionViolated("a local unit needs a nonempty set of elements".into())
    })?;
    for x in f {
        check_compatible(first, x)?;
    }
    let field = first.field();
    let indices: BTreeSet<u64> = f.iter().flat_map(|x| x.support_indices()).collect();
    let unit = match first.family() {
        Family::Functions => FinSuppElement::function_from(
            field,
            &indices.iter().map(|&i| (i, field.one())).collect::<Vec<_>>(),
        ),
        Family::MatrixUnits => FinSuppElement::matrix_from(
            field,
            &indices
                .iter()
                .map(|&i| ((i, i), field.one()))
                .collect::<Vec<_>>(),
        ),
    };
    for x in f {
        let left_ok = multiply(&unit, x)? == *x;
        let right_ok = multiply(x, &unit)? == *x;
        if !left_ok || !right_ok {
            return Err(Error::PropositionViolation(
                "the support indicator failed to act as a local unit".into(),
            ));
        }
    }
    Ok(unit)
}

/// The finite corner of a multiplier's action: every nonzero entry
/// `x[r, c]` whose row or column lies in the probe set.
pub type Corner = BTreeMap<(u64, u64), Scalar>;

/// A multiplier of a locally finite algebra, represented lazily by a
/// corner evaluator.  The evaluator must be pure (same probe, same
/// corner), coherent (a larger probe restricts to a smaller one), and
/// row/column finite; [`multiplier_apply`] can spot-check the first two.
#[derive(Clone)]
pub struct LazyMultiplier {
    family: Family,
    field: Field,
    name: String,
    evaluator: Arc<dyn Fn(&BTreeSet<u64>) -> Corner + Send + Sync>,
}

impl fmt::Debug for LazyMultiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LazyMultiplier")
            .field("family", &self.family)
            .field("field", &self.field)
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl LazyMultiplier {
    /// Wraps an arbitrary corner evaluator.  Function-family evaluators
    /// must return diagonal entries only.
    pub fn from_evaluator(
        family: Family,
        field: Field,
        name: &str,
        evaluator: impl Fn(&BTreeSet<u64>) -> Corner + Send + Sync + 'static,
    ) -> LazyMultiplier {
        LazyMultiplier {
            family,
            field,
            name: name.to_string(),
            evaluator: Arc::new(evaluator),
        }
    }

    /// The pointwise multiplier by an arbitrary (not necessarily finitely
    /// supported, not necessarily bounded) function on the naturals.
    pub fn function(
        field: Field,
        name: &str,
        value: impl Fn(u64) -> Scalar + Send + Sync + 'static,
    ) -> LazyMultiplier {
        LazyMultiplier::from_evaluator(Family::Functions, field, name, move |probe| {
            probe
                .iter()
                .filter_map(|&i| {
                    let v = value(i);
                    if v.is_zero() {
                        None
                    } else {
                        Some(((i, i), v))
                    }
                })
                .collect()
        })
    }

    /// The indicator function of a (possibly infinite) set of indices.
    pub fn indicator(
        field: Field,
        name: &str,
        member: impl Fn(u64) -> bool + Send + Sync + 'static,
    ) -> LazyMultiplier {
        LazyMultiplier::function(field, name, move |i| {
            if member(i) {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// The all-ones function: the unit of the multiplier algebra of the
    /// function family.
    pub fn all_ones(field: Field) -> LazyMultiplier {
        LazyMultiplier::indicator(field, "all_ones", |_| true)
    }

    /// The diagonal multiplier `i ↦ Σₖ coeffs[k]·iᵏ`.
    pub fn poly_diag(field: Field, coeffs: Vec<Scalar>) -> LazyMultiplier {
        LazyMultiplier::function(field, "poly_diag", move |i| {
            let x = field.from_int(i as i64);
            let mut power = field.one();
            let mut total = field.zero();
            for c in &coeffs {
                total = total.add(&c.mul(&power));
                power = power.mul(&x);
            }
            total
        })
    }

    /// A banded matrix multiplier, constant along each band: for each
    /// `(offset, coeff)` the entries `x[i, i+offset] = coeff` (indices
    /// staying in the naturals).  Row- and column-finite by construction.
    pub fn banded(field: Field, bands: &[(i64, Scalar)]) -> LazyMultiplier {
        let bands: Vec<(i64, Scalar)> = bands
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .cloned()
            .collect();
        LazyMultiplier::from_evaluator(Family::MatrixUnits, field, "banded", move |probe| {
            let mut corner = Corner::new();
            for &p in probe {
                for (offset, coeff) in &bands {
                    // Row p: entry (p, p+offset).
                    if let Some(col) = (p as i64).checked_add(*offset) {
                        if col >= 0 {
                            corner.insert((p, col as u64), coeff.clone());
                        }
                    }
                    // Column p: entry (p−offset, p).
                    if let Some(row) = (p as i64).checked_sub(*offset) {
                        if row >= 0 {
                            corner.insert((row as u64, p), coeff.clone());
                        }
                    }
                }
            }
            corner
        })
    }

    /// The infinite identity matrix: the unit of the multiplier algebra
    /// of the matrix-unit family.
    pub fn identity_matrix(field: Field) -> LazyMultiplier {
        let mut m = LazyMultiplier::banded(field, &[(0, field.one())]);
        m.name = "identity".into();
        m
    }

    /// The shift `Σᵢ e_{i, i+1}`.
    pub fn shift(field: Field) -> LazyMultiplier {
        let mut m = LazyMultiplier::banded(field, &[(1, field.one())]);
        m.name = "shift".into();
        m
    }

    /// The family the multiplier acts on.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The scalar field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// A display name for diagnostics.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Evaluates the corner over a probe set and validates its shape:
    /// entries must be nonzero, must touch the probe, and (function
    /// family) must be diagonal.
    pub fn corner(&self, probe: &BTreeSet<u64>) -> Result<Corner> {
        let corner = (self.evaluator)(probe);
        for (&(r, c), v) in &corner {
            if v.is_zero() {
                return Err(Error::ContractViolation(format!(
                    "evaluator of '{}' returned an explicit zero at ({r}, {c})",
                    self.name
                )));
            }
            if v.field() != self.field {
                return Err(Error::ContractViolation(format!(
                    "evaluator of '{}' returned a scalar over the wrong field",
                    self.name
                )));
            }
            if !probe.contains(&r) && !probe.contains(&c) {
                return Err(Error::ContractViolation(format!(
                    "evaluator of '{}' returned entry ({r}, {c}) outside the probe corner",
                    self.name
                )));
            }
            if self.family == Family::Functions && r != c {
                return Err(Error::ContractViolation(format!(
                    "function-family evaluator of '{}' returned the off-diagonal entry ({r}, {c})",
                    self.name
                )));
            }
        }
        Ok(corner)
    }

    /// Spot-checks coherence: the corner over each singleton sub-probe
    /// must equal the restriction of the corner over the full probe.
    fn check_coherence(&self, probe: &BTreeSet<u64>, full: &Corner) -> Result<()> {
        for &p in probe {
            let sub = self.corner(&BTreeSet::from([p]))?;
            let restricted: Corner = full
                .iter()
                .filter(|(&(r, c), _)| r == p || c == p)
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            if sub != restricted {
                return Err(Error::ContractViolation(format!(
                    "evaluator of '{}' is incoherent: the corner at {{{p}}} does not \
                     restrict from the larger probe",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

/// Which side a multiplier acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApplySide {
    /// `x·a` — the multiplier on the left.
    Left,
    /// `a·x` — the multiplier on the right.
    Right,
}

fn apply_unverified(
    x: &LazyMultiplier,
    a: &FinSuppElement,
    side: ApplySide,
) -> Result<FinSuppElement> {
    if x.family() != a.family() {
        return Err(Error::FamilyMismatch);
    }
    if x.field() != a.field() {
        return Err(Error::FieldMismatch(
            "multiplier and element over different fields".into(),
        ));
    }
    match a {
        FinSuppElement::Function { field, values } => {
            let probe: BTreeSet<u64> = values.keys().copied().collect();
            let corner = x.corner(&probe)?;
            // Pointwise product; both sides agree (the family is
            // commutative).
            let pairs: Vec<_> = values
                .iter()
                .filter_map(|(&i, v)| corner.get(&(i, i)).map(|w| (i, w.mul(v))))
                .collect();
            Ok(FinSuppElement::function_from(*field, &pairs))
        }
        FinSuppElement::Matrix { field, entries } => {
            let probe: BTreeSet<u64> = match side {
                // (x·a)[i, j] = Σₖ x[i, k]·a[k, j]: columns of x in rows of a.
                ApplySide::Left => entries.keys().map(|&(r, _)| r).collect(),
                // (a·x)[i, j] = Σₖ a[i, k]·x[k, j]: rows of x in columns of a.
                ApplySide::Right => entries.keys().map(|&(_, c)| c).collect(),
            };
            let corner = x.corner(&probe)?;
            let mut pairs = Vec::new();
            match side {
                ApplySide::Left => {
                    for (&(i, k), v) in &corner {
                        if !probe.contains(&k) {
                            continue;
                        }
                        for (&(kk, j), w) in entries {
                            if kk == k {
                                pairs.push(((i, j), v.mul(w)));
                            }
                        }
                    }
                }
                ApplySide::Right => {
                    for (&(k, j), v) in &corner {
                        if !probe.contains(&k) {
                            continue;
                        }
                        for (&(i, kk), w) in entries {
                            if kk == k {
                                pairs.push(((i, j), w.mul(v)));
                            }
                        }
                    }
                }
            }
            Ok(FinSuppElement::matrix_from(*field, &pairs))
        }
    }
}

/// Applies a lazy multiplier to a finitely supported element on the given
/// side, exactly.  With `verify` set, the evaluator's coherence is
/// spot-checked on the probe and the multiplier law `(a·x)·b = a·(x·b)`
/// is verified against a local unit before the result is returned.
pub fn multiplier_apply(
    x: &LazyMultiplier,
    a: &FinSuppElement,
    side: ApplySide,
    verify: bool,
) -> Result<FinSuppElement> {
    let result = apply_unverified(x, a, side)?;
    if verify {
        let probe = a.support_indices();
        if !probe.is_empty() {
            let corner = x.corner(&probe)?;
            x.check_coherence(&probe, &corner)?;
            // The commutation law on the probe corner, with b a local
            // unit for everything in sight.
            let ax = apply_unverified(x, a, ApplySide::Right)?;
            let xa = apply_unverified(x, a, ApplySide::Left)?;
            let mut seen = vec![a.clone()];
            for extra in [&ax, &xa] {
                if !extra.is_zero() {
                    seen.push(extra.clone());
                }
            }
            let b = local_unit_for(&seen)?;
            let lhs = multiply(&ax, &b)?;
            let rhs = multiply(a, &apply_unverified(x, &b, ApplySide::Left)?)?;
            if lhs != rhs {
                return Err(Error::ContractViolation(format!(
                    "evaluator of '{}' violates the multiplier law (a·x)·b = a·(x·b)",
                    x.name
                )));
            }
        }
    }
    Ok(result)
}

/// What [`density_probe`] returns: an honest element of the algebra that
/// agrees with the multiplier on the probe set, on both sides.
#[derive(Debug, Clone)]
pub struct DensityWitness {
    /// The approximating element `x·e`.
    pub element: FinSuppElement,
    /// The local unit `e` used to cut the multiplier down.
    pub local_unit: FinSuppElement,
}

/// Produces a finitely supported element agreeing with the multiplier on
/// a finite probe set, on both sides: with `e` a local unit for
/// `F ∪ {f·x : f ∈ F}`, the element `x·e` satisfies `(x·e)·f = x·f` and
/// `f·(x·e) = f·x` for all `f ∈ F`.  (A local unit for `F` alone is not
/// enough: the shift matrix against `F = {e₁₁}` has `f·x = e₁₂`, which a
/// unit for `e₁₁` does not reach.)  Both agreements are re-verified.
pub fn density_probe(x: &LazyMultiplier, f: &[FinSuppElement]) -> Result<DensityWitness> {
    if f.is_empty() {
        let zero = match x.family() {
            Family::Functions => FinSuppElement::zero_function(x.field()),
            Family::MatrixUnits => FinSuppElement::zero_matrix(x.field()),
        };
        return Ok(DensityWitness {
            element: zero.clone(),
            local_unit: zero,
        });
    }
    let mut enlarged = f.to_vec();
    for a in f {
        let ax = apply_unverified(x, a, ApplySide::Right)?;
        if !ax.is_zero() {
            enlarged.push(ax);
        }
    }
    let e = local_unit_for(&enlarged)?;
    let element = apply_unverified(x, &e, ApplySide::Left)?;
    for a in f {
        let left_agrees = multiply(&element, a)? == apply_unverified(x, a, ApplySide::Left)?;
        let right_agrees = multiply(a, &element)? == apply_unverified(x, a, ApplySide::Right)?;
        if !left_agrees || !right_agrees {
            return Err(Error::ContractViolation(format!(
                "evaluator of '{}' is not a coherent multiplier: x·e fails to agree \
                 with x on the probe set",
                x.name
            )));
        }
    }
    Ok(DensityWitness {
        element,
        local_unit: e,
    })
}

/// The constructive refutation of a global unit.
#[derive(Debug, Clone)]
pub struct UnitRefutation {
    /// An index beyond the candidate's support.
    pub index: u64,
    /// The basis element there: `δ` or a diagonal matrix unit.
    pub witness: FinSuppElement,
}

/// Refutes that any finitely supported element `u` can be a unit: at an
/// index `n` beyond its support, `u·δₙ = 0 ≠ δₙ`.  The refutation is
/// verified before being returned.
pub fn refute_global_unit(u: &FinSuppElement) -> Result<UnitRefutation> {
    let index = u.support_indices().iter().max().map_or(0, |m| m + 1);
    let witness = match u.family() {
        Family::Functions => FinSuppElement::delta(u.field(), index),
        Family::MatrixUnits => FinSuppElement::matrix_unit(u.field(), index, index),
    };
    let killed_left = multiply(u, &witness)?.is_zero();
    let killed_right = multiply(&witness, u)?.is_zero();
    if !killed_left || !killed_right || witness.is_zero() {
        return Err(Error::PropositionViolation(
            "an element acted non-trivially beyond its own support".into(),
        ));
    }
    Ok(UnitRefutation { index, witness })
}
