//! The shared error type.
//!
//! Most operations have genuine mathematical preconditions (a non-degenerate
//! product, an ideal, an involution, ...). Violations are reported through
//! [`Error`] rather than panics so the CLI can turn them into diagnostics.

use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Vector/matrix shapes or ambient dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Two operands live over different scalar fields.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    /// A scalar string (or field tag) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// A linear system that was required to be consistent has no solution.
    #[error("no solution: {0}")]
    NoSolution(String),

    /// The structure constants are not associative; the failing triple is named.
    #[error("product not associative on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    /// The supplied involution data fails one of the star axioms.
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    /// A star operation was requested on an algebra without an involution.
    #[error("the algebra carries no involution")]
    NoInvolution,

    /// The multiplication is degenerate where a non-degenerate one is required.
    #[error("degenerate product: {0}")]
    DegenerateProduct(String),

    /// A subspace that must be an ideal is not one.
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    /// A unital algebra was required.
    #[error("no unit: {0}")]
    NoUnit(String),

    /// `realize_in_unital` requires AB = B = BA.
    #[error("non-degeneracy condition fails: {0}")]
    NondegeneracyConditionFails(String),

    /// `left_realize` requires A·B^L = B^L.
    #[error("firmness condition fails: {0}")]
    FirmnessConditionFails(String),

    /// A caller-supplied certificate or input pair fails its declared identity.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// An operation stated only for algebras with local units was called without them.
    #[error("no local units: {0}")]
    NoLocalUnits(String),

    /// A module action does not respect the algebra product.
    #[error("module axiom fails: {0}")]
    ModuleAxiomFails(String),

    /// A bimodule axiom fails; the violated identity is named.
    #[error("bimodule axiom fails: {0}")]
    BimoduleAxiomFails(String),

    /// A homomorphism that must be non-degenerate is not.
    #[error("non-degenerate homomorphism required: {0}")]
    NondegeneracyFails(String),

    /// Coassociativity or a counit law fails.
    #[error("coalgebra axiom fails: {0}")]
    CoalgebraAxiomFails(String),

    /// A coaction fails the comodule axioms.
    #[error("comodule axiom fails: {0}")]
    ComoduleAxiomFails(String),

    /// A co-Frobenius witness does not verify.
    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    /// A lazy multiplier broke its finiteness or coherence contract.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Two finitely supported elements belong to different families.
    #[error("family mismatch: cannot multiply a function by a matrix")]
    FamilyMismatch,

    /// An internal cross-check of a proved equivalence failed. This indicates
    /// a bug in the workbench, never bad user input.
    #[error("internal cross-check failed: {0}")]
    PropositionViolation(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
