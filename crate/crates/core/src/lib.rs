//! An exact-arithmetic workbench for multiplier rings of non-unital
//! algebras.
//!
//! Given a finite-dimensional algebra A over an exact field (rationals,
//! GF(p), or Gaussian rationals), presented by structure constants, this
//! crate computes the left/right multiplier spaces L(A) and R(A), the
//! multiplier ring M(A) with its unit, involution, and embedding of A,
//! tests structural predicates (non-degeneracy, idempotency, firmness,
//! local units, strict density), extends non-degenerate homomorphisms
//! A → M(B) to unital maps M(A) → M(B), handles dual convolution algebras
//! of finite coalgebras with co-Frobenius witnesses, and realizes the
//! locally finite infinite examples (finitely supported functions, infinite
//! matrix units) through lazily evaluated multipliers with probe-based
//! verification.
//!
//! Everything is exact; every verdict is computed, never presumed, and the
//! expensive claims return certificates that are re-verified before being
//! handed back.

pub mod algebra;
pub mod coalgebra;
pub mod colimit;
pub mod error;
pub mod fixtures;
pub mod homs;
pub mod linalg;
pub mod modules;
pub mod multiplier;
pub mod oracle;
pub mod scalar;
pub mod spec_io;
pub mod units;

pub use algebra::{FiniteAlgebra, NondegeneracyVerdict, Side};
pub use coalgebra::{
    CoFrobeniusConsequences, CoFrobeniusReport, CoFrobeniusWitness, FiniteCoalgebra,
    RationalityReport,
};
pub use colimit::{ApplySide, Family, FinSuppElement, LazyMultiplier};
pub use error::{Error, Result};
pub use homs::{Bimodule, ExtendedHom, HomNondegeneracy, NonDegenerateHom};
pub use linalg::{Matrix, QuotientSpace, Subspace};
pub use modules::{FiniteModule, ModuleEquivalences, ScalarExtensionReport, TensorReport};
pub use multiplier::{Multiplier, MultiplierAlgebra};
pub use scalar::{Field, Scalar};
pub use spec_io::{AlgebraSpec, CoalgebraSpec, HomSpec, ModuleSpec};
pub use units::{FirmnessReport, LocalUnitCertificate, LocalUnitsVerdict};
