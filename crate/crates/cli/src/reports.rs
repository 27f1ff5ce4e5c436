//! Report types for every subcommand, with their construction from the core
//! library and their plain-text rendering.
//!
//! Each report derives `Serialize`; the struct-field order is the JSON key
//! order and every collection is kept in a deterministic order, so a report
//! for a given input renders byte-identically on every run.

use std::fmt::Write as _;

use serde::Serialize;

use mring::algebra::{FiniteAlgebra, Side};
use mring::coalgebra::{self, FiniteCoalgebra};
use mring::error::Result;
use mring::homs::{ExtendedHom, NonDegenerateHom};
use mring::linalg::Matrix;
use mring::multiplier::{
    compute_left_multipliers, compute_multiplier_algebra, compute_right_multipliers,
    density_test, essential_ideal_check, pullback_check, strict_closure, MultiplierAlgebra,
};
use mring::scalar::Scalar;
use mring::spec_io::labeled_combination;
use mring::units::{find_unit, firm_ring_check, has_local_units, local_unit_for};

/// Renders a report as JSON, newline-terminated. `serde_json` keeps the
/// struct-field order, so the output is deterministic.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sparse_matrix_entries(m: &Matrix) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            let v = m.at(r, c);
            if !v.is_zero() {
                out.push((r, c, v.to_string()));
            }
        }
    }
    out
}

/// The algebra itself: shape, non-degeneracy (with annihilator witnesses
/// when it fails), idempotency.
#[derive(Serialize)]
pub struct AlgebraSummary {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub has_involution: bool,
    pub nondegenerate: bool,
    pub left_annihilator: Option<String>,
    pub right_annihilator: Option<String>,
    pub idempotent: bool,
}

impl AlgebraSummary {
    pub fn new(a: &FiniteAlgebra) -> AlgebraSummary {
        let verdict = a.check_nondegenerate(Side::TwoSided);
        let labeled = |v: &Vec<Scalar>| labeled_combination(a.labels(), v);
        AlgebraSummary {
            field: a.field().tag(),
            dim: a.dim(),
            basis: a.labels().to_vec(),
            has_involution: a.star_matrix().is_some(),
            nondegenerate: verdict.holds(),
            left_annihilator: verdict.left_witness.as_ref().map(labeled),
            right_annihilator: verdict.right_witness.as_ref().map(labeled),
            idempotent: a.check_idempotent(),
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "algebra over {}, dimension {}", self.field, self.dim);
        let _ = writeln!(out, "basis: {}", self.basis.join(", "));
        let _ = writeln!(out, "involution: {}", yes_no(self.has_involution));
        let _ = writeln!(out, "non-degenerate: {}", yes_no(self.nondegenerate));
        if let Some(w) = &self.left_annihilator {
            let _ = writeln!(out, "  left annihilator witness: {w}");
        }
        if let Some(w) = &self.right_annihilator {
            let _ = writeln!(out, "  right annihilator witness: {w}");
        }
        let _ = writeln!(out, "idempotent: {}", yes_no(self.idempotent));
    }
}

/// Unit and local-unit verdicts, with an explicit local unit for the whole
/// basis when one exists.
#[derive(Serialize)]
pub struct UnitsSummary {
    pub unit: Option<String>,
    pub left_local_units: bool,
    pub right_local_units: bool,
    pub local_units: bool,
    pub basis_local_unit: Option<String>,
}

impl UnitsSummary {
    pub fn new(a: &FiniteAlgebra) -> UnitsSummary {
        let verdict = has_local_units(a);
        let basis: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.basis_element(i)).collect();
        let basis_local_unit = local_unit_for(a, &basis, Side::TwoSided)
            .map(|cert| labeled_combination(a.labels(), &cert.unit));
        UnitsSummary {
            unit: find_unit(a).map(|u| labeled_combination(a.labels(), &u)),
            left_local_units: verdict.left,
            right_local_units: verdict.right,
            local_units: verdict.two_sided,
            basis_local_unit,
        }
    }

    fn render(&self, out: &mut String) {
        match &self.unit {
            Some(u) => {
                let _ = writeln!(out, "unit: {u}");
            }
            None => {
                let _ = writeln!(out, "unit: none");
            }
        }
        let _ = writeln!(
            out,
            "local units: left {}, right {}, two-sided {}",
            yes_no(self.left_local_units),
            yes_no(self.right_local_units),
            yes_no(self.local_units)
        );
        if let Some(e) = &self.basis_local_unit {
            let _ = writeln!(out, "  local unit for the whole basis: {e}");
        }
    }
}

/// Dimensions of L(A), R(A), M(A), the canonical multiplier basis (the
/// embedded copy of A first, then complementary multipliers x1, x2, …),
/// and the unit of M(A) in that basis.
#[derive(Serialize)]
pub struct MultiplierSummary {
    pub left_dim: usize,
    pub right_dim: usize,
    pub multiplier_dim: usize,
    pub embedded_dim: usize,
    pub basis: Vec<String>,
    pub unit: String,
}

impl MultiplierSummary {
    pub fn new(a: &FiniteAlgebra, ma: &MultiplierAlgebra) -> MultiplierSummary {
        MultiplierSummary {
            left_dim: compute_left_multipliers(a).dim(),
            right_dim: compute_right_multipliers(a).dim(),
            multiplier_dim: ma.dim(),
            embedded_dim: a.dim(),
            basis: ma.algebra.labels().to_vec(),
            unit: labeled_combination(ma.algebra.labels(), &ma.unit),
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "left multipliers L(A): dimension {}", self.left_dim);
        let _ = writeln!(out, "right multipliers R(A): dimension {}", self.right_dim);
        let _ = writeln!(
            out,
            "multiplier algebra M(A): dimension {} (embedded copy: {})",
            self.multiplier_dim, self.embedded_dim
        );
        let _ = writeln!(out, "M(A) basis: {}", self.basis.join(", "));
        let _ = writeln!(out, "M(A) unit: {}", self.unit);
    }
}

/// The strict closure of the embedded copy inside M(A) and the density
/// verdicts, side by side.
#[derive(Serialize)]
pub struct ClosureSummary {
    pub closure_dim: usize,
    pub left_closure_dim: usize,
    pub right_closure_dim: usize,
    pub closure_basis: Vec<String>,
    pub equals_embedded: bool,
    pub left_dense: bool,
    pub right_dense: bool,
    pub dense: bool,
}

impl ClosureSummary {
    pub fn new(ma: &MultiplierAlgebra) -> Result<ClosureSummary> {
        let closure = strict_closure(ma)?;
        let density = density_test(ma)?;
        let labels = ma.algebra.labels();
        Ok(ClosureSummary {
            closure_dim: closure.closure.dim(),
            left_closure_dim: closure.left_closure.dim(),
            right_closure_dim: closure.right_closure.dim(),
            closure_basis: closure
                .closure
                .basis_vectors()
                .iter()
                .map(|v| labeled_combination(labels, v))
                .collect(),
            equals_embedded: closure.closure == ma.embedded_subspace(),
            left_dense: density.left_dense,
            right_dense: density.right_dense,
            dense: density.dense,
        })
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "strict closure: dimension {} (left {}, right {})",
            self.closure_dim, self.left_closure_dim, self.right_closure_dim
        );
        for b in &self.closure_basis {
            let _ = writeln!(out, "  {b}");
        }
        let _ = writeln!(
            out,
            "closure equals the embedded copy: {}",
            yes_no(self.equals_embedded)
        );
        let _ = writeln!(
            out,
            "strictly dense in M(A): {} (left {}, right {})",
            yes_no(self.dense),
            yes_no(self.left_dense),
            yes_no(self.right_dense)
        );
    }
}

/// Is multiplication a bijection A⊗_A A → A?
#[derive(Serialize)]
pub struct FirmnessSummary {
    pub idempotent: bool,
    pub firm: bool,
    pub tensor_dim: usize,
    pub balanced_product_firm: Option<bool>,
}

impl FirmnessSummary {
    pub fn new(a: &FiniteAlgebra) -> Result<FirmnessSummary> {
        let report = firm_ring_check(a)?;
        Ok(FirmnessSummary {
            idempotent: report.idempotent,
            firm: report.firm,
            tensor_dim: report.tensor_dim,
            balanced_product_firm: report.balanced_product_firm,
        })
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "firm: {} (A⊗_A A has dimension {})",
            yes_no(self.firm),
            self.tensor_dim
        );
        if let Some(b) = self.balanced_product_firm {
            let _ = writeln!(out, "  balanced product ring firm: {}", yes_no(b));
        }
    }
}

/// Post-hoc re-verification of the computed multipliers: the commutation
/// law and both one-sided linearity laws on every basis multiplier, the
/// embedded copy an essential ideal, and agreement with the pullback of
/// L(A) and R(A) over the bilinear maps.
#[derive(Serialize)]
pub struct VerificationSummary {
    pub multiplier_axioms: bool,
    pub embedded_ideal_essential: bool,
    pub pullback_agrees: bool,
}

impl VerificationSummary {
    pub fn new(a: &FiniteAlgebra, ma: &MultiplierAlgebra) -> Result<VerificationSummary> {
        let mut axioms = true;
        for m in &ma.basis {
            if !m.commutes(a) {
                axioms = false;
            }
            for b in 0..a.dim() {
                let rb = a.basis_right_mult(b);
                let lb = a.basis_left_mult(b);
                if m.lambda.matmul(rb) != rb.matmul(&m.lambda)
                    || m.rho.matmul(lb) != lb.matmul(&m.rho)
                {
                    axioms = false;
                }
            }
        }
        let essential = essential_ideal_check(ma, &ma.embedded_subspace())?;
        let pullback = pullback_check(a)?;
        Ok(VerificationSummary {
            multiplier_axioms: axioms,
            embedded_ideal_essential: essential.essential,
            pullback_agrees: pullback.pullback_equals_multiplier_space
                && pullback.left_injective
                && pullback.right_injective
                && pullback.pullback_dim == pullback.multiplier_dim,
        })
    }

    /// Did every re-verification pass?
    pub fn all_hold(&self) -> bool {
        self.multiplier_axioms && self.embedded_ideal_essential && self.pullback_agrees
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "verified multiplier axioms on every basis multiplier: {}",
            yes_no(self.multiplier_axioms)
        );
        let _ = writeln!(
            out,
            "embedded copy is an essential ideal of M(A): {}",
            yes_no(self.embedded_ideal_essential)
        );
        let _ = writeln!(
            out,
            "M(A) agrees with the pullback of L(A) and R(A): {}",
            yes_no(self.pullback_agrees)
        );
    }
}

/// The full pipeline over one algebra.
#[derive(Serialize)]
pub struct AnalyzeReport {
    pub algebra: AlgebraSummary,
    pub units: UnitsSummary,
    pub multipliers: MultiplierSummary,
    pub closure: ClosureSummary,
    pub firmness: FirmnessSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
}

impl AnalyzeReport {
    pub fn new(a: &FiniteAlgebra, verify: bool) -> Result<AnalyzeReport> {
        let ma = compute_multiplier_algebra(a)?;
        Ok(AnalyzeReport {
            algebra: AlgebraSummary::new(a),
            units: UnitsSummary::new(a),
            multipliers: MultiplierSummary::new(a, &ma),
            closure: ClosureSummary::new(&ma)?,
            firmness: FirmnessSummary::new(a)?,
            verification: if verify {
                Some(VerificationSummary::new(a, &ma)?)
            } else {
                None
            },
        })
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        self.algebra.render(&mut out);
        self.units.render(&mut out);
        self.multipliers.render(&mut out);
        self.closure.render(&mut out);
        self.firmness.render(&mut out);
        if let Some(v) = &self.verification {
            v.render(&mut out);
        }
        out
    }
}

/// Just the multiplier spaces.
#[derive(Serialize)]
pub struct MultipliersReport {
    pub field: String,
    pub dim: usize,
    pub multipliers: MultiplierSummary,
}

impl MultipliersReport {
    pub fn new(a: &FiniteAlgebra) -> Result<MultipliersReport> {
        let ma = compute_multiplier_algebra(a)?;
        Ok(MultipliersReport {
            field: a.field().tag(),
            dim: a.dim(),
            multipliers: MultiplierSummary::new(a, &ma),
        })
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra over {}, dimension {}", self.field, self.dim);
        self.multipliers.render(&mut out);
        out
    }
}

/// Just the unit and local-unit verdicts.
#[derive(Serialize)]
pub struct UnitsReport {
    pub field: String,
    pub dim: usize,
    pub units: UnitsSummary,
}

impl UnitsReport {
    pub fn new(a: &FiniteAlgebra) -> UnitsReport {
        UnitsReport {
            field: a.field().tag(),
            dim: a.dim(),
            units: UnitsSummary::new(a),
        }
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra over {}, dimension {}", self.field, self.dim);
        self.units.render(&mut out);
        out
    }
}

/// Just the strict closure and density verdicts.
#[derive(Serialize)]
pub struct ClosureReport {
    pub field: String,
    pub dim: usize,
    pub multiplier_dim: usize,
    pub closure: ClosureSummary,
}

impl ClosureReport {
    pub fn new(a: &FiniteAlgebra) -> Result<ClosureReport> {
        let ma = compute_multiplier_algebra(a)?;
        Ok(ClosureReport {
            field: a.field().tag(),
            dim: a.dim(),
            multiplier_dim: ma.dim(),
            closure: ClosureSummary::new(&ma)?,
        })
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "algebra over {}, dimension {}; M(A) dimension {}",
            self.field, self.dim, self.multiplier_dim
        );
        self.closure.render(&mut out);
        out
    }
}

/// The extension of a non-degenerate hom A → M(B) to the unique unital hom
/// M(A) → M(B), as a matrix in the canonical coordinates of both sides.
#[derive(Serialize)]
pub struct ExtendReport {
    pub source_dim: usize,
    pub source_multiplier_dim: usize,
    pub target_dim: usize,
    pub target_multiplier_dim: usize,
    pub unital: bool,
    pub restricts_to_given_hom: bool,
    pub image_dim: usize,
    pub matrix: Vec<(usize, usize, String)>,
}

impl ExtendReport {
    pub fn new(gamma: &NonDegenerateHom, ext: &ExtendedHom) -> ExtendReport {
        let target = gamma.target();
        ExtendReport {
            source_dim: gamma.source().dim(),
            source_multiplier_dim: ext.source.dim(),
            target_dim: target.base.dim(),
            target_multiplier_dim: target.dim(),
            unital: ext.matrix.apply(&ext.source.unit) == target.unit,
            restricts_to_given_hom: ext.matrix.matmul(&ext.source.embedding)
                == gamma.matrix_into_target(),
            image_dim: ext.image.dim(),
            matrix: sparse_matrix_entries(&ext.matrix),
        }
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "extended hom M(A) → M(B): M(A) dimension {} (A: {}), M(B) dimension {} (B: {})",
            self.source_multiplier_dim, self.source_dim, self.target_multiplier_dim, self.target_dim
        );
        let _ = writeln!(out, "unital: {}", yes_no(self.unital));
        let _ = writeln!(
            out,
            "restricts to the given hom on A: {}",
            yes_no(self.restricts_to_given_hom)
        );
        let _ = writeln!(out, "image dimension: {}", self.image_dim);
        let _ = writeln!(out, "matrix entries (row, column, value):");
        for (r, c, v) in &self.matrix {
            let _ = writeln!(out, "  ({r}, {c}) = {v}");
        }
        out
    }
}

/// The outcome of the search for an injective right C*-linear map C → C*.
#[derive(Serialize)]
pub struct CoFrobeniusCliReport {
    pub field: String,
    pub dim: usize,
    pub hom_space_dim: usize,
    pub exhaustive: bool,
    pub best_rank: usize,
    pub witness: Option<Vec<(usize, usize, String)>>,
    pub consequences: Option<CoFrobeniusConsequencesSummary>,
}

/// Structure transported through a verified witness.
#[derive(Serialize)]
pub struct CoFrobeniusConsequencesSummary {
    pub dual_rational_dim: usize,
    pub image_essential: bool,
    pub multiplier_dim: usize,
}

impl CoFrobeniusCliReport {
    pub fn new(c: &FiniteCoalgebra) -> Result<CoFrobeniusCliReport> {
        let report = coalgebra::co_frobenius_find(c)?;
        let consequences = match &report.witness {
            Some(w) => {
                let cons = coalgebra::cofrobenius_consequences(c, w)?;
                Some(CoFrobeniusConsequencesSummary {
                    dual_rational_dim: cons.dual_rational_part.dim(),
                    image_essential: cons.image_essential,
                    multiplier_dim: cons.multiplier_dim,
                })
            }
            None => None,
        };
        Ok(CoFrobeniusCliReport {
            field: c.field().tag(),
            dim: c.dim(),
            hom_space_dim: report.hom_space.dim(),
            exhaustive: report.exhaustive,
            best_rank: report.best_rank,
            witness: report
                .witness
                .as_ref()
                .map(|w| sparse_matrix_entries(&w.j)),
            consequences,
        })
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "coalgebra over {}, dimension {}", self.field, self.dim);
        let _ = writeln!(
            out,
            "right C*-linear maps C → C*: dimension {}",
            self.hom_space_dim
        );
        match &self.witness {
            Some(entries) => {
                let _ = writeln!(
                    out,
                    "injective witness found (rank {}); entries (row, column, value):",
                    self.best_rank
                );
                for (r, c, v) in entries {
                    let _ = writeln!(out, "  ({r}, {c}) = {v}");
                }
            }
            None => {
                let _ = writeln!(
                    out,
                    "no injective witness found (best rank {}; search {})",
                    self.best_rank,
                    if self.exhaustive {
                        "was exhaustive — none exists"
                    } else {
                        "was a bounded sweep — none found within it"
                    }
                );
            }
        }
        if let Some(c) = &self.consequences {
            let _ = writeln!(
                out,
                "rational part of the dual: dimension {}",
                c.dual_rational_dim
            );
            let _ = writeln!(
                out,
                "witness image essential in M(C*): {}",
                yes_no(c.image_essential)
            );
            let _ = writeln!(out, "M(C*) dimension: {}", c.multiplier_dim);
        }
        out
    }
}

/// One fixture's brute-force cross-check.
#[derive(Serialize)]
pub struct OracleFixtureResult {
    pub name: String,
    pub dim: usize,
    pub left_count: String,
    pub right_count: String,
    pub pair_count: String,
    pub left_matches: bool,
    pub right_matches: bool,
    pub pairs_match: bool,
    pub unit_matches: bool,
}

impl OracleFixtureResult {
    pub fn all_match(&self) -> bool {
        self.left_matches && self.right_matches && self.pairs_match && self.unit_matches
    }
}

/// The whole enumeration sweep.
#[derive(Serialize)]
pub struct OracleReport {
    pub field: String,
    pub max_dim: usize,
    pub fixtures: Vec<OracleFixtureResult>,
    pub all_match: bool,
}

impl OracleReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "exhaustive enumeration over {}, fixtures of dimension ≤ {}",
            self.field, self.max_dim
        );
        for f in &self.fixtures {
            let _ = writeln!(
                out,
                "{} (dim {}): left {} ({} solutions), right {} ({}), pairs {} ({}), unit {}",
                f.name,
                f.dim,
                if f.left_matches { "ok" } else { "MISMATCH" },
                f.left_count,
                if f.right_matches { "ok" } else { "MISMATCH" },
                f.right_count,
                if f.pairs_match { "ok" } else { "MISMATCH" },
                f.pair_count,
                if f.unit_matches { "ok" } else { "MISMATCH" },
            );
        }
        let _ = writeln!(
            out,
            "all solver outputs match the enumeration: {}",
            yes_no(self.all_match)
        );
        out
    }
}
