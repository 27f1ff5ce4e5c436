//! JSON file formats for algebras, modules, coalgebras, and
//! homomorphisms.
//!
//! Scalars travel as field-aware strings (`"3/4"`, `"2+5i"`, `"1"`) so no
//! floating point ever appears; sparse tensors are sorted index triples,
//! making serialization deterministic: equal inputs produce byte-identical
//! output.

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::coalgebra::FiniteCoalgebra;
use crate::error::{Error, Result};
use crate::homs::NonDegenerateHom;
use crate::linalg::Matrix;
use crate::modules::FiniteModule;
use crate::multiplier::{Multiplier, MultiplierAlgebra};
use crate::scalar::{Field, Scalar};

fn parse_json<T: for<'de> Deserialize<'de>>(json: &str) -> Result<T> {
    serde_json::from_str(json).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn render_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("specs always serialize");
    out.push('\n');
    out
}

/// The sparse nonzero entries of a matrix, row-major: `(row, col, value)`.
fn sparse_entries(m: &Matrix) -> Vec<(usize, usize, String)> {
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

/// Builds a matrix from sparse string entries, accumulating duplicates.
fn matrix_from_sparse(
    field: Field,
    rows: usize,
    cols: usize,
    entries: &[(usize, usize, String)],
    what: &str,
) -> Result<Matrix> {
    let mut m = Matrix::zero(field, rows, cols);
    for (r, c, s) in entries {
        if *r >= rows || *c >= cols {
            return Err(Error::DimensionMismatch(format!(
                "{what} entry ({r}, {c}) is out of range for a {rows}×{cols} matrix"
            )));
        }
        let v = field.parse_scalar(s)?;
        let total = m.at(*r, *c).add(&v);
        m.set(*r, *c, total);
    }
    Ok(m)
}

/// A finite-dimensional algebra as a file: field tag, labeled basis,
/// sparse structure constants `[i, j, k, scalar]` (meaning `bᵢ·bⱼ` has
/// that coefficient on `bₖ`), and an optional involution matrix in sparse
/// form.  Loading re-validates associativity and the star axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub product: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<(usize, usize, String)>>,
}

impl AlgebraSpec {
    /// The canonical spec of an algebra: structure constants sorted by
    /// `(i, j, k)` with zeros omitted.
    pub fn from_algebra(a: &FiniteAlgebra) -> AlgebraSpec {
        AlgebraSpec {
            field: a.field().tag(),
            dim: a.dim(),
            basis: a.labels().to_vec(),
            product: a
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
            star: a.star_matrix().map(sparse_entries),
        }
    }

    /// Validates and builds the algebra the spec describes.
    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let field = Field::parse(&self.field)?;
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "declared dimension {} but {} basis labels",
                self.dim,
                self.basis.len()
            )));
        }
        let mut product = Vec::with_capacity(self.product.len());
        for (i, j, k, s) in &self.product {
            product.push((*i, *j, *k, field.parse_scalar(s)?));
        }
        let star = match &self.star {
            None => None,
            Some(entries) => Some(matrix_from_sparse(
                field, self.dim, self.dim, entries, "star",
            )?),
        };
        FiniteAlgebra::new(field, self.basis.clone(), &product, star)
    }

    /// Deterministic JSON rendering.
    pub fn to_json(&self) -> String {
        render_json(self)
    }

    /// Parses a spec from JSON.
    pub fn from_json(json: &str) -> Result<AlgebraSpec> {
        parse_json(json)
    }
}

/// A finite module over an algebra, as a file: the algebra spec inline
/// plus the sparse action tensor `[i, r, c, scalar]` (the matrix of the
/// `i`-th basis element has that entry at `(r, c)`).  Loading
/// re-validates the module axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub algebra: AlgebraSpec,
    pub dim: usize,
    pub action: Vec<(usize, usize, usize, String)>,
}

impl ModuleSpec {
    pub fn from_module(m: &FiniteModule) -> ModuleSpec {
        let mut action = Vec::new();
        for i in 0..m.algebra().dim() {
            for (r, c, s) in sparse_entries(m.action_matrix(i)) {
                action.push((i, r, c, s));
            }
        }
        ModuleSpec {
            algebra: AlgebraSpec::from_algebra(m.algebra()),
            dim: m.dim(),
            action,
        }
    }

    pub fn to_module(&self) -> Result<FiniteModule> {
        let algebra = self.algebra.to_algebra()?;
        let field = algebra.field();
        let mut matrices = vec![Matrix::zero(field, self.dim, self.dim); algebra.dim()];
        for (i, r, c, s) in &self.action {
            if *i >= algebra.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "action entry for basis element {i} is out of range for dimension {}",
                    algebra.dim()
                )));
            }
            if *r >= self.dim || *c >= self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "action entry ({r}, {c}) is out of range for a module of dimension {}",
                    self.dim
                )));
            }
            let v = field.parse_scalar(s)?;
            let total = matrices[*i].at(*r, *c).add(&v);
            matrices[*i].set(*r, *c, total);
        }
        FiniteModule::new(&algebra, self.dim, matrices)
    }

    pub fn to_json(&self) -> String {
        render_json(self)
    }

    pub fn from_json(json: &str) -> Result<ModuleSpec> {
        parse_json(json)
    }
}

/// A finite coalgebra as a file: sparse comultiplication `[i, j, k,
/// scalar]` (meaning `Δ(cᵢ)` has that coefficient on `cⱼ⊗cₖ`) and the
/// counit vector.  Loading re-validates coassociativity and the counit
/// laws.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalgebraSpec {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub delta: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
}

impl CoalgebraSpec {
    pub fn from_coalgebra(c: &FiniteCoalgebra) -> CoalgebraSpec {
        let mut delta = Vec::new();
        for i in 0..c.dim() {
            for (j, k, s) in sparse_entries(c.delta_matrix(i)) {
                delta.push((i, j, k, s));
            }
        }
        CoalgebraSpec {
            field: c.field().tag(),
            dim: c.dim(),
            basis: c.labels().to_vec(),
            delta,
            counit: c.counit().iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn to_coalgebra(&self) -> Result<FiniteCoalgebra> {
        let field = Field::parse(&self.field)?;
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "declared dimension {} but {} basis labels",
                self.dim,
                self.basis.len()
            )));
        }
        let mut delta = Vec::with_capacity(self.delta.len());
        for (i, j, k, s) in &self.delta {
            delta.push((*i, *j, *k, field.parse_scalar(s)?));
        }
        let mut counit = Vec::with_capacity(self.counit.len());
        for s in &self.counit {
            counit.push(field.parse_scalar(s)?);
        }
        FiniteCoalgebra::new(field, self.basis.clone(), &delta, counit)
    }

    pub fn to_json(&self) -> String {
        render_json(self)
    }

    pub fn from_json(json: &str) -> Result<CoalgebraSpec> {
        parse_json(json)
    }
}

/// One multiplier image: the sparse `λ`- and `ρ`-matrices over the
/// target algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomImageSpec {
    pub lambda: Vec<(usize, usize, String)>,
    pub rho: Vec<(usize, usize, String)>,
}

/// A homomorphism `A → M(B)` as a file: per source basis element, the
/// image multiplier.  The source and target algebras travel in their own
/// files; loading re-validates that images are genuine multipliers and
/// that the map is multiplicative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSpec {
    pub images: Vec<HomImageSpec>,
}

impl HomSpec {
    pub fn from_hom(h: &NonDegenerateHom) -> HomSpec {
        HomSpec {
            images: h
                .images()
                .iter()
                .map(|m| HomImageSpec {
                    lambda: sparse_entries(&m.lambda),
                    rho: sparse_entries(&m.rho),
                })
                .collect(),
        }
    }

    /// Builds the homomorphism against explicitly supplied source and
    /// target algebras.
    pub fn to_hom(
        &self,
        source: &FiniteAlgebra,
        target: &MultiplierAlgebra,
    ) -> Result<NonDegenerateHom> {
        if self.images.len() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for a source of dimension {}",
                self.images.len(),
                source.dim()
            )));
        }
        let field = target.base.field();
        let d = target.base.dim();
        let mut images = Vec::with_capacity(self.images.len());
        for (i, image) in self.images.iter().enumerate() {
            let lambda =
                matrix_from_sparse(field, d, d, &image.lambda, &format!("image {i} lambda"))?;
            let rho = matrix_from_sparse(field, d, d, &image.rho, &format!("image {i} rho"))?;
            images.push(Multiplier { lambda, rho });
        }
        NonDegenerateHom::new(source, target, images)
    }

    pub fn to_json(&self) -> String {
        render_json(self)
    }

    pub fn from_json(json: &str) -> Result<HomSpec> {
        parse_json(json)
    }
}

/// Renders a coordinate vector as a labeled linear combination, e.g.
/// `"e11 + 3/2·e12 - e21"`; the zero vector renders as `"0"`.
pub fn labeled_combination(labels: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (label, coeff) in labels.iter().zip(v) {
        if coeff.is_zero() {
            continue;
        }
        let neg = coeff.neg();
        let (sign, magnitude) = if !out.is_empty() && neg.to_string().len() < coeff.to_string().len()
        {
            (" - ", neg)
        } else {
            (if out.is_empty() { "" } else { " + " }, coeff.clone())
        };
        out.push_str(sign);
        if magnitude.is_one() {
            out.push_str(label);
        } else {
            out.push_str(&format!("{magnitude}·{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra;
    use crate::fixtures;
    use crate::multiplier::compute_multiplier_algebra;

    #[test]
    fn algebra_specs_round_trip_over_the_whole_battery() {
        for (name, a) in fixtures::standard_battery() {
            let spec = AlgebraSpec::from_algebra(&a);
            let json = spec.to_json();
            let reparsed = AlgebraSpec::from_json(&json).unwrap();
            assert_eq!(reparsed, spec, "{name}: spec changed across JSON");
            assert_eq!(reparsed.to_algebra().unwrap(), a, "{name}: algebra changed");
            assert_eq!(spec.to_json(), json, "{name}: serialization not deterministic");
        }
    }

    #[test]
    fn stars_survive_the_round_trip() {
        let a = fixtures::matrix_units(2, Field::Qi);
        assert!(a.has_star());
        let spec = AlgebraSpec::from_algebra(&a);
        assert!(spec.star.is_some());
        let back = AlgebraSpec::from_json(&spec.to_json()).unwrap().to_algebra().unwrap();
        assert_eq!(back, a);
        assert!(back.has_star());
    }

    #[test]
    fn module_specs_round_trip() {
        for (name, m) in fixtures::module_battery() {
            let spec = ModuleSpec::from_module(&m);
            let back = ModuleSpec::from_json(&spec.to_json()).unwrap().to_module().unwrap();
            assert_eq!(back, m, "{name}: module changed across JSON");
        }
    }

    #[test]
    fn coalgebra_specs_round_trip() {
        let examples = [
            coalgebra::grouplike(3, Field::Q),
            coalgebra::comatrix(2, Field::Fp(5)),
            coalgebra::dual_of_algebra(&fixtures::upper_triangular(2, Field::Qi)).unwrap(),
        ];
        for c in &examples {
            let spec = CoalgebraSpec::from_coalgebra(c);
            let back = CoalgebraSpec::from_json(&spec.to_json())
                .unwrap()
                .to_coalgebra()
                .unwrap();
            assert_eq!(&back, c);
        }
    }

    #[test]
    fn hom_specs_round_trip() {
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        let hom = NonDegenerateHom::embedding(&ma);
        let spec = HomSpec::from_hom(&hom);
        let back = HomSpec::from_json(&spec.to_json())
            .unwrap()
            .to_hom(&a, &ma)
            .unwrap();
        assert_eq!(back.images(), hom.images());
    }

    #[test]
    fn malformed_input_is_reported_as_parse_errors() {
        assert!(matches!(
            AlgebraSpec::from_json("{ not json"),
            Err(Error::Parse(_))
        ));
        let bad_scalar = AlgebraSpec {
            field: "Q".into(),
            dim: 1,
            basis: vec!["x".into()],
            product: vec![(0, 0, 0, "one half".into())],
            star: None,
        };
        assert!(matches!(bad_scalar.to_algebra(), Err(Error::Parse(_))));
        let bad_field = AlgebraSpec {
            field: "R".into(),
            dim: 0,
            basis: vec![],
            product: vec![],
            star: None,
        };
        assert!(matches!(bad_field.to_algebra(), Err(Error::Parse(_))));
    }

    #[test]
    fn validation_errors_name_the_violated_invariant() {
        let out_of_range = AlgebraSpec {
            field: "Q".into(),
            dim: 1,
            basis: vec!["x".into()],
            product: vec![(0, 0, 7, "1".into())],
            star: None,
        };
        assert!(matches!(
            out_of_range.to_algebra(),
            Err(Error::DimensionMismatch(_))
        ));
        // x·x = y, y·y = x is not associative: (xx)y = y² = x vs x(xy) = 0.
        let non_associative = AlgebraSpec {
            field: "Q".into(),
            dim: 2,
            basis: vec!["x".into(), "y".into()],
            product: vec![(0, 0, 1, "1".into()), (1, 1, 0, "1".into())],
            star: None,
        };
        assert!(matches!(
            non_associative.to_algebra(),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn labeled_combinations_read_naturally() {
        let labels: Vec<String> = ["e11", "e12", "e21"].map(String::from).to_vec();
        let f = Field::Q;
        assert_eq!(
            labeled_combination(&labels, &[f.one(), f.from_int(-1), f.from_int(3)]),
            "e11 - e12 + 3·e21"
        );
        assert_eq!(labeled_combination(&labels, &[f.zero(), f.zero(), f.zero()]), "0");
        assert_eq!(
            labeled_combination(&labels, &[f.from_int(-2), f.zero(), f.zero()]),
            "-2·e11"
        );
    }
}
