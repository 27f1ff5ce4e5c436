//! Battery-wide invariants and randomized properties, beyond the
//! acceptance criteria: structural facts that must hold on every fixture
//! and on arbitrary elements, not just on the basis.

use mring::algebra::Side;
use mring::fixtures;
use mring::linalg::Subspace;
use mring::modules::{self, tensor_over_a};
use mring::multiplier::{
    compute_multiplier_algebra, multiplier_pair_space, strict_closure, Multiplier,
};
use mring::oracle;
use mring::scalar::{Field, Scalar};
use mring::units;
use proptest::prelude::*;

#[test]
fn the_battery_is_populated_nondegenerate_and_uniquely_named() {
    let battery = fixtures::standard_battery();
    assert!(battery.len() >= 20);
    let names: std::collections::BTreeSet<&str> =
        battery.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names.len(), battery.len());
    let fields: std::collections::BTreeSet<String> =
        battery.iter().map(|(_, a)| a.field().tag()).collect();
    assert!(fields.len() >= 3, "battery should span several fields");
    for (name, a) in &battery {
        assert!(
            a.check_nondegenerate(Side::TwoSided).holds(),
            "{name}: battery fixtures must be non-degenerate"
        );
    }
}

#[test]
fn the_embedding_is_faithful_and_recovers_element_multipliers() {
    for (name, a) in fixtures::standard_battery() {
        let ma = compute_multiplier_algebra(&a).unwrap();
        for i in 0..a.dim() {
            let b = a.basis_element(i);
            let embedded = ma.embed(&b);
            assert_eq!(
                ma.preimage_in_base(&embedded).as_ref(),
                Some(&b),
                "{name}: embedding is not faithful on basis element {i}"
            );
            assert_eq!(
                ma.multiplier_of(&embedded),
                Multiplier::of_element(&a, &b),
                "{name}: embedded element {i} is not (λ_a, ρ_a)"
            );
        }
    }
}

#[test]
fn strict_closures_are_sandwiched_between_a_and_the_one_sided_closures() {
    for (name, a) in fixtures::standard_battery() {
        let ma = compute_multiplier_algebra(&a).unwrap();
        let report = strict_closure(&ma).unwrap();
        assert!(
            ma.embedded_subspace().is_subspace_of(&report.closure),
            "{name}: closure misses A"
        );
        assert!(
            report.closure.is_subspace_of(&report.left_closure),
            "{name}: closure exceeds the left closure"
        );
        assert!(
            report.closure.is_subspace_of(&report.right_closure),
            "{name}: closure exceeds the right closure"
        );
        // The two-sided closure is exactly the intersection of the
        // one-sided ones.
        assert_eq!(
            report.left_closure.intersect(&report.right_closure),
            report.closure,
            "{name}: closure is not the intersection of the one-sided closures"
        );
    }
}

#[test]
fn firmness_implies_idempotency_across_the_battery() {
    for (name, a) in fixtures::standard_battery() {
        let report = units::firm_ring_check(&a).unwrap();
        if report.firm {
            assert!(report.idempotent, "{name}: firm but not idempotent");
            assert_eq!(report.tensor_dim, a.dim(), "{name}: firm with wrong tensor dimension");
        }
    }
}

#[test]
fn enumerated_units_agree_with_the_solver_over_gf2() {
    for (name, a) in fixtures::oracle_battery_gf2() {
        assert_eq!(
            oracle::enumerate_unit(&a).unwrap(),
            units::find_unit(&a),
            "{name}: enumerated unit disagrees with the solver"
        );
    }
}

#[test]
fn regular_modules_of_firm_algebras_are_firm() {
    for (name, a) in fixtures::standard_battery() {
        let ring = units::firm_ring_check(&a).unwrap();
        let module = tensor_over_a(&modules::FiniteModule::regular(&a));
        assert_eq!(
            ring.firm, module.firm,
            "{name}: ring firmness and regular-module firmness disagree"
        );
        assert_eq!(ring.tensor_dim, module.dim, "{name}: tensor dimensions disagree");
    }
}

/// Random elements of the staircase fixture, as integer coordinates.
fn staircase_elements() -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-5i64..=5, 5)
        .prop_map(|v| v.into_iter().map(|n| Field::Q.from_int(n)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The embedding a ↦ (λ_a, ρ_a) is multiplicative on arbitrary
    /// elements, not just the basis.
    #[test]
    fn element_multipliers_are_multiplicative(x in staircase_elements(), y in staircase_elements()) {
        let a = fixtures::example_1_16(Field::Q);
        let product = Multiplier::of_element(&a, &x).product(&Multiplier::of_element(&a, &y));
        prop_assert_eq!(product, Multiplier::of_element(&a, &a.mul(&x, &y)));
    }

    /// Arbitrary combinations of the multiplier-space basis satisfy the
    /// commutation law ρ(a)b = aλ(b).
    #[test]
    fn multiplier_space_combinations_commute(coeffs in prop::collection::vec(-4i64..=4, 6)) {
        let a = fixtures::staircase(4, Field::Q);
        let space = multiplier_pair_space(&a);
        let basis = space.basis_vectors();
        let n = a.dim();
        let mut combined = vec![Field::Q.zero(); 2 * n * n];
        for (c, v) in coeffs.iter().zip(&basis) {
            let c = Field::Q.from_int(*c);
            for (slot, add) in combined.iter_mut().zip(v.iter()) {
                *slot = slot.add(&c.mul(add));
            }
        }
        let m = Multiplier::from_vectorized(Field::Q, n, &combined);
        prop_assert!(m.commutes(&a));
    }

    /// In a unital algebra, every finite set of random elements has a
    /// verified two-sided local unit.
    #[test]
    fn unital_algebras_have_local_units_for_every_finite_set(
        raw in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..5)
    ) {
        let a = fixtures::matrix_units(2, Field::Fp(5));
        let set: Vec<Vec<Scalar>> = raw
            .into_iter()
            .map(|v| v.into_iter().map(|n| Field::Fp(5).from_int(n)).collect())
            .collect();
        let cert = units::local_unit_for(&a, &set, Side::TwoSided);
        prop_assert!(cert.is_some());
        let cert = cert.unwrap();
        for elem in &set {
            prop_assert_eq!(&a.mul(&cert.unit, elem), elem);
            prop_assert_eq!(&a.mul(elem, &cert.unit), elem);
        }
    }

    /// Strict-closure membership of arbitrary embedded elements: every
    /// element of A lies in the closure of A.
    #[test]
    fn embedded_elements_lie_in_the_strict_closure(x in staircase_elements()) {
        let a = fixtures::example_1_16(Field::Q);
        let ma = compute_multiplier_algebra(&a).unwrap();
        let closure = strict_closure(&ma).unwrap().closure;
        let sub = Subspace::from_spanning(Field::Q, ma.dim(), &[ma.embed(&x)]);
        prop_assert!(sub.is_subspace_of(&closure));
    }
}
