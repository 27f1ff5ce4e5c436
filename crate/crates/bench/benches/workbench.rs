//! Benchmarks over the heavy paths: the multiplier algebra of the 3×3
//! matrix units, the full analysis pipeline on the 5-dimensional staircase
//! algebra, and the exhaustive multiplier-pair enumeration over GF(2).

use criterion::{criterion_group, criterion_main, Criterion};

use mring::fixtures;
use mring::multiplier::{compute_multiplier_algebra, density_test, strict_closure};
use mring::oracle::enumerate_multiplier_pairs;
use mring::scalar::Field;
use mring::units::{find_unit, firm_ring_check, has_local_units};

fn multiplier_algebra_of_matrix_units(c: &mut Criterion) {
    let a = fixtures::matrix_units(3, Field::Q);
    c.bench_function("multiplier algebra of the 3x3 matrix units", |b| {
        b.iter(|| compute_multiplier_algebra(&a).expect("matrix units are non-degenerate"))
    });
}

fn full_pipeline_on_the_staircase_algebra(c: &mut Criterion) {
    let a = fixtures::example_1_16(Field::Q);
    c.bench_function("full pipeline on the 5-dimensional staircase algebra", |b| {
        b.iter(|| {
            let ma = compute_multiplier_algebra(&a).expect("non-degenerate");
            let closure = strict_closure(&ma).expect("closure computes");
            let density = density_test(&ma).expect("density computes");
            let local = has_local_units(&a);
            let firm = firm_ring_check(&a).expect("firmness computes");
            (
                ma.dim(),
                closure.closure.dim(),
                density.dense,
                local.two_sided,
                find_unit(&a).is_none(),
                firm.firm,
            )
        })
    });
}

fn exhaustive_enumeration_over_gf2(c: &mut Criterion) {
    let a = fixtures::by_name("staircase_2", Field::Fp(2)).expect("known fixture");
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("exhaustive multiplier-pair enumeration over GF(2)", |b| {
        b.iter(|| enumerate_multiplier_pairs(&a).expect("within the enumeration cap"))
    });
    group.finish();
}

criterion_group!(
    benches,
    multiplier_algebra_of_matrix_units,
    full_pipeline_on_the_staircase_algebra,
    exhaustive_enumeration_over_gf2
);
criterion_main!(benches);
