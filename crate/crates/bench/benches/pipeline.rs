use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qtoric::combinatorics::{generic_direction, morse_data};
use qtoric::polytope::enumerate_vertices;
use qtoric::quasilattice::{gamma_structure, TorusElement};
use qtoric::{analyze, fixtures, FieldSpec, Scalar};
use qtoric_bench::prepare;

fn vertex_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_vertices");
    for name in ["cube-4", "dodecahedron"] {
        let spec = fixtures::fixture(name).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| enumerate_vertices(black_box(&spec)).unwrap())
        });
    }
    group.finish();
}

fn morse_indexing(c: &mut Criterion) {
    let p = prepare("dodecahedron");
    let dir = generic_direction(&p.spec, &p.vertices, 0).unwrap();
    c.bench_function("morse_data/dodecahedron", |b| {
        b.iter(|| morse_data(&p.spec, &p.vertices, &p.lattice, black_box(&dir)).unwrap())
    });
}

fn group_structure(c: &mut Criterion) {
    let q = FieldSpec::RATIONAL;
    let gens: Vec<TorusElement> = (2..6)
        .map(|k| {
            TorusElement::new([
                Scalar::from_ratio(1, k, q),
                Scalar::from_ratio(k - 1, k + 1, q),
                Scalar::from_ratio(1, 2 * k, q),
            ])
        })
        .collect();
    c.bench_function("gamma_structure/rational", |b| {
        b.iter(|| gamma_structure(black_box(&gens)))
    });
}

fn full_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(20);
    for name in ["cube-3", "golden-quad", "dodecahedron"] {
        let spec = fixtures::fixture(name).unwrap();
        group.bench_function(name, |b| b.iter(|| analyze(black_box(&spec), 0).unwrap()));
    }
    group.finish();
}

criterion_group!(
    benches,
    vertex_enumeration,
    morse_indexing,
    group_structure,
    full_pipeline
);
criterion_main!(benches);
