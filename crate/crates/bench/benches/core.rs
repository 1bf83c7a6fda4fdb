use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use logflc_core::betti::{betti_ld, betti_open};
use logflc_core::bv::{bv_dims, BVElement};
use logflc_core::flc::check_flc_axioms;
use logflc_core::weights::{build_e1, purity_check};
use logflc_core::enumerate_all_trees;

fn trees(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_all_trees");
    for n in [4, 5, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| enumerate_all_trees(black_box(n))));
    }
    g.finish();
}

fn counting(c: &mut Criterion) {
    c.bench_function("betti_open/7", |b| b.iter(|| betti_open(black_box(7)).unwrap()));
    c.bench_function("betti_ld/6", |b| b.iter(|| betti_ld(black_box(6)).unwrap()));
    c.bench_function("purity/7", |b| b.iter(|| purity_check(&build_e1(black_box(7)).unwrap()).unwrap()));
}

fn bv(c: &mut Criterion) {
    let a = BVElement::parse(3, "D([x1,x2]*x3)").unwrap();
    let x = BVElement::parse(3, "[x1,D(x2)]*x3").unwrap();
    c.bench_function("bv_compose/3x3", |b| b.iter(|| a.compose(black_box(&x), 2).unwrap()));
    c.bench_function("bv_dims/5", |b| b.iter(|| bv_dims(black_box(5)).unwrap()));
}

fn axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group("axioms");
    g.sample_size(10);
    g.bench_function("flc/3", |b| b.iter(|| check_flc_axioms(black_box(3))));
    g.finish();
}

criterion_group!(benches, trees, counting, bv, axioms);
criterion_main!(benches);
