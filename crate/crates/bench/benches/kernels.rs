use criterion::{criterion_group, criterion_main, Criterion};
use mathcheck_core::boolalg::BoolAlgebra;
use mathcheck_core::jordan::{self, CurveKind, CurveSpec};
use mathcheck_core::matrix_series;
use mathcheck_core::{braid, bring_euler, incidence, triple_trig, weak_bring};
use std::hint::black_box;

fn bench_braid(c: &mut Criterion) {
    let alg = BoolAlgebra::new(3).unwrap();
    let phi = braid::phi_complement(&alg);
    c.bench_function("braid_check_complement_n3", |b| {
        b.iter(|| braid::braid_check(black_box(&phi)))
    });
    c.bench_function("braid_enumerate_m2", |b| {
        b.iter(|| braid::enumerate_solutions(black_box(2)).unwrap())
    });
}

fn bench_boolean(c: &mut Criterion) {
    let a2 = BoolAlgebra::new(2).unwrap();
    c.bench_function("triple_exp_addition_n2", |b| {
        b.iter(|| triple_trig::check_exp_addition(black_box(&a2)))
    });
    let a3 = BoolAlgebra::new(3).unwrap();
    let ring = weak_bring::build_pair_ring(&a3).unwrap();
    c.bench_function("bring_axioms_n3", |b| {
        b.iter(|| weak_bring::check_axioms(black_box(&ring)).unwrap())
    });
    let base = bring_euler::nonzero_bases(&a2).into_iter().next().unwrap();
    c.bench_function("pair_exp_dual_n2", |b| {
        b.iter(|| bring_euler::check_theorem_pair_exp(black_box(&a2), black_box(&base)))
    });
}

fn bench_matrix(c: &mut Criterion) {
    let batch = matrix_series::random_sl2(42, 100);
    c.bench_function("matrix_identity_batch_100", |b| {
        b.iter(|| {
            for m in &batch {
                matrix_series::verify_identity(black_box(m), 1e-6).unwrap();
            }
        })
    });
}

fn bench_jordan(c: &mut Criterion) {
    let spec = CurveSpec::new(CurveKind::Ellipse { a: 2.0, b: 1.0 }, 2048).unwrap();
    c.bench_function("jordan_analyze_ellipse_2048", |b| {
        b.iter(|| jordan::analyze(black_box(&spec)).unwrap())
    });
}

fn bench_incidence(c: &mut Criterion) {
    c.bench_function("incidence_build_and_verify", |b| {
        b.iter(|| {
            let cfg = incidence::build_config(black_box(1)).unwrap();
            incidence::verify_conclusion(&cfg)
        })
    });
}

criterion_group!(
    benches,
    bench_braid,
    bench_boolean,
    bench_matrix,
    bench_jordan,
    bench_incidence
);
criterion_main!(benches);
