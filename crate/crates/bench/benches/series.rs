use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use glaisher_bench::*;
use glaisher_core::glaisher::EpsilonRoute;
use glaisher_core::partitions::Family;

fn series_arithmetic(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for n in [200, 1000] {
        let e = euler_product(n);
        g.bench_with_input(BenchmarkId::new("euler_product", n), &n, |b, &n| {
            b.iter(|| euler_product(black_box(n)))
        });
        g.bench_with_input(BenchmarkId::new("square", n), &e, |b, e| {
            b.iter(|| series_square(black_box(e)))
        });
    }
    g.bench_function("qbinomial_20_20", |b| {
        b.iter(|| gaussian_binomial(black_box(20), 20))
    });
    g.finish();
}

fn partition_counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("counts");
    for family in [Family::A, Family::C, Family::D] {
        g.bench_function(format!("{family}_3_to_1000"), |b| {
            b.iter(|| count(family, 3, None, black_box(1000)))
        });
    }
    g.bench_function("C_D_series_4_to_500", |b| {
        b.iter(|| c_and_d(4, black_box(500)))
    });
    g.finish();
}

fn epsilon_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("epsilon");
    g.sample_size(10);
    for route in EpsilonRoute::ALL.into_iter().filter(|r| r.valid_for(4)) {
        g.bench_with_input(
            BenchmarkId::new(route.name(), "m4_n300"),
            &route,
            |b, &r| b.iter(|| epsilon_route(4, black_box(300), r)),
        );
    }
    g.bench_function("closed3_m3_n2000", |b| {
        b.iter(|| epsilon_route(3, black_box(2000), EpsilonRoute::Closed3))
    });
    g.bench_function("verify_t14_m3_n300", |b| {
        b.iter(|| verify_corrected(3, black_box(300)))
    });
    g.bench_function("density_m5_x5000", |b| {
        b.iter(|| density_nonzero(5, black_box(5000)))
    });
    g.finish();
}

criterion_group!(benches, series_arithmetic, partition_counts, epsilon_routes);
criterion_main!(benches);
