use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use eulerspline_bench::{quarter_grid, ORDERS};
use eulerspline_core::{
    bridge_eulerian, bridge_refined_coeff, bspline_build, bspline_eval_explicit,
    bspline_eval_recurrence, eulerian_explicit, eulerian_recurrence_table,
    refined_recurrence_table,
};

fn eulerian_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("eulerian_row");
    for d in ORDERS {
        g.bench_with_input(BenchmarkId::new("recurrence", d), &d, |b, &d| {
            b.iter(|| eulerian_recurrence_table(black_box(d)))
        });
        g.bench_with_input(BenchmarkId::new("explicit", d), &d, |b, &d| {
            b.iter(|| {
                (0..=d)
                    .map(|k| eulerian_explicit(d, k).unwrap())
                    .collect::<Vec<_>>()
            })
        });
        g.bench_with_input(BenchmarkId::new("bridge", d), &d, |b, &d| {
            b.iter(|| {
                (0..=d)
                    .map(|k| bridge_eulerian(d, k).unwrap())
                    .collect::<Vec<_>>()
            })
        });
    }
    g.finish();
}

fn refined_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("refined");
    for d in [10u32, 20] {
        g.bench_with_input(BenchmarkId::new("recurrence_table", d), &d, |b, &d| {
            b.iter(|| refined_recurrence_table(black_box(d)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("lambda_bridge_row", d), &d, |b, &d| {
            b.iter(|| {
                (0..d)
                    .map(|k| bridge_refined_coeff(d - 1, k).unwrap())
                    .collect::<Vec<_>>()
            })
        });
    }
    g.finish();
}

fn bspline_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("bspline_grid");
    g.sample_size(20);
    for d in [16u32, 32] {
        let grid = quarter_grid(d);
        g.bench_with_input(BenchmarkId::new("explicit", d), &grid, |b, grid| {
            b.iter(|| {
                grid.iter()
                    .map(|x| bspline_eval_explicit(d, x).unwrap())
                    .collect::<Vec<_>>()
            })
        });
        g.bench_with_input(BenchmarkId::new("recurrence", d), &grid, |b, grid| {
            b.iter(|| {
                grid.iter()
                    .map(|x| bspline_eval_recurrence(d, x).unwrap())
                    .collect::<Vec<_>>()
            })
        });
        g.bench_with_input(BenchmarkId::new("convolution_build", d), &d, |b, &d| {
            b.iter(|| bspline_build(black_box(d)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, eulerian_routes, refined_routes, bspline_routes);
criterion_main!(benches);
