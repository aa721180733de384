use criterion::{criterion_group, criterion_main, Criterion};

use eulerspline_core::asymptotics::DEFAULT_D_LIST;
use eulerspline_core::{error_scan, sinc_bound_check, GridSpec, Offset, ScanFamily, ScanMode};

fn scans(c: &mut Criterion) {
    let lattice = GridSpec::window(3.0, ScanMode::Lattice).unwrap();
    let floor = GridSpec::window(3.0, ScanMode::Floor).unwrap();
    let mut g = c.benchmark_group("error_scan");
    g.sample_size(10);
    g.bench_function("eulerian_lattice", |b| {
        b.iter(|| error_scan(ScanFamily::Eulerian, &DEFAULT_D_LIST, &lattice).unwrap())
    });
    g.bench_function("eulerian_floor", |b| {
        b.iter(|| error_scan(ScanFamily::Eulerian, &DEFAULT_D_LIST, &floor).unwrap())
    });
    g.bench_function("refined_j2", |b| {
        let f = ScanFamily::Refined {
            j: 2,
            offset: Offset::Literal,
        };
        b.iter(|| error_scan(f, &DEFAULT_D_LIST, &lattice).unwrap())
    });
    g.bench_function("bspline_r1_to_128", |b| {
        let f = ScanFamily::BSplineDerivative { r: 1 };
        b.iter(|| error_scan(f, &[16, 32, 64, 128], &lattice).unwrap())
    });
    g.finish();
}

fn envelope(c: &mut Criterion) {
    let xs: Vec<f64> = (-5000..=5000).map(|i| i as f64 / 100.0).collect();
    let ds: Vec<u32> = (4..=200).collect();
    c.bench_function("sinc_bound_k2", |b| {
        b.iter(|| sinc_bound_check(2, &ds, &xs).unwrap())
    });
}

criterion_group!(benches, scans, envelope);
criterion_main!(benches);
