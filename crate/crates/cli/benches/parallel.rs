use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use forms_core::{par, twisted_dirac, SampleDomain};
use l2_analysis::{l2_integral_eh, CutoffOptions};
use zero_modes::{mode_data, residual_at, EhModeSpec, ZeroModeSpec};

fn residual_sweep(c: &mut Criterion) {
    let spec = ZeroModeSpec::Eh(EhModeSpec::new(2, 0, 3, 1.0).unwrap());
    let (sigma, conn, g) = mode_data(&spec).unwrap();
    let d = twisted_dirac(&sigma, &conn, &g).unwrap();
    let mut group = c.benchmark_group("zero_mode_residual");
    for count in [64usize, 256] {
        let pts = SampleDomain::default().sample(2, count, 1);
        group.bench_with_input(BenchmarkId::new("parallel", count), &pts, |b, pts| {
            b.iter(|| par::map(pts, |p| residual_at(&d, &sigma, &g, p).unwrap().total))
        });
        group.bench_with_input(BenchmarkId::new("sequential", count), &pts, |b, pts| {
            b.iter(|| par::map_seq(pts, |p| residual_at(&d, &sigma, &g, p).unwrap().total))
        });
    }
    group.finish();
}

fn classification_sweep(c: &mut Criterion) {
    let specs: Vec<EhModeSpec> = (0..=3)
        .flat_map(|ell| (0..=4u32).flat_map(move |two_n| EhModeSpec::multiplet(two_n, ell, 1.0).unwrap()))
        .collect();
    let tag = |s: &EhModeSpec| l2_integral_eh(s, CutoffOptions::default()).unwrap().class();
    let mut group = c.benchmark_group("l2_classification");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| par::map(&specs, tag)));
    group.bench_function("sequential", |b| b.iter(|| par::map_seq(&specs, tag)));
    group.finish();
}

criterion_group!(benches, residual_sweep, classification_sweep);
criterion_main!(benches);
