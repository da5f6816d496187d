use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use guinness_core::orbit::{decompose, orbit_length, order_oracle};
use guinness_core::{classify, digit_stream, scan_parallel, GuinnessKind, OmegaSpace};

fn standard_orbit(c: &mut Criterion) {
    let mut group = c.benchmark_group("standard_orbit_length");
    for n in [9u64, 99, 999, 2013] {
        let space = OmegaSpace::new(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &space, |b, s| {
            b.iter(|| orbit_length(s, black_box(s.standard_point())).unwrap())
        });
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for n in [21u64, 99, 142, 999] {
        let space = OmegaSpace::new(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &space, |b, s| {
            b.iter(|| decompose(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let space = OmegaSpace::new(999).unwrap();
    c.bench_function("order_oracle/999", |b| {
        b.iter(|| order_oracle(black_box(&space)))
    });
}

fn scanning(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_100_999");
    group.sample_size(10);
    for jobs in [1usize, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| scan_parallel(100, 999, GuinnessKind::Half, jobs).unwrap())
        });
    }
    group.finish();
    c.bench_function("classify/2013", |b| {
        b.iter(|| classify(black_box(2013)).unwrap())
    });
}

fn digits(c: &mut Criterion) {
    c.bench_function("digit_stream/999", |b| {
        b.iter(|| digit_stream(black_box(999)).unwrap().into_digits())
    });
}

criterion_group!(
    benches,
    standard_orbit,
    decomposition,
    oracle,
    scanning,
    digits
);
criterion_main!(benches);
