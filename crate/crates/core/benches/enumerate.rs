use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use diskspec::par::Execution;
use diskspec::spectrum::{first_eigenvalues_with, DomainSpec, EnumerationOptions};

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("first_eigenvalues");
    group.sample_size(10);
    for m in [2_000usize, 20_000] {
        for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::available())] {
            let opts = EnumerationOptions { execution, ..EnumerationOptions::default() };
            group.bench_with_input(BenchmarkId::new(name, m), &m, |b, &m| {
                b.iter(|| first_eigenvalues_with(DomainSpec::Disk, black_box(m), &opts).unwrap())
            });
        }
        let opts = EnumerationOptions { pleijel: true, ..EnumerationOptions::default() };
        group.bench_with_input(BenchmarkId::new("parallel_pleijel", m), &m, |b, &m| {
            b.iter(|| first_eigenvalues_with(DomainSpec::Disk, black_box(m), &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumerate);
criterion_main!(benches);
