//! Sequential vs parallel subset search on the two load profiles that
//! matter: full exhaustion (no certificate exists) and deep-but-successful
//! search. Build with `--no-default-features` to confirm the sequential
//! fallback costs nothing.

use criterion::{criterion_group, criterion_main, Criterion};
use mincomp_core::finitegrp::{pair_minimal_complement_with, FiniteAbelianGroup, GroupSubset};
use mincomp_core::search::Execution;
use std::time::Duration;

fn bench_pair_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair_search");
    // Q1 = {0}, Q = {1}: a certificate is an independent set N with
    // N u (N+1) = Z/n, which forces n even. Odd orders exhaust the whole
    // subset lattice; even orders stop at the first alternating set.
    let cases = [("exhausted_z17", 17i64, false), ("found_z20", 20, true)];
    for (name, order, expect) in cases {
        let g = FiniteAbelianGroup::new(vec![order]).unwrap();
        let q1 = GroupSubset::new(&g, [[0i64]]).unwrap();
        let q = GroupSubset::new(&g, [[1i64]]).unwrap();
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_function(format!("{name}/{exec:?}"), |b| {
                b.iter(|| {
                    let out = pair_minimal_complement_with(&q1, &q, exec, 64).unwrap();
                    assert_eq!(out.is_some(), expect);
                    out
                })
            });
        }
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default()
        .sample_size(10)
        .measurement_time(Duration::from_secs(3));
    targets = bench_pair_search
}
criterion_main!(benches);
