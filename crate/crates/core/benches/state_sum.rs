use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skein::bracket::{skein, state_sum_parallel, state_sum_sequential};
use skein::moves::{braid_closure, corpus_entry, random_braid};

fn diagrams() -> Vec<(String, skein::LinkDiagram)> {
    let mut out: Vec<_> = ["6_2", "8_19", "10_124"].iter().map(|n| (n.to_string(), corpus_entry(n).unwrap())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for len in [12, 14, 16] {
        let w = random_braid(&mut rng, 4, len);
        out.push((format!("braid{len}"), braid_closure(4, &w).unwrap()));
    }
    out
}

fn state_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket");
    group.sample_size(10);
    for (name, d) in diagrams() {
        group.bench_with_input(BenchmarkId::new("sequential", &name), &d, |b, d| b.iter(|| state_sum_sequential(d)));
        group.bench_with_input(BenchmarkId::new("parallel", &name), &d, |b, d| b.iter(|| state_sum_parallel(d)));
        group.bench_with_input(BenchmarkId::new("skein", &name), &d, |b, d| b.iter(|| skein(d)));
    }
    group.finish();
}

criterion_group!(benches, state_sums);
criterion_main!(benches);
