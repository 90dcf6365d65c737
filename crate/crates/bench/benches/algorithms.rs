use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use sqpow_bench::gpcq_power;
use sqpow_core::graph::all_graphs;
use sqpow_core::{
    betti_table, find_lq_order, induced_matching_number, is_linearly_related, squarefree_power, verify_lq_order,
    BettiOptions,
};

fn powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("squarefree_power");
    for k in 2..=4 {
        let (g, _) = gpcq_power(2, 3, 5, k);
        group.bench_with_input(BenchmarkId::new("G(2,3,5)", k), &k, |b, &k| {
            b.iter(|| squarefree_power(black_box(&g), k).unwrap())
        });
    }
    group.finish();
}

fn linearity(c: &mut Criterion) {
    let (_, ideal) = gpcq_power(2, 3, 5, 3);
    let revlex: Vec<usize> = (0..ideal.len()).collect();
    c.bench_function("verify_lq_order G(2,3,5) k=3", |b| b.iter(|| verify_lq_order(&ideal, &revlex).unwrap()));

    let (_, below) = gpcq_power(2, 4, 5, 2);
    c.bench_function("is_linearly_related G(2,4,5) k=2", |b| b.iter(|| is_linearly_related(black_box(&below))));

    let (_, top) = gpcq_power(2, 2, 3, 3);
    c.bench_function("find_lq_order G(2,2,3) k=3", |b| b.iter(|| find_lq_order(&top, 64).unwrap()));
}

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table");
    group.sample_size(10);
    for (p, cc, q, k) in [(2, 3, 4, 2), (2, 3, 5, 2), (3, 4, 5, 3)] {
        let (_, ideal) = gpcq_power(p, cc, q, k);
        group.bench_function(format!("G({p},{cc},{q}) k={k}"), |b| {
            b.iter(|| betti_table(&ideal, BettiOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("all_graphs(6)", |b| b.iter(|| all_graphs(black_box(6))));
    let graphs = all_graphs(7);
    group.bench_function("induced_matching_number over 7-vertex graphs", |b| {
        b.iter(|| graphs.iter().map(induced_matching_number).sum::<usize>())
    });
    group.finish();
}

criterion_group!(benches, powers, linearity, betti, census);
criterion_main!(benches);
