use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qalcove::alcove::{enumerate_admissible, sfill};
use qalcove::chains::lambda_chain_from_heights;
use qalcove::inverse::invert;
use qalcove::qbg::build_qbg;
use qalcove::tableaux::enumerate_tensor;
use qalcove::LieType;

fn cases() -> Vec<(LieType, Vec<usize>)> {
    vec![
        (LieType::a(4).unwrap(), vec![2, 2, 1]),
        (LieType::c(3).unwrap(), vec![2, 1]),
        (LieType::b(3).unwrap(), vec![2, 1]),
        (LieType::d(4).unwrap(), vec![2, 1]),
    ]
}

fn label(lie: &LieType, heights: &[usize]) -> String {
    format!("{lie} {heights:?}")
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_admissible");
    for (lie, heights) in cases() {
        let chain = lambda_chain_from_heights(&lie, &heights).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label(&lie, &heights)), &chain, |b, chain| {
            b.iter(|| enumerate_admissible(black_box(chain)).unwrap())
        });
    }
    group.finish();
}

fn bench_sfill(c: &mut Criterion) {
    let mut group = c.benchmark_group("sfill_all");
    for (lie, heights) in cases() {
        let chain = lambda_chain_from_heights(&lie, &heights).unwrap();
        let subsets = enumerate_admissible(&chain).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label(&lie, &heights)), &subsets, |b, subsets| {
            b.iter(|| subsets.iter().for_each(|j| drop(black_box(sfill(&chain, j).unwrap()))))
        });
    }
    group.finish();
}

fn bench_invert(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert_all");
    for (lie, heights) in cases() {
        let chain = lambda_chain_from_heights(&lie, &heights).unwrap();
        let elements = enumerate_tensor(&lie, &heights).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label(&lie, &heights)), &elements, |b, elements| {
            b.iter(|| elements.iter().for_each(|t| drop(black_box(invert(&chain, t).unwrap()))))
        });
    }
    group.finish();
}

fn bench_qbg(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_qbg");
    for lie in [LieType::a(5).unwrap(), LieType::b(4).unwrap(), LieType::d(4).unwrap()] {
        group.bench_with_input(BenchmarkId::from_parameter(lie), &lie, |b, lie| b.iter(|| build_qbg(black_box(lie)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_sfill, bench_invert, bench_qbg);
criterion_main!(benches);
