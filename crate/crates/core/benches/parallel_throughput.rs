//! Sequential-versus-parallel throughput of the two data-parallel kernels:
//! the spin scan over seed lines and the automorphism backtracking fan-out.
//!
//! With the default `parallel` feature, `threads-1` pins a one-thread rayon
//! pool (the baseline) and `threads-0` uses every core. Building the bench
//! with `--no-default-features` measures the branch-free sequential
//! fallback instead; its results must be identical, only slower.

use criterion::{criterion_group, criterion_main, Criterion};
use eisenlat::fields::{Field, F3};
use eisenlat::model::difference_code;
use eisenlat::plane::{Plane, PlaneGroup, N_POINTS};
use eisenlat::{catalog, fmat, isometry, par};

/// The first `count` canonical seed lines of the sum-zero space, encoded
/// exactly as the uniqueness scan encodes them.
fn seed_lines(count: usize) -> Vec<Vec<F3>> {
    let mut seeds = Vec::with_capacity(count);
    let mut x = 0usize;
    while seeds.len() < count {
        x += 1;
        let mut v: Vec<F3> = Vec::with_capacity(N_POINTS);
        let mut rest = x;
        let mut sum = F3::new(0);
        for _ in 0..12 {
            let d = F3::new((rest % 3) as u8);
            rest /= 3;
            sum = sum.add(d);
            v.push(d);
        }
        v.push(sum.neg());
        if matches!(v.iter().find(|c| !c.is_zero()), Some(c) if c.value() == 1) {
            seeds.push(v);
        }
    }
    seeds
}

fn bench_spin_scan(c: &mut Criterion) {
    let plane = Plane::new();
    let gens = PlaneGroup::point_generators(&plane);
    let code = difference_code(&plane);
    let seeds = seed_lines(2048);
    let mut group = c.benchmark_group("spin-scan-2048-lines");
    group.sample_size(10);
    for threads in [1usize, 0] {
        group.bench_function(format!("threads-{threads}"), |b| {
            b.iter(|| {
                par::install(threads, || {
                    let dims = par::map(&seeds, |v| {
                        let closure = fmat::spin(std::slice::from_ref(v), &gens);
                        assert!(closure.dim() == 12 || code.contains(v));
                        closure.dim()
                    });
                    dims.iter().sum::<usize>()
                })
            })
        });
    }
    group.finish();
}

fn bench_aut_count(c: &mut Criterion) {
    let e6 = catalog::root_lattice(catalog::RootKind::E6);
    let mut group = c.benchmark_group("aut-count-e6");
    group.sample_size(10);
    for threads in [1usize, 0] {
        group.bench_function(format!("threads-{threads}"), |b| {
            b.iter(|| {
                par::install(threads, || {
                    let n = isometry::aut_count(&e6, 1_000_000).unwrap();
                    assert_eq!(n, 1296);
                    n
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_spin_scan, bench_aut_count);
criterion_main!(benches);
