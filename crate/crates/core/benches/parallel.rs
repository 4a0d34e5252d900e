use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use squaring::batch::{resistance_batch, solve_sizes_batch};
use squaring::circuit::{kirchhoff_system, Netlist};
use squaring::fixtures;
use squaring::linsolve::{gauss_jordan_with, Elimination};
use squaring::{Field, Rational};

/// `n × n` lattice of resistors with random small rational values, driven
/// corner to corner.
fn lattice(n: usize, rng: &mut ChaCha8Rng) -> Netlist<Rational> {
    let mut net = Netlist::new();
    let name = |i: usize, j: usize| format!("v{i}_{j}");
    let mut k = 0;
    let mut add = |net: &mut Netlist<Rational>, a: String, b: String, rng: &mut ChaCha8Rng| {
        k += 1;
        let v = Rational::frac(rng.gen_range(1..10), rng.gen_range(1..5));
        net.add_resistor(&format!("r{k}"), &a, &b, v).unwrap();
    };
    for i in 0..n {
        for j in 0..n {
            if i + 1 < n {
                add(&mut net, name(i, j), name(i + 1, j), rng);
            }
            if j + 1 < n {
                add(&mut net, name(i, j), name(i, j + 1), rng);
            }
        }
    }
    net.set_battery(&name(0, 0), &name(n - 1, n - 1), Rational::from_int(1))
        .unwrap();
    net
}

fn strategies() -> [(&'static str, Elimination); 2] {
    [
        ("sequential", Elimination::Sequential),
        ("parallel", Elimination::Parallel),
    ]
}

fn elimination(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut group = c.benchmark_group("kirchhoff_elimination");
    group.sample_size(10);
    for n in [4, 6, 8] {
        let sys = kirchhoff_system(&lattice(n, &mut rng)).unwrap();
        for (label, s) in strategies() {
            group.bench_with_input(BenchmarkId::new(label, n), &sys, |b, sys| {
                b.iter(|| gauss_jordan_with(sys, s))
            });
        }
    }
    group.finish();
}

fn batches(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let nets: Vec<_> = (0..32).map(|_| lattice(4, &mut rng)).collect();
    let tilings: Vec<_> = (0..32)
        .map(|k| fixtures::grid(2 + k % 5, 2 + k % 3))
        .collect();
    let mut group = c.benchmark_group("batch");
    group.sample_size(10);
    for (label, s) in strategies() {
        group.bench_function(BenchmarkId::new("resistance", label), |b| {
            b.iter(|| resistance_batch(&nets, s))
        });
        group.bench_function(BenchmarkId::new("solve_sizes", label), |b| {
            b.iter(|| solve_sizes_batch(&tilings, s))
        });
    }
    group.finish();
}

criterion_group!(benches, elimination, batches);
criterion_main!(benches);
