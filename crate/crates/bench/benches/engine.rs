use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qtcat::algebra::{gamma_expand, GammaBasis};
use qtcat::cfrac::{cf_series, named_spec, qt_catalan};
use qtcat::mfs::{orbit, ActionKind};
use qtcat::perm::{distribution, stat, StatKey};
use qtcat_bench::{class, symmetric_group, weights};

fn fractions(c: &mut Criterion) {
    let mut g = c.benchmark_group("cf_series");
    for order in [8, 12, 16] {
        let spec = named_spec("qt-catalan").unwrap();
        g.bench_with_input(BenchmarkId::new("qt-catalan", order), &order, |b, &n| {
            b.iter(|| cf_series(black_box(&spec), n))
        });
    }
    g.finish();
}

fn distributions(c: &mut Criterion) {
    let mut g = c.benchmark_group("distribution");
    g.sample_size(20);
    let w = weights("t^des,q^13-2");
    for n in [8, 10] {
        let spec = class(&format!("av:231@n={n}"));
        g.bench_with_input(BenchmarkId::new("av231", n), &spec, |b, s| b.iter(|| distribution(black_box(s), &w)));
    }
    let alt = class("alt;av:2413,3142@n=11");
    g.bench_function("alt-separable-11", |b| b.iter(|| distribution(black_box(&alt), &[])));
    g.finish();
}

fn statistics(c: &mut Criterion) {
    let perms = symmetric_group(7);
    let keys: Vec<StatKey> = ["inv", "31-2", "adi", "cros"].iter().map(|s| s.parse().unwrap()).collect();
    let mut g = c.benchmark_group("stat-s7");
    for k in &keys {
        g.bench_function(k.to_string(), |b| b.iter(|| perms.iter().map(|p| stat(p, k)).sum::<u32>()));
    }
    g.finish();
}

fn gamma(c: &mut Criterion) {
    let p = qt_catalan(14);
    c.bench_function("gamma qt-catalan 14", |b| b.iter(|| gamma_expand(black_box(&p), GammaBasis::one_plus_t(13))));
}

fn orbits(c: &mut Criterion) {
    let perms = symmetric_group(6);
    c.bench_function("orbits S_6", |b| {
        b.iter(|| perms.iter().map(|p| orbit(p, ActionKind::PhiPrimeZero).len()).sum::<usize>())
    });
}

criterion_group!(benches, fractions, distributions, statistics, gamma, orbits);
criterion_main!(benches);
