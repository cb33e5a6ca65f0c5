use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use symdio::parse::{parse_poly, to_expr};
use symdio::pencil::{canonical_quintic, solve_quintic};
use symdio::rational::{frac, int};
use symdio::reduce::{self, Grouping};
use symdio::symfunc::{decompose_power_sums, elementary, power_sum};
use symdio::verify::{certify_grid, certify_randomized, CertifyOptions, Target};
use symdio::{Poly, SymmetricForm};

fn arithmetic(c: &mut Criterion) {
    let mut g = c.benchmark_group("arithmetic");
    for n in [6usize, 10] {
        let e3 = elementary(3, n);
        let p4 = power_sum(4, n);
        g.bench_with_input(BenchmarkId::new("e3*p4", n), &n, |b, _| b.iter(|| black_box(&e3 * &p4)));
    }
    let x = &Poly::var(3, 0) + &Poly::var(3, 1).scale(&frac(2, 3));
    let y = &Poly::var(3, 2) - &Poly::one(3);
    g.bench_function("pow-20", |b| b.iter(|| black_box((&x + &y).pow(20))));
    g.finish();
}

fn symmetric_functions(c: &mut Criterion) {
    let f = (1..=3).fold(Poly::zero(8), |acc, k| &acc + &(&power_sum(k, 8) * &power_sum(7 - k, 8)).scale(&int(k as i64)));
    let f = SymmetricForm::new(f).unwrap();
    c.bench_function("decompose-degree-7-in-8", |b| b.iter(|| decompose_power_sums(black_box(&f)).unwrap()));
}

fn parsing(c: &mut Criterion) {
    let text = to_expr(&(&power_sum(5, 12) + &(&power_sum(3, 12) * &power_sum(2, 12)).scale(&frac(-7, 4))));
    c.bench_function("parse-quintic-12", |b| b.iter(|| parse_poly(black_box(&text), None).unwrap()));
}

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(10);
    let opts = CertifyOptions::default();
    let diag = SymmetricForm::new(power_sum(5, 6)).unwrap();
    g.bench_function("solve-diagonal-quintic", |b| b.iter(|| solve_quintic(black_box(&diag), &opts).unwrap()));
    let mixed = SymmetricForm::new(canonical_quintic(&frac(3, 7), &frac(-2, 5))).unwrap();
    g.bench_function("solve-mixed-quintic", |b| b.iter(|| solve_quintic(black_box(&mixed), &opts).unwrap()));
    let sol = solve_quintic(&diag, &opts).unwrap();
    g.bench_function("certify-grid", |b| b.iter(|| certify_grid(diag.poly(), black_box(&sol), &Target::Zero).unwrap()));
    g.bench_function("certify-randomized", |b| {
        b.iter(|| certify_randomized(diag.poly(), black_box(&sol), &Target::Zero, &opts).unwrap())
    });
    let septic = SymmetricForm::new(power_sum(7, 24)).unwrap();
    g.bench_function("reduce-degree-7", |b| {
        b.iter(|| reduce::reduce_steps(black_box(&septic), 2, Grouping::Aligned).unwrap())
    });
    g.finish();
}

criterion_group!(benches, arithmetic, symmetric_functions, parsing, pipeline);
criterion_main!(benches);
