use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use coxsigns::cocycle::{coboundary, eval_epsilon, eval_z, Backend};
use coxsigns::cohomology::{is_coboundary, restrict_cocycle, GroupShape};
use coxsigns::omega::{classify_restrictions, omega_of};
use coxsigns::CoxeterSystem;
use coxsigns_bench::random_tuples;

fn epsilon(c: &mut Criterion) {
    let mut g = c.benchmark_group("eps3");
    for t in ["A3", "B4", "D6", "E7"] {
        let sys = CoxeterSystem::build(t).unwrap();
        let tuples = random_tuples(&sys, 3, 64, 1);
        for (name, backend) in [("chamber", Backend::Chamber), ("inversion", Backend::Inversion)] {
            g.bench_with_input(BenchmarkId::new(name, t), &tuples, |b, ts| {
                b.iter(|| {
                    for tup in ts {
                        black_box(eval_epsilon(&sys, 3, tup, backend).unwrap());
                    }
                })
            });
        }
    }
    g.finish();
}

fn cocycle_condition(c: &mut Criterion) {
    let sys = CoxeterSystem::build("B3").unwrap();
    let tuples = random_tuples(&sys, 4, 64, 2);
    c.bench_function("delta_z3_b3", |b| {
        b.iter(|| {
            for t in &tuples {
                black_box(coboundary(&sys, 3, |u| eval_z(&sys, 3, u), t).unwrap());
            }
        })
    });
}

fn omega(c: &mut Criterion) {
    let mut g = c.benchmark_group("omega");
    g.sample_size(10);
    for t in ["D4", "A5", "E7"] {
        let sys = CoxeterSystem::build(t).unwrap();
        g.bench_function(BenchmarkId::new("classify", t), |b| b.iter(|| black_box(classify_restrictions(&sys).unwrap())));
    }
    let d6 = CoxeterSystem::build("D6").unwrap();
    let om = omega_of(&d6).unwrap();
    let cochain = restrict_cocycle(&d6, 3, &om.elements).unwrap();
    let klein = GroupShape::Klein.group();
    g.bench_function("f2_solve_klein", |b| b.iter(|| black_box(is_coboundary(&klein, &cochain).unwrap())));
    g.finish();
}

criterion_group!(benches, epsilon, cocycle_condition, omega);
criterion_main!(benches);
