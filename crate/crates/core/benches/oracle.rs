use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::sync::Arc;

use reflexa::finite::oracle::{oracle_cases, run_cases};
use reflexa::finite::{hom_space, Exec, FiniteAlgebra, FiniteModule, FpMatrix};

fn exec_modes() -> [(&'static str, Exec); 2] {
    [
        ("sequential", Exec::Sequential),
        ("parallel", Exec::Parallel),
    ]
}

fn case_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_cases");
    group.sample_size(10);
    for n in [50usize, 200] {
        let cases = oracle_cases(1, n);
        for (name, exec) in exec_modes() {
            group.bench_with_input(BenchmarkId::new(name, cases.len()), &cases, |b, cases| {
                b.iter(|| run_cases(cases, 1, exec).unwrap())
            });
        }
    }
    group.finish();
}

/// Exhaustive scan of `Hom(A + A, S^6)` for an invertible map, where none
/// exists, over `A = GF(3)[x]/(x^3)`: 3^12 candidates.
fn exhaustive_scan(c: &mut Criterion) {
    let a = Arc::new(FiniteAlgebra::truncated(3, 3).unwrap());
    let reg = FiniteModule::regular(&a);
    let s = FiniteModule::simple_modules(&a).remove(0);
    let m = reg.direct_sum(&reg);
    let n = (1..6).fold(s.clone(), |acc, _| acc.direct_sum(&s));
    let basis = hom_space(&m, &n);
    let p = m.p();
    let total = p.pow(basis.len() as u32);
    let candidate = |mut i: u64| {
        let mut f = FpMatrix::zeros(p, n.dim(), m.dim());
        for b in &basis {
            f = f.add(&b.scale(i % p));
            i /= p;
        }
        f.is_invertible()
    };
    let mut group = c.benchmark_group("exhaustive_scan");
    group.sample_size(10);
    for (name, exec) in exec_modes() {
        group.bench_function(name, |bch| {
            bch.iter(|| assert_eq!(exec.find_first(total, candidate), None))
        });
    }
    group.finish();
}

criterion_group!(benches, case_sweep, exhaustive_scan);
criterion_main!(benches);
