use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use magic_bench::{mandl_subset_dfa, mid_jjs};
use magic_core::analysis::{find_permutation_cycles_nfa, is_aperiodic, is_in_family, Family};
use magic_core::automata::minimize_brzozowski;
use magic_core::decomposition::quadratic_upper;
use magic_core::verify::{verify_cell, WitnessSpec};
use magic_core::witness::gen_infix_closed;
use magic_core::{determinize, minimize, Limits};

fn bench_determinize(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinize_jjs");
    for n in [8u32, 10, 12] {
        let (_, nfa) = mid_jjs(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &nfa, |b, nfa| {
            b.iter(|| determinize(nfa).unwrap())
        });
    }
    group.finish();
}

fn bench_minimize(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimize_mandl");
    for n in [8u32, 12] {
        let d = mandl_subset_dfa(n);
        group.bench_with_input(BenchmarkId::new("hopcroft", n), &d, |b, d| b.iter(|| minimize(d)));
        group.bench_with_input(BenchmarkId::new("brzozowski", n), &d, |b, d| {
            b.iter(|| minimize_brzozowski(d))
        });
    }
    group.finish();
}

fn bench_checks(c: &mut Criterion) {
    let a2 = gen_infix_closed(8, 100).unwrap().a2;
    let d = minimize(&determinize(&a2).unwrap());
    c.bench_function("infix_closed_check_8_100", |b| {
        b.iter(|| is_in_family(&d, Family::InfixClosed).unwrap())
    });
    let mandl = minimize(&mandl_subset_dfa(10));
    c.bench_function("aperiodic_mandl_10", |b| b.iter(|| is_aperiodic(&mandl).unwrap()));
    let (_, nfa) = mid_jjs(6);
    c.bench_function("relation_monoid_jjs_6", |b| {
        b.iter(|| find_permutation_cycles_nfa(&nfa, 20_000_000).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("verify_cell");
    group.sample_size(20);
    for (class, n, alpha) in [
        ("general", 10u32, 600u64),
        ("infix-closed", 8, 100),
        ("finite", 11, quadratic_upper(11)),
    ] {
        let spec = WitnessSpec::new(class.parse().unwrap(), n, alpha).unwrap();
        group.bench_function(format!("{class}_{n}_{alpha}"), |b| {
            b.iter(|| verify_cell(&spec, &limits, false).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_determinize, bench_minimize, bench_checks, bench_verify);
criterion_main!(benches);
