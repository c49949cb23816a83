mod common;

use std::collections::BTreeSet;

use common::brute_min_dfa_size;
use magic_core::analysis::{is_aperiodic, is_in_family, structural_all_initial_accepting, verify_fooling_set, Family};
use magic_core::decomposition::{decompose_alpha, exponential_alphas, quadratic_upper};
use magic_core::witness::{
    boundary_fooling_set, gen_boundary, gen_finite_exponential, gen_finite_quadratic, gen_infix_closed, gen_jjs,
    gen_mandl, gen_suffix_closed, infix_closed_fooling_set, mandl_dfa_size, suffix_closed_catalog,
};
use magic_core::{determinize, min_dfa_size, minimize, Dfa, Nfa, Word};

fn size(nfa: &Nfa) -> u64 {
    min_dfa_size(nfa).unwrap() as u64
}

fn min_dfa(nfa: &Nfa) -> Dfa {
    minimize(&determinize(nfa).unwrap())
}

fn subsets(nfa: &Nfa) -> BTreeSet<Vec<usize>> {
    determinize(nfa)
        .unwrap()
        .labels()
        .unwrap()
        .iter()
        .map(|l| l.iter().collect())
        .collect()
}

#[test]
fn jjs_examples() {
    assert_eq!(size(&gen_jjs(4, 6).unwrap()), 6);
    for alpha in 6..32 {
        let nfa = gen_jjs(5, alpha).unwrap();
        assert_eq!(nfa.state_count(), 5);
        assert_eq!(nfa.alphabet().symbols().join(""), "abcd");
        assert_eq!(size(&nfa), alpha);
        assert_eq!(brute_min_dfa_size(&nfa) as u64, alpha);
    }
    for n in 3..=8 {
        assert_eq!(size(&gen_jjs(n, n as u64 + 1).unwrap()), n as u64 + 1);
    }
    assert!(gen_jjs(4, 16).is_err());
}

#[test]
fn jjs_subset_split() {
    // n - (k+1) tail states, then 2^k + m subsets inside the core
    for (n, alpha) in [(6u32, 23u64), (7, 50), (5, 12)] {
        let d = decompose_alpha(n, alpha).unwrap();
        let k = d.k as usize;
        let labels = subsets(&gen_jjs(n, alpha).unwrap());
        let core = labels.iter().filter(|l| l.iter().all(|&q| q <= k)).count() as u64;
        assert_eq!(core, (1u64 << k) + d.m, "n={n} alpha={alpha}");
        assert_eq!(labels.len() as u64 - core, (n as u64) - (k as u64 + 1));
    }
}

#[test]
fn boundary_examples() {
    let unary = gen_boundary(4, 4).unwrap();
    assert_eq!(size(&unary), 4);
    assert_eq!(
        verify_fooling_set(&min_dfa(&unary), &boundary_fooling_set(4))
            .unwrap()
            .bound,
        4
    );
    let one = gen_boundary(1, 1).unwrap();
    assert_eq!(one.state_count(), 1);
    assert_eq!(size(&one), 1);
    assert_eq!(size(&gen_boundary(4, 16).unwrap()), 16);
    assert!(gen_boundary(4, 5).is_err());
    for n in 2..=10u32 {
        assert_eq!(size(&gen_boundary(n, n as u64).unwrap()), n as u64);
        assert_eq!(size(&gen_boundary(n, 1 << n).unwrap()), 1 << n);
    }
}

#[test]
fn infix_closed_examples() {
    let w = gen_infix_closed(4, 6).unwrap();
    assert_eq!(size(&w.a2), 6);
    let d = min_dfa(&w.a2);
    assert!(is_in_family(&d, Family::InfixClosed).unwrap());
    assert!(structural_all_initial_accepting(&w.a1));
    assert_eq!(
        verify_fooling_set(&d, &infix_closed_fooling_set(4, 2)).unwrap().bound,
        4
    );
    assert_eq!(w.a2.alphabet().symbols().join(""), "abcd#$");

    let one = gen_infix_closed(1, 1).unwrap();
    assert_eq!((one.a2.state_count(), size(&one.a2)), (1, 1));
    assert!(gen_infix_closed(4, 9).is_err());
}

#[test]
fn infix_closed_tail_census() {
    for (n, alpha) in [(6u32, 10u64), (7, 12), (5, 8)] {
        let w = gen_infix_closed(n, alpha).unwrap();
        let k = w.decomposition.as_ref().unwrap().k as usize;
        let n = n as usize;
        let d = determinize(&w.a2).unwrap();
        let dollar = w.a2.alphabet().index_of("$").unwrap();
        let labels = d.labels().unwrap();
        assert_eq!(labels[d.initial()].iter().collect::<Vec<_>>(), vec![n - 1]);
        for i in 1..=n - k - 1 {
            let q = d.run_from(d.initial(), &Word::from(vec![dollar; i])).unwrap();
            let mut expected: Vec<usize> = vec![1];
            expected.extend(k + 1..=n - 1 - i);
            assert_eq!(labels[q].iter().collect::<Vec<_>>(), expected, "n={n} i={i}");
        }
    }
}

#[test]
fn suffix_closed_examples() {
    let via_infix = gen_suffix_closed(4, 6).unwrap();
    assert_eq!(via_infix, gen_infix_closed(4, 6).unwrap().a2);
    assert!(is_in_family(&min_dfa(&via_infix), Family::SuffixClosed).unwrap());
    assert_eq!(size(&gen_suffix_closed(1, 1).unwrap()), 1);
    let three = gen_suffix_closed(3, 3).unwrap();
    assert_eq!(size(&three), 3);
    let catalog = suffix_closed_catalog().unwrap();
    assert_eq!(catalog.iter().map(|(n, _)| *n).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
    for (n, a) in catalog {
        assert_eq!(a.state_count(), n as usize);
        assert_eq!(size(&a), n as u64);
        assert!(is_in_family(&min_dfa(&a), Family::SuffixClosed).unwrap());
    }
    assert!(gen_suffix_closed(6, 6).is_err());
}

#[test]
fn quadratic_examples() {
    let b = |v: &[Vec<usize>]| v.iter().cloned().collect::<BTreeSet<_>>();
    let seven = gen_finite_quadratic(4, 7).unwrap();
    assert_eq!(seven.successors(0, 0).iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    assert_eq!(size(&seven), 7);
    assert_eq!(
        subsets(&seven),
        b(&[vec![], vec![0], vec![1], vec![2], vec![3], vec![1, 2, 3], vec![2, 3]])
    );
    let six = gen_finite_quadratic(4, 6).unwrap();
    assert_eq!(six.successors(0, 0).iter().collect::<Vec<_>>(), vec![1, 3]);
    assert_eq!(size(&six), 6);
    assert_eq!(size(&gen_finite_quadratic(4, 5).unwrap()), 5);
}

#[test]
fn mandl_examples() {
    for n in 2..=12u32 {
        let a = gen_mandl(n).unwrap();
        assert_eq!(size(&a), mandl_dfa_size(n), "n={n}");
        assert!(is_in_family(&min_dfa(&a), Family::Finite).unwrap());
    }
    assert_eq!(mandl_dfa_size(2), 3);
    assert_eq!(mandl_dfa_size(4), 7);
    assert_eq!(mandl_dfa_size(5), 11);
}

#[test]
fn exponential_examples() {
    for (n, alpha) in [(5, 9), (5, 11), (6, 13)] {
        assert_eq!(size(&gen_finite_exponential(n, alpha).unwrap()), alpha);
    }
    assert!(gen_finite_exponential(5, 10).is_err());
}

#[test]
fn generators_keep_their_shape() {
    for n in 3..=7u32 {
        for alpha in n as u64 + 1..=quadratic_upper(n) {
            let a = gen_finite_quadratic(n, alpha).unwrap();
            assert_eq!(a.state_count(), n as usize);
            let d = min_dfa(&a);
            assert_eq!(d.state_count() as u64, alpha);
            assert!(is_in_family(&d, Family::Finite).unwrap() && is_aperiodic(&d).unwrap());
        }
        for alpha in exponential_alphas(n) {
            assert_eq!(gen_finite_exponential(n, alpha).unwrap().state_count(), n as usize);
        }
        for alpha in n as u64 + 1..=1 << (n - 1) {
            let w = gen_infix_closed(n, alpha).unwrap();
            assert_eq!((w.a1.state_count(), w.a2.state_count()), (n as usize, n as usize));
        }
    }
}
