#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use magic_core::{Alphabet, Dfa, Nfa, Word};
use proptest::prelude::*;
use rand::Rng;

/// NFA over the first `sigma` latin letters with initial state 0; `trans[q * sigma + s]`
/// and `acc` are bitmasks.
pub fn nfa_from_masks(n: usize, sigma: usize, trans: &[u32], acc: u32) -> Nfa {
    let mut b = Nfa::builder(Alphabet::latin(sigma).unwrap(), n)
        .initial(0)
        .accepts((0..n).filter(|q| acc >> q & 1 == 1));
    for q in 0..n {
        for s in 0..sigma {
            b = b.transition(q, s, (0..n).filter(|t| trans[q * sigma + s] >> t & 1 == 1));
        }
    }
    b.build().unwrap()
}

pub fn random_nfa(rng: &mut impl Rng, max_states: usize, max_sigma: usize) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let sigma = rng.gen_range(1..=max_sigma);
    // sparse-ish images keep the subset automata interesting
    let trans: Vec<u32> = (0..n * sigma)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.35)).fold(0, |m, t| m | 1 << t))
        .collect();
    let acc = rng.gen_range(0..1u32 << n);
    nfa_from_masks(n, sigma, &trans, acc)
}

pub fn random_dfa(rng: &mut impl Rng, max_states: usize, max_sigma: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let sigma = rng.gen_range(1..=max_sigma);
    let delta: Vec<usize> = (0..n * sigma).map(|_| rng.gen_range(0..n)).collect();
    let accepting = (0..n).map(|_| rng.gen_bool(0.4)).collect();
    Dfa::new(Alphabet::latin(sigma).unwrap(), 0, accepting, delta).unwrap()
}

pub fn arb_nfa(max_states: usize, max_sigma: usize) -> impl Strategy<Value = Nfa> {
    (1..=max_states, 1..=max_sigma).prop_flat_map(|(n, sigma)| {
        (prop::collection::vec(0u32..1 << n, n * sigma), 0u32..1 << n)
            .prop_map(move |(trans, acc)| nfa_from_masks(n, sigma, &trans, acc))
    })
}

pub fn arb_dfa(max_states: usize, max_sigma: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states, 1..=max_sigma).prop_flat_map(|(n, sigma)| {
        (
            prop::collection::vec(0..n, n * sigma),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(delta, acc)| Dfa::new(Alphabet::latin(sigma).unwrap(), 0, acc, delta).unwrap())
    })
}

/// All words of length at most `max_len` in length-lexicographic order.
pub fn all_words(sigma: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..sigma {
                let mut v: Vec<usize> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::from));
        layer = next;
    }
    out
}

/// Direct set simulation, independent of the library's determinization.
pub fn simulate(nfa: &Nfa, w: &Word) -> bool {
    let mut cur: BTreeSet<usize> = nfa.initial().iter().collect();
    for &s in w.symbols() {
        cur = cur.iter().flat_map(|&q| nfa.successors(q, s).iter()).collect();
    }
    cur.iter().any(|&q| nfa.accepting().contains(q))
}

pub fn run_dfa(d: &Dfa, w: &Word) -> bool {
    let mut q = d.initial();
    for &s in w.symbols() {
        q = d.next(q, s);
    }
    d.is_accepting(q)
}

pub fn words(alphabet: &Alphabet, list: &[&str]) -> Vec<Word> {
    list.iter().map(|w| alphabet.parse_word(w).unwrap()).collect()
}

/// Minimal DFA size by textbook means: explicit subset construction over
/// `BTreeSet`s, then the pairwise table-filling algorithm.
pub fn brute_min_dfa_size(nfa: &Nfa) -> usize {
    let sigma = nfa.alphabet().len();
    let start: BTreeSet<usize> = nfa.initial().iter().collect();
    let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut delta = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        for s in 0..sigma {
            let t: BTreeSet<usize> = subsets[i].iter().flat_map(|&q| nfa.successors(q, s).iter()).collect();
            let id = *index.entry(t.clone()).or_insert_with(|| {
                subsets.push(t);
                subsets.len() - 1
            });
            delta.push(id);
        }
        i += 1;
    }
    let accepting: Vec<bool> = subsets
        .iter()
        .map(|p| p.iter().any(|&q| nfa.accepting().contains(q)))
        .collect();
    table_filling_classes(subsets.len(), sigma, &accepting, &delta)
}

/// Number of Myhill-Nerode classes of a complete DFA whose states are all reachable.
pub fn table_filling_classes(n: usize, sigma: usize, accepting: &[bool], delta: &[usize]) -> usize {
    let mut distinct = vec![vec![false; n]; n];
    for p in 0..n {
        for q in 0..n {
            distinct[p][q] = accepting[p] != accepting[q];
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for p in 0..n {
            for q in 0..p {
                if !distinct[p][q] && (0..sigma).any(|s| distinct[delta[p * sigma + s]][delta[q * sigma + s]]) {
                    distinct[p][q] = true;
                    distinct[q][p] = true;
                    changed = true;
                }
            }
        }
    }
    (0..n).filter(|&p| (0..p).all(|q| distinct[p][q])).count()
}

/// For one `k`, every `m` that is a legal tail sum: `m = sum (2^ki - 1)` over a
/// strictly decreasing list `k >= k1 > ... > kl >= 1`, the last term possibly
/// doubled, with `l + doubled <= k`. Entry `m` holds `Some(strict)` when legal,
/// where `strict` says some legal list also has `l <= k - 1`.
pub fn legal_tail_sums(k: u32) -> Vec<Option<bool>> {
    let mut out = vec![None; 1 << (k + 1)];
    for subset in 1u32..1 << k {
        // bit j-1 of `subset` selects term 2^j - 1
        let l = subset.count_ones();
        let low = subset.trailing_zeros() + 1;
        let base: u64 = (1..=k)
            .filter(|j| subset >> (j - 1) & 1 == 1)
            .map(|j| (1u64 << j) - 1)
            .sum();
        for doubled in [false, true] {
            if l + doubled as u32 > k {
                continue;
            }
            let m = if doubled { base + (1u64 << low) - 1 } else { base };
            let slot = &mut out[m as usize];
            let strict = l < k;
            *slot = Some(slot.unwrap_or(false) || strict);
        }
    }
    out
}

/// The unique `k` with `alpha = n - (k+1) + 2^k + m` and `1 <= m < 2^k`.
pub fn split_alpha(n: u32, alpha: u64) -> Option<(u32, u64)> {
    (1..n).find_map(|k| {
        let m = (alpha + k as u64 + 1).checked_sub(n as u64 + (1u64 << k))?;
        (1..1u64 << k).contains(&m).then_some((k, m))
    })
}
