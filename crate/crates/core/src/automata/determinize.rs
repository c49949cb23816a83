use std::collections::HashMap;
use std::hash::Hash;

use crate::automata::{minimize, Dfa, Limits, Nfa, StateSet};
use crate::error::{Error, Result};

/// Reachable part of the powerset automaton, numbered breadth-first with symbols
/// in alphabet order. State 0 is the initial subset; the empty subset shows up
/// only when reachable. Uses the default [`Limits`].
pub fn determinize(nfa: &Nfa) -> Result<Dfa> {
    determinize_with(nfa, &Limits::default())
}

pub fn determinize_with(nfa: &Nfa, limits: &Limits) -> Result<Dfa> {
    if nfa.state_count() <= 64 {
        determinize_small(nfa, limits)
    } else {
        determinize_general(nfa, limits)
    }
}

/// State count of the minimal complete DFA for `L(nfa)`.
pub fn min_dfa_size(nfa: &Nfa) -> Result<usize> {
    min_dfa_size_with(nfa, &Limits::default())
}

pub fn min_dfa_size_with(nfa: &Nfa, limits: &Limits) -> Result<usize> {
    Ok(minimize(&determinize_with(nfa, limits)?).state_count())
}

fn bfs<K, F>(start: K, sigma: usize, limits: &Limits, mut step: F) -> Result<(Vec<K>, Vec<usize>)>
where
    K: Clone + Eq + Hash,
    F: FnMut(&K, usize) -> K,
{
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut order = vec![start.clone()];
    index.insert(start, 0);
    let mut delta = Vec::new();
    let mut i = 0;
    while i < order.len() {
        for s in 0..sigma {
            let t = step(&order[i], s);
            let next = order.len();
            let id = *index.entry(t.clone()).or_insert(next);
            if id == next {
                if next >= limits.max_subsets {
                    return Err(Error::Resource {
                        what: "subset states",
                        cap: limits.max_subsets,
                    });
                }
                order.push(t);
            }
            delta.push(id);
        }
        i += 1;
    }
    Ok((order, delta))
}

fn determinize_small(nfa: &Nfa, limits: &Limits) -> Result<Dfa> {
    let sigma = nfa.alphabet().len();
    let n = nfa.state_count();
    let mask = |s: &StateSet| s.iter().fold(0u64, |m, q| m | 1 << q);
    let table: Vec<u64> = (0..n * sigma)
        .map(|i| mask(nfa.successors(i / sigma, i % sigma)))
        .collect();
    let finals = mask(nfa.accepting());
    let (order, delta) = bfs(mask(nfa.initial()), sigma, limits, |&p, s| {
        let mut bits = p;
        let mut out = 0;
        while bits != 0 {
            let q = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= table[q * sigma + s];
        }
        out
    })?;
    let accepting = order.iter().map(|&p| p & finals != 0).collect();
    let labels = order
        .iter()
        .map(|&p| (0..64).filter(|q| p >> q & 1 == 1).collect())
        .collect();
    Ok(Dfa::new(nfa.alphabet().clone(), 0, accepting, delta)?.with_labels(labels))
}

fn determinize_general(nfa: &Nfa, limits: &Limits) -> Result<Dfa> {
    let sigma = nfa.alphabet().len();
    let (order, delta) = bfs(nfa.initial().clone(), sigma, limits, |p, s| nfa.step(p, s))?;
    let accepting = order.iter().map(|p| p.intersects(nfa.accepting())).collect();
    Ok(Dfa::new(nfa.alphabet().clone(), 0, accepting, delta)?.with_labels(order))
}
