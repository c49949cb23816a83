use std::collections::HashSet;
use std::hash::{BuildHasher, BuildHasherDefault, DefaultHasher};
use std::ops::ControlFlow;

use hashbrown::HashTable;
use serde::Serialize;

use rustc_hash::FxHashSet;

use crate::automata::{determinize, minimize, Dfa, Limits, Nfa, StateSet, Word};
use crate::error::{Error, Result};

// arena entries allowed before giving up regardless of the element cap
const ARENA_CAP: usize = 1 << 28;

/// States `P0, ..., P(len-1)` with `P(i) · word = P(i+1 mod len)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationCycle {
    pub word: Word,
    pub states: Vec<usize>,
    pub labels: Option<Vec<StateSet>>,
}

/// Breadth-first closure of the letter transformations of a DFA.
///
/// Elements live in one flat arena; element `i` is `arena[i*n..(i+1)*n]` and
/// is reached by the word `word(parent[i].0) · parent[i].1`.
pub(crate) struct TransitionMonoid {
    n: usize,
    arena: Vec<u16>,
    parent: Vec<(u32, u8)>,
}

impl TransitionMonoid {
    pub(crate) fn len(&self) -> usize {
        self.parent.len()
    }

    pub(crate) fn element(&self, i: usize) -> &[u16] {
        &self.arena[i * self.n..(i + 1) * self.n]
    }

    pub(crate) fn word(&self, mut i: usize) -> Word {
        let mut rev = Vec::new();
        while i != 0 {
            let (p, s) = self.parent[i];
            rev.push(s as usize);
            i = p as usize;
        }
        rev.reverse();
        Word::from(rev)
    }

    /// Explores the monoid, calling `visit` on each new element (identity first).
    /// Stops early when `visit` breaks.
    pub(crate) fn explore(
        d: &Dfa,
        max_elements: usize,
        mut visit: impl FnMut(&TransitionMonoid, usize) -> ControlFlow<()>,
    ) -> Result<TransitionMonoid> {
        let n = d.state_count();
        let sigma = d.alphabet().len();
        if n > u16::MAX as usize || sigma > u8::MAX as usize + 1 {
            return Err(Error::NotSupported(format!(
                "transition monoid of a DFA with {n} states over {sigma} symbols"
            )));
        }
        let hasher = BuildHasherDefault::<DefaultHasher>::default();
        let mut m = TransitionMonoid {
            n,
            arena: (0..n as u16).collect(),
            parent: vec![(0, 0)],
        };
        let mut table: HashTable<u32> = HashTable::new();
        table.insert_unique(hasher.hash_one(m.element(0)), 0, |_| unreachable!());
        if visit(&m, 0).is_break() {
            return Ok(m);
        }
        let mut scratch = vec![0u16; n];
        let mut i = 0;
        while i < m.len() {
            for s in 0..sigma {
                for (q, slot) in scratch.iter_mut().enumerate() {
                    *slot = d.next(m.arena[i * n + q] as usize, s) as u16;
                }
                let h = hasher.hash_one(&scratch[..]);
                let arena = &m.arena;
                if table
                    .find(h, |&j| arena[j as usize * n..(j as usize + 1) * n] == scratch[..])
                    .is_some()
                {
                    continue;
                }
                let id = m.len();
                if id >= max_elements {
                    return Err(Error::Resource {
                        what: "transition monoid elements",
                        cap: max_elements,
                    });
                }
                if m.arena.len() + n > ARENA_CAP {
                    return Err(Error::Resource {
                        what: "transition monoid arena entries",
                        cap: ARENA_CAP,
                    });
                }
                m.arena.extend_from_slice(&scratch);
                m.parent.push((i as u32, s as u8));
                let arena = &m.arena;
                table.insert_unique(h, id as u32, |&j| {
                    hasher.hash_one(&arena[j as usize * n..(j as usize + 1) * n])
                });
                if visit(&m, id).is_break() {
                    return Ok(m);
                }
            }
            i += 1;
        }
        Ok(m)
    }
}

/// Cycles of length at least two in the functional graph of `f`.
pub(crate) fn nontrivial_cycles(f: &[u16]) -> Vec<Vec<usize>> {
    let n = f.len();
    // 0 = unvisited, otherwise the walk id that first touched the state
    let mut walk = vec![0usize; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if walk[start] != 0 {
            continue;
        }
        let id = start + 1;
        let mut q = start;
        while walk[q] == 0 {
            walk[q] = id;
            q = f[q] as usize;
        }
        if walk[q] == id && f[q] as usize != q {
            let mut cycle = vec![q];
            let mut p = f[q] as usize;
            while p != q {
                cycle.push(p);
                p = f[p] as usize;
            }
            cycles.push(cycle);
        }
    }
    cycles
}

/// No word induces a non-trivial permutation on any set of states of the
/// minimal DFA for `L(d)`.
pub fn is_aperiodic(d: &Dfa) -> Result<bool> {
    is_aperiodic_with(d, &Limits::default())
}

pub fn is_aperiodic_with(d: &Dfa, limits: &Limits) -> Result<bool> {
    let m = minimize(d);
    let mut aperiodic = true;
    TransitionMonoid::explore(&m, limits.max_monoid, |mon, i| {
        if nontrivial_cycles(mon.element(i)).is_empty() {
            ControlFlow::Continue(())
        } else {
            aperiodic = false;
            ControlFlow::Break(())
        }
    })?;
    Ok(aperiodic)
}

/// All distinct permutation cycles of the minimal DFA for `L(d)`, each with a
/// shortest word inducing it.
///
/// States are numbered as in `minimize(d)`; when `d` carries subset labels,
/// each merged state keeps the label of the first subset reached.
pub fn find_permutation_cycles(d: &Dfa, max_monoid: usize) -> Result<Vec<PermutationCycle>> {
    let m = minimize(d);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    TransitionMonoid::explore(&m, max_monoid, |mon, i| {
        for mut cycle in nontrivial_cycles(mon.element(i)) {
            let lo = (0..cycle.len()).min_by_key(|&j| cycle[j]).unwrap();
            cycle.rotate_left(lo);
            if seen.insert(cycle.clone()) {
                out.push(PermutationCycle {
                    word: mon.word(i),
                    labels: m.labels().map(|l| cycle.iter().map(|&q| l[q].clone()).collect()),
                    states: cycle,
                });
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Boolean relation on at most 11 states packed row-major into a `u128`.
#[derive(Clone, Copy)]
struct Packed {
    n: usize,
    row_mask: u128,
}

impl Packed {
    fn row(&self, x: u128, i: usize) -> usize {
        ((x >> (i * self.n)) & self.row_mask) as usize
    }

    fn mul(&self, x: u128, y: u128) -> u128 {
        let mut rows = [0u128; 11];
        for (j, r) in rows.iter_mut().enumerate().take(self.n) {
            *r = self.row(y, j) as u128;
        }
        let mut out = 0;
        for i in 0..self.n {
            let mut bits = self.row(x, i);
            let mut r = 0;
            while bits != 0 {
                r |= rows[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            out |= r << (i * self.n);
        }
        out
    }

    /// `R^(w+1) = R^w` for the idempotent power `R^w`.
    fn has_period_one(&self, x: u128) -> bool {
        // the index of an n x n Boolean matrix is at most (n-1)^2 + 1 <= 2^7
        let mut p = x;
        for _ in 0..7 {
            let q = self.mul(p, p);
            if q == p {
                break;
            }
            p = q;
        }
        self.mul(p, x) == p
    }
}

/// Same result as `find_permutation_cycles(&determinize(nfa)?, ..)`, computed
/// from the monoid of Boolean relations of the NFA (at most 11 states) instead
/// of the DFA's transformation monoid.
///
/// A relation whose powers have period one induces no cycle on subsets, so
/// only the remaining relations are applied to the DFA states.
pub fn find_permutation_cycles_nfa(nfa: &Nfa, max_monoid: usize) -> Result<Vec<PermutationCycle>> {
    let n = nfa.state_count();
    let sigma = nfa.alphabet().len();
    if n > 11 || sigma > u8::MAX as usize + 1 {
        return Err(Error::NotSupported(format!(
            "relation monoid of an NFA with {n} states over {sigma} symbols"
        )));
    }
    let m = minimize(&determinize(nfa)?);
    let pk = Packed {
        n,
        row_mask: (1u128 << n) - 1,
    };
    // right multiplication by a letter, one lookup per row
    let tables: Vec<Vec<u128>> = (0..sigma)
        .map(|s| {
            (0..1usize << n)
                .map(|mask| {
                    (0..n)
                        .filter(|q| mask >> q & 1 == 1)
                        .flat_map(|q| nfa.successors(q, s).iter())
                        .fold(0u128, |r, t| r | 1 << t)
                })
                .collect()
        })
        .collect();
    let identity = (0..n).fold(0u128, |x, i| x | 1 << (i * n + i));
    let mut elems = vec![identity];
    let mut parent: Vec<(u32, u8)> = vec![(0, 0)];
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(identity);
    let mut cycles_seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let word_of = |parent: &[(u32, u8)], mut i: usize| {
        let mut rev = Vec::new();
        while i != 0 {
            rev.push(parent[i].1 as usize);
            i = parent[i].0 as usize;
        }
        rev.reverse();
        Word::from(rev)
    };
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        if !pk.has_period_one(x) {
            let w = word_of(&parent, i);
            let f: Vec<u16> = (0..m.state_count())
                .map(|c| m.run_from(c, &w).map(|t| t as u16))
                .collect::<Result<_>>()?;
            for mut cycle in nontrivial_cycles(&f) {
                let lo = (0..cycle.len()).min_by_key(|&j| cycle[j]).unwrap();
                cycle.rotate_left(lo);
                if cycles_seen.insert(cycle.clone()) {
                    out.push(PermutationCycle {
                        word: w.clone(),
                        labels: m.labels().map(|l| cycle.iter().map(|&q| l[q].clone()).collect()),
                        states: cycle,
                    });
                }
            }
        }
        for (s, table) in tables.iter().enumerate() {
            let y = (0..n).fold(0u128, |y, r| y | table[pk.row(x, r)] << (r * n));
            if seen.insert(y) {
                if elems.len() >= max_monoid {
                    return Err(Error::Resource {
                        what: "relation monoid elements",
                        cap: max_monoid,
                    });
                }
                elems.push(y);
                parent.push((i as u32, s as u8));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// No two distinct members of the cycle have labels related by inclusion.
pub fn check_lemma1(c: &PermutationCycle) -> Result<bool> {
    let labels = c
        .labels
        .as_ref()
        .ok_or_else(|| Error::input("permutation cycle carries no subset labels"))?;
    for (i, p) in labels.iter().enumerate() {
        for (j, q) in labels.iter().enumerate() {
            if i != j && p.is_subset(q) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{determinize, Alphabet, Nfa};

    fn even_a() -> Nfa {
        Nfa::builder(Alphabet::from_chars("a").unwrap(), 2)
            .initial(0)
            .accept(0)
            .on(0, "a", [1])
            .on(1, "a", [0])
            .build()
            .unwrap()
    }

    #[test]
    fn even_length_is_periodic() {
        let d = determinize(&even_a()).unwrap();
        assert!(!is_aperiodic(&d).unwrap());
        let cycles = find_permutation_cycles(&d, 1000).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].word, Word::from(vec![0]));
        assert_eq!(cycles[0].states.len(), 2);
        assert!(check_lemma1(&cycles[0]).unwrap());
    }

    #[test]
    fn universal_language_is_aperiodic() {
        let d = Dfa::trivial(Alphabet::from_chars("ab").unwrap(), true);
        assert!(is_aperiodic(&d).unwrap());
        assert!(find_permutation_cycles(&d, 10).unwrap().is_empty());
    }

    #[test]
    fn lemma1_detects_inclusion() {
        let c = PermutationCycle {
            word: Word::empty(),
            states: vec![0, 1],
            labels: Some(vec![StateSet::singleton(0), [0, 1].iter().collect()]),
        };
        assert!(!check_lemma1(&c).unwrap());
        let unlabeled = PermutationCycle { labels: None, ..c };
        assert!(check_lemma1(&unlabeled).is_err());
    }

    #[test]
    fn monoid_cap() {
        // cyclic shift and transposition generate all 120 permutations of 5 states
        let sigma = Alphabet::from_chars("ab").unwrap();
        let d = Dfa::from_fn(
            sigma,
            5,
            0,
            |q| q == 0,
            |q, s| match s {
                0 => (q + 1) % 5,
                _ => [1, 0, 2, 3, 4][q],
            },
        )
        .unwrap();
        assert!(matches!(find_permutation_cycles(&d, 50), Err(Error::Resource { .. })));
        assert!(!find_permutation_cycles(&d, 1000).unwrap().is_empty());
    }

    #[test]
    fn relation_monoid_agrees() {
        let d = determinize(&even_a()).unwrap();
        assert_eq!(
            find_permutation_cycles_nfa(&even_a(), 100).unwrap(),
            find_permutation_cycles(&d, 100).unwrap()
        );
        // three-state rotation with a collapsing letter
        let sigma = Alphabet::from_chars("ab").unwrap();
        let nfa = Nfa::builder(sigma, 3)
            .initial(0)
            .accept(2)
            .on(0, "a", [1])
            .on(1, "a", [2])
            .on(2, "a", [0])
            .on(0, "b", [0, 1])
            .on(2, "b", [2])
            .build()
            .unwrap();
        let via_dfa = find_permutation_cycles(&determinize(&nfa).unwrap(), 10_000).unwrap();
        assert!(!via_dfa.is_empty());
        assert_eq!(find_permutation_cycles_nfa(&nfa, 10_000).unwrap(), via_dfa);
    }

    #[test]
    fn functional_graph_cycles() {
        assert_eq!(nontrivial_cycles(&[1, 2, 0, 3, 3]), vec![vec![0, 1, 2]]);
        assert!(nontrivial_cycles(&[0, 0, 1]).is_empty());
    }
}
