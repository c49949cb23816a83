use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use crate::automata::{Automaton, Dfa, Limits, Nfa, StateSet, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    Intersection,
    Union,
    Difference,
    SymmetricDifference,
}

impl ProductMode {
    fn accept(self, x: bool, y: bool) -> bool {
        match self {
            ProductMode::Intersection => x && y,
            ProductMode::Union => x || y,
            ProductMode::Difference => x && !y,
            ProductMode::SymmetricDifference => x != y,
        }
    }
}

/// Reachable product of two complete DFAs.
pub fn product(a: &Dfa, b: &Dfa, mode: ProductMode) -> Result<Dfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let sigma = a.alphabet().len();
    let start = (a.initial(), b.initial());
    let mut index = HashMap::from([(start, 0usize)]);
    let mut order = vec![start];
    let mut delta = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let (p, q) = order[i];
        for s in 0..sigma {
            let t = (a.next(p, s), b.next(q, s));
            let next = order.len();
            let id = *index.entry(t).or_insert(next);
            if id == next {
                order.push(t);
            }
            delta.push(id);
        }
        i += 1;
    }
    let accepting = order
        .iter()
        .map(|&(p, q)| mode.accept(a.is_accepting(p), b.is_accepting(q)))
        .collect();
    Dfa::new(a.alphabet().clone(), 0, accepting, delta)
}

/// True iff no accepting state is reachable.
pub fn is_empty(d: &Dfa) -> bool {
    d.reachable_order().into_iter().all(|q| !d.is_accepting(q))
}

/// A shortest (then lexicographically least) word in exactly one of the two
/// languages, or `None` when they are equal.
pub fn first_difference(x: &impl Automaton, y: &impl Automaton) -> Result<Option<Word>> {
    x.alphabet().ensure_same(y.alphabet())?;
    let limits = Limits::default();
    let (a, b) = (x.as_dfa(&limits)?, y.as_dfa(&limits)?);
    let sigma = a.alphabet().len();
    let start = (a.initial(), b.initial());
    // each reached pair maps to its predecessor pair and the symbol read
    type Trail = Option<((usize, usize), usize)>;
    let mut parent: HashMap<(usize, usize), Trail> = HashMap::from([(start, None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur @ (p, q)) = queue.pop_front() {
        if a.is_accepting(p) != b.is_accepting(q) {
            let mut rev = Vec::new();
            let mut at = cur;
            while let Some((prev, s)) = parent[&at] {
                rev.push(s);
                at = prev;
            }
            rev.reverse();
            return Ok(Some(Word::from(rev)));
        }
        for s in 0..sigma {
            let t = (a.next(p, s), b.next(q, s));
            if let Entry::Vacant(e) = parent.entry(t) {
                e.insert(Some((cur, s)));
                queue.push_back(t);
            }
        }
    }
    Ok(None)
}

/// Language equality via emptiness of the symmetric-difference product.
pub fn equivalent(x: &impl Automaton, y: &impl Automaton) -> Result<bool> {
    Ok(first_difference(x, y)?.is_none())
}

/// MNFA for the reversal: initial and accepting sets swapped, transitions inverted.
pub fn reverse(a: &Nfa) -> Nfa {
    let mut b = Nfa::builder(a.alphabet().clone(), a.state_count())
        .multi_entry()
        .initials(a.accepting().iter())
        .accepts(a.initial().iter());
    for (q, s, targets) in a.transitions() {
        for t in targets.iter() {
            b = b.transition(t, s, [q]);
        }
    }
    b.build().expect("reversal keeps indices valid")
}

/// Replaces an MNFA by a single-entry NFA started in `merged`, whose outgoing
/// transitions become the union of those of all states.
///
/// This is only language-preserving for special inputs, so the result is
/// compared with the input on all words up to length `states^2`; a mismatch
/// is reported as construction misuse.
pub fn mnfa_to_nfa(a: &Nfa, merged: usize) -> Result<Nfa> {
    let n = a.state_count();
    if merged >= n {
        return Err(Error::input(format!("merged state {merged} out of range")));
    }
    let sigma = a.alphabet().len();
    let mut b = Nfa::builder(a.alphabet().clone(), n)
        .initial(merged)
        .accepts(a.accepting().iter());
    for (q, s, targets) in a.transitions() {
        if q != merged {
            b = b.transition(q, s, targets.iter());
        }
        b = b.transition(merged, s, targets.iter());
    }
    let out = b.build()?;

    let max_len = n * n;
    let start = (a.initial().clone(), out.initial().clone());
    let mut seen = HashSet::from([start.clone()]);
    let mut layer = vec![(start, Word::empty())];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for ((p, q), w) in layer {
            if p.intersects(a.accepting()) != q.intersects(out.accepting()) {
                return Err(Error::ConstructionMisuse(format!(
                    "merging into state {merged} changes the language (word of length {len}: {})",
                    a.alphabet().format_word(&w)
                )));
            }
            if len == max_len {
                continue;
            }
            for s in 0..sigma {
                let t = (a.step(&p, s), out.step(&q, s));
                if seen.insert(t.clone()) {
                    let mut w2 = w.clone();
                    w2.push(s);
                    next.push((t, w2));
                }
            }
        }
        layer = next;
    }
    Ok(out)
}

/// MNFA for the concatenation `L(a) L(b)`.
pub fn concat(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let off = a.state_count();
    let a_nullable = a.initial().intersects(a.accepting());
    let b_nullable = b.initial().intersects(b.accepting());
    let shifted = |s: &StateSet| s.iter().map(|q| q + off).collect::<Vec<_>>();
    let mut out = Nfa::builder(a.alphabet().clone(), off + b.state_count())
        .multi_entry()
        .initials(a.initial().iter())
        .accepts(shifted(b.accepting()));
    if a_nullable {
        out = out.initials(shifted(b.initial()));
    }
    if b_nullable {
        out = out.accepts(a.accepting().iter());
    }
    for (q, s, targets) in a.transitions() {
        out = out.transition(q, s, targets.iter());
        if targets.intersects(a.accepting()) {
            out = out.transition(q, s, shifted(b.initial()));
        }
    }
    for (q, s, targets) in b.transitions() {
        out = out.transition(q + off, s, shifted(targets));
    }
    out.build()
}

/// Accepted words of length at most `max_len`, in length-lexicographic order.
pub fn bounded_language(a: &impl Automaton, max_len: usize) -> Vec<Word> {
    let nfa = a.as_nfa();
    let sigma = nfa.alphabet().len();
    let useful = nfa.coreachable();
    let mut out = Vec::new();
    let mut layer: Vec<(Word, StateSet)> = vec![(Word::empty(), nfa.initial().clone())];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for (w, set) in layer {
            if set.intersects(nfa.accepting()) {
                out.push(w.clone());
            }
            if len == max_len {
                continue;
            }
            for s in 0..sigma {
                let t = nfa.step(&set, s);
                if t.intersects(&useful) {
                    let mut w2 = w.clone();
                    w2.push(s);
                    next.push((w2, t));
                }
            }
        }
        layer = next;
    }
    out
}
