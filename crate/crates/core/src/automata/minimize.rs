use crate::automata::{determinize, reverse, Dfa, StateSet};
use crate::error::Result;

/// Minimal complete DFA by Hopcroft partition refinement.
///
/// Unreachable states are dropped first; the result is renumbered breadth-first.
/// If the input carries subset labels, each merged state keeps the label of its
/// lowest-numbered member.
pub fn minimize(d: &Dfa) -> Dfa {
    let sigma = d.alphabet().len();
    let order = d.reachable_order();
    let n = order.len();
    let mut local = vec![usize::MAX; d.state_count()];
    for (i, &q) in order.iter().enumerate() {
        local[q] = i;
    }
    let next = |i: usize, s: usize| local[d.next(order[i], s)];

    // predecessor lists in CSR form, keyed by target * sigma + symbol
    let mut count = vec![0usize; n * sigma + 1];
    for i in 0..n {
        for s in 0..sigma {
            count[next(i, s) * sigma + s + 1] += 1;
        }
    }
    for i in 1..count.len() {
        count[i] += count[i - 1];
    }
    let mut pred = vec![0usize; n * sigma];
    let mut fill = count.clone();
    for i in 0..n {
        for s in 0..sigma {
            let key = next(i, s) * sigma + s;
            pred[fill[key]] = i;
            fill[key] += 1;
        }
    }

    let mut p = Partition::new(n, |i| d.is_accepting(order[i]));
    let mut work: Vec<usize> = (0..p.start.len()).collect();
    let mut queued = vec![true; p.start.len()];
    let mut touched = Vec::new();
    let mut splitter = Vec::new();
    while let Some(b) = work.pop() {
        queued[b] = false;
        splitter.clear();
        splitter.extend_from_slice(&p.elems[p.start[b]..p.end[b]]);
        for s in 0..sigma {
            for &t in &splitter {
                let key = t * sigma + s;
                for &q in &pred[count[key]..count[key + 1]] {
                    if p.mark(q) {
                        touched.push(p.block[q]);
                    }
                }
            }
            for c in touched.drain(..) {
                if let Some(new) = p.split(c) {
                    queued.push(false);
                    let smaller = if p.size(new) <= p.size(c) { new } else { c };
                    let add = if queued[c] { new } else { smaller };
                    if !queued[add] {
                        queued[add] = true;
                        work.push(add);
                    }
                }
            }
        }
    }

    let blocks = p.start.len();
    let mut rep = vec![usize::MAX; blocks];
    for (&b, &q) in p.block.iter().zip(&order).take(n) {
        rep[b] = rep[b].min(q);
    }
    quotient(d, blocks, |q| p.block[local[q]], &rep)
}

/// Builds the DFA over `blocks` classes, numbering classes breadth-first from
/// the class of the initial state.
fn quotient(d: &Dfa, blocks: usize, class: impl Fn(usize) -> usize, rep: &[usize]) -> Dfa {
    let sigma = d.alphabet().len();
    let mut id = vec![usize::MAX; blocks];
    let mut reps = vec![rep[class(d.initial())]];
    id[class(d.initial())] = 0;
    let mut delta = Vec::with_capacity(blocks * sigma);
    let mut i = 0;
    while i < reps.len() {
        let q = reps[i];
        for s in 0..sigma {
            let c = class(d.next(q, s));
            if id[c] == usize::MAX {
                id[c] = reps.len();
                reps.push(rep[c]);
            }
            delta.push(id[c]);
        }
        i += 1;
    }
    let accepting = reps.iter().map(|&q| d.is_accepting(q)).collect();
    let out = Dfa::new(d.alphabet().clone(), 0, accepting, delta).expect("quotient is well formed");
    match d.labels() {
        Some(labels) => out.with_labels(reps.iter().map(|&q| labels[q].clone()).collect::<Vec<StateSet>>()),
        None => out,
    }
}

/// Minimal complete DFA by double reversal: determinize(reverse(determinize(reverse(A)))).
pub fn minimize_brzozowski(d: &Dfa) -> Result<Dfa> {
    let once = determinize(&reverse(&d.to_nfa()))?;
    let twice = determinize(&reverse(&once.to_nfa()))?;
    Ok(twice.without_labels())
}

struct Partition {
    elems: Vec<usize>,
    loc: Vec<usize>,
    block: Vec<usize>,
    start: Vec<usize>,
    end: Vec<usize>,
    // members start..start+marked of a block are marked
    marked: Vec<usize>,
}

impl Partition {
    fn new(n: usize, accepting: impl Fn(usize) -> bool) -> Partition {
        let mut elems: Vec<usize> = (0..n).filter(|&i| accepting(i)).collect();
        let split = elems.len();
        elems.extend((0..n).filter(|&i| !accepting(i)));
        let mut p = Partition {
            loc: vec![0; n],
            block: vec![0; n],
            start: Vec::new(),
            end: Vec::new(),
            marked: Vec::new(),
            elems,
        };
        for (lo, hi) in [(0, split), (split, n)] {
            if lo < hi {
                let b = p.start.len();
                p.start.push(lo);
                p.end.push(hi);
                p.marked.push(0);
                for i in lo..hi {
                    p.block[p.elems[i]] = b;
                }
            }
        }
        for (i, &q) in p.elems.iter().enumerate() {
            p.loc[q] = i;
        }
        p
    }

    fn size(&self, b: usize) -> usize {
        self.end[b] - self.start[b]
    }

    /// Marks `q`; returns true if it is the first mark in its block.
    fn mark(&mut self, q: usize) -> bool {
        let b = self.block[q];
        let boundary = self.start[b] + self.marked[b];
        let i = self.loc[q];
        if i < boundary {
            return false;
        }
        let other = self.elems[boundary];
        self.elems.swap(i, boundary);
        self.loc[other] = i;
        self.loc[q] = boundary;
        self.marked[b] += 1;
        self.marked[b] == 1
    }

    /// Splits the marked members of `b` off into a new block, if that is a proper split.
    fn split(&mut self, b: usize) -> Option<usize> {
        let m = std::mem::take(&mut self.marked[b]);
        if m == self.size(b) {
            return None;
        }
        let new = self.start.len();
        self.start.push(self.start[b]);
        self.end.push(self.start[b] + m);
        self.marked.push(0);
        self.start[b] += m;
        for i in self.start[new]..self.end[new] {
            self.block[self.elems[i]] = new;
        }
        Some(new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;

    #[test]
    fn merges_equivalent_states() {
        // a* with three redundant copies plus an unreachable state
        let sigma = Alphabet::from_chars("a").unwrap();
        let d = Dfa::from_fn(sigma, 4, 0, |_| true, |q, _| (q + 1) % 3).unwrap();
        let m = minimize(&d);
        assert_eq!(m.state_count(), 1);
        assert_eq!(minimize(&m), m);
    }

    #[test]
    fn keeps_sink() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        // exactly the word "a"
        let d = Dfa::from_fn(sigma, 3, 0, |q| q == 1, |q, s| if q == 0 && s == 0 { 1 } else { 2 }).unwrap();
        let m = minimize(&d);
        assert_eq!(m.state_count(), 3);
        assert_eq!(minimize_brzozowski(&d).unwrap().state_count(), 3);
    }

    #[test]
    fn mod_counter() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        let d = Dfa::from_fn(sigma, 6, 0, |q| q % 3 == 0, |q, s| if s == 0 { (q + 1) % 6 } else { q }).unwrap();
        assert_eq!(minimize(&d).state_count(), 3);
        assert_eq!(minimize_brzozowski(&d).unwrap(), minimize(&d));
    }
}
