use crate::automata::{Alphabet, Nfa, StateSet, Word};
use crate::error::{Error, Result};

/// Complete deterministic automaton.
///
/// When produced by determinization, `labels()` maps each state to the subset of
/// NFA states it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: usize,
    accepting: Vec<bool>,
    // indexed by state * |alphabet| + symbol
    delta: Vec<usize>,
    labels: Option<Vec<StateSet>>,
}

impl Dfa {
    /// `delta` is the row-major transition table, one row of `|alphabet|` targets per state.
    pub fn new(alphabet: Alphabet, initial: usize, accepting: Vec<bool>, delta: Vec<usize>) -> Result<Dfa> {
        let n = accepting.len();
        if n == 0 {
            return Err(Error::input("a DFA needs at least one state"));
        }
        if delta.len() != n * alphabet.len() {
            return Err(Error::input(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                n * alphabet.len()
            )));
        }
        if initial >= n {
            return Err(Error::input(format!("initial state {initial} out of range")));
        }
        if let Some(t) = delta.iter().find(|&&t| t >= n) {
            return Err(Error::input(format!("transition target {t} out of range")));
        }
        Ok(Dfa {
            alphabet,
            initial,
            accepting,
            delta,
            labels: None,
        })
    }

    /// Builds from a transition function `f(state, symbol) -> state`.
    pub fn from_fn(
        alphabet: Alphabet,
        states: usize,
        initial: usize,
        accepting: impl Fn(usize) -> bool,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Dfa> {
        let sigma = alphabet.len();
        let delta = (0..states * sigma).map(|i| f(i / sigma, i % sigma)).collect();
        Dfa::new(alphabet, initial, (0..states).map(accepting).collect(), delta)
    }

    pub(crate) fn with_labels(mut self, labels: Vec<StateSet>) -> Dfa {
        debug_assert_eq!(labels.len(), self.state_count());
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Dfa {
        self.labels = None;
        self
    }

    /// Single-state DFA accepting everything (`accept = true`) or nothing.
    pub fn trivial(alphabet: Alphabet, accept: bool) -> Dfa {
        let sigma = alphabet.len();
        Dfa {
            alphabet,
            initial: 0,
            accepting: vec![accept],
            delta: vec![0; sigma],
            labels: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.state_count()).filter(|&q| self.accepting[q])
    }

    pub fn next(&self, q: usize, symbol: usize) -> usize {
        self.delta[q * self.alphabet.len() + symbol]
    }

    pub fn labels(&self) -> Option<&[StateSet]> {
        self.labels.as_deref()
    }

    pub fn label(&self, q: usize) -> Option<&StateSet> {
        self.labels.as_ref().map(|l| &l[q])
    }

    pub fn run_from(&self, q: usize, w: &Word) -> Result<usize> {
        w.check(&self.alphabet)?;
        Ok(w.symbols().iter().fold(q, |q, &s| self.next(q, s)))
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        Ok(self.accepting[self.run_from(self.initial, w)?])
    }

    /// The same DFA viewed as a (deterministic, total) NFA.
    pub fn to_nfa(&self) -> Nfa {
        let mut b = Nfa::builder(self.alphabet.clone(), self.state_count())
            .initial(self.initial)
            .accepts(self.accepting_states());
        for q in 0..self.state_count() {
            for s in 0..self.alphabet.len() {
                b = b.transition(q, s, [self.next(q, s)]);
            }
        }
        b.build().expect("a valid DFA is a valid NFA")
    }

    /// Complement: accepting and rejecting states swapped. Subset labels are dropped.
    pub fn complement(&self) -> Dfa {
        let mut d = self.clone().without_labels();
        for a in &mut d.accepting {
            *a = !*a;
        }
        d
    }

    /// States reachable from the initial state, in BFS order.
    pub fn reachable_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for s in 0..self.alphabet.len() {
                let t = self.next(q, s);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }

    /// Reachable states that can reach an accepting state.
    pub fn useful_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut reach = vec![false; n];
        for q in self.reachable_order() {
            reach[q] = true;
        }
        let mut pred = vec![Vec::new(); n];
        for q in 0..n {
            for s in 0..self.alphabet.len() {
                pred[self.next(q, s)].push(q);
            }
        }
        let mut co = self.accepting.clone();
        let mut stack: Vec<usize> = self.accepting_states().collect();
        while let Some(q) = stack.pop() {
            for &p in &pred[q] {
                if !co[p] {
                    co[p] = true;
                    stack.push(p);
                }
            }
        }
        (0..n).map(|q| reach[q] && co[q]).collect()
    }

    /// Canonical byte encoding: equal for two DFAs iff they are identical
    /// (including numbering). On minimized DFAs this identifies the language.
    pub fn canonical_key(&self) -> Vec<u32> {
        let mut key = Vec::with_capacity(2 + self.delta.len() + self.state_count());
        key.push(self.alphabet.len() as u32);
        key.push(self.initial as u32);
        key.extend(self.accepting.iter().map(|&a| a as u32));
        key.extend(self.delta.iter().map(|&t| t as u32));
        key
    }
}
