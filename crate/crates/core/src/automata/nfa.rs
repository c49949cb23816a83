use crate::automata::{Alphabet, StateSet, Word};
use crate::error::{Error, Result};

/// Partial nondeterministic automaton. Missing transitions have the empty image.
///
/// An automaton with more than one initial state must be built with
/// [`NfaBuilder::multi_entry`]; such values are MNFAs and may also have an empty
/// initial set (the reversal of an automaton without accepting states).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    states: usize,
    initial: StateSet,
    accepting: StateSet,
    // indexed by state * |alphabet| + symbol
    delta: Vec<StateSet>,
    multi_entry: bool,
}

impl Nfa {
    pub fn builder(alphabet: Alphabet, states: usize) -> NfaBuilder {
        NfaBuilder {
            nfa: Nfa {
                delta: vec![StateSet::new(); states * alphabet.len()],
                alphabet,
                states,
                initial: StateSet::new(),
                accepting: StateSet::new(),
                multi_entry: false,
            },
            error: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn accepting(&self) -> &StateSet {
        &self.accepting
    }

    pub fn is_multi_entry(&self) -> bool {
        self.multi_entry
    }

    pub fn successors(&self, q: usize, symbol: usize) -> &StateSet {
        &self.delta[q * self.alphabet.len() + symbol]
    }

    /// Image of a set of states under one symbol.
    pub fn step(&self, from: &StateSet, symbol: usize) -> StateSet {
        let mut out = StateSet::new();
        for q in from.iter() {
            out.union_with(self.successors(q, symbol));
        }
        out
    }

    pub fn run_from(&self, from: &StateSet, w: &Word) -> Result<StateSet> {
        w.check(&self.alphabet)?;
        let mut cur = from.clone();
        for &s in w.symbols() {
            cur = self.step(&cur, s);
        }
        Ok(cur)
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        Ok(self.run_from(&self.initial, w)?.intersects(&self.accepting))
    }

    /// Iterates `(state, symbol, targets)` for every non-empty image.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, &StateSet)> + '_ {
        let sigma = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(move |(i, t)| (i / sigma, i % sigma, t))
    }

    /// States from which an accepting state is reachable.
    pub fn coreachable(&self) -> StateSet {
        let sigma = self.alphabet.len();
        let mut pred = vec![Vec::new(); self.states];
        for (i, t) in self.delta.iter().enumerate() {
            for p in t.iter() {
                pred[p].push(i / sigma);
            }
        }
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = self.accepting.iter().collect();
        while let Some(q) = stack.pop() {
            for &p in &pred[q] {
                if !seen.contains(p) {
                    seen.insert(p);
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// States reachable from the initial set.
    pub fn reachable(&self) -> StateSet {
        let mut seen = self.initial.clone();
        let mut stack: Vec<usize> = self.initial.iter().collect();
        while let Some(q) = stack.pop() {
            for s in 0..self.alphabet.len() {
                for p in self.successors(q, s).iter() {
                    if !seen.contains(p) {
                        seen.insert(p);
                        stack.push(p);
                    }
                }
            }
        }
        seen
    }

    /// Same automaton with a different initial set (flagged multi-entry when needed).
    pub fn with_initial(&self, initial: StateSet) -> Result<Nfa> {
        let mut nfa = self.clone();
        if let Some(q) = initial.last() {
            if q >= self.states {
                return Err(Error::input(format!("initial state {q} out of range")));
            }
        }
        nfa.multi_entry = initial.len() != 1;
        nfa.initial = initial;
        Ok(nfa)
    }
}

/// Incremental constructor for [`Nfa`]; validation happens in [`NfaBuilder::build`].
#[derive(Clone, Debug)]
pub struct NfaBuilder {
    nfa: Nfa,
    error: Option<Error>,
}

impl NfaBuilder {
    fn check_state(&mut self, q: usize) -> bool {
        if q >= self.nfa.states {
            self.error
                .get_or_insert_with(|| Error::input(format!("state {q} out of range (states: {})", self.nfa.states)));
            false
        } else {
            true
        }
    }

    pub fn multi_entry(mut self) -> Self {
        self.nfa.multi_entry = true;
        self
    }

    pub fn initial(mut self, q: usize) -> Self {
        if self.check_state(q) {
            self.nfa.initial.insert(q);
        }
        self
    }

    pub fn initials(mut self, qs: impl IntoIterator<Item = usize>) -> Self {
        for q in qs {
            self = self.initial(q);
        }
        self
    }

    pub fn accept(mut self, q: usize) -> Self {
        if self.check_state(q) {
            self.nfa.accepting.insert(q);
        }
        self
    }

    pub fn accepts(mut self, qs: impl IntoIterator<Item = usize>) -> Self {
        for q in qs {
            self = self.accept(q);
        }
        self
    }

    /// Adds `targets` to the image of `(q, symbol)`.
    pub fn transition(mut self, q: usize, symbol: usize, targets: impl IntoIterator<Item = usize>) -> Self {
        if symbol >= self.nfa.alphabet.len() {
            self.error
                .get_or_insert_with(|| Error::input(format!("symbol index {symbol} out of range")));
            return self;
        }
        if !self.check_state(q) {
            return self;
        }
        let sigma = self.nfa.alphabet.len();
        for t in targets {
            if self.check_state(t) {
                self.nfa.delta[q * sigma + symbol].insert(t);
            }
        }
        self
    }

    /// Like [`transition`](Self::transition) with the symbol given by name.
    pub fn on(self, q: usize, symbol: &str, targets: impl IntoIterator<Item = usize>) -> Self {
        match self.nfa.alphabet.index_of(symbol) {
            Some(s) => self.transition(q, s, targets),
            None => {
                let mut b = self;
                b.error
                    .get_or_insert_with(|| Error::input(format!("unknown symbol {symbol:?}")));
                b
            }
        }
    }

    pub fn build(self) -> Result<Nfa> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let nfa = self.nfa;
        if nfa.states == 0 {
            return Err(Error::input("an automaton needs at least one state"));
        }
        if !nfa.multi_entry && nfa.initial.len() != 1 {
            return Err(Error::input(format!(
                "expected exactly one initial state, got {}; use multi_entry() for MNFAs",
                nfa.initial.len()
            )));
        }
        Ok(nfa)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_ab2() -> Nfa {
        let sigma = Alphabet::from_chars("ab").unwrap();
        Nfa::builder(sigma, 3)
            .initial(0)
            .accept(2)
            .transition(0, 0, [1])
            .transition(0, 1, [1])
            .transition(1, 0, [2])
            .transition(1, 1, [2])
            .build()
            .unwrap()
    }

    #[test]
    fn empty_word_accepted_iff_initial_accepting() {
        let nfa = chain_ab2();
        assert!(!nfa.accepts(&Word::empty()).unwrap());
        let sigma = Alphabet::from_chars("a").unwrap();
        let one = Nfa::builder(sigma, 1).initial(0).accept(0).build().unwrap();
        assert!(one.accepts(&Word::empty()).unwrap());
    }

    #[test]
    fn out_of_range_symbol_is_input_error() {
        let nfa = chain_ab2();
        assert!(matches!(nfa.accepts(&Word::from(vec![0, 7])), Err(Error::Input(_))));
    }

    #[test]
    fn builder_validation() {
        let sigma = Alphabet::from_chars("a").unwrap();
        assert!(Nfa::builder(sigma.clone(), 2).initial(0).initial(1).build().is_err());
        assert!(Nfa::builder(sigma.clone(), 2)
            .initials([0, 1])
            .multi_entry()
            .build()
            .is_ok());
        assert!(Nfa::builder(sigma.clone(), 2)
            .initial(0)
            .transition(0, 0, [2])
            .build()
            .is_err());
        assert!(Nfa::builder(sigma, 2).initial(0).on(0, "z", [1]).build().is_err());
    }

    #[test]
    fn reachability() {
        let nfa = chain_ab2();
        assert_eq!(nfa.coreachable(), StateSet::full(3));
        assert_eq!(nfa.reachable(), StateSet::full(3));
    }
}
