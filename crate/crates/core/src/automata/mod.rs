mod alphabet;
mod determinize;
mod dfa;
mod minimize;
mod nfa;
mod ops;
mod stateset;
mod text;

use std::borrow::Cow;

pub use alphabet::{Alphabet, Word};
pub use determinize::{determinize, determinize_with, min_dfa_size, min_dfa_size_with};
pub use dfa::Dfa;
pub use minimize::{minimize, minimize_brzozowski};
pub use nfa::{Nfa, NfaBuilder};
pub use ops::{
    bounded_language, concat, equivalent, first_difference, is_empty, mnfa_to_nfa, product, reverse, ProductMode,
};
pub use stateset::StateSet;
pub use text::{parse_automaton, AnyAutomaton};

use crate::error::Result;

/// Resource caps for the exponential constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_subsets: usize,
    pub max_monoid: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subsets: 1_000_000,
            max_monoid: 1_000_000,
        }
    }
}

/// Common view of [`Nfa`] and [`Dfa`].
pub trait Automaton {
    fn alphabet(&self) -> &Alphabet;
    fn state_count(&self) -> usize;
    fn accepts(&self, w: &Word) -> Result<bool>;
    fn as_nfa(&self) -> Cow<'_, Nfa>;
    /// A complete DFA for the same language (the value itself for a DFA).
    fn as_dfa(&self, limits: &Limits) -> Result<Cow<'_, Dfa>>;
}

impl Automaton for Nfa {
    fn alphabet(&self) -> &Alphabet {
        Nfa::alphabet(self)
    }
    fn state_count(&self) -> usize {
        Nfa::state_count(self)
    }
    fn accepts(&self, w: &Word) -> Result<bool> {
        Nfa::accepts(self, w)
    }
    fn as_nfa(&self) -> Cow<'_, Nfa> {
        Cow::Borrowed(self)
    }
    fn as_dfa(&self, limits: &Limits) -> Result<Cow<'_, Dfa>> {
        determinize_with(self, limits).map(Cow::Owned)
    }
}

impl Automaton for Dfa {
    fn alphabet(&self) -> &Alphabet {
        Dfa::alphabet(self)
    }
    fn state_count(&self) -> usize {
        Dfa::state_count(self)
    }
    fn accepts(&self, w: &Word) -> Result<bool> {
        Dfa::accepts(self, w)
    }
    fn as_nfa(&self) -> Cow<'_, Nfa> {
        Cow::Owned(self.to_nfa())
    }
    fn as_dfa(&self, _: &Limits) -> Result<Cow<'_, Dfa>> {
        Ok(Cow::Borrowed(self))
    }
}
