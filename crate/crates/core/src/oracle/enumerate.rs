use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automata::{Alphabet, Nfa};
use crate::error::{Error, Result};
use crate::oracle::key::MaskNfa;

/// Transition bits an exhaustive enumeration may range over.
pub const MAX_TRANSITION_BITS: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructuralFilter {
    #[default]
    None,
    AllAccepting,
    /// Every state initial and accepting; the automata are MNFAs.
    AllInitialAccepting,
    NonReturning,
    NonExiting,
}

impl StructuralFilter {
    pub const ALL: [StructuralFilter; 5] = [
        StructuralFilter::None,
        StructuralFilter::AllAccepting,
        StructuralFilter::AllInitialAccepting,
        StructuralFilter::NonReturning,
        StructuralFilter::NonExiting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructuralFilter::None => "none",
            StructuralFilter::AllAccepting => "all-accepting",
            StructuralFilter::AllInitialAccepting => "all-initial-accepting",
            StructuralFilter::NonReturning => "non-returning",
            StructuralFilter::NonExiting => "non-exiting",
        }
    }
}

impl fmt::Display for StructuralFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructuralFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StructuralFilter::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::input(format!("unknown structural filter {s:?}")))
    }
}

/// The encoding space of `n`-state automata over `sigma` symbols.
///
/// A code holds one bit per transition `q -s-> t` at position
/// `(q * sigma + s) * n + t`, followed by one bit per state for acceptance
/// (absent when the filter fixes acceptance). State 0 is the initial state
/// unless every state is initial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NfaSpace {
    pub n: usize,
    pub sigma: usize,
    pub filter: StructuralFilter,
}

impl NfaSpace {
    /// Rejects spaces too large to enumerate exhaustively.
    pub fn exhaustive(n: usize, sigma: usize, filter: StructuralFilter) -> Result<NfaSpace> {
        let space = NfaSpace::sampled(n, sigma, filter)?;
        if space.transition_bits() > MAX_TRANSITION_BITS {
            return Err(Error::Feasibility(format!(
                "{n} states over {sigma} symbols give {} transition bits (limit {MAX_TRANSITION_BITS})",
                space.transition_bits()
            )));
        }
        Ok(space)
    }

    /// Any space whose automata fit the bitmask representation.
    pub fn sampled(n: usize, sigma: usize, filter: StructuralFilter) -> Result<NfaSpace> {
        if n == 0 || n > 16 {
            return Err(Error::Feasibility(format!("{n} states (supported: 1..=16)")));
        }
        if sigma == 0 || sigma > 26 {
            return Err(Error::input(format!("alphabet size {sigma} (supported: 1..=26)")));
        }
        Ok(NfaSpace { n, sigma, filter })
    }

    pub fn transition_bits(&self) -> usize {
        self.n * self.n * self.sigma
    }

    fn fixed_acceptance(&self) -> bool {
        matches!(
            self.filter,
            StructuralFilter::AllAccepting | StructuralFilter::AllInitialAccepting
        )
    }

    pub fn code_bits(&self) -> usize {
        self.transition_bits() + if self.fixed_acceptance() { 0 } else { self.n }
    }

    /// Number of codes, admissible or not.
    pub fn size(&self) -> u64 {
        1u64 << self.code_bits()
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub(crate) fn initial_set(&self) -> u32 {
        if self.filter == StructuralFilter::AllInitialAccepting {
            self.full()
        } else {
            1
        }
    }

    pub(crate) fn decode_into(&self, code: u64, a: &mut MaskNfa) {
        let (n, sigma) = (self.n, self.sigma);
        a.n = n;
        a.sigma = sigma;
        a.trans.clear();
        let row = (1u64 << n) - 1;
        a.trans.extend((0..n * sigma).map(|i| ((code >> (i * n)) & row) as u32));
        a.init = self.initial_set();
        a.acc = if self.fixed_acceptance() {
            self.full()
        } else {
            ((code >> self.transition_bits()) & row) as u32
        };
    }

    /// Connected and satisfying the structural filter.
    pub(crate) fn admissible(&self, a: &MaskNfa) -> bool {
        let ok = match self.filter {
            StructuralFilter::None | StructuralFilter::AllAccepting | StructuralFilter::AllInitialAccepting => true,
            StructuralFilter::NonReturning => a.trans.iter().all(|&t| t & a.init == 0),
            StructuralFilter::NonExiting => (0..a.n)
                .filter(|q| a.acc >> q & 1 == 1)
                .all(|q| a.trans[q * a.sigma..(q + 1) * a.sigma].iter().all(|&t| t == 0)),
        };
        ok && a.all_reachable()
    }

    pub(crate) fn build_nfa(&self, a: &MaskNfa) -> Nfa {
        let alphabet = Alphabet::latin(self.sigma).expect("checked alphabet size");
        let states = |mask: u32| (0..self.n).filter(move |q| mask >> q & 1 == 1);
        let mut b = Nfa::builder(alphabet, self.n).accepts(states(a.acc));
        b = if self.filter == StructuralFilter::AllInitialAccepting {
            b.multi_entry().initials(states(a.init))
        } else {
            b.initial(0)
        };
        for q in 0..self.n {
            for s in 0..self.sigma {
                b = b.transition(q, s, states(a.trans[q * self.sigma + s]));
            }
        }
        b.build().expect("decoded automata are well formed")
    }

    /// The automaton of an admissible code.
    pub fn decode(&self, code: u64) -> Option<Nfa> {
        let mut a = MaskNfa::default();
        self.decode_into(code, &mut a);
        self.admissible(&a).then(|| self.build_nfa(&a))
    }
}

/// Every connected `n`-state automaton over `sigma` latin letters passing
/// `filter`, in code order.
pub fn enumerate_nfas(n: usize, sigma: usize, filter: StructuralFilter) -> Result<impl Iterator<Item = Nfa>> {
    let space = NfaSpace::exhaustive(n, sigma, filter)?;
    let mut a = MaskNfa::default();
    Ok((0..space.size()).filter_map(move |code| {
        space.decode_into(code, &mut a);
        space.admissible(&a).then(|| space.build_nfa(&a))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{structural_all_accepting, structural_non_exiting, structural_non_returning};

    #[test]
    fn single_state() {
        assert_eq!(enumerate_nfas(1, 1, StructuralFilter::None).unwrap().count(), 4);
    }

    #[test]
    fn two_states_unary() {
        // 0 -> 1 must be present; the other three transitions and both
        // acceptance bits are free
        assert_eq!(enumerate_nfas(2, 1, StructuralFilter::None).unwrap().count(), 8 * 4);
    }

    #[test]
    fn guard() {
        assert!(enumerate_nfas(3, 3, StructuralFilter::None).is_err());
        assert!(enumerate_nfas(4, 1, StructuralFilter::None).is_ok());
    }

    #[test]
    fn filters_hold() {
        assert!(enumerate_nfas(2, 2, StructuralFilter::AllAccepting)
            .unwrap()
            .all(|a| structural_all_accepting(&a)));
        assert!(enumerate_nfas(2, 2, StructuralFilter::NonReturning)
            .unwrap()
            .all(|a| structural_non_returning(&a)));
        assert!(enumerate_nfas(2, 2, StructuralFilter::NonExiting)
            .unwrap()
            .all(|a| structural_non_exiting(&a)));
    }
}
