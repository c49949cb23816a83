use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::monoid::is_aperiodic_with;
use crate::automata::{concat, determinize_with, is_empty, minimize, product, Alphabet, Dfa, Limits, Nfa, ProductMode};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PrefixFree,
    SuffixFree,
    InfixFree,
    PrefixClosed,
    SuffixClosed,
    InfixClosed,
    Finite,
    Star,
    StarFree,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::PrefixFree,
        Family::SuffixFree,
        Family::InfixFree,
        Family::PrefixClosed,
        Family::SuffixClosed,
        Family::InfixClosed,
        Family::Finite,
        Family::Star,
        Family::StarFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PrefixFree => "prefix-free",
            Family::SuffixFree => "suffix-free",
            Family::InfixFree => "infix-free",
            Family::PrefixClosed => "prefix-closed",
            Family::SuffixClosed => "suffix-closed",
            Family::InfixClosed => "infix-closed",
            Family::Finite => "finite",
            Family::Star => "star",
            Family::StarFree => "star-free",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::input(format!("unknown family {s:?}")))
    }
}

/// Decides membership of `L(d)` in `family`. The DFA is minimized first.
pub fn is_in_family(d: &Dfa, family: Family) -> Result<bool> {
    is_in_family_with(d, family, &Limits::default())
}

pub fn is_in_family_with(d: &Dfa, family: Family, limits: &Limits) -> Result<bool> {
    let m = minimize(d);
    let lang = Lang::new(&m, limits);
    match family {
        Family::Finite => Ok(lang.is_finite()),
        Family::PrefixFree => Ok(lang.prefix_free()),
        Family::PrefixClosed => Ok(lang.prefix_closed()),
        Family::SuffixFree => lang.suffix_free(),
        Family::SuffixClosed => lang.suffix_closed(),
        Family::InfixFree => Ok(lang.prefix_free()
            && lang.suffix_free()?
            && lang.disjoint_from(&lang.padded(true, false)?)?
            && lang.disjoint_from(&lang.padded(false, true)?)?),
        Family::InfixClosed => Ok(lang.prefix_closed() && lang.suffix_closed()?),
        Family::Star => lang.is_star(),
        Family::StarFree => is_aperiodic_with(&m, limits),
    }
}

struct Lang<'a> {
    dfa: &'a Dfa,
    useful: Vec<bool>,
    limits: &'a Limits,
}

impl<'a> Lang<'a> {
    fn new(dfa: &'a Dfa, limits: &'a Limits) -> Self {
        Lang {
            useful: dfa.useful_states(),
            dfa,
            limits,
        }
    }

    fn sigma(&self) -> usize {
        self.dfa.alphabet().len()
    }

    fn is_finite(&self) -> bool {
        // a cycle through useful states means infinitely many words
        let n = self.dfa.state_count();
        let mut color = vec![0u8; n];
        for root in 0..n {
            if !self.useful[root] || color[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            color[root] = 1;
            while let Some((q, s)) = stack.pop() {
                if s == self.sigma() {
                    color[q] = 2;
                    continue;
                }
                stack.push((q, s + 1));
                let t = self.dfa.next(q, s);
                if !self.useful[t] {
                    continue;
                }
                match color[t] {
                    0 => {
                        color[t] = 1;
                        stack.push((t, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn prefix_free(&self) -> bool {
        self.dfa
            .accepting_states()
            .filter(|&q| self.useful[q])
            .all(|q| (0..self.sigma()).all(|s| !self.useful[self.dfa.next(q, s)]))
    }

    fn prefix_closed(&self) -> bool {
        (0..self.dfa.state_count()).all(|q| !self.useful[q] || self.dfa.is_accepting(q))
    }

    fn nfa(&self) -> Nfa {
        self.dfa.to_nfa()
    }

    fn disjoint_from(&self, other: &Nfa) -> Result<bool> {
        let o = determinize_with(other, self.limits)?;
        Ok(is_empty(&product(self.dfa, &o, ProductMode::Intersection)?))
    }

    fn contains(&self, other: &Nfa) -> Result<bool> {
        let o = determinize_with(other, self.limits)?;
        Ok(is_empty(&product(&o, self.dfa, ProductMode::Difference)?))
    }

    /// `Σ⁺ L`, `L Σ⁺`, or `Σ⁺ L Σ*` / `Σ* L Σ⁺` depending on the flags.
    fn padded(&self, left_plus: bool, right_plus: bool) -> Result<Nfa> {
        let alphabet = self.dfa.alphabet();
        let mut l = concat(&sigma_power(alphabet, left_plus), &self.nfa())?;
        l = concat(&l, &sigma_power(alphabet, right_plus))?;
        Ok(l)
    }

    fn suffix_free(&self) -> Result<bool> {
        let sigma_plus_l = concat(&sigma_power(self.dfa.alphabet(), true), &self.nfa())?;
        self.disjoint_from(&sigma_plus_l)
    }

    /// Suff(L): the trimmed automaton entered at any useful state.
    fn suffix_closed(&self) -> Result<bool> {
        let useful: Vec<usize> = (0..self.dfa.state_count()).filter(|&q| self.useful[q]).collect();
        if useful.is_empty() {
            return Ok(true);
        }
        let mut b = Nfa::builder(self.dfa.alphabet().clone(), self.dfa.state_count())
            .multi_entry()
            .initials(useful.iter().copied())
            .accepts(self.dfa.accepting_states());
        for &q in &useful {
            for s in 0..self.sigma() {
                let t = self.dfa.next(q, s);
                if self.useful[t] {
                    b = b.transition(q, s, [t]);
                }
            }
        }
        self.contains(&b.build()?)
    }

    /// λ ∈ L and L·L ⊆ L.
    fn is_star(&self) -> Result<bool> {
        if !self.dfa.is_accepting(self.dfa.initial()) {
            return Ok(false);
        }
        let l = self.nfa();
        self.contains(&concat(&l, &l)?)
    }
}

/// `Σ⁺` when `plus`, otherwise `Σ*`.
fn sigma_power(alphabet: &Alphabet, plus: bool) -> Nfa {
    let states = if plus { 2 } else { 1 };
    let mut b = Nfa::builder(alphabet.clone(), states).initial(0).accept(states - 1);
    for s in 0..alphabet.len() {
        b = b.transition(0, s, [states - 1]).transition(states - 1, s, [states - 1]);
    }
    b.build().expect("fixed shape")
}
