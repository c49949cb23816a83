//! Line-based text format:
//!
//! ```text
//! type: nfa
//! states: 3
//! alphabet: a b
//! initial: 0
//! accepting: 2
//! 0 a -> 1 2
//! ```
//!
//! Missing transition lines mean an empty image for NFAs and are an error for DFAs.

use std::borrow::Cow;
use std::fmt::Write;

use crate::automata::{Alphabet, Automaton, Dfa, Limits, Nfa, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAutomaton {
    Nfa(Nfa),
    Dfa(Dfa),
}

impl AnyAutomaton {
    pub fn to_text(&self) -> String {
        match self {
            AnyAutomaton::Nfa(a) => a.to_text(),
            AnyAutomaton::Dfa(d) => d.to_text(),
        }
    }
}

impl Automaton for AnyAutomaton {
    fn alphabet(&self) -> &Alphabet {
        match self {
            AnyAutomaton::Nfa(a) => a.alphabet(),
            AnyAutomaton::Dfa(d) => d.alphabet(),
        }
    }
    fn state_count(&self) -> usize {
        match self {
            AnyAutomaton::Nfa(a) => a.state_count(),
            AnyAutomaton::Dfa(d) => d.state_count(),
        }
    }
    fn accepts(&self, w: &Word) -> Result<bool> {
        match self {
            AnyAutomaton::Nfa(a) => a.accepts(w),
            AnyAutomaton::Dfa(d) => d.accepts(w),
        }
    }
    fn as_nfa(&self) -> Cow<'_, Nfa> {
        match self {
            AnyAutomaton::Nfa(a) => a.as_nfa(),
            AnyAutomaton::Dfa(d) => Automaton::as_nfa(d),
        }
    }
    fn as_dfa(&self, limits: &Limits) -> Result<Cow<'_, Dfa>> {
        match self {
            AnyAutomaton::Nfa(a) => a.as_dfa(limits),
            AnyAutomaton::Dfa(d) => d.as_dfa(limits),
        }
    }
}

fn list(items: impl Iterator<Item = usize>) -> String {
    items.map(|q| format!(" {q}")).collect()
}

fn header(out: &mut String, kind: &str, states: usize, alphabet: &Alphabet, initial: String, accepting: String) {
    writeln!(out, "type: {kind}").unwrap();
    writeln!(out, "states: {states}").unwrap();
    writeln!(out, "alphabet: {alphabet}").unwrap();
    writeln!(out, "initial:{initial}").unwrap();
    writeln!(out, "accepting:{accepting}").unwrap();
}

impl Nfa {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        header(
            &mut out,
            "nfa",
            self.state_count(),
            self.alphabet(),
            list(self.initial().iter()),
            list(self.accepting().iter()),
        );
        for (q, s, targets) in self.transitions() {
            writeln!(out, "{q} {} ->{}", self.alphabet().symbol(s), list(targets.iter())).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Nfa> {
        match parse_automaton(text)? {
            AnyAutomaton::Nfa(a) => Ok(a),
            AnyAutomaton::Dfa(d) => Ok(d.to_nfa()),
        }
    }
}

impl Dfa {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        header(
            &mut out,
            "dfa",
            self.state_count(),
            self.alphabet(),
            format!(" {}", self.initial()),
            list(self.accepting_states()),
        );
        for q in 0..self.state_count() {
            for s in 0..self.alphabet().len() {
                writeln!(out, "{q} {} -> {}", self.alphabet().symbol(s), self.next(q, s)).unwrap();
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Dfa> {
        match parse_automaton(text)? {
            AnyAutomaton::Dfa(d) => Ok(d),
            AnyAutomaton::Nfa(_) => Err(Error::Parse {
                line: 1,
                msg: "expected type: dfa".into(),
            }),
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
}

impl<'a> Lines<'a> {
    fn header(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (line, text) = self.inner.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("missing {key:?} line"),
        })?;
        let rest = text
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(':'))
            .ok_or_else(|| Error::Parse {
                line,
                msg: format!("expected `{key}:`"),
            })?;
        Ok((line, rest.trim()))
    }
}

fn indices(line: usize, text: &str, states: usize) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| match t.parse::<usize>() {
            Ok(q) if q < states => Ok(q),
            Ok(q) => Err(Error::Parse {
                line,
                msg: format!("state {q} out of range"),
            }),
            Err(_) => Err(Error::Parse {
                line,
                msg: format!("bad state index {t:?}"),
            }),
        })
        .collect()
}

/// Parses either kind of automaton; more than one initial state yields an MNFA.
pub fn parse_automaton(text: &str) -> Result<AnyAutomaton> {
    let iter: Box<dyn Iterator<Item = (usize, &str)>> = Box::new(
        text.lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty()),
    );
    let mut lines = Lines { inner: iter.peekable() };
    let (line, kind) = lines.header("type")?;
    let is_dfa = match kind {
        "nfa" => false,
        "dfa" => true,
        other => {
            return Err(Error::Parse {
                line,
                msg: format!("unknown type {other:?}"),
            })
        }
    };
    let (line, count) = lines.header("states")?;
    let states: usize = count.parse().ok().filter(|&n| n > 0).ok_or(Error::Parse {
        line,
        msg: format!("bad state count {count:?}"),
    })?;
    let (line, symbols) = lines.header("alphabet")?;
    let alphabet = Alphabet::new(symbols.split_whitespace()).map_err(|e| Error::Parse {
        line,
        msg: e.to_string(),
    })?;
    let (line, init) = lines.header("initial")?;
    let initial = indices(line, init, states)?;
    let (line, acc) = lines.header("accepting")?;
    let accepting = indices(line, acc, states)?;
    let sigma = alphabet.len();

    let mut table: Vec<Option<Vec<usize>>> = vec![None; states * sigma];
    for (line, text) in lines.inner {
        let (lhs, rhs) = text.split_once("->").ok_or(Error::Parse {
            line,
            msg: "expected `<state> <symbol> -> <targets>`".into(),
        })?;
        let mut parts = lhs.split_whitespace();
        let (Some(q), Some(sym), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse {
                line,
                msg: "expected `<state> <symbol>` before `->`".into(),
            });
        };
        let q = indices(line, q, states)?[0];
        let s = alphabet.index_of(sym).ok_or_else(|| Error::Parse {
            line,
            msg: format!("unknown symbol {sym:?}"),
        })?;
        let targets = indices(line, rhs, states)?;
        if is_dfa && targets.len() != 1 {
            return Err(Error::Parse {
                line,
                msg: "a DFA transition needs exactly one target".into(),
            });
        }
        let slot = &mut table[q * sigma + s];
        match slot {
            Some(_) if is_dfa => {
                return Err(Error::Parse {
                    line,
                    msg: format!("duplicate transition for ({q}, {sym})"),
                })
            }
            Some(v) => v.extend(targets),
            None => *slot = Some(targets),
        }
    }

    if is_dfa {
        if initial.len() != 1 {
            return Err(Error::Parse {
                line: 4,
                msg: "a DFA needs exactly one initial state".into(),
            });
        }
        let mut delta = Vec::with_capacity(table.len());
        for (i, t) in table.into_iter().enumerate() {
            match t {
                Some(v) => delta.push(v[0]),
                None => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!(
                            "missing DFA transition for ({}, {})",
                            i / sigma,
                            alphabet.symbol(i % sigma)
                        ),
                    })
                }
            }
        }
        let mut acc = vec![false; states];
        for q in accepting {
            acc[q] = true;
        }
        Ok(AnyAutomaton::Dfa(Dfa::new(alphabet, initial[0], acc, delta)?))
    } else {
        let mut b = Nfa::builder(alphabet, states)
            .initials(initial.iter().copied())
            .accepts(accepting);
        if initial.len() != 1 {
            b = b.multi_entry();
        }
        for (i, t) in table.into_iter().enumerate() {
            if let Some(v) = t {
                b = b.transition(i / sigma, i % sigma, v);
            }
        }
        Ok(AnyAutomaton::Nfa(b.build()?))
    }
}
