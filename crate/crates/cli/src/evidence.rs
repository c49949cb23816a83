//! Human-readable reasons for a negative verdict.

use std::collections::VecDeque;

use magic_core::analysis::{find_permutation_cycles, Family, PermutationCycle};
use magic_core::automata::bounded_language;
use magic_core::{Alphabet, Dfa, StateSet, Word};

/// Number of words the bounded searches are allowed to look at.
const WORD_BUDGET: usize = 4096;

pub fn set_text(s: &StateSet) -> String {
    let items: Vec<String> = s.iter().map(|q| q.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn cycle_text(c: &PermutationCycle, alphabet: &Alphabet) -> String {
    let mut out = format!(
        "cycle of length {} under {}:",
        c.states.len(),
        alphabet.format_word(&c.word)
    );
    match &c.labels {
        Some(labels) => {
            for l in labels {
                out.push(' ');
                out.push_str(&set_text(l));
            }
        }
        None => {
            for q in &c.states {
                out.push_str(&format!(" q{q}"));
            }
        }
    }
    out
}

/// Longest length whose full word tree stays within the budget.
fn search_depth(sigma: usize) -> usize {
    let mut total = 1usize;
    let mut layer = 1usize;
    let mut len = 0;
    while len < 12 {
        layer = layer.saturating_mul(sigma.max(1));
        if total.saturating_add(layer) > WORD_BUDGET {
            break;
        }
        total += layer;
        len += 1;
    }
    len.max(1)
}

fn proper_factors(w: &Word, f: Family) -> Vec<Word> {
    let s = w.symbols();
    let n = s.len();
    let mut out = Vec::new();
    match f {
        Family::PrefixFree | Family::PrefixClosed => {
            out.extend((0..n).map(|i| Word::from(s[..i].to_vec())));
        }
        Family::SuffixFree | Family::SuffixClosed => {
            out.extend((1..=n).map(|i| Word::from(s[i..].to_vec())));
        }
        _ => {
            for i in 0..=n {
                for j in i..=n {
                    if j - i < n {
                        out.push(Word::from(s[i..j].to_vec()));
                    }
                }
            }
        }
    }
    out
}

/// Why `d` (minimal, complete) is not in `family`, as far as a short search can tell.
pub fn family_counterexample(d: &Dfa, family: Family, max_monoid: usize) -> String {
    let a = d.alphabet();
    let fw = |w: &Word| a.format_word(w);
    let accepts = |w: &Word| d.accepts(w).unwrap_or(false);
    let depth = search_depth(a.len());
    match family {
        Family::Finite => return pumping_witness(d).unwrap_or_else(|| "language is infinite".into()),
        Family::StarFree => {
            return match find_permutation_cycles(d, max_monoid) {
                Ok(cycles) => cycles
                    .first()
                    .map(|c| cycle_text(c, a))
                    .unwrap_or_else(|| "no permutation cycle found".into()),
                Err(e) => format!("no cycle reported: {e}"),
            }
        }
        _ => {}
    }
    let words = bounded_language(d, depth);
    match family {
        Family::PrefixFree | Family::SuffixFree | Family::InfixFree => {
            for w in &words {
                if let Some(x) = proper_factors(w, family).into_iter().find(|x| accepts(x)) {
                    return format!("both {} and {} are accepted", fw(&x), fw(w));
                }
            }
        }
        Family::PrefixClosed | Family::SuffixClosed | Family::InfixClosed => {
            for w in &words {
                if let Some(x) = proper_factors(w, family).into_iter().find(|x| !accepts(x)) {
                    return format!("{} is accepted but {} is not", fw(w), fw(&x));
                }
            }
        }
        Family::Star => {
            if !accepts(&Word::empty()) {
                return "λ is not accepted".into();
            }
            let head = &words[..words.len().min(512)];
            for u in head {
                for v in head {
                    let uv = u.concat(v);
                    if !accepts(&uv) {
                        return format!("{} and {} are accepted but {} is not", fw(u), fw(v), fw(&uv));
                    }
                }
            }
        }
        Family::Finite | Family::StarFree => unreachable!(),
    }
    format!("no counterexample among words of length at most {depth}")
}

/// Shortest nonempty word leading from `from` to a state satisfying `target`,
/// moving only through `allowed` states.
fn bfs_path(d: &Dfa, from: usize, allowed: &[bool], target: impl Fn(usize) -> bool) -> Option<Word> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; d.state_count()];
    let mut seen = vec![false; d.state_count()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(q) = queue.pop_front() {
        for s in 0..d.alphabet().len() {
            let t = d.next(q, s);
            if !allowed[t] {
                continue;
            }
            if target(t) {
                let mut syms = vec![s];
                let mut cur = q;
                while let Some((p, sym)) = prev[cur] {
                    syms.push(sym);
                    cur = p;
                }
                syms.reverse();
                return Some(Word::from(syms));
            }
            if !seen[t] {
                seen[t] = true;
                prev[t] = Some((q, s));
                queue.push_back(t);
            }
        }
    }
    None
}

/// `u v^i w` accepted for every i, from a useful state on a cycle.
fn pumping_witness(d: &Dfa) -> Option<String> {
    let useful = d.useful_states();
    let a = d.alphabet();
    let everything = vec![true; d.state_count()];
    for q in (0..d.state_count()).filter(|&q| useful[q]) {
        let Some(v) = bfs_path(d, q, &useful, |t| t == q) else {
            continue;
        };
        let u = if q == d.initial() {
            Word::empty()
        } else {
            bfs_path(d, d.initial(), &everything, |t| t == q)?
        };
        let w = if d.is_accepting(q) {
            Word::empty()
        } else {
            bfs_path(d, q, &useful, |t| d.is_accepting(t))?
        };
        return Some(format!(
            "u v^i w is accepted for every i with u = {}, v = {}, w = {}",
            a.format_word(&u),
            a.format_word(&v),
            a.format_word(&w)
        ));
    }
    None
}
