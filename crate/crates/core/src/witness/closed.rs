use serde::Deserialize;

use crate::analysis::FoolingSet;
use crate::automata::{mnfa_to_nfa, Alphabet, Nfa, Word};
use crate::decomposition::{decompose_alpha, AlphaDecomposition};
use crate::error::{Error, Result};
use crate::witness::jjs::{core_transitions, C, D};

const HASH: usize = 4;
const DOLLAR: usize = 5;

/// Output of [`gen_infix_closed`].
#[derive(Clone, Debug)]
pub struct InfixClosedWitness {
    /// All states initial and accepting.
    pub a1: Nfa,
    /// Single-entry version started in `n-1`.
    pub a2: Nfa,
    pub decomposition: Option<AlphaDecomposition>,
}

fn sigma_star(alphabet: Alphabet) -> Nfa {
    let mut b = Nfa::builder(alphabet.clone(), 1).initial(0).accept(0);
    for s in 0..alphabet.len() {
        b = b.transition(0, s, [0]);
    }
    b.build().expect("one state")
}

/// Infix-closed witness over `{a, b, c, d, #, $}` for `n < alpha <= 2^(n-1)`,
/// plus the one-state case `(1, 1)`.
///
/// `A1` takes the JJS core on states `0..=k`, adds `# : k -> k` and a `$` chain
/// `q -> q-1` (`k+1 -> 1`) through the tail, and makes every state initial and
/// accepting. `A2` merges the initial states into `n-1`.
pub fn gen_infix_closed(n: u32, alpha: u64) -> Result<InfixClosedWitness> {
    let alphabet = Alphabet::from_chars("abcd#$").unwrap();
    if n == 1 && alpha == 1 {
        let one = sigma_star(alphabet);
        return Ok(InfixClosedWitness {
            a1: one.clone(),
            a2: one,
            decomposition: None,
        });
    }
    if (2..62).contains(&n) && alpha == (1u64 << (n - 1)) + 1 {
        return Err(Error::NotSupported(format!(
            "alpha = 2^(n-1)+1 = {alpha} needs a separate construction"
        )));
    }
    if !(2..=62).contains(&n) || alpha <= n as u64 || alpha > 1u64 << (n - 1) {
        return Err(Error::OutOfRange {
            n,
            alpha,
            interval: format!("(n, 2^(n-1)] = ({n}, {}]", 1u64 << (n.clamp(1, 62) - 1)),
        });
    }
    let dec = decompose_alpha(n, alpha)?;
    let (states, k) = (n as usize, dec.k as usize);
    let mut b = Nfa::builder(alphabet, states)
        .multi_entry()
        .initials(0..states)
        .accepts(0..states)
        .transition(k, HASH, [k]);
    for (q, s, targets) in core_transitions(&dec) {
        b = b.transition(q, s, targets);
    }
    for q in k + 1..states {
        b = b.transition(q, DOLLAR, [if q >= k + 2 { q - 1 } else { 1 }]);
    }
    let a1 = b.build()?;
    let a2 = mnfa_to_nfa(&a1, states - 1)?;
    Ok(InfixClosedWitness {
        a1,
        a2,
        decomposition: Some(dec),
    })
}

/// The lower-bound set `S1 ∪ S2 ∪ S3` for the infix-closed witness with core size `k`:
/// `S1 = {($^i, $^(n-k-1-i) c^(k-1)) : 0 <= i <= n-k-1}`,
/// `S2 = {($^(n-k-1) c^i, c^(k-1-i)) : 1 <= i <= k-1}`,
/// `S3 = {($^(n-k-1) d, c^k)}`.
pub fn infix_closed_fooling_set(n: u32, k: u32) -> FoolingSet {
    let (n, k) = (n as usize, k as usize);
    let word = |parts: &[(usize, usize)]| {
        Word::from(
            parts
                .iter()
                .flat_map(|&(s, times)| std::iter::repeat_n(s, times))
                .collect::<Vec<_>>(),
        )
    };
    let t = n - k - 1;
    let mut pairs = Vec::new();
    for i in 0..=t {
        pairs.push((word(&[(DOLLAR, i)]), word(&[(DOLLAR, t - i), (C, k - 1)])));
    }
    for i in 1..k {
        pairs.push((word(&[(DOLLAR, t), (C, i)]), word(&[(C, k - 1 - i)])));
    }
    pairs.push((word(&[(DOLLAR, t), (D, 1)]), word(&[(C, k)])));
    FoolingSet::new(pairs)
}

/// Lower-bound set for the catalog language with `n` states:
/// `{(a^i, a^(n-2-i)) : 0 <= i <= n-2} ∪ {(a^(n-1), b)}`.
pub fn suffix_closed_fooling_set(n: u32) -> FoolingSet {
    let a = |i: usize| Word::from(vec![0; i]);
    let n = n as usize;
    if n <= 1 {
        return FoolingSet::new(vec![(Word::empty(), Word::empty())]);
    }
    let mut pairs: Vec<_> = (0..=n - 2).map(|i| (a(i), a(n - 2 - i))).collect();
    pairs.push((a(n - 1), Word::from(vec![1])));
    FoolingSet::new(pairs)
}

#[derive(Deserialize)]
struct CatalogEntry {
    n: u32,
    automaton: String,
}

const CATALOG: &str = include_str!("../../data/suffix_closed.json");

/// Checked-in suffix-closed witnesses with `alpha = n`, keyed by `n`.
pub fn suffix_closed_catalog() -> Result<Vec<(u32, Nfa)>> {
    let entries: Vec<CatalogEntry> =
        serde_json::from_str(CATALOG).map_err(|e| Error::input(format!("catalog: {e}")))?;
    entries
        .into_iter()
        .map(|e| Ok((e.n, Nfa::from_text(&e.automaton)?)))
        .collect()
}

/// Suffix-closed witness for `n <= alpha <= 2^(n-1)`: the infix-closed `A2` when
/// `alpha > n`, a catalog entry when `alpha = n`.
pub fn gen_suffix_closed(n: u32, alpha: u64) -> Result<Nfa> {
    if alpha == n as u64 {
        return suffix_closed_catalog()?
            .into_iter()
            .find(|(m, _)| *m == n)
            .map(|(_, a)| a)
            .ok_or_else(|| Error::NotSupported(format!("no catalog witness for alpha = n = {n}")));
    }
    Ok(gen_infix_closed(n, alpha)?.a2)
}
