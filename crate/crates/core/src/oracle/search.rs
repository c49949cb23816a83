use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Serialize, Serializer};

use crate::analysis::{is_in_family, Family};
use crate::automata::{Alphabet, Automaton, Dfa, Limits, Nfa};
use crate::error::{Error, Result};
use crate::oracle::enumerate::{NfaSpace, StructuralFilter, MAX_TRANSITION_BITS};
use crate::oracle::key::{KeyScratch, LangKey, MaskNfa};

const CHUNKS: u64 = 64;

/// Distinct languages of the admissible automata of `space`, each with the
/// first code accepting it, in code order; plus the admissible count.
fn distinct_languages(space: &NfaSpace) -> (Vec<(LangKey, u64)>, u64) {
    let size = space.size();
    let chunks = CHUNKS.min(size);
    let parts: Vec<(Vec<(LangKey, u64)>, u64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let (lo, hi) = (size * c / chunks, size * (c + 1) / chunks);
            let mut a = MaskNfa::default();
            let mut scratch = KeyScratch::default();
            let mut seen = FxHashSet::default();
            let mut out = Vec::new();
            let mut admissible = 0;
            for code in lo..hi {
                space.decode_into(code, &mut a);
                if !space.admissible(&a) {
                    continue;
                }
                admissible += 1;
                let key = scratch.key(&a);
                if !seen.contains(&key) {
                    seen.insert(key.clone());
                    out.push((key, code));
                }
            }
            (out, admissible)
        })
        .collect();
    let mut seen = FxHashSet::default();
    let mut out = Vec::new();
    let mut admissible = 0;
    for (part, count) in parts {
        admissible += count;
        for (key, code) in part {
            if seen.insert(key.clone()) {
                out.push((key, code));
            }
        }
    }
    (out, admissible)
}

type LanguageSet = Arc<FxHashSet<LangKey>>;

/// Languages of connected NFAs with exactly `n` states over `sigma` symbols, cached.
fn languages_with(n: usize, sigma: usize) -> Result<LanguageSet> {
    static CACHE: OnceLock<Mutex<FxHashMap<(usize, usize), LanguageSet>>> = OnceLock::new();
    let space = NfaSpace::exhaustive(n, sigma, StructuralFilter::None)?;
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(set) = guard.get(&(n, sigma)) {
        return Ok(set.clone());
    }
    let set: LanguageSet = Arc::new(distinct_languages(&space).0.into_iter().map(|(k, _)| k).collect());
    guard.insert((n, sigma), set.clone());
    Ok(set)
}

/// Some NFA with fewer than `n` states accepts the language of `key`.
fn has_smaller_nfa(key: &LangKey, n: usize) -> Result<bool> {
    for s in 1..n {
        if languages_with(s, key.sigma())?.contains(key) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn exhaustive_feasible(states: usize, sigma: usize) -> bool {
    states * states * sigma <= MAX_TRANSITION_BITS
}

/// `d` with only the symbols in `letters`, renamed to the first latin letters.
fn restrict(d: &Dfa, letters: &[usize]) -> Dfa {
    let alphabet = Alphabet::latin(letters.len()).expect("restricted alphabet is non-empty");
    Dfa::from_fn(
        alphabet,
        d.state_count(),
        d.initial(),
        |q| d.is_accepting(q),
        |q, s| d.next(q, letters[s]),
    )
    .expect("restriction of a valid DFA")
}

/// Whether every NFA accepting `lang` has at least `n` states.
///
/// Decided exhaustively when the smaller automata over the full alphabet are
/// few enough. Otherwise the language is restricted to sub-alphabets small
/// enough to search: an NFA for `lang` yields one with no more states for
/// every restriction, so a restriction needing `n` states proves the bound.
/// If no restriction does, the result is a feasibility error.
pub fn certify_nfa_lower_bound(lang: &Dfa, n: usize) -> Result<bool> {
    if n <= 1 {
        return Ok(true);
    }
    let sigma = lang.alphabet().len();
    if exhaustive_feasible(n - 1, sigma) {
        return Ok(!has_smaller_nfa(&LangKey::of_dfa(lang), n)?);
    }
    let width = MAX_TRANSITION_BITS / ((n - 1) * (n - 1));
    for size in 1..=width.min(sigma) {
        let mut letters: Vec<usize> = (0..size).collect();
        loop {
            if !has_smaller_nfa(&LangKey::of_dfa(&restrict(lang, &letters)), n)? {
                return Ok(true);
            }
            if !next_combination(&mut letters, sigma) {
                break;
            }
        }
    }
    Err(Error::Feasibility(format!(
        "no sub-alphabet of at most {width} symbols certifies {n} states"
    )))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The least `s <= bound` such that an `s`-state NFA accepts the language of
/// `lang`, or `None` if there is none.
///
/// Each candidate size is searched exhaustively; when that is out of reach the
/// size is ruled out through [`certify_nfa_lower_bound`]. A non-MNFA input is
/// itself a witness for its own number of states.
pub fn min_nfa_size_exact<A: Automaton + ?Sized>(lang: &A, bound: usize) -> Result<Option<usize>> {
    let dfa = lang.as_dfa(&Limits::default())?;
    let own = {
        let nfa = lang.as_nfa();
        (!nfa.is_multi_entry()).then(|| nfa.state_count())
    };
    let key = LangKey::of_dfa(&dfa);
    let sigma = key.sigma();
    for s in 1..=bound {
        if own.is_some_and(|own| own <= s) {
            return Ok(Some(s));
        }
        if exhaustive_feasible(s, sigma) {
            if languages_with(s, sigma)?.contains(&key) {
                return Ok(Some(s));
            }
        } else if !certify_nfa_lower_bound(&dfa, s + 1)? {
            return Err(Error::Feasibility(format!("cannot decide whether {s} states suffice")));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchBudget {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpectrumStats {
    /// Connected automata examined.
    pub automata: u64,
    pub languages: u64,
    /// Languages whose minimal NFA has exactly `n` states.
    pub minimal: u64,
    /// Minimal languages in the family.
    pub in_family: u64,
    /// Whether `minimal` was established by exhaustive search over smaller
    /// NFAs; if not, every language counts as minimal.
    pub minimality_certified: bool,
}

/// DFA sizes reached by minimal `n`-state NFAs in one family, with the first
/// witness found for each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumResult {
    pub family: Family,
    pub n: usize,
    pub sigma: usize,
    pub mode: SearchMode,
    pub seed: Option<u64>,
    pub search_budget: u64,
    pub achieved: BTreeMap<usize, Nfa>,
    pub stats: SpectrumStats,
}

impl SpectrumResult {
    pub fn alphas(&self) -> Vec<usize> {
        self.achieved.keys().copied().collect()
    }
}

impl Serialize for SpectrumResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            family: Family,
            n: usize,
            sigma: usize,
            mode: SearchMode,
            seed: Option<u64>,
            search_budget: u64,
            achieved: BTreeMap<usize, String>,
            stats: &'a SpectrumStats,
        }
        Json {
            family: self.family,
            n: self.n,
            sigma: self.sigma,
            mode: self.mode,
            seed: self.seed,
            search_budget: self.search_budget,
            achieved: self.achieved.iter().map(|(&a, nfa)| (a, nfa.to_text())).collect(),
            stats: &self.stats,
        }
        .serialize(s)
    }
}

/// Achievable DFA sizes for `family` among `n`-state NFAs over `sigma` symbols.
///
/// Family membership is decided on the minimal DFA of each distinct language.
/// Minimality of the NFAs is certified whenever the smaller NFAs can be
/// enumerated, which is always the case in exhaustive mode.
pub fn spectrum_search(family: Family, n: usize, sigma: usize, budget: SearchBudget) -> Result<SpectrumResult> {
    let (space, languages, automata, mode, seed, search_budget) = match budget {
        SearchBudget::Exhaustive => {
            let space = NfaSpace::exhaustive(n, sigma, StructuralFilter::None)?;
            let (langs, automata) = distinct_languages(&space);
            let langs: Vec<(LangKey, MaskNfa)> = langs
                .into_iter()
                .map(|(k, code)| {
                    let mut a = MaskNfa::default();
                    space.decode_into(code, &mut a);
                    (k, a)
                })
                .collect();
            (space, langs, automata, SearchMode::Exhaustive, None, space.size())
        }
        SearchBudget::Sampled { seed, samples } => {
            let space = NfaSpace::sampled(n, sigma, StructuralFilter::None)?;
            let (langs, automata) = sample_languages(&space, seed, samples);
            (space, langs, automata, SearchMode::Sampled, Some(seed), samples)
        }
    };
    let certified = exhaustive_feasible(n.saturating_sub(1), sigma);
    let mut stats = SpectrumStats {
        automata,
        languages: languages.len() as u64,
        minimality_certified: certified,
        ..Default::default()
    };
    let mut achieved = BTreeMap::new();
    for (key, a) in languages {
        if certified && has_smaller_nfa(&key, n)? {
            continue;
        }
        stats.minimal += 1;
        if !is_in_family(&key.to_dfa(), family)? {
            continue;
        }
        stats.in_family += 1;
        achieved.entry(key.states()).or_insert_with(|| space.build_nfa(&a));
    }
    Ok(SpectrumResult {
        family,
        n,
        sigma,
        mode,
        seed,
        search_budget,
        achieved,
        stats,
    })
}

/// Distinct languages among `samples` random automata, in order of first
/// occurrence, and the number of connected samples.
fn sample_languages(space: &NfaSpace, seed: u64, samples: u64) -> (Vec<(LangKey, MaskNfa)>, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = ((1u64 << space.n) - 1) as u32;
    let mut scratch = KeyScratch::default();
    let mut seen = FxHashSet::default();
    let mut out = Vec::new();
    let mut connected = 0;
    for _ in 0..samples {
        let a = MaskNfa {
            n: space.n,
            sigma: space.sigma,
            init: space.initial_set(),
            acc: rng.gen::<u32>() & full,
            trans: (0..space.n * space.sigma).map(|_| rng.gen::<u32>() & full).collect(),
        };
        if !space.admissible(&a) {
            continue;
        }
        connected += 1;
        let key = scratch.key(&a);
        if seen.insert(key.clone()) {
            out.push((key, a));
        }
    }
    (out, connected)
}

/// Over `sigma` symbols: every non-empty prefix-, suffix- or infix-free
/// language whose minimal NFA has `n` states has a minimal DFA with more than
/// `n` states.
///
/// The empty language is excluded: it is free in all three senses and both of
/// its minimal automata have one state.
pub fn theorem4_check_over(n: usize, sigma: usize) -> Result<bool> {
    let space = NfaSpace::exhaustive(n, sigma, StructuralFilter::None)?;
    for (key, _) in distinct_languages(&space).0 {
        if key.states() > n || has_smaller_nfa(&key, n)? {
            continue;
        }
        let d = key.to_dfa();
        if d.accepting_states().next().is_none() {
            continue;
        }
        // infix-free languages are prefix-free
        if is_in_family(&d, Family::PrefixFree)? || is_in_family(&d, Family::SuffixFree)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`theorem4_check_over`] for the binary alphabet.
pub fn theorem4_check(n: usize) -> Result<bool> {
    theorem4_check_over(n, 2)
}
