use crate::automata::{Alphabet, Nfa};
use crate::decomposition::{decompose_alpha, AlphaDecomposition};
use crate::error::Result;

/// Symbol indices over `{a, b, c, d}`.
pub(crate) const A: usize = 0;
pub(crate) const B: usize = 1;
pub(crate) const C: usize = 2;
pub(crate) const D: usize = 3;

/// Core transitions on states `0..=k` as `(state, symbol, targets)`.
///
/// * `a`: `0 -> {0}`, `i -> {i+1}` for `1 <= i < k`, `k -> {1..k}`
/// * `b`: like `a`, and every state in `1..=k` also reaches `1`
/// * `c`: `i -> {i+1}` for `0 <= i < k`
/// * `d`: one row per term of `m`, starting at state 1
pub(crate) fn core_transitions(dec: &AlphaDecomposition) -> Vec<(usize, usize, Vec<usize>)> {
    let k = dec.k as usize;
    let mut t = vec![(0, A, vec![0]), (0, B, vec![0]), (0, C, vec![1])];
    for i in 1..=k {
        let step = if i < k { vec![i + 1] } else { (1..=k).collect() };
        let mut with_one = step.clone();
        if !with_one.contains(&1) {
            with_one.push(1);
        }
        t.push((i, A, step));
        t.push((i, B, with_one));
        if i < k {
            t.push((i, C, vec![i + 1]));
        }
    }
    let l = dec.kis.len();
    let row = |ki: u32, with_one: bool| -> Vec<usize> {
        let top = k - ki as usize + 1;
        std::iter::once(0).chain((if with_one { 1 } else { 2 })..=top).collect()
    };
    for (idx, &ki) in dec.kis.iter().enumerate() {
        let i = idx + 1;
        let last_single = i == l && !dec.doubled_last;
        t.push((i, D, row(ki, last_single)));
    }
    if dec.doubled_last {
        t.push((l + 1, D, row(dec.kis[l - 1], true)));
    }
    t
}

/// The n-state JJS witness over `{a, b, c, d}` whose minimal DFA has `alpha` states,
/// for `n < alpha < 2^n`.
///
/// States `0..=k` form the core with accepting state `k`; states `k+1..n` are a
/// tail read by `c` (`q -> q-1`, `k+1 -> 1`) and the automaton starts at its top,
/// `n-1`. Without a tail (`k = n-1`) it starts in state 1.
pub fn gen_jjs(n: u32, alpha: u64) -> Result<Nfa> {
    let dec = decompose_alpha(n, alpha)?;
    Ok(jjs_from(&dec))
}

pub fn jjs_from(dec: &AlphaDecomposition) -> Nfa {
    let (n, k) = (dec.n as usize, dec.k as usize);
    let initial = if k < n - 1 { n - 1 } else { 1 };
    let mut b = Nfa::builder(Alphabet::from_chars("abcd").unwrap(), n)
        .initial(initial)
        .accept(k);
    for (q, s, targets) in core_transitions(dec) {
        b = b.transition(q, s, targets);
    }
    for q in k + 1..n {
        b = b.transition(q, C, [if q >= k + 2 { q - 1 } else { 1 }]);
    }
    b.build().expect("JJS construction uses valid indices")
}
