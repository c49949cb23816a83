use crate::automata::{Alphabet, Nfa};
use crate::decomposition::{exponential_params, quadratic_params, quadratic_upper};
use crate::error::{Error, Result};

fn binary() -> Alphabet {
    Alphabet::from_chars("ab").unwrap()
}

/// `Σ^(n-1)` as an n-state chain: minimal DFA of `n + 1` states.
fn chain(n: usize) -> Nfa {
    let mut b = Nfa::builder(binary(), n).initial(0).accept(n - 1);
    for q in 0..n - 1 {
        b = b.transition(q, 0, [q + 1]).transition(q, 1, [q + 1]);
    }
    b.build().expect("chain")
}

/// Finite-language witness for `n+1 <= alpha <= quadratic_upper(n)`.
///
/// Written with states `1..=n` (shifted down by one in the result):
/// `a: q -> {q+1, 2q+1, ..., n}` for `q <= k`, `a: k+1 -> {k+2, n-m+1, ..., n}`,
/// `a: q -> {q+1}` above `k+1`, and `b: q -> {q+1}` everywhere.
pub fn gen_finite_quadratic(n: u32, alpha: u64) -> Result<Nfa> {
    if n >= 2 && alpha == n as u64 + 1 {
        return Ok(chain(n as usize));
    }
    let p = quadratic_params(n, alpha)?;
    let (n, k, m) = (n as usize, p.k as usize, p.m as usize);
    let at = |q: usize| q - 1;
    let mut b = Nfa::builder(binary(), n).initial(at(1)).accept(at(n));
    for q in 1..=k {
        b = b.transition(at(q), 0, std::iter::once(q + 1).chain(2 * q + 1..=n).map(at));
    }
    b = b.transition(at(k + 1), 0, std::iter::once(k + 2).chain(n + 1 - m..=n).map(at));
    for q in k + 2..n {
        b = b.transition(at(q), 0, [at(q + 1)]);
    }
    for q in 1..n {
        b = b.transition(at(q), 1, [at(q + 1)]);
    }
    b.build()
}

/// The Mandl automaton on `n >= 2` states (`k = ceil(n/2)`, states `1..=n`
/// shifted down by one): `a: q -> {q+1, k+1}` below `k`, `a: q -> {q+1}` from
/// `k` on, `b: q -> {q+1}` except at `k`.
pub fn gen_mandl(n: u32) -> Result<Nfa> {
    if n < 2 {
        return Err(Error::OutOfRange {
            n,
            alpha: 0,
            interval: "n >= 2".into(),
        });
    }
    let mut b = Nfa::builder(binary(), n as usize).initial(0).accept(n as usize - 1);
    for (q, s, t) in mandl_transitions(n as usize) {
        b = b.transition(q - 1, s, t.into_iter().map(|x| x - 1));
    }
    b.build()
}

/// Mandl transitions in 1-based numbering.
fn mandl_transitions(n: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let k = n.div_ceil(2);
    let mut t = Vec::new();
    for q in 1..n {
        t.push((q, 0, if q < k { vec![q + 1, k + 1] } else { vec![q + 1] }));
        if q != k {
            t.push((q, 1, vec![q + 1]));
        }
    }
    t
}

/// Mandl's DFA size: `2^(n/2+1) - 1` for even `n`, `3 * 2^((n+1)/2 - 1) - 1` for odd `n`.
pub fn mandl_dfa_size(n: u32) -> u64 {
    if n.is_multiple_of(2) {
        (1u64 << (n / 2 + 1)) - 1
    } else {
        3 * (1u64 << (n.div_ceil(2) - 1)) - 1
    }
}

/// Finite-language witness for `alpha = base(n) + 2^i - 1`: a new initial
/// state 0 in front of the Mandl automaton on states `1..n`, with `b: 0 -> {1}`
/// and `a: 0 -> {1, n-i}`.
pub fn gen_finite_exponential(n: u32, alpha: u64) -> Result<Nfa> {
    let p = exponential_params(n, alpha)?;
    if n < 3 {
        return Err(Error::NotRepresentable {
            n,
            alpha,
            reason: "needs n >= 3".into(),
        });
    }
    let states = n as usize;
    // x = n + 1 - i names a state one past the last; the extra branch enters at x - 1
    let target = p.x as usize - 1;
    let mut b = Nfa::builder(binary(), states)
        .initial(0)
        .accept(states - 1)
        .transition(0, 1, [1])
        .transition(0, 0, [1, target]);
    for (q, s, t) in mandl_transitions(states - 1) {
        b = b.transition(q, s, t);
    }
    b.build()
}

/// Whether the quadratic construction covers `alpha`.
pub fn in_quadratic_range(n: u32, alpha: u64) -> bool {
    n >= 2 && alpha > n as u64 && alpha <= quadratic_upper(n).max(n as u64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{determinize, min_dfa_size};

    #[test]
    fn quadratic_examples() {
        let w = gen_finite_quadratic(4, 7).unwrap();
        assert_eq!(w.successors(0, 0).iter().collect::<Vec<_>>(), [1, 2, 3]);
        assert_eq!(min_dfa_size(&w).unwrap(), 7);
        let w = gen_finite_quadratic(4, 6).unwrap();
        assert_eq!(w.successors(0, 0).iter().collect::<Vec<_>>(), [1, 3]);
        assert_eq!(min_dfa_size(&w).unwrap(), 6);
        assert_eq!(min_dfa_size(&gen_finite_quadratic(4, 5).unwrap()).unwrap(), 5);
    }

    #[test]
    fn quadratic_census() {
        // (4, 7): singletons and ∅ give 5 subsets, {2,3,4} and {3,4} (1-based) the rest
        let d = determinize(&gen_finite_quadratic(4, 7).unwrap()).unwrap();
        let mut labels: Vec<String> = d.labels().unwrap().iter().map(|l| l.to_string()).collect();
        labels.sort();
        assert_eq!(labels, ["{0}", "{1,2,3}", "{1}", "{2,3}", "{2}", "{3}", "{}"]);
    }

    #[test]
    fn mandl_sizes() {
        assert_eq!(min_dfa_size(&gen_mandl(4).unwrap()).unwrap(), 7);
        assert_eq!(min_dfa_size(&gen_mandl(5).unwrap()).unwrap(), 11);
        assert_eq!(min_dfa_size(&gen_mandl(2).unwrap()).unwrap(), 3);
        assert_eq!(mandl_dfa_size(4), 7);
        assert_eq!(mandl_dfa_size(5), 11);
    }

    #[test]
    fn exponential_examples() {
        for (n, alpha) in [(5, 9), (5, 11), (6, 13)] {
            assert_eq!(
                min_dfa_size(&gen_finite_exponential(n, alpha).unwrap()).unwrap() as u64,
                alpha
            );
        }
        assert!(gen_finite_exponential(5, 10).is_err());
    }
}
