use crate::analysis::FoolingSet;
use crate::automata::{Alphabet, Nfa, Word};
use crate::error::{Error, Result};

/// Witnesses for the two ends of `[n, 2^n]`.
///
/// `alpha = n`: the unary counter `{a^j : j ≡ 0 mod n}`.
/// `alpha = 2^n`: over `{a, b}`, `a` rotates `q -> q+1 mod n` and `b` maps
/// `0 -> ∅`, `q -> {q, 0}`; start 0, accept `n-1`.
pub fn gen_boundary(n: u32, alpha: u64) -> Result<Nfa> {
    let states = n as usize;
    if n == 0 || n > 62 {
        return Err(Error::input(format!("unsupported n = {n}")));
    }
    if alpha == n as u64 {
        let mut b = Nfa::builder(Alphabet::from_chars("a").unwrap(), states)
            .initial(0)
            .accept(0);
        for q in 0..states {
            b = b.transition(q, 0, [(q + 1) % states]);
        }
        b.build()
    } else if alpha == 1u64 << n {
        let mut b = Nfa::builder(Alphabet::from_chars("ab").unwrap(), states)
            .initial(0)
            .accept(states - 1);
        for q in 0..states {
            b = b.transition(q, 0, [(q + 1) % states]);
            if q > 0 {
                b = b.transition(q, 1, [q, 0]);
            }
        }
        b.build()
    } else {
        Err(Error::OutOfRange {
            n,
            alpha,
            interval: format!("{{n, 2^n}} = {{{n}, {}}}", 1u64 << n),
        })
    }
}

/// `{(a^i, a^(n-i)) : 0 <= i < n}` for the unary counter.
pub fn boundary_fooling_set(n: u32) -> FoolingSet {
    let a = |i: u32| Word::from(vec![0; i as usize]);
    FoolingSet::new((0..n).map(|i| (a(i), a(n - i))).collect())
}
