//! Inputs shared by the benchmarks.

use magic_core::decomposition::decompose_alpha;
use magic_core::witness::{gen_jjs, gen_mandl};
use magic_core::{determinize, Dfa, Nfa};

/// A JJS witness near the middle of the `(n, 2^n)` range, where the
/// decomposition uses both a core and a tail.
pub fn mid_jjs(n: u32) -> (u64, Nfa) {
    let alpha = (1u64 << (n - 1)) + n as u64;
    debug_assert!(decompose_alpha(n, alpha).is_ok());
    (alpha, gen_jjs(n, alpha).expect("alpha inside the constructive range"))
}

/// Subset DFA of the Mandl witness; not minimal, so minimization has work to do.
pub fn mandl_subset_dfa(n: u32) -> Dfa {
    determinize(&gen_mandl(n).expect("n >= 2")).expect("default caps suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use magic_core::min_dfa_size;

    #[test]
    fn inputs_are_what_they_claim() {
        let (alpha, nfa) = mid_jjs(8);
        assert_eq!(min_dfa_size(&nfa).unwrap() as u64, alpha);
        assert!(mandl_subset_dfa(6).state_count() >= magic_core::minimize(&mandl_subset_dfa(6)).state_count());
    }
}
