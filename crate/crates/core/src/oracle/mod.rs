//! Brute-force ground truth for small automata: exhaustive enumeration,
//! exact minimal NFA sizes and spectrum search.

mod enumerate;
mod key;
mod search;

pub use enumerate::{enumerate_nfas, NfaSpace, StructuralFilter, MAX_TRANSITION_BITS};
pub use key::LangKey;
pub use search::{
    certify_nfa_lower_bound, min_nfa_size_exact, spectrum_search, theorem4_check, theorem4_check_over, SearchBudget,
    SearchMode, SpectrumResult, SpectrumStats,
};
