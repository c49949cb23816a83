pub mod analysis;
pub mod automata;
pub mod decomposition;
pub mod error;
pub mod oracle;
pub mod verify;
pub mod witness;

pub use automata::{determinize, min_dfa_size, minimize, Alphabet, Automaton, Dfa, Limits, Nfa, StateSet, Word};
pub use error::{Error, Result};
