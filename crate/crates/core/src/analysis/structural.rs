use crate::automata::{Nfa, StateSet};

/// Every state is accepting (syntactic check on the automaton).
pub fn structural_all_accepting(a: &Nfa) -> bool {
    *a.accepting() == StateSet::full(a.state_count())
}

/// Every state is both initial and accepting.
pub fn structural_all_initial_accepting(a: &Nfa) -> bool {
    structural_all_accepting(a) && *a.initial() == StateSet::full(a.state_count())
}

/// The initial states have no incoming transitions.
pub fn structural_non_returning(a: &Nfa) -> bool {
    a.transitions().all(|(_, _, t)| !t.intersects(a.initial()))
}

/// Accepting states have no outgoing transitions.
pub fn structural_non_exiting(a: &Nfa) -> bool {
    a.transitions().all(|(q, _, _)| !a.accepting().contains(q))
}
