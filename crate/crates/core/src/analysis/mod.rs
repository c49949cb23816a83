mod family;
mod fooling;
mod monoid;
mod structural;

pub use family::{is_in_family, is_in_family_with, Family};
pub use fooling::{verify_fooling_set, FoolingSet, FoolingVerdict};
pub use monoid::{
    check_lemma1, find_permutation_cycles, find_permutation_cycles_nfa, is_aperiodic, is_aperiodic_with,
    PermutationCycle,
};
pub use structural::{
    structural_all_accepting, structural_all_initial_accepting, structural_non_exiting, structural_non_returning,
};
