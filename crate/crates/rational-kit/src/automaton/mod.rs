//! Automaton representations and the kernel operations on them:
//! acceptance, completion, trimming, ε-removal, determinization, emptiness
//! and language enumeration.

pub mod determinize;
pub mod dfa;
pub mod format;
pub mod nfa;

pub use determinize::{determinize, subset_automaton, DeterminizeReport};
pub use dfa::{Dfa, RunOutcome};
pub use nfa::{Nfa, PathWitness, TrimReport};

#[cfg(test)]
pub(crate) mod testdata {
    /// Three-state NFA accepting the words containing the factor `ab`.
    pub const CONTAINS_AB_NFA: &str = "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\n0 a 0\n0 b 0\n0 a 1\n1 b 2\n2 a 2\n2 b 2\n";
    /// Three-state complete DFA for the same language.
    pub const CONTAINS_AB_DFA: &str = "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\n0 b 0\n0 a 1\n1 a 1\n1 b 2\n2 a 2\n2 b 2\n";
    /// Two-state partial automaton accepting b*a*.
    pub const BSTAR_ASTAR: &str = "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 0 1\n0 b 0\n0 a 1\n1 a 1\n";
}
