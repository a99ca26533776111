//! Finite automata on finite words, together with the surrounding classical
//! toolbox: rational and extended rational expressions, the sequential
//! calculus (first-order and monadic second-order logic on word positions),
//! DFA minimization, transition and syntactic monoids, star-free expressions
//! and first-order definability, and executable pumping-lemma certificates.
//!
//! Everything is built around two value types, [`Nfa`] and [`Dfa`], over an
//! explicit [`Alphabet`] of symbol tokens. All operations are pure functions:
//! they take automata (or expressions, formulas, monoids) by reference and
//! return fresh values, so sharing across threads needs no synchronization.

pub mod alphabet;
pub mod automaton;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod error;
pub mod logic;
pub mod minimize;
pub mod monoid;
pub mod ops;
pub mod pumping;
pub mod regex;
pub mod starfree;

pub use alphabet::{Alphabet, Label, StateId, SymbolId, Word};
pub use automaton::dfa::Dfa;
pub use automaton::nfa::Nfa;
pub use config::Caps;
pub use error::{Error, Result};
