//! Resource caps and job configuration.

/// Resource caps for the operations whose worst case is intrinsically
/// exponential. Every cap is positive; exceeding one yields
/// [`crate::Error::Resource`].
#[derive(Debug, Clone)]
pub struct Caps {
    /// Maximum number of source states for the full powerset construction
    /// (the subset automaton has `2^n` states).
    pub subset_source_states: usize,
    /// Maximum number of states produced by on-the-fly determinization.
    pub determinize_states: usize,
    /// Maximum number of elements of a transition monoid.
    pub monoid_elements: usize,
    /// Maximum size for the monoid isomorphism search.
    pub monoid_iso_size: usize,
    /// Maximum number of recursion nodes in star-free extraction.
    pub starfree_nodes: usize,
    /// Maximum word length for language enumeration.
    pub enum_max_len: usize,
    /// Maximum number of membership queries in a pumping refutation search.
    pub pump_queries: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subset_source_states: 20,
            determinize_states: 1_000_000,
            monoid_elements: 100_000,
            monoid_iso_size: 512,
            starfree_nodes: 50_000,
            enum_max_len: 16,
            pump_queries: 5_000_000,
        }
    }
}

/// Configuration of a CLI invocation: resource caps plus I/O behavior.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub caps: Caps,
    /// Coerce the alphabets of binary operations to their union.
    pub align_alphabets: bool,
    /// Emit JSON instead of the textual formats.
    pub json: bool,
    /// Seed for corpus generation; identical seeds give byte-identical output.
    pub seed: u64,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            caps: Caps::default(),
            align_alphabets: false,
            json: false,
            seed: 0,
        }
    }
}
