//! Error type shared by the whole crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library.
///
/// The CLI maps these onto exit codes: everything except [`Error::Resource`]
/// is exit code 2 (bad input), [`Error::Resource`] is exit code 3.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Malformed line-oriented file (`.aut`, `.mor`, `.mso`, `.mon`, `.cert`).
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Syntax error in an expression or formula, with position.
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    /// Well-formed input that violates an operation's precondition on data
    /// (unknown symbol in a word, unknown state id, ...).
    #[error("input error: {0}")]
    Input(String),

    /// An operation was called on an argument outside its contract
    /// (complement of a partial DFA, star-free extraction of a non-aperiodic
    /// automaton, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A configured resource cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// Exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) => 3,
            _ => 2,
        }
    }
}
