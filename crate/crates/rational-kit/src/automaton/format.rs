//! The textual `.aut` automaton format.
//!
//! Line-oriented with `#` comments and a fixed section order:
//!
//! ```text
//! alphabet: a b
//! states: 3
//! names: s0 s1 s2        # optional
//! initial: 0
//! final: 2
//! 0 a 0
//! 0 a 1
//! 1 b 2
//! ```
//!
//! ε-transitions use the reserved label `eps` (which is therefore forbidden
//! as an alphabet symbol). Duplicate transitions and out-of-range state ids
//! are rejected with line-numbered errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Label, StateId, EPSILON_TOKEN};
use crate::automaton::dfa::Dfa;
use crate::automaton::nfa::Nfa;
use crate::error::{Error, Result};

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            iter: text.lines().enumerate(),
        }
    }

    /// Next non-empty line after comment stripping, with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.iter.by_ref() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if !line.is_empty() {
                return Some((idx + 1, line));
            }
        }
        None
    }
}

fn expect_section<'a>(
    lines: &mut Lines<'a>,
    key: &str,
    optional_of: Option<(usize, &'a str)>,
) -> Result<(usize, &'a str)> {
    let (no, line) = match optional_of {
        Some(pending) => pending,
        None => lines
            .next_content()
            .ok_or_else(|| Error::parse(0, format!("missing `{key}:` section")))?,
    };
    match line.strip_prefix(key).and_then(|r| r.strip_prefix(':')) {
        Some(rest) => Ok((no, rest.trim())),
        None => Err(Error::parse(
            no,
            format!("expected `{key}:` section, found {line:?}"),
        )),
    }
}

fn parse_state_list(no: usize, text: &str, state_count: usize) -> Result<Vec<StateId>> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let id: usize = tok
            .parse()
            .map_err(|_| Error::parse(no, format!("invalid state id {tok:?}")))?;
        if id >= state_count {
            return Err(Error::parse(
                no,
                format!("state id {id} out of range (states: {state_count})"),
            ));
        }
        out.push(id);
    }
    Ok(out)
}

/// Parses the `.aut` format into an [`Nfa`].
pub fn parse_nfa(text: &str) -> Result<Nfa> {
    let mut lines = Lines::new(text);

    let (no, alpha) = expect_section(&mut lines, "alphabet", None)?;
    let symbols: Vec<&str> = alpha.split_whitespace().collect();
    let alphabet = Alphabet::new(symbols).map_err(|e| Error::parse(no, e.to_string()))?;

    let (no, states) = expect_section(&mut lines, "states", None)?;
    let state_count: usize = states
        .parse()
        .map_err(|_| Error::parse(no, format!("invalid state count {states:?}")))?;

    // Optional names section.
    let mut pending = lines.next_content();
    let mut names: Option<Vec<String>> = None;
    if let Some((no, line)) = pending {
        if let Some(rest) = line.strip_prefix("names:") {
            let ns: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if ns.len() != state_count {
                return Err(Error::parse(
                    no,
                    format!("expected {state_count} names, got {}", ns.len()),
                ));
            }
            names = Some(ns);
            pending = lines.next_content();
        }
    }

    let (no, init) = expect_section(&mut lines, "initial", pending)?;
    let initials = parse_state_list(no, init, state_count)?;

    let (no, fin) = expect_section(&mut lines, "final", None)?;
    let finals = parse_state_list(no, fin, state_count)?;

    let mut transitions = BTreeSet::new();
    while let Some((no, line)) = lines.next_content() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::parse(
                no,
                format!("expected `src label dst`, found {line:?}"),
            ));
        }
        let src: usize = parts[0]
            .parse()
            .map_err(|_| Error::parse(no, format!("invalid state id {:?}", parts[0])))?;
        let dst: usize = parts[2]
            .parse()
            .map_err(|_| Error::parse(no, format!("invalid state id {:?}", parts[2])))?;
        if src >= state_count || dst >= state_count {
            return Err(Error::parse(no, format!("state id out of range in {line:?}")));
        }
        let label = if parts[1] == EPSILON_TOKEN {
            Label::Eps
        } else {
            match alphabet.id(parts[1]) {
                Some(s) => Label::Sym(s),
                None => {
                    return Err(Error::parse(
                        no,
                        format!("unknown symbol {:?}", parts[1]),
                    ))
                }
            }
        };
        if !transitions.insert((src, label, dst)) {
            return Err(Error::parse(no, format!("duplicate transition {line:?}")));
        }
    }

    let nfa = Nfa::new(alphabet, state_count, transitions, initials, finals)
        .map_err(|e| Error::parse(0, e.to_string()))?;
    match names {
        Some(ns) => nfa.with_names(ns),
        None => Ok(nfa),
    }
}

/// Parses the `.aut` format and checks determinism (exactly one initial
/// state, no ε, at most one target per state and symbol).
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let nfa = parse_nfa(text)?;
    Dfa::try_from_nfa(&nfa)
}

/// Prints an [`Nfa`] in the `.aut` format; `parse_nfa` of the output is the
/// identity.
pub fn print_nfa(nfa: &Nfa) -> String {
    let mut out = String::new();
    let symbols: Vec<&str> = nfa.alphabet().symbols().collect();
    writeln!(out, "alphabet: {}", symbols.join(" ")).unwrap();
    writeln!(out, "states: {}", nfa.state_count()).unwrap();
    if let Some(names) = nfa.names() {
        writeln!(out, "names: {}", names.join(" ")).unwrap();
    }
    let fmt_ids = |ids: &BTreeSet<StateId>| {
        ids.iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "initial: {}", fmt_ids(nfa.initials())).unwrap();
    writeln!(out, "final: {}", fmt_ids(nfa.finals())).unwrap();
    for (p, l, q) in nfa.transitions() {
        let label = match l {
            Label::Eps => EPSILON_TOKEN,
            Label::Sym(s) => nfa.alphabet().symbol(s),
        };
        writeln!(out, "{p} {label} {q}").unwrap();
    }
    out
}

pub fn print_dfa(dfa: &Dfa) -> String {
    print_nfa(&dfa.to_nfa())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::testdata::CONTAINS_AB_NFA;

    #[test]
    fn round_trip() {
        let nfa = parse_nfa(CONTAINS_AB_NFA).unwrap();
        let printed = print_nfa(&nfa);
        let again = parse_nfa(&printed).unwrap();
        assert_eq!(nfa, again);
    }

    #[test]
    fn comments_names_and_eps() {
        let text = "# a two-state automaton\nalphabet: a b\nstates: 2\nnames: p q\ninitial: 0\nfinal: 1\n0 eps 1   # jump\n1 a 1\n";
        let nfa = parse_nfa(text).unwrap();
        assert!(nfa.has_epsilon());
        assert_eq!(nfa.names().unwrap(), ["p", "q"]);
        let printed = print_nfa(&nfa);
        assert_eq!(parse_nfa(&printed).unwrap(), nfa);
    }

    #[test]
    fn line_numbered_errors() {
        let dup = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\n0 a 0\n0 a 0\n";
        match parse_nfa(dup) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 6);
                assert!(msg.contains("duplicate"));
            }
            other => panic!("expected duplicate-transition error, got {other:?}"),
        }

        let oob = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\n0 a 3\n";
        match parse_nfa(oob) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected out-of-range error, got {other:?}"),
        }

        let bad_sym = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\n0 c 0\n";
        assert!(matches!(parse_nfa(bad_sym), Err(Error::Parse { line: 5, .. })));
    }

    #[test]
    fn eps_is_not_an_alphabet_symbol() {
        let text = "alphabet: a eps\nstates: 1\ninitial: 0\nfinal: 0\n";
        assert!(parse_nfa(text).is_err());
    }

    #[test]
    fn dfa_rejects_nondeterminism() {
        assert!(parse_dfa(CONTAINS_AB_NFA).is_err());
    }
}
