//! Deterministic automata with an explicit (possibly partial) transition
//! function.

use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::{Alphabet, Label, StateId, SymbolId, Word};
use crate::automaton::nfa::Nfa;
use crate::error::{Error, Result};

/// A deterministic automaton `(Q, δ, i, F)`: exactly one initial state and at
/// most one target per `(state, symbol)`. The `complete` flag is computed at
/// construction and records whether δ is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    names: Option<Vec<String>>,
    delta: Vec<Vec<Option<StateId>>>,
    initial: StateId,
    finals: BTreeSet<StateId>,
    complete: bool,
}

/// Outcome of running a word: the end state (None when a partial δ lacks a
/// needed entry) and whether the word is accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub end: Option<StateId>,
    pub accepted: bool,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        delta: Vec<Vec<Option<StateId>>>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Dfa> {
        if state_count == 0 {
            return Err(Error::input("a DFA needs at least one state"));
        }
        if delta.len() != state_count {
            return Err(Error::input("delta must have one row per state"));
        }
        for row in &delta {
            if row.len() != alphabet.len() {
                return Err(Error::input("delta rows must cover the alphabet"));
            }
            for &t in row {
                if let Some(q) = t {
                    if q >= state_count {
                        return Err(Error::input(format!("state id {q} out of range")));
                    }
                }
            }
        }
        if initial >= state_count {
            return Err(Error::input(format!("initial state {initial} out of range")));
        }
        let finals: BTreeSet<StateId> = finals.into_iter().collect();
        for &q in &finals {
            if q >= state_count {
                return Err(Error::input(format!("final state {q} out of range")));
            }
        }
        let complete = delta.iter().all(|row| row.iter().all(Option::is_some));
        Ok(Dfa {
            alphabet,
            state_count,
            names: None,
            delta,
            initial,
            finals,
            complete,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Dfa> {
        if names.len() != self.state_count {
            return Err(Error::input("wrong number of state names"));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn step(&self, q: StateId, s: SymbolId) -> Option<StateId> {
        self.delta[q][s]
    }

    /// Extended transition function δ(q, w).
    pub fn walk(&self, mut q: StateId, w: &[SymbolId]) -> Option<StateId> {
        for &s in w {
            q = self.delta[q][s]?;
        }
        Some(q)
    }

    /// Runs `w` from the initial state.
    pub fn run(&self, w: &[SymbolId]) -> Result<RunOutcome> {
        for &s in w {
            if s >= self.alphabet.len() {
                return Err(Error::input(format!("symbol id {s} not in alphabet")));
            }
        }
        let end = self.walk(self.initial, w);
        let accepted = end.is_some_and(|q| self.finals.contains(&q));
        Ok(RunOutcome { end, accepted })
    }

    pub fn accepts(&self, w: &[SymbolId]) -> Result<bool> {
        Ok(self.run(w)?.accepted)
    }

    /// Adds a sink state completing δ, if needed.
    pub fn completed(&self) -> Dfa {
        if self.complete {
            return self.clone();
        }
        let sink = self.state_count;
        let mut delta = self.delta.clone();
        for row in &mut delta {
            for t in row.iter_mut() {
                if t.is_none() {
                    *t = Some(sink);
                }
            }
        }
        delta.push(vec![Some(sink); self.alphabet.len()]);
        let names = self.names.as_ref().map(|ns| {
            let mut ns = ns.clone();
            ns.push("z".to_string());
            ns
        });
        Dfa {
            alphabet: self.alphabet.clone(),
            state_count: self.state_count + 1,
            names,
            delta,
            initial: self.initial,
            finals: self.finals.clone(),
            complete: true,
        }
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut transitions = Vec::new();
        for (q, row) in self.delta.iter().enumerate() {
            for (s, &t) in row.iter().enumerate() {
                if let Some(t) = t {
                    transitions.push((q, Label::Sym(s), t));
                }
            }
        }
        let nfa = Nfa::new(
            self.alphabet.clone(),
            self.state_count,
            transitions,
            [self.initial],
            self.finals.iter().copied(),
        )
        .expect("DFA is a valid NFA");
        match &self.names {
            Some(ns) => nfa.with_names(ns.clone()).expect("same state count"),
            None => nfa,
        }
    }

    /// Reinterprets an ε-free NFA with exactly one initial state and at most
    /// one target per `(state, symbol)` as a DFA.
    pub fn try_from_nfa(nfa: &Nfa) -> Result<Dfa> {
        if nfa.has_epsilon() {
            return Err(Error::contract("automaton has ε-transitions"));
        }
        if nfa.initials().len() != 1 {
            return Err(Error::contract(format!(
                "deterministic automaton needs exactly one initial state, got {}",
                nfa.initials().len()
            )));
        }
        let mut delta = vec![vec![None; nfa.alphabet().len()]; nfa.state_count()];
        for (p, l, q) in nfa.transitions() {
            let s = l.symbol().expect("no ε");
            if delta[p][s].is_some() {
                return Err(Error::contract(format!(
                    "nondeterministic on state {p}, symbol {}",
                    nfa.alphabet().symbol(s)
                )));
            }
            delta[p][s] = Some(q);
        }
        let dfa = Dfa::new(
            nfa.alphabet().clone(),
            nfa.state_count(),
            delta,
            *nfa.initials().iter().next().unwrap(),
            nfa.finals().iter().copied(),
        )?;
        match nfa.names() {
            Some(ns) => dfa.with_names(ns.to_vec()),
            None => Ok(dfa),
        }
    }

    /// BFS order of the accessible states, following the alphabet order. The
    /// basis of every canonical form in the crate.
    fn bfs_order(&self) -> Vec<StateId> {
        let mut order = Vec::new();
        let mut seen = vec![false; self.state_count];
        let mut queue = VecDeque::new();
        seen[self.initial] = true;
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for s in self.alphabet.ids() {
                if let Some(t) = self.delta[q][s] {
                    if !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        order
    }

    /// Restricts to the accessible part, renumbering states in canonical BFS
    /// order. Returns the restriction and the old→new map.
    pub fn accessible(&self) -> (Dfa, Vec<Option<StateId>>) {
        let order = self.bfs_order();
        let mut map = vec![None; self.state_count];
        for (new, &old) in order.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut delta = vec![vec![None; self.alphabet.len()]; order.len()];
        for (new, &old) in order.iter().enumerate() {
            for s in self.alphabet.ids() {
                delta[new][s] = self.delta[old][s].map(|t| map[t].expect("successor accessible"));
            }
        }
        let mut dfa = Dfa::new(
            self.alphabet.clone(),
            order.len(),
            delta,
            0,
            self.finals.iter().filter_map(|&q| map[q]),
        )
        .expect("accessible restriction is valid");
        if let Some(ns) = &self.names {
            dfa = dfa
                .with_names(order.iter().map(|&old| ns[old].clone()).collect())
                .expect("accessible names");
        }
        (dfa, map)
    }

    /// Canonical form of the accessible part: δ table and finals bitmap under
    /// BFS numbering. Two complete accessible DFAs are isomorphic iff their
    /// canonical forms are equal.
    fn canonical_form(&self) -> (Vec<Vec<Option<StateId>>>, Vec<bool>) {
        let (acc, _) = self.accessible();
        let finals = (0..acc.state_count)
            .map(|q| acc.finals.contains(&q))
            .collect();
        (acc.delta, finals)
    }

    /// Isomorphism test for complete accessible DFAs: true iff a bijection
    /// preserving initial state, finals and δ exists; on success the state
    /// bijection `self → other` is returned.
    pub fn isomorphic(&self, other: &Dfa) -> Option<Vec<StateId>> {
        if self.alphabet != other.alphabet {
            return None;
        }
        if self.canonical_form() != other.canonical_form() {
            return None;
        }
        // Compose the two BFS numberings into a bijection.
        let order_a = self.bfs_order();
        let order_b = other.bfs_order();
        if order_a.len() != self.state_count || order_b.len() != other.state_count {
            // Inaccessible states present: languages agree but there is no
            // total bijection; report the accessible-part bijection anyway.
        }
        let mut map = vec![0; self.state_count];
        for (idx, &qa) in order_a.iter().enumerate() {
            map[qa] = order_b[idx];
        }
        Some(map)
    }

    pub fn enumerate_language(&self, max_len: usize) -> Vec<Word> {
        self.to_nfa().enumerate_language(max_len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::format::parse_dfa;
    use crate::automaton::testdata::CONTAINS_AB_DFA;

    #[test]
    fn run_and_accept() {
        let dfa = parse_dfa(CONTAINS_AB_DFA).unwrap();
        let w = dfa.alphabet().parse_word("bbab").unwrap();
        let out = dfa.run(&w).unwrap();
        assert!(out.accepted);
        assert_eq!(out.end, Some(2));

        // ε stays at the initial state.
        let out = dfa.run(&[]).unwrap();
        assert_eq!(out.end, Some(0));
        assert!(!out.accepted);
    }

    #[test]
    fn partial_run_is_undefined_not_error() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let dfa = Dfa::new(ab, 1, vec![vec![Some(0), None]], 0, [0]).unwrap();
        assert!(!dfa.is_complete());
        let w = dfa.alphabet().parse_word("ab").unwrap();
        let out = dfa.run(&w).unwrap();
        assert_eq!(out.end, None);
        assert!(!out.accepted);
        let comp = dfa.completed();
        assert!(comp.is_complete());
        assert_eq!(comp.state_count(), 2);
    }

    #[test]
    fn isomorphism_identity_and_final_sensitivity() {
        let dfa = parse_dfa(CONTAINS_AB_DFA).unwrap();
        let map = dfa.isomorphic(&dfa).expect("isomorphic to itself");
        assert_eq!(map, vec![0, 1, 2]);

        // Moving the final state breaks isomorphism at the finals bitmap.
        let moved = Dfa::new(
            dfa.alphabet().clone(),
            3,
            vec![
                vec![Some(1), Some(0)],
                vec![Some(1), Some(2)],
                vec![Some(2), Some(2)],
            ],
            0,
            [1],
        )
        .unwrap();
        assert!(dfa.isomorphic(&moved).is_none());
    }
}
