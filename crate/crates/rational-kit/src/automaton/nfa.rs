//! Nondeterministic automata, optionally with ε-transitions.

use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::{Alphabet, Label, StateId, SymbolId, Word};
use crate::error::{Error, Result};

/// A nondeterministic finite automaton `(Q, T, I, F)` over a declared
/// alphabet. States are dense ids `0..state_count`; display names, when
/// present, live in a side table. ε-transitions are permitted (label
/// [`Label::Eps`]). The zero-state automaton is legal and denotes ∅.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    names: Option<Vec<String>>,
    transitions: BTreeSet<(StateId, Label, StateId)>,
    initials: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
}

/// A concrete path of an automaton: states `q0..qn` and the labels of the
/// edges between them (ε labels included). The empty path is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub states: Vec<StateId>,
    pub labels: Vec<Label>,
}

impl PathWitness {
    /// The word this path is labeled by (ε steps contribute nothing).
    pub fn word(&self) -> Word {
        self.labels.iter().filter_map(|l| l.symbol()).collect()
    }

    /// Checks that every consecutive triple is a transition of `nfa`.
    pub fn is_valid_in(&self, nfa: &Nfa) -> bool {
        if self.states.len() != self.labels.len() + 1 {
            return false;
        }
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| nfa.has_transition(self.states[i], l, self.states[i + 1]))
    }
}

/// Result of trimming: the restricted automaton plus the diagnostic sets.
#[derive(Debug, Clone)]
pub struct TrimReport {
    pub nfa: Nfa,
    pub accessible: BTreeSet<StateId>,
    pub coaccessible: BTreeSet<StateId>,
    /// Old state id → new id (None for removed states).
    pub state_map: Vec<Option<StateId>>,
    /// Fixpoint rounds used by each reachability sweep (≤ `|Q|`).
    pub accessible_rounds: usize,
    pub coaccessible_rounds: usize,
}

impl Nfa {
    pub fn new<T, I, F>(
        alphabet: Alphabet,
        state_count: usize,
        transitions: T,
        initials: I,
        finals: F,
    ) -> Result<Nfa>
    where
        T: IntoIterator<Item = (StateId, Label, StateId)>,
        I: IntoIterator<Item = StateId>,
        F: IntoIterator<Item = StateId>,
    {
        let mut set = BTreeSet::new();
        for (p, l, q) in transitions {
            if p >= state_count || q >= state_count {
                return Err(Error::input(format!(
                    "transition ({p}, _, {q}) out of range for {state_count} states"
                )));
            }
            if let Label::Sym(s) = l {
                if s >= alphabet.len() {
                    return Err(Error::input(format!("symbol id {s} out of range")));
                }
            }
            set.insert((p, l, q));
        }
        let initials: BTreeSet<StateId> = initials.into_iter().collect();
        let finals: BTreeSet<StateId> = finals.into_iter().collect();
        for &q in initials.iter().chain(finals.iter()) {
            if q >= state_count {
                return Err(Error::input(format!("state id {q} out of range")));
            }
        }
        Ok(Nfa {
            alphabet,
            state_count,
            names: None,
            transitions: set,
            initials,
            finals,
        })
    }

    /// Attaches display names (one per state).
    pub fn with_names(mut self, names: Vec<String>) -> Result<Nfa> {
        if names.len() != self.state_count {
            return Err(Error::input(format!(
                "expected {} names, got {}",
                self.state_count,
                names.len()
            )));
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

    pub fn state_name(&self, q: StateId) -> String {
        match &self.names {
            Some(ns) => ns[q].clone(),
            None => q.to_string(),
        }
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Label, StateId)> + '_ {
        self.transitions.iter().copied()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn has_transition(&self, p: StateId, l: Label, q: StateId) -> bool {
        self.transitions.contains(&(p, l, q))
    }

    pub fn initials(&self) -> &BTreeSet<StateId> {
        &self.initials
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn has_epsilon(&self) -> bool {
        self.transitions.iter().any(|&(_, l, _)| l == Label::Eps)
    }

    /// Per-state successor lists: `adj[q][s]` are the `s`-successors of `q`.
    pub(crate) fn adjacency(&self) -> Vec<Vec<Vec<StateId>>> {
        let mut adj = vec![vec![Vec::new(); self.alphabet.len()]; self.state_count];
        for &(p, l, q) in &self.transitions {
            if let Label::Sym(s) = l {
                adj[p][s].push(q);
            }
        }
        adj
    }

    pub(crate) fn eps_adjacency(&self) -> Vec<Vec<StateId>> {
        let mut adj = vec![Vec::new(); self.state_count];
        for &(p, l, q) in &self.transitions {
            if l == Label::Eps {
                adj[p].push(q);
            }
        }
        adj
    }

    /// Forward ε-closure of a state set.
    pub(crate) fn eps_closure(&self, seed: &BTreeSet<StateId>) -> BTreeSet<StateId> {
        let eps = self.eps_adjacency();
        let mut closed = seed.clone();
        let mut stack: Vec<StateId> = seed.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &eps[q] {
                if closed.insert(r) {
                    stack.push(r);
                }
            }
        }
        closed
    }

    fn check_word(&self, w: &[SymbolId]) -> Result<()> {
        for &s in w {
            if s >= self.alphabet.len() {
                return Err(Error::input(format!("symbol id {s} not in alphabet")));
            }
        }
        Ok(())
    }

    /// Does some successful path carry the word `w`? On acceptance a witness
    /// path (shortest in number of edges, ε steps included) is returned.
    pub fn accepts(&self, w: &[SymbolId]) -> Result<Option<PathWitness>> {
        self.check_word(w)?;
        // BFS over (position in w, state); ε edges stay at the same position.
        let n = self.state_count;
        if n == 0 {
            return Ok(None);
        }
        let adj = self.adjacency();
        let eps = self.eps_adjacency();
        let idx = |pos: usize, q: StateId| pos * n + q;
        let mut parent: Vec<Option<(usize, StateId, Label)>> = vec![None; (w.len() + 1) * n];
        let mut seen = vec![false; (w.len() + 1) * n];
        let mut queue = VecDeque::new();
        for &q in &self.initials {
            seen[idx(0, q)] = true;
            queue.push_back((0usize, q));
        }
        let mut goal: Option<(usize, StateId)> = None;
        while let Some((pos, q)) = queue.pop_front() {
            if pos == w.len() && self.finals.contains(&q) {
                goal = Some((pos, q));
                break;
            }
            for &r in &eps[q] {
                if !seen[idx(pos, r)] {
                    seen[idx(pos, r)] = true;
                    parent[idx(pos, r)] = Some((pos, q, Label::Eps));
                    queue.push_back((pos, r));
                }
            }
            if pos < w.len() {
                for &r in &adj[q][w[pos]] {
                    if !seen[idx(pos + 1, r)] {
                        seen[idx(pos + 1, r)] = true;
                        parent[idx(pos + 1, r)] = Some((pos, q, Label::Sym(w[pos])));
                        queue.push_back((pos + 1, r));
                    }
                }
            }
        }
        let Some((mut pos, mut q)) = goal else {
            return Ok(None);
        };
        let mut states = vec![q];
        let mut labels = Vec::new();
        while let Some((ppos, pq, l)) = parent[idx(pos, q)] {
            labels.push(l);
            states.push(pq);
            pos = ppos;
            q = pq;
        }
        states.reverse();
        labels.reverse();
        Ok(Some(PathWitness { states, labels }))
    }

    pub fn accepts_bool(&self, w: &[SymbolId]) -> Result<bool> {
        Ok(self.accepts(w)?.is_some())
    }

    /// True when every `(state, symbol)` pair has at least one transition.
    pub fn is_complete(&self) -> bool {
        let adj = self.adjacency();
        adj.iter().all(|row| row.iter().all(|ts| !ts.is_empty()))
    }

    /// The completion: unchanged if already complete, otherwise one fresh
    /// sink state with self-loops receives every missing `(q, a)` pair.
    pub fn completed(&self) -> Nfa {
        if self.is_complete() {
            return self.clone();
        }
        let sink = self.state_count;
        let mut transitions = self.transitions.clone();
        let adj = self.adjacency();
        for q in 0..self.state_count {
            for s in self.alphabet.ids() {
                if adj[q][s].is_empty() {
                    transitions.insert((q, Label::Sym(s), sink));
                }
            }
        }
        for s in self.alphabet.ids() {
            transitions.insert((sink, Label::Sym(s), sink));
        }
        let names = self.names.as_ref().map(|ns| {
            let mut ns = ns.clone();
            ns.push("z".to_string());
            ns
        });
        Nfa {
            alphabet: self.alphabet.clone(),
            state_count: self.state_count + 1,
            names,
            transitions,
            initials: self.initials.clone(),
            finals: self.finals.clone(),
        }
    }

    fn forward_reachable(&self, seeds: &BTreeSet<StateId>, reversed: bool) -> (BTreeSet<StateId>, usize) {
        // Fixpoint iteration Q_{n+1} = Q_n ∪ step(Q_n); stabilizes in ≤ |Q| rounds.
        let mut step: Vec<Vec<StateId>> = vec![Vec::new(); self.state_count];
        for &(p, _, q) in &self.transitions {
            if reversed {
                step[q].push(p);
            } else {
                step[p].push(q);
            }
        }
        let mut set = seeds.clone();
        let mut rounds = 0;
        loop {
            let mut next = set.clone();
            for &q in &set {
                next.extend(step[q].iter().copied());
            }
            if next == set {
                break;
            }
            set = next;
            rounds += 1;
        }
        (set, rounds)
    }

    /// States accessible from the initial states.
    pub fn accessible_states(&self) -> BTreeSet<StateId> {
        self.forward_reachable(&self.initials, false).0
    }

    /// States from which a final state is reachable.
    pub fn coaccessible_states(&self) -> BTreeSet<StateId> {
        self.forward_reachable(&self.finals, true).0
    }

    /// Restricts to the states lying on at least one successful path.
    pub fn trim(&self) -> TrimReport {
        let (accessible, accessible_rounds) = self.forward_reachable(&self.initials, false);
        let (coaccessible, coaccessible_rounds) = self.forward_reachable(&self.finals, true);
        let keep: Vec<StateId> = accessible.intersection(&coaccessible).copied().collect();
        let mut state_map = vec![None; self.state_count];
        for (new, &old) in keep.iter().enumerate() {
            state_map[old] = Some(new);
        }
        let transitions = self
            .transitions
            .iter()
            .filter_map(|&(p, l, q)| Some((state_map[p]?, l, state_map[q]?)));
        let initials = self.initials.iter().filter_map(|&q| state_map[q]);
        let finals = self.finals.iter().filter_map(|&q| state_map[q]);
        let mut nfa = Nfa::new(
            self.alphabet.clone(),
            keep.len(),
            transitions,
            initials,
            finals,
        )
        .expect("trim preserves validity");
        if let Some(ns) = &self.names {
            let names = keep.iter().map(|&old| ns[old].clone()).collect();
            nfa = nfa.with_names(names).expect("trim names");
        }
        TrimReport {
            nfa,
            accessible,
            coaccessible,
            state_map,
            accessible_rounds,
            coaccessible_rounds,
        }
    }

    /// A shortest accepted word, or `None` when the language is empty.
    /// Exploration follows state and symbol order, so the result is
    /// deterministic.
    pub fn shortest_word(&self) -> Option<Word> {
        let adj = self.adjacency();
        let eps = self.eps_adjacency();
        // 0-1 BFS: ε edges cost 0, symbol edges cost 1.
        let mut dist: Vec<Option<usize>> = vec![None; self.state_count];
        let mut parent: Vec<Option<(StateId, Label)>> = vec![None; self.state_count];
        let mut queue = VecDeque::new();
        for &q in &self.initials {
            dist[q] = Some(0);
            queue.push_back(q);
        }
        while let Some(q) = queue.pop_front() {
            let d = dist[q].unwrap();
            for &r in &eps[q] {
                if dist[r].is_none() {
                    dist[r] = Some(d);
                    parent[r] = Some((q, Label::Eps));
                    queue.push_front(r);
                }
            }
            for s in self.alphabet.ids() {
                for &r in &adj[q][s] {
                    if dist[r].is_none() {
                        dist[r] = Some(d + 1);
                        parent[r] = Some((q, Label::Sym(s)));
                        queue.push_back(r);
                    }
                }
            }
        }
        let goal = self
            .finals
            .iter()
            .filter(|&&f| dist[f].is_some())
            .min_by_key(|&&f| (dist[f].unwrap(), f))?;
        let mut word = Vec::new();
        let mut q = *goal;
        while let Some((p, l)) = parent[q] {
            if let Label::Sym(s) = l {
                word.push(s);
            }
            q = p;
        }
        word.reverse();
        Some(word)
    }

    /// Emptiness test; on a non-empty language also a shortest witness word.
    pub fn is_empty_language(&self) -> (bool, Option<Word>) {
        match self.shortest_word() {
            Some(w) => (false, Some(w)),
            None => (true, None),
        }
    }

    /// Eliminates ε-transitions by forward closure on targets: with `R` the
    /// reflexive transitive closure of the ε-edges,
    /// `T' = {(p,a,q) : (p,a,q') ∈ T, q' R q}` and
    /// `I' = {q : p R q for some p ∈ I}`; finals are unchanged.
    pub fn remove_epsilon(&self) -> Nfa {
        if !self.has_epsilon() {
            return self.clone();
        }
        let mut closures: Vec<BTreeSet<StateId>> = Vec::with_capacity(self.state_count);
        for q in 0..self.state_count {
            closures.push(self.eps_closure(&BTreeSet::from([q])));
        }
        let mut transitions = BTreeSet::new();
        for &(p, l, q1) in &self.transitions {
            if let Label::Sym(s) = l {
                for &q in &closures[q1] {
                    transitions.insert((p, Label::Sym(s), q));
                }
            }
        }
        let mut initials = BTreeSet::new();
        for &i in &self.initials {
            initials.extend(closures[i].iter().copied());
        }
        Nfa {
            alphabet: self.alphabet.clone(),
            state_count: self.state_count,
            names: self.names.clone(),
            transitions,
            initials,
            finals: self.finals.clone(),
        }
    }

    /// All accepted words of length ≤ `max_len`, in length-then-lexicographic
    /// order. Exact (prefix search over ε-closed state sets).
    pub fn enumerate_language(&self, max_len: usize) -> Vec<Word> {
        let nfa = self.remove_epsilon();
        let adj = nfa.adjacency();
        let mut out: Vec<Word> = Vec::new();
        let start: BTreeSet<StateId> = nfa.initials.clone();
        let mut stack: Vec<(Word, BTreeSet<StateId>)> = vec![(Vec::new(), start)];
        while let Some((word, states)) = stack.pop() {
            if states.iter().any(|q| nfa.finals.contains(q)) {
                out.push(word.clone());
            }
            if word.len() == max_len {
                continue;
            }
            // Push in reverse symbol order so the stack pops lexicographically.
            for s in nfa.alphabet.ids().rev() {
                let next: BTreeSet<StateId> = states
                    .iter()
                    .flat_map(|&q| adj[q][s].iter().copied())
                    .collect();
                if next.is_empty() {
                    continue;
                }
                let mut w2 = word.clone();
                w2.push(s);
                stack.push((w2, next));
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Renames states by the permutation-ish map `perm[old] = new` (used by
    /// construction code that wants specific layouts).
    pub fn map_states(&self, new_count: usize, map: &[Option<StateId>]) -> Nfa {
        let transitions = self
            .transitions
            .iter()
            .filter_map(|&(p, l, q)| Some((map[p]?, l, map[q]?)));
        Nfa::new(
            self.alphabet.clone(),
            new_count,
            transitions,
            self.initials.iter().filter_map(|&q| map[q]),
            self.finals.iter().filter_map(|&q| map[q]),
        )
        .expect("state mapping preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::format::parse_nfa;

    fn contains_ab_nfa() -> Nfa {
        // Three states; accepts words containing the factor ab.
        let ab = Alphabet::new(["a", "b"]).unwrap();
        Nfa::new(
            ab,
            3,
            [
                (0, Label::Sym(0), 0),
                (0, Label::Sym(1), 0),
                (0, Label::Sym(0), 1),
                (1, Label::Sym(1), 2),
                (2, Label::Sym(0), 2),
                (2, Label::Sym(1), 2),
            ],
            [0],
            [2],
        )
        .unwrap()
    }

    #[test]
    fn accepts_with_witness() {
        let nfa = contains_ab_nfa();
        let w = nfa.alphabet().parse_word("aaaba").unwrap();
        let witness = nfa.accepts(&w).unwrap().expect("accepted");
        assert_eq!(witness.states, vec![0, 0, 0, 1, 2, 2]);
        assert!(witness.is_valid_in(&nfa));
        assert_eq!(witness.word(), w);

        let rejected = nfa.alphabet().parse_word("bba").unwrap();
        assert!(nfa.accepts(&rejected).unwrap().is_none());
    }

    #[test]
    fn empty_word_accepted_iff_initial_final_meet() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let nfa = Nfa::new(ab.clone(), 1, [], [0], [0]).unwrap();
        assert!(nfa.accepts_bool(&[]).unwrap());
        let nfa2 = Nfa::new(ab, 2, [], [0], [1]).unwrap();
        assert!(!nfa2.accepts_bool(&[]).unwrap());
    }

    #[test]
    fn unknown_symbol_is_input_error() {
        let nfa = contains_ab_nfa();
        assert!(matches!(nfa.accepts(&[5]), Err(Error::Input(_))));
    }

    #[test]
    fn completion_adds_sink() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let single = Nfa::new(ab, 1, [], [0], [0]).unwrap();
        let comp = single.completed();
        assert_eq!(comp.state_count(), 2);
        assert_eq!(comp.transition_count(), 4);
        assert!(comp.is_complete());
        // Completing a complete automaton is the identity.
        assert_eq!(comp.completed(), comp);
    }

    #[test]
    fn trim_drops_useless_states() {
        // b*a* with a completion sink: the sink is not co-accessible.
        let text = "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 0 1\n0 b 0\n0 a 1\n1 a 1\n1 b 2\n2 a 2\n2 b 2\n";
        let nfa = parse_nfa(text).unwrap();
        let report = nfa.trim();
        assert_eq!(report.nfa.state_count(), 2);
        assert_eq!(report.accessible.len(), 3);
        assert_eq!(report.coaccessible, BTreeSet::from([0, 1]));
        assert!(report.accessible_rounds <= 3);
    }

    #[test]
    fn trim_of_no_initials_is_empty() {
        let ab = Alphabet::new(["a"]).unwrap();
        let nfa = Nfa::new(ab, 2, [(0, Label::Sym(0), 1)], [], [1]).unwrap();
        let report = nfa.trim();
        assert_eq!(report.nfa.state_count(), 0);
        let (empty, w) = report.nfa.is_empty_language();
        assert!(empty && w.is_none());
    }

    #[test]
    fn shortest_word_is_bfs_minimal() {
        let nfa = contains_ab_nfa();
        let (empty, w) = nfa.is_empty_language();
        assert!(!empty);
        assert_eq!(nfa.alphabet().format_word(&w.unwrap()), "ab");

        let no_finals = Nfa::new(nfa.alphabet().clone(), 1, [], [0], []).unwrap();
        assert!(no_finals.is_empty_language().0);
    }

    #[test]
    fn epsilon_removal_matches_sketch() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        // p --ε--> q, q final, p initial: I' gains q; ε accepted before and after.
        let nfa = Nfa::new(ab, 2, [(0, Label::Eps, 1)], [0], [1]).unwrap();
        let plain = nfa.remove_epsilon();
        assert!(!plain.has_epsilon());
        assert_eq!(plain.initials(), &BTreeSet::from([0, 1]));
        assert_eq!(plain.finals(), &BTreeSet::from([1]));
        assert!(plain.accepts_bool(&[]).unwrap());
    }

    #[test]
    fn epsilon_free_input_unchanged() {
        let nfa = contains_ab_nfa();
        assert_eq!(nfa.remove_epsilon(), nfa);
    }

    #[test]
    fn concat_style_epsilon_automaton() {
        // {a}·{b} as the textbook ε-automaton, then ε-removal.
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let nfa = Nfa::new(
            ab.clone(),
            4,
            [
                (0, Label::Sym(0), 1),
                (1, Label::Eps, 2),
                (2, Label::Sym(1), 3),
            ],
            [0],
            [3],
        )
        .unwrap();
        let plain = nfa.remove_epsilon();
        let words = plain.enumerate_language(4);
        assert_eq!(words, vec![ab.parse_word("ab").unwrap()]);
    }

    #[test]
    fn enumerate_is_length_lex() {
        let nfa = contains_ab_nfa();
        let words: Vec<String> = nfa
            .enumerate_language(3)
            .iter()
            .map(|w| nfa.alphabet().format_word(w))
            .collect();
        assert_eq!(words, ["ab", "aab", "aba", "abb", "bab"]);
    }
}
