//! Subset construction and on-the-fly determinization.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::alphabet::StateId;
use crate::automaton::dfa::Dfa;
use crate::automaton::nfa::Nfa;
use crate::config::Caps;
use crate::error::{Error, Result};

fn subset_name(nfa: &Nfa, members: &[StateId]) -> String {
    let inner = members
        .iter()
        .map(|&q| nfa.state_name(q))
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

/// The full powerset automaton over `P(Q)`: complete and deterministic, with
/// state id = bitmask over the source states (so state 0 is ∅ and state
/// `2^|Q| - 1` is `Q`). Requires an ε-free input and `|Q|` at most
/// `caps.subset_source_states`.
pub fn subset_automaton(nfa: &Nfa, caps: &Caps) -> Result<Dfa> {
    if nfa.has_epsilon() {
        return Err(Error::contract(
            "subset construction needs an ε-free automaton; remove ε-transitions first",
        ));
    }
    let n = nfa.state_count();
    if n > caps.subset_source_states {
        return Err(Error::resource(format!(
            "subset automaton over {n} states would have 2^{n} states (cap {})",
            caps.subset_source_states
        )));
    }
    let adj = nfa.adjacency();
    let size = 1usize << n;
    let alphabet = nfa.alphabet().clone();
    let mut delta = vec![vec![None; alphabet.len()]; size];
    let mut names = Vec::with_capacity(size);
    let mut finals = Vec::new();
    let final_mask: usize = nfa.finals().iter().fold(0, |m, &q| m | (1 << q));
    let initial_mask: usize = nfa.initials().iter().fold(0, |m, &q| m | (1 << q));
    for mask in 0..size {
        let members: Vec<StateId> = (0..n).filter(|&q| mask & (1 << q) != 0).collect();
        names.push(subset_name(nfa, &members));
        if mask & final_mask != 0 {
            finals.push(mask);
        }
        for s in alphabet.ids() {
            let mut target = 0usize;
            for &q in &members {
                for &r in &adj[q][s] {
                    target |= 1 << r;
                }
            }
            delta[mask][s] = Some(target);
        }
    }
    Dfa::new(alphabet, size, delta, initial_mask, finals)?.with_names(names)
}

/// Determinization output: the DFA plus, for each produced state, the subset
/// of source states it stands for.
#[derive(Debug, Clone)]
pub struct DeterminizeReport {
    pub dfa: Dfa,
    pub subsets: Vec<Vec<StateId>>,
}

/// On-the-fly determinization: ε-removal, then the accessible part of the
/// subset automaton, constructed lazily from the initial set. The result is
/// complete on its accessible part. With `prune_non_coaccessible` the result
/// is additionally trimmed (which may make it partial); the initial state is
/// always kept.
pub fn determinize(nfa: &Nfa, prune_non_coaccessible: bool, caps: &Caps) -> Result<DeterminizeReport> {
    let nfa = nfa.remove_epsilon();
    let adj = nfa.adjacency();
    let alphabet = nfa.alphabet().clone();

    let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut delta: Vec<Vec<Option<StateId>>> = Vec::new();
    let initial_set: Vec<StateId> = nfa.initials().iter().copied().collect();
    ids.insert(initial_set.clone(), 0);
    subsets.push(initial_set);
    delta.push(vec![None; alphabet.len()]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(p) = queue.pop_front() {
        for s in alphabet.ids() {
            let target: BTreeSet<StateId> = subsets[p]
                .iter()
                .flat_map(|&q| adj[q][s].iter().copied())
                .collect();
            let target: Vec<StateId> = target.into_iter().collect();
            let t = match ids.get(&target) {
                Some(&t) => t,
                None => {
                    let t = subsets.len();
                    if t >= caps.determinize_states {
                        return Err(Error::resource(format!(
                            "determinization exceeded {} states ({} built so far)",
                            caps.determinize_states,
                            subsets.len()
                        )));
                    }
                    ids.insert(target.clone(), t);
                    subsets.push(target);
                    delta.push(vec![None; alphabet.len()]);
                    queue.push_back(t);
                    t
                }
            };
            delta[p][s] = Some(t);
        }
    }
    let finals: Vec<StateId> = subsets
        .iter()
        .enumerate()
        .filter(|(_, members)| members.iter().any(|q| nfa.finals().contains(q)))
        .map(|(i, _)| i)
        .collect();
    let names: Vec<String> = subsets.iter().map(|m| subset_name(&nfa, m)).collect();
    let mut dfa = Dfa::new(alphabet, subsets.len(), delta, 0, finals)?.with_names(names)?;

    if prune_non_coaccessible {
        let co = dfa.to_nfa().coaccessible_states();
        let mut keep: Vec<StateId> = co.iter().copied().collect();
        if !co.contains(&0) {
            keep.insert(0, 0); // empty language: keep the initial state
        }
        let mut map = vec![None; dfa.state_count()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let pruned_subsets: Vec<Vec<StateId>> = keep.iter().map(|&q| subsets[q].clone()).collect();
        let nfa_view = dfa.to_nfa().map_states(keep.len(), &map);
        dfa = Dfa::try_from_nfa(&nfa_view)?;
        return Ok(DeterminizeReport {
            dfa,
            subsets: pruned_subsets,
        });
    }
    Ok(DeterminizeReport { dfa, subsets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::format::{parse_dfa, parse_nfa};
    use crate::automaton::testdata::{CONTAINS_AB_DFA, CONTAINS_AB_NFA};

    #[test]
    fn full_subset_automaton_has_powerset_states() {
        let nfa = parse_nfa(CONTAINS_AB_NFA).unwrap();
        let sub = subset_automaton(&nfa, &Caps::default()).unwrap();
        assert_eq!(sub.state_count(), 8);
        assert!(sub.is_complete());
        // Accessible part: {1}, {1,2}, {1,3}, {1,2,3} — four states.
        let (acc, _) = sub.accessible();
        assert_eq!(acc.state_count(), 4);
        for w in nfa.alphabet().words_up_to(6) {
            assert_eq!(nfa.accepts_bool(&w).unwrap(), sub.accepts(&w).unwrap());
        }
    }

    #[test]
    fn subset_cap_is_enforced() {
        let nfa = parse_nfa(CONTAINS_AB_NFA).unwrap();
        let caps = Caps {
            subset_source_states: 2,
            ..Caps::default()
        };
        assert!(matches!(
            subset_automaton(&nfa, &caps),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn determinize_builds_accessible_row() {
        let nfa = parse_nfa(CONTAINS_AB_NFA).unwrap();
        let report = determinize(&nfa, false, &Caps::default()).unwrap();
        assert_eq!(report.dfa.state_count(), 4);
        assert!(report.dfa.is_complete());
        assert_eq!(report.subsets[0], vec![0]);
        for w in nfa.alphabet().words_up_to(6) {
            assert_eq!(nfa.accepts_bool(&w).unwrap(), report.dfa.accepts(&w).unwrap());
        }
    }

    #[test]
    fn determinize_deterministic_input_is_isomorphic() {
        let dfa = parse_dfa(CONTAINS_AB_DFA).unwrap();
        let report = determinize(&dfa.to_nfa(), false, &Caps::default()).unwrap();
        assert!(report.dfa.isomorphic(&dfa).is_some());
        assert!(report.subsets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn two_state_nfa_by_hand() {
        let text = "alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\n0 a 0\n0 a 1\n";
        let nfa = parse_nfa(text).unwrap();
        let sub = subset_automaton(&nfa, &Caps::default()).unwrap();
        assert_eq!(sub.state_count(), 4);
        let report = determinize(&nfa, false, &Caps::default()).unwrap();
        assert_eq!(report.subsets, vec![vec![0], vec![0, 1]]);
    }
}
