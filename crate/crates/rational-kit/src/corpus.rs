//! Seeded random generators for test corpora: automata, expressions and
//! sentences. Identical seeds give identical corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Label};
use crate::automaton::dfa::Dfa;
use crate::automaton::nfa::Nfa;
use crate::logic::Formula;
use crate::regex::{Regex, RegexNode};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random NFA with up to `max_states` states over `alphabet`.
pub fn random_nfa(rng: &mut ChaCha8Rng, max_states: usize, alphabet: &Alphabet) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let mut transitions = Vec::new();
    for p in 0..n {
        for s in alphabet.ids() {
            for q in 0..n {
                if rng.gen_bool(0.6 / n as f64) {
                    transitions.push((p, Label::Sym(s), q));
                }
            }
        }
    }
    let initials: Vec<usize> = (0..n).filter(|&q| q == 0 || rng.gen_bool(0.2)).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Nfa::new(alphabet.clone(), n, transitions, initials, finals).expect("random NFA is valid")
}

/// A random complete DFA with up to `max_states` states.
pub fn random_dfa(rng: &mut ChaCha8Rng, max_states: usize, alphabet: &Alphabet) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let delta = (0..n)
        .map(|_| {
            alphabet
                .ids()
                .map(|_| Some(rng.gen_range(0..n)))
                .collect::<Vec<_>>()
        })
        .collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Dfa::new(alphabet.clone(), n, delta, 0, finals).expect("random DFA is valid")
}

/// A random rational expression with at most `max_nodes` nodes.
pub fn random_regex(rng: &mut ChaCha8Rng, max_nodes: usize, alphabet: &Alphabet) -> Regex {
    fn gen(rng: &mut ChaCha8Rng, budget: usize, alphabet: &Alphabet) -> (RegexNode, usize) {
        if budget <= 1 {
            let leaf = match rng.gen_range(0..6) {
                0 => RegexNode::Empty,
                1 => RegexNode::Epsilon,
                _ => RegexNode::Letter(
                    alphabet
                        .symbol(rng.gen_range(0..alphabet.len()))
                        .to_string(),
                ),
            };
            return (leaf, 1);
        }
        match rng.gen_range(0..7) {
            0 | 1 => {
                let (l, nl) = gen(rng, (budget - 1) / 2, alphabet);
                let (r, nr) = gen(rng, budget - 1 - nl, alphabet);
                (RegexNode::Union(Box::new(l), Box::new(r)), 1 + nl + nr)
            }
            2 | 3 | 4 => {
                let (l, nl) = gen(rng, (budget - 1) / 2, alphabet);
                let (r, nr) = gen(rng, budget - 1 - nl, alphabet);
                (RegexNode::Concat(Box::new(l), Box::new(r)), 1 + nl + nr)
            }
            5 => {
                let (e, ne) = gen(rng, budget - 1, alphabet);
                (RegexNode::Star(Box::new(e)), 1 + ne)
            }
            _ => gen(rng, 1, alphabet),
        }
    }
    let (node, _) = gen(rng, max_nodes, alphabet);
    Regex::rational(node).expect("generated node set is rational")
}

/// A random MSO sentence of quantifier/connective depth at most `max_depth`.
/// Sentences are closed by construction: atoms only use variables bound by an
/// enclosing quantifier.
pub fn random_sentence(rng: &mut ChaCha8Rng, max_depth: usize, alphabet: &Alphabet) -> Formula {
    fn atom(
        rng: &mut ChaCha8Rng,
        fo: &[String],
        so: &[String],
        alphabet: &Alphabet,
    ) -> Formula {
        let mut choices: Vec<u8> = vec![0];
        if !fo.is_empty() {
            choices.extend([1, 2, 3, 4]);
            if !so.is_empty() {
                choices.push(5);
            }
        }
        match choices[rng.gen_range(0..choices.len())] {
            1 => Formula::Less(
                fo[rng.gen_range(0..fo.len())].clone(),
                fo[rng.gen_range(0..fo.len())].clone(),
            ),
            2 => Formula::Eq(
                fo[rng.gen_range(0..fo.len())].clone(),
                fo[rng.gen_range(0..fo.len())].clone(),
            ),
            3 => Formula::Succ(
                fo[rng.gen_range(0..fo.len())].clone(),
                fo[rng.gen_range(0..fo.len())].clone(),
            ),
            4 => Formula::LetterAt(
                alphabet.symbol(rng.gen_range(0..alphabet.len())).to_string(),
                fo[rng.gen_range(0..fo.len())].clone(),
            ),
            5 => Formula::SetMem(
                so[rng.gen_range(0..so.len())].clone(),
                fo[rng.gen_range(0..fo.len())].clone(),
            ),
            _ => Formula::True,
        }
    }
    fn gen(
        rng: &mut ChaCha8Rng,
        depth: usize,
        fo: &mut Vec<String>,
        so: &mut Vec<String>,
        alphabet: &Alphabet,
    ) -> Formula {
        if depth == 0 {
            return atom(rng, fo, so, alphabet);
        }
        match rng.gen_range(0..10) {
            0 | 1 => Formula::Not(Box::new(gen(rng, depth - 1, fo, so, alphabet))),
            2 | 3 => Formula::And(
                Box::new(gen(rng, depth - 1, fo, so, alphabet)),
                Box::new(gen(rng, depth - 1, fo, so, alphabet)),
            ),
            4 | 5 => Formula::Or(
                Box::new(gen(rng, depth - 1, fo, so, alphabet)),
                Box::new(gen(rng, depth - 1, fo, so, alphabet)),
            ),
            6 | 7 => {
                let x = format!("x{}", fo.len());
                fo.push(x.clone());
                let body = gen(rng, depth - 1, fo, so, alphabet);
                fo.pop();
                if rng.gen_bool(0.5) {
                    Formula::ExistsFo(x, Box::new(body))
                } else {
                    Formula::ForallFo(x, Box::new(body))
                }
            }
            8 => {
                let set = format!("X{}", so.len());
                so.push(set.clone());
                let body = gen(rng, depth - 1, fo, so, alphabet);
                so.pop();
                if rng.gen_bool(0.5) {
                    Formula::ExistsSo(set, Box::new(body))
                } else {
                    Formula::ForallSo(set, Box::new(body))
                }
            }
            _ => atom(rng, fo, so, alphabet),
        }
    }
    gen(rng, max_depth, &mut Vec::new(), &mut Vec::new(), alphabet)
}
