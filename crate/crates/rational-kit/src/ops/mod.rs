//! The closure algebra on recognizable languages: boolean operations,
//! products, concatenation, star, morphic images in both directions,
//! quotients, the unary closures (prefixes, suffixes, factors, mirror,
//! subwords), shuffle, and the derived decision procedures (inclusion and
//! equivalence).

pub mod morphism;

pub use morphism::Morphism;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::alphabet::{Label, StateId, Word};
use crate::automaton::determinize::determinize;
use crate::automaton::dfa::Dfa;
use crate::automaton::nfa::Nfa;
use crate::config::Caps;
use crate::error::{Error, Result};

/// Counts invocations of [`star`], so tests can assert that star-free
/// pipelines never reach the star construction.
static STAR_CALLS: AtomicUsize = AtomicUsize::new(0);

pub fn star_call_count() -> usize {
    STAR_CALLS.load(Ordering::Relaxed)
}

fn require_same_alphabet(a: &Nfa, b: &Nfa) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::input(format!(
            "alphabets differ: {} vs {} (use --align-alphabets to coerce)",
            a.alphabet(),
            b.alphabet()
        )));
    }
    Ok(())
}

/// Complement of a complete deterministic automaton: same δ, finals flipped.
pub fn complement(d: &Dfa) -> Result<Dfa> {
    if !d.is_complete() {
        return Err(Error::contract(
            "complement needs a complete DFA; run determinize/complete first",
        ));
    }
    let finals: Vec<StateId> = (0..d.state_count())
        .filter(|q| !d.finals().contains(q))
        .collect();
    let nfa = d.to_nfa();
    let mut out = Nfa::new(
        nfa.alphabet().clone(),
        nfa.state_count(),
        nfa.transitions(),
        [d.initial()],
        finals,
    )
    .expect("complement preserves validity");
    if let Some(ns) = nfa.names() {
        out = out.with_names(ns.to_vec())?;
    }
    Dfa::try_from_nfa(&out)
}

/// State-disjoint union: `(Q ∪ Q', T ∪ T', I ∪ I', F ∪ F')`.
pub fn union_disjoint(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    require_same_alphabet(a, b)?;
    let off = a.state_count();
    let transitions = a
        .transitions()
        .chain(b.transitions().map(|(p, l, q)| (p + off, l, q + off)));
    let initials = a
        .initials()
        .iter()
        .copied()
        .chain(b.initials().iter().map(|&q| q + off));
    let finals = a
        .finals()
        .iter()
        .copied()
        .chain(b.finals().iter().map(|&q| q + off));
    Nfa::new(
        a.alphabet().clone(),
        off + b.state_count(),
        transitions,
        initials,
        finals,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMode {
    Intersect,
    Union,
}

/// Cartesian product with synchronized transitions. Finals are `F × F'` for
/// intersection; for union they are `(F × Q') ∪ (Q × F')`, which is only
/// correct for complete inputs (checked). Determinism is preserved.
pub fn product(a: &Nfa, b: &Nfa, mode: ProductMode) -> Result<Nfa> {
    require_same_alphabet(a, b)?;
    let a = a.remove_epsilon();
    let b = b.remove_epsilon();
    if mode == ProductMode::Union && (!a.is_complete() || !b.is_complete()) {
        return Err(Error::contract(
            "product in union mode needs complete automata",
        ));
    }
    let n2 = b.state_count();
    let pair = |p: StateId, q: StateId| p * n2 + q;
    let adj_b = b.adjacency();
    let mut transitions = Vec::new();
    for (p, l, p2) in a.transitions() {
        let s = l.symbol().expect("ε removed");
        for q in 0..n2 {
            for &q2 in &adj_b[q][s] {
                transitions.push((pair(p, q), l, pair(p2, q2)));
            }
        }
    }
    let initials: Vec<StateId> = a
        .initials()
        .iter()
        .flat_map(|&p| b.initials().iter().map(move |&q| pair(p, q)))
        .collect();
    let finals: Vec<StateId> = match mode {
        ProductMode::Intersect => a
            .finals()
            .iter()
            .flat_map(|&p| b.finals().iter().map(move |&q| pair(p, q)))
            .collect(),
        ProductMode::Union => (0..a.state_count())
            .flat_map(|p| (0..n2).map(move |q| (p, q)))
            .filter(|(p, q)| a.finals().contains(p) || b.finals().contains(q))
            .map(|(p, q)| pair(p, q))
            .collect(),
    };
    Nfa::new(
        a.alphabet().clone(),
        a.state_count() * n2,
        transitions,
        initials,
        finals,
    )
}

/// Concatenation via the ε-automaton `(Q ∪ Q', T ∪ T' ∪ (F×{ε}×I'), I, F')`,
/// followed by ε-removal.
pub fn concat(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    require_same_alphabet(a, b)?;
    let off = a.state_count();
    let transitions: Vec<(StateId, Label, StateId)> = a
        .transitions()
        .chain(b.transitions().map(|(p, l, q)| (p + off, l, q + off)))
        .chain(a.finals().iter().flat_map(|&f| {
            b.initials().iter().map(move |&i| (f, Label::Eps, i + off))
        }))
        .collect();
    let eps = Nfa::new(
        a.alphabet().clone(),
        off + b.state_count(),
        transitions,
        a.initials().iter().copied(),
        b.finals().iter().map(|&q| q + off),
    )?;
    Ok(eps.remove_epsilon())
}

/// Kleene star via the ε-automaton `(Q ∪ {j}, T ∪ (F×{ε}×I), I ∪ {j}, F ∪ {j})`
/// with a fresh state `j`, followed by ε-removal.
pub fn star(a: &Nfa) -> Nfa {
    STAR_CALLS.fetch_add(1, Ordering::Relaxed);
    let j = a.state_count();
    let transitions: Vec<(StateId, Label, StateId)> = a
        .transitions()
        .chain(
            a.finals()
                .iter()
                .flat_map(|&f| a.initials().iter().map(move |&i| (f, Label::Eps, i))),
        )
        .collect();
    let initials: Vec<StateId> = a.initials().iter().copied().chain([j]).collect();
    let finals: Vec<StateId> = a.finals().iter().copied().chain([j]).collect();
    let eps = Nfa::new(a.alphabet().clone(), j + 1, transitions, initials, finals)
        .expect("star construction is valid");
    eps.remove_epsilon()
}

/// Image of a language under a morphism: each transition `(p, x, q)` becomes
/// a fresh path labeled by `φ(x)` (an ε-edge when `φ(x) = ε`), then
/// ε-removal. The result lives over the target alphabet.
pub fn morphic_image(a: &Nfa, phi: &Morphism) -> Result<Nfa> {
    if a.alphabet() != phi.source() {
        return Err(Error::input(
            "automaton alphabet does not match the morphism source",
        ));
    }
    let a = a.remove_epsilon();
    let mut state_count = a.state_count();
    let mut transitions: Vec<(StateId, Label, StateId)> = Vec::new();
    for (p, l, q) in a.transitions() {
        let x = l.symbol().expect("ε removed");
        let image = phi.image(x);
        match image.len() {
            0 => transitions.push((p, Label::Eps, q)),
            _ => {
                let mut src = p;
                for (i, &b) in image.iter().enumerate() {
                    let dst = if i + 1 == image.len() {
                        q
                    } else {
                        let fresh = state_count;
                        state_count += 1;
                        fresh
                    };
                    transitions.push((src, Label::Sym(b), dst));
                    src = dst;
                }
            }
        }
    }
    let eps = Nfa::new(
        phi.target().clone(),
        state_count,
        transitions,
        a.initials().iter().copied(),
        a.finals().iter().copied(),
    )?;
    Ok(eps.remove_epsilon())
}

/// Inverse image `φ⁻¹(L)`: states unchanged, with an `a`-transition wherever
/// `φ(a)` labels a path. The result lives over the source alphabet.
pub fn inverse_morphic_image(a: &Nfa, phi: &Morphism) -> Result<Nfa> {
    if a.alphabet() != phi.target() {
        return Err(Error::input(
            "automaton alphabet does not match the morphism target",
        ));
    }
    let a = a.remove_epsilon();
    let n = a.state_count();
    let adj = a.adjacency();
    // Boolean reachability relation per image word, composed letter by letter.
    let identity: Vec<BTreeSet<StateId>> = (0..n).map(|q| BTreeSet::from([q])).collect();
    let step = |rel: &[BTreeSet<StateId>], s: usize| -> Vec<BTreeSet<StateId>> {
        rel.iter()
            .map(|ends| ends.iter().flat_map(|&q| adj[q][s].iter().copied()).collect())
            .collect()
    };
    let mut transitions = Vec::new();
    for x in phi.source().ids() {
        let mut rel = identity.clone();
        for &b in phi.image(x) {
            rel = step(&rel, b);
        }
        for (p, ends) in rel.iter().enumerate() {
            for &q in ends {
                transitions.push((p, Label::Sym(x), q));
            }
        }
    }
    Nfa::new(
        phi.source().clone(),
        n,
        transitions,
        a.initials().iter().copied(),
        a.finals().iter().copied(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientSide {
    Left,
    Right,
}

/// Quotient by a recognizable language: `K⁻¹L` replaces the initial states by
/// every state reachable from `I` along a word of `L(k)` (computed by a
/// synchronized-product reachability fixpoint); `LK⁻¹` is symmetric on the
/// final states.
pub fn quotient(a: &Nfa, k: &Nfa, side: QuotientSide) -> Result<Nfa> {
    require_same_alphabet(a, k)?;
    let a = a.remove_epsilon();
    let k = k.remove_epsilon();
    let n2 = k.state_count();
    let pair_nfa = product(&a, &k, ProductMode::Intersect)?;
    match side {
        QuotientSide::Left => {
            // Reachable pairs (q, f) with f final in k mark q as a new initial.
            let reach = pair_nfa.accessible_states();
            let initials: BTreeSet<StateId> = reach
                .iter()
                .filter(|&&pq| k.finals().contains(&(pq % n2)))
                .map(|&pq| pq / n2)
                .collect();
            Nfa::new(
                a.alphabet().clone(),
                a.state_count(),
                a.transitions(),
                initials,
                a.finals().iter().copied(),
            )
        }
        QuotientSide::Right => {
            // q is a new final iff from (q, i_k) some (F_a, F_k) pair is reachable.
            let co = pair_nfa.coaccessible_states();
            let finals: BTreeSet<StateId> = (0..a.state_count())
                .filter(|&q| k.initials().iter().any(|&ik| co.contains(&(q * n2 + ik))))
                .collect();
            Nfa::new(
                a.alphabet().clone(),
                a.state_count(),
                a.transitions(),
                a.initials().iter().copied(),
                finals,
            )
        }
    }
}

/// The one-state universal automaton accepting `A*`.
pub fn universal(alphabet: &crate::alphabet::Alphabet) -> Nfa {
    let transitions: Vec<(StateId, Label, StateId)> =
        alphabet.ids().map(|s| (0, Label::Sym(s), 0)).collect();
    Nfa::new(alphabet.clone(), 1, transitions, [0], [0]).expect("universal automaton")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryClosure {
    Prefixes,
    Suffixes,
    Factors,
    Mirror,
    Subwords,
}

/// The unary closure operations. Prefixes/suffixes/factors go through
/// quotients by `A*`; mirror reverses all transitions and swaps initial and
/// final states; subwords add an ε-copy of every transition (then ε-removal).
pub fn closure_unary(a: &Nfa, kind: UnaryClosure) -> Result<Nfa> {
    match kind {
        UnaryClosure::Prefixes => quotient(a, &universal(a.alphabet()), QuotientSide::Right),
        UnaryClosure::Suffixes => quotient(a, &universal(a.alphabet()), QuotientSide::Left),
        UnaryClosure::Factors => {
            let pref = closure_unary(a, UnaryClosure::Prefixes)?;
            closure_unary(&pref, UnaryClosure::Suffixes)
        }
        UnaryClosure::Mirror => {
            let transitions: Vec<(StateId, Label, StateId)> =
                a.transitions().map(|(p, l, q)| (q, l, p)).collect();
            Nfa::new(
                a.alphabet().clone(),
                a.state_count(),
                transitions,
                a.finals().iter().copied(),
                a.initials().iter().copied(),
            )
        }
        UnaryClosure::Subwords => {
            let transitions: Vec<(StateId, Label, StateId)> = a
                .transitions()
                .flat_map(|(p, l, q)| [(p, l, q), (p, Label::Eps, q)])
                .collect();
            let eps = Nfa::new(
                a.alphabet().clone(),
                a.state_count(),
                transitions,
                a.initials().iter().copied(),
                a.finals().iter().copied(),
            )?;
            Ok(eps.remove_epsilon())
        }
    }
}

/// Shuffle product: pair states, each transition advances exactly one
/// component; finals are `F × F'`.
pub fn shuffle(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    require_same_alphabet(a, b)?;
    let a = a.remove_epsilon();
    let b = b.remove_epsilon();
    let n2 = b.state_count();
    let pair = |p: StateId, q: StateId| p * n2 + q;
    let mut transitions = Vec::new();
    for (p, l, p2) in a.transitions() {
        for q in 0..n2 {
            transitions.push((pair(p, q), l, pair(p2, q)));
        }
    }
    for (q, l, q2) in b.transitions() {
        for p in 0..a.state_count() {
            transitions.push((pair(p, q), l, pair(p, q2)));
        }
    }
    let initials: Vec<StateId> = a
        .initials()
        .iter()
        .flat_map(|&p| b.initials().iter().map(move |&q| pair(p, q)))
        .collect();
    let finals: Vec<StateId> = a
        .finals()
        .iter()
        .flat_map(|&p| b.finals().iter().map(move |&q| pair(p, q)))
        .collect();
    Nfa::new(
        a.alphabet().clone(),
        a.state_count() * n2,
        transitions,
        initials,
        finals,
    )
}

/// Outcome of a decision procedure, with a witness word when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub counterexample: Option<Word>,
}

/// Decides `L(a) ⊆ L(b)` by testing emptiness of `L(a) ∖ L(b)`; on failure
/// the counterexample is a shortest word of the difference.
pub fn decide_inclusion(a: &Nfa, b: &Nfa, caps: &Caps) -> Result<Decision> {
    require_same_alphabet(a, b)?;
    let det_b = determinize(b, false, caps)?.dfa;
    let comp_b = complement(&det_b)?;
    let diff = product(a, &comp_b.to_nfa(), ProductMode::Intersect)?;
    let (empty, word) = diff.is_empty_language();
    Ok(Decision {
        holds: empty,
        counterexample: word,
    })
}

/// Decides `L(a) = L(b)` by both inclusions; the counterexample comes from
/// the failing side.
pub fn decide_equivalence(a: &Nfa, b: &Nfa, caps: &Caps) -> Result<Decision> {
    let fwd = decide_inclusion(a, b, caps)?;
    if !fwd.holds {
        return Ok(fwd);
    }
    decide_inclusion(b, a, caps)
}
