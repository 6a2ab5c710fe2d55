use std::collections::BTreeSet;

use crate::symbol::{reduce_word, EffectSymbol, OperatorWord, Reduced, ReductionRules};

/// Generates all reduced, pairwise-distinct words of length up to `level`
/// over the symbol alphabet, followed by the (reduced, deduplicated) extras.
///
/// The bulk is ordered graded-lexicographically with the identity first;
/// reduction with right-extension is confluent, so a breadth-first frontier
/// of reduced words covers every reduced form.
pub fn generate_words(
    symbols: &[EffectSymbol],
    level: usize,
    extras: &[OperatorWord],
    rules: &ReductionRules,
) -> Vec<OperatorWord> {
    let mut seen: BTreeSet<OperatorWord> = BTreeSet::new();
    seen.insert(OperatorWord::identity());

    let mut frontier: Vec<OperatorWord> = vec![OperatorWord::identity()];
    for _ in 0..level {
        let mut next = Vec::new();
        for word in &frontier {
            for &s in symbols {
                match reduce_word(&word.append(s), rules) {
                    Reduced::Zero => {}
                    Reduced::Word(r) => {
                        if seen.insert(r.clone()) {
                            next.push(r);
                        }
                    }
                }
            }
        }
        frontier = next;
    }

    let mut out: Vec<OperatorWord> = seen.into_iter().collect();
    for extra in extras {
        if let Reduced::Word(r) = reduce_word(extra, rules) {
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}
