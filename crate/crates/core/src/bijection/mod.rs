//! Constructive bijections: gluing and splitting of `P2`-avoiders, the
//! binary-string encoding of `R4`-avoiders, and the map from arcs to posets.

mod glue;
mod poset;
mod strings;

pub use glue::{glue, split};
pub use poset::{omega, poset_contains, ForbiddenPoset, Poset, PosetJson};
pub use strings::{matching_to_string, string_to_matching, AlphaBetaString, Letter};

use thiserror::Error;

use crate::matching::{Arc, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    /// The named operand is not a `P2`-avoiding Stoimenow matching.
    #[error("{0} matching is not a P2-avoiding Stoimenow matching")]
    NotP2Avoiding(&'static str),
    #[error("matching is not an R4-avoiding Stoimenow matching")]
    NotR4Avoiding,
    #[error("operation needs a nonempty matching")]
    EmptyMatching,
    #[error("unknown forbidden poset {0:?} (expected 2+2, 3+1 or N)")]
    UnknownForbiddenPoset(String),
    #[error("bad letter {0:?} in a/b string")]
    BadLetter(char),
    #[error("not a strict partial order: {0}")]
    InvalidPoset(String),
}

/// Turns a left-to-right word of arc labels (each label twice) into a
/// matching.
fn from_label_word(word: &[usize]) -> Matching {
    let mut first: Vec<Option<u32>> = vec![None; word.len() / 2 + 1];
    let mut pairs = Vec::with_capacity(word.len() / 2);
    for (i, &label) in word.iter().enumerate() {
        if label >= first.len() {
            first.resize(label + 1, None);
        }
        let pos = i as u32 + 1;
        match first[label] {
            None => first[label] = Some(pos),
            Some(o) => pairs.push((o, pos)),
        }
    }
    Matching::from_pairs(pairs).expect("every label appears twice")
}

/// Inverse of [`from_label_word`], labelling arcs by opener rank.
fn label_word(m: &Matching) -> Vec<usize> {
    let mut word = vec![0usize; 2 * m.size()];
    for (i, Arc { opener, closer }) in m.arcs().iter().enumerate() {
        word[*opener as usize - 1] = i;
        word[*closer as usize - 1] = i;
    }
    word
}
