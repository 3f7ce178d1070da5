use std::fmt;
use std::str::FromStr;

use crate::matching::Matching;
use crate::pattern::{contains, named};

use super::{from_label_word, BijectionError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Alpha,
    Beta,
}

/// Word over `{α, β}`, written with ASCII `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AlphaBetaString {
    pub letters: Vec<Letter>,
}

impl AlphaBetaString {
    pub fn new(letters: Vec<Letter>) -> Self {
        AlphaBetaString { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// All `2^len` strings, in lexicographic order with `a < b`.
    pub fn all(len: usize) -> impl Iterator<Item = AlphaBetaString> {
        (0u64..1 << len).map(move |bits| {
            AlphaBetaString::new(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 1 {
                            Letter::Beta
                        } else {
                            Letter::Alpha
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for AlphaBetaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::Alpha => "a",
                Letter::Beta => "b",
            })?;
        }
        Ok(())
    }
}

impl FromStr for AlphaBetaString {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                'a' | 'α' => Ok(Letter::Alpha),
                'b' | 'β' => Ok(Letter::Beta),
                other => Err(BijectionError::BadLetter(other)),
            })
            .collect::<Result<_, _>>()
            .map(AlphaBetaString::new)
    }
}

/// Builds the `R4`-avoider with `|w| + 1` arcs encoded by `w`.
///
/// The first arc closes right after a run of `1 + #α` openers. Reading `w`
/// left to right after that closer, each `α` closes the next arc of the run
/// and each `β` closes the most recent short arc (if any) and opens a new one,
/// which is closed at the end.
pub fn string_to_matching(w: &AlphaBetaString) -> Matching {
    let alphas = w.letters.iter().filter(|l| **l == Letter::Alpha).count();
    let run = alphas + 1;
    let mut word: Vec<usize> = (0..run).collect();
    word.push(0);
    let mut next_crossing = 1;
    let mut next_label = run;
    let mut current: Option<usize> = None;
    for l in &w.letters {
        match l {
            Letter::Alpha => {
                word.push(next_crossing);
                next_crossing += 1;
            }
            Letter::Beta => {
                if let Some(c) = current {
                    word.push(c);
                }
                word.push(next_label);
                current = Some(next_label);
                next_label += 1;
            }
        }
    }
    if let Some(c) = current {
        word.push(c);
    }
    from_label_word(&word)
}

/// Inverse of [`string_to_matching`].
pub fn matching_to_string(m: &Matching) -> Result<AlphaBetaString, BijectionError> {
    if m.is_empty() {
        return Err(BijectionError::EmptyMatching);
    }
    if !m.is_stoimenow() || contains(m, &named("R4")) {
        return Err(BijectionError::NotR4Avoiding);
    }
    let partner = m.partners();
    let b1 = partner[0];
    let letters = (b1 + 1..=2 * m.size() as u32)
        .filter_map(|pos| {
            let p = partner[pos as usize - 1];
            if p > pos {
                Some(Letter::Beta)
            } else if p < b1 {
                Some(Letter::Alpha)
            } else {
                None
            }
        })
        .collect();
    Ok(AlphaBetaString::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    use crate::enumerate::enumerate_stoimenow;
    use crate::pattern::PatternSet;

    fn w(s: &str) -> AlphaBetaString {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        let left = string_to_matching(&w("bbabaab"));
        assert_eq!(
            left.to_string(),
            "(1,5)(2,9)(3,12)(4,13)(6,7)(8,10)(11,14)(15,16)"
        );
        let right = string_to_matching(&w("aabab"));
        assert_eq!(right.to_string(), "(1,5)(2,6)(3,7)(4,9)(8,10)(11,12)");
        assert_eq!(matching_to_string(&left).unwrap().to_string(), "bbabaab");
        assert_eq!(matching_to_string(&right).unwrap(), w("ααβαβ"));
    }

    #[test]
    fn small_cases() {
        assert_eq!(string_to_matching(&w("")).to_string(), "(1,2)");
        assert!(matching_to_string(&"(1,2)".parse().unwrap())
            .unwrap()
            .is_empty());
        for n in 1..6 {
            let s = matching_to_string(&Matching::crossing(n)).unwrap();
            assert_eq!(s.to_string(), "a".repeat(n - 1));
        }
        assert_eq!(
            matching_to_string(&Matching::empty()),
            Err(BijectionError::EmptyMatching)
        );
        assert_eq!(
            matching_to_string(named("R4").template()),
            Err(BijectionError::NotR4Avoiding)
        );
        assert_eq!(
            "abx".parse::<AlphaBetaString>(),
            Err(BijectionError::BadLetter('x'))
        );
    }

    #[test]
    fn bijection_onto_r4_avoiders() {
        let r4 = PatternSet::of(&["R4"]);
        for n in 1..=7 {
            let image: BTreeSet<String> = AlphaBetaString::all(n - 1)
                .map(|s| {
                    let m = string_to_matching(&s);
                    assert_eq!(matching_to_string(&m).unwrap(), s);
                    m.to_string()
                })
                .collect();
            assert_eq!(image.len(), 1 << (n - 1));
            let target: BTreeSet<String> = enumerate_stoimenow(n)
                .unwrap()
                .filter(|m| r4.avoided_by(m))
                .map(|m| m.to_string())
                .collect();
            assert_eq!(image, target, "n = {n}");
        }
    }
}
