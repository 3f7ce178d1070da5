//! Patterns, containment and the pattern atlas.
//!
//! A matching `M` contains a pattern `P` with `k` arcs when some `k` arcs of
//! `M`, relabelled by endpoint rank, are exactly `P`.
//!
//! | name | pattern |
//! |------|---------|
//! | `P1` | `(1,3)(2,7)(4,5)(6,8)` |
//! | `P2` | `(1,3)(2,5)(4,7)(6,8)` |
//! | `P3` | `(1,2)(3,5)(4,6)(7,8)` |
//! | `P4` | `(1,2)(3,5)(4,7)(6,8)` |
//! | `P5` | `(1,3)(2,5)(4,6)(7,8)` |
//! | `R3` | `(1,3)(2,5)(4,6)` (written P^3_3 in the literature) |
//! | `R4` | `(1,2)(3,5)(4,6)` (P^3_4) |
//! | `R5` | `(1,3)(2,4)(5,6)` (P^3_5) |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::matching::{Arc, Matching, MatchingError};

pub use crate::matching::standardize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name {0:?}")]
    UnknownPattern(String),
    #[error(transparent)]
    BadLiteral(#[from] MatchingError),
}

/// A small matching used as an order-isomorphism template.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    template: Matching,
    name: Option<String>,
}

impl Pattern {
    /// Wraps an arbitrary matching; the registry name is attached when the
    /// template coincides with an atlas entry.
    pub fn new(template: Matching) -> Self {
        let name = registry()
            .iter()
            .find(|(_, p)| p.template == template)
            .map(|(k, _)| k.to_string());
        Pattern { template, name }
    }

    pub fn template(&self) -> &Matching {
        &self.template
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Size in arcs.
    pub fn size(&self) -> usize {
        self.template.size()
    }

    pub fn reversed(&self) -> Pattern {
        Pattern::new(self.template.reverse())
    }

    /// Registry name if known, otherwise the arc-list literal.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.template.to_string(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    /// A registry name (`P1`…`P5`, `R3`…`R5`) or an arc-list literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with('(') {
            let template: Matching = t.parse()?;
            return Ok(Pattern::new(template));
        }
        registry()
            .get(t)
            .cloned()
            .ok_or_else(|| PatternError::UnknownPattern(t.to_string()))
    }
}

fn atlas_entry(name: &'static str, pairs: &[(u32, u32)]) -> (&'static str, Pattern) {
    let template = Matching::from_pairs(pairs.iter().copied()).expect("atlas entry is a matching");
    (
        name,
        Pattern {
            template,
            name: Some(name.to_string()),
        },
    )
}

/// The eight named patterns.
pub fn registry() -> &'static BTreeMap<&'static str, Pattern> {
    static REGISTRY: OnceLock<BTreeMap<&'static str, Pattern>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        [
            atlas_entry("P1", &[(1, 3), (2, 7), (4, 5), (6, 8)]),
            atlas_entry("P2", &[(1, 3), (2, 5), (4, 7), (6, 8)]),
            atlas_entry("P3", &[(1, 2), (3, 5), (4, 6), (7, 8)]),
            atlas_entry("P4", &[(1, 2), (3, 5), (4, 7), (6, 8)]),
            atlas_entry("P5", &[(1, 3), (2, 5), (4, 6), (7, 8)]),
            atlas_entry("R3", &[(1, 3), (2, 5), (4, 6)]),
            atlas_entry("R4", &[(1, 2), (3, 5), (4, 6)]),
            atlas_entry("R5", &[(1, 3), (2, 4), (5, 6)]),
        ]
        .into_iter()
        .collect()
    })
}

/// Looks up an atlas pattern by name. Panics on unknown names; intended for
/// the fixed names above.
pub fn named(name: &str) -> Pattern {
    registry()
        .get(name)
        .cloned()
        .unwrap_or_else(|| panic!("no pattern named {name}"))
}

/// Pairwise endpoint comparisons that fix the order type of an arc sequence
/// sorted by opener. For `i < j`: `(opener_j < closer_i, closer_j < closer_i)`.
fn relation(earlier: &Arc, later: &Arc) -> (bool, bool) {
    (later.opener < earlier.closer, later.closer < earlier.closer)
}

/// `true` iff some arc subset of `m` standardizes to `p`.
///
/// Arcs are chosen in opener order; a partial choice is abandoned as soon as
/// one of its endpoint comparisons disagrees with the matching prefix of the
/// pattern.
pub fn contains(m: &Matching, p: &Pattern) -> bool {
    let pat = p.template.arcs();
    let k = pat.len();
    if k == 0 {
        return true;
    }
    let arcs = m.arcs();
    if k > arcs.len() {
        return false;
    }
    let mut chosen: Vec<Arc> = Vec::with_capacity(k);
    search(arcs, pat, 0, &mut chosen)
}

fn search(arcs: &[Arc], pat: &[Arc], start: usize, chosen: &mut Vec<Arc>) -> bool {
    let j = chosen.len();
    if j == pat.len() {
        return true;
    }
    let remaining = pat.len() - j;
    for idx in start..=arcs.len() - remaining {
        let cand = arcs[idx];
        let fits = chosen
            .iter()
            .zip(pat)
            .all(|(prev, pprev)| relation(prev, &cand) == relation(pprev, &pat[j]));
        if fits {
            chosen.push(cand);
            if search(arcs, pat, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// A set of patterns avoided simultaneously.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PatternSet {
    members: Vec<Pattern>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Pattern>>(patterns: I) -> Self {
        let mut members: Vec<Pattern> = Vec::new();
        for p in patterns {
            if !members.iter().any(|q| q.template == p.template) {
                members.push(p);
            }
        }
        members.sort_by_key(sort_key);
        PatternSet { members }
    }

    /// Builds a set from registry names. Panics on unknown names.
    pub fn of(names: &[&str]) -> Self {
        PatternSet::new(names.iter().map(|n| named(n)))
    }

    pub fn members(&self) -> &[Pattern] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Sorted labels joined by commas, e.g. `P1,P2`.
    pub fn canonical_name(&self) -> String {
        self.members
            .iter()
            .map(Pattern::label)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn reversed(&self) -> PatternSet {
        PatternSet::new(self.members.iter().map(Pattern::reversed))
    }

    /// Avoids every member; vacuously true for the empty set.
    pub fn avoided_by(&self, m: &Matching) -> bool {
        avoids_all(m, self)
    }
}

fn sort_key(p: &Pattern) -> (u8, String) {
    match &p.name {
        Some(n) => (0, n.clone()),
        None => (1, p.template.to_string()),
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_name())
    }
}

impl FromStr for PatternSet {
    type Err = PatternError;

    /// Comma-separated registry names or arc-list literals, e.g.
    /// `P1,P3` or `P2,(1,3)(2,5)(4,6)`. Commas inside parentheses belong to
    /// the literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        for ch in s.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if ch == ',' && depth == 0 {
                tokens.push(std::mem::take(&mut current));
            } else {
                current.push(ch);
            }
        }
        tokens.push(current);
        let patterns = tokens
            .iter()
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Pattern>, _>>()?;
        Ok(PatternSet::new(patterns))
    }
}

/// `true` iff `m` contains no member of `set`.
pub fn avoids_all(m: &Matching, set: &PatternSet) -> bool {
    set.members.iter().all(|p| !contains(m, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_stoimenow;
    use proptest::prelude::*;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    /// Unpruned oracle: every k-subset of arcs, standardized and compared.
    fn contains_brute(mm: &Matching, p: &Pattern) -> bool {
        fn subsets(arcs: &[Arc], k: usize, acc: &mut Vec<Arc>, out: &mut Vec<Vec<Arc>>) {
            if acc.len() == k {
                out.push(acc.clone());
                return;
            }
            for (i, a) in arcs.iter().enumerate() {
                acc.push(*a);
                subsets(&arcs[i + 1..], k, acc, out);
                acc.pop();
            }
        }
        let mut all = Vec::new();
        subsets(mm.arcs(), p.size(), &mut Vec::new(), &mut all);
        all.iter().any(|s| standardize(s) == *p.template())
    }

    #[test]
    fn registry_has_eight_entries() {
        let r = registry();
        assert_eq!(r.len(), 8);
        assert_eq!(r["P3"].template().to_string(), "(1,2)(3,5)(4,6)(7,8)");
        assert_eq!(r["P1"].template().to_string(), "(1,3)(2,7)(4,5)(6,8)");
        for p in r.values() {
            assert_eq!(p.template().clone(), standardize(p.template().arcs()));
        }
    }

    #[test]
    fn registry_reversal_pairs() {
        let r = registry();
        assert_eq!(r["R4"].reversed(), r["R5"]);
        assert_eq!(r["P4"].reversed(), r["P5"]);
        assert_eq!(r["P4"].reversed().name(), Some("P5"));
    }

    #[test]
    fn standardize_examples() {
        let a = |o, c| Arc {
            opener: o,
            closer: c,
        };
        assert_eq!(standardize(&[a(2, 7), a(4, 5)]), m("(1,4)(2,3)"));
        assert_eq!(standardize(&[a(1, 2)]), m("(1,2)"));
        assert_eq!(
            standardize(&[a(3, 8), a(6, 9), a(7, 10)]),
            m("(1,4)(2,5)(3,6)")
        );
    }

    #[test]
    fn contains_examples() {
        let p3 = named("P3");
        assert!(contains(&m("(1,2)(3,5)(4,6)(7,8)"), &p3));
        assert!(!contains(&Matching::crossing(5), &p3));
        let empty = Pattern::new(Matching::empty());
        assert!(contains(&Matching::crossing(3), &empty));
        assert!(contains(&Matching::empty(), &empty));
    }

    #[test]
    fn avoids_all_examples() {
        let any = m("(1,3)(2,4)");
        assert!(avoids_all(&any, &PatternSet::default()));
        let all5 = PatternSet::of(&["P1", "P2", "P3", "P4", "P5"]);
        assert!(avoids_all(&Matching::crossing(4), &all5));
        let p2 = named("P2").template().clone();
        assert!(!avoids_all(&p2, &PatternSet::of(&["P2", "P4"])));
    }

    #[test]
    fn pattern_set_grammar() {
        let s: PatternSet = "P3,P1".parse().unwrap();
        assert_eq!(s.canonical_name(), "P1,P3");
        let s: PatternSet = "P2,(1,3)(2,5)(4,6)".parse().unwrap();
        // the literal is R3
        assert_eq!(s.canonical_name(), "P2,R3");
        let s: PatternSet = "P1,P1,(1,3)(2,7)(4,5)(6,8)".parse().unwrap();
        assert_eq!(s.len(), 1);
        let s: PatternSet = "(1,4)(2,3),P5".parse().unwrap();
        assert_eq!(s.canonical_name(), "P5,(1,4)(2,3)");
        assert!("P9".parse::<PatternSet>().is_err());
        assert!("P1,(1,3)(3,4)".parse::<PatternSet>().is_err());
        assert!("".parse::<PatternSet>().unwrap().is_empty());
    }

    #[test]
    fn contains_agrees_with_brute_force() {
        for n in 0..=7 {
            for mm in enumerate_stoimenow(n).unwrap() {
                for p in registry().values() {
                    assert_eq!(contains(&mm, p), contains_brute(&mm, p), "{mm} {p}");
                }
            }
        }
    }

    #[test]
    fn single_catalan_patterns() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 0..=8 {
            let all: Vec<Matching> = enumerate_stoimenow(n).unwrap().collect();
            for name in ["P1", "P2", "P3", "P4", "P5"] {
                let p = named(name);
                let c = all.iter().filter(|mm| !contains(mm, &p)).count() as u64;
                assert_eq!(c, catalan[n], "{name} n={n}");
            }
        }
    }

    fn small_stoimenow() -> impl Strategy<Value = Matching> {
        (0usize..=7).prop_flat_map(|n| {
            let all: Vec<Matching> = enumerate_stoimenow(n).unwrap().collect();
            proptest::sample::select(all)
        })
    }

    fn any_pattern() -> impl Strategy<Value = Pattern> {
        proptest::sample::select(registry().values().cloned().collect::<Vec<_>>())
    }

    proptest! {
        #[test]
        fn containment_respects_reversal(mm in small_stoimenow(), p in any_pattern()) {
            prop_assert_eq!(contains(&mm, &p), contains(&mm.reverse(), &p.reversed()));
        }

        #[test]
        fn containment_is_monotone(mm in small_stoimenow(), p in any_pattern(), mask in any::<u8>()) {
            let sub: Vec<Arc> = mm.arcs().iter().enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, a)| *a)
                .collect();
            let sub = standardize(&sub);
            if contains(&sub, &p) {
                prop_assert!(contains(&mm, &p));
            }
        }
    }
}
