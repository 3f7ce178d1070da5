//! Perfect matchings on `{1, …, 2n}`, the Stoimenow condition, and the
//! structural operations built on top of them (reversal, irreducible blocks,
//! reduction arc).
//!
//! Positions are 1-based everywhere. A [`Matching`] is always canonical: its
//! arcs are sorted by opener and the endpoints cover `{1, …, 2n}` exactly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors raised while building or parsing matchings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),
    #[error("inverted arc ({opener},{closer}): opener must be smaller than closer")]
    InvertedArc { opener: u32, closer: u32 },
    #[error("no arc closes at position {0}")]
    NoSuchArc(u32),
    #[error("empty matching has no reduction arc")]
    EmptyMatching,
    #[error("cannot parse arc list {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An arc `[opener, closer]` with `opener < closer`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub opener: u32,
    pub closer: u32,
}

impl Arc {
    pub fn new(opener: u32, closer: u32) -> Result<Self, MatchingError> {
        if opener >= closer {
            return Err(MatchingError::InvertedArc { opener, closer });
        }
        Ok(Arc { opener, closer })
    }

    /// `true` if `other` lies strictly inside `self`.
    pub fn nests(&self, other: &Arc) -> bool {
        self.opener < other.opener && other.closer < self.closer
    }

    pub fn contains_position(&self, pos: u32) -> bool {
        self.opener < pos && pos < self.closer
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.opener, self.closer)
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.opener, self.closer].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [o, c] = <[u32; 2]>::deserialize(deserializer)?;
        Arc::new(o, c).map_err(serde::de::Error::custom)
    }
}

/// A perfect matching of `{1, …, 2n}` stored as arcs sorted by opener.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Matching {
    arcs: Vec<Arc>,
}

impl Matching {
    /// The matching with no arcs.
    pub fn empty() -> Self {
        Matching { arcs: Vec::new() }
    }

    /// Validates `pairs` as a perfect matching of `{1..2n}` and returns it in
    /// canonical (opener-sorted) form.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut arcs = Vec::new();
        for (o, c) in pairs {
            arcs.push(Arc::new(o, c)?);
        }
        let size = 2 * arcs.len();
        let mut seen = vec![false; size + 1];
        for arc in &arcs {
            for p in [arc.opener, arc.closer] {
                let p = p as usize;
                if p == 0 || p > size {
                    return Err(MatchingError::NotPerfectMatching(format!(
                        "endpoint {p} outside 1..={size}"
                    )));
                }
                if seen[p] {
                    return Err(MatchingError::NotPerfectMatching(format!(
                        "endpoint {p} used twice"
                    )));
                }
                seen[p] = true;
            }
        }
        arcs.sort();
        Ok(Matching { arcs })
    }

    /// Builds a matching from a partner table (`partner[i]` is the 1-based
    /// partner of position `i + 1`).
    pub fn from_partners(partner: &[u32]) -> Result<Self, MatchingError> {
        let mut pairs = Vec::with_capacity(partner.len() / 2);
        for (i, &p) in partner.iter().enumerate() {
            let pos = i as u32 + 1;
            if p as usize > partner.len() || p == 0 || partner[p as usize - 1] != pos {
                return Err(MatchingError::NotPerfectMatching(format!(
                    "partner table is not an involution at position {pos}"
                )));
            }
            if pos < p {
                pairs.push((pos, p));
            }
        }
        Matching::from_pairs(pairs)
    }

    /// Trusted constructor: `arcs` must already be sorted and valid.
    pub(crate) fn from_sorted_arcs_unchecked(arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0].opener < w[1].opener));
        Matching { arcs }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Number of arcs.
    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// `partner[i]` is the 1-based partner of position `i + 1`.
    pub fn partners(&self) -> Vec<u32> {
        let mut partner = vec![0u32; 2 * self.arcs.len()];
        for a in &self.arcs {
            partner[a.opener as usize - 1] = a.closer;
            partner[a.closer as usize - 1] = a.opener;
        }
        partner
    }

    /// No Type 1 (nested pair with adjacent openers) and no Type 2 (nested
    /// pair with adjacent closers) configuration.
    pub fn is_stoimenow(&self) -> bool {
        let partner = self.partners();
        partner.windows(2).enumerate().all(|(i, w)| {
            let (pos, next) = (i as u32 + 1, i as u32 + 2);
            let both_openers = w[0] > pos && w[1] > next;
            let both_closers = w[0] < pos && w[1] < next;
            // Type 1: [i, l], [i+1, k] with k < l.
            // Type 2: [l, j], [k, j+1] with k < l.
            !((both_openers || both_closers) && w[0] > w[1])
        })
    }

    /// `a_1 < … < a_k < b_1 < … < b_k`. The empty matching qualifies.
    pub fn is_crossing(&self) -> bool {
        let k = self.arcs.len() as u32;
        self.arcs
            .iter()
            .enumerate()
            .all(|(i, a)| a.opener == i as u32 + 1 && a.closer == k + i as u32 + 1)
    }

    /// `a_1 < b_1 < a_2 < b_2 < …`. The empty matching qualifies.
    pub fn is_noncrossing(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(i, a)| a.opener == 2 * i as u32 + 1 && a.closer == 2 * i as u32 + 2)
    }

    /// The `k`-crossing `{[1,k+1], [2,k+2], …, [k,2k]}`.
    pub fn crossing(k: usize) -> Self {
        let k = k as u32;
        Matching {
            arcs: (1..=k)
                .map(|i| Arc {
                    opener: i,
                    closer: i + k,
                })
                .collect(),
        }
    }

    /// The `k`-noncrossing `{[1,2], [3,4], …, [2k-1,2k]}`.
    pub fn noncrossing(k: usize) -> Self {
        let k = k as u32;
        Matching {
            arcs: (0..k)
                .map(|i| Arc {
                    opener: 2 * i + 1,
                    closer: 2 * i + 2,
                })
                .collect(),
        }
    }

    /// Mirror image: position `i` maps to `2n + 1 - i`.
    pub fn reverse(&self) -> Self {
        let top = 2 * self.arcs.len() as u32 + 1;
        let mut arcs: Vec<Arc> = self
            .arcs
            .iter()
            .map(|a| Arc {
                opener: top - a.closer,
                closer: top - a.opener,
            })
            .collect();
        arcs.sort();
        Matching { arcs }
    }

    /// Adds `offset` to every endpoint.
    pub fn shifted(&self, offset: u32) -> Vec<Arc> {
        self.arcs
            .iter()
            .map(|a| Arc {
                opener: a.opener + offset,
                closer: a.closer + offset,
            })
            .collect()
    }

    /// Juxtaposition: `other` is placed to the right of `self`.
    pub fn concat(&self, other: &Matching) -> Matching {
        let mut arcs = self.arcs.clone();
        arcs.extend(other.shifted(2 * self.arcs.len() as u32));
        Matching { arcs }
    }

    /// Splits at every proper prefix with as many openers as closers.
    pub fn irreducible_blocks(&self) -> BlockDecomposition {
        let partner = self.partners();
        let mut blocks = Vec::new();
        let mut depth = 0i32;
        let mut start = 0usize;
        for (i, &p) in partner.iter().enumerate() {
            depth += if p as usize > i + 1 { 1 } else { -1 };
            if depth == 0 {
                let offset = start as u32;
                let arcs: Vec<Arc> = self
                    .arcs
                    .iter()
                    .filter(|a| (a.opener as usize) > start && (a.closer as usize) <= i + 1)
                    .map(|a| Arc {
                        opener: a.opener - offset,
                        closer: a.closer - offset,
                    })
                    .collect();
                blocks.push(Block {
                    matching: Matching { arcs },
                    offset,
                });
                start = i + 1;
            }
        }
        BlockDecomposition { blocks }
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible_blocks().blocks.len() <= 1
    }

    /// The arc whose closer immediately follows the last opener.
    pub fn reduction_arc(&self) -> Result<Arc, MatchingError> {
        let last_opener = self.arcs.last().ok_or(MatchingError::EmptyMatching)?.opener;
        let target = last_opener + 1;
        self.arcs
            .iter()
            .copied()
            .find(|a| a.closer == target)
            .ok_or(MatchingError::NoSuchArc(target))
    }

    /// Removes one arc and relabels the remaining endpoints to `{1..2n-2}`.
    pub fn remove_arc(&self, arc: Arc) -> Matching {
        let squeeze = |p: u32| p - (p > arc.opener) as u32 - (p > arc.closer) as u32;
        let arcs = self
            .arcs
            .iter()
            .filter(|a| **a != arc)
            .map(|a| Arc {
                opener: squeeze(a.opener),
                closer: squeeze(a.closer),
            })
            .collect();
        Matching { arcs }
    }
}

/// Relabels the endpoints of `arcs` by rank, producing their order type.
/// Endpoints must be pairwise distinct.
pub fn standardize(arcs: &[Arc]) -> Matching {
    let mut ends: Vec<u32> = arcs.iter().flat_map(|a| [a.opener, a.closer]).collect();
    ends.sort_unstable();
    let rank = |p: u32| ends.binary_search(&p).expect("endpoint present") as u32 + 1;
    let mut out: Vec<Arc> = arcs
        .iter()
        .map(|a| Arc {
            opener: rank(a.opener),
            closer: rank(a.closer),
        })
        .collect();
    out.sort();
    Matching { arcs: out }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.arcs {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Matching {
    type Err = MatchingError;

    /// Parses the `(o1,c1)(o2,c2)…` arc-list format. The empty string and
    /// `∅` denote the empty matching.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| MatchingError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() || t == "∅" {
            return Ok(Matching::empty());
        }
        let mut pairs = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let end = body.find(')').ok_or_else(|| err("missing ')'"))?;
            let (o, c) = body[..end]
                .split_once(',')
                .ok_or_else(|| err("expected ','"))?;
            let o: u32 = o.trim().parse().map_err(|_| err("bad opener"))?;
            let c: u32 = c.trim().parse().map_err(|_| err("bad closer"))?;
            pairs.push((o, c));
            rest = &body[end + 1..];
        }
        Matching::from_pairs(pairs)
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.arcs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let arcs = Vec::<Arc>::deserialize(deserializer)?;
        Matching::from_pairs(arcs.into_iter().map(|a| (a.opener, a.closer)))
            .map_err(serde::de::Error::custom)
    }
}

/// One irreducible factor together with its starting offset in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub matching: Matching,
    pub offset: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// Reassembles the parent matching.
    pub fn concat(&self) -> Matching {
        let mut arcs = Vec::new();
        for b in &self.blocks {
            arcs.extend(b.matching.shifted(b.offset));
        }
        arcs.sort();
        Matching { arcs }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    fn m1() -> Matching {
        m("(1,4)(2,5)(3,8)(6,9)(7,10)")
    }

    fn m2() -> Matching {
        m("(1,2)(3,5)(4,6)(7,8)")
    }

    /// Every perfect matching of {1..2n}, Stoimenow or not.
    pub(crate) fn all_matchings(n: usize) -> Vec<Matching> {
        fn go(free: &mut Vec<u32>, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Matching>) {
            if free.is_empty() {
                out.push(Matching::from_pairs(acc.iter().copied()).unwrap());
                return;
            }
            let first = free.remove(0);
            for i in 0..free.len() {
                let other = free.remove(i);
                acc.push((first, other));
                go(free, acc, out);
                acc.pop();
                free.insert(i, other);
            }
            free.insert(0, first);
        }
        let mut free: Vec<u32> = (1..=2 * n as u32).collect();
        let mut out = Vec::new();
        go(&mut free, &mut Vec::new(), &mut out);
        out
    }

    /// Pairwise scan against the two forbidden configurations.
    fn naive_stoimenow(mm: &Matching) -> bool {
        for x in mm.arcs() {
            for y in mm.arcs() {
                if x == y {
                    continue;
                }
                // Type 1: [i, l], [i+1, k], k < l
                if y.opener == x.opener + 1 && y.closer < x.closer {
                    return false;
                }
                // Type 2: [k, j+1], [l, j], k < l
                if x.closer == y.closer + 1 && x.opener < y.opener {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn make_matching_examples() {
        let a = Matching::from_pairs([(1, 4), (2, 5), (3, 8), (6, 9), (7, 10)]).unwrap();
        assert_eq!(a.size(), 5);
        assert_eq!(Matching::from_pairs([(1, 2)]).unwrap().size(), 1);
        assert!(matches!(
            Matching::from_pairs([(1, 3), (2, 3)]),
            Err(MatchingError::NotPerfectMatching(_))
        ));
        assert!(matches!(
            Matching::from_pairs([(2, 1)]),
            Err(MatchingError::InvertedArc { .. })
        ));
        assert!(matches!(
            Matching::from_pairs([(1, 5), (2, 3)]),
            Err(MatchingError::NotPerfectMatching(_))
        ));
        // canonical order regardless of input order
        let b = Matching::from_pairs([(3, 4), (1, 2)]).unwrap();
        assert_eq!(b.to_string(), "(1,2)(3,4)");
    }

    #[test]
    fn stoimenow_examples() {
        assert!(m2().is_stoimenow());
        assert!(!m("(1,4)(2,3)").is_stoimenow());
        assert!(m("(1,3)(2,4)").is_stoimenow());
        assert!(m1().is_stoimenow());
        assert!(Matching::empty().is_stoimenow());
    }

    #[test]
    fn stoimenow_matches_pairwise_oracle() {
        for n in 0..=4 {
            for mm in all_matchings(n) {
                assert_eq!(mm.is_stoimenow(), naive_stoimenow(&mm), "{mm}");
            }
        }
    }

    #[test]
    fn crossing_examples() {
        assert!(m("(1,3)(2,4)").is_crossing());
        assert!(m("(1,2)(3,4)").is_noncrossing());
        assert!(!m("(1,2)(3,4)").is_crossing());
        assert!(!m1().is_crossing());
        assert!(Matching::empty().is_crossing() && Matching::empty().is_noncrossing());
        assert!(Matching::crossing(5).is_crossing());
        assert!(Matching::noncrossing(4).is_noncrossing());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(
            m("(1,2)(3,5)(4,7)(6,8)").reverse(),
            m("(1,3)(2,5)(4,6)(7,8)")
        );
        assert_eq!(m("(1,2)").reverse(), m("(1,2)"));
        assert_eq!(m1().reverse().reverse(), m1());
    }

    #[test]
    fn block_examples() {
        let d = m2().irreducible_blocks();
        let blocks: Vec<String> = d.blocks.iter().map(|b| b.matching.to_string()).collect();
        assert_eq!(blocks, ["(1,2)", "(1,3)(2,4)", "(1,2)"]);
        assert_eq!(
            d.blocks.iter().map(|b| b.offset).collect::<Vec<_>>(),
            [0, 2, 6]
        );
        assert_eq!(m1().irreducible_blocks().len(), 1);
        assert!(m1().is_irreducible());
        assert_eq!(m("(1,2)").irreducible_blocks().len(), 1);
        assert!(Matching::empty().irreducible_blocks().is_empty());
    }

    #[test]
    fn reduction_arc_examples() {
        assert_eq!(
            m1().reduction_arc().unwrap(),
            Arc {
                opener: 3,
                closer: 8
            }
        );
        assert_eq!(
            m2().reduction_arc().unwrap(),
            Arc {
                opener: 7,
                closer: 8
            }
        );
        assert_eq!(
            m("(1,2)").reduction_arc().unwrap(),
            Arc {
                opener: 1,
                closer: 2
            }
        );
        assert_eq!(
            Matching::empty().reduction_arc(),
            Err(MatchingError::EmptyMatching)
        );
    }

    #[test]
    fn parse_errors() {
        assert!("(1,2".parse::<Matching>().is_err());
        assert!("1,2".parse::<Matching>().is_err());
        assert!("(a,2)".parse::<Matching>().is_err());
        assert_eq!("∅".parse::<Matching>().unwrap(), Matching::empty());
    }

    #[test]
    fn json_shape() {
        let mm = m("(1,3)(2,4)");
        let s = serde_json::to_string(&mm).unwrap();
        assert_eq!(s, "[[1,3],[2,4]]");
        assert_eq!(serde_json::from_str::<Matching>(&s).unwrap(), mm);
        assert!(serde_json::from_str::<Matching>("[[1,3],[3,4]]").is_err());
    }

    fn any_matching() -> impl Strategy<Value = Matching> {
        (0usize..=6).prop_flat_map(|n| {
            Just((1..=2 * n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| {
                    let pairs = v.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1])));
                    Matching::from_pairs(pairs).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn reverse_is_involution(mm in any_matching()) {
            prop_assert_eq!(mm.reverse().reverse(), mm);
        }

        #[test]
        fn reverse_preserves_stoimenow(mm in any_matching()) {
            prop_assert_eq!(mm.is_stoimenow(), mm.reverse().is_stoimenow());
        }

        #[test]
        fn blocks_reassemble(mm in any_matching()) {
            let d = mm.irreducible_blocks();
            prop_assert!(d.blocks.iter().all(|b| b.matching.is_irreducible()));
            prop_assert_eq!(d.concat(), mm);
        }

        #[test]
        fn reduction_arc_follows_last_opener(mm in any_matching()) {
            if let Some(last) = mm.arcs().last() {
                prop_assert_eq!(mm.reduction_arc().unwrap().closer, last.opener + 1);
            }
        }

        #[test]
        fn arc_list_text_round_trips(mm in any_matching()) {
            prop_assert_eq!(mm.to_string().parse::<Matching>().unwrap(), mm);
        }
    }
}
