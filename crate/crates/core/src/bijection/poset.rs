use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::matching::Matching;

use super::BijectionError;

/// Finite strict partial order on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Validates irreflexivity and transitivity (antisymmetry follows).
    pub fn from_matrix(less: Vec<Vec<bool>>) -> Result<Self, BijectionError> {
        let n = less.len();
        if less.iter().any(|row| row.len() != n) {
            return Err(BijectionError::InvalidPoset("matrix is not square".into()));
        }
        for i in 0..n {
            if less[i][i] {
                return Err(BijectionError::InvalidPoset(format!(
                    "{} < {}",
                    i + 1,
                    i + 1
                )));
            }
            for j in 0..n {
                for k in 0..n {
                    if less[i][j] && less[j][k] && !less[i][k] {
                        return Err(BijectionError::InvalidPoset(format!(
                            "{} < {} < {} but not {} < {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            i + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(Poset { less })
    }

    /// Transitive closure of the given `(lower, upper)` pairs.
    pub fn from_relations(size: usize, pairs: &[(usize, usize)]) -> Result<Self, BijectionError> {
        let mut less = vec![vec![false; size]; size];
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(BijectionError::InvalidPoset(format!(
                    "element out of range in ({a},{b})"
                )));
            }
            less[a][b] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if less[i][k] {
                    for j in 0..size {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        Poset::from_matrix(less)
    }

    pub fn chain(n: usize) -> Self {
        Poset {
            less: (0..n).map(|i| (0..n).map(|j| i < j).collect()).collect(),
        }
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            less: vec![vec![false; n]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.less.len()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less[i][j] || self.less[j][i]
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.less
    }

    /// All pairs `(i, j)` with `i < j` in the order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.less[i][j])
            .collect()
    }

    /// Pairs `i < j` with nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        self.relations()
            .into_iter()
            .filter(|&(i, j)| !(0..n).any(|k| self.less[i][k] && self.less[k][j]))
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (i + 1..n).all(|j| self.comparable(i, j)))
    }

    pub fn is_antichain(&self) -> bool {
        self.less.iter().flatten().all(|b| !b)
    }

    /// The subposet induced on `elements`, relabelled in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        Poset {
            less: elements
                .iter()
                .map(|&i| elements.iter().map(|&j| self.less[i][j]).collect())
                .collect(),
        }
    }

    fn code_under(&self, perm: &[usize]) -> Vec<bool> {
        perm.iter()
            .flat_map(|&i| perm.iter().map(move |&j| self.less[i][j]))
            .collect()
    }

    /// Isomorphism-invariant code: the smallest relation matrix over all
    /// relabellings. Brute force, so only for small posets.
    pub fn canonical_code(&self) -> Vec<bool> {
        let mut perm: Vec<usize> = (0..self.size()).collect();
        let mut best = self.code_under(&perm);
        while next_permutation(&mut perm) {
            let code = self.code_under(&perm);
            if code < best {
                best = code;
            }
        }
        best
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.size() == other.size()
            && self.relations().len() == other.relations().len()
            && self.canonical_code() == other.canonical_code()
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            size: self.size(),
            covers: self
                .cover_relations()
                .iter()
                .map(|&(i, j)| [i + 1, j + 1])
                .collect(),
            matrix: self
                .less
                .iter()
                .map(|row| row.iter().map(|&b| b as u8).collect())
                .collect(),
        }
    }
}

/// Serialized form with 1-based element labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetJson {
    pub size: usize,
    pub covers: Vec<[usize; 2]>,
    pub matrix: Vec<Vec<u8>>,
}

impl fmt::Display for Poset {
    /// Cover relations, e.g. `1<2 1<3 2<4`, or `antichain(n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers = self.cover_relations();
        if covers.is_empty() {
            return write!(f, "antichain({})", self.size());
        }
        let parts: Vec<String> = covers
            .iter()
            .map(|(i, j)| format!("{}<{}", i + 1, j + 1))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Arc `i` lies below arc `j` iff arc `i` closes before arc `j` opens.
pub fn omega(m: &Matching) -> Poset {
    let arcs = m.arcs();
    Poset {
        less: arcs
            .iter()
            .map(|a| arcs.iter().map(|b| a.closer < b.opener).collect())
            .collect(),
    }
}

/// The three four-element posets used as forbidden subposets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForbiddenPoset {
    /// Two disjoint 2-chains.
    TwoPlusTwo,
    /// A 3-chain and an isolated element.
    ThreePlusOne,
    /// `a < c`, `a < d`, `b < d`.
    N,
}

impl ForbiddenPoset {
    pub const ALL: [ForbiddenPoset; 3] = [
        ForbiddenPoset::TwoPlusTwo,
        ForbiddenPoset::ThreePlusOne,
        ForbiddenPoset::N,
    ];

    pub fn poset(self) -> Poset {
        let pairs: &[(usize, usize)] = match self {
            ForbiddenPoset::TwoPlusTwo => &[(0, 1), (2, 3)],
            ForbiddenPoset::ThreePlusOne => &[(0, 1), (1, 2)],
            ForbiddenPoset::N => &[(0, 2), (0, 3), (1, 3)],
        };
        Poset::from_relations(4, pairs).expect("valid forbidden poset")
    }
}

impl fmt::Display for ForbiddenPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenPoset::TwoPlusTwo => "2+2",
            ForbiddenPoset::ThreePlusOne => "3+1",
            ForbiddenPoset::N => "N",
        })
    }
}

impl FromStr for ForbiddenPoset {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        match t {
            "2+2" => Ok(ForbiddenPoset::TwoPlusTwo),
            "3+1" => Ok(ForbiddenPoset::ThreePlusOne),
            "N" | "n" => Ok(ForbiddenPoset::N),
            _ => Err(BijectionError::UnknownForbiddenPoset(s.to_string())),
        }
    }
}

/// Whether some four elements of `p` induce exactly `q`.
pub fn poset_contains(p: &Poset, q: ForbiddenPoset) -> bool {
    let target = q.poset().canonical_code();
    let n = p.size();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if p.induced(&[a, b, c, d]).canonical_code() == target {
                        return true;
                    }
                }
            }
        }
    }
    false
}
