//! Exhaustive generation of Stoimenow matchings with online pruning, avoider
//! counts, and the ascent-sequence count used as an independent oracle.
//!
//! Sites `1..=2n` are filled left to right. Each site is either a new opener
//! or closes one of the currently open arcs. A close of the arc opened at `o`
//! is rejected when
//!
//! * site `o - 1` is an opener that is still open (its arc would end after
//!   the arc of `o`, a Type 1 pair), or
//! * the previous site is a closer whose partner exceeds `o` (Type 2).
//!
//! Both conditions only look at adjacent sites, so every Stoimenow matching
//! is reached along exactly one path and nothing else is emitted.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::matching::{Arc, Matching};
use crate::pattern::{avoids_all, PatternSet};

/// Largest `n` the enumerator accepts.
pub const MAX_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {0} exceeds the enumeration limit of {MAX_N}")]
    TooLarge(usize),
    #[error("prefix depth {depth} exceeds 2n = {sites}")]
    BadDepth { depth: usize, sites: usize },
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

/// A move at one site: open a new arc, or close the arc opened at the
/// given position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Open,
    Close(u32),
}

/// A partially filled configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenState {
    n: usize,
    /// Number of filled sites; the next site is `filled + 1`.
    filled: usize,
    /// 1-based partner of each site; 0 while unset (open or unfilled).
    partner: Vec<u32>,
    /// Openers of the currently open arcs, increasing.
    open: Vec<u32>,
    openers_used: usize,
}

impl GenState {
    pub fn root(n: usize) -> Self {
        GenState {
            n,
            filled: 0,
            partner: vec![0; 2 * n],
            open: Vec::new(),
            openers_used: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Next site to fill (1-based).
    pub fn position(&self) -> usize {
        self.filled + 1
    }

    /// Filled prefix as an opener/closer word, e.g. `OOC`.
    pub fn word(&self) -> String {
        (1..=self.filled)
            .map(|pos| {
                if self.partner[pos - 1] == 0 || self.partner[pos - 1] as usize > pos {
                    'O'
                } else {
                    'C'
                }
            })
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.filled == 2 * self.n
    }

    fn remaining(&self) -> usize {
        2 * self.n - self.filled
    }

    /// Partner of the previous site if it is a closer.
    fn previous_closer_partner(&self) -> Option<u32> {
        if self.filled == 0 {
            return None;
        }
        let p = self.partner[self.filled - 1];
        (p != 0 && (p as usize) < self.filled).then_some(p)
    }

    fn can_open(&self) -> bool {
        // the new arc and every arc already open still need a closer
        self.openers_used < self.n && self.open.len() + 1 < self.remaining()
    }

    fn can_close(&self, o: u32) -> bool {
        let type1 = o > 1 && self.partner[o as usize - 2] == 0;
        let type2 = self.previous_closer_partner().is_some_and(|p| p > o);
        !type1 && !type2
    }

    /// First legal move strictly after `after` in the fixed move order
    /// (closes by increasing opener, then open).
    fn next_move(&self, after: Option<Move>) -> Option<Move> {
        let floor = match after {
            None => 0,
            Some(Move::Close(o)) => o,
            Some(Move::Open) => return None,
        };
        self.open
            .iter()
            .copied()
            .filter(|&o| o > floor)
            .find(|&o| self.can_close(o))
            .map(Move::Close)
            .or_else(|| self.can_open().then_some(Move::Open))
    }

    fn apply(&mut self, mv: Move) {
        let pos = self.filled as u32 + 1;
        match mv {
            Move::Open => {
                self.open.push(pos);
                self.openers_used += 1;
            }
            Move::Close(o) => {
                let i = self
                    .open
                    .iter()
                    .position(|&x| x == o)
                    .expect("closing an open arc");
                self.open.remove(i);
                self.partner[o as usize - 1] = pos;
                self.partner[pos as usize - 1] = o;
            }
        }
        self.filled += 1;
    }

    fn undo(&mut self, mv: Move) {
        self.filled -= 1;
        let pos = self.filled as u32 + 1;
        match mv {
            Move::Open => {
                let last = self.open.pop();
                debug_assert_eq!(last, Some(pos));
                self.openers_used -= 1;
            }
            Move::Close(o) => {
                let i = self.open.partition_point(|&x| x < o);
                self.open.insert(i, o);
                self.partner[o as usize - 1] = 0;
                self.partner[pos as usize - 1] = 0;
            }
        }
    }

    fn to_matching(&self) -> Matching {
        let arcs = (1..=2 * self.n as u32)
            .filter(|&p| self.partner[p as usize - 1] > p)
            .map(|p| Arc {
                opener: p,
                closer: self.partner[p as usize - 1],
            })
            .collect();
        Matching::from_sorted_arcs_unchecked(arcs)
    }

    /// All Stoimenow completions of this prefix, in emission order.
    pub fn completions(&self) -> StoimenowIter {
        StoimenowIter {
            state: self.clone(),
            stack: Vec::new(),
            extend: true,
            done: false,
        }
    }

    /// Number of completions, without materializing matchings.
    pub fn count_completions(&self) -> u64 {
        let mut state = self.clone();
        count_from(&mut state)
    }
}

fn count_from(state: &mut GenState) -> u64 {
    if state.is_complete() {
        return 1;
    }
    if state.openers_used == state.n {
        // Only closes remain; they must run in increasing opener order, so
        // there is one completion iff the first of them respects Type 2.
        let first = state.open[0];
        return match state.previous_closer_partner() {
            Some(p) if p > first => 0,
            _ => 1,
        };
    }
    let mut total = 0;
    let mut mv = state.next_move(None);
    while let Some(m) = mv {
        state.apply(m);
        total += count_from(state);
        state.undo(m);
        mv = state.next_move(Some(m));
    }
    total
}

/// Depth-first iterator over the completions of a prefix.
pub struct StoimenowIter {
    state: GenState,
    stack: Vec<Move>,
    extend: bool,
    done: bool,
}

impl Iterator for StoimenowIter {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        loop {
            if self.extend {
                if self.state.is_complete() {
                    self.extend = false;
                    return Some(self.state.to_matching());
                }
                match self.state.next_move(None) {
                    Some(mv) => {
                        self.state.apply(mv);
                        self.stack.push(mv);
                    }
                    None => self.extend = false,
                }
            } else {
                let Some(mv) = self.stack.pop() else {
                    self.done = true;
                    return None;
                };
                self.state.undo(mv);
                if let Some(next) = self.state.next_move(Some(mv)) {
                    self.state.apply(next);
                    self.stack.push(next);
                    self.extend = true;
                }
            }
        }
    }
}

fn check_n(n: usize) -> Result<(), EnumerateError> {
    if n > MAX_N {
        return Err(EnumerateError::TooLarge(n));
    }
    Ok(())
}

/// Every Stoimenow matching with `n` arcs, once each, in a fixed order:
/// lexicographic in the opener/closer word with a closer sorting before an
/// opener, ties broken by closing the earliest eligible open arc first.
pub fn enumerate_stoimenow(n: usize) -> Result<StoimenowIter, EnumerateError> {
    check_n(n)?;
    Ok(GenState::root(n).completions())
}

/// `|M_n|` by counting the search tree leaves.
pub fn count_stoimenow(n: usize) -> Result<u64, EnumerateError> {
    check_n(n)?;
    Ok(GenState::root(n).count_completions())
}

/// Viable prefixes of length `depth`, in emission order. Their completion
/// sets are disjoint and cover `M_n`.
pub fn partition_prefixes(n: usize, depth: usize) -> Result<Vec<GenState>, EnumerateError> {
    check_n(n)?;
    if depth > 2 * n {
        return Err(EnumerateError::BadDepth {
            depth,
            sites: 2 * n,
        });
    }
    fn go(state: &mut GenState, depth: usize, out: &mut Vec<GenState>) {
        if state.filled == depth {
            out.push(state.clone());
            return;
        }
        let mut mv = state.next_move(None);
        while let Some(m) = mv {
            state.apply(m);
            go(state, depth, out);
            state.undo(m);
            mv = state.next_move(Some(m));
        }
    }
    let mut out = Vec::new();
    go(&mut GenState::root(n), depth, &mut out);
    Ok(out)
}

/// `|M_n(S)|`.
pub fn count_avoiders(n: usize, set: &PatternSet) -> Result<u64, EnumerateError> {
    if set.is_empty() {
        return count_stoimenow(n);
    }
    Ok(enumerate_stoimenow(n)?
        .filter(|m| avoids_all(m, set))
        .count() as u64)
}

/// Counts the `n`-th Fishburn number as the number of ascent sequences of
/// length `n`: `x_1 = 0` and `0 <= x_i <= asc(x_1..x_{i-1}) + 1`.
pub fn fishburn_oracle(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    // ways[last][asc] for sequences of the current length.
    let mut ways = vec![vec![0u64; n + 1]; n + 1];
    ways[0][0] = 1;
    for _ in 1..n {
        let mut next = vec![vec![0u64; n + 1]; n + 1];
        for last in 0..=n {
            for asc in 0..=n {
                let w = ways[last][asc];
                if w == 0 {
                    continue;
                }
                for x in 0..=asc + 1 {
                    let a = asc + usize::from(x > last);
                    next[x][a] += w;
                }
            }
        }
        ways = next;
    }
    ways.iter().flatten().sum()
}

/// Avoider counts for several pattern sets at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n_max: usize,
    pub rows: Vec<CountRow>,
}

/// Counts `a_1..a_{n_max}` for one pattern set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub set: PatternSet,
    pub counts: Vec<u64>,
}

/// Serialized form of one [`CountRow`].
#[derive(Debug, Clone, Serialize)]
pub struct CountRowRecord {
    pub patterns: String,
    pub counts: Vec<u64>,
}

impl CountTable {
    /// `patterns,n,count` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("patterns,n,count\n");
        for row in &self.rows {
            for (i, c) in row.counts.iter().enumerate() {
                let _ = writeln!(out, "\"{}\",{},{}", row.set.canonical_name(), i + 1, c);
            }
        }
        out
    }

    /// One record per row, ready for JSON.
    pub fn records(&self) -> Vec<CountRowRecord> {
        self.rows
            .iter()
            .map(|r| CountRowRecord {
                patterns: r.set.canonical_name(),
                counts: r.counts.clone(),
            })
            .collect()
    }
}

/// Counts every row for `n = 1..=n_max` with one enumeration pass per `n`.
/// Work is split over prefixes on a pool of `workers` threads; the result
/// does not depend on `workers`.
pub fn count_table(
    rows: &[PatternSet],
    n_max: usize,
    workers: usize,
) -> Result<CountTable, EnumerateError> {
    check_n(n_max)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| EnumerateError::Pool(e.to_string()))?;
    let mut counts = vec![Vec::with_capacity(n_max); rows.len()];
    for n in 1..=n_max {
        let depth = (2 * n).min(6);
        let prefixes = partition_prefixes(n, depth)?;
        let per_row = pool.install(|| {
            prefixes
                .par_iter()
                .map(|prefix| {
                    let mut local = vec![0u64; rows.len()];
                    for m in prefix.completions() {
                        for (slot, set) in local.iter_mut().zip(rows) {
                            if avoids_all(&m, set) {
                                *slot += 1;
                            }
                        }
                    }
                    local
                })
                .reduce(
                    || vec![0u64; rows.len()],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        });
        for (row, c) in counts.iter_mut().zip(per_row) {
            row.push(c);
        }
    }
    Ok(CountTable {
        n_max,
        rows: rows
            .iter()
            .cloned()
            .zip(counts)
            .map(|(set, counts)| CountRow { set, counts })
            .collect(),
    })
}
