//! Shared inputs for the criterion benchmarks.

use stoimenow::series::TABLE_ROWS;
use stoimenow::{enumerate_stoimenow, Matching, PatternSet};

/// Every table row as a pattern set.
pub fn table_rows() -> Vec<PatternSet> {
    TABLE_ROWS
        .iter()
        .map(|r| r.parse().expect("registry row"))
        .collect()
}

/// All Stoimenow matchings of size `n`.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    enumerate_stoimenow(n).expect("n within limits").collect()
}
