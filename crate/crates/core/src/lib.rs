//! Stoimenow matchings and their Catalan-pattern avoidance classes.
//!
//! * [`matching`]: matchings, the Stoimenow property, blocks, reversal.
//! * [`pattern`]: patterns, containment, the named pattern atlas.
//! * [`enumerate`]: pruned exhaustive generation and avoider counts.
//! * [`series`]: exact polynomials, rational generating functions, power
//!   series and the registry of closed forms.
//! * [`bijection`]: gluing/splitting, the binary-string bijection and the
//!   poset map.

pub mod bijection;
pub mod enumerate;
pub mod matching;
pub mod pattern;
pub mod series;

pub use bijection::{
    glue, matching_to_string, omega, poset_contains, split, string_to_matching, AlphaBetaString,
    BijectionError, ForbiddenPoset, Poset,
};
pub use enumerate::{
    count_avoiders, count_stoimenow, count_table, enumerate_stoimenow, fishburn_oracle,
    partition_prefixes, CountRow, CountTable, EnumerateError, GenState, MAX_N,
};
pub use matching::{Arc, Block, BlockDecomposition, Matching, MatchingError};
pub use pattern::{avoids_all, contains, registry, standardize, Pattern, PatternError, PatternSet};
pub use series::{gf_coefficients, gf_registry, Polynomial, PowerSeries, RationalGF, SeriesError};
