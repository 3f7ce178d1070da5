//! Exact polynomials, rational generating functions and truncated power
//! series, the closed-form registry, and identity checks.

mod gf;
mod identities;
mod poly;
mod power_series;
mod registry;

pub use gf::{gf_coefficients, RationalGF};
pub use identities::{
    case_sums, catalan_by_convolution, catalan_series, check_case_sums, check_catalan_quadratic,
    check_f_equals_catalan, check_h_closed_forms, check_h_functional_equation, f_assembly,
    fibonacci_identity_check, h_equation_holds, h_from_catalan, h_series, CaseSum, DEFAULT_ORDER,
    MAX_ORDER,
};
pub use poly::Polynomial;
pub use power_series::PowerSeries;
pub use registry::{
    gf_entries, gf_registry, listed_sequence_notes, GfEntry, REVERSE_PAIRS, TABLE_ROWS,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    DivByNonUnit,
    #[error("square root needs constant term 1")]
    SqrtNonUnit,
    #[error("denominator constant term is {0}, expected 1 or -1")]
    NonUnitDenominator(String),
    #[error("cannot parse polynomial {0}")]
    Parse(String),
    #[error("no closed form registered for {0:?}")]
    UnknownRow(String),
}

/// Registered closed form for `row`, expanded to `order`.
pub fn registry_series(row: &str, order: usize) -> Result<PowerSeries, SeriesError> {
    gf_registry()
        .get(row)
        .map(|e| e.gf.to_series(order))
        .ok_or_else(|| SeriesError::UnknownRow(row.to_string()))
}
