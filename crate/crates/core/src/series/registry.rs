//! Closed-form generating functions for every avoidance class in the
//! multi-avoidance table, plus the single length-3 patterns.
//!
//! Numerators and denominators are kept in the factored shape they are
//! usually printed in, e.g. `(1-x)^3 / (1-4x+5x^2-3x^3)`, multiplied out only
//! as far as needed to get integer polynomials.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{Polynomial, RationalGF};

/// One closed form shared by one or more pattern sets.
#[derive(Debug, Clone)]
pub struct GfEntry {
    /// Canonical pattern-set names, e.g. `P1,P4`.
    pub rows: Vec<&'static str>,
    /// The closed form as usually printed.
    pub printed: &'static str,
    pub oeis: Option<&'static str>,
    /// The sequence as listed alongside the closed form, from `n = 1`.
    pub listed_sequence: Vec<u64>,
    pub gf: RationalGF,
}

/// The 26 table rows, in table order.
pub const TABLE_ROWS: [&str; 26] = [
    "P1,P2",
    "P1,P3",
    "P1,P4",
    "P1,P5",
    "P2,P3",
    "P2,P4",
    "P2,P5",
    "P3,P4",
    "P3,P5",
    "P4,P5",
    "P1,P2,P3",
    "P1,P2,P4",
    "P1,P2,P5",
    "P2,P3,P4",
    "P2,P3,P5",
    "P1,P4,P5",
    "P2,P4,P5",
    "P1,P3,P4",
    "P1,P3,P5",
    "P3,P4,P5",
    "P1,P2,P3,P4",
    "P1,P2,P3,P5",
    "P2,P3,P4,P5",
    "P1,P2,P4,P5",
    "P1,P3,P4,P5",
    "P1,P2,P3,P4,P5",
];

/// Reverse-paired table rows (`S`, reverse of `S`).
pub const REVERSE_PAIRS: [(&str, &str); 7] = [
    ("P1,P4", "P1,P5"),
    ("P2,P4", "P2,P5"),
    ("P3,P4", "P3,P5"),
    ("P1,P2,P4", "P1,P2,P5"),
    ("P2,P3,P4", "P2,P3,P5"),
    ("P1,P3,P4", "P1,P3,P5"),
    ("P1,P2,P3,P4", "P1,P2,P3,P5"),
];

fn poly(s: &str) -> Polynomial {
    s.parse().expect("registry polynomial")
}

fn factored(factors: &[(&str, u32)]) -> Polynomial {
    let f: Vec<(Polynomial, u32)> = factors.iter().map(|(s, e)| (poly(s), *e)).collect();
    Polynomial::product(&f)
}

fn entry(
    rows: &[&'static str],
    printed: &'static str,
    oeis: Option<&'static str>,
    listed: &[u64],
    num: &[(&str, u32)],
    den: &[(&str, u32)],
) -> GfEntry {
    GfEntry {
        rows: rows.to_vec(),
        printed,
        oeis,
        listed_sequence: listed.to_vec(),
        gf: RationalGF::new(factored(num), factored(den)).expect("unit denominator"),
    }
}

/// All distinct closed forms.
pub fn gf_entries() -> &'static [GfEntry] {
    static ENTRIES: OnceLock<Vec<GfEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        vec![
            entry(
                &["P1,P2"],
                "(1-x)^3/(1-4x+5x^2-3x^3)",
                Some("A116703"),
                &[1, 2, 5, 13, 33, 82, 202, 497],
                &[("1-x", 3)],
                &[("1-4x+5x^2-3x^3", 1)],
            ),
            entry(
                &["P1,P3"],
                "(1-6x+15x^2-19x^3+13x^4-5x^5)/((1-x)^5(1-2x))",
                None,
                &[1, 2, 5, 13, 32, 73, 156, 318],
                &[("1-6x+15x^2-19x^3+13x^4-5x^5", 1)],
                &[("1-x", 5), ("1-2x", 1)],
            ),
            entry(
                &["P1,P4", "P1,P5", "P2,P3"],
                "(1-4x+5x^2-x^3)/((1-x)(1-2x)^2)",
                Some("A005183"),
                &[1, 2, 5, 13, 33, 81, 193, 449],
                &[("1-4x+5x^2-x^3", 1)],
                &[("1-x", 1), ("1-2x", 2)],
            ),
            entry(
                &["P2,P4", "P2,P5", "P3,P4", "P3,P5", "P4,P5"],
                "(1-2x)/(1-3x+x^2)",
                Some("A001519"),
                &[1, 2, 5, 13, 34, 89, 233, 610],
                &[("1-2x", 1)],
                &[("1-3x+x^2", 1)],
            ),
            entry(
                &["P1,P2,P3"],
                "(1-4x+7x^2-5x^3+2x^4-x^5+x^6)/(1-x)^5",
                Some("A116722"),
                &[1, 2, 5, 12, 25, 47, 82, 135],
                &[("1-4x+7x^2-5x^3+2x^4-x^5+x^6", 1)],
                &[("1-x", 5)],
            ),
            entry(
                &[
                    "P1,P2,P4", "P1,P2,P5", "P2,P3,P4", "P2,P3,P5", "P1,P4,P5", "P2,P4,P5",
                ],
                "(1-3x+3x^2)/((1-x)^2(1-2x))",
                Some("A000325"),
                &[1, 2, 5, 12, 27, 58, 121, 248],
                &[("1-3x+3x^2", 1)],
                &[("1-x", 2), ("1-2x", 1)],
            ),
            entry(
                &["P1,P3,P4", "P1,P3,P5"],
                "(1-5x+10x^2-9x^3+3x^4-x^5)/((1-x)^4(1-2x))",
                Some("A116725"),
                // listed with the sixth term missing; see `listed_sequence_notes`
                &[1, 2, 5, 12, 26, 99, 184, 340],
                &[("1-5x+10x^2-9x^3+3x^4-x^5", 1)],
                &[("1-x", 4), ("1-2x", 1)],
            ),
            entry(
                &["P3,P4,P5"],
                "(1-x)^2/(1-3x+2x^2-x^3)",
                Some("A034943"),
                &[1, 2, 5, 12, 28, 65, 151, 351],
                &[("1-x", 2)],
                &[("1-3x+2x^2-x^3", 1)],
            ),
            entry(
                &["P1,P2,P3,P4", "P1,P2,P3,P5", "P2,P3,P4,P5"],
                "(1-3x+4x^2-x^3)/(1-x)^4",
                Some("A050407"),
                &[1, 2, 5, 11, 21, 36, 57, 85],
                &[("1-3x+4x^2-x^3", 1)],
                &[("1-x", 4)],
            ),
            entry(
                &["P1,P2,P4,P5", "P1,P3,P4,P5"],
                "(1-4x+6x^2-3x^3-x^4)/((1-x)^3(1-2x))",
                None,
                &[1, 2, 5, 11, 22, 42, 79, 149],
                &[("1-4x+6x^2-3x^3-x^4", 1)],
                &[("1-x", 3), ("1-2x", 1)],
            ),
            entry(
                &["P1,P2,P3,P4,P5"],
                "(1-2x+2x^2+x^3)/(1-x)^3",
                Some("A002522"),
                &[1, 2, 5, 10, 17, 26, 37, 50],
                &[("1-2x+2x^2+x^3", 1)],
                &[("1-x", 3)],
            ),
            entry(
                &["R3", "R4", "R5"],
                "(1-x)/(1-2x)",
                Some("A011782"),
                &[1, 2, 4, 8, 16, 32, 64, 128],
                &[("1-x", 1)],
                &[("1-2x", 1)],
            ),
        ]
    })
}

/// Pattern-set name to closed form. Rows sharing a closed form point at the
/// same entry.
pub fn gf_registry() -> &'static BTreeMap<&'static str, &'static GfEntry> {
    static MAP: OnceLock<BTreeMap<&'static str, &'static GfEntry>> = OnceLock::new();
    MAP.get_or_init(|| {
        gf_entries()
            .iter()
            .flat_map(|e| e.rows.iter().map(move |r| (*r, e)))
            .collect()
    })
}

/// Rows whose listed sequence disagrees with the expansion of their own
/// closed form, with a short explanation.
pub fn listed_sequence_notes(row: &str) -> Option<String> {
    let e = gf_registry().get(row)?;
    let n = e.listed_sequence.len();
    let coeffs = e.gf.coefficients(n);
    let expanded: Vec<String> = coeffs[1..].iter().map(|c| c.to_string()).collect();
    let listed: Vec<String> = e.listed_sequence.iter().map(u64::to_string).collect();
    (expanded != listed).then(|| {
        format!(
            "listed sequence {} differs from the closed-form expansion {}",
            listed.join(","),
            expanded.join(",")
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(row: &str, n: usize) -> Vec<i64> {
        gf_registry()[row]
            .gf
            .coefficients(n)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn every_table_row_is_registered() {
        let reg = gf_registry();
        for row in TABLE_ROWS {
            assert!(reg.contains_key(row), "{row}");
        }
        assert_eq!(reg.len(), 29);
        assert!(std::ptr::eq(reg["P1,P4"], reg["P2,P3"]));
    }

    #[test]
    fn registry_examples() {
        let reg = gf_registry();
        assert_eq!(reg["P2,P4"].gf.numerator().to_string(), "1-2x");
        assert_eq!(reg["P2,P4"].gf.denominator().to_string(), "1-3x+x^2");
        assert_eq!(
            reg["P1,P2,P3,P4,P5"].gf.numerator().to_string(),
            "1-2x+2x^2+x^3"
        );
        assert_eq!(
            reg["P1,P2,P3,P4,P5"].gf.denominator().to_string(),
            "1-3x+3x^2-x^3"
        );
        assert_eq!(coeffs("R3", 5), [1, 1, 2, 4, 8, 16]);
    }

    #[test]
    fn rows_start_with_one_one_two_five() {
        for row in TABLE_ROWS {
            assert_eq!(coeffs(row, 12)[..4], [1, 1, 2, 5], "{row}");
        }
    }

    #[test]
    fn listed_sequences_match_except_one_group() {
        for row in TABLE_ROWS {
            let note = listed_sequence_notes(row);
            if row == "P1,P3,P4" || row == "P1,P3,P5" {
                assert!(note.is_some());
            } else {
                assert!(note.is_none(), "{row}: {note:?}");
            }
        }
        assert_eq!(
            coeffs("P1,P3,P4", 9),
            [1, 1, 2, 5, 12, 26, 52, 99, 184, 340]
        );
    }

    #[test]
    fn reverse_pairs_are_table_rows() {
        for (a, b) in REVERSE_PAIRS {
            assert!(TABLE_ROWS.contains(&a) && TABLE_ROWS.contains(&b));
        }
    }
}
