//! Identity and property suites behind `check`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use stoimenow::bijection::{matching_to_string, string_to_matching, AlphaBetaString};
use stoimenow::pattern::named;
use stoimenow::series::{
    catalan_by_convolution, catalan_series, check_case_sums, check_catalan_quadratic,
    check_f_equals_catalan, check_h_closed_forms, check_h_functional_equation, f_assembly,
    fibonacci_identity_check, registry_series, PowerSeries,
};
use stoimenow::{
    contains, enumerate_stoimenow, glue, omega, poset_contains, split, EnumerateError,
    ForbiddenPoset, Matching, PatternSet,
};

use crate::report::IdentityOutcome;

pub fn h_eq(order: usize) -> Vec<IdentityOutcome> {
    vec![
        IdentityOutcome::new("h closed forms agree", check_h_closed_forms(order)),
        IdentityOutcome::new("h functional equation", check_h_functional_equation(order)),
    ]
}

pub fn f_catalan(order: usize) -> Vec<IdentityOutcome> {
    let u = PowerSeries::x(order)
        .div(&PowerSeries::from_integers([1, -1], order))
        .expect("unit divisor");
    let p3p4 = registry_series("P3,P4", order).expect("registered row");
    vec![
        IdentityOutcome::new(
            "catalan sqrt form = convolution",
            catalan_series(order) == catalan_by_convolution(order),
        ),
        IdentityOutcome::new("catalan quadratic", check_catalan_quadratic(order)),
        IdentityOutcome::new("F(H) = C", check_f_equals_catalan(order)),
        IdentityOutcome::new("F(x/(1-x)) = P3,P4 series", f_assembly(&u) == p3p4),
    ]
}

pub fn case_sums(order: usize) -> Vec<IdentityOutcome> {
    check_case_sums(order)
        .into_iter()
        .map(|(row, ok)| IdentityOutcome::new(format!("case sum {row}"), ok))
        .collect()
}

pub fn fibonacci(order: usize) -> Vec<IdentityOutcome> {
    vec![IdentityOutcome::new(
        "P2,P4 row is F(2n-1)",
        fibonacci_identity_check(order),
    )]
}

/// Largest size for which the brute-force injectivity check runs.
pub const INJECTIVITY_MAX_N: usize = 6;

pub fn omega_suite(n_max: usize) -> Result<Vec<IdentityOutcome>, EnumerateError> {
    let (p1, p2) = (named("P1"), named("P2"));
    let mut free = true;
    let mut p1_iff = true;
    let mut p2_iff = true;
    let mut injective = true;
    for n in 0..=n_max {
        let mut codes = HashSet::new();
        for m in enumerate_stoimenow(n)? {
            let p = omega(&m);
            free &= !poset_contains(&p, ForbiddenPoset::TwoPlusTwo);
            p1_iff &= contains(&m, &p1) == poset_contains(&p, ForbiddenPoset::ThreePlusOne);
            p2_iff &= contains(&m, &p2) == poset_contains(&p, ForbiddenPoset::N);
            if n <= INJECTIVITY_MAX_N {
                injective &= codes.insert(p.canonical_code());
            }
        }
    }
    let inj_n = n_max.min(INJECTIVITY_MAX_N);
    Ok(vec![
        IdentityOutcome::new(format!("omega images (2+2)-free, n<={n_max}"), free),
        IdentityOutcome::new(format!("P1-avoiding iff (3+1)-free, n<={n_max}"), p1_iff),
        IdentityOutcome::new(format!("P2-avoiding iff N-free, n<={n_max}"), p2_iff),
        IdentityOutcome::new(format!("omega injective, n<={inj_n}"), injective),
    ])
}

fn avoiders(n: usize, set: &PatternSet) -> Result<Vec<Matching>, EnumerateError> {
    Ok(enumerate_stoimenow(n)?
        .filter(|m| set.avoided_by(m))
        .collect())
}

fn glue_round_trips(n_max: usize) -> Result<(bool, bool, bool), EnumerateError> {
    let p2 = PatternSet::of(&["P2"]);
    let by_size: BTreeMap<usize, Vec<Matching>> = (0..=n_max)
        .map(|n| avoiders(n, &p2).map(|v| (n, v)))
        .collect::<Result<_, _>>()?;
    let mut glue_split = true;
    for a in 0..n_max {
        for b in 0..n_max - a {
            for m1 in &by_size[&a] {
                for m2 in &by_size[&b] {
                    glue_split &= glue(m1, m2)
                        .and_then(|m| split(&m))
                        .is_ok_and(|pair| pair == (m1.clone(), m2.clone()));
                }
            }
        }
    }
    let split_glue = (1..=n_max).all(|n| {
        by_size[&n].iter().all(|m| {
            split(m)
                .and_then(|(a, b)| glue(&a, &b))
                .is_ok_and(|g| &g == m)
        })
    });
    let counts: Vec<usize> = (0..=n_max).map(|n| by_size[&n].len()).collect();
    let recurrence = (1..=n_max).all(|n| {
        counts[n]
            == (1..=n)
                .map(|k| counts[k - 1] * counts[n - k])
                .sum::<usize>()
    });
    Ok((glue_split, split_glue, recurrence))
}

fn string_bijection(n_max: usize) -> Result<bool, EnumerateError> {
    let r4 = PatternSet::of(&["R4"]);
    for n in 1..=n_max {
        let mut image = BTreeSet::new();
        for w in AlphaBetaString::all(n - 1) {
            let m = string_to_matching(&w);
            if matching_to_string(&m).ok() != Some(w) {
                return Ok(false);
            }
            image.insert(m);
        }
        let target: BTreeSet<Matching> = avoiders(n, &r4)?.into_iter().collect();
        if image.len() != 1 << (n - 1) || image != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two worked string examples and the gluing example.
pub fn worked_examples() -> bool {
    let m = |s: &str| s.parse::<Matching>().expect("literal");
    let w = |s: &str| s.parse::<AlphaBetaString>().expect("literal");
    let strings = [
        ("bbabaab", "(1,5)(2,9)(3,12)(4,13)(6,7)(8,10)(11,14)(15,16)"),
        ("aabab", "(1,5)(2,6)(3,7)(4,9)(8,10)(11,12)"),
    ]
    .iter()
    .all(|(s, arcs)| {
        string_to_matching(&w(s)) == m(arcs) && matching_to_string(&m(arcs)).ok() == Some(w(s))
    });
    let (m1, m2) = (m("(1,4)(2,5)(3,8)(6,9)(7,10)"), m("(1,2)(3,5)(4,6)(7,8)"));
    let target = m("(1,5)(2,6)(3,9)(4,10)(7,11)(8,12)(13,14)(15,17)(16,18)(19,20)");
    let glued =
        glue(&m1, &m2).is_ok_and(|g| g == target) && split(&target).is_ok_and(|p| p == (m1, m2));
    strings && glued
}

pub fn bijections(n_max: usize) -> Result<Vec<IdentityOutcome>, EnumerateError> {
    let (glue_split, split_glue, recurrence) = glue_round_trips(n_max)?;
    Ok(vec![
        IdentityOutcome::new(
            format!("split(glue(M1,M2)) = (M1,M2), size<={n_max}"),
            glue_split,
        ),
        IdentityOutcome::new(format!("glue(split(M)) = M, n<={n_max}"), split_glue),
        IdentityOutcome::new(
            format!("P2 counts obey the Catalan recurrence, n<={n_max}"),
            recurrence,
        ),
        IdentityOutcome::new(
            format!("a/b strings biject onto R4-avoiders, n<={n_max}"),
            string_bijection(n_max)?,
        ),
        IdentityOutcome::new("worked examples", worked_examples()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for o in h_eq(12)
            .into_iter()
            .chain(f_catalan(12))
            .chain(case_sums(12))
            .chain(fibonacci(12))
            .chain(omega_suite(5).unwrap())
            .chain(bijections(6).unwrap())
        {
            assert!(o.pass, "{}", o.name);
        }
    }
}
