use std::collections::BTreeMap;

use stoimenow::pattern::named;
use stoimenow::series::{gf_registry, TABLE_ROWS};
use stoimenow::{count_table, enumerate_stoimenow, glue, split, Matching, PatternSet};

fn avoiders(n: usize, names: &[&str]) -> Vec<Matching> {
    let set = PatternSet::of(names);
    enumerate_stoimenow(n)
        .unwrap()
        .filter(|m| set.avoided_by(m))
        .collect()
}

#[test]
fn registry_matches_brute_force_counts() {
    let mut rows: Vec<PatternSet> = TABLE_ROWS.iter().map(|r| r.parse().unwrap()).collect();
    rows.extend(["R3", "R4", "R5"].map(|r| PatternSet::of(&[r])));
    let table = count_table(&rows, 7, 2).unwrap();
    for row in &table.rows {
        let name = row.set.canonical_name();
        let gf = gf_registry()[name.as_str()].gf.coefficients(7);
        let expected: Vec<u64> = gf[1..].iter().map(|c| u64::try_from(c).unwrap()).collect();
        assert_eq!(row.counts, expected, "{name}");
    }
}

#[test]
fn glue_round_trips_up_to_seven_arcs() {
    let by_size: BTreeMap<usize, Vec<Matching>> =
        (0..=6).map(|n| (n, avoiders(n, &["P2"]))).collect();
    for (&a, left) in &by_size {
        for (&b, right) in &by_size {
            if a + b + 1 > 7 {
                continue;
            }
            for m1 in left {
                for m2 in right {
                    let m = glue(m1, m2).unwrap();
                    assert_eq!(m.size(), a + b + 1);
                    assert!(m.is_stoimenow());
                    assert_eq!(&split(&m).unwrap(), &(m1.clone(), m2.clone()));
                }
            }
        }
    }
}

#[test]
fn p2_counts_follow_the_catalan_recurrence() {
    let counts: Vec<usize> = (0..=7).map(|n| avoiders(n, &["P2"]).len()).collect();
    for n in 1..=7 {
        let rhs: usize = (1..=n).map(|k| counts[k - 1] * counts[n - k]).sum();
        assert_eq!(counts[n], rhs, "n = {n}");
    }
}

#[test]
fn split_stays_inside_p2_p3_avoiders() {
    let set = PatternSet::of(&["P2", "P3"]);
    for n in 1..=7 {
        for m in avoiders(n, &["P2", "P3"]) {
            let (m1, m2) = split(&m).unwrap();
            assert!(set.avoided_by(&m1) && set.avoided_by(&m2), "{m}");
        }
    }
}

#[test]
fn adding_the_reduction_arc_keeps_p3_away() {
    let p3 = named("P3");
    for n in 0..=6 {
        for m1 in avoiders(n, &["P2", "P3"]) {
            let m = glue(&m1, &Matching::empty()).unwrap();
            assert!(!stoimenow::contains(&m, &p3), "{m1}");
        }
    }
}

#[test]
fn full_glue_can_create_p3() {
    let m2: Matching = "(1,3)(2,4)(5,6)".parse().unwrap();
    let m = glue(&Matching::empty(), &m2).unwrap();
    assert_eq!(&m, named("P3").template());
}
