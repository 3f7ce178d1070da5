use crate::matching::Matching;
use crate::pattern::{contains, named};

use super::{from_label_word, label_word, BijectionError};

fn avoids_p2(m: &Matching) -> bool {
    m.is_stoimenow() && !contains(m, &named("P2"))
}

/// Adds the reduction arc to `m1`.
fn attach_reduction_arc(m1: &Matching) -> Matching {
    if m1.is_empty() {
        return Matching::crossing(1);
    }
    let arcs = m1.arcs();
    let new = arcs.len();
    let mut word = label_word(m1);
    let at = if m1.is_crossing() {
        0
    } else {
        let b1 = arcs[0].closer;
        let last = arcs[arcs.len() - 1].opener;
        arcs.iter()
            .filter(|a| a.opener < b1 && a.closer > last)
            .map(|a| a.opener)
            .min()
            .unwrap_or(b1) as usize
            - 1
    };
    word.insert(at, new);
    let mut seen = vec![false; new + 1];
    let mut last_opener = 0;
    for (i, &label) in word.iter().enumerate() {
        if !seen[label] {
            seen[label] = true;
            last_opener = i;
        }
    }
    word.insert(last_opener + 1, new);
    from_label_word(&word)
}

/// Combines two `P2`-avoiders into one whose first irreducible block is `m1`
/// plus a reduction arc, followed by `m2`.
pub fn glue(m1: &Matching, m2: &Matching) -> Result<Matching, BijectionError> {
    if !avoids_p2(m1) {
        return Err(BijectionError::NotP2Avoiding("first"));
    }
    if !avoids_p2(m2) {
        return Err(BijectionError::NotP2Avoiding("second"));
    }
    Ok(attach_reduction_arc(m1).concat(m2))
}

/// Inverse of [`glue`].
pub fn split(m: &Matching) -> Result<(Matching, Matching), BijectionError> {
    if m.is_empty() {
        return Err(BijectionError::EmptyMatching);
    }
    if !avoids_p2(m) {
        return Err(BijectionError::NotP2Avoiding("input"));
    }
    let blocks = m.irreducible_blocks().blocks;
    let head = &blocks[0].matching;
    let offset = 2 * head.size() as u32;
    let rest = Matching::from_pairs(
        m.arcs()
            .iter()
            .filter(|a| a.opener > offset)
            .map(|a| (a.opener - offset, a.closer - offset)),
    )
    .expect("tail blocks form a matching");
    let red = head.reduction_arc().expect("nonempty block");
    Ok((head.remove_arc(red), rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_stoimenow;
    use crate::pattern::PatternSet;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    fn p2_avoiders(n: usize) -> Vec<Matching> {
        let s = PatternSet::of(&["P2"]);
        enumerate_stoimenow(n)
            .unwrap()
            .filter(|x| s.avoided_by(x))
            .collect()
    }

    #[test]
    fn glue_example() {
        let m1 = m("(1,4)(2,5)(3,8)(6,9)(7,10)");
        let m2 = m("(1,2)(3,5)(4,6)(7,8)");
        let glued = glue(&m1, &m2).unwrap();
        assert_eq!(
            glued.to_string(),
            "(1,5)(2,6)(3,9)(4,10)(7,11)(8,12)(13,14)(15,17)(16,18)(19,20)"
        );
        assert_eq!(split(&glued).unwrap(), (m1, m2));
    }

    #[test]
    fn small_cases() {
        let e = Matching::empty();
        assert_eq!(glue(&e, &e).unwrap(), m("(1,2)"));
        assert_eq!(
            glue(&Matching::crossing(2), &e).unwrap(),
            Matching::crossing(3)
        );
        assert_eq!(split(&m("(1,2)")).unwrap(), (e.clone(), e.clone()));
        for k in 1..6 {
            assert_eq!(
                split(&Matching::crossing(k)).unwrap(),
                (Matching::crossing(k - 1), e.clone())
            );
        }
    }

    #[test]
    fn errors() {
        let p2 = named("P2").template().clone();
        assert_eq!(
            glue(&p2, &Matching::empty()),
            Err(BijectionError::NotP2Avoiding("first"))
        );
        assert_eq!(
            glue(&Matching::empty(), &p2),
            Err(BijectionError::NotP2Avoiding("second"))
        );
        assert_eq!(split(&p2), Err(BijectionError::NotP2Avoiding("input")));
        assert_eq!(
            split(&Matching::empty()),
            Err(BijectionError::EmptyMatching)
        );
        assert!(split(&m("(1,4)(2,3)")).is_err());
    }

    #[test]
    fn split_then_glue_is_identity() {
        for n in 1..=6 {
            for x in p2_avoiders(n) {
                let (a, b) = split(&x).unwrap();
                assert_eq!(a.size() + b.size() + 1, n);
                assert_eq!(glue(&a, &b).unwrap(), x);
            }
        }
    }
}
