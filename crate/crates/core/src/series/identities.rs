//! Algebraic identities behind the Catalan result for `P3` and the case
//! sums behind every closed form, checked coefficient-wise with exact series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{gf_registry, registry_series, PowerSeries};

pub const DEFAULT_ORDER: usize = 12;
pub const MAX_ORDER: usize = 64;

/// Series kit at a fixed order. All divisors used below have unit
/// constant term, so `div` cannot fail.
struct Kit {
    n: usize,
}

impl Kit {
    fn one(&self) -> PowerSeries {
        PowerSeries::one(self.n)
    }

    fn c(&self, v: i64) -> PowerSeries {
        PowerSeries::constant(v, self.n)
    }

    fn x(&self) -> PowerSeries {
        PowerSeries::x(self.n)
    }

    fn xk(&self, k: usize) -> PowerSeries {
        PowerSeries::monomial(k, self.n)
    }

    /// `1 - k x`.
    fn lin(&self, k: i64) -> PowerSeries {
        PowerSeries::from_integers([1, -k], self.n)
    }

    fn div(&self, a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
        a.div(b).expect("unit divisor")
    }

    /// `x / (1 - x)`.
    fn u(&self) -> PowerSeries {
        self.div(&self.x(), &self.lin(1))
    }

    /// `a / (1 - x)^k`.
    fn over_omx(&self, a: &PowerSeries, k: u32) -> PowerSeries {
        self.div(a, &self.lin(1).pow(k))
    }

    /// `1 / (1 - a)`.
    fn geo(&self, a: &PowerSeries) -> PowerSeries {
        self.div(&self.one(), &(&self.one() - a))
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `1 - sqrt(1 - 4x)` to `order`.
fn one_minus_root(order: usize) -> PowerSeries {
    let s = PowerSeries::from_integers([1, -4], order)
        .sqrt()
        .expect("unit constant");
    &PowerSeries::one(order) - &s
}

/// `C(x) = (1 - sqrt(1 - 4x)) / (2x)`.
pub fn catalan_series(order: usize) -> PowerSeries {
    one_minus_root(order + 1)
        .shift_down(1)
        .expect("vanishing constant")
        .scale(&half())
}

/// Catalan numbers from `C_{n+1} = sum C_k C_{n-k}`.
pub fn catalan_by_convolution(order: usize) -> PowerSeries {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=order {
        let v = (0..m).map(|k| &c[k] * &c[m - 1 - k]).sum();
        c.push(v);
    }
    PowerSeries::from_bigints(&c, order)
}

/// `(2x C - 1)^2 = 1 - 4x`.
pub fn check_catalan_quadratic(order: usize) -> bool {
    let k = Kit { n: order };
    let t = &(&k.c(2) * &(&k.x() * &catalan_series(order))) - &k.one();
    &t * &t == k.lin(4)
}

/// `H(x) = (1 - sqrt(1 - 4x)) / (2 (1 - x))`.
pub fn h_series(order: usize) -> PowerSeries {
    let k = Kit { n: order };
    k.div(&one_minus_root(order), &k.lin(1)).scale(&half())
}

/// `H(x) = x C(x) / (1 - x)`.
pub fn h_from_catalan(order: usize) -> PowerSeries {
    let k = Kit { n: order };
    k.over_omx(&(&k.x() * &catalan_series(order)), 1)
}

pub fn check_h_closed_forms(order: usize) -> bool {
    h_series(order) == h_from_catalan(order)
}

/// Whether `h` satisfies
/// `H = x/(1-2x) + x^3/(1-2x) * H/(1-2x) * 1/(1 - (1 + x^2/(1-2x)) H)`.
pub fn h_equation_holds(h: &PowerSeries) -> bool {
    let k = Kit { n: h.order() };
    let t = k.lin(2);
    let q = &k.one() + &k.div(&k.xk(2), &t);
    let rhs = &k.div(&k.x(), &t) + &(&(&k.div(&k.xk(3), &t) * &k.div(h, &t)) * &k.geo(&(&q * h)));
    &rhs == h
}

pub fn check_h_functional_equation(order: usize) -> bool {
    h_equation_holds(&h_series(order))
}

/// `F = 1/(1-x) * (1 + x^2/(1-2x) + x^2 (1 + x/(1-2x))^2 H / (1 - (1 + x^2/(1-2x)) H))`.
pub fn f_assembly(h: &PowerSeries) -> PowerSeries {
    let k = Kit { n: h.order() };
    let t = k.lin(2);
    let q = &k.one() + &k.div(&k.xk(2), &t);
    let r = (&k.one() + &k.div(&k.x(), &t)).pow(2);
    let inner = &(&k.one() + &k.div(&k.xk(2), &t))
        + &(&(&k.xk(2) * &r) * &k.div(h, &(&k.one() - &(&q * h))));
    k.over_omx(&inner, 1)
}

pub fn check_f_equals_catalan(order: usize) -> bool {
    f_assembly(&h_series(order)) == catalan_series(order)
}

/// An unsimplified sum of case contributions for one pattern set.
#[derive(Debug, Clone)]
pub struct CaseSum {
    pub row: &'static str,
    pub terms: Vec<PowerSeries>,
}

impl CaseSum {
    pub fn total(&self, order: usize) -> PowerSeries {
        self.terms
            .iter()
            .fold(PowerSeries::zero(order), |acc, t| &acc + t)
    }
}

/// Every case sum, each term expanded to `order`.
pub fn case_sums(order: usize) -> Vec<CaseSum> {
    let k = Kit { n: order };
    let x = k.x();
    let u = k.u();
    let t = k.lin(2);
    let g = k.over_omx(&k.one(), 1);
    let one_minus_u = &k.one() - &u;
    let u2 = u.pow(2);
    let u3 = u.pow(3);
    let x2_t_omx = k.over_omx(&k.div(&k.xk(2), &t), 1);
    let row = |name: &str| registry_series(name, order).expect("registered row");

    let p2p3 = row("P2,P3");
    let p2p4 = row("P2,P4");
    let u_geo = k.div(&u, &one_minus_u);

    let sums: Vec<(&'static str, Vec<PowerSeries>)> = vec![
        (
            "P1,P3",
            vec![
                g.clone(),
                x2_t_omx.clone(),
                &u2 * &k.div(&x, &t),
                k.over_omx(&k.xk(4), 5),
            ],
        ),
        ("P1,P4", vec![g.clone(), &u_geo * &u_geo]),
        (
            "P2,P3",
            vec![
                k.one(),
                &x * &k.div(&x, &t).pow(2),
                &x * &p2p3,
                k.div(&k.xk(2), &t),
            ],
        ),
        ("P2,P4", vec![k.one(), &u * &(&p2p4 - &k.one()), &x * &p2p4]),
        ("P3,P4", vec![f_assembly(&u)]),
        (
            "P4,P5",
            vec![
                g.clone(),
                &k.div(&x, &t)
                    * &k.div(
                        &x,
                        &(&k.lin(1) * &(&k.one() - &(&x * &(&k.one() + &k.div(&x, &t))))),
                    ),
            ],
        ),
        (
            "P1,P2,P3",
            vec![
                g.clone(),
                k.over_omx(&k.xk(2), 3),
                &(&x * &u2) * &(&k.one() + &k.over_omx(&(&k.c(2) * &x), 1)),
                k.over_omx(&k.xk(4), 5),
            ],
        ),
        (
            "P1,P2,P4",
            vec![g.clone(), k.div(&k.over_omx(&k.xk(2), 3), &one_minus_u)],
        ),
        (
            "P2,P3,P4",
            vec![
                g.clone(),
                k.over_omx(&u2, 1),
                k.over_omx(&(&u2 * &u_geo), 1),
            ],
        ),
        (
            "P1,P4,P5",
            vec![
                g.clone(),
                k.div(&k.over_omx(&k.xk(2), 2), &one_minus_u),
                k.div(&k.over_omx(&k.xk(3), 3), &one_minus_u),
            ],
        ),
        (
            "P2,P4,P5",
            vec![g.clone(), k.div(&k.over_omx(&k.xk(2), 3), &one_minus_u)],
        ),
        (
            "P1,P3,P4",
            vec![g.clone(), x2_t_omx.clone(), k.over_omx(&k.xk(3), 4)],
        ),
        ("P3,P4,P5", vec![f_assembly(&x)]),
        (
            "P1,P2,P3,P4",
            vec![g.clone(), k.over_omx(&u2, 1), k.over_omx(&u3, 1)],
        ),
        ("P2,P3,P4,P5", vec![g.clone(), k.over_omx(&k.xk(2), 4)]),
        (
            "P1,P2,P4,P5",
            vec![
                g.clone(),
                k.over_omx(&k.xk(2), 3),
                k.div(&k.over_omx(&k.xk(3), 3), &one_minus_u),
            ],
        ),
        (
            "P1,P3,P4,P5",
            vec![g.clone(), x2_t_omx, k.over_omx(&k.xk(3), 3)],
        ),
        (
            "P1,P2,P3,P4,P5",
            vec![g, k.over_omx(&u2, 1), k.over_omx(&k.xk(3), 3)],
        ),
    ];
    sums.into_iter()
        .map(|(row, terms)| CaseSum { row, terms })
        .collect()
}

/// Row name to whether its case sum equals the registered closed form.
pub fn check_case_sums(order: usize) -> BTreeMap<String, bool> {
    case_sums(order)
        .into_iter()
        .map(|s| {
            let expected = gf_registry()[s.row].gf.to_series(order);
            (s.row.to_string(), s.total(order) == expected)
        })
        .collect()
}

/// The `P2,P4` coefficients satisfy `a_n = 3a_{n-1} - a_{n-2}` and equal the
/// odd-indexed Fibonacci numbers `F_{2n-1}` with `F_1 = F_2 = 1`.
pub fn fibonacci_identity_check(order: usize) -> bool {
    let a = gf_registry()["P2,P4"].gf.coefficients(order.max(1));
    let mut fib: Vec<BigInt> = vec![BigInt::from(0), BigInt::one()];
    while fib.len() < 2 * order + 1 {
        let v = &fib[fib.len() - 1] + &fib[fib.len() - 2];
        fib.push(v);
    }
    let recurrence = a[0].is_one()
        && a[1].is_one()
        && (2..=order).all(|n| a[n] == BigInt::from(3) * &a[n - 1] - &a[n - 2]);
    recurrence && (1..=order).all(|n| a[n] == fib[2 * n - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn catalan_two_ways() {
        assert_eq!(ints(&catalan_series(4)), [1, 1, 2, 5, 14]);
        assert_eq!(catalan_series(8), catalan_by_convolution(8));
        assert_eq!(catalan_series(0), PowerSeries::one(0));
        assert!(check_catalan_quadratic(DEFAULT_ORDER));
    }

    #[test]
    fn h_closed_forms() {
        let h = h_series(6);
        assert_eq!(ints(&h), [0, 1, 2, 4, 9, 23, 65]);
        assert!(check_h_closed_forms(DEFAULT_ORDER));
    }

    #[test]
    fn h_functional_equation() {
        assert!(check_h_functional_equation(DEFAULT_ORDER));
        assert!(check_h_functional_equation(2));
        let bumped = &h_series(DEFAULT_ORDER) + &PowerSeries::monomial(5, DEFAULT_ORDER);
        assert!(!h_equation_holds(&bumped));
    }

    #[test]
    fn f_is_catalan() {
        assert!(check_f_equals_catalan(DEFAULT_ORDER));
        assert!(check_f_equals_catalan(0));
        let u = {
            let k = Kit { n: DEFAULT_ORDER };
            k.u()
        };
        let f = f_assembly(&u);
        assert_eq!(f, registry_series("P3,P4", DEFAULT_ORDER).unwrap());
        assert_ne!(f, catalan_series(DEFAULT_ORDER));
    }

    #[test]
    fn every_case_sum_matches() {
        let checks = check_case_sums(DEFAULT_ORDER);
        assert_eq!(checks.len(), 18);
        for (row, ok) in &checks {
            assert!(ok, "{row}");
        }
    }

    #[test]
    fn dropping_a_term_breaks_every_sum() {
        for s in case_sums(DEFAULT_ORDER) {
            let expected = registry_series(s.row, DEFAULT_ORDER).unwrap();
            for skip in 0..s.terms.len() {
                let mut t = s.clone();
                t.terms.remove(skip);
                assert_ne!(
                    t.total(DEFAULT_ORDER),
                    expected,
                    "{} without term {skip}",
                    s.row
                );
            }
        }
    }

    #[test]
    fn fibonacci() {
        assert!(fibonacci_identity_check(DEFAULT_ORDER));
        assert!(fibonacci_identity_check(1));
        let a = gf_registry()["P2,P4"].gf.coefficients(5);
        assert_eq!(a[5], BigInt::from(34));
    }

    #[test]
    fn high_order() {
        assert!(check_f_equals_catalan(MAX_ORDER));
        assert!(check_h_functional_equation(40));
    }
}
