use std::time::Instant;

use proptest::prelude::*;
use qchar_core::character::{self, chi_polynomial};
use qchar_core::free::{build_cn, verify_index_symmetry};
use qchar_core::natrep;
use qchar_core::pbw;
use qchar_core::{MultiPoly, Rational};

fn var(rank: usize, i: usize) -> MultiPoly {
    MultiPoly::var(rank, i)
}

const FROZEN: &[(usize, usize, &str)] = &[
    (1, 0, "2*l1"),
    (1, 1, "2*l1^3 - 2*l1^2"),
    (1, 2, "2*l1^5 - 4*l1^4 + 2*l1^3"),
    (2, 0, "2*l1 + 2*l2"),
    (2, 1, "2*l1^3 + 2*l2^3 - 2*l1^2 - 4*l1*l2 - 2*l2^2"),
    (
        2,
        2,
        "2*l1^5 + 2*l2^5 - 4*l1^4 - 4*l1^3*l2 - 4*l1*l2^3 - 4*l2^4 + 2*l1^3 + 4*l1^2*l2 + 4*l1*l2^2 + 2*l2^3",
    ),
    (
        3,
        1,
        "2*l1^3 + 2*l2^3 + 2*l3^3 - 2*l1^2 - 4*l1*l2 - 4*l1*l3 - 2*l2^2 - 4*l2*l3 - 2*l3^2",
    ),
];

#[test]
fn frozen_characters() {
    for &(rank, m, text) in FROZEN {
        assert_eq!(chi_polynomial(m, rank).unwrap().poly.to_string(), text, "N={rank} m={m}");
        if rank <= 2 {
            assert_eq!(pbw::hc_of_cn(2 * m + 1, rank).unwrap().to_string(), text, "PBW N={rank} m={m}");
        }
    }
}

#[test]
fn frozen_values_at_points() {
    let pt = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
    assert_eq!(chi_polynomial(1, 1).unwrap().poly.eval(&pt(&[3])).unwrap(), Rational::from(36));
    assert_eq!(character::chi_closed_numeric(1, &pt(&[3, 1])).unwrap(), Rational::from(24));
    assert!(character::chi_closed_numeric(1, &pt(&[1, 1])).is_err());
}

#[test]
fn pbw_agrees_with_series_engine() {
    for rank in 1..=2 {
        for m in 0..=2 {
            let t = Instant::now();
            let oracle = pbw::hc_of_cn(2 * m + 1, rank).unwrap();
            let engine = chi_polynomial(m, rank).unwrap().poly;
            assert_eq!(oracle, engine, "m={m} N={rank}");
            assert!(oracle.is_integral());
            eprintln!("hc_of_cn({}, {rank}) in {:?}", 2 * m + 1, t.elapsed());
        }
    }
}

#[test]
fn entry_identities_up_to_m2() {
    for rank in 1..=2 {
        let report = pbw::verify_entry_identities(2, rank);
        for c in &report.checks {
            assert!(c.passed, "N={rank}: {}", c.name);
        }
    }
}

#[test]
fn even_casimirs_vanish_in_free_algebra() {
    for rank in 1..=3 {
        for m in 1..=3 {
            assert!(build_cn(2 * m, rank).is_zero(), "c_{} N={rank}", 2 * m);
        }
    }
    assert!(verify_index_symmetry(4, 2));
}

#[test]
fn stability_under_last_weight_zero() {
    for rank in 2..=4 {
        let images: Vec<MultiPoly> = (0..rank)
            .map(|i| if i + 1 < rank { var(rank - 1, i) } else { MultiPoly::zero(rank - 1) })
            .collect();
        for m in 0..=4 {
            let big = chi_polynomial(m, rank).unwrap().poly;
            let small = chi_polynomial(m, rank - 1).unwrap().poly;
            assert_eq!(big.substitute(&images).unwrap(), small, "m={m} N={rank}");
        }
    }
}

#[test]
fn natural_module_scalars() {
    for rank in 1..=3 {
        for n in 1..=7 {
            let report = natrep::scalar_check(n, rank).unwrap();
            let expected = if n == 1 { Rational::from(2) } else { Rational::zero() };
            assert_eq!(report.scalar, expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn closed_form_matches_polynomial(
        m in 0usize..4,
        pt in prop::collection::vec((-9i64..=9, 1i64..=4), 1..=3),
    ) {
        let lambda: Vec<Rational> = pt.into_iter().map(|(p, q)| Rational::new(p, q)).collect();
        prop_assume!(character::is_admissible(&lambda));
        let poly = chi_polynomial(m, lambda.len()).unwrap().poly;
        prop_assert_eq!(
            character::chi_closed_numeric(m, &lambda).unwrap(),
            poly.eval(&lambda).unwrap()
        );
    }

    #[test]
    fn symmetric_under_transpositions(m in 0usize..5, a in 0usize..4, b in 0usize..4) {
        let rank = 4;
        let poly = chi_polynomial(m, rank).unwrap().poly;
        let mut images: Vec<MultiPoly> = (0..rank).map(|i| var(rank, i)).collect();
        images.swap(a, b);
        prop_assert_eq!(poly.substitute(&images).unwrap(), poly);
    }
}
