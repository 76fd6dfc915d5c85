//! Cross-checks against an independent evaluator.
//!
//! The oracle below evaluates the order-k recursion written out term by term,
//! `G_n = G_{n-k} - (a_2 G_{n-k+1} + ... + a_q G_{n-k+q-1}) - (G_{n-k+q} + ... + G_{n-1})`,
//! in `i128`, without going through the characteristic polynomial builder or
//! `BigInt`. Sizes are kept small enough that `i128` cannot overflow.

use embedded_triangles::triangle::{
    compatible, extract_rectangle, fill_rectangle_fast, last_nonzero_profile, t_recursion_coeffs,
};
use embedded_triangles::verify::check_satisfies_recurrence;
use embedded_triangles::FamilySpec;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn oracle_sequence(q: usize, a: &[i64], k: usize, n_max: usize) -> Vec<i128> {
    let mut g = vec![0i128; n_max + 1];
    g[1] = 1;
    for n in k + 1..=n_max {
        let mut value = g[n - k];
        for i in 2..=q {
            value -= a[i - 2] as i128 * g[n - k + i - 1];
        }
        value -= g[n - k + q..n].iter().sum::<i128>();
        g[n] = value;
    }
    g
}

fn oracle_rectangle(q: usize, a: &[i64], r: usize) -> Vec<Vec<i128>> {
    let k = 1 + r * q;
    let c = 2 + (r - 1) * q;
    let g = oracle_sequence(q, a, k, k + r * c);
    (0..r).map(|t| g[k + 1 + t * c..k + 1 + (t + 1) * c].to_vec()).collect()
}

fn to_i128(rows: &[Vec<BigInt>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|row| row.iter().map(|v| i128::try_from(v).expect("fits in i128")).collect())
        .collect()
}

fn spec_strategy() -> impl Strategy<Value = FamilySpec> {
    (1usize..=5)
        .prop_flat_map(|q| {
            let inner = prop::collection::vec(1i64..=6, q.saturating_sub(2));
            let last = if q >= 2 { (2i64..=6).boxed() } else { Just(0i64).boxed() };
            (Just(q), inner, last)
        })
        .prop_map(|(q, mut a, last)| {
            if q >= 2 {
                a.push(last);
            }
            FamilySpec::new(q as i64, a).unwrap()
        })
}

#[test]
fn oracle_reproduces_worked_values() {
    let g = oracle_sequence(2, &[2], 5, 13);
    assert_eq!(&g[10..=13], &[-1, 4, -4, 1]);
    let rect = oracle_rectangle(3, &[1, 25], 3);
    assert_eq!(rect[2], vec![576, -1728, 1632, -336, -188, 40, 5, -1]);
    let degenerate = oracle_rectangle(1, &[], 3);
    assert_eq!(degenerate, vec![vec![1, -1, 0, 0], vec![2, -3, 1, 0], vec![4, -8, 5, -1]]);
}

#[test]
fn generated_windows_match_oracle_for_arbitrary_orders() {
    let spec = FamilySpec::new(4, vec![2, 1, 3]).unwrap();
    for k in 4..15 {
        let window = spec.generate_sequence(k, 60).unwrap();
        let expected = oracle_sequence(4, spec.a(), k, 60);
        let got: Vec<i128> = window.values().iter().map(|v| i128::try_from(v).unwrap()).collect();
        assert_eq!(got, expected[1..], "k = {k}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn both_schemes_match_oracle(spec in spec_strategy(), r in 1usize..=6) {
        let expected = oracle_rectangle(spec.q(), spec.a(), r);
        let fast = fill_rectangle_fast(&spec, r).unwrap();
        prop_assert_eq!(to_i128(fast.entries()), expected.clone());

        let k = spec.k_of_r(r).unwrap();
        let c = spec.c_of_r(r).unwrap();
        let window = spec.generate_sequence(k, k + r * c).unwrap();
        let extracted = extract_rectangle(&window, &spec, r).unwrap();
        prop_assert_eq!(to_i128(extracted.entries()), expected);
    }

    #[test]
    fn char_poly_shape(spec in spec_strategy(), extra in 0usize..20) {
        let k = spec.q() + extra;
        let poly = spec.char_poly(k).unwrap();
        let coeffs = poly.coeffs();
        prop_assert_eq!(poly.degree(), k);
        prop_assert_eq!(&coeffs[k], &-BigInt::one());
        let trailing = coeffs.iter().rev().take_while(|c| **c == -BigInt::one()).count();
        // degrees q..k are -1; a_q >= 2 stops the run for q >= 2
        let expected = if spec.q() == 1 { k } else { k - spec.q() + 1 };
        prop_assert_eq!(trailing, expected);
    }

    #[test]
    fn x_minus_1_multiple_annihilates(spec in spec_strategy(), extra in 0usize..12, len in 0usize..40) {
        let k = spec.q().max(1) + extra;
        let poly = spec.char_poly(k).unwrap();
        let window = spec.generate_sequence(k, k + 2 + len).unwrap();
        prop_assert!(check_satisfies_recurrence(&window, poly.coeffs()).unwrap());
        prop_assert!(check_satisfies_recurrence(&window, &poly.mul_x_minus_1()).unwrap());
    }

    #[test]
    fn t_coeffs_sum_to_one(spec in spec_strategy()) {
        let d = t_recursion_coeffs(&spec);
        let total: BigInt = d.as_slice().iter().sum();
        prop_assert_eq!(total, BigInt::one());
        prop_assert_eq!(d.lookback(), spec.q());
    }

    #[test]
    fn compatibility_is_reflexive_and_symmetric(spec in spec_strategy(), r1 in 1usize..=6, r2 in 1usize..=6) {
        let a = fill_rectangle_fast(&spec, r1).unwrap();
        let b = fill_rectangle_fast(&spec, r2).unwrap();
        prop_assert!(compatible(&a, &a).unwrap());
        prop_assert!(compatible(&a, &b).unwrap());
        prop_assert_eq!(compatible(&a, &b).unwrap(), compatible(&b, &a).unwrap());
    }

    #[test]
    fn profile_follows_closed_form(spec in spec_strategy(), r in 1usize..=7) {
        let rect = fill_rectangle_fast(&spec, r).unwrap();
        let profile = last_nonzero_profile(&rect);
        prop_assert!(profile.embedded);
        for t in 1..=r {
            let l = spec.l_of_t(t).unwrap();
            prop_assert_eq!(profile.l[t - 1], Some(l));
            let sign = if t % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(rect.get(t, l), &sign);
            prop_assert!(!rect.get(t, 1).is_zero());
        }
    }

    #[test]
    fn regeneration_is_identical(spec in spec_strategy(), r in 1usize..=5) {
        prop_assert_eq!(fill_rectangle_fast(&spec, r).unwrap(), fill_rectangle_fast(&spec, r).unwrap());
    }
}
