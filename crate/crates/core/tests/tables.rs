use blockcheck::chartab::cyclotomic::{Accumulator, Cyclotomic};
use blockcheck::chartab::{
    central_character, character_table, character_table_with_prime, next_dixon_prime, dixon_prime,
    verify_orthogonality, CharacterTable,
};
use blockcheck::group::families::*;
use blockcheck::io::{parse_table, table_to_json};
use blockcheck::sym::partitions;
use blockcheck::Error;
use proptest::prelude::*;

fn sorted_degrees(t: &CharacterTable) -> Vec<u64> {
    let mut d = t.degrees();
    d.sort_unstable();
    d
}

/// Hook length formula, independent of the table code.
fn hook_degrees(n: usize) -> Vec<u64> {
    let mut out: Vec<u64> = partitions(n)
        .iter()
        .map(|l| {
            let parts = l.parts();
            let conj: Vec<usize> = (0..parts[0]).map(|j| parts.iter().filter(|&&x| x > j).count()).collect();
            let fact: u64 = (1..=n as u64).product();
            let mut hooks = 1u64;
            for (i, &row) in parts.iter().enumerate() {
                for j in 0..row {
                    hooks *= ((row - j - 1) + (conj[j] - i - 1) + 1) as u64;
                }
            }
            fact / hooks
        })
        .collect();
    out.sort_unstable();
    out
}

#[test]
fn symmetric_degrees_follow_hook_lengths() {
    for n in 1..=6 {
        let t = character_table(&symmetric(n)).unwrap();
        assert_eq!(sorted_degrees(&t), hook_degrees(n), "S{n}");
    }
}

#[test]
fn known_degree_multisets() {
    let cases: Vec<(blockcheck::group::FiniteGroup, Vec<u64>)> = vec![
        (special_linear(2, 5).unwrap(), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]),
        (alternating(5), vec![1, 3, 3, 4, 5]),
        (quaternion(8), vec![1, 1, 1, 1, 2]),
        (general_linear(2, 3).unwrap(), vec![1, 1, 2, 2, 2, 3, 3, 4]),
        (cyclic(6), vec![1; 6]),
    ];
    for (g, want) in cases {
        let t = character_table(&g).unwrap();
        assert_eq!(sorted_degrees(&t), want);
        assert!(verify_orthogonality(&t).passed());
    }
}

#[test]
fn trivial_group() {
    let t = character_table(&cyclic(1)).unwrap();
    assert_eq!(t.num_classes(), 1);
    assert_eq!(t.value(0, 0), &Cyclotomic::one());
}

#[test]
fn a5_has_golden_ratio_values() {
    let t = character_table(&alternating(5)).unwrap();
    let irrational = t.values().iter().flatten().filter(|v| !v.is_rational()).count();
    assert_eq!(irrational, 4);
    for v in t.values().iter().flatten() {
        assert_eq!(v.galois(2).galois(3), *v);
    }
}

#[test]
fn table_is_independent_of_dixon_prime() {
    let g = special_linear(2, 7).unwrap();
    let l1 = dixon_prime(g.order(), g.exponent());
    let l2 = next_dixon_prime(g.order(), g.exponent(), l1);
    let a = character_table_with_prime(&g, l1).unwrap();
    let b = character_table_with_prime(&g, l2).unwrap();
    assert_eq!(a, b);
    assert!(character_table_with_prime(&g, l1 + 1).is_err());
}

#[test]
fn central_characters_are_integral_on_trivial_class() {
    let t = character_table(&symmetric(4)).unwrap();
    for chi in 0..t.num_classes() {
        assert_eq!(central_character(&t, chi, 0).unwrap(), Cyclotomic::one());
    }
}

#[test]
fn table_round_trip_and_corruption() {
    let t = character_table(&general_linear(2, 3).unwrap()).unwrap();
    let text = table_to_json("gl23", &t);
    let back = parse_table(&text).unwrap();
    assert_eq!(back.group, "gl23");
    assert_eq!(back.table, t);
    assert_eq!(table_to_json("gl23", &back.table), text);

    let mut broken = t.clone();
    broken.set_value(1, 1, Cyclotomic::integer(5));
    let err = parse_table(&table_to_json("gl23", &broken)).unwrap_err();
    assert!(matches!(err, Error::OrthogonalityFailure(_)), "{err}");
    assert!(matches!(parse_table("[]"), Err(Error::Parse(_))));
}

fn small_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(vec![1u64, 3, 4, 5, 8, 12, 15]), prop::collection::vec(-4i64..=4, 0..6)).prop_map(
        |(e, sums)| {
            let mut m = vec![0i64; e as usize];
            for (i, s) in sums.into_iter().enumerate() {
                m[i % e as usize] += s;
            }
            Cyclotomic::from_exponent_sums(e, &m)
        },
    )
}

proptest! {
    #[test]
    fn ring_axioms(a in small_cyclotomic(), b in small_cyclotomic(), c in small_cyclotomic()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Cyclotomic::zero());
        prop_assert_eq!(a.clone() * Cyclotomic::one(), a.clone());
    }

    #[test]
    fn galois_action_is_a_ring_map(a in small_cyclotomic(), b in small_cyclotomic(), k in prop::sample::select(vec![1i64, 7, 11, 13, 17])) {
        prop_assert_eq!((a.clone() * b.clone()).galois(k), a.galois(k) * b.galois(k));
        prop_assert_eq!((a.clone() + b.clone()).galois(k), a.galois(k) + b.galois(k));
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn accumulator_matches_sum(xs in prop::collection::vec((small_cyclotomic(), -3i64..=3), 0..6)) {
        let mut acc = Accumulator::new(120);
        let mut sum = Cyclotomic::zero();
        for (x, k) in &xs {
            acc.add_scaled(x, *k);
            sum = sum + x.scale(*k);
        }
        prop_assert_eq!(acc.finish(), sum);
    }

    #[test]
    fn roots_of_unity_sum_to_zero(e in 2u64..40) {
        let mut s = Cyclotomic::zero();
        for k in 0..e {
            s = s + Cyclotomic::zeta(e, k);
        }
        prop_assert!(s.is_zero());
    }
}
