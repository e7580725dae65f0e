use blockcheck::sym::alternating::{an_character_data, an_value, p_part_vanishing_search};
use blockcheck::sym::spin::{bar_core_highest_first, spin_degree_from_bars};
use blockcheck::sym::*;
use blockcheck::Error;
use num_bigint::BigUint;
use proptest::prelude::*;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Any partition of size at most 25, built from a random multiset.
fn any_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..8, 0..7).prop_map(Partition::from_multiset)
}

fn any_strict() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1usize..15, 0..6)
        .prop_map(|s| Partition::from_multiset(s.into_iter().collect()))
}

/// Hooks of length divisible by p, counted directly from the diagram.
fn hooks_divisible(lambda: &Partition, p: usize) -> usize {
    lambda.hook_lengths().iter().filter(|&&h| (h as usize).is_multiple_of(p)).count()
}

proptest! {
    #[test]
    fn core_and_weight_account_for_size(lambda in any_partition(), p in prop::sample::select(vec![2usize, 3, 5, 7])) {
        let (core, w) = core_and_weight(&lambda, p);
        prop_assert_eq!(lambda.size(), core.size() + p * w);
        prop_assert_eq!(core_and_weight(&core, p), (core.clone(), 0));
        // the weight equals the number of hooks divisible by p
        prop_assert_eq!(hooks_divisible(&lambda, p), w);
    }

    #[test]
    fn bar_core_is_independent_of_removal_order(lambda in any_strict(), p in prop::sample::select(vec![3u64, 5, 7])) {
        let core = bar_core(&lambda, p).unwrap();
        let w = bar_weight(&lambda, p).unwrap();
        prop_assert_eq!(bar_core_highest_first(&lambda, p).unwrap(), (core.clone(), w));
        prop_assert_eq!(lambda.size(), core.size() + p as usize * w);
        prop_assert_eq!(bar_weight(&core, p).unwrap(), 0);
    }

    #[test]
    fn conjugation_is_an_involution(lambda in any_partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().degree(), lambda.degree());
    }

    #[test]
    fn beta_sets_round_trip(lambda in any_partition(), extra in 0usize..4) {
        let k = lambda.len() + extra;
        prop_assert_eq!(Partition::from_beta_set(&lambda.beta_set(k)), lambda);
    }

    #[test]
    fn spin_degree_formulas_agree(lambda in any_strict()) {
        prop_assert_eq!(spin_degree(&lambda).unwrap(), spin_degree_from_bars(&lambda).unwrap());
    }
}

#[test]
fn partition_validation() {
    assert!(Partition::new(vec![1, 2]).is_err());
    assert_eq!(part(&[3, 1, 0]), part(&[3, 1]));
    assert_eq!(part(&[4, 2, 1]).to_string(), "(4,2,1)");
    assert_eq!(part(&[4, 2, 1]).conjugate(), part(&[3, 2, 1, 1]));
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let strict: Vec<usize> = (0..=10).map(|n| strict_partitions(n).len()).collect();
    assert_eq!(strict, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
}

#[test]
fn mn_table_is_orthogonal() {
    for n in 1..=9 {
        let t = mn_table(n).unwrap();
        let k = t.partitions.len();
        let fact: i128 = (1..=n as i128).product();
        for a in 0..k {
            let s: i128 = (0..k).map(|b| {
                let size = t.class_size(&t.partitions[b]) as i128;
                size * t.values[a][b] * t.values[a][b]
            }).sum();
            assert_eq!(s, fact, "row {a} of S{n}");
        }
    }
}

#[test]
fn mn_known_values() {
    // χ^{(3,2)} on a 5-cycle and on (3,1,1)
    assert_eq!(mn_value(&part(&[3, 2]), &part(&[5])).unwrap(), 0);
    assert_eq!(mn_value(&part(&[3, 2]), &part(&[3, 1, 1])).unwrap(), -1);
    assert_eq!(mn_value(&part(&[3, 2]), &part(&[2, 2, 1])).unwrap(), 1);
    assert!(mn_table(41).is_err());
}

#[test]
fn sn_blocks_at_three() {
    let blocks = sn_blocks(6, 3);
    let cores: Vec<String> = blocks.iter().map(|b| b.core.to_string()).collect();
    assert!(cores.contains(&"()".to_string()));
    let total: usize = blocks.iter().map(|b| b.members.len()).sum();
    assert_eq!(total, 11);
    assert_eq!(sn_defect_exponent(2, 3).unwrap(), 3);
    assert_eq!(sn_defect_exponent(3, 3).unwrap(), 9);
    assert_eq!(sn_defect_exponent(5, 2).unwrap(), 8);
    assert!(matches!(sn_defect_exponent(0, 2), Err(Error::ZeroWeight)));
}

#[test]
fn sn_dagger_for_large_n() {
    for p in [2, 3, 5, 7] {
        let r = verify_sn_dagger(30, p);
        assert!(r.passed(), "{}", r.summary());
    }
}

#[test]
fn alternating_characters() {
    let data = an_character_data(6);
    let squares: BigUint = data
        .iter()
        .map(|c| {
            let sq = &c.degree * &c.degree;
            if c.split { sq * 2u32 } else { sq }
        })
        .sum();
    assert_eq!(squares, BigUint::from(360u32));
    assert_eq!(an_value(&part(&[5, 1]), &part(&[3, 3])).unwrap(), -1);
    assert!(an_value(&part(&[5, 1]), &part(&[2, 1, 1, 1, 1])).is_err());
}

#[test]
fn a10_witness() {
    let (found, _) = p_part_vanishing_search(10, 2, Some(84), 6).unwrap();
    assert!(found.iter().any(|w| w.lambda == part(&[7, 1, 1, 1])));
    assert!(verify_a10_phenomenon().passed());
}

#[test]
fn spin_errors() {
    assert!(spin_degree(&part(&[3, 3])).is_err());
    assert!(matches!(bar_core(&part(&[5, 1]), 2), Err(Error::EvenPrimeUnsupported(2))));
    assert_eq!(bar_lengths(&part(&[3, 1])).unwrap().len(), 4);
}
