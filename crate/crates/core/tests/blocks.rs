use blockcheck::blocks::{
    block_partition, block_partition_with, char_defect, defect_group_exponent_mod_center,
    defect_group_exponent_mod_center_from_table, ReductionMap,
};
use blockcheck::chartab::character_table;
use blockcheck::checks::{check_dagger, check_dagger_star, check_wilde, Status};
use blockcheck::group::families::*;

#[test]
fn s3_at_two_has_two_blocks() {
    let t = character_table(&symmetric(3)).unwrap();
    let d = block_partition(&t, 2);
    assert_eq!(d.blocks.len(), 2);
    let degrees: Vec<Vec<u64>> = d
        .blocks
        .iter()
        .map(|b| b.characters.iter().map(|&c| t.degree(c)).collect())
        .collect();
    assert_eq!(degrees, vec![vec![1, 1], vec![2]]);
    assert_eq!(d.blocks[1].defect, 0);
    assert_eq!(d.blocks[0].exponent, 2);
}

#[test]
fn coprime_prime_gives_singleton_blocks() {
    let t = character_table(&symmetric(4)).unwrap();
    let d = block_partition(&t, 5);
    assert_eq!(d.blocks.len(), t.num_classes());
    assert!(d.blocks.iter().all(|b| b.defect == 0 && b.exponent == 1 && b.characters.len() == 1));
}

#[test]
fn principal_block_comes_first() {
    for p in [2, 3, 5] {
        let t = character_table(&alternating(5)).unwrap();
        let d = block_partition(&t, p);
        assert!(d.blocks[0].characters.contains(&t.trivial()));
        let all: usize = d.blocks.iter().map(|b| b.characters.len()).sum();
        assert_eq!(all, t.num_classes());
    }
}

#[test]
fn sl2_9_in_defining_characteristic() {
    let t = character_table(&special_linear(2, 9).unwrap()).unwrap();
    let d = block_partition(&t, 3);
    let zero: Vec<_> = d.blocks.iter().filter(|b| b.defect == 0).collect();
    assert_eq!(zero.len(), 1);
    assert_eq!(t.degree(zero[0].characters[0]), 9);
    // one maximal-defect block per central character
    assert_eq!(d.blocks.len(), 3);
    assert!(d.blocks.iter().all(|b| b.defect == 0 || b.defect == 2));
}

#[test]
fn defect_is_codegree_valuation() {
    let t = character_table(&general_linear(2, 3).unwrap()).unwrap();
    for chi in 0..t.num_classes() {
        let codegree = t.order() / t.degree(chi);
        assert_eq!(2u64.pow(char_defect(&t, chi, 2)), blockcheck::arith::p_part(codegree, 2));
    }
}

#[test]
fn gl23_dagger_counterexample() {
    let t = character_table(&general_linear(2, 3).unwrap()).unwrap();
    let r = check_dagger("gl23", &t, 2);
    assert_eq!(r.status, Status::Fail);
    let v = &r.violations[0];
    assert_eq!(t.degree(v.character), 4);
    assert_eq!((v.defect, v.lhs, v.rhs), (Some(2), 8, 4));
    assert!(check_dagger("gl23", &t, 3).passed());
    assert!(check_wilde("gl23", &t).passed());
}

#[test]
fn mod_center_exponent_agrees_between_methods() {
    for g in [
        general_linear(2, 3).unwrap(),
        special_linear(2, 5).unwrap(),
        quaternion(16),
        general_linear(2, 5).unwrap(),
    ] {
        let t = character_table(&g).unwrap();
        for p in blockcheck::checks::primes_dividing(g.order()) {
            for b in &block_partition(&t, p).blocks {
                assert_eq!(
                    defect_group_exponent_mod_center(&t, b, p, &g),
                    defect_group_exponent_mod_center_from_table(&t, b, p)
                );
            }
            assert_eq!(
                check_dagger_star("g", &t, p, Some(&g)),
                check_dagger_star("g", &t, p, None)
            );
        }
    }
}

#[test]
fn every_ideal_choice_gives_the_same_blocks() {
    let t = character_table(&special_linear(2, 13).unwrap()).unwrap();
    for p in [2, 3, 7, 13] {
        let base = block_partition(&t, p).partition();
        for i in 0..ReductionMap::factors(t.exponent(), p).len() {
            let map = ReductionMap::with_factor(t.exponent(), p, i).unwrap();
            assert_eq!(block_partition_with(&t, p, &map).partition(), base, "p={p} factor {i}");
        }
    }
}
