use std::path::PathBuf;

use blockcheck::group::families::*;
use blockcheck::group::{Domain, FiniteGroup};
use blockcheck::io::{load_group, parse_group, GroupFile};
use blockcheck::Error;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/groups").join(name)
}

#[test]
fn family_orders_and_class_counts() {
    let cases: Vec<(FiniteGroup, u64, usize)> = vec![
        (symmetric(5), 120, 7),
        (alternating(5), 60, 5),
        (cyclic(12), 12, 12),
        (dihedral(16).unwrap(), 16, 7),
        (quaternion(16), 16, 7),
        (general_linear(2, 3).unwrap(), 48, 8),
        (special_linear(2, 5).unwrap(), 120, 9),
        (special_linear(3, 2).unwrap(), 168, 6),
    ];
    for (g, order, k) in cases {
        assert_eq!(g.order(), order);
        assert_eq!(g.classes().len(), k, "order {order}");
        let sum: u64 = g.classes().iter().map(|c| c.size).sum();
        assert_eq!(sum, order);
    }
}

#[test]
fn structure() {
    let sl = special_linear(2, 5).unwrap();
    assert_eq!(sl.center().order(), 2);
    assert!(sl.is_perfect());
    assert!(sl.is_quasisimple());
    assert!(!sl.is_simple());
    assert!(alternating(5).is_simple());
    let s4 = symmetric(4);
    assert_eq!(s4.derived_subgroup().order(), 12);
    assert!(!s4.is_quasisimple());
    assert_eq!(s4.exponent(), 12);
    let gl = general_linear(2, 3).unwrap();
    assert_eq!(gl.center().order(), 2);
    assert_eq!(gl.derived_subgroup().order(), 24);
}

#[test]
fn class_power_maps() {
    let g = symmetric(5);
    for (i, c) in g.classes().iter().enumerate() {
        assert_eq!(c.powers.len() as u64, c.order);
        assert_eq!(c.powers[1 % c.order as usize], i);
        assert_eq!(g.classes()[c.powers[0]].order, 1);
        let x = g.pow(&c.representative, 2);
        assert_eq!(g.class_of(&x), Some(c.powers[2 % c.order as usize]));
    }
}

#[test]
fn shipped_files_validate() {
    let s5 = load_group(corpus("s5.json")).unwrap();
    assert_eq!(s5.group.order(), 120);
    let gl = load_group(corpus("gl23.json")).unwrap();
    assert_eq!(gl.group.order(), 48);
    assert_eq!(gl.group.center().order(), 2);
    let cover = load_group(corpus("2s4.json")).unwrap();
    let types = cover.projected_cycle_types().unwrap();
    assert_eq!(types.len(), cover.group.classes().len());
    assert!(types.iter().all(|t| t.iter().sum::<usize>() == 4));
}

#[test]
fn wrong_metadata_is_rejected() {
    let mut file = GroupFile::from_group("s4", &symmetric(4));
    file.expected_order = Some(25);
    assert!(matches!(parse_group(&file.to_json()), Err(Error::MetadataMismatch(_))));
    let mut file = GroupFile::from_group("s4", &symmetric(4));
    file.expected_center_order = Some(2);
    assert!(matches!(parse_group(&file.to_json()), Err(Error::MetadataMismatch(_))));
    assert!(matches!(parse_group("{\"format\": \"v1\"}"), Err(Error::Parse(_))));
}

#[test]
fn enumeration_bound() {
    let d = Domain::permutations(10);
    let gens = vec![
        d.permutation_from_cycles(&[&[1, 2]]).unwrap(),
        d.permutation_from_cycles(&[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]).unwrap(),
    ];
    let r = FiniteGroup::enumerate_with_bound(d, gens, 1000);
    assert!(matches!(r, Err(Error::BoundExceeded { .. })));
}
