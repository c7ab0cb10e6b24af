use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coxeter::CoxeterSystem;

fn random_normalized(g: &SmallGroup, degree: usize, rng: &mut ChaCha8Rng) -> Cochain {
    let e = g.identity();
    Cochain::from_fn(degree, g.order(), |t| !t.contains(&e) && rng.gen_bool(0.5))
}

#[test]
fn group_validation() {
    assert!(SmallGroup::cyclic(6).is_abelian());
    assert_eq!(SmallGroup::klein().element_order(3), 2);
    let bad = vec![vec![0, 1], vec![1, 1]];
    assert!(matches!(SmallGroup::from_table(bad), Err(CohomologyError::NotAGroup(_))));
    let a3 = CoxeterSystem::build("A3").unwrap();
    let s1 = a3.generator(0).unwrap().clone();
    let s2 = a3.generator(1).unwrap().clone();
    assert_eq!(SmallGroup::from_elements(&[a3.identity(), s1.clone(), s2]), Err(CohomologyError::NotClosed));
    assert_eq!(SmallGroup::from_elements(&[a3.identity(), s1]).unwrap(), SmallGroup::cyclic(2));
}

#[test]
fn restriction_examples() {
    let a3 = CoxeterSystem::build("A3").unwrap();
    let trivial = restrict_cocycle(&a3, 3, &[a3.identity()]).unwrap();
    assert!(trivial.is_zero());
    let s = a3.generator(1).unwrap().clone();
    let c = restrict_cocycle(&a3, 3, &[a3.identity(), s]).unwrap();
    let ones: Vec<Vec<usize>> = all_tuples(3, 2).filter(|t| c.get(t)).collect();
    assert_eq!(ones, vec![vec![1, 1, 1]]);
    let cox = a3.element_of(&[0, 1, 2]).unwrap();
    let omega: Vec<_> = (0..4).map(|k| cox.pow(k)).collect();
    let c = restrict_cocycle(&a3, 3, &omega).unwrap();
    assert_eq!(c.to_json().as_object().unwrap().len(), 64);
    assert!(c.is_normalized(&SmallGroup::cyclic(4)));
}

#[test]
fn verdicts() {
    let z2 = SmallGroup::cyclic(2);
    match is_coboundary(&z2, &Cochain::zero(3, 2)).unwrap() {
        Verdict::Trivial { witness } => assert!(witness.is_zero()),
        v => panic!("{v:?}"),
    }
    let xyz = standard_class_basis(GroupShape::Cyclic(2)).unwrap().remove(0);
    assert!(xyz.get(&[1, 1, 1]));
    match is_coboundary(&z2, &xyz).unwrap() {
        Verdict::Nontrivial { certificate } => assert!(verify_certificate(&z2, &xyz, &certificate)),
        v => panic!("{v:?}"),
    }
    let mut broken = Cochain::zero(3, 2);
    broken.set(&[1, 1, 1], true);
    broken.set(&[1, 1, 1], false);
    broken.set(&[0, 1, 1], true);
    assert_eq!(is_coboundary(&z2, &broken), Err(CohomologyError::NotNormalized));
    let z4 = SmallGroup::cyclic(4);
    let mut not_cocycle = Cochain::zero(3, 4);
    not_cocycle.set(&[1, 1, 1], true);
    assert_eq!(is_coboundary(&z4, &not_cocycle), Err(CohomologyError::NotACocycle));
}

#[test]
fn coboundaries_are_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in [SmallGroup::cyclic(4), SmallGroup::klein(), SmallGroup::cyclic(6)] {
        for _ in 0..20 {
            let lam = random_normalized(&g, 2, &mut rng);
            let c = delta(&g, &lam);
            assert!(delta(&g, &c).is_zero());
            match is_coboundary(&g, &c).unwrap() {
                Verdict::Trivial { witness } => assert_eq!(delta(&g, &witness), c),
                v => panic!("{v:?}"),
            }
        }
    }
}

#[test]
fn dimensions() {
    assert_eq!(cohomology_dimension(&SmallGroup::cyclic(2), 3), 1);
    assert_eq!(cohomology_dimension(&SmallGroup::cyclic(4), 3), 1);
    assert_eq!(cohomology_dimension(&SmallGroup::klein(), 3), 4);
    assert_eq!(cohomology_dimension(&SmallGroup::klein(), 1), 2);
    assert_eq!(cohomology_dimension(&SmallGroup::cyclic(3), 3), 0);
    assert_eq!(cohomology_dimension(&SmallGroup::cyclic(5), 0), 1);
}

#[test]
fn bases_are_cocycles_and_independent() {
    for shape in [GroupShape::Cyclic(2), GroupShape::Cyclic(4), GroupShape::Cyclic(6), GroupShape::Klein] {
        let g = shape.group();
        let basis = standard_class_basis(shape).unwrap();
        assert_eq!(basis.len(), cohomology_dimension(&g, 3), "{shape}");
        for (i, b) in basis.iter().enumerate() {
            assert!(delta(&g, b).is_zero());
            let mut unit = vec![false; basis.len()];
            unit[i] = true;
            assert_eq!(class_coordinates(&g, b, &basis).unwrap(), unit);
        }
        for mask in 1u32..(1 << basis.len()) {
            let mut c = Cochain::zero(3, g.order());
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    c = c.add(b);
                }
            }
            assert!(!is_coboundary(&g, &c).unwrap().is_trivial(), "{shape} mask {mask}");
        }
    }
    assert!(standard_class_basis(GroupShape::Cyclic(3)).unwrap().is_empty());
}

#[test]
fn verdicts_are_class_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for shape in [GroupShape::Cyclic(2), GroupShape::Cyclic(4), GroupShape::Klein] {
        let g = shape.group();
        let basis = standard_class_basis(shape).unwrap();
        for b in &basis {
            for _ in 0..10 {
                let c = b.add(&delta(&g, &random_normalized(&g, 2, &mut rng)));
                assert!(!is_coboundary(&g, &c).unwrap().is_trivial());
                assert_eq!(class_coordinates(&g, &c, &basis).unwrap(), class_coordinates(&g, b, &basis).unwrap());
            }
        }
    }
}

#[test]
fn class_coordinates_rejects_short_basis() {
    let g = SmallGroup::klein();
    let basis = standard_class_basis(GroupShape::Klein).unwrap();
    let c = basis[0].clone();
    assert_eq!(class_coordinates(&g, &c, &basis[1..]), Err(CohomologyError::BasisDoesNotSpan));
}

#[test]
fn cochain_json() {
    let c = Cochain::from_fn(2, 2, |t| t == [1, 1]);
    assert_eq!(c.to_json().to_string(), r#"{"0,0":0,"0,1":0,"1,0":0,"1,1":1}"#);
}
