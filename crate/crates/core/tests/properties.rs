use proptest::prelude::*;

use coxsigns::cocycle::{eval_epsilon, eval_epsilon_tilde, eval_z, Backend, Coefficients, HalfSpaceChain, Side};
use coxsigns::cohomology::{delta, is_coboundary, Cochain};
use coxsigns::{CoxeterSystem, GroupElement, GroupShape, Reflection};

fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..14)
}

fn words(rank: usize, n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(word(rank), n)
}

fn elements(sys: &CoxeterSystem, ws: &[Vec<usize>]) -> Vec<GroupElement> {
    ws.iter().map(|w| sys.element_of(w).unwrap()).collect()
}

fn eps(sys: &CoxeterSystem, t: &[GroupElement]) -> i64 {
    eval_epsilon(sys, t.len(), t, Backend::Chamber).unwrap().as_i64()
}

const TYPES: [&str; 8] = ["A3", "B3", "H3", "D4", "I2(5)", "F4", "A2xB2", "G2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduced_words_round_trip(w in word(4)) {
        let sys = CoxeterSystem::build("B4").unwrap();
        let x = sys.element_of(&w).unwrap();
        let r = sys.reduced_word(&x);
        prop_assert_eq!(r.len(), x.length());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(sys.element_of(&r).unwrap(), x);
    }

    #[test]
    fn length_is_subadditive(a in word(4), b in word(4)) {
        let sys = CoxeterSystem::build("D4").unwrap();
        let (x, y) = (sys.element_of(&a).unwrap(), sys.element_of(&b).unwrap());
        prop_assert!(x.mul(&y).length() <= x.length() + y.length());
        prop_assert_eq!(x.inverse().length(), x.length());
    }

    #[test]
    fn backends_agree(ty in 0..TYPES.len(), n in 1usize..=5, seed in any::<u64>()) {
        let sys = CoxeterSystem::build(TYPES[ty]).unwrap();
        let mut s = seed;
        let t: Vec<GroupElement> = (0..n).map(|_| {
            let len = (s % 20) as usize;
            let w: Vec<usize> = (0..len).map(|k| { s = s.rotate_left(7) ^ (k as u64 + 1) * 0x9e37; (s % sys.rank() as u64) as usize }).collect();
            sys.element_of(&w).unwrap()
        }).collect();
        prop_assert_eq!(
            eval_epsilon(&sys, n, &t, Backend::Chamber).unwrap(),
            eval_epsilon(&sys, n, &t, Backend::Inversion).unwrap()
        );
    }

    #[test]
    fn additive_pair_collapses(ws in words(3, 3), pos in 0usize..2) {
        let sys = CoxeterSystem::build("H3").unwrap();
        let mut t = elements(&sys, &ws);
        // make (t[pos], t[pos+1]) length-additive by replacing the right entry
        let x = t[pos].clone();
        let s = (0..3).find(|&s| !sys.is_right_descent(&x, s)).map(|s| sys.generator(s).unwrap().clone());
        if let Some(s) = s {
            t[pos + 1] = s;
            prop_assert!(eval_z(&sys, 3, &t).unwrap().is_zero());
            prop_assert_eq!(eps(&sys, &t), 0);
        }
    }

    #[test]
    fn reversal(ws in words(3, 3)) {
        let sys = CoxeterSystem::build("B3").unwrap();
        let t = elements(&sys, &ws);
        let rev: Vec<GroupElement> = t.iter().rev().map(GroupElement::inverse).collect();
        prop_assert_eq!(eps(&sys, &t), eps(&sys, &rev));
    }

    #[test]
    fn refinement_total_is_epsilon(ws in words(2, 4), n in 1usize..=4) {
        let sys = CoxeterSystem::build("B2").unwrap();
        let t = elements(&sys, &ws[..n]);
        let tilde = eval_epsilon_tilde(&sys, n, &t).unwrap();
        let total = tilde.total();
        let e = eps(&sys, &t);
        if n % 2 == 0 { prop_assert_eq!(total, e) } else { prop_assert_eq!(total.rem_euclid(2), e) }
    }

    #[test]
    fn parabolic_restriction(ws in words(2, 3), b in any::<bool>()) {
        let (small, big, offset) = if b { ("A2", "A3", 0) } else { ("B2", "B3", 1) };
        let (s, l) = (CoxeterSystem::build(small).unwrap(), CoxeterSystem::build(big).unwrap());
        let ts = elements(&s, &ws);
        let shifted: Vec<Vec<usize>> = ws.iter().map(|w| w.iter().map(|i| i + offset).collect()).collect();
        let tl = elements(&l, &shifted);
        prop_assert_eq!(eps(&s, &ts), eps(&l, &tl));
    }

    #[test]
    fn product_splitting(ws in words(3, 3), n in 1usize..=3) {
        let prod = CoxeterSystem::build("A1xA2").unwrap();
        let (a1, a2) = (CoxeterSystem::build("A1").unwrap(), CoxeterSystem::build("A2").unwrap());
        let ws = &ws[..n];
        let left: Vec<Vec<usize>> = ws.iter().map(|w| w.iter().copied().filter(|&i| i == 0).collect()).collect();
        let right: Vec<Vec<usize>> = ws.iter().map(|w| w.iter().filter(|&&i| i > 0).map(|i| i - 1).collect()).collect();
        let whole = eps(&prod, &elements(&prod, ws));
        let sum = eps(&a1, &elements(&a1, &left)) + eps(&a2, &elements(&a2, &right));
        if n % 2 == 0 { prop_assert_eq!(whole, sum) } else { prop_assert_eq!(whole, sum % 2) }
    }

    #[test]
    fn half_space_action_is_an_action(a in word(3), b in word(3), root in 0usize..15, plus in any::<bool>()) {
        let sys = CoxeterSystem::build("H3").unwrap();
        let (x, y) = (sys.element_of(&a).unwrap(), sys.element_of(&b).unwrap());
        let side = if plus { Side::Plus } else { Side::Minus };
        let c = HalfSpaceChain::basis(Reflection(root), side);
        prop_assert_eq!(c.act(&sys, &y).act(&sys, &x), c.act(&sys, &x.mul(&y)));
    }

    #[test]
    fn coboundaries_are_cocycles_and_trivial(bits in prop::collection::vec(any::<bool>(), 16)) {
        let g = GroupShape::Cyclic(4).group();
        let mut it = bits.into_iter();
        let lam = Cochain::from_fn(2, 4, |t| !t.contains(&0) && it.next().unwrap_or(false));
        let c = delta(&g, &lam);
        prop_assert!(delta(&g, &c).is_zero());
        prop_assert!(is_coboundary(&g, &c).unwrap().is_trivial());
    }
}

#[test]
fn diagram_automorphism_counts() {
    for (t, k) in [("A3", 2), ("D4", 6), ("E6", 2), ("E8", 1), ("B3", 1), ("A1xA1", 2)] {
        assert_eq!(CoxeterSystem::build(t).unwrap().diagram_automorphisms().len(), k, "{t}");
    }
}
