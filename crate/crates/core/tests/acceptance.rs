//! Acceptance criteria, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxsigns::cocycle::{coboundary, eval_epsilon, eval_z, Backend, Coefficients, HalfSpaceChain, F2};
use coxsigns::cohomology::{
    cohomology_dimension, delta, is_coboundary, restrict_cocycle, Cochain, SmallGroup,
};
use coxsigns::omega::{classify_restrictions, diff_against, expectation_for, omega_of};
use coxsigns::verify::{parse_suites, run_verify, SweepMode, VerifyPlan};
use coxsigns::{CoxeterSystem, GroupElement};

type Outcome = Result<String, String>;

fn sys(t: &str) -> CoxeterSystem {
    CoxeterSystem::build(t).unwrap()
}

fn random_element(sys: &CoxeterSystem, rng: &mut ChaCha8Rng) -> GroupElement {
    let len = rng.gen_range(0..=2 * sys.num_positive());
    let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..sys.rank())).collect();
    sys.element_of(&w).unwrap()
}

fn eps(sys: &CoxeterSystem, t: &[GroupElement]) -> i64 {
    eval_epsilon(sys, t.len(), t, Backend::Chamber).unwrap().as_i64()
}

/// Every tuple of `arity` elements, in lexicographic order.
fn for_all_tuples(els: &[GroupElement], arity: usize, mut f: impl FnMut(&[GroupElement]) -> Result<(), String>) -> Result<u64, String> {
    let k = els.len();
    let mut idx = vec![0usize; arity];
    let mut t: Vec<GroupElement> = vec![els[0].clone(); arity];
    let mut count = 0;
    loop {
        for (slot, &i) in t.iter_mut().zip(&idx) {
            *slot = els[i].clone();
        }
        f(&t)?;
        count += 1;
        let mut p = arity;
        loop {
            if p == 0 {
                return Ok(count);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < k {
                break;
            }
            idx[p] = 0;
        }
    }
}

fn additive(x: &GroupElement, y: &GroupElement) -> bool {
    x.mul(y).length() == x.length() + y.length()
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for t in ["A2", "A3", "B2", "B3", "I2(5)", "I2(7)", "H3"] {
        let s = sys(t);
        let order = s.order() as u128;
        for n in 2..=4usize {
            let check = |tup: &[GroupElement]| -> Result<(), String> {
                let z = eval_z(&s, n, tup).unwrap();
                let e = eps(&s, tup);
                if !z.is_zero() || e != 0 {
                    return Err(format!("{t} n={n}: ({}) gives Z={z}, eps={e}", s.format_tuple(tup)));
                }
                Ok(())
            };
            let checked = if order.pow(n as u32) <= 1_000_000 {
                let els = s.elements(usize::MAX).unwrap();
                let mut hits = 0u64;
                for_all_tuples(&els, n, |tup| {
                    if tup.windows(2).any(|p| additive(&p[0], &p[1])) {
                        hits += 1;
                        check(tup)?;
                    }
                    Ok(())
                })?;
                hits
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
                for _ in 0..10_000 {
                    let mut tup: Vec<GroupElement> = (0..n).map(|_| random_element(&s, &mut rng)).collect();
                    let i = rng.gen_range(0..n - 1);
                    let w = random_element(&s, &mut rng);
                    let word = s.reduced_word(&w);
                    let cut = rng.gen_range(0..=word.len());
                    tup[i] = s.element_of(&word[..cut]).unwrap();
                    tup[i + 1] = s.element_of(&word[cut..]).unwrap();
                    assert!(additive(&tup[i], &tup[i + 1]));
                    check(&tup)?;
                }
                10_000
            };
            for (k, g) in s.generators().iter().enumerate() {
                let e = eps(&s, &vec![g.clone(); n]);
                if e != 1 {
                    return Err(format!("{t}: eps_{n}(s{},...) = {e}", k + 1));
                }
            }
            notes.push(format!("{t}/{n}:{checked}"));
        }
    }
    Ok(format!("collapsing tuples checked {}", notes.join(" ")))
}

fn criterion_2() -> Outcome {
    let mut counts = Vec::new();
    for t in ["A3", "B2"] {
        let s = sys(t);
        let els = s.elements(usize::MAX).unwrap();
        let n = for_all_tuples(&els, 4, |q| {
            let d: F2 = coboundary(&s, 3, |u| Ok(F2(eps(&s, u) == 1)), q).unwrap();
            if d.0 {
                return Err(format!("{t}: delta eps3 ({}) = 1", s.format_tuple(q)));
            }
            Ok(())
        })?;
        counts.push(format!("{t}: {n}"));
    }
    if counts[0] != "A3: 331776" || counts[1] != "B2: 4096" {
        return Err(format!("unexpected tuple counts {counts:?}"));
    }
    let b3 = sys("B3");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let q: Vec<GroupElement> = (0..4).map(|_| random_element(&b3, &mut rng)).collect();
        let d: HalfSpaceChain = coboundary(&b3, 3, |u| eval_z(&b3, 3, u), &q).unwrap();
        if !d.is_zero() {
            return Err(format!("B3: delta Z3 ({}) = {d}", b3.format_tuple(&q)));
        }
    }
    Ok(format!("delta eps3 = 0 on {}; delta Z3 = 0 on 10000 B3 samples", counts.join(", ")))
}

fn criterion_3() -> Outcome {
    let types = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "D4", "D5", "D6", "E6", "E7", "E8", "F4",
        "G2", "H3", "H4", "I2(5)", "I2(7)", "I2(8)", "A1xA2", "B2xG2",
    ];
    let systems: Vec<CoxeterSystem> = types.iter().map(|t| sys(t)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..100_000usize {
        let s = &systems[i % systems.len()];
        let n = 1 + (i / systems.len()) % 5;
        let t: Vec<GroupElement> = (0..n).map(|_| random_element(s, &mut rng)).collect();
        let a = eval_epsilon(s, n, &t, Backend::Chamber).unwrap();
        let b = eval_epsilon(s, n, &t, Backend::Inversion).unwrap();
        if a != b {
            return Err(format!("{}: ({}) chamber {a} vs inversion {b}", s.descriptor(), s.format_tuple(&t)));
        }
    }
    Ok(format!("100000 tuples over {} types, n = 1..5", types.len()))
}

fn criterion_4() -> Outcome {
    for t in ["A3", "B3"] {
        let s = sys(t);
        let els = s.elements(usize::MAX).unwrap();
        for x in &els {
            let e1 = eps(&s, std::slice::from_ref(x));
            if e1 != (x.length() % 2) as i64 {
                return Err(format!("{t}: eps1({}) = {e1}", s.format_element(x)));
            }
        }
        for_all_tuples(&els, 2, |p| {
            let want = ((p[0].length() + p[1].length() - p[0].mul(&p[1]).length()) / 2) as i64;
            let got = eps(&s, p);
            if got != want {
                return Err(format!("{t}: eps2({}) = {got}, want {want}", s.format_tuple(p)));
            }
            Ok(())
        })?;
    }
    Ok("eps1 and eps2 closed forms hold on all A3 and B3 elements and pairs".into())
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for (t, m) in [("A3", 2usize), ("A5", 3usize)] {
        let s = sys(t);
        let n = 2 * m;
        let gens: Vec<usize> = (0..n - 1).collect();
        let c = s.element_of(&gens).unwrap();
        let cm = c.pow(m);
        let direct = eps(&s, &[cm.clone(), c.clone(), cm.clone()]);
        // each term of the expansion along C = s1 ⋯ s_{n-1}, against the descent rule
        let term = |j: usize| -> (i64, i64) {
            let x = cm.mul(&s.element_of(&gens[..j - 1]).unwrap());
            let sj = s.generator(j - 1).unwrap().clone();
            let z = s.element_of(&gens[j..]).unwrap().mul(&cm);
            let by_rule = (x.mul(&sj).length() < x.length() && sj.mul(&z).length() < z.length()) as i64;
            (eps(&s, &[x, sj, z]), by_rule)
        };
        let terms: Vec<(i64, i64)> = (1..n).map(term).collect();
        if terms.iter().any(|(a, b)| a != b) {
            return Err(format!("{t}: term values {terms:?} disagree with the descent rule"));
        }
        let sum: i64 = terms.iter().map(|p| p.0).sum::<i64>() % 2;
        let paired = (1..n).all(|j| terms[j - 1].0 == terms[n - j - 1].0);
        let middle = terms[m - 1].0;
        let lengths = [
            (cm.length(), m * m),
            (cm.mul(&s.element_of(&gens[..m - 1]).unwrap()).length(), m * m + m - 1),
            (s.element_of(&gens[m..]).unwrap().mul(&cm).length(), m * m + m - 1),
            (cm.mul(&s.element_of(&gens[..m]).unwrap()).length(), m * m + m - 2),
        ];
        if direct != 1 || sum != 1 || !paired || middle != 1 || lengths.iter().any(|(a, b)| a != b) {
            return Err(format!(
                "{t}: direct {direct}, expansion {sum}, paired {paired}, middle {middle}, lengths {lengths:?}"
            ));
        }
        notes.push(format!("S{n}: direct 1, single term 1"));
    }
    Ok(notes.join("; "))
}

fn suite(t: &str, suites: &str, n: usize, mode: SweepMode, expect_tuples: Option<u64>) -> Result<String, String> {
    let s = sys(t);
    let plan = VerifyPlan { suites: parse_suites(suites).unwrap(), n, mode, seed: 6, jobs: None };
    let r = run_verify(&s, &plan).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for rep in &r.suites {
        if !rep.passed() {
            return Err(format!("{t} {} n={n}: {:?}", rep.suite, rep.counterexamples));
        }
        if let Some(k) = expect_tuples {
            if rep.tuples != k {
                return Err(format!("{t} {} n={n}: {} tuples, expected {k}", rep.suite, rep.tuples));
            }
        }
        out.push(rep.tuples);
    }
    Ok(format!("{t}/{suites}/{n}:{}", out.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("+")))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=3 {
        notes.push(suite("B2", "cup", n, SweepMode::Exhaustive, Some(8u64.pow(n as u32)))?);
        notes.push(suite("A2", "seesaw", n, SweepMode::Exhaustive, Some(6u64.pow(n as u32 + 1)))?);
        notes.push(suite("A3", "seesaw", n, SweepMode::Sampled(3000), Some(3000))?);
    }
    for n in [1, 3] {
        notes.push(suite("A2", "bockstein", n, SweepMode::Exhaustive, Some(6u64.pow(n as u32 + 1)))?);
    }
    notes.push(suite("A3", "prop51", 3, SweepMode::Exhaustive, Some(24u64.pow(3)))?);
    notes.push(suite("B2", "prop51", 3, SweepMode::Exhaustive, Some(512))?);
    for n in [3, 4] {
        notes.push(suite("A3", "lemmas", n, SweepMode::Exhaustive, Some(24u64.pow(n as u32)))?);
    }
    Ok(notes.join(" "))
}

fn criterion_7() -> Outcome {
    Ok([
        suite("B2", "extension", 2, SweepMode::Sampled(10_000), Some(10_000))?,
        suite("A3", "extension", 2, SweepMode::Sampled(10_000), Some(10_000))?,
    ]
    .join(" "))
}

fn criterion_8() -> Outcome {
    // (type, [(subgroup, verdict)], coordinates of Omega)
    let table: [(&str, &[(&str, &str)], Option<&[u8]>); 12] = [
        ("A3", &[("Omega", "nontrivial"), ("<C^2>", "trivial")], None),
        ("A5", &[("Omega", "nontrivial"), ("<C^3>", "nontrivial"), ("<C^2>", "trivial")], None),
        ("B2", &[("Omega", "nontrivial")], None),
        ("B3", &[("Omega", "nontrivial")], None),
        ("C2", &[("Omega", "nontrivial")], None),
        ("C3", &[("Omega", "trivial")], None),
        ("C4", &[("Omega", "trivial")], None),
        ("C5", &[("Omega", "nontrivial")], None),
        (
            "D4",
            &[("Omega", "nontrivial"), ("<omega1>", "trivial"), ("<omega2>", "trivial"), ("<omega3>", "trivial")],
            Some(&[0, 1, 1, 0]),
        ),
        ("D5", &[("Omega", "nontrivial"), ("<omega^2>", "trivial")], None),
        (
            "D6",
            &[("Omega", "nontrivial"), ("<omega1>", "nontrivial"), ("<omega3>", "nontrivial"), ("<omega2>", "trivial")],
            Some(&[1, 0, 0, 1]),
        ),
        ("E7", &[("Omega", "nontrivial")], None),
    ];
    let shapes = [("A3", "Z/4"), ("A5", "Z/6"), ("D4", "Z/2xZ/2"), ("D5", "Z/4"), ("D6", "Z/2xZ/2"), ("E7", "Z/2")];
    let mut mismatches = Vec::new();
    let mut verdicts = 0;
    for (t, rows, coords) in table {
        let s = sys(t);
        let report = classify_restrictions(&s).map_err(|e| format!("{t}: {e}"))?;
        for (label, want) in rows {
            verdicts += 1;
            match report.subgroup(label) {
                Some(sub) if sub.verdict == *want => {}
                Some(sub) => mismatches.push(format!("{t} {label}: {} vs {want}", sub.verdict)),
                None => mismatches.push(format!("{t} {label}: missing")),
            }
        }
        if let Some(c) = coords {
            let got = report.subgroup("Omega").and_then(|x| x.coordinates.clone());
            if got.as_deref() != Some(c) {
                mismatches.push(format!("{t} coordinates {got:?} vs {c:?}"));
            }
        }
        if let Some((_, shape)) = shapes.iter().find(|(x, _)| *x == t) {
            if report.omega_shape != *shape {
                mismatches.push(format!("{t} shape {} vs {shape}", report.omega_shape));
            }
        }
        let exp = expectation_for(t).ok_or_else(|| format!("{t}: not in bundled table"))?;
        mismatches.extend(diff_against(&report, &exp).into_iter().map(|d| format!("{t} (bundled) {d}")));
    }
    if mismatches.is_empty() {
        Ok(format!("{verdicts} verdicts and 2 coordinate vectors match across 12 types"))
    } else {
        Err(mismatches.join("; "))
    }
}

fn criterion_9() -> Outcome {
    let dims = [
        cohomology_dimension(&SmallGroup::cyclic(2), 3),
        cohomology_dimension(&SmallGroup::cyclic(4), 3),
        cohomology_dimension(&SmallGroup::klein(), 3),
    ];
    if dims != [1, 1, 4] {
        return Err(format!("dim H^3 = {dims:?}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut cases = 0;
    for t in ["A1", "B2", "C3", "A3", "D4", "D6", "A5"] {
        let s = sys(t);
        let om = omega_of(&s).unwrap();
        let g = om.group();
        let c = restrict_cocycle(&s, 3, &om.elements).unwrap();
        let base = is_coboundary(&g, &c).unwrap().is_trivial();
        for _ in 0..100 {
            let e = g.identity();
            let lam = Cochain::from_fn(2, g.order(), |x| !x.contains(&e) && rng.gen_bool(0.5));
            let shifted = c.add(&delta(&g, &lam));
            if is_coboundary(&g, &shifted).unwrap().is_trivial() != base {
                return Err(format!("{t}: verdict changed under a coboundary"));
            }
        }
        cases += 1;
    }
    Ok(format!("dim H^3 = 1, 1, 4; verdicts stable under 100 coboundaries in {cases} cases"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("characterization", criterion_1, 60),
        ("cocycle condition", criterion_2, 90),
        ("backend agreement", criterion_3, 60),
        ("closed formulas", criterion_4, 10),
        ("Coxeter element computation", criterion_5, 5),
        ("structural identities", criterion_6, 120),
        ("extension associativity", criterion_7, 10),
        ("Omega classification", criterion_8, 120),
        ("solver self-consistency", criterion_9, 10),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= Duration::from_secs(budget) => ("PASS", d),
            Ok(d) => ("FAIL", format!("over the {budget} s budget; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {} ({name}) [{:.2} s]: {detail}", i + 1, elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
