//! Property sweeps over tuples of group elements.
//!
//! A sweep is exhaustive when `|W|^arity` is at most [`EXHAUSTIVE_LIMIT`]
//! (or when forced), and otherwise draws seeded samples. Sample `i` comes
//! from its own ChaCha stream, so reports do not depend on the number of
//! worker threads.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cocycle::{
    bockstein_check, coboundary, Coefficients, cup_power_mu, eval_epsilon, eval_z, extension_multiply, lift_z_tilde, Backend,
    CocycleError, ExtensionElement, HalfSpaceChain, SignValue, WallChain, F2,
};
use crate::coxeter::{CoxeterError, CoxeterSystem, GroupElement, Reflection};

pub const EXHAUSTIVE_LIMIT: u128 = 10_000_000;
/// Largest group whose elements are listed for uniform sampling.
pub const UNIFORM_SAMPLING_LIMIT: usize = 100_000;
pub const MAX_COUNTEREXAMPLES: usize = 10;
const CHUNK: u64 = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("exhaustive sweep of {0} tuples is too large")]
    TooLarge(String),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Cocycle,
    Collapsing,
    Normalization,
    Reversal,
    Backends,
    Cup,
    Seesaw,
    Bockstein,
    Triples,
    Lemmas,
    Automorphism,
    Extension,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Cocycle,
        Suite::Collapsing,
        Suite::Normalization,
        Suite::Reversal,
        Suite::Backends,
        Suite::Cup,
        Suite::Seesaw,
        Suite::Bockstein,
        Suite::Triples,
        Suite::Lemmas,
        Suite::Automorphism,
        Suite::Extension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cocycle => "cocycle",
            Suite::Collapsing => "collapsing",
            Suite::Normalization => "normalization",
            Suite::Reversal => "reversal",
            Suite::Backends => "backends",
            Suite::Cup => "cup",
            Suite::Seesaw => "seesaw",
            Suite::Bockstein => "bockstein",
            Suite::Triples => "prop51",
            Suite::Lemmas => "lemmas",
            Suite::Automorphism => "automorphism",
            Suite::Extension => "extension",
        }
    }

    /// `(degree, arity)` of the sweep for a requested degree `n`.
    fn shape(self, n: usize) -> (usize, usize) {
        match self {
            Suite::Cocycle | Suite::Seesaw => (n, n + 1),
            Suite::Bockstein => {
                let d = if n % 2 == 1 { n } else { n.saturating_sub(1).max(1) };
                (d, d + 1)
            }
            Suite::Triples => (3, 3),
            Suite::Extension => (2, 3),
            Suite::Normalization => (n.max(6), 1),
            _ => (n, n),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a suite name; `all` expands to every suite.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>, VerifyError> {
    if text == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    text.split(',').map(|s| s.trim().parse()).collect()
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Suite, VerifyError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Exhaustive below the limit, otherwise this many samples.
    Auto(usize),
    Exhaustive,
    Sampled(usize),
}

#[derive(Clone, Debug)]
pub struct VerifyPlan {
    pub suites: Vec<Suite>,
    pub n: usize,
    pub mode: SweepMode,
    pub seed: u64,
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub tuple: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub degree: usize,
    pub arity: usize,
    pub mode: &'static str,
    pub tuples: u64,
    pub violations: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub n: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

struct Violation {
    property: &'static str,
    detail: String,
}

type Found = Vec<Violation>;

fn expect(found: &mut Found, property: &'static str, ok: bool, detail: impl FnOnce() -> String) {
    if !ok {
        found.push(Violation { property, detail: detail() });
    }
}

fn product(ts: &[GroupElement], id: &GroupElement) -> GroupElement {
    ts.iter().fold(id.clone(), |acc, x| acc.mul(x))
}

fn eps(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<SignValue, CocycleError> {
    eval_epsilon(sys, t.len(), t, Backend::Chamber)
}

fn parity(v: SignValue) -> i64 {
    v.as_i64().rem_euclid(2)
}

/// Where sweep tuples come from.
enum Source {
    Elements(Vec<GroupElement>),
    Words,
}

struct Sweep<'a> {
    sys: &'a CoxeterSystem,
    source: Source,
    arity: usize,
    exhaustive: bool,
    count: u64,
    seed: u64,
    max_word: usize,
}

impl Sweep<'_> {
    fn tuple(&self, index: u64) -> Vec<GroupElement> {
        match (&self.source, self.exhaustive) {
            (Source::Elements(els), true) => {
                let k = els.len() as u64;
                let mut rest = index;
                let mut t: Vec<GroupElement> = (0..self.arity)
                    .map(|_| {
                        let d = rest % k;
                        rest /= k;
                        els[d as usize].clone()
                    })
                    .collect();
                t.reverse();
                t
            }
            (Source::Elements(els), false) => {
                let mut rng = self.rng(index);
                (0..self.arity).map(|_| els[rng.gen_range(0..els.len())].clone()).collect()
            }
            (Source::Words, _) => {
                let mut rng = self.rng(index);
                (0..self.arity)
                    .map(|_| {
                        let len = rng.gen_range(0..=self.max_word);
                        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..self.sys.rank())).collect();
                        self.sys.element_of(&word).expect("generators in range")
                    })
                    .collect()
            }
        }
    }

    fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

fn plan_sweep<'a>(
    sys: &'a CoxeterSystem,
    arity: usize,
    mode: SweepMode,
    seed: u64,
) -> Result<Sweep<'a>, VerifyError> {
    let order = sys.order() as u128;
    let total = order.checked_pow(arity as u32).unwrap_or(u128::MAX);
    let (exhaustive, samples) = match mode {
        SweepMode::Exhaustive => (true, 0),
        SweepMode::Auto(s) => (total <= EXHAUSTIVE_LIMIT, s),
        SweepMode::Sampled(s) => (false, s),
    };
    let listable = order <= UNIFORM_SAMPLING_LIMIT as u128;
    if exhaustive && (!listable || total > u64::MAX as u128) {
        return Err(VerifyError::TooLarge(format!("{}^{arity}", sys.order())));
    }
    let source = if listable {
        Source::Elements(sys.elements(UNIFORM_SAMPLING_LIMIT)?)
    } else {
        Source::Words
    };
    Ok(Sweep {
        sys,
        source,
        arity,
        exhaustive,
        count: if exhaustive { total as u64 } else { samples as u64 },
        seed,
        max_word: 2 * sys.num_positive(),
    })
}

/// Runs the suites in `plan` against `sys`.
pub fn run_verify(sys: &CoxeterSystem, plan: &VerifyPlan) -> Result<VerifyReport, VerifyError> {
    if plan.n == 0 {
        return Err(VerifyError::ZeroDegree);
    }
    let work = || -> Result<Vec<SuiteReport>, VerifyError> {
        plan.suites.iter().map(|&s| run_suite(sys, s, plan)).collect()
    };
    let suites = match plan.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| VerifyError::Pool(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    Ok(VerifyReport { type_name: sys.descriptor().to_string(), n: plan.n, seed: plan.seed, suites })
}

struct ChunkResult {
    tuples: u64,
    violations: u64,
    examples: Vec<Counterexample>,
}

fn run_suite(sys: &CoxeterSystem, suite: Suite, plan: &VerifyPlan) -> Result<SuiteReport, VerifyError> {
    let (degree, arity) = suite.shape(plan.n);
    if suite == Suite::Normalization {
        return normalization(sys, degree);
    }
    let sweep = plan_sweep(sys, arity, plan.mode, plan.seed ^ suite_salt(suite))?;
    let autos = if suite == Suite::Automorphism { sys.diagram_automorphisms() } else { Vec::new() };
    let check = |t: &[GroupElement], rng: &mut ChaCha8Rng| -> Result<Found, CocycleError> {
        match suite {
            Suite::Cocycle => check_cocycle(sys, degree, t),
            Suite::Collapsing => check_collapsing(sys, t),
            Suite::Reversal => check_reversal(sys, t),
            Suite::Backends => check_backends(sys, t),
            Suite::Cup => check_cup(sys, t),
            Suite::Seesaw => check_seesaw(sys, degree, t),
            Suite::Bockstein => check_bockstein(sys, degree, t),
            Suite::Triples => check_triples(sys, t),
            Suite::Lemmas => check_lemmas(sys, t),
            Suite::Automorphism => check_automorphisms(sys, &autos, t),
            Suite::Extension => check_extension(sys, t, rng),
            Suite::Normalization => unreachable!(),
        }
    };
    let chunks = sweep.count.div_ceil(CHUNK);
    let results: Vec<Result<ChunkResult, CocycleError>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut out = ChunkResult { tuples: 0, violations: 0, examples: Vec::new() };
            for i in c * CHUNK..((c + 1) * CHUNK).min(sweep.count) {
                let t = sweep.tuple(i);
                let mut rng = sweep.rng(i ^ (1 << 63));
                let found = check(&t, &mut rng)?;
                out.tuples += 1;
                out.violations += found.len() as u64;
                for v in found {
                    if out.examples.len() < MAX_COUNTEREXAMPLES {
                        out.examples.push(Counterexample {
                            property: v.property.to_string(),
                            tuple: sys.format_tuple(&t),
                            detail: v.detail,
                        });
                    }
                }
            }
            Ok(out)
        })
        .collect();
    let mut report = SuiteReport {
        suite,
        degree,
        arity,
        mode: if sweep.exhaustive { "exhaustive" } else { "sampled" },
        tuples: 0,
        violations: 0,
        counterexamples: Vec::new(),
    };
    for r in results {
        let r = r?;
        report.tuples += r.tuples;
        report.violations += r.violations;
        let room = MAX_COUNTEREXAMPLES - report.counterexamples.len();
        report.counterexamples.extend(r.examples.into_iter().take(room));
    }
    Ok(report)
}

fn suite_salt(suite: Suite) -> u64 {
    (Suite::ALL.iter().position(|&s| s == suite).unwrap() as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn normalization(sys: &CoxeterSystem, max_degree: usize) -> Result<SuiteReport, VerifyError> {
    let mut report = SuiteReport {
        suite: Suite::Normalization,
        degree: max_degree,
        arity: 1,
        mode: "exhaustive",
        tuples: 0,
        violations: 0,
        counterexamples: Vec::new(),
    };
    for s in sys.generators() {
        for n in 1..=max_degree {
            let t = vec![s.clone(); n];
            report.tuples += 1;
            let v = eps(sys, &t)?;
            if v.as_i64() != 1 {
                report.violations += 1;
                if report.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    report.counterexamples.push(Counterexample {
                        property: "eps(s,...,s) = 1".into(),
                        tuple: sys.format_tuple(&t),
                        detail: format!("got {v}"),
                    });
                }
            }
        }
    }
    Ok(report)
}

fn check_cocycle(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let dz: HalfSpaceChain = coboundary(sys, n, |u| eval_z(sys, n, u), t)?;
    expect(&mut found, "delta Z = 0", dz.is_zero(), || dz.to_string());
    if n % 2 == 0 {
        let de: i64 = coboundary(sys, n, |u| Ok(eps(sys, u)?.as_i64()), t)?;
        expect(&mut found, "delta eps = 0", de == 0, || de.to_string());
    } else {
        let de: F2 = coboundary(sys, n, |u| Ok(F2(eps(sys, u)?.as_i64() == 1)), t)?;
        expect(&mut found, "delta eps = 0", !de.0, || "1".into());
    }
    Ok(found)
}

fn has_additive_pair(t: &[GroupElement]) -> bool {
    t.windows(2).any(|p| p[0].mul(&p[1]).length() == p[0].length() + p[1].length())
}

fn check_collapsing(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    if has_additive_pair(t) {
        let z = eval_z(sys, t.len(), t)?;
        expect(&mut found, "collapsing Z", z.is_zero(), || z.to_string());
        let e = eps(sys, t)?;
        expect(&mut found, "collapsing eps", e.is_zero(), || e.to_string());
    }
    Ok(found)
}

fn check_reversal(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let rev: Vec<GroupElement> = t.iter().rev().map(GroupElement::inverse).collect();
    let (a, b) = (eps(sys, t)?, eps(sys, &rev)?);
    expect(&mut found, "reversal", a == b, || format!("{a} vs {b}"));
    Ok(found)
}

fn check_backends(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let a = eval_epsilon(sys, t.len(), t, Backend::Chamber)?;
    let b = eval_epsilon(sys, t.len(), t, Backend::Inversion)?;
    expect(&mut found, "chamber = inversion", a == b, || format!("chamber {a}, inversion {b}"));
    Ok(found)
}

fn check_cup(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let n = t.len();
    let z = eval_z(sys, n, t)?;
    let cup = cup_power_mu(sys, n, t)?;
    expect(&mut found, "cup power = Z", cup == z, || format!("cup {cup}, Z {z}"));
    let sym = if n % 2 == 0 { z.is_plus_part() } else { z.is_minus_part() };
    expect(&mut found, "Z symmetry", sym, || z.to_string());
    Ok(found)
}

fn check_seesaw(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let lhs: HalfSpaceChain = coboundary(sys, n, |u| lift_z_tilde(sys, n, u), t)?;
    let mut sum = lhs.clone();
    sum.add_signed(&eval_z(sys, n + 1, t)?, 1);
    expect(&mut found, "delta lift = -Z_(n+1)", sum.is_zero(), || format!("delta lift {lhs}"));
    let head = &t[..n];
    let lift = lift_z_tilde(sys, n, head)?;
    let proj = if n % 2 == 1 { lift.p_minus() } else { lift.p_plus() };
    let z = eval_z(sys, n, head)?;
    expect(&mut found, "projection of lift = Z", proj == z, || format!("{proj} vs {z}"));
    Ok(found)
}

fn check_bockstein(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let b = bockstein_check(sys, n, t)?;
    expect(&mut found, "bockstein", b.holds(), || format!("lhs {}, rhs {}", b.lhs, b.rhs));
    Ok(found)
}

fn half_defect(x: &GroupElement, y: &GroupElement) -> i64 {
    ((x.length() + y.length() - x.mul(y).length()) / 2 % 2) as i64
}

fn check_triples(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let (x, y, z) = (&t[0], &t[1], &t[2]);
    let e3 = |a: &GroupElement, b: &GroupElement, c: &GroupElement| -> Result<i64, CocycleError> {
        Ok(parity(eps(sys, &[a.clone(), b.clone(), c.clone()])?))
    };
    for (i, s) in sys.generators().iter().enumerate() {
        let want = (x.mul(s).length() < x.length() && s.mul(z).length() < z.length()) as i64;
        let got = e3(x, s, z)?;
        expect(&mut found, "simple middle entry", got == want, || format!("s{}: got {got}, want {want}", i + 1));
    }
    let whole = e3(x, y, z)?;
    let word = sys.reduced_word(y);
    let mut sum = 0;
    for j in 0..word.len() {
        let pre = x.mul(&sys.element_of(&word[..j])?);
        let post = sys.element_of(&word[j + 1..])?.mul(z);
        sum += e3(&pre, sys.generator(word[j])?, &post)?;
    }
    expect(&mut found, "middle expansion", sum % 2 == whole, || format!("sum {sum}, direct {whole}"));
    let closing = x.mul(y).inverse();
    let v = e3(x, y, &closing)?;
    expect(&mut found, "xyz = 1 vanishing", v == 0, || format!("got {v}"));
    let v = e3(&y.inverse(), y, z)?;
    let want = half_defect(y, z);
    expect(&mut found, "eps(y^-1,y,z)", v == want, || format!("got {v}, want {want}"));
    let v = e3(x, y, &y.inverse())?;
    let want = half_defect(x, y);
    expect(&mut found, "eps(x,y,y^-1)", v == want, || format!("got {v}, want {want}"));
    let v = e3(x, &x.inverse(), x)?;
    let want = (x.length() % 2) as i64;
    expect(&mut found, "eps(x,x^-1,x)", v == want, || format!("got {v}, want {want}"));
    let w = x.mul(y).mul(z).inverse();
    let rotations = [e3(y, z, &w)?, e3(z, &w, x)?, e3(&w, x, y)?];
    expect(&mut found, "rotation", rotations.iter().all(|&r| r == whole), || {
        format!("{whole} vs {rotations:?}")
    });
    Ok(found)
}

fn check_lemmas(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let n = t.len();
    let id = sys.identity();
    // odd window: x_j ⋯ x_{j+ℓ-1} = 1
    for l in (1..=n).step_by(2) {
        for j in 0..=n - l {
            let mut u = t.to_vec();
            u[j + l - 1] = product(&t[j..j + l - 1], &id).inverse();
            let z = eval_z(sys, n, &u)?;
            expect(&mut found, "odd window vanishing", z.is_zero(), || {
                format!("window {}..{} in {}: {z}", j + 1, j + l, sys.format_tuple(&u))
            });
        }
    }
    // even head/tail window
    if n >= 2 {
        for l in (2..=n).step_by(2) {
            let mut u = t.to_vec();
            u[l - 1] = product(&t[..l - 1], &id).inverse();
            let (a, b) = (parity(eps(sys, &u)?), parity(eps(sys, &u[1..])?));
            expect(&mut found, "even head window", a == b, || format!("l={l} in {}: {a} vs {b}", sys.format_tuple(&u)));
            let mut u = t.to_vec();
            u[n - l] = product(&t[n - l + 1..], &id).inverse();
            let (a, b) = (parity(eps(sys, &u)?), parity(eps(sys, &u[..n - 1])?));
            expect(&mut found, "even tail window", a == b, || format!("l={l} in {}: {a} vs {b}", sys.format_tuple(&u)));
        }
    }
    // expansion along a reduced word of x_i
    let whole = eps(sys, t)?;
    for i in 0..n {
        let word = sys.reduced_word(&t[i]);
        let mut sum = 0i64;
        for j in 0..word.len() {
            let mut u: Vec<GroupElement> = Vec::with_capacity(n);
            let pre = sys.element_of(&word[..j])?;
            let post = sys.element_of(&word[j + 1..])?;
            u.extend_from_slice(&t[..i]);
            if i > 0 {
                u[i - 1] = u[i - 1].mul(&pre);
            }
            u.push(sys.generator(word[j])?.clone());
            if i + 1 < n {
                u.push(post.mul(&t[i + 1]));
                u.extend_from_slice(&t[i + 2..]);
            }
            sum += eps(sys, &u)?.as_i64();
        }
        let ok = match whole {
            SignValue::Int(v) => v == sum,
            SignValue::F2(b) => b as i64 == sum.rem_euclid(2),
        };
        expect(&mut found, "reduced-word expansion", ok, || format!("entry {}: sum {sum}, direct {whole}", i + 1));
    }
    Ok(found)
}

fn check_automorphisms(
    sys: &CoxeterSystem,
    autos: &[crate::coxeter::DiagramAutomorphism],
    t: &[GroupElement],
) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let base = eps(sys, t)?;
    for (k, a) in autos.iter().enumerate().skip(1) {
        let u: Vec<GroupElement> = t.iter().map(|x| a.apply(sys, x)).collect();
        let v = eps(sys, &u)?;
        expect(&mut found, "automorphism invariance", v == base, || format!("automorphism {k}: {v} vs {base}"));
    }
    Ok(found)
}

fn random_wall_chain(sys: &CoxeterSystem, rng: &mut ChaCha8Rng) -> WallChain {
    let mut c = WallChain::zero();
    for _ in 0..rng.gen_range(0..4) {
        let t = Reflection(rng.gen_range(0..sys.num_positive()));
        c.add_term(t, rng.gen_range(-3..=3));
    }
    c
}

fn check_extension(sys: &CoxeterSystem, t: &[GroupElement], rng: &mut ChaCha8Rng) -> Result<Found, CocycleError> {
    let mut found = Found::new();
    let [p, q, r] = [0, 1, 2].map(|i| ExtensionElement::new(random_wall_chain(sys, rng), t[i].clone()));
    let left = extension_multiply(sys, &extension_multiply(sys, &p, &q)?, &r)?;
    let right = extension_multiply(sys, &p, &extension_multiply(sys, &q, &r)?)?;
    expect(&mut found, "associativity", left == right, || {
        format!("{} vs {}", left.to_json(sys), right.to_json(sys))
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(suites: &str, n: usize, mode: SweepMode) -> VerifyPlan {
        VerifyPlan { suites: parse_suites(suites).unwrap(), n, mode, seed: 7, jobs: None }
    }

    #[test]
    fn exhaustive_counts() {
        let a2 = CoxeterSystem::build("A2").unwrap();
        let r = run_verify(&a2, &plan("cocycle", 2, SweepMode::Exhaustive)).unwrap();
        assert!(r.passed());
        assert_eq!(r.suites[0].tuples, 216);
        assert_eq!(r.suites[0].mode, "exhaustive");
    }

    #[test]
    fn sampling_is_deterministic_across_jobs() {
        let b3 = CoxeterSystem::build("B3").unwrap();
        let mut p = plan("backends,reversal", 3, SweepMode::Sampled(3000));
        let a = run_verify(&b3, &p).unwrap();
        p.jobs = Some(1);
        let b = run_verify(&b3, &p).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.suites[0].tuples, 3000);
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(parse_suites("cocycles"), Err(VerifyError::UnknownSuite("cocycles".into())));
        assert_eq!(parse_suites("all").unwrap().len(), Suite::ALL.len());
    }

    #[test]
    fn word_sampling_for_large_groups() {
        let e7 = CoxeterSystem::build("E7").unwrap();
        let r = run_verify(&e7, &plan("backends", 2, SweepMode::Auto(20))).unwrap();
        assert!(r.passed());
        assert_eq!(r.suites[0].mode, "sampled");
        assert!(matches!(run_verify(&e7, &plan("backends", 2, SweepMode::Exhaustive)), Err(VerifyError::TooLarge(_))));
    }
}
