//! The universal collapsing cocycles `Z_n`, the higher signs `ε_n` and their
//! orbit refinements, the lift `Z̃_n`, and the extension `W^#`.
//!
//! Chambers are never materialized. The chamber `wC₀` lies in `D⁺_{H_α}`
//! exactly when `w⁻¹α` is a positive root, so every side test is a root
//! sign lookup.

mod chain;
mod extension;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, GroupElement, Reflection};

pub use chain::{root_json, Coefficients, HalfSpaceChain, OrbitChain, Side, WallChain, F2};
pub use extension::{extension_multiply, ExtensionElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("expected a tuple of {expected} elements, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("the Bockstein check needs odd n, got {0}")]
    EvenDegree(usize),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// Value of `ε_n`: an integer for even `n`, an `F₂` bit for odd `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignValue {
    Int(i64),
    F2(bool),
}

impl SignValue {
    /// The value for `count` alternating walls in degree `n`.
    pub fn from_count(n: usize, count: usize) -> SignValue {
        if n % 2 == 0 {
            SignValue::Int(count as i64)
        } else {
            SignValue::F2(count % 2 == 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignValue::Int(0) | SignValue::F2(false))
    }

    pub fn as_i64(&self) -> i64 {
        match *self {
            SignValue::Int(v) => v,
            SignValue::F2(b) => b as i64,
        }
    }
}

impl fmt::Display for SignValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i64())
    }
}

/// How `ε_n` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Count walls for which the chamber sequence alternates.
    Chamber,
    /// Intersect translated inversion sets `x₁⋯x_{i-1}·T_{x_i}`.
    Inversion,
}

impl FromStr for Backend {
    type Err = String;
    fn from_str(s: &str) -> Result<Backend, String> {
        match s {
            "chamber" => Ok(Backend::Chamber),
            "inversion" => Ok(Backend::Inversion),
            _ => Err(format!("unknown backend `{s}` (expected chamber or inversion)")),
        }
    }
}

fn check_tuple(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<(), CocycleError> {
    if n == 0 {
        return Err(CocycleError::ZeroDegree);
    }
    if t.len() != n {
        return Err(CocycleError::Arity { expected: n, got: t.len() });
    }
    if let Some(x) = t.iter().find(|x| !sys.owns(x)) {
        sys.compose(x, x)?;
    }
    Ok(())
}

/// Positive roots `α` such that `(C₀, C₁, …, C_n)` alternates across `H_α`,
/// with `C_i = x₁⋯x_i C₀`. No ownership or arity checks.
pub(crate) fn alternating_roots(sys: &CoxeterSystem, t: &[GroupElement]) -> Vec<usize> {
    let invs: Vec<GroupElement> = t.iter().map(|x| x.inverse()).collect();
    let mut out = Vec::new();
    'walls: for a in 0..sys.num_positive() {
        // r_i = (x₁⋯x_i)⁻¹ α; sides alternate iff the sign flips every step
        let mut r = a;
        let mut pos = true;
        for inv in &invs {
            r = inv.apply(r);
            let p = sys.is_positive(r);
            if p == pos {
                continue 'walls;
            }
            pos = p;
        }
        out.push(a);
    }
    out
}

/// Number of alternating walls; the chamber-backend count behind `ε_n`.
pub(crate) fn alternating_count(sys: &CoxeterSystem, t: &[GroupElement]) -> usize {
    alternating_roots(sys, t).len()
}

fn inversion_count(sys: &CoxeterSystem, t: &[GroupElement]) -> usize {
    let npos = sys.num_positive();
    let mut alive = vec![true; npos];
    let mut prefix = sys.identity();
    for x in t {
        let mut mark = vec![false; npos];
        for r in sys.inversion_set(x) {
            mark[sys.conjugate_reflection(&prefix, r).0] = true;
        }
        for (a, m) in alive.iter_mut().zip(mark) {
            *a &= m;
        }
        prefix = prefix.mul(x);
    }
    alive.into_iter().filter(|&a| a).count()
}

/// Walls `H` for which `(C₀, …, C_n)` is `H`-alternating.
pub fn alternating_walls(sys: &CoxeterSystem, t: &[GroupElement]) -> Result<Vec<Reflection>, CocycleError> {
    check_tuple(sys, t.len().max(1), t)?;
    Ok(alternating_roots(sys, t).into_iter().map(Reflection).collect())
}

fn sign_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Z_n(x₁, …, x_n) = Σ_H (-1)^⌊n/2⌋ [D⁺_H] + (-1)^⌊(n+1)/2⌋ [D⁻_H]` over
/// alternating walls.
pub fn eval_z(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<HalfSpaceChain, CocycleError> {
    check_tuple(sys, n, t)?;
    let mut z = HalfSpaceChain::zero();
    for a in alternating_roots(sys, t) {
        z.add_term(Reflection(a), Side::Plus, sign_pow(n / 2));
        z.add_term(Reflection(a), Side::Minus, sign_pow((n + 1) / 2));
    }
    Ok(z)
}

/// `Z₁(w) = Σ ([D⁺_H] − [D⁻_H])` over walls separating `C₀` and `wC₀`.
pub fn z1(sys: &CoxeterSystem, w: &GroupElement) -> Result<HalfSpaceChain, CocycleError> {
    eval_z(sys, 1, std::slice::from_ref(w))
}

pub fn eval_epsilon(sys: &CoxeterSystem, n: usize, t: &[GroupElement], backend: Backend) -> Result<SignValue, CocycleError> {
    check_tuple(sys, n, t)?;
    let count = match backend {
        Backend::Chamber => alternating_count(sys, t),
        Backend::Inversion => inversion_count(sys, t),
    };
    Ok(SignValue::from_count(n, count))
}

/// Orbit refinement `ε̃_n`: each alternating wall contributes `+1` to the
/// coordinate of its W-orbit (reduced mod 2 for odd `n`).
pub fn eval_epsilon_tilde(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<OrbitChain, CocycleError> {
    check_tuple(sys, n, t)?;
    let mut c = OrbitChain::zero(n % 2 == 1);
    for a in alternating_roots(sys, t) {
        c.add_term(sys.orbit_label(Reflection(a)), 1);
    }
    Ok(c)
}

/// `μ_n(Z₁^{∪n})(x₁, …, x_n) = Z₁(x₁) · x₁Z₁(x₂) ⋯ x₁⋯x_{n-1}Z₁(x_n)` in the
/// ring of orthogonal idempotents `[D]`.
pub fn cup_power_mu(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<HalfSpaceChain, CocycleError> {
    check_tuple(sys, n, t)?;
    let mut acc = z1(sys, &t[0])?;
    let mut prefix = t[0].clone();
    for x in &t[1..] {
        acc = acc.idempotent_mul(&z1(sys, x)?.act(sys, &prefix));
        prefix = prefix.mul(x);
    }
    Ok(acc)
}

/// `Z̃_n = Σ_H (-1)^⌊n/2⌋ [D⁺_H]`, the plus-side lift of `Z_n`.
pub fn lift_z_tilde(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<HalfSpaceChain, CocycleError> {
    check_tuple(sys, n, t)?;
    let mut z = HalfSpaceChain::zero();
    for a in alternating_roots(sys, t) {
        z.add_term(Reflection(a), Side::Plus, sign_pow(n / 2));
    }
    Ok(z)
}

/// Inhomogeneous coboundary of an `n`-cochain `f` at an `(n+1)`-tuple:
/// `x₁f(x₂, …) + Σ_j (-1)^j f(…, x_j x_{j+1}, …) + (-1)^{n+1} f(x₁, …, x_n)`.
pub fn coboundary<M, F>(sys: &CoxeterSystem, n: usize, f: F, t: &[GroupElement]) -> Result<M, CocycleError>
where
    M: Coefficients,
    F: Fn(&[GroupElement]) -> Result<M, CocycleError>,
{
    check_tuple(sys, n + 1, t)?;
    let mut acc = f(&t[1..])?.act(sys, &t[0]);
    let mut merged: Vec<GroupElement> = Vec::with_capacity(n);
    for j in 1..=n {
        merged.clear();
        merged.extend_from_slice(&t[..j - 1]);
        merged.push(t[j - 1].mul(&t[j]));
        merged.extend_from_slice(&t[j + 1..]);
        acc.add_signed(&f(&merged)?, sign_pow(j));
    }
    acc.add_signed(&f(&t[..n])?, sign_pow(n + 1));
    Ok(acc)
}

/// Both sides of the cochain-level Bockstein identity
/// `δ(θ_{n+1} ∘ Z̃_n) = −2 ε_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BocksteinCheck {
    pub lhs: i64,
    pub rhs: i64,
}

impl BocksteinCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `θ_{n+1}` sends every `[D]` to `(-1)^{(n+1)/2}`; it is W-invariant, so
/// `θ ∘ Z̃_n` is an integer cochain with trivial action.
pub fn bockstein_check(sys: &CoxeterSystem, n: usize, t: &[GroupElement]) -> Result<BocksteinCheck, CocycleError> {
    if n % 2 == 0 {
        return Err(CocycleError::EvenDegree(n));
    }
    check_tuple(sys, n + 1, t)?;
    let theta = sign_pow((n + 1) / 2);
    let lhs = coboundary(sys, n, |u| Ok(theta * lift_z_tilde(sys, n, u)?.total()), t)?;
    let rhs = -2 * alternating_count(sys, t) as i64;
    Ok(BocksteinCheck { lhs, rhs })
}
