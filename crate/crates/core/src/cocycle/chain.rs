//! Coefficient modules: `ℤ[𝒟]`, `ℤ[𝓗]`, orbit chains, and the trivial
//! modules `ℤ` and `F₂`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, FactorModel, GroupElement, Reflection};

/// Which of the two half-spaces bounded by a wall: `Plus` contains the
/// fundamental chamber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// A W-module used as coefficients for inhomogeneous cochains.
pub trait Coefficients: Clone {
    /// `w · self`.
    fn act(&self, sys: &CoxeterSystem, w: &GroupElement) -> Self;
    /// `self += sign · other`, with `sign = ±1`.
    fn add_signed(&mut self, other: &Self, sign: i64);
    fn is_zero(&self) -> bool;
}

impl Coefficients for i64 {
    fn act(&self, _: &CoxeterSystem, _: &GroupElement) -> i64 {
        *self
    }
    fn add_signed(&mut self, other: &i64, sign: i64) {
        *self += sign * other;
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

/// An element of `F₂`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct F2(pub bool);

impl Coefficients for F2 {
    fn act(&self, _: &CoxeterSystem, _: &GroupElement) -> F2 {
        *self
    }
    fn add_signed(&mut self, other: &F2, _: i64) {
        self.0 ^= other.0;
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

/// A finitely supported element of `ℤ[𝒟]`, keyed by (positive root, side).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfSpaceChain {
    coeffs: BTreeMap<(usize, Side), i64>,
}

impl HalfSpaceChain {
    pub fn zero() -> HalfSpaceChain {
        HalfSpaceChain::default()
    }

    /// `[D^side_H]` for the wall of `t`.
    pub fn basis(t: Reflection, side: Side) -> HalfSpaceChain {
        let mut c = HalfSpaceChain::zero();
        c.add_term(t, side, 1);
        c
    }

    pub fn add_term(&mut self, t: Reflection, side: Side, c: i64) {
        let e = self.coeffs.entry((t.0, side)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&(t.0, side));
        }
    }

    pub fn coefficient(&self, t: Reflection, side: Side) -> i64 {
        self.coeffs.get(&(t.0, side)).copied().unwrap_or(0)
    }

    /// Nonzero terms in (root, side) order.
    pub fn terms(&self) -> impl Iterator<Item = (Reflection, Side, i64)> + '_ {
        self.coeffs.iter().map(|(&(r, s), &c)| (Reflection(r), s, c))
    }

    /// Walls carrying a nonzero coefficient on either side.
    pub fn walls(&self) -> Vec<Reflection> {
        let mut w: Vec<Reflection> = self.coeffs.keys().map(|&(r, _)| Reflection(r)).collect();
        w.dedup();
        w
    }

    /// Invariant under σ: equal coefficients on both sides of every wall.
    pub fn is_plus_part(&self) -> bool {
        self.walls()
            .into_iter()
            .all(|t| self.coefficient(t, Side::Plus) == self.coefficient(t, Side::Minus))
    }

    /// Anti-invariant under σ.
    pub fn is_minus_part(&self) -> bool {
        self.walls()
            .into_iter()
            .all(|t| self.coefficient(t, Side::Plus) == -self.coefficient(t, Side::Minus))
    }

    /// `σ`: swaps the two sides of every wall.
    pub fn sigma(&self) -> HalfSpaceChain {
        HalfSpaceChain { coeffs: self.coeffs.iter().map(|(&(r, s), &c)| ((r, s.flip()), c)).collect() }
    }

    /// `p^±(a) = a ± σ(a)`.
    pub fn p_plus(&self) -> HalfSpaceChain {
        let mut out = self.clone();
        out.add_signed(&self.sigma(), 1);
        out
    }

    pub fn p_minus(&self) -> HalfSpaceChain {
        let mut out = self.clone();
        out.add_signed(&self.sigma(), -1);
        out
    }

    /// Product in the ring where the `[D]` are orthogonal idempotents.
    pub fn idempotent_mul(&self, other: &HalfSpaceChain) -> HalfSpaceChain {
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(k, &a)| other.coeffs.get(k).map(|&b| (*k, a * b)))
            .collect();
        HalfSpaceChain { coeffs }
    }

    /// Sum of all coefficients, i.e. the linear map sending every `[D]` to 1.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Folds an element of `ℤ[𝒟]⁺` into `ℤ[𝓗]` via `[D⁺_H] + [D⁻_H] ↦ [H]`.
    /// Returns `None` when the chain is not σ-invariant.
    pub fn fold(&self) -> Option<WallChain> {
        if !self.is_plus_part() {
            return None;
        }
        let mut w = WallChain::zero();
        for (t, side, c) in self.terms() {
            if side == Side::Plus {
                w.add_term(t, c);
            }
        }
        Some(w)
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        let mut walls: Vec<(String, Value)> = self
            .walls()
            .into_iter()
            .map(|t| {
                let root = root_json(sys, t.0);
                let key = root.to_string();
                (
                    key,
                    json!({
                        "root": root,
                        "plus": self.coefficient(t, Side::Plus),
                        "minus": self.coefficient(t, Side::Minus),
                    }),
                )
            })
            .collect();
        walls.sort_by(|a, b| a.0.cmp(&b.0));
        json!({ "walls": walls.into_iter().map(|(_, v)| v).collect::<Vec<_>>() })
    }
}

impl Coefficients for HalfSpaceChain {
    /// `w·[D^±_{H_α}] = [D^{±ν}_{H_β}]` with `β = ±wα` positive and `ν = +`
    /// exactly when `wα` is positive.
    fn act(&self, sys: &CoxeterSystem, w: &GroupElement) -> HalfSpaceChain {
        let mut out = HalfSpaceChain::zero();
        for (t, side, c) in self.terms() {
            let img = w.apply(t.0);
            let (beta, s) = if sys.is_positive(img) { (img, side) } else { (sys.negate(img), side.flip()) };
            out.add_term(Reflection(beta), s, c);
        }
        out
    }

    fn add_signed(&mut self, other: &HalfSpaceChain, sign: i64) {
        for (t, side, c) in other.terms() {
            self.add_term(t, side, sign * c);
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for HalfSpaceChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(t, s, c)| format!("{c}[D{}_{}]", if s == Side::Plus { "+" } else { "-" }, t.0))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finitely supported element of `ℤ[𝓗]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WallChain {
    coeffs: BTreeMap<usize, i64>,
}

impl WallChain {
    pub fn zero() -> WallChain {
        WallChain::default()
    }

    pub fn add_term(&mut self, t: Reflection, c: i64) {
        let e = self.coeffs.entry(t.0).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&t.0);
        }
    }

    pub fn coefficient(&self, t: Reflection) -> i64 {
        self.coeffs.get(&t.0).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Reflection, i64)> + '_ {
        self.coeffs.iter().map(|(&r, &c)| (Reflection(r), c))
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        let mut walls: Vec<(String, Value)> = self
            .terms()
            .map(|(t, c)| {
                let root = root_json(sys, t.0);
                (root.to_string(), json!({ "root": root, "coeff": c }))
            })
            .collect();
        walls.sort_by(|a, b| a.0.cmp(&b.0));
        json!({ "walls": walls.into_iter().map(|(_, v)| v).collect::<Vec<_>>() })
    }
}

impl Coefficients for WallChain {
    fn act(&self, sys: &CoxeterSystem, w: &GroupElement) -> WallChain {
        let mut out = WallChain::zero();
        for (t, c) in self.terms() {
            out.add_term(sys.conjugate_reflection(w, t), c);
        }
        out
    }

    fn add_signed(&mut self, other: &WallChain, sign: i64) {
        for (t, c) in other.terms() {
            self.add_term(t, sign * c);
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// A finitely supported function on wall orbits, valued in `ℤ` or `F₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitChain {
    f2: bool,
    coeffs: BTreeMap<usize, i64>,
}

impl OrbitChain {
    pub fn zero(f2: bool) -> OrbitChain {
        OrbitChain { f2, coeffs: BTreeMap::new() }
    }

    pub fn is_f2(&self) -> bool {
        self.f2
    }

    /// Adds `c` to the coordinate of the orbit labelled `label`.
    pub fn add_term(&mut self, label: usize, c: i64) {
        let e = self.coeffs.entry(label).or_insert(0);
        *e += c;
        if self.f2 {
            *e = e.rem_euclid(2);
        }
        if *e == 0 {
            self.coeffs.remove(&label);
        }
    }

    pub fn coefficient(&self, label: usize) -> i64 {
        self.coeffs.get(&label).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&l, &c)| (l, c))
    }

    /// Image under the map collapsing all orbits to one point.
    pub fn total(&self) -> i64 {
        let t: i64 = self.coeffs.values().sum();
        if self.f2 {
            t.rem_euclid(2)
        } else {
            t
        }
    }

    pub fn to_json(&self) -> Value {
        let orbits: Vec<Value> = self
            .terms()
            .map(|(l, c)| json!({ "orbit": format!("s{}", l + 1), "value": c }))
            .collect();
        json!({ "field": if self.f2 { "F2" } else { "Z" }, "orbits": orbits })
    }
}

impl Coefficients for OrbitChain {
    fn act(&self, _: &CoxeterSystem, _: &GroupElement) -> OrbitChain {
        self.clone()
    }

    fn add_signed(&mut self, other: &OrbitChain, sign: i64) {
        for (l, c) in other.terms() {
            self.add_term(l, sign * c);
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for OrbitChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(l, c)| format!("{c}[s{}]", l + 1)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coordinates of a positive root in the global simple-root basis. Integer
/// entries are JSON numbers; golden entries are strings such as `"1+φ"`;
/// dihedral entries `sin(kπ/m)/sin(π/m)` are written symbolically.
pub fn root_json(sys: &CoxeterSystem, root: usize) -> Value {
    let fi = sys.factor_of_root(root);
    let f = &sys.factors[fi];
    let mut coords = vec![json!(0); sys.rank()];
    match &f.model {
        FactorModel::Scalar { .. } => {
            let c = sys.root_coordinates(root).expect("scalar factor has coordinates");
            for (k, x) in c.iter().enumerate() {
                coords[f.gen_offset + k] = match x.to_i64() {
                    Some(i) => json!(i),
                    None => json!(x.to_string()),
                };
            }
        }
        FactorModel::Dihedral { m } => {
            // local root k sits at angle index j: 0, m-1, 1, ..., m-2, and equals
            // U_j α₁ + U_{j-1} α₂ with U_j = sin((j+1)π/m)/sin(π/m)
            let local = f.positive.iter().position(|&g| g == root).unwrap();
            let j = match local {
                0 => 0,
                1 => m - 1,
                k => k - 1,
            };
            let u = |k: usize| -> Value {
                // U_{k-1} in terms of sin(kπ/m)
                if k == 0 || k == *m {
                    json!(0)
                } else if k == 1 || k == m - 1 {
                    json!(1)
                } else {
                    json!(format!("sin({k}π/{m})/sin(π/{m})"))
                }
            };
            coords[f.gen_offset] = u(j + 1);
            coords[f.gen_offset + 1] = u(j);
        }
    }
    Value::Array(coords)
}
