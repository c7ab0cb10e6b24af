//! `F₂` cohomology of small finite groups with trivial coefficients:
//! normalized cochains, the coboundary operator, a certifying
//! coboundary solver, and class coordinates in standard bases.

mod f2;

use std::collections::HashMap;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::cocycle::{self, CocycleError};
use crate::coxeter::{CoxeterSystem, GroupElement};

pub use f2::{BitRow, F2Matrix, Solution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("elements are not closed under multiplication")]
    NotClosed,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("cochain is not normalized")]
    NotNormalized,
    #[error("cochain has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("cochain is defined on a group of order {got}, expected {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error("basis does not span the cohomology group")]
    BasisDoesNotSpan,
    #[error("no standard basis for groups of shape {0}")]
    UnsupportedShape(String),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl SmallGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<SmallGroup, CohomologyError> {
        let k = table.len();
        if k == 0 || table.iter().any(|r| r.len() != k || r.iter().any(|&x| x >= k)) {
            return Err(CohomologyError::NotAGroup("table is not a square table over its index set".into()));
        }
        let identity = (0..k)
            .find(|&e| (0..k).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| CohomologyError::NotAGroup("no identity".into()))?;
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(CohomologyError::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverse = (0..k)
            .map(|a| {
                (0..k)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| CohomologyError::NotAGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SmallGroup { table, identity, inverse })
    }

    /// `ℤ/n` with element `a` at index `a`.
    pub fn cyclic(n: usize) -> SmallGroup {
        SmallGroup::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()).unwrap()
    }

    /// `ℤ/2 × ℤ/2` with `(a, b)` at index `a + 2b`.
    pub fn klein() -> SmallGroup {
        SmallGroup::from_table((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()).unwrap()
    }

    /// The subgroup of W formed by `elements`, indexed in the given order.
    pub fn from_elements(elements: &[GroupElement]) -> Result<SmallGroup, CohomologyError> {
        let index: HashMap<&[u16], usize> = elements.iter().enumerate().map(|(i, x)| (x.perm(), i)).collect();
        if index.len() != elements.len() {
            return Err(CohomologyError::NotAGroup("repeated element".into()));
        }
        let table = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index.get(a.mul(b).perm()).copied().ok_or(CohomologyError::NotClosed))
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        SmallGroup::from_table(table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// An `F₂`-valued function on `G^n`, stored densely with the first argument
/// most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    order: usize,
    values: Vec<bool>,
}

/// Iterates all `n`-tuples over `0..k` in lexicographic order.
fn all_tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(n as u32);
    (0..total).map(move |mut i| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = i % k;
            i /= k;
        }
        t
    })
}

impl Cochain {
    pub fn zero(degree: usize, order: usize) -> Cochain {
        Cochain { degree, order, values: vec![false; order.pow(degree as u32)] }
    }

    pub fn from_fn(degree: usize, order: usize, mut f: impl FnMut(&[usize]) -> bool) -> Cochain {
        let values = all_tuples(degree, order).map(|t| f(&t)).collect();
        Cochain { degree, order, values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    fn index(&self, t: &[usize]) -> usize {
        debug_assert_eq!(t.len(), self.degree);
        t.iter().fold(0, |acc, &x| acc * self.order + x)
    }

    pub fn get(&self, t: &[usize]) -> bool {
        self.values[self.index(t)]
    }

    pub fn set(&mut self, t: &[usize], v: bool) {
        let i = self.index(t);
        self.values[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| !v)
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!((self.degree, self.order), (other.degree, other.order), "cochain shapes");
        Cochain {
            degree: self.degree,
            order: self.order,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// Vanishes whenever some argument is the identity of `g`.
    pub fn is_normalized(&self, g: &SmallGroup) -> bool {
        all_tuples(self.degree, self.order).all(|t| !t.contains(&g.identity()) || !self.get(&t))
    }

    /// Cup product with trivial coefficients: `(f∪h)(x, y) = f(x) h(y)`.
    pub fn cup(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.order, other.order, "cochain group orders");
        let p = self.degree;
        Cochain::from_fn(p + other.degree, self.order, |t| self.get(&t[..p]) && other.get(&t[p..]))
    }

    /// JSON map from `"i,j,k"` to 0/1.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for t in all_tuples(self.degree, self.order) {
            let key = t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            map.insert(key, Value::from(self.get(&t) as u8));
        }
        Value::Object(map)
    }
}

fn check_shape(g: &SmallGroup, c: &Cochain) -> Result<(), CohomologyError> {
    if c.order != g.order() {
        return Err(CohomologyError::OrderMismatch { expected: g.order(), got: c.order });
    }
    Ok(())
}

/// `δc(g₁, …, g_{n+1}) = c(g₂, …) + Σ_j c(…, g_j g_{j+1}, …) + c(g₁, …, g_n)`.
pub fn delta(g: &SmallGroup, c: &Cochain) -> Cochain {
    let n = c.degree;
    let mut buf = vec![0; n];
    Cochain::from_fn(n + 1, g.order(), |t| {
        let mut v = c.get(&t[1..]);
        for j in 0..n {
            buf.clear();
            buf.extend_from_slice(&t[..j]);
            buf.push(g.mul(t[j], t[j + 1]));
            buf.extend_from_slice(&t[j + 2..]);
            v ^= c.get(&buf);
        }
        v ^ c.get(&t[..n])
    })
}

/// Tabulates `ε_n` on `elements` (which must form a subgroup), reduced mod 2.
/// For even `n` the integer cocycle is reduced mod 2.
pub fn restrict_cocycle(sys: &CoxeterSystem, n: usize, elements: &[GroupElement]) -> Result<Cochain, CohomologyError> {
    SmallGroup::from_elements(elements)?;
    if n == 0 {
        return Err(CocycleError::ZeroDegree.into());
    }
    if let Some(x) = elements.iter().find(|x| !sys.owns(x)) {
        sys.compose(x, x).map_err(CocycleError::from)?;
    }
    let k = elements.len();
    let mut buf = Vec::with_capacity(n);
    Ok(Cochain::from_fn(n, k, |t| {
        buf.clear();
        buf.extend(t.iter().map(|&i| elements[i].clone()));
        cocycle::alternating_count(sys, &buf) % 2 == 1
    }))
}

/// Coordinates of normalized `(n-1)`-cochains: tuples avoiding the identity.
struct Unknowns {
    index: HashMap<Vec<usize>, usize>,
    tuples: Vec<Vec<usize>>,
}

fn normalized_tuples(g: &SmallGroup, n: usize) -> Vec<Vec<usize>> {
    all_tuples(n, g.order()).filter(|t| !t.contains(&g.identity())).collect()
}

impl Unknowns {
    fn new(g: &SmallGroup, degree: usize) -> Unknowns {
        let tuples = normalized_tuples(g, degree);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Unknowns { index, tuples }
    }

    fn len(&self) -> usize {
        self.tuples.len()
    }

    fn cochain(&self, g: &SmallGroup, degree: usize, x: &[bool]) -> Cochain {
        let mut c = Cochain::zero(degree, g.order());
        for (t, &v) in self.tuples.iter().zip(x) {
            c.set(t, v);
        }
        c
    }
}

/// Row of the normalized coboundary map `C^{n-1} → C^n` at the `n`-tuple `t`.
fn delta_row(g: &SmallGroup, unknowns: &Unknowns, t: &[usize]) -> BitRow {
    let n = t.len();
    let mut row = BitRow::zeros(unknowns.len());
    let mut toggle = |args: Vec<usize>| {
        if let Some(&i) = unknowns.index.get(&args) {
            row.toggle(i);
        }
    };
    toggle(t[1..].to_vec());
    for j in 0..n - 1 {
        let mut args = t[..j].to_vec();
        args.push(g.mul(t[j], t[j + 1]));
        args.extend_from_slice(&t[j + 2..]);
        toggle(args);
    }
    toggle(t[..n - 1].to_vec());
    row
}

/// The matrix of `δ: C^{n-1}_norm → C^n_norm`, rows indexed by normalized
/// `n`-tuples.
fn delta_matrix(g: &SmallGroup, n: usize) -> (F2Matrix, Unknowns, Vec<Vec<usize>>) {
    let unknowns = Unknowns::new(g, n - 1);
    let eqs = normalized_tuples(g, n);
    let mut m = F2Matrix::new(unknowns.len());
    for t in &eqs {
        m.push_row(delta_row(g, &unknowns, t));
    }
    (m, unknowns, eqs)
}

/// Result of deciding whether a cocycle is a coboundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `c = δλ` with `λ` normalized.
    Trivial { witness: Cochain },
    /// The listed equations `c(t) = δλ(t)` sum to `0 = 1`.
    Nontrivial { certificate: Vec<Vec<usize>> },
}

impl Verdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Verdict::Trivial { .. })
    }

    pub fn label(&self) -> &'static str {
        if self.is_trivial() {
            "trivial"
        } else {
            "nontrivial"
        }
    }
}

fn require_normalized_cocycle(g: &SmallGroup, c: &Cochain) -> Result<(), CohomologyError> {
    check_shape(g, c)?;
    if c.degree == 0 {
        return Err(CohomologyError::DegreeMismatch { expected: 1, got: 0 });
    }
    if !c.is_normalized(g) {
        return Err(CohomologyError::NotNormalized);
    }
    if !delta(g, c).is_zero() {
        return Err(CohomologyError::NotACocycle);
    }
    Ok(())
}

/// Decides whether the normalized cocycle `c` is `δλ` for a normalized `λ`.
pub fn is_coboundary(g: &SmallGroup, c: &Cochain) -> Result<Verdict, CohomologyError> {
    require_normalized_cocycle(g, c)?;
    let n = c.degree;
    let (m, unknowns, eqs) = delta_matrix(g, n);
    let rhs: Vec<bool> = eqs.iter().map(|t| c.get(t)).collect();
    Ok(match m.solve(&rhs) {
        Solution::Solved(x) => Verdict::Trivial { witness: unknowns.cochain(g, n - 1, &x) },
        Solution::Inconsistent(rows) => Verdict::Nontrivial { certificate: rows.into_iter().map(|i| eqs[i].clone()).collect() },
    })
}

/// Checks a nontrivial-verdict certificate from scratch: the listed
/// equations have coefficient rows summing to zero and values summing to 1.
pub fn verify_certificate(g: &SmallGroup, c: &Cochain, certificate: &[Vec<usize>]) -> bool {
    if certificate.is_empty() || certificate.iter().any(|t| t.len() != c.degree || t.contains(&g.identity())) {
        return false;
    }
    let unknowns = Unknowns::new(g, c.degree - 1);
    let mut sum = BitRow::zeros(unknowns.len());
    let mut value = false;
    for t in certificate {
        sum.xor_assign(&delta_row(g, &unknowns, t));
        value ^= c.get(t);
    }
    sum.is_zero() && value
}

/// `dim_{F₂} H^n(G, F₂)` from ranks of the normalized coboundary maps.
pub fn cohomology_dimension(g: &SmallGroup, n: usize) -> usize {
    let cn = normalized_tuples(g, n).len();
    let rank_out = delta_matrix(g, n + 1).0.rank();
    let rank_in = if n == 0 { 0 } else { delta_matrix(g, n).0.rank() };
    cn - rank_out - rank_in
}

/// Group shapes with a built-in degree-3 basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupShape {
    Cyclic(usize),
    Klein,
}

impl GroupShape {
    pub fn group(&self) -> SmallGroup {
        match *self {
            GroupShape::Cyclic(n) => SmallGroup::cyclic(n),
            GroupShape::Klein => SmallGroup::klein(),
        }
    }
}

impl std::fmt::Display for GroupShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupShape::Cyclic(n) => write!(f, "Z/{n}"),
            GroupShape::Klein => write!(f, "Z/2xZ/2"),
        }
    }
}

/// Degree-3 representatives in the standard indexing of the shape's group.
///
/// `ℤ/n` with `n` even: `x ∪ y` with `x(a) = a mod 2` and `y(a, b)` the
/// carry of `a + b`; for `n = 2` this is the bit product `abc`. `ℤ/n` with
/// `n` odd has no `F₂` cohomology in positive degree. `ℤ/2 × ℤ/2`: the
/// cup products `p₁p₁p₁, p₁p₁p₂, p₁p₂p₂, p₂p₂p₂`.
pub fn standard_class_basis(shape: GroupShape) -> Result<Vec<Cochain>, CohomologyError> {
    match shape {
        GroupShape::Cyclic(0) => Err(CohomologyError::UnsupportedShape(shape.to_string())),
        GroupShape::Cyclic(n) if n % 2 == 1 => Ok(Vec::new()),
        GroupShape::Cyclic(n) => {
            Ok(vec![Cochain::from_fn(3, n, |t| t[0] % 2 == 1 && t[1] + t[2] >= n)])
        }
        GroupShape::Klein => {
            let p = [Cochain::from_fn(1, 4, |t| t[0] & 1 == 1), Cochain::from_fn(1, 4, |t| t[0] & 2 == 2)];
            Ok([[0, 0, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1]]
                .iter()
                .map(|ix| p[ix[0]].cup(&p[ix[1]]).cup(&p[ix[2]]))
                .collect())
        }
    }
}

/// The unique `v` with `c − Σ vᵢ bᵢ` a coboundary.
pub fn class_coordinates(g: &SmallGroup, c: &Cochain, basis: &[Cochain]) -> Result<Vec<bool>, CohomologyError> {
    require_normalized_cocycle(g, c)?;
    for b in basis {
        if b.degree != c.degree {
            return Err(CohomologyError::DegreeMismatch { expected: c.degree, got: b.degree });
        }
        require_normalized_cocycle(g, b)?;
    }
    let n = c.degree;
    let (m, _, eqs) = delta_matrix(g, n);
    let cols: Vec<Vec<bool>> = basis.iter().map(|b| eqs.iter().map(|t| b.get(t)).collect()).collect();
    let aug = m.with_extra_columns(&cols);
    // basis classes must be independent and as many as dim H^n
    if aug.rank() - m.rank() != basis.len() || basis.len() != cohomology_dimension(g, n) {
        return Err(CohomologyError::BasisDoesNotSpan);
    }
    let rhs: Vec<bool> = eqs.iter().map(|t| c.get(t)).collect();
    match aug.solve(&rhs) {
        Solution::Solved(x) => Ok(x[m.ncols()..].to_vec()),
        Solution::Inconsistent(_) => Err(CohomologyError::BasisDoesNotSpan),
    }
}

#[cfg(test)]
mod tests;
