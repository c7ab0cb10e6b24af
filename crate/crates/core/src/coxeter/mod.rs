//! Finite Coxeter systems realized through their root systems.
//!
//! Roots are enumerated once, by orbit closure of the simple roots under the
//! simple reflections. Positive roots get indices `0..N` with the simple
//! roots first (root `i` is `α_i`), and the negative of root `k` is `k + N`.
//! Group elements are permutations of this index set.

mod element;
mod subsystem;
mod types;
mod words;

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::arith::{reflect_vector, ArithError, Gram, RootVector, Scalar, Sign};

pub use element::GroupElement;
pub use subsystem::DiagramAutomorphism;
pub use types::{Family, Irreducible, TypeDescriptor};
pub(crate) use types::{factor_model, FactorModel};
pub use words::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unknown Coxeter type `{0}`")]
    UnknownType(String),
    #[error("unsupported descriptor `{0}`: only finite preset types and their products are accepted")]
    Unsupported(String),
    #[error("root enumeration for {0} exceeded the expected {1} roots")]
    EnumerationOverflow(String, usize),
    #[error("{0} generated a group of order {1}, expected {2}")]
    OrderMismatch(String, u64, u64),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("generator permutation does not preserve the Coxeter matrix")]
    NotAnAutomorphism,
    #[error("root permutation is not induced by a group element")]
    NotInGroup,
    #[error("group has more than {0} elements; refusing to enumerate")]
    TooLarge(usize),
    #[error("operation needs a coordinate model, which {0} does not have")]
    NoCoordinates(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("arithmetic: {0}")]
    Arith(#[from] ArithError),
}

/// A reflection, named by the index of its positive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Reflection(pub usize);

#[derive(Clone, Debug)]
pub(crate) struct FactorInfo {
    pub irreducible: Irreducible,
    pub gen_offset: usize,
    pub model: FactorModel,
    /// Local positive root index -> global root index.
    pub positive: Vec<usize>,
    /// Simple-root coordinates of local positive roots (scalar model only).
    pub coords: Vec<RootVector>,
    /// Ambient coordinates of local positive roots (classical types only).
    pub ambient: Vec<RootVector>,
}

impl FactorInfo {
    pub fn rank(&self) -> usize {
        self.irreducible.rank
    }

    pub fn gens(&self) -> std::ops::Range<usize> {
        self.gen_offset..self.gen_offset + self.rank()
    }
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A finite Coxeter system with its enumerated root system.
#[derive(Debug)]
pub struct CoxeterSystem {
    id: u64,
    descriptor: TypeDescriptor,
    rank: usize,
    npos: usize,
    gens: Vec<GroupElement>,
    coxeter_matrix: Vec<Vec<usize>>,
    pub(crate) factors: Vec<FactorInfo>,
    /// Positive root -> (factor, local index).
    root_home: Vec<(usize, usize)>,
    /// Positive root α -> (word u, simple s) with α = u(α_s).
    witness: Vec<(Vec<usize>, usize)>,
    orbit: Vec<usize>,
}

/// Local root data of one factor: perms on `0..2n` with `k + n = -k`.
struct LocalRoots {
    npos: usize,
    perms: Vec<Vec<usize>>,
    coords: Vec<RootVector>,
    ambient: Vec<RootVector>,
}

fn enumerate_scalar(f: &Irreducible, gram: &Gram, ambient: Option<&Vec<RootVector>>) -> Result<LocalRoots, CoxeterError> {
    let n = f.rank;
    let expected = 2 * f.positive_roots();
    let simple: Vec<RootVector> = (0..n)
        .map(|i| (0..n).map(|j| Scalar::int((i == j) as i64)).collect())
        .collect();
    let mut seen: HashMap<RootVector, ()> = HashMap::new();
    let mut all = Vec::new();
    let mut queue: VecDeque<RootVector> = simple.iter().cloned().collect();
    for s in &simple {
        seen.insert(s.clone(), ());
    }
    while let Some(r) = queue.pop_front() {
        for s in &simple {
            let img = reflect_vector(&r, s, gram)?;
            if !seen.contains_key(&img) {
                if seen.len() >= expected {
                    return Err(CoxeterError::EnumerationOverflow(f.to_string(), expected));
                }
                seen.insert(img.clone(), ());
                queue.push_back(img);
            }
        }
        all.push(r);
    }
    if all.len() != expected {
        return Err(CoxeterError::EnumerationOverflow(f.to_string(), expected));
    }
    let is_nonneg = |v: &RootVector| v.iter().all(|x| x.sign() != Sign::Negative);
    let mut positive: Vec<RootVector> = all.into_iter().filter(is_nonneg).collect();
    if positive.len() * 2 != expected {
        return Err(CoxeterError::EnumerationOverflow(f.to_string(), expected));
    }
    let height = |v: &RootVector| v.iter().fold(Scalar::zero(), |a, x| &a + x);
    positive.sort_by(|a, b| {
        let sa = simple.iter().position(|s| s == a);
        let sb = simple.iter().position(|s| s == b);
        match (sa, sb) {
            (Some(x), Some(y)) => x.cmp(&y),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => height(a).cmp(&height(b)).then_with(|| b.cmp(a)),
        }
    });
    let npos = positive.len();
    let mut index: HashMap<RootVector, usize> = HashMap::new();
    for (k, r) in positive.iter().enumerate() {
        index.insert(r.clone(), k);
        index.insert(r.iter().map(|x| -x).collect(), k + npos);
    }
    let coords_of = |k: usize| -> RootVector {
        if k < npos {
            positive[k].clone()
        } else {
            positive[k - npos].iter().map(|x| -x).collect()
        }
    };
    let mut perms = Vec::with_capacity(n);
    for s in &simple {
        let mut p = Vec::with_capacity(2 * npos);
        for k in 0..2 * npos {
            let img = reflect_vector(&coords_of(k), s, gram)?;
            p.push(*index.get(&img).ok_or(CoxeterError::NotInGroup)?);
        }
        perms.push(p);
    }
    let ambient = match ambient {
        Some(amb) => positive
            .iter()
            .map(|c| {
                let dim = amb[0].len();
                (0..dim)
                    .map(|d| c.iter().zip(amb).fold(Scalar::zero(), |a, (ci, ai)| &a + &(ci * &ai[d])))
                    .collect()
            })
            .collect(),
        None => Vec::new(),
    };
    Ok(LocalRoots { npos, perms, coords: positive, ambient })
}

fn enumerate_dihedral(m: usize) -> LocalRoots {
    // local positive k sits at angle index: 0, m-1, 1, 2, ..., m-2
    let angle = |k: usize| -> usize {
        match k {
            0 => 0,
            1 => m - 1,
            _ => k - 1,
        }
    };
    let mut local_of_angle = vec![0; 2 * m];
    for k in 0..m {
        local_of_angle[angle(k)] = k;
        local_of_angle[angle(k) + m] = k + m;
    }
    let axis = [0, m - 1];
    let perms = axis
        .iter()
        .map(|&a| {
            (0..2 * m)
                .map(|k| {
                    let j = if k < m { angle(k) } else { angle(k - m) + m };
                    local_of_angle[(2 * a + 3 * m - j) % (2 * m)]
                })
                .collect()
        })
        .collect();
    LocalRoots { npos: m, perms, coords: Vec::new(), ambient: Vec::new() }
}

fn perm_compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn perm_order(p: &[u16]) -> usize {
    let id: Vec<u16> = (0..p.len() as u16).collect();
    let mut cur = p.to_vec();
    let mut k = 1;
    while cur != id {
        cur = perm_compose(p, &cur);
        k += 1;
    }
    k
}

impl CoxeterSystem {
    /// Builds the system for a descriptor string such as `"B3"` or `"A1xI2(5)"`.
    pub fn build(descriptor: &str) -> Result<CoxeterSystem, CoxeterError> {
        CoxeterSystem::new(&descriptor.parse()?)
    }

    pub fn new(descriptor: &TypeDescriptor) -> Result<CoxeterSystem, CoxeterError> {
        let mut locals = Vec::new();
        for f in descriptor.factors() {
            let model = factor_model(f);
            let local = match &model {
                FactorModel::Scalar { gram, ambient } => enumerate_scalar(f, gram, ambient.as_ref())?,
                FactorModel::Dihedral { m } => enumerate_dihedral(*m),
            };
            if f.rank <= 4 {
                check_order(f, &local)?;
            }
            locals.push((model, local));
        }

        let rank = descriptor.rank();
        let npos: usize = locals.iter().map(|(_, l)| l.npos).sum();
        assert!(2 * npos <= u16::MAX as usize, "root system too large");

        // global positive ordering: all simple roots, then the rest per factor
        let mut factors = Vec::new();
        let mut root_home = vec![(0, 0); npos];
        let mut gen_offset = 0;
        let mut next_nonsimple = rank;
        for (fi, (f, (model, local))) in descriptor.factors().iter().zip(&locals).enumerate() {
            let mut positive = Vec::with_capacity(local.npos);
            for k in 0..local.npos {
                let g = if k < f.rank {
                    gen_offset + k
                } else {
                    next_nonsimple += 1;
                    next_nonsimple - 1
                };
                root_home[g] = (fi, k);
                positive.push(g);
            }
            factors.push(FactorInfo {
                irreducible: *f,
                gen_offset,
                model: model.clone(),
                positive,
                coords: local.coords.clone(),
                ambient: local.ambient.clone(),
            });
            gen_offset += f.rank;
        }

        let id = NEXT_ID.fetch_add(1, Ordering::Relaxed);
        let mut gens = Vec::with_capacity(rank);
        for (fi, (_, local)) in locals.iter().enumerate() {
            let info = &factors[fi];
            let to_global = |k: usize| -> usize {
                if k < local.npos {
                    info.positive[k]
                } else {
                    info.positive[k - local.npos] + npos
                }
            };
            for p in &local.perms {
                let mut perm: Vec<u16> = (0..2 * npos as u16).collect();
                for (k, &img) in p.iter().enumerate() {
                    perm[to_global(k)] = to_global(img) as u16;
                }
                gens.push(GroupElement::from_perm(id, npos, perm.into_boxed_slice()));
            }
        }

        let coxeter_matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| if i == j { 1 } else { perm_order(&perm_compose(gens[i].perm(), gens[j].perm())) })
                    .collect()
            })
            .collect();

        let mut sys = CoxeterSystem {
            id,
            descriptor: descriptor.clone(),
            rank,
            npos,
            gens,
            coxeter_matrix,
            factors,
            root_home,
            witness: Vec::new(),
            orbit: Vec::new(),
        };
        sys.witness = sys.compute_witnesses();
        sys.orbit = sys.compute_orbits();
        Ok(sys)
    }

    fn compute_witnesses(&self) -> Vec<(Vec<usize>, usize)> {
        let mut w: Vec<Option<(Vec<usize>, usize)>> = vec![None; self.npos];
        let mut queue = VecDeque::new();
        for s in 0..self.rank {
            w[s] = Some((Vec::new(), s));
            queue.push_back(s);
        }
        while let Some(a) = queue.pop_front() {
            for i in 0..self.rank {
                let b = self.gens[i].apply(a);
                if b < self.npos && w[b].is_none() {
                    let (u, s) = w[a].clone().unwrap();
                    let mut word = vec![i];
                    word.extend(u);
                    w[b] = Some((word, s));
                    queue.push_back(b);
                }
            }
        }
        w.into_iter().map(|x| x.expect("every positive root is conjugate to a simple root")).collect()
    }

    fn compute_orbits(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.npos).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for a in 0..self.npos {
            for g in &self.gens {
                let b = self.positive_part(g.apply(a));
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        (0..self.npos).map(|a| find(&mut parent, a)).collect()
    }

    pub fn descriptor(&self) -> &TypeDescriptor {
        &self.descriptor
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, which is also the number of reflections.
    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn num_roots(&self) -> usize {
        2 * self.npos
    }

    pub fn coxeter_matrix(&self) -> &[Vec<usize>] {
        &self.coxeter_matrix
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.npos
    }

    pub fn negate(&self, root: usize) -> usize {
        if root < self.npos {
            root + self.npos
        } else {
            root - self.npos
        }
    }

    /// The positive root among `±root`.
    pub fn positive_part(&self, root: usize) -> usize {
        if root < self.npos {
            root
        } else {
            root - self.npos
        }
    }

    pub fn reflections(&self) -> impl Iterator<Item = Reflection> {
        (0..self.npos).map(Reflection)
    }

    pub(crate) fn check(&self, w: &GroupElement) -> Result<(), CoxeterError> {
        if w.system_id() == self.id {
            Ok(())
        } else {
            Err(CoxeterError::MixedSystems)
        }
    }

    pub fn owns(&self, w: &GroupElement) -> bool {
        w.system_id() == self.id
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::from_perm(self.id, self.npos, (0..2 * self.npos as u16).collect())
    }

    /// Simple reflection `s_i`, 0-based.
    pub fn generator(&self, i: usize) -> Result<&GroupElement, CoxeterError> {
        self.gens.get(i).ok_or(CoxeterError::IndexOutOfRange { index: i, rank: self.rank })
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    /// Product `s_{w[0]} s_{w[1]} ⋯` of 0-based generator indices.
    pub fn element_of(&self, word: &[usize]) -> Result<GroupElement, CoxeterError> {
        let mut acc = self.identity();
        for &i in word {
            acc = acc.mul(self.generator(i)?);
        }
        Ok(acc)
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, CoxeterError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.mul(b))
    }

    pub fn invert(&self, a: &GroupElement) -> Result<GroupElement, CoxeterError> {
        self.check(a)?;
        Ok(a.inverse())
    }

    /// `|s w| < |w|`.
    pub fn is_left_descent(&self, w: &GroupElement, s: usize) -> bool {
        !self.is_positive(w.inverse_apply(s))
    }

    /// `|w s| < |w|`.
    pub fn is_right_descent(&self, w: &GroupElement, s: usize) -> bool {
        !self.is_positive(w.apply(s))
    }

    /// Greedy left-descent word with the smallest generator index at each step.
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut cur = w.clone();
        let mut word = Vec::with_capacity(w.length());
        while cur.length() > 0 {
            let s = (0..self.rank)
                .find(|&s| self.is_left_descent(&cur, s))
                .expect("nonidentity element has a left descent");
            cur = self.gens[s].mul(&cur);
            word.push(s);
        }
        word
    }

    /// Reflections whose wall separates `C₀` and `wC₀`: `{α > 0 : w⁻¹α < 0}`.
    pub fn inversion_set(&self, w: &GroupElement) -> Vec<Reflection> {
        let inv = w.inverse();
        (0..self.npos)
            .filter(|&a| !self.is_positive(inv.apply(a)))
            .map(Reflection)
            .collect()
    }

    /// `w t w⁻¹`, as the reflection of the positive root `±w(α_t)`.
    pub fn conjugate_reflection(&self, w: &GroupElement, t: Reflection) -> Reflection {
        Reflection(self.positive_part(w.apply(t.0)))
    }

    /// Longest element of the standard parabolic subgroup `W_J` (0-based `J`).
    pub fn longest_element(&self, subset: &[usize]) -> Result<GroupElement, CoxeterError> {
        for &s in subset {
            self.generator(s)?;
        }
        let mut w = self.identity();
        while let Some(&s) = subset.iter().find(|&&s| !self.is_right_descent(&w, s)) {
            w = w.mul(&self.gens[s]);
        }
        Ok(w)
    }

    /// The reflection `s_α` as a group element.
    pub fn reflection_element(&self, t: Reflection) -> GroupElement {
        let (u, s) = &self.witness[t.0];
        let u = self.element_of(u).expect("witness words are in range");
        u.mul(&self.gens[*s]).mul(&u.inverse())
    }

    /// Label of the W-orbit of the wall of `t`: the smallest simple root index
    /// in that orbit.
    pub fn orbit_label(&self, t: Reflection) -> usize {
        self.orbit[t.0]
    }

    /// Distinct wall-orbit labels in increasing order.
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut v = self.orbit.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Enumerates the whole group, breadth-first from the identity.
    pub fn elements(&self, cap: usize) -> Result<Vec<GroupElement>, CoxeterError> {
        let mut seen: HashMap<Box<[u16]>, ()> = HashMap::new();
        let id = self.identity();
        seen.insert(id.perm().into(), ());
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for g in &self.gens {
                let x = w.mul(g);
                if !seen.contains_key(x.perm()) {
                    if out.len() >= cap {
                        return Err(CoxeterError::TooLarge(cap));
                    }
                    seen.insert(x.perm().into(), ());
                    out.push(x);
                }
            }
        }
        Ok(out)
    }

    /// Theoretical group order, product of the factor orders.
    pub fn order(&self) -> u64 {
        self.descriptor.factors().iter().map(|f| f.group_order()).product()
    }

    /// Simple-root coordinates of a root (scalar-model factors only). The
    /// coordinates are local to the root's factor.
    pub fn root_coordinates(&self, root: usize) -> Option<RootVector> {
        let (fi, k) = self.root_home[self.positive_part(root)];
        let c = self.factors[fi].coords.get(k)?.clone();
        Some(if self.is_positive(root) { c } else { c.iter().map(|x| -x).collect() })
    }

    /// Ambient (ε-basis) coordinates of a root, for classical factors.
    pub fn ambient_coordinates(&self, root: usize) -> Option<RootVector> {
        let (fi, k) = self.root_home[self.positive_part(root)];
        let c = self.factors[fi].ambient.get(k)?.clone();
        Some(if self.is_positive(root) { c } else { c.iter().map(|x| -x).collect() })
    }

    pub(crate) fn factor_of_root(&self, root: usize) -> usize {
        self.root_home[self.positive_part(root)].0
    }

    /// Highest root of an irreducible crystallographic system (unique root
    /// of maximal height).
    pub fn highest_root(&self) -> Result<usize, CoxeterError> {
        let f = match self.factors.as_slice() {
            [f] if !f.coords.is_empty() => f,
            _ => return Err(CoxeterError::NoCoordinates(self.descriptor.to_string())),
        };
        let height = |k: usize| f.coords[k].iter().fold(Scalar::zero(), |a, x| &a + x);
        let best = (0..f.coords.len()).max_by(|&a, &b| height(a).cmp(&height(b))).unwrap();
        Ok(f.positive[best])
    }

    /// Converts a permutation of root indices into the group element
    /// inducing it, or fails if the permutation is not in W.
    pub fn element_from_root_permutation(&self, perm: &[usize]) -> Result<GroupElement, CoxeterError> {
        if perm.len() != self.num_roots() {
            return Err(CoxeterError::NotInGroup);
        }
        let mut candidate = GroupElement::from_perm(self.id, self.npos, perm.iter().map(|&x| x as u16).collect());
        for r in 0..self.num_roots() {
            if candidate.apply(self.negate(r)) != self.negate(candidate.apply(r)) {
                return Err(CoxeterError::NotInGroup);
            }
        }
        // peel right descents until the positive system is fixed
        let mut word = Vec::new();
        while let Some(s) = (0..self.rank).find(|&s| self.is_right_descent(&candidate, s)) {
            candidate = candidate.mul(&self.gens[s]);
            word.push(s);
        }
        if !candidate.is_identity() {
            return Err(CoxeterError::NotInGroup);
        }
        word.reverse();
        self.element_of(&word)
    }

    /// The element acting on ambient coordinates by `map`. Only for a single
    /// classical factor.
    pub fn element_from_ambient_map(&self, map: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Result<GroupElement, CoxeterError> {
        if self.factors.len() != 1 || self.factors[0].ambient.is_empty() {
            return Err(CoxeterError::NoCoordinates(self.descriptor.to_string()));
        }
        let mut index = HashMap::new();
        for r in 0..self.num_roots() {
            index.insert(self.ambient_coordinates(r).unwrap(), r);
        }
        let perm = (0..self.num_roots())
            .map(|r| index.get(&map(&self.ambient_coordinates(r).unwrap())).copied().ok_or(CoxeterError::NotInGroup))
            .collect::<Result<Vec<_>, _>>()?;
        self.element_from_root_permutation(&perm)
    }

    /// Matrix of `w` restricted to a scalar-model factor, in simple-root
    /// coordinates (columns are images of simple roots).
    pub(crate) fn factor_matrix(&self, fi: usize, w: &GroupElement) -> Vec<Vec<Scalar>> {
        let f = &self.factors[fi];
        let n = f.rank();
        let cols: Vec<RootVector> = f.gens().map(|s| self.root_coordinates(w.apply(s)).unwrap()).collect();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }
}

fn check_order(f: &Irreducible, local: &LocalRoots) -> Result<(), CoxeterError> {
    let expected = f.group_order();
    let gens: Vec<Vec<u16>> = local.perms.iter().map(|p| p.iter().map(|&x| x as u16).collect()).collect();
    let id: Vec<u16> = (0..2 * local.npos as u16).collect();
    let mut seen: HashMap<Vec<u16>, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head].clone();
        head += 1;
        for g in &gens {
            let x = perm_compose(&w, g);
            if !seen.contains_key(&x) {
                if seen.len() as u64 >= expected {
                    return Err(CoxeterError::OrderMismatch(f.to_string(), expected + 1, expected));
                }
                seen.insert(x.clone(), ());
                queue.push(x);
            }
        }
    }
    if seen.len() as u64 != expected {
        return Err(CoxeterError::OrderMismatch(f.to_string(), seen.len() as u64, expected));
    }
    Ok(())
}
