//! Fixed subspaces, perpendicular root subsystems, and diagram automorphisms.

use crate::arith::{linalg, Scalar};

use super::{CoxeterError, CoxeterSystem, Family, FactorModel, GroupElement, Irreducible, Reflection, TypeDescriptor};

/// Restriction of an element to one factor, as seen by the dihedral model.
enum DihedralPart {
    Identity,
    Reflection(usize),
    Rotation,
}

impl CoxeterSystem {
    fn dihedral_part(&self, fi: usize, w: &GroupElement) -> DihedralPart {
        let f = &self.factors[fi];
        let len = f.positive.iter().filter(|&&r| !self.is_positive(w.apply(r))).count();
        if len == 0 {
            DihedralPart::Identity
        } else if len % 2 == 0 {
            DihedralPart::Rotation
        } else {
            let r = f
                .positive
                .iter()
                .copied()
                .find(|&r| w.apply(r) == self.negate(r))
                .expect("a dihedral reflection negates its root");
            DihedralPart::Reflection(r)
        }
    }

    /// Per factor: the fixed subspace of `xs` (basis in simple-root
    /// coordinates for scalar factors) and the positive roots of that factor
    /// orthogonal to it.
    fn factor_fixed(&self, fi: usize, xs: &[GroupElement]) -> Result<(usize, Vec<usize>), CoxeterError> {
        let f = &self.factors[fi];
        match &f.model {
            FactorModel::Scalar { gram, .. } => {
                let n = f.rank();
                let mut rows = Vec::new();
                for x in xs {
                    let m = self.factor_matrix(fi, x);
                    for (i, row) in m.into_iter().enumerate() {
                        rows.push(
                            row.into_iter()
                                .enumerate()
                                .map(|(j, v)| if i == j { &v - &Scalar::one() } else { v })
                                .collect(),
                        );
                    }
                }
                let basis = if rows.is_empty() {
                    (0..n).map(|i| (0..n).map(|j| Scalar::int((i == j) as i64)).collect()).collect()
                } else {
                    linalg::kernel(&rows, n)?
                };
                let mut perp = Vec::new();
                for (k, c) in f.coords.iter().enumerate() {
                    let mut orthogonal = true;
                    for v in &basis {
                        if !gram.apply(c, v)?.is_zero() {
                            orthogonal = false;
                            break;
                        }
                    }
                    if orthogonal {
                        perp.push(f.positive[k]);
                    }
                }
                Ok((basis.len(), perp))
            }
            FactorModel::Dihedral { .. } => {
                let mut refl = Vec::new();
                for x in xs {
                    match self.dihedral_part(fi, x) {
                        DihedralPart::Identity => {}
                        DihedralPart::Rotation => return Ok((0, f.positive.clone())),
                        DihedralPart::Reflection(r) => {
                            if !refl.contains(&r) {
                                refl.push(r);
                            }
                        }
                    }
                }
                Ok(match refl.len() {
                    0 => (2, Vec::new()),
                    1 => (1, refl),
                    _ => (0, f.positive.clone()),
                })
            }
        }
    }

    /// Dimension of the common fixed subspace of `xs` in the reflection
    /// representation.
    pub fn fixed_space_dimension(&self, xs: &[GroupElement]) -> Result<usize, CoxeterError> {
        for x in xs {
            self.check(x)?;
        }
        let mut dim = 0;
        for fi in 0..self.factors.len() {
            dim += self.factor_fixed(fi, xs)?.0;
        }
        Ok(dim)
    }

    /// Positive roots orthogonal to the common fixed subspace of `xs`.
    pub fn perp_subsystem(&self, xs: &[GroupElement]) -> Result<Vec<Reflection>, CoxeterError> {
        for x in xs {
            self.check(x)?;
        }
        let mut out = Vec::new();
        for fi in 0..self.factors.len() {
            out.extend(self.factor_fixed(fi, xs)?.1.into_iter().map(Reflection));
        }
        out.sort();
        Ok(out)
    }

    /// Coxeter type of the reflection subgroup generated by a closed set of
    /// positive roots.
    pub fn subsystem_type(&self, roots: &[Reflection]) -> Result<TypeDescriptor, CoxeterError> {
        let refl: Vec<GroupElement> = roots.iter().map(|&t| self.reflection_element(t)).collect();
        let in_set = |r: usize| roots.iter().any(|t| t.0 == r);
        // simple roots of the subsystem: s_β makes exactly one root of Ψ⁺ negative
        let simple: Vec<usize> = (0..roots.len())
            .filter(|&i| {
                roots.iter().filter(|t| !self.is_positive(refl[i].apply(t.0))).count() == 1
            })
            .collect();
        for t in roots {
            for r in &refl {
                if !in_set(self.positive_part(r.apply(t.0))) {
                    return Err(CoxeterError::NotInGroup);
                }
            }
        }
        let k = simple.len();
        let label = |a: usize, b: usize| refl[simple[a]].mul(&refl[simple[b]]).order();
        let mut comp: Vec<usize> = (0..k).collect();
        for a in 0..k {
            for b in 0..a {
                if label(a, b) >= 3 {
                    let (ca, cb) = (comp[a], comp[b]);
                    for c in comp.iter_mut() {
                        if *c == ca {
                            *c = cb;
                        }
                    }
                }
            }
        }
        let mut labels: Vec<usize> = comp.clone();
        labels.sort_unstable();
        labels.dedup();
        let mut factors = Vec::new();
        for l in labels {
            let members: Vec<usize> = (0..k).filter(|&a| comp[a] == l).collect();
            // positive roots of this component: orbit of its simple roots
            let mut orbit: Vec<usize> = members.iter().map(|&a| roots[simple[a]].0).collect();
            let mut head = 0;
            while head < orbit.len() {
                let r = orbit[head];
                head += 1;
                for &a in &members {
                    let img = self.positive_part(refl[simple[a]].apply(r));
                    if !orbit.contains(&img) {
                        orbit.push(img);
                    }
                }
            }
            let mut max_label = 2;
            let mut degree = vec![0; members.len()];
            for (i, &a) in members.iter().enumerate() {
                for (j, &b) in members.iter().enumerate() {
                    if i != j && label(a, b) >= 3 {
                        degree[i] += 1;
                        max_label = max_label.max(label(a, b));
                    }
                }
            }
            let simple_roots: Vec<usize> = members.iter().map(|&a| roots[simple[a]].0).collect();
            factors.push(self.identify(&simple_roots, orbit.len(), max_label, degree.iter().any(|&d| d >= 3))?);
        }
        Ok(TypeDescriptor(factors).canonical())
    }

    fn identify(&self, simple: &[usize], npos: usize, max_label: usize, branched: bool) -> Result<Irreducible, CoxeterError> {
        let r = simple.len();
        let irr = |fam, rank| Irreducible::new(fam, rank);
        match (r, max_label) {
            (1, _) => irr(Family::A, 1),
            (2, 3) => irr(Family::A, 2),
            (2, 4) => irr(Family::B, 2),
            (2, 6) => irr(Family::G, 2),
            (2, m) => Irreducible::dihedral(m),
            (_, 3) if !branched && npos == r * (r + 1) / 2 => irr(Family::A, r),
            (_, 3) if npos == r * (r - 1) => irr(Family::D, r),
            (_, 3) => irr(Family::E, r),
            (4, 4) if npos == 24 => irr(Family::F, 4),
            (_, 4) => {
                // B has one short simple root, C has one long one
                let len = |root: usize| -> Result<Scalar, CoxeterError> {
                    let fi = self.factor_of_root(root);
                    match &self.factors[fi].model {
                        FactorModel::Scalar { gram, .. } => {
                            let c = self.root_coordinates(root).unwrap();
                            Ok(gram.apply(&c, &c)?)
                        }
                        FactorModel::Dihedral { .. } => Ok(Scalar::one()),
                    }
                };
                let lens = simple.iter().map(|&s| len(s)).collect::<Result<Vec<_>, _>>()?;
                let min = lens.iter().min().unwrap().clone();
                let short = lens.iter().filter(|l| **l == min).count();
                irr(if short == 1 { Family::B } else { Family::C }, r)
            }
            (_, 5) => irr(Family::H, r),
            _ => Err(CoxeterError::UnknownType(format!("rank {r} component with label {max_label}"))),
        }
    }
}

/// A permutation of the simple generators preserving the Coxeter matrix,
/// extended to a group automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    images: Vec<usize>,
}

impl DiagramAutomorphism {
    /// `images[i]` is the 0-based image of generator `i`.
    pub fn new(sys: &CoxeterSystem, images: Vec<usize>) -> Result<DiagramAutomorphism, CoxeterError> {
        let n = sys.rank();
        let mut sorted = images.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(CoxeterError::NotAnAutomorphism);
        }
        let m = sys.coxeter_matrix();
        for i in 0..n {
            for j in 0..n {
                if m[images[i]][images[j]] != m[i][j] {
                    return Err(CoxeterError::NotAnAutomorphism);
                }
            }
        }
        Ok(DiagramAutomorphism { images })
    }

    pub fn map_word(&self, word: &[usize]) -> Vec<usize> {
        word.iter().map(|&i| self.images[i]).collect()
    }

    pub fn apply(&self, sys: &CoxeterSystem, w: &GroupElement) -> GroupElement {
        sys.element_of(&self.map_word(&sys.reduced_word(w))).expect("images are in range")
    }
}

impl CoxeterSystem {
    /// Every diagram automorphism, the identity first.
    pub fn diagram_automorphisms(&self) -> Vec<DiagramAutomorphism> {
        fn extend(m: &[Vec<usize>], partial: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            let i = partial.len();
            if i == m.len() {
                out.push(partial.clone());
                return;
            }
            for c in 0..m.len() {
                if used[c] || (0..i).any(|j| m[partial[j]][c] != m[j][i]) {
                    continue;
                }
                used[c] = true;
                partial.push(c);
                extend(m, partial, used, out);
                partial.pop();
                used[c] = false;
            }
        }
        let m = self.coxeter_matrix();
        let mut out = Vec::new();
        extend(m, &mut Vec::new(), &mut vec![false; m.len()], &mut out);
        out.into_iter().map(|images| DiagramAutomorphism { images }).collect()
    }
}
