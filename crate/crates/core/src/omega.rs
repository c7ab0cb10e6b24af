//! The fundamental group `Ω` of an adjoint simple group, embedded in its
//! Weyl group, and the restriction of `ε₃` to each of its subgroups.
//!
//! Nontrivial elements of `Ω` are produced twice: from the classical
//! coordinate formulas where they exist, and as `w_{0,J} w₀` with
//! `J = S ∖ {s}` over the cominuscule nodes `s`. The two must generate the
//! same subgroup, and every element must permute `Δ ∪ {−θ}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Scalar;
use crate::cohomology::{
    class_coordinates, is_coboundary, restrict_cocycle, standard_class_basis, CohomologyError, GroupShape, SmallGroup,
    Verdict,
};
use crate::coxeter::{CoxeterError, CoxeterSystem, Family, GroupElement, Reflection, TypeDescriptor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmegaError {
    #[error("`{0}` is not an irreducible Weyl type")]
    NotWeyl(String),
    #[error("Ω construction failed validation: {0}")]
    Validation(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// Where an embedded element of `Ω` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A coordinate formula, confirmed by the minuscule construction.
    Formula,
    /// Only the minuscule construction is available.
    Minuscule,
    Identity,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Formula => "formula",
            Provenance::Minuscule => "minuscule",
            Provenance::Identity => "identity",
        })
    }
}

/// `Ω` with its embedding into W. `elements[i]` is the image of abstract
/// element `i` of `shape.group()`.
#[derive(Clone, Debug)]
pub struct OmegaGroup {
    pub shape: GroupShape,
    pub elements: Vec<GroupElement>,
    pub names: Vec<String>,
    pub provenance: Vec<Provenance>,
}

impl OmegaGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn group(&self) -> SmallGroup {
        self.shape.group()
    }

    pub fn element_named(&self, name: &str) -> Option<&GroupElement> {
        self.names.iter().position(|n| n == name).map(|i| &self.elements[i])
    }
}

fn irreducible_weyl(sys: &CoxeterSystem) -> Result<(Family, usize), OmegaError> {
    match sys.descriptor().factors() {
        [f] if !matches!(f.family, Family::H | Family::I) => Ok((f.family, f.rank)),
        _ => Err(OmegaError::NotWeyl(sys.descriptor().to_string())),
    }
}

fn invalid(msg: impl Into<String>) -> OmegaError {
    OmegaError::Validation(msg.into())
}

/// Whether `u` permutes the simple roots together with `−θ`.
pub fn has_alcove_signature(sys: &CoxeterSystem, u: &GroupElement) -> Result<bool, OmegaError> {
    let theta = sys.highest_root()?;
    let mut set: Vec<usize> = (0..sys.rank()).collect();
    set.push(sys.negate(theta));
    Ok(set.iter().all(|&r| set.contains(&u.apply(r))))
}

/// Nodes whose coefficient in the highest root is 1.
pub fn cominuscule_nodes(sys: &CoxeterSystem) -> Result<Vec<usize>, OmegaError> {
    let theta = sys.highest_root()?;
    let c = sys.root_coordinates(theta).expect("Weyl types have coordinates");
    Ok((0..sys.rank()).filter(|&i| c[i] == Scalar::one()).collect())
}

/// `w_{0,J} w₀` for each cominuscule node, with `J` the other nodes.
pub fn minuscule_elements(sys: &CoxeterSystem) -> Result<Vec<GroupElement>, OmegaError> {
    let all: Vec<usize> = (0..sys.rank()).collect();
    let w0 = sys.longest_element(&all)?;
    cominuscule_nodes(sys)?
        .into_iter()
        .map(|s| {
            let j: Vec<usize> = all.iter().copied().filter(|&i| i != s).collect();
            Ok(sys.longest_element(&j)?.mul(&w0))
        })
        .collect()
}

fn generated(sys: &CoxeterSystem, gens: &[GroupElement]) -> Vec<GroupElement> {
    let mut out = vec![sys.identity()];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = x.mul(g);
            if !out.contains(&y) {
                out.push(y);
            }
        }
    }
    out
}

fn same_set(a: &[GroupElement], b: &[GroupElement]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

fn ambient(sys: &CoxeterSystem, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Result<GroupElement, OmegaError> {
    Ok(sys.element_from_ambient_map(f)?)
}

/// Builds `Ω` and its embedding, cross-checking the two constructions.
pub fn omega_of(sys: &CoxeterSystem) -> Result<OmegaGroup, OmegaError> {
    let (family, n) = irreducible_weyl(sys)?;
    let minuscule = minuscule_elements(sys)?;
    let mut from_minuscule = minuscule.clone();
    from_minuscule.push(sys.identity());
    let closed = generated(sys, &minuscule);
    if !same_set(&closed, &from_minuscule) {
        return Err(invalid("minuscule elements together with 1 do not form a group"));
    }
    for u in &minuscule {
        if !has_alcove_signature(sys, u)? {
            return Err(invalid(format!("{} does not permute Δ ∪ {{−θ}}", sys.format_element(u))));
        }
    }

    let cyclic = |g: GroupElement, name: &str, k: usize, prov: Provenance| -> OmegaGroup {
        let elements: Vec<GroupElement> = (0..k).map(|i| g.pow(i)).collect();
        let names = (0..k)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => name.to_string(),
                _ => format!("{name}^{i}"),
            })
            .collect();
        let mut provenance = vec![prov; k];
        provenance[0] = Provenance::Identity;
        OmegaGroup { shape: GroupShape::Cyclic(k), elements, names, provenance }
    };
    let neg = |x: &Scalar| -x;

    let omega = match family {
        Family::A => {
            let c = sys.element_of(&(0..n).collect::<Vec<_>>())?;
            cyclic(c, "C", n + 1, Provenance::Formula)
        }
        Family::B => {
            // (x₁, …, x_n) ↦ (−x₁, x₂, …, x_n)
            let u = ambient(sys, |x| {
                let mut y = x.to_vec();
                y[0] = neg(&x[0]);
                y
            })?;
            check_conjugate_to_last_simple(sys, &u)?;
            cyclic(u, "u", 2, Provenance::Formula)
        }
        Family::C => {
            // (x₁, …, x_n) ↦ (−x_n, …, −x₁)
            let tau = ambient(sys, |x| x.iter().rev().map(neg).collect())?;
            cyclic(tau, "tau", 2, Provenance::Formula)
        }
        Family::D => {
            // ω₁ or ω: (x_n, −x_{n−1}, …, −x₂, ±x₁); ω₃: (−x_n, …, −x₁); ω₂: (−x₁, x₂, …, −x_n)
            let w1 = ambient(sys, |x| {
                let mut y: Vec<Scalar> = x.iter().rev().map(neg).collect();
                y[0] = x[n - 1].clone();
                if n % 2 == 0 {
                    y[n - 1] = x[0].clone();
                }
                y
            })?;
            if n % 2 == 1 {
                let g = cyclic(w1, "omega", 4, Provenance::Formula);
                let w2 = ambient(sys, |x| {
                    let mut y = x.to_vec();
                    y[0] = neg(&x[0]);
                    y[n - 1] = neg(&x[n - 1]);
                    y
                })?;
                let w3 = ambient(sys, |x| {
                    let mut y: Vec<Scalar> = x.iter().rev().map(neg).collect();
                    y[n - 1] = x[0].clone();
                    y
                })?;
                if g.elements[2] != w2 || g.elements[3] != w3 {
                    return Err(invalid("ω² and ω³ disagree with their coordinate formulas"));
                }
                g
            } else {
                let w2 = ambient(sys, |x| {
                    let mut y = x.to_vec();
                    y[0] = neg(&x[0]);
                    y[n - 1] = neg(&x[n - 1]);
                    y
                })?;
                let w3 = ambient(sys, |x| x.iter().rev().map(neg).collect())?;
                // ω₁ ↦ (1,0), ω₃ ↦ (0,1), ω₂ ↦ (1,1) at index a + 2b
                OmegaGroup {
                    shape: GroupShape::Klein,
                    elements: vec![sys.identity(), w1, w3, w2],
                    names: ["1", "omega1", "omega3", "omega2"].map(String::from).to_vec(),
                    provenance: vec![Provenance::Identity, Provenance::Formula, Provenance::Formula, Provenance::Formula],
                }
            }
        }
        Family::E if n != 8 => {
            let g = minuscule[0].clone();
            let (name, k) = if n == 6 { ("omega", 3) } else { ("tau", 2) };
            cyclic(g, name, k, Provenance::Minuscule)
        }
        _ => cyclic(sys.identity(), "1", 1, Provenance::Identity),
    };

    if !same_set(&omega.elements, &from_minuscule) {
        return Err(invalid("coordinate formulas and minuscule construction give different subgroups"));
    }
    let table = SmallGroup::from_elements(&omega.elements)?;
    if table != omega.shape.group() {
        return Err(invalid(format!("embedding is not a homomorphism from {}", omega.shape)));
    }
    if family == Family::E && n == 7 {
        let dim = sys.fixed_space_dimension(&omega.elements[1..])?;
        if dim != 4 {
            return Err(invalid(format!("dim V^τ = {dim}, expected 4")));
        }
    }
    Ok(omega)
}

/// `u` is a reflection whose root lies in the W-orbit of the last simple root.
fn check_conjugate_to_last_simple(sys: &CoxeterSystem, u: &GroupElement) -> Result<(), OmegaError> {
    let perp = sys.perp_subsystem(std::slice::from_ref(u))?;
    let last = Reflection(sys.rank() - 1);
    match perp.as_slice() {
        [t] if sys.reflection_element(*t) == *u && sys.orbit_label(*t) == sys.orbit_label(last) => Ok(()),
        _ => Err(invalid("u is not conjugate to the last simple reflection")),
    }
}

/// Type of `W(X)`, the reflection subgroup of roots orthogonal to `V^X`.
pub fn perp_decomposition(sys: &CoxeterSystem, xs: &[GroupElement]) -> Result<TypeDescriptor, OmegaError> {
    let perp = sys.perp_subsystem(xs)?;
    Ok(sys.subsystem_type(&perp)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupReport {
    pub label: String,
    pub generators: Vec<String>,
    pub order: usize,
    pub index: usize,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallOrbit {
    pub orbit: String,
    pub walls: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub omega_shape: String,
    pub omega_order: usize,
    pub elements: Vec<OmegaElementReport>,
    pub subgroups: Vec<SubgroupReport>,
    pub wall_orbits: Vec<WallOrbit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaElementReport {
    pub name: String,
    pub word: String,
    pub length: usize,
    pub provenance: Provenance,
}

impl OmegaReport {
    pub fn subgroup(&self, label: &str) -> Option<&SubgroupReport> {
        self.subgroups.iter().find(|s| s.label == label)
    }

    pub fn csv_header() -> &'static str {
        "type,omega_shape,subgroup,order,index,verdict,coordinates"
    }

    /// One CSV line per subgroup, without the header.
    pub fn csv_rows(&self) -> Vec<String> {
        self.subgroups
            .iter()
            .map(|s| {
                let coords = s
                    .coordinates
                    .as_ref()
                    .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                format!("{},{},{},{},{},{},{}", self.type_name, self.omega_shape, s.label, s.order, s.index, s.verdict, coords)
            })
            .collect()
    }
}

/// Subsets of `0..k` containing the identity and closed under `g`.
fn subgroups(g: &SmallGroup) -> Vec<Vec<usize>> {
    let k = g.order();
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        if mask >> g.identity() & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
        if members.iter().all(|&a| members.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1)) {
            out.push(members);
        }
    }
    out.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.clone()));
    out
}

/// Computes `[ε₃|_{Ω'}]` for every subgroup `Ω'` of `Ω`.
pub fn classify_restrictions(sys: &CoxeterSystem) -> Result<OmegaReport, OmegaError> {
    let omega = omega_of(sys)?;
    let g = omega.group();
    let mut reports = Vec::new();
    for members in subgroups(&g) {
        // order the subgroup in its standard indexing
        let (shape, ordered, gens) = if members.len() == 4 && (1..4).all(|i| g.element_order(i) == 2) {
            (GroupShape::Klein, members.clone(), vec![1, 2])
        } else {
            let gen = *members.iter().max_by_key(|&&i| (g.element_order(i), std::cmp::Reverse(i))).unwrap();
            let mut powers = vec![g.identity()];
            while powers.len() < members.len() {
                powers.push(g.mul(*powers.last().unwrap(), gen));
            }
            let gens = if gen == g.identity() { vec![] } else { vec![gen] };
            (GroupShape::Cyclic(members.len()), powers, gens)
        };
        let elements: Vec<GroupElement> = ordered.iter().map(|&i| omega.elements[i].clone()).collect();
        let sub = shape.group();
        let cochain = restrict_cocycle(sys, 3, &elements)?;
        let verdict = is_coboundary(&sub, &cochain)?;
        let basis = standard_class_basis(shape)?;
        let coordinates = if basis.is_empty() {
            None
        } else {
            let v = class_coordinates(&sub, &cochain, &basis)?;
            Some(v.into_iter().map(u8::from).collect())
        };
        let label = if members.len() == g.order() {
            "Omega".to_string()
        } else if members.len() == 1 {
            "1".to_string()
        } else {
            format!("<{}>", gens.iter().map(|&i| omega.names[i].as_str()).collect::<Vec<_>>().join(","))
        };
        reports.push(SubgroupReport {
            label,
            generators: gens.iter().map(|&i| sys.format_element(&omega.elements[i])).collect(),
            order: members.len(),
            index: g.order() / members.len(),
            verdict: match verdict {
                Verdict::Trivial { .. } => "trivial",
                Verdict::Nontrivial { .. } => "nontrivial",
            }
            .to_string(),
            coordinates,
        });
    }
    let wall_orbits = sys
        .orbit_labels()
        .into_iter()
        .map(|l| WallOrbit {
            orbit: format!("s{}", l + 1),
            walls: sys.reflections().filter(|&t| sys.orbit_label(t) == l).count(),
        })
        .collect();
    Ok(OmegaReport {
        type_name: sys.descriptor().to_string(),
        omega_shape: omega.shape.to_string(),
        omega_order: omega.order(),
        elements: (0..omega.order())
            .map(|i| OmegaElementReport {
                name: omega.names[i].clone(),
                word: sys.format_element(&omega.elements[i]),
                length: omega.elements[i].length(),
                provenance: omega.provenance[i],
            })
            .collect(),
        subgroups: reports,
        wall_orbits,
    })
}

/// One row of the built-in expectation table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    #[serde(rename = "type")]
    pub type_name: String,
    pub omega_shape: String,
    pub verdicts: std::collections::BTreeMap<String, String>,
    #[serde(default)]
    pub coordinates: std::collections::BTreeMap<String, Vec<u8>>,
    pub note: String,
}

/// The shipped expectation table.
pub fn expected_table() -> Vec<Expectation> {
    serde_json::from_str(include_str!("../data/expected.json")).expect("bundled table parses")
}

pub fn expectation_for(type_name: &str) -> Option<Expectation> {
    expected_table().into_iter().find(|e| e.type_name == type_name)
}

/// Differences between a computed report and an expectation; empty when
/// everything matches.
pub fn diff_against(report: &OmegaReport, exp: &Expectation) -> Vec<String> {
    let mut out = Vec::new();
    if report.omega_shape != exp.omega_shape {
        out.push(format!("Ω shape: computed {}, expected {}", report.omega_shape, exp.omega_shape));
    }
    for (label, want) in &exp.verdicts {
        match report.subgroup(label) {
            None => out.push(format!("{label}: subgroup missing from report")),
            Some(s) if &s.verdict != want => out.push(format!("{label}: computed {}, expected {want}", s.verdict)),
            _ => {}
        }
    }
    for (label, want) in &exp.coordinates {
        match report.subgroup(label).and_then(|s| s.coordinates.as_ref()) {
            Some(c) if c == want => {}
            got => out.push(format!("{label}: coordinates {got:?}, expected {want:?}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: &str) -> CoxeterSystem {
        CoxeterSystem::build(t).unwrap()
    }

    #[test]
    fn orders() {
        for (t, k) in [("A1", 2), ("A3", 4), ("A4", 5), ("B3", 2), ("C4", 2), ("D4", 4), ("D5", 4), ("E6", 3), ("E7", 2), ("G2", 1), ("F4", 1)] {
            assert_eq!(omega_of(&sys(t)).unwrap().order(), k, "{t}");
        }
    }

    #[test]
    fn non_weyl_rejected() {
        assert!(matches!(omega_of(&sys("H3")), Err(OmegaError::NotWeyl(_))));
        assert!(matches!(omega_of(&sys("A1xA1")), Err(OmegaError::NotWeyl(_))));
    }

    #[test]
    fn a3_generator_is_coxeter_element() {
        let a3 = sys("A3");
        let om = omega_of(&a3).unwrap();
        assert_eq!(om.element_named("C").unwrap(), &a3.element_of(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn perp_types() {
        let c3 = sys("C3");
        let om = omega_of(&c3).unwrap();
        assert_eq!(perp_decomposition(&c3, &om.elements[1..]).unwrap().to_string(), "A1xA1");
        let d5 = sys("D5");
        let om = omega_of(&d5).unwrap();
        assert_eq!(perp_decomposition(&d5, &om.elements).unwrap().to_string(), "A3xA1");
        let d4 = sys("D4");
        let om = omega_of(&d4).unwrap();
        assert_eq!(perp_decomposition(&d4, &om.elements).unwrap().to_string(), "A1xA1xA1");
        let e7 = sys("E7");
        let om = omega_of(&e7).unwrap();
        assert_eq!(perp_decomposition(&e7, &om.elements[1..]).unwrap().to_string(), "A1xA1xA1");
    }

    #[test]
    fn expected_table_loads() {
        let t = expected_table();
        assert!(t.iter().any(|e| e.type_name == "E7"));
    }
}
