//! Type descriptors ("A3", "B2xA1", "I2(5)", "A1^3") and the data each
//! irreducible factor contributes to a root system.

use std::fmt;
use std::str::FromStr;

use crate::arith::{Gram, RootVector, Scalar};

use super::CoxeterError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

/// One irreducible factor. For `I` the rank is always 2 and `m` is the
/// dihedral order parameter; for every other family `m` is unused (0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Irreducible {
    pub family: Family,
    pub rank: usize,
    pub m: usize,
}

impl Irreducible {
    pub fn new(family: Family, rank: usize) -> Result<Irreducible, CoxeterError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::H => rank == 3 || rank == 4,
            Family::I => false,
        };
        if !ok {
            return Err(CoxeterError::UnknownType(format!("{family:?}{rank}")));
        }
        Ok(Irreducible { family, rank, m: 0 })
    }

    pub fn dihedral(m: usize) -> Result<Irreducible, CoxeterError> {
        if m < 2 {
            return Err(CoxeterError::UnknownType(format!("I2({m})")));
        }
        Ok(Irreducible { family: Family::I, rank: 2, m })
    }

    pub fn is_crystallographic(&self) -> bool {
        match self.family {
            Family::H => false,
            Family::I => matches!(self.m, 2 | 3 | 4 | 6),
            _ => true,
        }
    }

    /// Number of positive roots.
    pub fn positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
            Family::H => [15, 60][n - 3],
            Family::I => self.m,
        }
    }

    pub fn group_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => [51_840, 2_903_040, 696_729_600][self.rank - 6],
            Family::F => 1152,
            Family::G => 12,
            Family::H => [120, 14_400][self.rank - 3],
            Family::I => 2 * self.m as u64,
        }
    }
}

impl fmt::Display for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::I {
            write!(f, "I2({})", self.m)
        } else {
            write!(f, "{:?}{}", self.family, self.rank)
        }
    }
}

/// A finite Coxeter type: a product of irreducible factors, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeDescriptor(pub Vec<Irreducible>);

impl TypeDescriptor {
    pub fn rank(&self) -> usize {
        self.0.iter().map(|f| f.rank).sum()
    }

    pub fn factors(&self) -> &[Irreducible] {
        &self.0
    }

    /// Factors sorted into a canonical order (largest rank first), so that
    /// two descriptors of isomorphic products compare equal.
    pub fn canonical(&self) -> TypeDescriptor {
        let mut fs = self.0.clone();
        fs.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.cmp(b)));
        TypeDescriptor(fs)
    }
}

impl fmt::Display for TypeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

fn parse_factor(tok: &str) -> Result<Vec<Irreducible>, CoxeterError> {
    let unknown = || CoxeterError::UnknownType(tok.to_string());
    let (body, power) = match tok.split_once('^') {
        Some((b, p)) => (b, p.trim().parse::<usize>().map_err(|_| unknown())?),
        None => (tok, 1),
    };
    let body = body.trim();
    let mut chars = body.chars();
    let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let rest = chars.as_str();
    let factor = if letter == 'I' {
        let inner = rest
            .strip_prefix("2(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(unknown)?;
        Irreducible::dihedral(inner.trim().parse().map_err(|_| unknown())?)?
    } else {
        let family = match letter {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            'H' => Family::H,
            _ => return Err(unknown()),
        };
        let rank = rest.parse::<usize>().map_err(|_| unknown())?;
        Irreducible::new(family, rank).map_err(|_| unknown())?
    };
    if power == 0 {
        return Err(unknown());
    }
    Ok(vec![factor; power])
}

impl FromStr for TypeDescriptor {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CoxeterError::UnknownType(String::new()));
        }
        if s.contains(['[', ']', ';']) || s.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(CoxeterError::Unsupported(s.to_string()));
        }
        let mut factors = Vec::new();
        for tok in s.split(['x', 'X', '×', '*']) {
            factors.extend(parse_factor(tok.trim())?);
        }
        Ok(TypeDescriptor(factors))
    }
}

/// How a factor's roots are realized.
#[derive(Clone, Debug)]
pub(crate) enum FactorModel {
    /// Roots in simple-root coordinates with an exact Gram form, plus an
    /// optional ambient embedding of the simple roots (classical types).
    Scalar {
        gram: Gram,
        ambient: Option<Vec<RootVector>>,
    },
    /// Roots of I2(m) indexed by direction `j ∈ 0..2m` at angle `jπ/m`.
    Dihedral { m: usize },
}

fn unit(n: usize, i: usize, v: i64) -> RootVector {
    let mut r = vec![Scalar::zero(); n];
    r[i] = Scalar::int(v);
    r
}

fn diff(n: usize, i: usize, j: usize, sj: i64) -> RootVector {
    let mut r = unit(n, i, 1);
    r[j] = Scalar::int(sj);
    r
}

fn gram_from_ambient(simple: &[RootVector]) -> Gram {
    let dot = |u: &RootVector, v: &RootVector| {
        u.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
    };
    Gram(simple.iter().map(|u| simple.iter().map(|v| dot(u, v)).collect()).collect())
}

fn gram_from_edges(rank: usize, diag: &[Scalar], edges: &[(usize, usize, Scalar)]) -> Gram {
    let mut g = vec![vec![Scalar::zero(); rank]; rank];
    for i in 0..rank {
        g[i][i] = diag[i].clone();
    }
    for (i, j, v) in edges {
        g[*i][*j] = v.clone();
        g[*j][*i] = v.clone();
    }
    Gram(g)
}

/// Bourbaki-numbered simple roots (0-based here).
pub(crate) fn factor_model(f: &Irreducible) -> FactorModel {
    let n = f.rank;
    let classical = |ambient: Vec<RootVector>| FactorModel::Scalar {
        gram: gram_from_ambient(&ambient),
        ambient: Some(ambient),
    };
    match f.family {
        Family::A => classical((0..n).map(|i| diff(n + 1, i, i + 1, -1)).collect()),
        Family::B | Family::C | Family::D => {
            let mut s: Vec<RootVector> = (0..n - 1).map(|i| diff(n, i, i + 1, -1)).collect();
            s.push(match f.family {
                Family::B => unit(n, n - 1, 1),
                Family::C => unit(n, n - 1, 2),
                _ => diff(n, n - 2, n - 1, 1),
            });
            classical(s)
        }
        Family::E => {
            // 1-3-4-5-6-7-8 chain with 2 attached to 4
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..n - 1).map(|i| (i, i + 1)));
            let edges: Vec<_> = edges.into_iter().map(|(i, j)| (i, j, Scalar::int(-1))).collect();
            FactorModel::Scalar { gram: gram_from_edges(n, &vec![Scalar::int(2); n], &edges), ambient: None }
        }
        Family::F => {
            let diag = [2, 2, 1, 1].map(Scalar::int);
            let edges = vec![(0, 1, Scalar::int(-1)), (1, 2, Scalar::int(-1)), (2, 3, Scalar::ratio(-1, 2))];
            FactorModel::Scalar { gram: gram_from_edges(4, &diag, &edges), ambient: None }
        }
        Family::G => {
            let diag = [2, 6].map(Scalar::int);
            FactorModel::Scalar { gram: gram_from_edges(2, &diag, &[(0, 1, Scalar::int(-3))]), ambient: None }
        }
        Family::H => {
            // B(αi, αj) = -2cos(π/m): -φ for m = 5, -1 for m = 3
            let mut edges = vec![(0, 1, -Scalar::phi()), (1, 2, Scalar::int(-1))];
            if n == 4 {
                edges.push((2, 3, Scalar::int(-1)));
            }
            FactorModel::Scalar { gram: gram_from_edges(n, &vec![Scalar::int(2); n], &edges), ambient: None }
        }
        Family::I => FactorModel::Dihedral { m: f.m },
    }
}
