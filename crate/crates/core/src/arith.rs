//! Exact scalars for root-system construction.
//!
//! Two scalar fields are supported: the rationals, and the golden field
//! `Q(φ)` with `φ² = φ + 1`, which carries the non-crystallographic types
//! H3 and H4. Every operation is exact; no floating point is involved.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// An exact real number, either rational or an element `a + bφ` of the
/// golden field.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Golden(BigRational, BigRational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        use Sign::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Positive, Positive) | (Negative, Negative) => Positive,
            _ => Negative,
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::Rational(rat(n))
    }

    pub fn ratio(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The golden ratio φ.
    pub fn phi() -> Scalar {
        Scalar::Golden(BigRational::zero(), BigRational::one())
    }

    /// `a + bφ` with integer parts.
    pub fn golden(a: i64, b: i64) -> Scalar {
        Scalar::Golden(rat(a), rat(b))
    }

    /// Rational and φ-parts `(a, b)` of `a + bφ`.
    pub fn parts(&self) -> (BigRational, BigRational) {
        match self {
            Scalar::Rational(a) => (a.clone(), BigRational::zero()),
            Scalar::Golden(a, b) => (a.clone(), b.clone()),
        }
    }

    pub fn is_golden(&self) -> bool {
        matches!(self, Scalar::Golden(..))
    }

    pub fn is_zero(&self) -> bool {
        let (a, b) = self.parts();
        a.is_zero() && b.is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        let (a, b) = self.parts();
        (b.is_zero() && a.is_integer()).then(|| a.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.to_integer().and_then(|n| n.to_i64())
    }

    fn build(golden: bool, a: BigRational, b: BigRational) -> Scalar {
        if golden {
            Scalar::Golden(a, b)
        } else {
            debug_assert!(b.is_zero());
            Scalar::Rational(a)
        }
    }

    /// Exact sign. For `a + bφ` this compares `2a + b` against `-b√5` by
    /// squaring, so no irrational value is ever approximated.
    pub fn sign(&self) -> Sign {
        let (a, b) = self.parts();
        if b.is_zero() {
            return Sign::of_ordering(a.cmp(&BigRational::zero()));
        }
        // a + bφ = (p + q√5) / 2 with p = 2a + b, q = b.
        let p = &a + &a + &b;
        let q = b;
        let zero = BigRational::zero();
        match (p.cmp(&zero), q.cmp(&zero)) {
            (Ordering::Less | Ordering::Equal, Ordering::Less) => Sign::Negative,
            (Ordering::Greater | Ordering::Equal, Ordering::Greater) => Sign::Positive,
            (Ordering::Greater, Ordering::Less) => {
                // p > 0 > q: positive iff p² > 5q²
                Sign::of_ordering((&p * &p).cmp(&(rat(5) * &q * &q)))
            }
            (Ordering::Less, Ordering::Greater) => {
                Sign::of_ordering((rat(5) * &q * &q).cmp(&(&p * &p)))
            }
            (_, Ordering::Equal) => unreachable!("q is nonzero here"),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let golden = self.is_golden() || other.is_golden();
        let (a, b) = self.parts();
        let (c, d) = other.parts();
        if d.is_zero() {
            return Ok(Scalar::build(golden, a / &c, b / c));
        }
        // (c + dφ)^{-1} = (c + d - dφ) / (c² + cd - d²)
        let norm = &c * &c + &c * &d - &d * &d;
        let conj = Scalar::Golden((&c + &d) / &norm, -d / norm);
        Ok(self * &conj)
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.parts() == other.parts()
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts().hash(state);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        Scalar::build(self.is_golden() || rhs.is_golden(), a + c, b + d)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        Scalar::build(self.is_golden() || rhs.is_golden(), a - c, b - d)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
        let bd = &b * &d;
        let re = &a * &c + &bd;
        let im = a * d + b * c + bd;
        Scalar::build(self.is_golden() || rhs.is_golden(), re, im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Golden(a, b) => Scalar::Golden(-a, -b),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.parts();
        if b.is_zero() {
            return write!(f, "{}", fmt_rat(&a));
        }
        let coeff = |x: &BigRational| {
            if x.abs().is_one() {
                String::new()
            } else {
                fmt_rat(&x.abs())
            }
        };
        if a.is_zero() {
            let sign = if b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{}φ", coeff(&b))
        } else {
            let sign = if b.is_negative() { '-' } else { '+' };
            write!(f, "{}{sign}{}φ", fmt_rat(&a), coeff(&b))
        }
    }
}

/// Coordinates of a vector in some fixed basis.
pub type RootVector = Vec<Scalar>;

/// A symmetric bilinear form given by its matrix in the coordinate basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gram(pub Vec<Vec<Scalar>>);

impl Gram {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar, ArithError> {
        let n = self.dim();
        if u.len() != n || v.len() != n {
            return Err(ArithError::DimensionMismatch(u.len().max(v.len()), n));
        }
        let mut acc = Scalar::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || self.0[i][j].is_zero() {
                    continue;
                }
                acc = &acc + &(&(ui * vj) * &self.0[i][j]);
            }
        }
        Ok(acc)
    }
}

/// `v - 2 B(root, v) / B(root, root) · root`.
pub fn reflect_vector(v: &[Scalar], root: &[Scalar], gram: &Gram) -> Result<RootVector, ArithError> {
    let rr = gram.apply(root, root)?;
    let rv = gram.apply(root, v)?;
    let k = (&Scalar::int(2) * &rv).checked_div(&rr)?;
    Ok(v.iter()
        .zip(root)
        .map(|(x, r)| x - &(&k * r))
        .collect())
}

/// Exact Gaussian elimination helpers over the scalar field.
pub mod linalg {
    use super::{ArithError, Scalar};

    /// Reduced row echelon form; returns pivot columns.
    pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Result<Vec<usize>, ArithError> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = Scalar::one().checked_div(&rows[r][c])?;
            rows[r] = rows[r].iter().map(|x| x * &inv).collect();
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    let pivot_row = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        Ok(pivots)
    }

    pub fn rank(rows: &[Vec<Scalar>]) -> Result<usize, ArithError> {
        let mut m = rows.to_vec();
        Ok(rref(&mut m)?.len())
    }

    /// Basis of `{x : A x = 0}` for an `m × ncols` matrix `A`.
    pub fn kernel(rows: &[Vec<Scalar>], ncols: usize) -> Result<Vec<Vec<Scalar>>, ArithError> {
        let mut m = rows.to_vec();
        let pivots = rref(&mut m)?;
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        Ok(free
            .iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); ncols];
                v[f] = Scalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&m[row][f];
                }
                v
            })
            .collect())
    }
}
