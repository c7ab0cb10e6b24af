use std::fmt;
use std::ops::Mul;

/// An element of W, stored as the permutation it induces on the root set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    system: u64,
    npos: u16,
    length: u32,
    perm: Box<[u16]>,
}

impl GroupElement {
    pub(crate) fn from_perm(system: u64, npos: usize, perm: Box<[u16]>) -> GroupElement {
        let length = perm[..npos].iter().filter(|&&x| (x as usize) >= npos).count() as u32;
        GroupElement { system, npos: npos as u16, length, perm }
    }

    pub(crate) fn system_id(&self) -> u64 {
        self.system
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Index of `w(root)`.
    #[inline]
    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    /// Index of `w⁻¹(root)`.
    pub fn inverse_apply(&self, root: usize) -> usize {
        self.perm.iter().position(|&x| x as usize == root).expect("perm is a bijection")
    }

    /// `self ∘ other`, i.e. apply `other` first.
    ///
    /// Panics if the two elements come from different systems; use
    /// [`CoxeterSystem::compose`](super::CoxeterSystem::compose) for a
    /// checked version.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.system, other.system, "elements of different Coxeter systems");
        let perm: Box<[u16]> = other.perm.iter().map(|&x| self.perm[x as usize]).collect();
        GroupElement::from_perm(self.system, self.npos as usize, perm)
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &x) in self.perm.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        GroupElement { system: self.system, npos: self.npos, length: self.length, perm: inv.into_boxed_slice() }
    }

    pub fn pow(&self, k: usize) -> GroupElement {
        let mut acc = GroupElement::from_perm(self.system, self.npos as usize, (0..self.perm.len() as u16).collect());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.mul(self);
            k += 1;
        }
        k
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        GroupElement::mul(self, rhs)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(len {}, {:?})", self.length, &self.perm[..self.npos as usize])
    }
}
