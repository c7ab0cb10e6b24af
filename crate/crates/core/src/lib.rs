//! Higher sign cocycles on finite Coxeter groups.
//!
//! The crate enumerates root systems exactly, evaluates the universal
//! collapsing cocycles `Z_n` and the signs `ε_n` they induce, decides
//! triviality of `F₂` cohomology classes on small groups, and restricts
//! `ε₃` to the fundamental group `Ω` of each Weyl type.

pub mod arith;
pub mod cocycle;
pub mod cohomology;
pub mod coxeter;
pub mod omega;
pub mod verify;

pub use arith::{ArithError, Gram, RootVector, Scalar, Sign};
pub use coxeter::{
    CoxeterError, CoxeterSystem, DiagramAutomorphism, Family, GroupElement, Irreducible, ParseError, Reflection,
    TypeDescriptor,
};
pub use cocycle::{Backend, CocycleError, HalfSpaceChain, OrbitChain, Side, SignValue, WallChain};
pub use cohomology::{Cochain, CohomologyError, GroupShape, SmallGroup, Verdict};
pub use omega::{OmegaError, OmegaGroup, OmegaReport};
pub use verify::{Suite, SweepMode, VerifyError, VerifyPlan, VerifyReport};
