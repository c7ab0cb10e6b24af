use serde_json::{json, Value};

use super::{eval_z, Coefficients, CocycleError, WallChain};
use crate::coxeter::{CoxeterSystem, GroupElement};

/// An element `(a, x)` of the extension `1 → ℤ[𝓗] → W^# → W → 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionElement {
    pub chain: WallChain,
    pub element: GroupElement,
}

impl ExtensionElement {
    pub fn new(chain: WallChain, element: GroupElement) -> ExtensionElement {
        ExtensionElement { chain, element }
    }

    /// `(0, x)`.
    pub fn lift(x: &GroupElement) -> ExtensionElement {
        ExtensionElement { chain: WallChain::zero(), element: x.clone() }
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        json!({ "chain": self.chain.to_json(sys), "element": sys.format_element(&self.element) })
    }
}

/// `(a, x)(b, y) = (a + x·b + Z₂(x, y), xy)`, with `Z₂(x, y) ∈ ℤ[𝒟]⁺`
/// folded into `ℤ[𝓗]` by `[D⁺_H] + [D⁻_H] ↦ [H]`.
pub fn extension_multiply(
    sys: &CoxeterSystem,
    p: &ExtensionElement,
    q: &ExtensionElement,
) -> Result<ExtensionElement, CocycleError> {
    let pair = [p.element.clone(), q.element.clone()];
    let z = eval_z(sys, 2, &pair)?.fold().expect("Z₂ takes values in the σ-invariant part");
    let mut chain = p.chain.clone();
    chain.add_signed(&q.chain.act(sys, &p.element), 1);
    chain.add_signed(&z, 1);
    Ok(ExtensionElement { chain, element: p.element.mul(&q.element) })
}
