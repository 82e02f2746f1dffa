//! Zero-function ideals `Z(S, J)`: polynomials mapping `S` into `J`.
//!
//! The central objects are `Z(m)` and `Z(R)`. For a principal maximal ideal
//! `m = (m)` with nilpotency index `e <= q + 1` both have explicit generating
//! sets built from a pi-polynomial (a product of `x - c_i` over coset
//! representatives); those are carried as a [`StructuredIdeal`] together with
//! a decision rule for membership. Everything else is certified against the
//! exhaustive oracle.

mod classify;
mod count;
mod decompose;
mod generators;
mod intersection;
mod membership;
mod pi;
mod vanish;

use alloc::vec::Vec;

use crate::poly::Poly;
use crate::ring::{Elem, RingId};

pub use classify::{classify_ring_nullideal, NullIdealClassification};
pub use count::{count_polynomial_functions, normal_form_count, CountMethod};
pub use decompose::{
    decompose_zero_function, primary_decomposition, MinimalityWitness, PrimaryComponent, PrimaryDecomposition,
    ZeroFunctionDecomposition,
};
pub use generators::{compose_generators, null_maximal_generators, null_ring_generators, translate_ideal};
pub use intersection::{pi_intersection_check, IntersectionCheck, IntersectionWitness, SampleMode};
pub use membership::{ideal_membership, MembershipRule, MembershipVerdict, Violation};
pub use pi::{is_pi_polynomial, pi_polynomial, PiEnumerator};
pub use vanish::{vanishes_on, Target, Vanishing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealForm {
    /// `(pi(x), m)^e`.
    Power {
        pi: Poly,
        e: u32,
        m_gen: Elem,
    },
    /// `(pi(x), m)^e + (pi^{e-1} - m^{e-2} pi)`, only for `e = q + 1`.
    PowerPlus {
        pi: Poly,
        e: u32,
        m_gen: Elem,
    },
    GeneratorList {
        gens: Vec<Poly>,
    },
}

impl IdealForm {
    pub fn tag(&self) -> &'static str {
        match self {
            IdealForm::Power { .. } => "PowerForm",
            IdealForm::PowerPlus { .. } => "PowerPlusForm",
            IdealForm::GeneratorList { .. } => "GeneratorList",
        }
    }
}

/// An ideal of `R[x]` in one of three presentations, with its explicit
/// generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredIdeal {
    ring: RingId,
    form: IdealForm,
    expanded: Vec<Poly>,
}

impl StructuredIdeal {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn form(&self) -> &IdealForm {
        &self.form
    }

    /// Generators with zero polynomials dropped and duplicates removed.
    pub fn expanded_gens(&self) -> &[Poly] {
        &self.expanded
    }

    /// True for the two forms with a membership decision rule.
    pub fn is_structured(&self) -> bool {
        !matches!(self.form, IdealForm::GeneratorList { .. })
    }
}
