use alloc::vec::Vec;

use super::{
    is_pi_polynomial, null_maximal_generators, translate_ideal, vanishes_on, StructuredIdeal, Target, Vanishing,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Elem, FiniteLocalRing};

/// `f = sum_i x^i p_i(pi(x))` for a zero function `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroFunctionDecomposition {
    pub parts: Vec<Poly>,
    /// Whether each `p_i` vanishes on `m`.
    pub part_checks: Vec<Vanishing>,
    /// Coefficient-exact reconstruction of `f` from the parts.
    pub reconstructs: bool,
}

impl ZeroFunctionDecomposition {
    pub fn certified(&self) -> bool {
        self.reconstructs && self.part_checks.iter().all(Vanishing::holds)
    }
}

pub fn decompose_zero_function(ring: &FiniteLocalRing, f: &Poly, pi: &Poly) -> Result<ZeroFunctionDecomposition> {
    if let Vanishing::Fails { point, value } = vanishes_on(ring, f, &Target::WholeRing, ring.e())? {
        return Err(Error::NotAZeroFunction { element: ring.label(point), value: ring.label(value) });
    }
    if !is_pi_polynomial(ring, pi) {
        return Err(Error::NotAPiPolynomial);
    }
    let px = ring.poly_ring();
    let parts = px.bivariate_remainder(f, pi)?;
    let part_checks =
        parts.iter().map(|p| vanishes_on(ring, p, &Target::MaximalIdeal, ring.e())).collect::<Result<Vec<_>>>()?;
    let reconstructs = px.recombine(&parts, pi)? == *f;
    Ok(ZeroFunctionDecomposition { parts, part_checks, reconstructs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub center: Elem,
    /// `Z(c + m)`, the generators of `Z(m)` translated by `c`.
    pub ideal: StructuredIdeal,
    /// `x - c` followed by generators of `m`.
    pub associated_prime_gens: Vec<Poly>,
}

impl PrimaryComponent {
    pub fn generators(&self) -> &[Poly] {
        self.ideal.expanded_gens()
    }
}

/// `h_j = prod_{i != j} (x - c_i)^e`, which vanishes on every coset but
/// the `j`-th and takes the unit value `h_j(c_j)` there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityWitness {
    pub index: usize,
    pub h: Poly,
    pub value: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    pub components: Vec<PrimaryComponent>,
    pub minimality_witnesses: Vec<MinimalityWitness>,
}

/// `Z(R) = Z(c_1 + m) ∩ ... ∩ Z(c_q + m)`.
///
/// `maximal` is a presentation of `Z(m)`; without one the structured
/// generators are used, which requires a principal maximal ideal.
pub fn primary_decomposition(
    ring: &FiniteLocalRing,
    maximal: Option<&StructuredIdeal>,
    reps: Option<&[Elem]>,
) -> Result<PrimaryDecomposition> {
    let owned;
    let maximal = match maximal {
        Some(m) => m,
        None => {
            owned = null_maximal_generators(ring)?;
            &owned
        }
    };
    let reps = reps.unwrap_or(ring.reps());
    ring.check_reps(reps)?;
    let px = ring.poly_ring();
    let m_gens: Vec<Poly> = ring.maximal_ideal_generators().into_iter().map(|m| px.constant(m)).collect();
    let components = reps
        .iter()
        .map(|&c| {
            let mut associated_prime_gens = Vec::with_capacity(m_gens.len() + 1);
            associated_prime_gens.push(px.linear(c));
            associated_prime_gens.extend(m_gens.iter().cloned());
            Ok(PrimaryComponent { center: c, ideal: translate_ideal(ring, maximal, c)?, associated_prime_gens })
        })
        .collect::<Result<Vec<_>>>()?;
    let minimality_witnesses = (0..reps.len())
        .map(|j| {
            let others: Vec<Elem> = reps
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .flat_map(|(_, &c)| core::iter::repeat_n(c, ring.e() as usize))
                .collect();
            let h = px.product_of_linears(&others);
            let value = px.eval(&h, reps[j]);
            debug_assert!(ring.is_unit(value), "h_{j}(c_{j}) is not a unit");
            MinimalityWitness { index: j, h, value }
        })
        .collect();
    Ok(PrimaryDecomposition { components, minimality_witnesses })
}
