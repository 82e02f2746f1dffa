use alloc::vec::Vec;

use super::pi_polynomial;
use crate::error::Result;
use crate::poly::Poly;
use crate::ring::{Elem, FiniteLocalRing};

/// Nonzero / regular / principal status of `Z(R)` and `Z(m)`, with
/// witnesses. Over a finite local ring the answers are forced: both ideals
/// are nonzero and contain regular polynomials, and they are principal
/// exactly when `R` is a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullIdealClassification {
    pub is_field: bool,
    pub zfr_nonzero: bool,
    pub zfm_nonzero: bool,
    pub zfr_has_regular: bool,
    pub zfm_has_regular: bool,
    pub zfr_principal: bool,
    pub zfm_principal: bool,
    /// Nonzero annihilator `a` of `m` used by the nonzero witnesses.
    pub annihilator: Elem,
    /// `a * pi(x)`, a nonzero member of `Z(R)`.
    pub zfr_nonzero_witness: Poly,
    /// `a * x`, a nonzero member of `Z(m)`.
    pub zfm_nonzero_witness: Poly,
    /// `pi(x)^e`, monic and therefore regular.
    pub zfr_regular_witness: Poly,
    /// `x^e`.
    pub zfm_regular_witness: Poly,
    pub pi: Poly,
    /// For a field, the principal generators `pi` and `x`.
    pub principal_generators: Option<(Poly, Poly)>,
    /// Otherwise some `r` with `pi(r) != 0`.
    pub non_principal_witness: Option<(Elem, Elem)>,
}

pub fn classify_ring_nullideal(ring: &FiniteLocalRing) -> Result<NullIdealClassification> {
    let px = ring.poly_ring();
    let pi = pi_polynomial(ring, None)?;
    let z = ring.zero();
    let annihilator = ring
        .elements()
        .filter(|&a| a != z)
        .find(|&a| ring.maximal_ideal().iter().all(|&m| ring.mul(a, m) == z))
        .expect("the socle of a finite local ring is nonzero");
    let e = ring.e();
    let is_field = ring.is_field();
    let (principal_generators, non_principal_witness) = if is_field {
        (Some((pi.clone(), px.x())), None)
    } else {
        let r = ring.elements().map(|r| (r, px.eval(&pi, r))).find(|&(_, v)| v != z);
        (None, r)
    };
    let pts: Vec<Elem> = ring.elements().collect();
    debug_assert!(pts.iter().all(|&r| ring.val(px.eval(&pi, r)) >= 1));
    Ok(NullIdealClassification {
        is_field,
        zfr_nonzero: true,
        zfm_nonzero: true,
        zfr_has_regular: true,
        zfm_has_regular: true,
        zfr_principal: is_field,
        zfm_principal: is_field,
        annihilator,
        zfr_nonzero_witness: px.scale_elem(annihilator, &pi),
        zfm_nonzero_witness: px.scale_elem(annihilator, &px.x()),
        zfr_regular_witness: px.pow(&pi, e)?,
        zfm_regular_witness: px.pow(&px.x(), e)?,
        pi,
        principal_generators,
        non_principal_witness,
    })
}
