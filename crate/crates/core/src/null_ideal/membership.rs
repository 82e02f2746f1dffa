//! Membership in `(pi, m)^e` and `(pi, m)^e + (pi^{e-1} - m^{e-2} pi)`.
//!
//! Write `f = sum a_k pi^k` with `deg a_k < deg pi`. Since `pi` is monic the
//! expansion is unique and `R`-linear, and multiplying by `m^{e-k} pi^k`
//! shifts digits up by `k` while scaling them into `m^{e-k}`. Hence
//! `f in (pi, m)^e` iff every coefficient of `a_k` lies in `m^{e-k}` for
//! `k < e`. With the extra binomial (and `e = q + 1`, writing `q = e - 1`)
//! the digit `a_q` becomes free and `a_1` is only constrained through
//! `a_1 + m^{q-1} a_q in m^q`; everything else is unchanged.

use alloc::vec::Vec;

use super::{IdealForm, StructuredIdeal};
use crate::error::{Error, Result};
use crate::poly::{divrem_monic_raw, Poly};
use crate::ring::{Elem, FiniteLocalRing};

/// First digit coefficient that fails its valuation threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    /// Digit index `k` of the pi-adic expansion.
    pub digit: usize,
    /// Coefficient index inside that digit.
    pub coefficient: usize,
    pub valuation: u32,
    pub required: u32,
    /// Set when the checked value was `a_1 + m^{q-1} a_q` rather than `a_1`.
    pub combined: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub expansion: Vec<Poly>,
    pub violation: Option<Violation>,
}

/// Precomputed decision rule for a structured ideal.
#[derive(Debug, Clone)]
pub struct MembershipRule {
    pi: Vec<Elem>,
    e: u32,
    /// `Some((q, m^{q-1}))` for the power-plus form.
    plus: Option<(usize, Elem)>,
}

impl MembershipRule {
    pub fn new(ring: &FiniteLocalRing, ideal: &StructuredIdeal) -> Result<Self> {
        if ideal.ring_id() != ring.id() {
            return Err(Error::ForeignElement);
        }
        match ideal.form() {
            IdealForm::Power { pi, e, .. } => Ok(MembershipRule { pi: pi.coeffs().to_vec(), e: *e, plus: None }),
            IdealForm::PowerPlus { pi, e, m_gen } => {
                let q = *e as usize - 1;
                Ok(MembershipRule { pi: pi.coeffs().to_vec(), e: *e, plus: Some((q, ring.pow(*m_gen, q as u32 - 1))) })
            }
            IdealForm::GeneratorList { .. } => Err(Error::UnsupportedForm),
        }
    }

    /// Required valuation of the coefficients of digit `k`; `None` when the
    /// digit is free or checked jointly with another.
    pub fn threshold(&self, k: usize) -> Option<u32> {
        if k >= self.e as usize {
            return None;
        }
        match self.plus {
            Some((q, _)) if k == q => None,
            _ => Some(self.e - k as u32),
        }
    }

    /// Thresholds for digits `0..e`, with the jointly checked digit `1`
    /// reported at its combined threshold and the free digit at `0`.
    pub fn thresholds(&self) -> Vec<u32> {
        (0..self.e as usize).map(|k| self.threshold(k).unwrap_or(0)).collect()
    }

    fn digits(&self, ring: &FiniteLocalRing, coeffs: &[Elem]) -> Vec<Vec<Elem>> {
        let mut digits = Vec::new();
        let mut cur = coeffs.to_vec();
        while !cur.is_empty() {
            let q = divrem_monic_raw(ring, &mut cur, &self.pi);
            digits.push(core::mem::replace(&mut cur, q));
        }
        digits
    }

    fn check_digits(&self, ring: &FiniteLocalRing, digits: &[Vec<Elem>]) -> Option<Violation> {
        let zero = ring.zero();
        let get = |k: usize, i: usize| digits.get(k).and_then(|d| d.get(i)).copied().unwrap_or(zero);
        let width = self.pi.len() - 1;
        for k in 0..self.e as usize {
            let Some(required) = self.threshold(k) else { continue };
            for i in 0..width {
                let mut c = get(k, i);
                let mut combined = false;
                if let (Some((q, mq)), 1) = (self.plus, k) {
                    c = ring.add(c, ring.mul(mq, get(q, i)));
                    combined = true;
                }
                let valuation = ring.val(c);
                if valuation < required {
                    return Some(Violation { digit: k, coefficient: i, valuation, required, combined });
                }
            }
        }
        None
    }

    /// Membership for a raw (normalized or not) coefficient vector.
    pub fn is_member(&self, ring: &FiniteLocalRing, coeffs: &[Elem]) -> bool {
        self.check_digits(ring, &self.digits(ring, coeffs)).is_none()
    }

    pub fn decide(&self, ring: &FiniteLocalRing, f: &Poly) -> MembershipVerdict {
        let digits = self.digits(ring, f.coeffs());
        let violation = self.check_digits(ring, &digits);
        let px = ring.poly_ring();
        MembershipVerdict {
            member: violation.is_none(),
            expansion: digits.into_iter().map(|d| px.from_coeffs(d)).collect(),
            violation,
        }
    }
}

pub fn ideal_membership(ring: &FiniteLocalRing, f: &Poly, ideal: &StructuredIdeal) -> Result<MembershipVerdict> {
    if f.ring_id() != ring.id() {
        return Err(Error::ForeignElement);
    }
    Ok(MembershipRule::new(ring, ideal)?.decide(ring, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::null_ideal::{null_maximal_generators, null_ring_generators};

    fn ring(s: &str) -> FiniteLocalRing {
        FiniteLocalRing::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn z8_power_plus_examples() {
        let r = ring("Z/8");
        let zm = null_maximal_generators(&r).unwrap();
        let px = r.poly_ring();
        let v = ideal_membership(&r, &px.parse("4x").unwrap(), &zm).unwrap();
        assert!(v.member);
        let v = ideal_membership(&r, &px.parse("x^2").unwrap(), &zm).unwrap();
        assert!(!v.member);
        assert_eq!(
            v.violation,
            Some(Violation { digit: 1, coefficient: 0, valuation: 1, required: 2, combined: true })
        );
        assert!(ideal_membership(&r, &px.parse("x^2-2x").unwrap(), &zm).unwrap().member);
        assert!(ideal_membership(&r, &px.parse("x^3").unwrap(), &zm).unwrap().member);
        assert!(!ideal_membership(&r, &px.parse("2x").unwrap(), &zm).unwrap().member);
        assert!(!ideal_membership(&r, &px.parse("4").unwrap(), &zm).unwrap().member);
    }

    #[test]
    fn z9_power_examples() {
        let r = ring("Z/9");
        let px = r.poly_ring();
        let zr = null_ring_generators(&r, Some(&px.parse("x^3-x").unwrap())).unwrap();
        let v = ideal_membership(&r, &px.parse("(x^3-x)^2").unwrap(), &zr).unwrap();
        assert!(v.member);
        let v = ideal_membership(&r, &px.parse("x^3-x").unwrap(), &zr).unwrap();
        assert!(!v.member);
        let viol = v.violation.unwrap();
        assert_eq!((viol.digit, viol.valuation, viol.required), (1, 0, 1));
        assert_eq!(v.expansion, [px.zero(), px.one()]);
    }

    #[test]
    fn generator_lists_are_refused() {
        let r = ring("Z/9");
        let ideal = StructuredIdeal::generator_list(&r, alloc::vec![r.poly_ring().x()]).unwrap();
        assert_eq!(ideal_membership(&r, &r.poly_ring().x(), &ideal), Err(Error::UnsupportedForm));
    }
}
