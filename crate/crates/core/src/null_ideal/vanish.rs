use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{eval_raw, Poly};
use crate::ring::{Elem, FiniteLocalRing};

/// Set a polynomial is evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    WholeRing,
    MaximalIdeal,
    /// The coset `c + m`.
    Coset(Elem),
    Set(Vec<Elem>),
}

impl Target {
    pub fn points(&self, ring: &FiniteLocalRing) -> Vec<Elem> {
        match self {
            Target::WholeRing => ring.elements().collect(),
            Target::MaximalIdeal => ring.maximal_ideal().to_vec(),
            Target::Coset(c) => ring.coset_elements(*c),
            Target::Set(s) => s.clone(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Target::WholeRing => "whole_ring",
            Target::MaximalIdeal => "maximal_ideal",
            Target::Coset(_) => "coset",
            Target::Set(_) => "set",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vanishing {
    Holds,
    /// First point (in target order) whose value leaves the ideal.
    Fails {
        point: Elem,
        value: Elem,
    },
}

impl Vanishing {
    pub fn holds(&self) -> bool {
        matches!(self, Vanishing::Holds)
    }
}

/// Whether `f` maps every point of `target` into `m^into` (`into = e`, or
/// larger, means into zero).
pub fn vanishes_on(ring: &FiniteLocalRing, f: &Poly, target: &Target, into: u32) -> Result<Vanishing> {
    if f.ring_id() != ring.id() {
        return Err(Error::ForeignElement);
    }
    let points = target.points(ring);
    if points.iter().any(|p| p.0 >= ring.order()) {
        return Err(Error::ForeignElement);
    }
    let into = into.min(ring.e());
    for s in points {
        let v = eval_raw(ring, f.coeffs(), s);
        if ring.val(v) < into {
            return Ok(Vanishing::Fails { point: s, value: v });
        }
    }
    Ok(Vanishing::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::null_ideal::pi_polynomial;

    #[test]
    fn examples() {
        let r9 = FiniteLocalRing::new("Z/9".parse().unwrap()).unwrap();
        let p9 = r9.poly_ring();
        let f = p9.parse("(x^3-x)^2").unwrap();
        assert!(vanishes_on(&r9, &f, &Target::WholeRing, 2).unwrap().holds());

        let r8 = FiniteLocalRing::new("Z/8".parse().unwrap()).unwrap();
        let p8 = r8.poly_ring();
        let e = r8.e();
        assert!(vanishes_on(&r8, &p8.parse("x^2-2x").unwrap(), &Target::MaximalIdeal, e).unwrap().holds());
        assert_eq!(
            vanishes_on(&r8, &p8.parse("x^2").unwrap(), &Target::MaximalIdeal, e).unwrap(),
            Vanishing::Fails { point: Elem(2), value: Elem(4) }
        );

        for s in ["Z/8", "Z/9", "F4[t]/t^2", "Z/25"] {
            let r = FiniteLocalRing::new(s.parse().unwrap()).unwrap();
            let pi = pi_polynomial(&r, None).unwrap();
            assert!(vanishes_on(&r, &pi, &Target::WholeRing, 1).unwrap().holds());
            assert!(!vanishes_on(&r, &pi, &Target::WholeRing, 2).unwrap().holds() || r.is_field());
        }
    }
}
