use alloc::vec;
use alloc::vec::Vec;

use super::{is_pi_polynomial, pi_polynomial, vanishes_on, IdealForm, StructuredIdeal, Target};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Elem, FiniteLocalRing};

fn dedup_nonzero(gens: Vec<Poly>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

impl StructuredIdeal {
    fn build(ring: &FiniteLocalRing, form: IdealForm) -> Result<Self> {
        let px = ring.poly_ring();
        let expanded = match &form {
            IdealForm::Power { pi, e, m_gen } | IdealForm::PowerPlus { pi, e, m_gen } => {
                // m^{e-k} pi^k for k = e down to 0
                let mut gens = Vec::with_capacity(*e as usize + 2);
                let mut pi_pow = vec![px.one()];
                for k in 1..=*e {
                    pi_pow.push(px.mul(&pi_pow[k as usize - 1], pi)?);
                }
                for k in (0..=*e).rev() {
                    let c = ring.pow(*m_gen, e - k);
                    gens.push(px.scale_elem(c, &pi_pow[k as usize]));
                }
                if let IdealForm::PowerPlus { .. } = form {
                    let q = e - 1;
                    let extra = px.sub(&pi_pow[q as usize], &px.scale_elem(ring.pow(*m_gen, q - 1), pi))?;
                    gens.push(extra);
                }
                gens
            }
            IdealForm::GeneratorList { gens } => gens.clone(),
        };
        Ok(StructuredIdeal { ring: ring.id(), form, expanded: dedup_nonzero(expanded) })
    }

    /// `(pi, m)^e` for a monic `pi`.
    pub fn power(ring: &FiniteLocalRing, pi: Poly, e: u32, m_gen: Elem) -> Result<Self> {
        check_monic(ring, &pi)?;
        Self::build(ring, IdealForm::Power { pi, e, m_gen })
    }

    /// `(pi, m)^e + (pi^{e-1} - m^{e-2} pi)` for a monic `pi`, `e >= 3`.
    pub fn power_plus(ring: &FiniteLocalRing, pi: Poly, e: u32, m_gen: Elem) -> Result<Self> {
        check_monic(ring, &pi)?;
        if e < 3 {
            return Err(Error::OutOfTheoremRange { e, q: e.saturating_sub(1) });
        }
        Self::build(ring, IdealForm::PowerPlus { pi, e, m_gen })
    }

    pub fn generator_list(ring: &FiniteLocalRing, gens: Vec<Poly>) -> Result<Self> {
        if gens.iter().any(|g| g.ring_id() != ring.id()) {
            return Err(Error::ForeignElement);
        }
        Self::build(ring, IdealForm::GeneratorList { gens })
    }
}

fn check_monic(ring: &FiniteLocalRing, pi: &Poly) -> Result<()> {
    if pi.ring_id() != ring.id() {
        return Err(Error::ForeignElement);
    }
    if !ring.poly_ring().is_monic(pi) {
        return Err(Error::NotMonic);
    }
    Ok(())
}

/// Generators of `Z(m)` for a principal maximal ideal with `e <= q + 1`:
/// `(x, m)^e` when `e <= q`, `(x, m)^e + (x^q - m^{q-1} x)` when `e = q + 1`.
pub fn null_maximal_generators(ring: &FiniteLocalRing) -> Result<StructuredIdeal> {
    let m = ring.maximal_generator().ok_or(Error::NonPrincipalMaximalIdeal)?;
    let (q, e) = (ring.q(), ring.e());
    let x = ring.poly_ring().x();
    let ideal = if e <= q {
        StructuredIdeal::power(ring, x, e, m)?
    } else if e == q + 1 {
        StructuredIdeal::power_plus(ring, x, e, m)?
    } else {
        return Err(Error::OutOfTheoremRange { e, q });
    };
    for g in ideal.expanded_gens() {
        assert!(vanishes_on(ring, g, &Target::MaximalIdeal, e)?.holds(), "generator of Z(m) does not vanish on m");
    }
    Ok(ideal)
}

/// Generators of `Z(R)`: the generators of `Z(m)` composed with a
/// pi-polynomial (the canonical one by default).
pub fn null_ring_generators(ring: &FiniteLocalRing, pi: Option<&Poly>) -> Result<StructuredIdeal> {
    let pi = match pi {
        Some(p) => {
            if !is_pi_polynomial(ring, p) {
                return Err(Error::NotAPiPolynomial);
            }
            p.clone()
        }
        None => pi_polynomial(ring, None)?,
    };
    let zm = null_maximal_generators(ring)?;
    let ideal = match zm.form() {
        IdealForm::Power { e, m_gen, .. } => StructuredIdeal::power(ring, pi, *e, *m_gen)?,
        IdealForm::PowerPlus { e, m_gen, .. } => StructuredIdeal::power_plus(ring, pi, *e, *m_gen)?,
        IdealForm::GeneratorList { .. } => unreachable!("Z(m) is always structured here"),
    };
    for g in ideal.expanded_gens() {
        assert!(vanishes_on(ring, g, &Target::WholeRing, ring.e())?.holds(), "generator of Z(R) does not vanish on R");
    }
    Ok(ideal)
}

/// `F_i(pi(x))` for every generator `F_i` of a `Z(m)` presentation.
pub fn compose_generators(ring: &FiniteLocalRing, gens: &[Poly], pi: &Poly) -> Result<StructuredIdeal> {
    let px = ring.poly_ring();
    let composed = gens.iter().map(|g| px.compose(g, pi)).collect::<Result<Vec<_>>>()?;
    StructuredIdeal::generator_list(ring, composed)
}

/// The ideal `{f(x - c) : f in I}`.
pub fn translate_ideal(ring: &FiniteLocalRing, ideal: &StructuredIdeal, c: Elem) -> Result<StructuredIdeal> {
    let px = ring.poly_ring();
    let shift = px.linear(c);
    match ideal.form() {
        IdealForm::Power { pi, e, m_gen } => StructuredIdeal::power(ring, px.compose(pi, &shift)?, *e, *m_gen),
        IdealForm::PowerPlus { pi, e, m_gen } => StructuredIdeal::power_plus(ring, px.compose(pi, &shift)?, *e, *m_gen),
        IdealForm::GeneratorList { gens } => compose_generators(ring, gens, &shift),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{presets, RingSpec};

    fn ring(s: &str) -> FiniteLocalRing {
        FiniteLocalRing::new(s.parse().unwrap()).unwrap()
    }

    fn parse_all(ring: &FiniteLocalRing, gens: &[&str]) -> Vec<Poly> {
        gens.iter().map(|g| ring.poly_ring().parse(g).unwrap()).collect()
    }

    #[test]
    fn z9_maximal() {
        let r = ring("Z/9");
        let zm = null_maximal_generators(&r).unwrap();
        assert_eq!(zm.form().tag(), "PowerForm");
        assert_eq!(zm.expanded_gens(), parse_all(&r, &["x^2", "3x"]).as_slice());
    }

    #[test]
    fn z8_maximal_power_plus() {
        let r = ring("Z/8");
        let zm = null_maximal_generators(&r).unwrap();
        assert!(matches!(zm.form(), IdealForm::PowerPlus { e: 3, m_gen: Elem(2), .. }));
        assert_eq!(zm.expanded_gens(), parse_all(&r, &["x^3", "2x^2", "4x", "x^2-2x"]).as_slice());
    }

    #[test]
    fn z25_maximal() {
        let r = ring("Z/25");
        let zm = null_maximal_generators(&r).unwrap();
        assert_eq!(zm.expanded_gens(), parse_all(&r, &["x^2", "5x"]).as_slice());
    }

    #[test]
    fn ring_generators() {
        let r = ring("Z/9");
        let pi = r.poly_ring().parse("x^3-x").unwrap();
        let zr = null_ring_generators(&r, Some(&pi)).unwrap();
        assert_eq!(zr.expanded_gens(), parse_all(&r, &["(x^3-x)^2", "3(x^3-x)"]).as_slice());

        let r5 = ring("Z/5");
        let zr = null_ring_generators(&r5, None).unwrap();
        assert_eq!(zr.expanded_gens(), parse_all(&r5, &["x^5-x"]).as_slice());

        let r8 = ring("Z/8");
        let pi = r8.poly_ring().parse("x^2-x").unwrap();
        let composed = compose_generators(&r8, &parse_all(&r8, &["x^2-2x", "4x"]), &pi).unwrap();
        assert_eq!(composed.expanded_gens(), parse_all(&r8, &["(x^2-x)^2-2(x^2-x)", "4(x^2-x)"]).as_slice());
    }

    #[test]
    fn refusals() {
        assert_eq!(null_maximal_generators(&ring("Z/16")), Err(Error::OutOfTheoremRange { e: 4, q: 2 }));
        let su = FiniteLocalRing::new(RingSpec::Table(presets::f2_su_squared())).unwrap();
        assert_eq!(null_maximal_generators(&su), Err(Error::NonPrincipalMaximalIdeal));
        let r9 = ring("Z/9");
        let not_pi = r9.poly_ring().parse("x^3+x").unwrap();
        assert_eq!(null_ring_generators(&r9, Some(&not_pi)), Err(Error::NotAPiPolynomial));
    }
}
