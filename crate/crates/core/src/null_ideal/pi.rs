use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Elem, FiniteLocalRing};

/// `prod (x - c_i)` over the given representatives, or the canonical ones.
pub fn pi_polynomial(ring: &FiniteLocalRing, reps: Option<&[Elem]>) -> Result<Poly> {
    let reps = reps.unwrap_or(ring.reps());
    ring.check_reps(reps)?;
    Ok(ring.poly_ring().product_of_linears(reps))
}

/// Monic of degree `q` with residue image `x^q - x`. Over a finite (hence
/// Henselian) ring this is the same as being a product of `x - c_i` over a
/// set of representatives.
pub fn is_pi_polynomial(ring: &FiniteLocalRing, f: &Poly) -> bool {
    let px = ring.poly_ring();
    if f.ring_id() != ring.id() || !px.is_monic(f) || f.degree() != Some(ring.q() as usize) {
        return false;
    }
    let res = ring.residue_field().field;
    px.reduce_mod_m(f).ok() == Some(res.poly_ring().x_pow_minus_x(ring.q() as usize))
}

/// All choices of one representative per coset, in mixed-radix order with
/// the first coset varying fastest.
#[derive(Debug, Clone)]
pub struct PiEnumerator {
    cosets: Vec<Vec<Elem>>,
}

impl PiEnumerator {
    pub fn new(ring: &FiniteLocalRing) -> Self {
        PiEnumerator { cosets: ring.reps().iter().map(|&c| ring.coset_elements(c)).collect() }
    }

    /// `|m|^q`, saturating.
    pub fn count(&self) -> u128 {
        self.cosets.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    pub fn reps(&self, mut index: u128) -> Vec<Elem> {
        self.cosets
            .iter()
            .map(|c| {
                let i = (index % c.len() as u128) as usize;
                index /= c.len() as u128;
                c[i]
            })
            .collect()
    }

    pub fn random_reps<R: rand::Rng>(&self, rng: &mut R) -> Vec<Elem> {
        self.cosets.iter().map(|c| c[rng.random_range(0..c.len())]).collect()
    }

    pub(crate) fn check_cap(&self, cap: u128) -> Result<()> {
        let required = self.count();
        if required > cap {
            return Err(Error::CapExceeded { required, cap });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteLocalRing {
        FiniteLocalRing::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn canonical_pi_polynomials() {
        let r9 = ring("Z/9");
        assert_eq!(pi_polynomial(&r9, None).unwrap(), r9.poly_ring().from_ints(&[0, 2, 6, 1]));
        let r3 = ring("Z/3");
        assert_eq!(pi_polynomial(&r3, None).unwrap(), r3.poly_ring().from_ints(&[0, -1, 0, 1]));
        let r8 = ring("Z/8");
        assert_eq!(pi_polynomial(&r8, None).unwrap(), r8.poly_ring().from_ints(&[0, 7, 1]));
    }

    #[test]
    fn bad_reps() {
        let r9 = ring("Z/9");
        assert!(matches!(pi_polynomial(&r9, Some(&[Elem(0), Elem(1)])), Err(Error::BadRepresentatives { .. })));
        let err = pi_polynomial(&r9, Some(&[Elem(0), Elem(1), Elem(4)])).unwrap_err();
        assert_eq!(err, Error::BadRepresentatives { reason: "1 and 4 are congruent mod m".into() });
    }

    #[test]
    fn recognition() {
        let r = ring("Z/125");
        let px = r.poly_ring();
        assert!(is_pi_polynomial(&r, &px.from_ints(&[50, 24, 85, 40, 5, 1])));
        let r9 = ring("Z/9");
        let p9 = r9.poly_ring();
        assert!(is_pi_polynomial(&r9, &p9.parse("x^3-x").unwrap()));
        assert!(is_pi_polynomial(&r9, &p9.parse("x^3+3x^2-x").unwrap()));
        assert!(!is_pi_polynomial(&r9, &p9.parse("x^3+x").unwrap()));
        assert!(!is_pi_polynomial(&r9, &p9.parse("3x^4+x^3-x").unwrap()));
    }

    #[test]
    fn enumerator_covers_all_pi_polynomials() {
        let r9 = ring("Z/9");
        let en = PiEnumerator::new(&r9);
        assert_eq!(en.count(), 27);
        let all: alloc::collections::BTreeSet<Vec<Elem>> =
            (0..27).map(|i| pi_polynomial(&r9, Some(&en.reps(i))).unwrap().into_coeffs()).collect();
        assert_eq!(all.len(), 27);
        assert_eq!(en.reps(0), r9.reps());
    }
}
