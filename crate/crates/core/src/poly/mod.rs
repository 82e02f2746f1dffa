//! Univariate polynomials over a [`FiniteLocalRing`].
//!
//! Coefficients are little-endian and normalized (no trailing zeros); the
//! zero polynomial has no coefficients and no degree. Arithmetic lives on
//! [`PolyRing`], a borrowed view of the coefficient ring, so that every
//! operation can check that its operands belong to that ring.

mod text;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteLocalRing, RingElement, RingId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingId,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize, zero: Elem) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(zero)
    }
}

/// Polynomial in `x` whose coefficients are polynomials in `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    pub coeffs_in_x: Vec<Poly>,
}

/// Borrowed view of `R[x]`.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a> {
    ring: &'a FiniteLocalRing,
}

impl FiniteLocalRing {
    pub fn poly_ring(&self) -> PolyRing<'_> {
        PolyRing { ring: self }
    }
}

pub(crate) fn normalize(ring: &FiniteLocalRing, v: &mut Vec<Elem>) {
    let z = ring.zero();
    while v.last() == Some(&z) {
        v.pop();
    }
}

pub(crate) fn add_into(ring: &FiniteLocalRing, acc: &mut Vec<Elem>, f: &[Elem]) {
    if acc.len() < f.len() {
        acc.resize(f.len(), ring.zero());
    }
    for (a, &b) in acc.iter_mut().zip(f) {
        *a = ring.add(*a, b);
    }
    normalize(ring, acc);
}

pub(crate) fn mul_raw(ring: &FiniteLocalRing, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let z = ring.zero();
    let mut out = vec![z; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == z {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = ring.add(out[i + j], ring.mul(a, b));
        }
    }
    normalize(ring, &mut out);
    out
}

pub(crate) fn eval_raw(ring: &FiniteLocalRing, f: &[Elem], a: Elem) -> Elem {
    f.iter().rev().fold(ring.zero(), |acc, &c| ring.add(ring.mul(acc, a), c))
}

/// In-place division by a monic `g`; leaves the remainder in `f` and
/// returns the quotient.
pub(crate) fn divrem_monic_raw(ring: &FiniteLocalRing, f: &mut Vec<Elem>, g: &[Elem]) -> Vec<Elem> {
    let dg = g.len() - 1;
    normalize(ring, f);
    if f.len() <= dg {
        return Vec::new();
    }
    let mut quot = vec![ring.zero(); f.len() - dg];
    for top in (dg..f.len()).rev() {
        let c = f[top];
        if c == ring.zero() {
            continue;
        }
        let shift = top - dg;
        quot[shift] = c;
        for (i, &gi) in g.iter().enumerate() {
            f[shift + i] = ring.sub(f[shift + i], ring.mul(c, gi));
        }
    }
    f.truncate(dg);
    normalize(ring, f);
    normalize(ring, &mut quot);
    quot
}

impl<'a> PolyRing<'a> {
    pub fn ring(&self) -> &'a FiniteLocalRing {
        self.ring
    }

    fn check(&self, f: &Poly) -> Result<()> {
        if f.ring != self.ring.id() {
            return Err(Error::ForeignElement);
        }
        Ok(())
    }

    fn wrap(&self, coeffs: Vec<Elem>) -> Poly {
        Poly { ring: self.ring.id(), coeffs }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<Elem>) -> Poly {
        debug_assert!(coeffs.iter().all(|c| c.0 < self.ring.order()));
        normalize(self.ring, &mut coeffs);
        self.wrap(coeffs)
    }

    /// Coefficients given as integers, mapped through `Z -> R`.
    pub fn from_ints(&self, coeffs: &[i64]) -> Poly {
        self.from_coeffs(coeffs.iter().map(|&c| self.ring.from_int(c)).collect())
    }

    pub fn zero(&self) -> Poly {
        self.wrap(Vec::new())
    }

    pub fn one(&self) -> Poly {
        self.constant(self.ring.one())
    }

    pub fn x(&self) -> Poly {
        self.wrap(vec![self.ring.zero(), self.ring.one()])
    }

    pub fn constant(&self, c: Elem) -> Poly {
        self.from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(&self, c: Elem, k: usize) -> Poly {
        let mut v = vec![self.ring.zero(); k + 1];
        v[k] = c;
        self.from_coeffs(v)
    }

    /// `x - c`.
    pub fn linear(&self, c: Elem) -> Poly {
        self.wrap(vec![self.ring.neg(c), self.ring.one()])
    }

    pub fn is_monic(&self, f: &Poly) -> bool {
        f.leading() == Some(self.ring.one())
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        let mut v = f.coeffs.clone();
        add_into(self.ring, &mut v, &g.coeffs);
        Ok(self.wrap(v))
    }

    pub fn neg(&self, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        Ok(self.wrap(f.coeffs.iter().map(|&c| self.ring.neg(c)).collect()))
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.add(f, &self.neg(g)?)
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.wrap(mul_raw(self.ring, &f.coeffs, &g.coeffs)))
    }

    pub fn scale(&self, c: RingElement, f: &Poly) -> Result<Poly> {
        let c = self.ring.check(c)?;
        self.check(f)?;
        Ok(self.scale_elem(c, f))
    }

    pub(crate) fn scale_elem(&self, c: Elem, f: &Poly) -> Poly {
        self.from_coeffs(f.coeffs.iter().map(|&a| self.ring.mul(c, a)).collect())
    }

    pub fn pow(&self, f: &Poly, k: u32) -> Result<Poly> {
        self.check(f)?;
        let mut acc = self.one().coeffs;
        for _ in 0..k {
            acc = mul_raw(self.ring, &acc, &f.coeffs);
        }
        Ok(self.wrap(acc))
    }

    /// Product of `x - c` over the given roots.
    pub fn product_of_linears(&self, roots: &[Elem]) -> Poly {
        let mut acc = self.one().coeffs;
        for &c in roots {
            acc = mul_raw(self.ring, &acc, &[self.ring.neg(c), self.ring.one()]);
        }
        self.wrap(acc)
    }

    pub fn evaluate(&self, f: &Poly, a: RingElement) -> Result<RingElement> {
        self.check(f)?;
        let a = self.ring.check(a)?;
        Ok(self.ring.element(eval_raw(self.ring, &f.coeffs, a)))
    }

    pub fn eval(&self, f: &Poly, a: Elem) -> Elem {
        debug_assert_eq!(f.ring, self.ring.id());
        eval_raw(self.ring, &f.coeffs, a)
    }

    /// `f(g(x))` by Horner's rule.
    pub fn compose(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        let mut acc: Vec<Elem> = Vec::new();
        for &c in f.coeffs.iter().rev() {
            acc = mul_raw(self.ring, &acc, &g.coeffs);
            add_into(self.ring, &mut acc, &[c]);
        }
        Ok(self.wrap(acc))
    }

    /// Division with remainder by a monic divisor.
    pub fn divide_monic(&self, f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
        self.check(f)?;
        self.check(g)?;
        if !self.is_monic(g) {
            return Err(Error::NotMonic);
        }
        let mut r = f.coeffs.clone();
        let q = divrem_monic_raw(self.ring, &mut r, &g.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    /// The unique `a_0, ..., a_K` with `f = sum a_k pi^k` and
    /// `deg a_k < deg pi`. The zero polynomial expands to an empty list.
    pub fn pi_adic_expansion(&self, f: &Poly, pi: &Poly) -> Result<Vec<Poly>> {
        self.check(f)?;
        self.check(pi)?;
        if !self.is_monic(pi) || pi.degree() == Some(0) {
            return Err(Error::NotMonic);
        }
        let mut digits = Vec::new();
        let mut cur = f.coeffs.clone();
        while !cur.is_empty() {
            let q = divrem_monic_raw(self.ring, &mut cur, &pi.coeffs);
            digits.push(self.wrap(core::mem::replace(&mut cur, q)));
        }
        Ok(digits)
    }

    /// Inverse of [`pi_adic_expansion`](Self::pi_adic_expansion).
    pub fn from_pi_adic(&self, digits: &[Poly], pi: &Poly) -> Result<Poly> {
        let mut acc = self.zero();
        for d in digits.iter().rev() {
            acc = self.add(&self.mul(&acc, pi)?, d)?;
        }
        Ok(acc)
    }

    /// Remainder of `f(x)` on division by `pi(x) - y` in `(R[y])[x]`.
    ///
    /// Returns `p_0, ..., p_{q-1}` (as polynomials in the renamed variable)
    /// with `f(x) = sum_i x^i p_i(pi(x))` identically.
    pub fn bivariate_remainder(&self, f: &Poly, pi: &Poly) -> Result<Vec<Poly>> {
        self.check(f)?;
        self.check(pi)?;
        if !self.is_monic(pi) {
            return Err(Error::NotMonic);
        }
        let q = self.ring.q() as usize;
        let d = pi.degree().unwrap_or(0);
        if d != q {
            return Err(Error::DegreeMismatch { expected: q, found: d });
        }
        let rem = self.bivariate_divide(f, pi);
        Ok(rem.coeffs_in_x)
    }

    fn bivariate_divide(&self, f: &Poly, pi: &Poly) -> BivariatePolynomial {
        let ring = self.ring;
        let d = pi.coeffs.len() - 1;
        // x^d == y + tail(x) modulo pi(x) - y, where tail = x^d - pi(x)
        let tail: Vec<Elem> = pi.coeffs[..d].iter().map(|&c| ring.neg(c)).collect();
        let mut rows: Vec<Vec<Elem>> = f.coeffs.iter().map(|&c| vec![c]).collect();
        for row in rows.iter_mut() {
            normalize(ring, row);
        }
        while rows.len() > d {
            let top = rows.len() - 1;
            let c = rows.pop().unwrap();
            if c.is_empty() {
                continue;
            }
            let shift = top - d;
            let mut cy = vec![ring.zero()];
            cy.extend_from_slice(&c);
            add_into(ring, &mut rows[shift], &cy);
            for (i, &t) in tail.iter().enumerate() {
                if t == ring.zero() {
                    continue;
                }
                let scaled: Vec<Elem> = c.iter().map(|&a| ring.mul(a, t)).collect();
                add_into(ring, &mut rows[shift + i], &scaled);
            }
        }
        rows.resize(d, Vec::new());
        BivariatePolynomial { coeffs_in_x: rows.into_iter().map(|r| self.from_coeffs(r)).collect() }
    }

    /// `sum_i x^i p_i(pi(x))`.
    pub fn recombine(&self, parts: &[Poly], pi: &Poly) -> Result<Poly> {
        let mut acc = self.zero();
        for (i, p) in parts.iter().enumerate() {
            let term = self.mul(&self.monomial(self.ring.one(), i), &self.compose(p, pi)?)?;
            acc = self.add(&acc, &term)?;
        }
        Ok(acc)
    }

    /// Coefficient-wise image in `(R/m)[x]`.
    pub fn reduce_mod_m(&self, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        let res = self.ring.residue_field();
        Ok(res.field.poly_ring().from_coeffs(f.coeffs.iter().map(|&c| res.project(c)).collect()))
    }

    /// `x^n - x` over this ring.
    pub fn x_pow_minus_x(&self, n: usize) -> Poly {
        let mut v = vec![self.ring.zero(); n + 1];
        v[n] = self.ring.one();
        v[1] = self.ring.sub(v[1], self.ring.one());
        self.from_coeffs(v)
    }

    /// McCoy's criterion: `f` is a zero divisor in `R[x]` iff a nonzero
    /// constant kills every coefficient. Returns `Err(witness)` in that case.
    pub fn is_regular(&self, f: &Poly) -> Result<core::result::Result<(), Elem>> {
        self.check(f)?;
        let z = self.ring.zero();
        let witness =
            self.ring.elements().filter(|&c| c != z).find(|&c| f.coeffs.iter().all(|&a| self.ring.mul(c, a) == z));
        Ok(match witness {
            Some(c) => Err(c),
            None => Ok(()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn ring(s: &str) -> FiniteLocalRing {
        FiniteLocalRing::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring("Z/9");
        let px = r.poly_ring();
        let x = px.x();
        let f = px.mul(&px.add(&x, &px.one()).unwrap(), &px.sub(&x, &px.one()).unwrap()).unwrap();
        assert_eq!(f, px.from_ints(&[8, 0, 1]));
        let g = px.mul(&px.mul(&x, &px.linear(Elem(1))).unwrap(), &px.linear(Elem(2))).unwrap();
        assert_eq!(g, px.from_ints(&[0, 2, 6, 1]));

        let r8 = ring("Z/8");
        let p8 = r8.poly_ring();
        let z = p8.scale(r8.element(Elem(4)), &p8.from_ints(&[0, 2])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn evaluation() {
        let r = ring("Z/9");
        let px = r.poly_ring();
        let f = px.from_ints(&[0, -1, 0, 1]);
        assert_eq!(px.eval(&f, Elem(3)), Elem(6));
        let f2 = px.pow(&f, 2).unwrap();
        assert!(r.elements().all(|a| px.eval(&f2, a) == r.zero()));
        let r8 = ring("Z/8");
        let p8 = r8.poly_ring();
        assert_eq!(p8.eval(&p8.from_ints(&[0, -2, 1]), Elem(2)), Elem(0));
        let other = ring("Z/8");
        assert_eq!(p8.evaluate(&p8.x(), other.element(Elem(1))), Err(Error::ForeignElement));
    }

    #[test]
    fn composition() {
        let r8 = ring("Z/8");
        let p8 = r8.poly_ring();
        let c = p8.compose(&p8.from_ints(&[0, 4]), &p8.from_ints(&[0, -1, 1])).unwrap();
        assert_eq!(c, p8.from_ints(&[0, 4, 4]));
        let f = p8.from_ints(&[3, 5, 0, 7]);
        assert_eq!(p8.compose(&f, &p8.x()).unwrap(), f);

        let r9 = ring("Z/9");
        let p9 = r9.poly_ring();
        let c = p9.compose(&p9.from_ints(&[0, 0, 1]), &p9.from_ints(&[0, -1, 0, 1])).unwrap();
        assert_eq!(c, p9.from_ints(&[0, 0, 1, 0, 7, 0, 1]));
    }

    #[test]
    fn monic_division() {
        let r9 = ring("Z/9");
        let p9 = r9.poly_ring();
        let pi = p9.from_ints(&[0, -1, 0, 1]);
        let (q, rem) = p9.divide_monic(&p9.pow(&pi, 2).unwrap(), &pi).unwrap();
        assert_eq!((q, rem.is_zero()), (pi.clone(), true));
        assert_eq!(p9.divide_monic(&pi, &p9.from_ints(&[0, 3])), Err(Error::NotMonic));

        let r125 = ring("Z/5^3");
        let p = r125.poly_ring();
        let pi = p.from_ints(&[50, 24, 85, 40, 5, 1]);
        let (_, rem) = p.divide_monic(&pi, &p.linear(Elem(50))).unwrap();
        assert!(rem.is_zero());

        let r8 = ring("Z/8");
        let p8 = r8.poly_ring();
        let (q, rem) = p8.divide_monic(&p8.from_ints(&[0, 0, 0, 1]), &p8.from_ints(&[0, -1, 1])).unwrap();
        assert_eq!(q, p8.from_ints(&[1, 1]));
        assert_eq!(rem, p8.x());
    }

    #[test]
    fn pi_adic() {
        let r9 = ring("Z/9");
        let p9 = r9.poly_ring();
        let pi = p9.from_ints(&[0, -1, 0, 1]);
        let e = p9.pi_adic_expansion(&p9.pow(&pi, 2).unwrap(), &pi).unwrap();
        assert_eq!(e, [p9.zero(), p9.zero(), p9.one()]);
        let f = p9.mul(&p9.from_ints(&[0, 3]), &pi).unwrap();
        assert_eq!(p9.pi_adic_expansion(&f, &pi).unwrap(), [p9.zero(), p9.from_ints(&[0, 3])]);

        let r8 = ring("Z/8");
        let p8 = r8.poly_ring();
        let e = p8.pi_adic_expansion(&p8.from_ints(&[0, 0, 0, 1]), &p8.from_ints(&[0, -1, 1])).unwrap();
        assert_eq!(e, [p8.x(), p8.from_ints(&[1, 1])]);
    }

    #[test]
    fn bivariate_examples() {
        let r9 = ring("Z/9");
        let p9 = r9.poly_ring();
        let pi = p9.from_ints(&[0, -1, 0, 1]);
        let parts = p9.bivariate_remainder(&p9.pow(&pi, 2).unwrap(), &pi).unwrap();
        assert_eq!(parts, [p9.from_ints(&[0, 0, 1]), p9.zero(), p9.zero()]);
        let f = p9.mul(&p9.from_ints(&[0, 3]), &pi).unwrap();
        let parts = p9.bivariate_remainder(&f, &pi).unwrap();
        assert_eq!(parts, [p9.zero(), p9.from_ints(&[0, 3]), p9.zero()]);
        assert_eq!(
            p9.bivariate_remainder(&f, &p9.from_ints(&[0, 1, 1])),
            Err(Error::DegreeMismatch { expected: 3, found: 2 })
        );

        let r8 = ring("Z/8");
        let p8 = r8.poly_ring();
        let pi = p8.from_ints(&[0, -1, 1]);
        let f = p8.sub(&p8.pow(&pi, 2).unwrap(), &p8.scale_elem(Elem(2), &pi)).unwrap();
        let parts = p8.bivariate_remainder(&f, &pi).unwrap();
        assert_eq!(parts, [p8.from_ints(&[0, -2, 1]), p8.zero()]);
    }

    #[test]
    fn residue_reduction() {
        let r9 = ring("Z/9");
        let p9 = r9.poly_ring();
        let red = p9.reduce_mod_m(&p9.from_ints(&[0, 2, 6, 1])).unwrap();
        let f3 = r9.residue_field().field;
        assert_eq!(red, f3.poly_ring().from_ints(&[0, -1, 0, 1]));

        let r125 = ring("Z/125");
        let p = r125.poly_ring();
        let red = p.reduce_mod_m(&p.from_ints(&[50, 24, 85, 40, 5, 1])).unwrap();
        assert_eq!(red, r125.residue_field().field.poly_ring().x_pow_minus_x(5));

        let r8 = ring("Z/8");
        assert!(r8.poly_ring().reduce_mod_m(&r8.poly_ring().from_ints(&[0, 4])).unwrap().is_zero());
    }

    #[test]
    fn regularity() {
        let r8 = ring("Z/8");
        let p8 = r8.poly_ring();
        assert_eq!(p8.is_regular(&p8.from_ints(&[0, 4])).unwrap(), Err(Elem(2)));
        let r9 = ring("Z/9");
        let p9 = r9.poly_ring();
        let f = p9.pow(&p9.from_ints(&[0, -1, 0, 1]), 2).unwrap();
        assert_eq!(p9.is_regular(&f).unwrap(), Ok(()));

        let su = FiniteLocalRing::new(RingSpec::Table(crate::ring::presets::f2_su_squared())).unwrap();
        let ps = su.poly_ring();
        // s*x + u with s = e2, u = e4
        let f = ps.from_coeffs(vec![Elem(4), Elem(2)]);
        assert_eq!(ps.is_regular(&f).unwrap(), Err(Elem(2)));
    }
}
