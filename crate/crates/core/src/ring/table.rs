//! Exhaustive validation of operation-table rings.

use alloc::vec::Vec;

use super::{Axiom, TableSpec};
use crate::error::{Error, Result};

fn fail(axiom: Axiom, a: usize, b: usize, c: usize) -> Error {
    Error::NotARing { axiom, a: a as u32, b: b as u32, c: c as u32 }
}

/// Checks every ring axiom over all pairs and triples and returns the
/// flattened add and mul tables.
pub(crate) fn validate(spec: &TableSpec) -> Result<(Vec<u16>, Vec<u16>)> {
    let n = spec.order as usize;
    let (zero, one) = (spec.zero as usize, spec.one as usize);
    if n == 0 || zero >= n || one >= n {
        return Err(fail(Axiom::IndexRange, zero, one, n));
    }
    if spec.add.len() != n || spec.mul.len() != n {
        return Err(fail(Axiom::IndexRange, spec.add.len(), spec.mul.len(), n));
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for (a, (ra, rm)) in spec.add.iter().zip(&spec.mul).enumerate() {
        if ra.len() != n || rm.len() != n {
            return Err(fail(Axiom::IndexRange, a, ra.len().max(rm.len()), n));
        }
        for (b, (&s, &p)) in ra.iter().zip(rm).enumerate() {
            if s as usize >= n || p as usize >= n {
                return Err(fail(Axiom::IndexRange, a, b, s.max(p) as usize));
            }
            add.push(s as u16);
            mul.push(p as u16);
        }
    }
    let ad = |a: usize, b: usize| add[a * n + b] as usize;
    let mu = |a: usize, b: usize| mul[a * n + b] as usize;
    if zero == one {
        return Err(fail(Axiom::NontrivialOne, zero, one, 0));
    }
    for a in 0..n {
        if ad(a, zero) != a {
            return Err(fail(Axiom::AdditiveIdentity, a, zero, ad(a, zero)));
        }
        if mu(a, one) != a {
            return Err(fail(Axiom::MultiplicativeIdentity, a, one, mu(a, one)));
        }
        if !(0..n).any(|b| ad(a, b) == zero) {
            return Err(fail(Axiom::AdditiveInverse, a, zero, zero));
        }
        for b in 0..n {
            if ad(a, b) != ad(b, a) {
                return Err(fail(Axiom::AddCommutative, a, b, 0));
            }
            if mu(a, b) != mu(b, a) {
                return Err(fail(Axiom::MulCommutative, a, b, 0));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let (sab, pab) = (ad(a, b), mu(a, b));
            for c in 0..n {
                if ad(sab, c) != ad(a, ad(b, c)) {
                    return Err(fail(Axiom::AddAssociative, a, b, c));
                }
                if mu(pab, c) != mu(a, mu(b, c)) {
                    return Err(fail(Axiom::MulAssociative, a, b, c));
                }
                if mu(a, ad(b, c)) != ad(pab, mu(a, c)) {
                    return Err(fail(Axiom::Distributive, a, b, c));
                }
            }
        }
    }
    Ok((add, mul))
}
