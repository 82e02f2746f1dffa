use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::null_ideal::is_pi_polynomial;
use crate::poly::{eval_raw, Poly};
use crate::ring::{Elem, FiniteLocalRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeichmullerTrace {
    pub start: Elem,
    /// `p_0(start) = start, p_1(start), ...`, ending with the first repeat.
    pub iterates: Vec<Elem>,
    /// First index from which the iterates are constant.
    pub stabilized_at: usize,
    pub root: Elem,
    /// `val(iterates[n] - iterates[n-1])` for `n >= 1`.
    pub diff_valuations: Vec<u32>,
}

impl TeichmullerTrace {
    /// Every consecutive difference at step `n` lies in `m^n`.
    pub fn cauchy_holds(&self, e: u32) -> bool {
        self.diff_valuations.iter().enumerate().all(|(i, &v)| v >= (i as u32 + 1).min(e))
    }
}

/// Iterates `r -> pi(r) + r` from `start` until two consecutive values agree.
/// `pi` only has to reduce to `x^q - x` modulo `m`; it need not be monic.
pub fn teichmuller_lift(ring: &FiniteLocalRing, pi: &Poly, start: Elem) -> Result<TeichmullerTrace> {
    if pi.ring_id() != ring.id() || start.0 >= ring.order() {
        return Err(Error::ForeignElement);
    }
    let residue = ring.residue_field().field;
    if ring.poly_ring().reduce_mod_m(pi)? != residue.poly_ring().x_pow_minus_x(ring.q() as usize) {
        return Err(Error::NotALift);
    }
    lift_unchecked(ring, pi.coeffs(), start)
}

fn lift_unchecked(ring: &FiniteLocalRing, pi: &[Elem], start: Elem) -> Result<TeichmullerTrace> {
    let e = ring.e() as usize;
    let mut iterates = Vec::with_capacity(e + 1);
    let mut diff_valuations = Vec::with_capacity(e);
    iterates.push(start);
    let mut r = start;
    for n in 0..e {
        let next = ring.add(eval_raw(ring, pi, r), r);
        iterates.push(next);
        diff_valuations.push(ring.val(ring.sub(next, r)));
        if next == r {
            debug_assert_eq!(eval_raw(ring, pi, r), ring.zero());
            return Ok(TeichmullerTrace { start, iterates, stabilized_at: n, root: r, diff_valuations });
        }
        r = next;
    }
    Err(Error::NoStabilization { start: ring.label(start) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiFactorization {
    /// `d_i`, the root lifted from the `i`-th canonical representative.
    pub roots: Vec<Elem>,
    pub traces: Vec<TeichmullerTrace>,
    /// `prod (x - d_i)`, which equals `pi`.
    pub product: Poly,
}

/// Splits a pi-polynomial into linear factors by lifting each canonical
/// representative to a root.
pub fn factor_pi_polynomial<E: Executor>(ring: &FiniteLocalRing, pi: &Poly, exec: &E) -> Result<PiFactorization> {
    if !is_pi_polynomial(ring, pi) {
        return Err(Error::NotAPiPolynomial);
    }
    let reps = ring.reps();
    let traces =
        exec.run(reps.len(), |i| lift_unchecked(ring, pi.coeffs(), reps[i])).into_iter().collect::<Result<Vec<_>>>()?;
    let roots: Vec<Elem> = traces.iter().map(|t| t.root).collect();
    let product = ring.poly_ring().product_of_linears(&roots);
    if product != *pi {
        return Err(Error::FactorMismatch);
    }
    Ok(PiFactorization { roots, traces, product })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Sequential;

    fn ring(s: &str) -> FiniteLocalRing {
        FiniteLocalRing::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_traces() {
        let r8 = ring("Z/8");
        let t = teichmuller_lift(&r8, &r8.poly_ring().parse("x^2-x").unwrap(), Elem(3)).unwrap();
        assert_eq!(t.iterates, [Elem(3), Elem(1), Elem(1)]);
        assert_eq!((t.root, t.stabilized_at), (Elem(1), 1));
        assert!(t.cauchy_holds(3));

        let r9 = ring("Z/9");
        let t = teichmuller_lift(&r9, &r9.poly_ring().parse("x^3-x").unwrap(), Elem(2)).unwrap();
        assert_eq!(t.root, Elem(8));
    }

    #[test]
    fn z125_factorization() {
        let r = ring("Z/125");
        let pi = r.poly_ring().parse("x^5+5x^4+40x^3+85x^2+24x+50").unwrap();
        let f = factor_pi_polynomial(&r, &pi, &Sequential).unwrap();
        assert_eq!(f.roots, [50, 31, 72, 18, 74].map(Elem));
        assert!(f.traces.iter().all(|t| t.stabilized_at <= 2 && t.cauchy_holds(3)));
        assert_eq!(f.traces[1].iterates, [1, 81, 31, 31].map(Elem));
    }

    #[test]
    fn non_monic_lift_and_refusals() {
        let r9 = ring("Z/9");
        let px = r9.poly_ring();
        let t = teichmuller_lift(&r9, &px.parse("3x^4+x^3-x").unwrap(), Elem(4)).unwrap();
        assert_eq!(px.eval(&px.parse("3x^4+x^3-x").unwrap(), t.root), r9.zero());
        assert_eq!(teichmuller_lift(&r9, &px.parse("x^3+x").unwrap(), Elem(0)), Err(Error::NotALift));
        assert_eq!(
            factor_pi_polynomial(&r9, &px.parse("3x^4+x^3-x").unwrap(), &Sequential),
            Err(Error::NotAPiPolynomial)
        );
        let f = factor_pi_polynomial(&r9, &px.parse("x^3-x").unwrap(), &Sequential).unwrap();
        assert_eq!(f.roots, [0, 1, 8].map(Elem));
    }
}
