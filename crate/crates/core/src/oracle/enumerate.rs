use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteLocalRing};

/// All coefficient vectors of length `bound` (polynomials of degree
/// `< bound`), coded little-endian in base `|R|` by element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateSpace {
    order: u32,
    bound: usize,
}

impl CandidateSpace {
    pub fn new(ring: &FiniteLocalRing, bound: usize) -> Self {
        CandidateSpace { order: ring.order(), bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `|R|^bound`, saturating.
    pub fn count(&self) -> u128 {
        u32::try_from(self.bound).ok().and_then(|b| (self.order as u128).checked_pow(b)).unwrap_or(u128::MAX)
    }

    pub fn check_cap(&self, cap: u128) -> Result<()> {
        let required = self.count();
        if required > cap {
            return Err(Error::CapExceeded { required, cap });
        }
        Ok(())
    }

    /// Shards split on the leading coefficient.
    pub fn shard_count(&self) -> usize {
        if self.bound == 0 {
            1
        } else {
            self.order as usize
        }
    }

    pub fn decode(&self, mut code: u128) -> Vec<Elem> {
        let n = self.order as u128;
        (0..self.bound)
            .map(|_| {
                let d = (code % n) as u32;
                code /= n;
                Elem(d)
            })
            .collect()
    }

    pub fn encode(&self, coeffs: &[Elem]) -> u128 {
        coeffs.iter().rev().fold(0u128, |acc, c| acc * self.order as u128 + c.0 as u128)
    }

    /// Visits every candidate of one shard with its code, coefficients and
    /// values at `points`.
    pub fn for_each_in_shard<F>(&self, ring: &FiniteLocalRing, points: &[Elem], shard: usize, mut visit: F)
    where
        F: FnMut(u128, &[Elem], &[Elem]),
    {
        let np = points.len();
        let zero = ring.zero();
        if self.bound == 0 {
            visit(0, &[], &vec![zero; np]);
            return;
        }
        let n = self.order as usize;
        let top = self.bound - 1;
        // term[(i * n + c) * np + j] = c * points[j]^i
        let mut term = vec![zero; self.bound * n * np];
        let mut pw: Vec<Elem> = vec![ring.one(); np];
        for i in 0..self.bound {
            for c in 0..n {
                for j in 0..np {
                    term[(i * n + c) * np + j] = ring.mul(Elem(c as u32), pw[j]);
                }
            }
            for j in 0..np {
                pw[j] = ring.mul(pw[j], points[j]);
            }
        }
        let term_at = |i: usize, c: Elem| &term[(i * n + c.0 as usize) * np..][..np];
        // partial[i] = sum over k >= i of the k-th terms
        let mut partial = vec![zero; (self.bound + 1) * np];
        let mut coeffs = vec![zero; self.bound];
        coeffs[top] = Elem(shard as u32);
        let refill = |partial: &mut [Elem], coeffs: &[Elem], upto: usize| {
            for i in (0..=upto).rev() {
                let (lo, hi) = partial.split_at_mut((i + 1) * np);
                let t = term_at(i, coeffs[i]);
                for j in 0..np {
                    lo[i * np + j] = ring.add(hi[j], t[j]);
                }
            }
        };
        refill(&mut partial, &coeffs, top);
        let mut code = shard as u128 * (n as u128).pow(top as u32);
        loop {
            visit(code, &coeffs, &partial[..np]);
            let mut i = 0;
            loop {
                if i == top {
                    return;
                }
                coeffs[i].0 += 1;
                if (coeffs[i].0 as usize) < n {
                    break;
                }
                coeffs[i] = zero;
                i += 1;
            }
            code += 1;
            refill(&mut partial, &coeffs, i);
        }
    }
}
