use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{null_ring_generators, MembershipRule};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::oracle::{CandidateSpace, DEFAULT_SLICE_CAP};
use crate::ring::FiniteLocalRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    /// Read off the normal form of `R[x]/Z(R)`; needs structured `Z(R)`.
    NormalForm,
    /// Distinct value vectors of all polynomials of degree `< bound`
    /// (default `e*q + 1`).
    Exhaustive { bound: Option<usize>, cap: u128 },
}

impl CountMethod {
    pub fn exhaustive() -> Self {
        CountMethod::Exhaustive { bound: None, cap: DEFAULT_SLICE_CAP }
    }
}

/// `|R[x]/Z(R)|`: each digit `a_k` of the pi-adic normal form is free modulo
/// `m^{t_k}` coefficient-wise, `t_k` being the digit's membership threshold.
pub fn normal_form_count(ring: &FiniteLocalRing) -> Result<u128> {
    let ideal = null_ring_generators(ring, None)?;
    let rule = MembershipRule::new(ring, &ideal)?;
    let q = ring.q();
    let mut count = 1u128;
    for t in rule.thresholds() {
        let classes = (ring.order() as usize / ring.power_size(t)) as u128;
        let digit = classes.checked_pow(q).ok_or(Error::CapExceeded { required: u128::MAX, cap: u128::MAX })?;
        count = count.checked_mul(digit).ok_or(Error::CapExceeded { required: u128::MAX, cap: u128::MAX })?;
    }
    Ok(count)
}

pub fn count_polynomial_functions<E: Executor>(ring: &FiniteLocalRing, method: CountMethod, exec: &E) -> Result<u128> {
    match method {
        CountMethod::NormalForm => normal_form_count(ring),
        CountMethod::Exhaustive { bound, cap } => {
            let d = bound.unwrap_or((ring.e() * ring.q()) as usize + 1);
            let space = CandidateSpace::new(ring, d);
            space.check_cap(cap)?;
            let n = ring.order() as u128;
            // value vectors are keyed as base-|R| numbers
            if n.checked_pow(ring.order()).is_none() {
                return Err(Error::CapExceeded { required: u128::MAX, cap });
            }
            let points: Vec<_> = ring.elements().collect();
            let shards = exec.run(space.shard_count(), |shard| {
                let mut seen = BTreeSet::new();
                space.for_each_in_shard(ring, &points, shard, |_, _, values| {
                    seen.insert(values.iter().fold(0u128, |acc, v| acc * n + v.0 as u128));
                });
                seen
            });
            let all: BTreeSet<u128> = shards.into_iter().flatten().collect();
            Ok(all.len() as u128)
        }
    }
}
