use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::PiEnumerator;
use crate::error::{Error, Result};
use crate::poly::{divrem_monic_raw, Poly};
use crate::ring::{Elem, FiniteLocalRing};

/// Default cap on the number of enumerated pi-polynomials.
pub const DEFAULT_PI_CAP: u128 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Every pi-polynomial; refused when there are more than `cap`.
    Exhaustive { cap: u128 },
    /// `count` pi-polynomials drawn with a seeded generator.
    Sample { count: u64, seed: u64 },
}

impl Default for SampleMode {
    fn default() -> Self {
        SampleMode::Exhaustive { cap: DEFAULT_PI_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionWitness {
    pub reps: Vec<Elem>,
    pub pi: Poly,
    pub remainder: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionCheck {
    /// Every checked pi-polynomial divides `f`.
    pub holds: bool,
    pub checked: u64,
    /// `|m|^q`, the number of distinct pi-polynomials.
    pub total: u128,
    pub witness: Option<IntersectionWitness>,
    pub seed: Option<u64>,
}

/// Checks whether every (or every sampled) pi-polynomial divides `f`.
/// Exhaustively, this holds exactly when `f` lies in `Z(R)`.
pub fn pi_intersection_check(ring: &FiniteLocalRing, f: &Poly, mode: SampleMode) -> Result<IntersectionCheck> {
    if f.ring_id() != ring.id() {
        return Err(Error::ForeignElement);
    }
    let en = PiEnumerator::new(ring);
    let total = en.count();
    let px = ring.poly_ring();
    let mut checked = 0u64;
    let mut try_reps = |reps: Vec<Elem>| -> Option<IntersectionWitness> {
        checked += 1;
        let pi = px.product_of_linears(&reps);
        let mut rem = f.coeffs().to_vec();
        divrem_monic_raw(ring, &mut rem, pi.coeffs());
        (!rem.is_empty()).then(|| IntersectionWitness { reps, pi, remainder: px.from_coeffs(rem) })
    };
    let (witness, seed) = match mode {
        SampleMode::Exhaustive { cap } => {
            en.check_cap(cap)?;
            ((0..total).find_map(|i| try_reps(en.reps(i))), None)
        }
        SampleMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ((0..count).find_map(|_| try_reps(en.random_reps(&mut rng))), Some(seed))
        }
    };
    Ok(IntersectionCheck { holds: witness.is_none(), checked, total, witness, seed })
}
