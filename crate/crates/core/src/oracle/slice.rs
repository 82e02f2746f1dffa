use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CandidateSpace;
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::null_ideal::{IdealForm, MembershipRule, StructuredIdeal, Target};
use crate::poly::{add_into, mul_raw, normalize, Poly};
use crate::ring::{Elem, FiniteLocalRing};

/// Polynomials of degree `< bound` mapping a target into `m^into`, as sorted
/// candidate codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullSlice {
    pub bound: usize,
    pub candidates: u128,
    pub members: Vec<u128>,
}

impl NullSlice {
    pub fn contains(&self, code: u128) -> bool {
        self.members.binary_search(&code).is_ok()
    }
}

pub fn exhaustive_null_slice<E: Executor>(
    ring: &FiniteLocalRing,
    target: &Target,
    into: u32,
    bound: usize,
    cap: u128,
    exec: &E,
) -> Result<NullSlice> {
    let space = CandidateSpace::new(ring, bound);
    space.check_cap(cap)?;
    let points = target.points(ring);
    if points.iter().any(|p| p.0 >= ring.order()) {
        return Err(Error::ForeignElement);
    }
    let into = into.min(ring.e());
    let ok: Vec<bool> = ring.elements().map(|a| ring.val(a) >= into).collect();
    let shards = exec.run(space.shard_count(), |shard| {
        let mut out = Vec::new();
        space.for_each_in_shard(ring, &points, shard, |code, _, values| {
            if values.iter().all(|v| ok[v.0 as usize]) {
                out.push(code);
            }
        });
        out
    });
    let mut members: Vec<u128> = shards.into_iter().flatten().collect();
    members.sort_unstable();
    Ok(NullSlice { bound, candidates: space.count(), members })
}

/// Decides membership in a structured ideal for candidate polynomials of
/// degree `< bound`: by the digit rule for power forms, by lookup in the
/// truncated additive span for generator lists.
#[derive(Debug, Clone)]
pub enum Decider {
    Rule(MembershipRule),
    Span(BTreeSet<u128>),
}

impl Decider {
    pub fn new(ring: &FiniteLocalRing, ideal: &StructuredIdeal, bound: usize, cap: u128) -> Result<Self> {
        match ideal.form() {
            IdealForm::GeneratorList { gens } => Ok(Decider::Span(span_codes(ring, gens, bound, cap)?)),
            _ => Ok(Decider::Rule(MembershipRule::new(ring, ideal)?)),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Decider::Rule(_))
    }

    pub fn contains(&self, ring: &FiniteLocalRing, code: u128, coeffs: &[Elem]) -> bool {
        match self {
            Decider::Rule(rule) => rule.is_member(ring, coeffs),
            Decider::Span(set) => set.contains(&code),
        }
    }
}

/// Additive span of `c * x^j * g` over all `c` in `R` and `j + deg g < bound`.
fn span_codes(ring: &FiniteLocalRing, gens: &[Poly], bound: usize, cap: u128) -> Result<BTreeSet<u128>> {
    let space = CandidateSpace::new(ring, bound);
    space.check_cap(cap)?;
    let zero = ring.zero();
    let mut shifted = Vec::new();
    for g in gens {
        let Some(d) = g.degree() else { continue };
        for j in 0..bound.saturating_sub(d) {
            for c in ring.elements() {
                let mut v = alloc::vec![zero; bound];
                for (i, &a) in g.coeffs().iter().enumerate() {
                    v[i + j] = ring.mul(c, a);
                }
                shifted.push(v);
            }
        }
    }
    let mut span: BTreeMap<u128, Vec<Elem>> = BTreeMap::new();
    span.insert(0, alloc::vec![zero; bound]);
    for g in shifted {
        let code = space.encode(&g);
        if span.contains_key(&code) {
            continue;
        }
        // span += <g>, walking the cyclic subgroup generated by g
        let base: Vec<Vec<Elem>> = span.values().cloned().collect();
        let mut k = g.clone();
        while k.iter().any(|&c| c != zero) {
            for s in &base {
                let sum: Vec<Elem> = s.iter().zip(&k).map(|(&a, &b)| ring.add(a, b)).collect();
                span.entry(space.encode(&sum)).or_insert(sum);
            }
            k = k.iter().zip(&g).map(|(&a, &b)| ring.add(a, b)).collect();
        }
    }
    Ok(span.into_keys().collect())
}

/// Structured slice of an ideal; `approximate` for generator lists, whose
/// truncated span can miss members of high-degree origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSlice {
    pub bound: usize,
    pub members: Vec<u128>,
    pub approximate: bool,
}

pub fn ideal_slice<E: Executor>(
    ring: &FiniteLocalRing,
    ideal: &StructuredIdeal,
    bound: usize,
    cap: u128,
    exec: &E,
) -> Result<IdealSlice> {
    if ideal.ring_id() != ring.id() {
        return Err(Error::ForeignElement);
    }
    let space = CandidateSpace::new(ring, bound);
    space.check_cap(cap)?;
    match Decider::new(ring, ideal, bound, cap)? {
        Decider::Span(set) => Ok(IdealSlice { bound, members: set.into_iter().collect(), approximate: true }),
        Decider::Rule(rule) => {
            let shards = exec.run(space.shard_count(), |shard| {
                let mut out = Vec::new();
                space.for_each_in_shard(ring, &[], shard, |code, coeffs, _| {
                    if rule.is_member(ring, coeffs) {
                        out.push(code);
                    }
                });
                out
            });
            let mut members: Vec<u128> = shards.into_iter().flatten().collect();
            members.sort_unstable();
            Ok(IdealSlice { bound, members, approximate: false })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub poly: Poly,
    pub structured: bool,
    pub oracle: bool,
}

/// At most this many mismatches are kept verbatim in a report.
pub const MISMATCH_SAMPLE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceReport {
    pub ring: String,
    pub target: String,
    pub bound: usize,
    pub candidates: u128,
    pub oracle_members: u64,
    pub structured_members: u64,
    pub mismatch_count: u64,
    /// Structured members the oracle rejects.
    pub false_members: u64,
    pub mismatches: Vec<Mismatch>,
    pub approximate: bool,
}

impl SliceReport {
    pub fn certified(&self) -> bool {
        self.mismatch_count == 0
    }

    /// A structured member the oracle rejects; never acceptable, even for
    /// approximate slices.
    pub fn has_false_member(&self) -> bool {
        self.false_members > 0
    }

    pub(crate) fn record(&mut self, ring: &FiniteLocalRing, space: &CandidateSpace, code: u128, structured: bool) {
        self.mismatch_count += 1;
        if structured {
            self.false_members += 1;
        }
        if self.mismatches.len() < MISMATCH_SAMPLE {
            let poly = ring.poly_ring().from_coeffs(space.decode(code));
            self.mismatches.push(Mismatch { poly, structured, oracle: !structured });
        }
    }
}

pub fn compare_slices(
    ring: &FiniteLocalRing,
    target: &Target,
    oracle: &NullSlice,
    structured: &IdealSlice,
) -> SliceReport {
    let space = CandidateSpace::new(ring, oracle.bound);
    let mut report = SliceReport {
        ring: ring.describe(),
        target: target.name().into(),
        bound: oracle.bound,
        candidates: oracle.candidates,
        oracle_members: oracle.members.len() as u64,
        structured_members: structured.members.len() as u64,
        mismatch_count: 0,
        false_members: 0,
        mismatches: Vec::new(),
        approximate: structured.approximate,
    };
    let (a, b) = (&oracle.members, &structured.members);
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                report.record(ring, &space, *x, false);
                i += 1;
            }
            (Some(x), None) => {
                report.record(ring, &space, *x, false);
                i += 1;
            }
            (_, Some(y)) => {
                report.record(ring, &space, *y, true);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    report
}

/// A greedy additive generating set of the slice, lowest degree first.
pub fn generators_from_slice(ring: &FiniteLocalRing, slice: &NullSlice) -> Vec<Poly> {
    let space = CandidateSpace::new(ring, slice.bound);
    let px = ring.poly_ring();
    let mut polys: Vec<Poly> = slice.members.iter().map(|&c| px.from_coeffs(space.decode(c))).collect();
    polys.sort_by(|f, g| f.degree().cmp(&g.degree()).then_with(|| f.coeffs().cmp(g.coeffs())));
    let zero = ring.zero();
    let pad = |f: &Poly| {
        let mut v = f.coeffs().to_vec();
        v.resize(slice.bound, zero);
        v
    };
    let mut span: BTreeSet<u128> = BTreeSet::from([0]);
    let mut gens = Vec::new();
    for f in polys {
        let v = pad(&f);
        if span.contains(&space.encode(&v)) {
            continue;
        }
        let base: Vec<Vec<Elem>> = span.iter().map(|&c| space.decode(c)).collect();
        let mut k = v.clone();
        while k.iter().any(|&c| c != zero) {
            for s in &base {
                let sum: Vec<Elem> = s.iter().zip(&k).map(|(&a, &b)| ring.add(a, b)).collect();
                span.insert(space.encode(&sum));
            }
            k = k.iter().zip(&v).map(|(&a, &b)| ring.add(a, b)).collect();
        }
        gens.push(f);
    }
    gens
}

/// Random elements `sum_i r_i * g_i` of an ideal, with `deg r_i < degree`.
pub fn random_ideal_members(
    ring: &FiniteLocalRing,
    ideal: &StructuredIdeal,
    count: usize,
    degree: usize,
    seed: u64,
) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let px = ring.poly_ring();
    let n = ring.order();
    (0..count)
        .map(|_| {
            let mut acc = Vec::new();
            for g in ideal.expanded_gens() {
                let r: Vec<Elem> = (0..degree).map(|_| Elem(rng.random_range(0..n))).collect();
                add_into(ring, &mut acc, &mul_raw(ring, &r, g.coeffs()));
            }
            normalize(ring, &mut acc);
            px.from_coeffs(acc)
        })
        .collect()
}
