use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    compare_slices, exhaustive_null_slice, generators_from_slice, CandidateSpace, Decider, IdealSlice, NullSlice,
    SliceReport,
};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::exec::Sequential;
use crate::lift::{factor_pi_polynomial, teichmuller_lift};
use crate::null_ideal::{
    classify_ring_nullideal, compose_generators, count_polynomial_functions, decompose_zero_function,
    normal_form_count, null_maximal_generators, null_ring_generators, pi_polynomial, primary_decomposition,
    vanishes_on, CountMethod, PiEnumerator, PrimaryDecomposition, StructuredIdeal, Target,
};
use crate::poly::{divrem_monic_raw, Poly};
use crate::ring::{Elem, FiniteLocalRing};

pub const DEFAULT_SLICE_CAP: u128 = 10_000_000;
pub const DEFAULT_PI_CAP: u128 = 100_000;
pub const DEFAULT_LIFT_COUNT: u64 = 1_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Degree bound of the slices; defaults to the largest `D <= e*q + 1`
    /// whose candidate count fits `slice_cap`.
    pub bound: Option<usize>,
    pub slice_cap: u128,
    /// Above this many pi-polynomials, this many are sampled instead.
    pub pi_cap: u128,
    /// Random monic lifts of `x^q - x` checked besides the canonical pi.
    pub lift_count: u64,
    pub seed: u64,
    /// Caller-supplied generators of `Z(m)` where no structured form exists.
    pub maximal_gens: Option<Vec<Poly>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            bound: None,
            slice_cap: DEFAULT_SLICE_CAP,
            pi_cap: DEFAULT_PI_CAP,
            lift_count: DEFAULT_LIFT_COUNT,
            seed: 0,
            maximal_gens: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Compared against a truncated span; only false members count as failure.
    Approximate,
    Skipped {
        reason: String,
    },
}

impl CheckStatus {
    pub fn tag(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Approximate => "approximate",
            CheckStatus::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: u8,
    pub name: &'static str,
    pub status: CheckStatus,
    pub summary: String,
    pub witness: Option<String>,
    pub slices: Vec<SliceReport>,
}

impl CheckReport {
    fn new(id: u8, name: &'static str) -> Self {
        CheckReport { id, name, status: CheckStatus::Pass, summary: String::new(), witness: None, slices: Vec::new() }
    }

    fn skipped(mut self, err: &Error) -> Self {
        self.status = CheckStatus::Skipped { reason: format!("{}: {}", err.name(), err) };
        self
    }

    fn fail_with(&mut self, witness: String) {
        self.status = CheckStatus::Fail;
        self.witness.get_or_insert(witness);
    }

    /// With `flag_spans`, any span comparison marks the check approximate;
    /// otherwise only a span that actually missed members does.
    fn settle_slices(mut self, flag_spans: bool) -> Self {
        let loose = |s: &SliceReport| s.approximate && (flag_spans || !s.certified());
        if self.slices.iter().any(|s| s.has_false_member() || (!s.approximate && !s.certified())) {
            self.status = CheckStatus::Fail;
        } else if self.slices.iter().any(loose) && self.status == CheckStatus::Pass {
            self.status = CheckStatus::Approximate;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub ring: String,
    pub bound: usize,
    pub slice_cap: u128,
    pub pi_cap: u128,
    pub lift_count: u64,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    /// No check failed; approximate and skipped checks do not count.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, id: u8) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.id == id)
    }
}

pub fn default_bound(ring: &FiniteLocalRing, cap: u128) -> usize {
    let mut d = (ring.e() * ring.q()) as usize + 1;
    while d > 1 && CandidateSpace::new(ring, d).count() > cap {
        d -= 1;
    }
    d
}

struct Structure {
    pi: Poly,
    zm: StructuredIdeal,
    zr: StructuredIdeal,
    primary: PrimaryDecomposition,
    pis: Vec<Vec<Elem>>,
    pi_total: u128,
}

fn structure<E: Executor>(ring: &FiniteLocalRing, opts: &SuiteOptions, bound: usize, exec: &E) -> Result<Structure> {
    let pi = pi_polynomial(ring, None)?;
    let (zm, zr) = match null_maximal_generators(ring) {
        Ok(zm) => {
            let zr = null_ring_generators(ring, Some(&pi))?;
            (zm, zr)
        }
        Err(Error::NonPrincipalMaximalIdeal | Error::OutOfTheoremRange { .. }) => {
            let gens = match &opts.maximal_gens {
                Some(g) => g.clone(),
                None => {
                    let s = exhaustive_null_slice(ring, &Target::MaximalIdeal, ring.e(), bound, opts.slice_cap, exec)?;
                    generators_from_slice(ring, &s)
                }
            };
            let zr = compose_generators(ring, &gens, &pi)?;
            (StructuredIdeal::generator_list(ring, gens)?, zr)
        }
        Err(e) => return Err(e),
    };
    let primary = primary_decomposition(ring, Some(&zm), None)?;
    let en = PiEnumerator::new(ring);
    let pi_total = en.count();
    let px = ring.poly_ring();
    let pis = if pi_total <= opts.pi_cap {
        (0..pi_total).map(|i| px.product_of_linears(&en.reps(i)).into_coeffs()).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..opts.pi_cap).map(|_| px.product_of_linears(&en.random_reps(&mut rng)).into_coeffs()).collect()
    };
    Ok(Structure { pi, zm, zr, primary, pis, pi_total })
}

#[derive(Default)]
struct Pass {
    zm_oracle: Vec<u128>,
    zr_oracle: Vec<u128>,
    zm_struct: Vec<u128>,
    zr_struct: Vec<u128>,
    comp_struct: Vec<u128>,
    indivisible_members: u64,
    first_indivisible: Option<(u128, usize)>,
    nonmembers: u64,
    divisible_nonmembers: u64,
    first_divisible_nonmember: Option<u128>,
}

fn divides(ring: &FiniteLocalRing, pi: &[Elem], f: &[Elem]) -> bool {
    let mut rem = f.to_vec();
    divrem_monic_raw(ring, &mut rem, pi);
    rem.iter().all(|&c| c == ring.zero())
}

fn battery_pass<E: Executor>(
    ring: &FiniteLocalRing,
    st: &Structure,
    bound: usize,
    cap: u128,
    exec: &E,
) -> Result<(Pass, bool, bool, bool)> {
    let space = CandidateSpace::new(ring, bound);
    space.check_cap(cap)?;
    let zm_dec = Decider::new(ring, &st.zm, bound, cap)?;
    let zr_dec = Decider::new(ring, &st.zr, bound, cap)?;
    let comp_decs =
        st.primary.components.iter().map(|c| Decider::new(ring, &c.ideal, bound, cap)).collect::<Result<Vec<_>>>()?;
    let points: Vec<Elem> = ring.elements().collect();
    let in_m: Vec<bool> = points.iter().map(|&p| ring.val(p) >= 1).collect();
    let zero = ring.zero();
    let shards = exec.run(space.shard_count(), |shard| {
        let mut acc = Pass::default();
        space.for_each_in_shard(ring, &points, shard, |code, coeffs, values| {
            let mut on_m = true;
            let mut on_r = true;
            for (v, &m) in values.iter().zip(&in_m) {
                if *v != zero {
                    on_r = false;
                    if m {
                        on_m = false;
                        break;
                    }
                }
            }
            if on_m {
                acc.zm_oracle.push(code);
            }
            if zm_dec.contains(ring, code, coeffs) {
                acc.zm_struct.push(code);
            }
            if zr_dec.contains(ring, code, coeffs) {
                acc.zr_struct.push(code);
            }
            if comp_decs.iter().all(|d| d.contains(ring, code, coeffs)) {
                acc.comp_struct.push(code);
            }
            if on_r {
                acc.zr_oracle.push(code);
                if let Some(i) = st.pis.iter().position(|pi| !divides(ring, pi, coeffs)) {
                    acc.indivisible_members += 1;
                    acc.first_indivisible.get_or_insert((code, i));
                }
            } else {
                acc.nonmembers += 1;
                if st.pis.iter().all(|pi| divides(ring, pi, coeffs)) {
                    acc.divisible_nonmembers += 1;
                    acc.first_divisible_nonmember.get_or_insert(code);
                }
            }
        });
        acc
    });
    let mut total = Pass::default();
    for s in shards {
        total.zm_oracle.extend(s.zm_oracle);
        total.zr_oracle.extend(s.zr_oracle);
        total.zm_struct.extend(s.zm_struct);
        total.zr_struct.extend(s.zr_struct);
        total.comp_struct.extend(s.comp_struct);
        total.indivisible_members += s.indivisible_members;
        total.nonmembers += s.nonmembers;
        total.divisible_nonmembers += s.divisible_nonmembers;
        if total.first_indivisible.is_none() {
            total.first_indivisible = s.first_indivisible;
        }
        if total.first_divisible_nonmember.is_none() {
            total.first_divisible_nonmember = s.first_divisible_nonmember;
        }
    }
    for v in
        [&mut total.zm_oracle, &mut total.zr_oracle, &mut total.zm_struct, &mut total.zr_struct, &mut total.comp_struct]
    {
        v.sort_unstable();
    }
    let comps_exact = comp_decs.iter().all(Decider::is_exact);
    Ok((total, zm_dec.is_exact(), zr_dec.is_exact(), comps_exact))
}

/// Runs the verification battery: slice equivalence, surjectivity of pi,
/// primary decomposition, the intersection characterization, composition,
/// lifts, function counts and classification.
pub fn verify_suite<E: Executor>(ring: &FiniteLocalRing, opts: &SuiteOptions, exec: &E) -> Result<SuiteReport> {
    if let Some(gens) = &opts.maximal_gens {
        if gens.iter().any(|g| g.ring_id() != ring.id()) {
            return Err(Error::ForeignElement);
        }
    }
    let bound = opts.bound.unwrap_or_else(|| default_bound(ring, opts.slice_cap));
    let mut checks = Vec::new();
    let st = structure(ring, opts, bound, exec);
    let pass = st.as_ref().map_err(Clone::clone).and_then(|st| battery_pass(ring, st, bound, opts.slice_cap, exec));
    let slice_names: [(u8, &'static str); 5] = [
        (1, "slice_equivalence"),
        (2, "pi_surjectivity"),
        (3, "primary_decomposition"),
        (4, "pi_intersection"),
        (5, "composition"),
    ];
    match (&st, &pass) {
        (Ok(st), Ok((pass, zm_exact, zr_exact, comps_exact))) => {
            checks.push(check_slices(ring, st, pass, bound, *zm_exact, *zr_exact));
            checks.push(check_surjectivity(ring, st));
            checks.push(check_primary(ring, st, pass, bound, *comps_exact));
            checks.push(check_intersection(ring, st, pass, bound));
            checks.push(check_composition(ring, st, pass, bound));
        }
        (Ok(st), Err(err)) => {
            for (id, name) in slice_names {
                if id == 2 {
                    checks.push(check_surjectivity(ring, st));
                } else {
                    checks.push(CheckReport::new(id, name).skipped(err));
                }
            }
        }
        (Err(err), _) => {
            for (id, name) in slice_names {
                checks.push(CheckReport::new(id, name).skipped(err));
            }
        }
    }
    checks.push(check_lifts(ring, opts, exec));
    checks.push(check_counts(ring, opts.slice_cap, exec));
    checks.push(check_classification(ring));
    Ok(SuiteReport {
        ring: ring.describe(),
        bound,
        slice_cap: opts.slice_cap,
        pi_cap: opts.pi_cap,
        lift_count: opts.lift_count,
        seed: opts.seed,
        checks,
    })
}

fn null_slice(bound: usize, members: &[u128], ring: &FiniteLocalRing) -> NullSlice {
    NullSlice { bound, candidates: CandidateSpace::new(ring, bound).count(), members: members.to_vec() }
}

fn check_slices(
    ring: &FiniteLocalRing,
    st: &Structure,
    pass: &Pass,
    bound: usize,
    zm_exact: bool,
    zr_exact: bool,
) -> CheckReport {
    let mut c = CheckReport::new(1, "slice_equivalence");
    let zm = IdealSlice { bound, members: pass.zm_struct.clone(), approximate: !zm_exact };
    let zr = IdealSlice { bound, members: pass.zr_struct.clone(), approximate: !zr_exact };
    c.slices.push(compare_slices(ring, &Target::MaximalIdeal, &null_slice(bound, &pass.zm_oracle, ring), &zm));
    c.slices.push(compare_slices(ring, &Target::WholeRing, &null_slice(bound, &pass.zr_oracle, ring), &zr));
    c.summary = format!(
        "Z(m) as {}: {} members; Z(R) as {}: {} members; bound {}",
        st.zm.form().tag(),
        pass.zm_oracle.len(),
        st.zr.form().tag(),
        pass.zr_oracle.len(),
        bound
    );
    c.settle_slices(true)
}

fn check_surjectivity(ring: &FiniteLocalRing, st: &Structure) -> CheckReport {
    let mut c = CheckReport::new(2, "pi_surjectivity");
    let px = ring.poly_ring();
    let m: Vec<Elem> = ring.maximal_ideal().to_vec();
    let mut checked = 0u64;
    let canonical = st.pi.coeffs().to_vec();
    for pi in core::iter::once(&canonical).chain(&st.pis) {
        let pi = px.from_coeffs(pi.clone());
        for &rep in ring.reps() {
            let mut hit: Vec<Elem> = ring.coset_elements(rep).into_iter().map(|r| px.eval(&pi, r)).collect();
            hit.sort_unstable();
            hit.dedup();
            checked += 1;
            if hit != m {
                let missing = m.iter().find(|x| !hit.contains(x));
                c.fail_with(format!(
                    "pi = {} misses {} on the coset of {}",
                    px.render(&pi),
                    missing.map_or_else(|| "(leaves m)".to_string(), |&x| ring.label(x)),
                    ring.label(rep)
                ));
            }
        }
    }
    c.summary = format!("{} (pi, coset) pairs, {} elements of m each", checked, m.len());
    c
}

fn check_primary(ring: &FiniteLocalRing, st: &Structure, pass: &Pass, bound: usize, exact: bool) -> CheckReport {
    let mut c = CheckReport::new(3, "primary_decomposition");
    let px = ring.poly_ring();
    let comp = IdealSlice { bound, members: pass.comp_struct.clone(), approximate: !exact };
    let mut report = compare_slices(ring, &Target::WholeRing, &null_slice(bound, &pass.zr_oracle, ring), &comp);
    report.target = "component_intersection".into();
    c.slices.push(report);
    let reps = ring.reps();
    for w in &st.primary.minimality_witnesses {
        if !ring.is_unit(w.value) {
            c.fail_with(format!("h_{} = {} is not a unit at {}", w.index, px.render(&w.h), ring.label(reps[w.index])));
        }
        for (i, &other) in reps.iter().enumerate() {
            if i == w.index {
                continue;
            }
            if let Ok(v) = vanishes_on(ring, &w.h, &Target::Coset(other), ring.e()) {
                if !v.holds() {
                    c.fail_with(format!("h_{} does not vanish on the coset of {}", w.index, ring.label(other)));
                }
            }
        }
    }
    c.summary = format!(
        "{} components, {} minimality witnesses",
        st.primary.components.len(),
        st.primary.minimality_witnesses.len()
    );
    c.settle_slices(false)
}

fn check_intersection(ring: &FiniteLocalRing, st: &Structure, pass: &Pass, bound: usize) -> CheckReport {
    let mut c = CheckReport::new(4, "pi_intersection");
    let px = ring.poly_ring();
    let space = CandidateSpace::new(ring, bound);
    if let Some((code, i)) = pass.first_indivisible {
        c.fail_with(format!(
            "{} is in Z(R) but not divisible by {}",
            px.render(&px.from_coeffs(space.decode(code))),
            px.render(&px.from_coeffs(st.pis[i].clone()))
        ));
    }
    if let Some(code) = pass.first_divisible_nonmember {
        c.fail_with(format!(
            "{} is divisible by every pi but not in Z(R)",
            px.render(&px.from_coeffs(space.decode(code)))
        ));
    }
    c.summary = format!(
        "{} of {} pi-polynomials; {} members, {} non-members separated",
        st.pis.len(),
        st.pi_total,
        pass.zr_oracle.len(),
        pass.nonmembers - pass.divisible_nonmembers
    );
    c
}

fn check_composition(ring: &FiniteLocalRing, st: &Structure, pass: &Pass, bound: usize) -> CheckReport {
    let mut c = CheckReport::new(5, "composition");
    let px = ring.poly_ring();
    let space = CandidateSpace::new(ring, bound);
    let mut failures = 0u64;
    for &code in &pass.zr_oracle {
        let f = px.from_coeffs(space.decode(code));
        let ok = decompose_zero_function(ring, &f, &st.pi).map(|d| d.certified()).unwrap_or(false);
        if !ok {
            failures += 1;
            c.fail_with(format!("{} does not decompose along {}", px.render(&f), px.render(&st.pi)));
        }
    }
    c.summary = format!("{} members of Z(R), {} failures", pass.zr_oracle.len(), failures);
    c
}

/// The canonical pi followed by `count` random monic lifts `pi + g` with
/// `deg g < q` and coefficients of `g` in `m`.
pub fn random_lifts(ring: &FiniteLocalRing, count: u64, seed: u64) -> Result<Vec<Poly>> {
    let pi = pi_polynomial(ring, None)?;
    let px = ring.poly_ring();
    let m = ring.maximal_ideal();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count as usize + 1);
    out.push(pi.clone());
    for _ in 0..count {
        let g: Vec<Elem> = (0..ring.q()).map(|_| m[rng.random_range(0..m.len())]).collect();
        out.push(px.add(&pi, &px.from_coeffs(g))?);
    }
    Ok(out)
}

fn check_lifts<E: Executor>(ring: &FiniteLocalRing, opts: &SuiteOptions, exec: &E) -> CheckReport {
    let mut c = CheckReport::new(6, "lifts");
    let lifts = match random_lifts(ring, opts.lift_count, opts.seed) {
        Ok(l) => l,
        Err(err) => return c.skipped(&err),
    };
    let px = ring.poly_ring();
    let e = ring.e();
    let failures: Vec<Option<String>> = exec.run(lifts.len(), |i| {
        let pi = &lifts[i];
        for r in ring.elements() {
            let t = match teichmuller_lift(ring, pi, r) {
                Ok(t) => t,
                Err(err) => return Some(format!("{} from {}: {}", px.render(pi), ring.label(r), err.name())),
            };
            let good = t.stabilized_at < e as usize
                && t.cauchy_holds(e)
                && ring.coset_of(t.root) == ring.coset_of(r)
                && px.eval(pi, t.root) == ring.zero();
            if !good {
                return Some(format!("{} from {}: trace {:?}", px.render(pi), ring.label(r), t.iterates));
            }
        }
        match factor_pi_polynomial(ring, pi, &Sequential) {
            Ok(f) => {
                for (i, &a) in f.roots.iter().enumerate() {
                    for &b in &f.roots[i + 1..] {
                        if !ring.is_unit(ring.sub(a, b)) {
                            return Some(format!(
                                "{}: roots {} and {} are congruent",
                                px.render(pi),
                                ring.label(a),
                                ring.label(b)
                            ));
                        }
                    }
                }
                None
            }
            Err(err) => Some(format!("{}: {}", px.render(pi), err.name())),
        }
    });
    let failed = failures.iter().filter(|f| f.is_some()).count();
    if let Some(w) = failures.into_iter().flatten().next() {
        c.fail_with(w);
    }
    c.summary = format!("{} lifts x {} starts, {} failing lifts", lifts.len(), ring.order(), failed);
    c
}

fn check_counts<E: Executor>(ring: &FiniteLocalRing, cap: u128, exec: &E) -> CheckReport {
    let mut c = CheckReport::new(7, "function_count");
    let normal = match normal_form_count(ring) {
        Ok(n) => n,
        Err(err) => return c.skipped(&err),
    };
    match count_polynomial_functions(ring, CountMethod::Exhaustive { bound: None, cap }, exec) {
        Ok(n) if n == normal => c.summary = format!("{n} functions"),
        Ok(n) => c.fail_with(format!("exhaustive {n}, normal form {normal}")),
        Err(err) => return c.skipped(&err),
    }
    c
}

fn check_classification(ring: &FiniteLocalRing) -> CheckReport {
    let mut c = CheckReport::new(8, "classification");
    let cl = match classify_ring_nullideal(ring) {
        Ok(cl) => cl,
        Err(err) => return c.skipped(&err),
    };
    let px = ring.poly_ring();
    let e = ring.e();
    let holds = |f: &Poly, t: Target| vanishes_on(ring, f, &t, e).map(|v| v.holds()).unwrap_or(false);
    if cl.zfr_principal != cl.is_field || cl.zfm_principal != cl.is_field {
        c.fail_with("principal does not match is_field".into());
    }
    if cl.zfr_nonzero_witness.is_zero() || !holds(&cl.zfr_nonzero_witness, Target::WholeRing) {
        c.fail_with(format!("bad Z(R) witness {}", px.render(&cl.zfr_nonzero_witness)));
    }
    if cl.zfm_nonzero_witness.is_zero() || !holds(&cl.zfm_nonzero_witness, Target::MaximalIdeal) {
        c.fail_with(format!("bad Z(m) witness {}", px.render(&cl.zfm_nonzero_witness)));
    }
    for (f, t) in [(&cl.zfr_regular_witness, Target::WholeRing), (&cl.zfm_regular_witness, Target::MaximalIdeal)] {
        if !holds(f, t) || !matches!(px.is_regular(f), Ok(Ok(()))) {
            c.fail_with(format!("bad regular witness {}", px.render(f)));
        }
    }
    match (&cl.non_principal_witness, cl.is_field) {
        (Some((r, v)), false) if px.eval(&cl.pi, *r) == *v && *v != ring.zero() => {}
        (None, true) => {}
        _ => c.fail_with("missing or wrong principality witness".into()),
    }
    c.summary = format!("principal = {}", cl.zfr_principal);
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{presets, RingSpec};

    fn run(spec: RingSpec, bound: Option<usize>) -> SuiteReport {
        let r = FiniteLocalRing::new(spec).unwrap();
        let opts = SuiteOptions { bound, lift_count: 20, ..Default::default() };
        verify_suite(&r, &opts, &Sequential).unwrap()
    }

    #[test]
    fn chain_rings_pass() {
        for s in ["Z/4", "Z/8", "Z/9", "Z/5", "F4[t]/t^2"] {
            let report = run(s.parse().unwrap(), Some(4));
            for c in &report.checks {
                assert!(c.status == CheckStatus::Pass || matches!(c.status, CheckStatus::Skipped { .. }), "{s}: {c:?}");
            }
        }
    }

    #[test]
    fn non_principal_ring_is_approximate() {
        let report = run(RingSpec::Table(presets::f2_su_squared()), Some(4));
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.check(1).unwrap().status, CheckStatus::Approximate);
        for id in [2, 4, 5] {
            assert_eq!(report.check(id).unwrap().status, CheckStatus::Pass);
        }
        assert!(matches!(report.check(7).unwrap().status, CheckStatus::Skipped { .. }));
    }

    #[test]
    fn default_bound_respects_cap() {
        let r = FiniteLocalRing::new("Z/9".parse().unwrap()).unwrap();
        assert_eq!(default_bound(&r, DEFAULT_SLICE_CAP), 7);
        assert_eq!(default_bound(&r, 1000), 3);
    }

    #[test]
    fn lifts_are_seeded() {
        let r = FiniteLocalRing::new("Z/27".parse().unwrap()).unwrap();
        let a = random_lifts(&r, 10, 5).unwrap();
        assert_eq!(a, random_lifts(&r, 10, 5).unwrap());
        assert_eq!(a.len(), 11);
    }
}
