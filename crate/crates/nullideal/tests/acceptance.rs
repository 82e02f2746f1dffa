//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::Command;
use std::time::Instant;

use nullideal::Rayon;
use nullideal_core::lift::{factor_pi_polynomial, teichmuller_lift};
use nullideal_core::null_ideal::{
    classify_ring_nullideal, compose_generators, count_polynomial_functions, decompose_zero_function,
    normal_form_count, null_maximal_generators, null_ring_generators, pi_polynomial, primary_decomposition,
    vanishes_on, CountMethod, Target,
};
use nullideal_core::oracle::{
    compare_slices, exhaustive_null_slice, ideal_slice, random_ideal_members, random_lifts, verify_suite,
    CandidateSpace, CheckStatus, SuiteOptions, SuiteReport,
};
use nullideal_core::ring::presets;
use nullideal_core::{Elem, FiniteLocalRing, Poly, RingSpec, StructuredIdeal};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion<'a> = (u8, &'static str, Box<dyn Fn() -> Outcome + 'a>);

const CAP: u128 = 10_000_000;

fn ring(s: &str) -> FiniteLocalRing {
    FiniteLocalRing::new(s.parse().unwrap()).unwrap()
}

fn su() -> FiniteLocalRing {
    FiniteLocalRing::new(RingSpec::Table(presets::f2_su_squared())).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_nullideal"))
        .arg("--format")
        .arg("json")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect()).unwrap_or_default()
}

fn parse_all(r: &FiniteLocalRing, gens: &[&str]) -> Vec<Poly> {
    gens.iter().map(|g| r.poly_ring().parse(g).unwrap()).collect()
}

fn slice_check(
    r: &FiniteLocalRing,
    target: Target,
    ideal: &StructuredIdeal,
    bound: usize,
    exec: &Rayon,
) -> Result<u64, String> {
    let oracle = exhaustive_null_slice(r, &target, r.e(), bound, CAP, exec).map_err(|e| e.to_string())?;
    let structured = ideal_slice(r, ideal, bound, CAP, exec).map_err(|e| e.to_string())?;
    let report = compare_slices(r, &target, &oracle, &structured);
    ensure(report.certified(), || {
        format!("{} {} slice at D={bound}: {} mismatches", r.describe(), target.name(), report.mismatch_count)
    })?;
    Ok(report.oracle_members)
}

fn z9_battery(exec: &Rayon) -> SuiteReport {
    let opts = SuiteOptions { bound: Some(7), lift_count: 10, seed: 1, ..Default::default() };
    verify_suite(&ring("Z/9"), &opts, exec).unwrap()
}

fn criterion_1(z9: &SuiteReport, exec: &Rayon) -> Outcome {
    let doc = cli(&["null-gens", "--ring", "Z/3^2", "--target", "maximal"])?;
    ensure(strings(&doc["result"]["generators"]) == ["x^2", "3*x"], || {
        format!("Z(m) = {}", doc["result"]["generators"])
    })?;
    let doc = cli(&["null-gens", "--ring", "Z/3^2", "--target", "ring", "--pi", "x^3-x"])?;
    let factored = strings(&doc["result"]["factored"]);
    ensure(factored == ["(x^3 + 8*x)^2", "3*(x^3 + 8*x)"], || format!("Z(R) = {factored:?}"))?;
    ensure(doc["result"]["status"] == "verified", || "generators not verified".into())?;

    let check = z9.check(1).ok_or("no slice check")?;
    ensure(check.status == CheckStatus::Pass, || format!("battery slice check: {:?}", check.status))?;
    for s in &check.slices {
        ensure(s.candidates == 9u128.pow(7) && s.certified(), || {
            format!("{} slice: {} mismatches", s.target, s.mismatch_count)
        })?;
    }
    // the same ideal presented with pi = x^3 - x
    let r = ring("Z/9");
    let pi = r.poly_ring().parse("x^3-x").unwrap();
    let zr = null_ring_generators(&r, Some(&pi)).map_err(|e| e.to_string())?;
    let members = slice_check(&r, Target::WholeRing, &zr, 7, exec)?;
    Ok(format!(
        "Z(m) = (x,3)^2, Z(R) = (x^3-x,3)^2; D=7 over {} candidates, {} + {} members, 0 mismatches",
        9u64.pow(7),
        check.slices[0].oracle_members,
        members
    ))
}

fn criterion_2(exec: &Rayon) -> Outcome {
    let r = ring("Z/8");
    let zm = null_maximal_generators(&r).map_err(|e| e.to_string())?;
    ensure(zm.form().tag() == "PowerPlusForm", || zm.form().tag().into())?;
    let list = StructuredIdeal::generator_list(&r, parse_all(&r, &["x^2-2x", "4x"])).unwrap();
    let oracle = exhaustive_null_slice(&r, &Target::MaximalIdeal, 3, 5, CAP, exec).map_err(|e| e.to_string())?;
    let a = ideal_slice(&r, &zm, 5, CAP, exec).map_err(|e| e.to_string())?;
    let b = ideal_slice(&r, &list, 5, CAP, exec).map_err(|e| e.to_string())?;
    ensure(a.members == b.members, || "the two presentations of Z(m) differ at D=5".into())?;
    ensure(compare_slices(&r, &Target::MaximalIdeal, &oracle, &a).certified(), || "Z(m) slice mismatch".into())?;

    let pi = pi_polynomial(&r, None).unwrap();
    ensure(pi == r.poly_ring().parse("x^2-x").unwrap(), || "canonical pi is not x^2 - x".into())?;
    let composed = compose_generators(&r, &parse_all(&r, &["x^2-2x", "4x"]), &pi).unwrap();
    let expected = parse_all(&r, &["(x^2-x)^2-2(x^2-x)", "4(x^2-x)"]);
    ensure(composed.expanded_gens() == expected.as_slice(), || "composed generators differ".into())?;
    let zr = null_ring_generators(&r, None).unwrap();
    let zr_members = slice_check(&r, Target::WholeRing, &zr, 5, exec)?;
    let oracle_r = exhaustive_null_slice(&r, &Target::WholeRing, 3, 5, CAP, exec).map_err(|e| e.to_string())?;
    let span = ideal_slice(&r, &composed, 5, CAP, exec).map_err(|e| e.to_string())?;
    ensure(compare_slices(&r, &Target::WholeRing, &oracle_r, &span).certified(), || {
        "composed Z(R) span mismatch".into()
    })?;
    Ok(format!(
        "Z(m): {} members in both presentations; Z(R): {} members; {} candidates each",
        a.members.len(),
        zr_members,
        8u32.pow(5)
    ))
}

fn criterion_3(exec: &Rayon) -> Outcome {
    let poly = "x^5+5x^4+40x^3+85x^2+24x+50";
    let doc = cli(&["factor", "--ring", "Z/5^3", "--poly", poly])?;
    let roots = strings(&doc["result"]["roots"]);
    ensure(roots == ["50", "31", "72", "18", "74"], || format!("roots {roots:?}"))?;
    ensure(doc["result"]["product_matches"] == true, || "product mismatch".into())?;
    let r = ring("Z/125");
    let pi = r.poly_ring().parse(poly).unwrap();
    let f = factor_pi_polynomial(&r, &pi, exec).map_err(|e| e.to_string())?;
    let steps: Vec<usize> = f.traces.iter().map(|t| t.stabilized_at).collect();
    ensure(steps.iter().all(|&s| s <= 2), || format!("stabilization steps {steps:?}"))?;
    ensure(f.product == pi, || "re-expanded product differs".into())?;
    Ok(format!("roots {}, stabilized at {steps:?}", roots.join(", ")))
}

fn criterion_4(z9: &SuiteReport) -> Outcome {
    let r = ring("Z/9");
    let d = primary_decomposition(&r, None, None).map_err(|e| e.to_string())?;
    let expected = [["x^2", "3x"], ["(x-1)^2", "3(x-1)"], ["(x-2)^2", "3(x-2)"]];
    for (c, gens) in d.components.iter().zip(expected) {
        ensure(c.generators() == parse_all(&r, &gens).as_slice(), || format!("component at {}", r.label(c.center)))?;
    }
    for w in &d.minimality_witnesses {
        ensure(w.value != r.zero(), || format!("h_{} vanishes at its own center", w.index))?;
        for (i, &c) in r.reps().iter().enumerate() {
            if i != w.index {
                let v = vanishes_on(&r, &w.h, &Target::Coset(c), r.e()).unwrap();
                ensure(v.holds(), || format!("h_{} does not vanish on the coset of {}", w.index, r.label(c)))?;
            }
        }
    }
    let check = z9.check(3).ok_or("no primary check")?;
    ensure(check.status == CheckStatus::Pass, || format!("{:?}: {:?}", check.status, check.witness))?;
    Ok(format!(
        "3 components; intersection slice at D=7 equals Z(R) ({} members); 3 minimality witnesses",
        check.slices[0].oracle_members
    ))
}

fn criterion_5(z9: &SuiteReport) -> Outcome {
    let check = z9.check(4).ok_or("no intersection check")?;
    ensure(check.status == CheckStatus::Pass, || format!("{:?}: {:?}", check.status, check.witness))?;
    ensure(check.summary.starts_with("27 of 27"), || check.summary.clone())?;
    Ok(check.summary.clone())
}

fn decomposes(r: &FiniteLocalRing, f: &Poly, pi: &Poly) -> bool {
    decompose_zero_function(r, f, pi).map(|d| d.certified()).unwrap_or(false)
}

fn criterion_6(exec: &Rayon) -> Outcome {
    let mut detail = Vec::new();
    for r in [ring("Z/8"), su()] {
        let pi = pi_polynomial(&r, None).unwrap();
        let slice = exhaustive_null_slice(&r, &Target::WholeRing, r.e(), 5, CAP, exec).map_err(|e| e.to_string())?;
        let space = CandidateSpace::new(&r, 5);
        let failures = slice
            .members
            .iter()
            .filter(|&&c| !decomposes(&r, &r.poly_ring().from_coeffs(space.decode(c)), &pi))
            .count();
        ensure(failures == 0, || format!("{}: {failures} failures", r.describe()))?;
        detail.push(format!("{} {} members", r.describe(), slice.members.len()));
    }
    let r = ring("Z/9");
    let pi = pi_polynomial(&r, None).unwrap();
    let zr = null_ring_generators(&r, Some(&pi)).unwrap();
    let sample = random_ideal_members(&r, &zr, 10_000, 8, 6);
    let failures = sample.iter().filter(|f| !decomposes(&r, f, &pi)).count();
    ensure(failures == 0, || format!("Z/9: {failures} of 10000 sampled members fail"))?;
    detail.push("Z/9 10000 sampled members (seed 6)".into());
    Ok(format!("{}; 0 failures", detail.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut traces = 0;
    for spec in ["Z/8", "Z/9", "Z/27", "F2[t]/t^3"] {
        let r = ring(spec);
        let e = r.e();
        for pi in random_lifts(&r, 100, 7).map_err(|e| e.to_string())? {
            for start in r.elements() {
                let t = teichmuller_lift(&r, &pi, start).map_err(|e| format!("{spec}: {e}"))?;
                let ok = t.stabilized_at < e as usize
                    && t.diff_valuations.iter().enumerate().all(|(n, &v)| v >= (n as u32 + 1).min(e));
                ensure(ok, || {
                    format!("{spec}: {} from {}: {:?}", r.poly_ring().render(&pi), r.label(start), t.iterates)
                })?;
                traces += 1;
            }
        }
    }
    Ok(format!("{traces} traces over 4 rings x 101 lifts (seed 7), 0 failures"))
}

fn criterion_8(exec: &Rayon) -> Outcome {
    let mut detail = Vec::new();
    for (spec, frozen) in [("Z/4", 64u128), ("Z/8", 1024), ("Z/9", 19683)] {
        let r = ring(spec);
        let exhaustive =
            count_polynomial_functions(&r, CountMethod::exhaustive(), exec).map_err(|e| format!("{spec}: {e}"))?;
        let normal = normal_form_count(&r).map_err(|e| format!("{spec}: {e}"))?;
        ensure(exhaustive == frozen && normal == frozen, || {
            format!("{spec}: exhaustive {exhaustive}, normal form {normal}")
        })?;
        detail.push(format!("{spec} -> {frozen}"));
    }
    Ok(detail.join(", "))
}

fn criterion_9() -> Outcome {
    for spec in ["Z/2", "Z/3", "Z/5", "F4"] {
        let r = ring(spec);
        let c = classify_ring_nullideal(&r).map_err(|e| e.to_string())?;
        let pi = pi_polynomial(&r, None).unwrap();
        let gens = c.principal_generators.as_ref();
        ensure(c.zfr_principal && c.zfm_principal && gens.map(|g| &g.0) == Some(&pi), || {
            format!("{spec} not principal by pi")
        })?;
    }
    let mut rings: Vec<FiniteLocalRing> = ["Z/4", "Z/8", "Z/9", "Z/25", "F2[t]/t^2"].iter().map(|s| ring(s)).collect();
    rings.push(su());
    for r in &rings {
        let c = classify_ring_nullideal(r).map_err(|e| e.to_string())?;
        let witness = c.non_principal_witness.filter(|&(p, v)| v != r.zero() && r.poly_ring().eval(&c.pi, p) == v);
        ensure(!c.zfr_principal && !c.zfm_principal && witness.is_some(), || {
            format!("{} misclassified", r.describe())
        })?;
    }
    Ok("principal for Z/2, Z/3, Z/5, F4; not principal with witness for Z/4, Z/8, Z/9, Z/25, F2[t]/t^2, F2[s,u]/(s,u)^2".into())
}

fn criterion_10() -> Outcome {
    let mut rings: Vec<FiniteLocalRing> = [
        "Z/2",
        "Z/3",
        "Z/5",
        "F4",
        "Z/4",
        "Z/8",
        "Z/9",
        "Z/16",
        "Z/25",
        "Z/27",
        "Z/125",
        "F2[t]/t^2",
        "F2[t]/t^3",
        "F4[t]/t^2",
        "F8[t]/t^2",
    ]
    .iter()
    .map(|s| ring(s))
    .collect();
    rings.push(su());
    let mut pairs = 0;
    for r in &rings {
        let px = r.poly_ring();
        let pi = pi_polynomial(r, None).unwrap();
        for &c in r.reps() {
            let mut hit: Vec<Elem> = r.coset_elements(c).into_iter().map(|a| px.eval(&pi, a)).collect();
            hit.sort_unstable();
            hit.dedup();
            ensure(hit == r.maximal_ideal(), || format!("{}: coset of {} misses part of m", r.describe(), r.label(c)))?;
            pairs += r.maximal_ideal().len();
        }
    }
    Ok(format!("{} rings, {pairs} (coset, m) pairs hit", rings.len()))
}

fn main() {
    let exec = Rayon::new(None).unwrap();
    let started = Instant::now();
    let z9 = z9_battery(&exec);
    let criteria: Vec<Criterion> = vec![
        (1, "Z/9 generators and D=7 slice equality", Box::new(|| criterion_1(&z9, &exec))),
        (2, "Z/8 presentations and D=5 slices", Box::new(|| criterion_2(&exec))),
        (3, "Z/125 pi factorization", Box::new(|| criterion_3(&exec))),
        (4, "Z/9 primary decomposition", Box::new(|| criterion_4(&z9))),
        (5, "Z/9 intersection over all pi-polynomials", Box::new(|| criterion_5(&z9))),
        (6, "composition decomposition", Box::new(|| criterion_6(&exec))),
        (7, "Cauchy valuation certificates", Box::new(criterion_7)),
        (8, "function counts", Box::new(|| criterion_8(&exec))),
        (9, "principality classification", Box::new(criterion_9)),
        (10, "surjectivity of pi onto m", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (n, name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {n:>2} ({name}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n:>2} ({name}): {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        criteria.len() - failed,
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
