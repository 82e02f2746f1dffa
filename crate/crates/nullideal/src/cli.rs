use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nullideal_core::lift::{factor_pi_polynomial, teichmuller_lift, TeichmullerTrace};
use nullideal_core::null_ideal::{
    classify_ring_nullideal, count_polynomial_functions, decompose_zero_function, ideal_membership, is_pi_polynomial,
    normal_form_count, null_maximal_generators, null_ring_generators, pi_intersection_check, pi_polynomial,
    primary_decomposition, vanishes_on, CountMethod, MembershipRule, SampleMode, Target, Vanishing,
};
use nullideal_core::oracle::{
    compare_slices, exhaustive_null_slice, ideal_slice, verify_suite, SliceReport, SuiteOptions, SuiteReport,
    DEFAULT_LIFT_COUNT, DEFAULT_PI_CAP, DEFAULT_SLICE_CAP,
};
use nullideal_core::ring::DEFAULT_SIZE_CAP;
use nullideal_core::{Elem, Error, FiniteLocalRing, IdealForm, Poly, RingKind, StructuredIdeal};
use serde_json::{json, Value};

use crate::parallel::Rayon;
use crate::report::to_text;
use crate::table_file::{resolve_ring, save_table, table_of};

#[derive(Debug, Parser)]
#[command(name = "nullideal", version, about = "Polynomials vanishing on finite local rings")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the exhaustive oracles (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest ring order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: u64,
    /// Write the output document here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Ring,
    Maximal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountArg {
    Auto,
    NormalForm,
    Exhaustive,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// `Z/p^n`, `F{p^r}[t]/t^e`, `F{q}` or `table:<path>`.
    #[arg(long)]
    pub ring: String,
    /// Comma-separated coset representatives replacing the canonical ones.
    #[arg(long)]
    pub reps: Option<String>,
}

#[derive(Debug, Args)]
pub struct Caps {
    #[arg(long, env = "NULLIDEAL_SLICE_CAP", default_value_t = DEFAULT_SLICE_CAP as u64)]
    pub slice_cap: u64,
    #[arg(long, env = "NULLIDEAL_PI_CAP", default_value_t = DEFAULT_PI_CAP as u64)]
    pub pi_cap: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Residue field, nilpotency index, maximal ideal and representatives.
    RingInfo {
        #[command(flatten)]
        ring: RingArgs,
        /// Also write the ring's operation tables as a table file.
        #[arg(long)]
        export_table: Option<PathBuf>,
    },
    /// Structured generators of Z(R) or Z(m).
    NullGens {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = TargetArg::Ring)]
        target: TargetArg,
        /// Pi-polynomial to compose with (target ring only).
        #[arg(long)]
        pi: Option<String>,
        /// Also compare against the exhaustive slice of degree < BOUND.
        #[arg(long)]
        bound: Option<usize>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Decides membership in Z(R) or Z(m) by the pi-adic digit rule.
    Membership {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = TargetArg::Ring)]
        target: TargetArg,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        pi: Option<String>,
    },
    /// Teichmüller traces and the linear factorization of a lift of x^q - x.
    Factor {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: String,
    },
    /// Primary decomposition of Z(R), or with --poly the decomposition of a
    /// zero function along pi.
    Decompose {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        pi: Option<String>,
    },
    /// Checks divisibility of a polynomial by every (or sampled) pi-polynomial.
    IntersectCheck {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: String,
        /// Sample this many pi-polynomials instead of enumerating all.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: Caps,
    },
    /// Number of polynomial functions R -> R.
    Count {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = CountArg::Auto)]
        method: CountArg,
        /// Degree bound for the exhaustive count (default e*q + 1).
        #[arg(long)]
        bound: Option<usize>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Nonzero, regular and principal status of Z(R) and Z(m).
    Classify {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Full brute-force verification battery.
    Verify {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: Caps,
        /// Random lifts of x^q - x checked besides the canonical pi.
        #[arg(long, env = "NULLIDEAL_LIFT_COUNT", default_value_t = DEFAULT_LIFT_COUNT)]
        lifts: u64,
        /// Semicolon-separated generators of Z(m) for rings without a
        /// structured form.
        #[arg(long)]
        maximal_gens: Option<String>,
    },
}

/// A finished run: the output document and whether every check held.
pub struct Outcome {
    pub doc: Value,
    pub ok: bool,
}

/// Exit status for an error: 3 for refusals, 1 for failed internal
/// certificates, 2 for everything caused by bad input.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::NonPrincipalMaximalIdeal
            | Error::OutOfTheoremRange { .. }
            | Error::CapExceeded { .. }
            | Error::SizeLimit { .. }
            | Error::UnsupportedForm,
        ) => 3,
        Some(Error::NoStabilization { .. } | Error::FactorMismatch) => 1,
        _ => 2,
    }
}

fn error_name(err: &anyhow::Error) -> &'static str {
    err.downcast_ref::<Error>().map_or("InvalidInput", Error::name)
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    let (doc, code) = match run(&cli) {
        Ok(out) => (out.doc, if out.ok { 0 } else { 1 }),
        Err(err) => {
            let name = error_name(&err);
            eprintln!("error: {name}: {err:#}");
            if cli.format == Format::Text {
                return exit_code(&err);
            }
            let doc = json!({
                "command": command_name(&cli.command),
                "error": { "name": name, "message": format!("{err:#}") },
            });
            (doc, exit_code(&err))
        }
    };
    let text = match cli.format {
        Format::Text => to_text(&doc),
        Format::Json => serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n",
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    };
    if let Err(err) = written {
        eprintln!("error: {err:#}");
        return 2;
    }
    code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::RingInfo { .. } => "ring-info",
        Command::NullGens { .. } => "null-gens",
        Command::Membership { .. } => "membership",
        Command::Factor { .. } => "factor",
        Command::Decompose { .. } => "decompose",
        Command::IntersectCheck { .. } => "intersect-check",
        Command::Count { .. } => "count",
        Command::Classify { .. } => "classify",
        Command::Verify { .. } => "verify",
    }
}

fn num(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(n) => json!(n),
        Err(_) => json!(n.to_string()),
    }
}

struct Ctx<'a> {
    ring: FiniteLocalRing,
    reps: Option<Vec<Elem>>,
    exec: Rayon,
    config: serde_json::Map<String, Value>,
    cli: &'a Cli,
}

impl Ctx<'_> {
    fn label(&self, a: Elem) -> Value {
        json!(self.ring.label(a))
    }

    fn labels(&self, v: &[Elem]) -> Value {
        Value::Array(v.iter().map(|&a| self.label(a)).collect())
    }

    fn render(&self, f: &Poly) -> Value {
        json!(self.ring.poly_ring().render(f))
    }

    fn renders(&self, fs: &[Poly]) -> Value {
        Value::Array(fs.iter().map(|f| self.render(f)).collect())
    }

    fn parse(&self, text: &str) -> anyhow::Result<Poly> {
        self.ring.poly_ring().parse(text).with_context(|| format!("polynomial `{text}`"))
    }

    fn set(&mut self, key: &str, v: Value) {
        self.config.insert(key.into(), v);
    }

    fn pi(&self, text: Option<&str>) -> anyhow::Result<Poly> {
        match text {
            Some(t) => {
                let pi = self.parse(t)?;
                if !is_pi_polynomial(&self.ring, &pi) {
                    return Err(Error::NotAPiPolynomial.into());
                }
                Ok(pi)
            }
            None => Ok(pi_polynomial(&self.ring, self.reps.as_deref())?),
        }
    }

    fn finish(self, result: Value, ok: bool) -> Outcome {
        let doc = json!({
            "command": command_name(&self.cli.command),
            "config": Value::Object(self.config),
            "result": result,
        });
        Outcome { doc, ok }
    }
}

fn parse_reps(ring: &FiniteLocalRing, text: &str) -> anyhow::Result<Vec<Elem>> {
    let px = ring.poly_ring();
    let reps = text
        .split(',')
        .map(|t| {
            let f = px.parse(t).with_context(|| format!("representative `{}`", t.trim()))?;
            match f.degree() {
                None => Ok(ring.zero()),
                Some(0) => Ok(f.coeffs()[0]),
                Some(_) => bail!("representative `{}` is not a ring element", t.trim()),
            }
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    ring.check_reps(&reps)?;
    Ok(reps)
}

fn ring_args(c: &Command) -> &RingArgs {
    match c {
        Command::RingInfo { ring, .. }
        | Command::NullGens { ring, .. }
        | Command::Membership { ring, .. }
        | Command::Factor { ring, .. }
        | Command::Decompose { ring, .. }
        | Command::IntersectCheck { ring, .. }
        | Command::Count { ring, .. }
        | Command::Classify { ring }
        | Command::Verify { ring, .. } => ring,
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let args = ring_args(&cli.command);
    let ring = resolve_ring(&args.ring, cli.size_cap)?;
    let reps = args.reps.as_deref().map(|t| parse_reps(&ring, t)).transpose()?;
    let exec = Rayon::new(cli.jobs)?;
    let mut config = serde_json::Map::new();
    config.insert("ring".into(), json!(args.ring));
    config.insert("ring_description".into(), json!(ring.describe()));
    config.insert("format".into(), json!(if cli.format == Format::Json { "json" } else { "text" }));
    config.insert("jobs".into(), json!(cli.jobs));
    config.insert("size_cap".into(), json!(cli.size_cap));
    let mut ctx = Ctx { ring, reps, exec, config, cli };
    let reps_label = ctx.reps.as_ref().map(|r| ctx.labels(r));
    ctx.set("reps", reps_label.unwrap_or(Value::Null));
    match &cli.command {
        Command::RingInfo { export_table, .. } => ring_info(ctx, export_table.as_ref()),
        Command::NullGens { target, pi, bound, caps, .. } => null_gens(ctx, *target, pi.as_deref(), *bound, caps),
        Command::Membership { target, poly, pi, .. } => membership(ctx, *target, poly, pi.as_deref()),
        Command::Factor { poly, .. } => factor(ctx, poly),
        Command::Decompose { poly, pi, .. } => decompose(ctx, poly.as_deref(), pi.as_deref()),
        Command::IntersectCheck { poly, sample, seed, caps, .. } => intersect(ctx, poly, *sample, *seed, caps),
        Command::Count { method, bound, caps, .. } => count(ctx, *method, *bound, caps),
        Command::Classify { .. } => classify(ctx),
        Command::Verify { bound, seed, caps, lifts, maximal_gens, .. } => {
            verify(ctx, *bound, *seed, caps, *lifts, maximal_gens.as_deref())
        }
    }
}

fn kind_json(kind: &RingKind) -> Value {
    match kind {
        RingKind::Zpn { p, n } => json!({ "type": "Zpn", "p": p, "n": n }),
        RingKind::ChainPoly { p, r, e, field_modulus } => {
            json!({ "type": "ChainPoly", "p": p, "r": r, "e": e, "field_modulus": field_modulus })
        }
        RingKind::Table => json!({ "type": "Table" }),
    }
}

fn ring_info(mut ctx: Ctx, export: Option<&PathBuf>) -> anyhow::Result<Outcome> {
    ctx.set("export_table", json!(export.map(|p| p.display().to_string())));
    if let Some(path) = export {
        save_table(path, &table_of(&ctx.ring))?;
    }
    let r = &ctx.ring;
    let reps = ctx.reps.clone().unwrap_or_else(|| r.reps().to_vec());
    let pi = pi_polynomial(r, Some(&reps))?;
    let residue = r.residue_field().field;
    let result = json!({
        "kind": kind_json(r.kind()),
        "order": r.order(),
        "q": r.q(),
        "e": r.e(),
        "is_field": r.is_field(),
        "residue_field": residue.describe(),
        "maximal_ideal": ctx.labels(r.maximal_ideal()),
        "maximal_ideal_generators": ctx.labels(&r.maximal_ideal_generators()),
        "maximal_generator": r.maximal_generator().map(|m| ctx.label(m)),
        "reps": ctx.labels(&reps),
        "pi": ctx.render(&pi),
        "valuations": (1..=r.e()).map(|k| json!({ "k": k, "size_of_m^k": r.power_size(k) })).collect::<Vec<_>>(),
    });
    Ok(ctx.finish(result, true))
}

/// `m^{e-k} * pi^k` written out without expanding `pi`.
fn factored_generators(ctx: &Ctx, ideal: &StructuredIdeal) -> Option<Vec<String>> {
    let (IdealForm::Power { pi, e, m_gen } | IdealForm::PowerPlus { pi, e, m_gen }) = ideal.form() else {
        return None;
    };
    let r = &ctx.ring;
    let px = r.poly_ring();
    let base = if *pi == px.x() { "x".to_string() } else { format!("({})", px.render(pi)) };
    let power = |k: u32| match k {
        0 => String::new(),
        1 => base.clone(),
        k => format!("{base}^{k}"),
    };
    let mut out = Vec::new();
    for k in (0..=*e).rev() {
        let c = r.pow(*m_gen, e - k);
        match (c == r.zero(), c == r.one(), k) {
            (true, _, _) => {}
            (_, true, _) => out.push(power(k)),
            (_, false, 0) => out.push(r.label(c)),
            _ => out.push(format!("{}*{}", r.label(c), power(k))),
        }
    }
    if let IdealForm::PowerPlus { .. } = ideal.form() {
        let q = e - 1;
        out.push(format!("{} - {}*{}", power(q), r.label(r.pow(*m_gen, q - 1)), base));
    }
    Some(out)
}

fn ideal_json(ctx: &Ctx, ideal: &StructuredIdeal) -> Value {
    let (pi, e, m) = match ideal.form() {
        IdealForm::Power { pi, e, m_gen } | IdealForm::PowerPlus { pi, e, m_gen } => {
            (ctx.render(pi), json!(e), ctx.label(*m_gen))
        }
        IdealForm::GeneratorList { .. } => (Value::Null, Value::Null, Value::Null),
    };
    json!({
        "form": ideal.form().tag(),
        "pi": pi,
        "e": e,
        "m_generator": m,
        "factored": factored_generators(ctx, ideal),
        "generators": ctx.renders(ideal.expanded_gens()),
    })
}

fn slice_json(ctx: &Ctx, s: &SliceReport) -> Value {
    json!({
        "target": s.target,
        "bound": s.bound,
        "candidates": num(s.candidates),
        "oracle_members": s.oracle_members,
        "structured_members": s.structured_members,
        "approximate": s.approximate,
        "mismatch_count": s.mismatch_count,
        "false_members": s.false_members,
        "mismatches": s.mismatches.iter().map(|m| json!({
            "poly": ctx.render(&m.poly),
            "structured": m.structured,
            "oracle": m.oracle,
        })).collect::<Vec<_>>(),
    })
}

fn target_of(t: TargetArg) -> Target {
    match t {
        TargetArg::Ring => Target::WholeRing,
        TargetArg::Maximal => Target::MaximalIdeal,
    }
}

fn structured_ideal(ctx: &Ctx, target: TargetArg, pi: Option<&str>) -> anyhow::Result<StructuredIdeal> {
    Ok(match target {
        TargetArg::Maximal => null_maximal_generators(&ctx.ring)?,
        TargetArg::Ring => {
            let pi = ctx.pi(pi)?;
            null_ring_generators(&ctx.ring, Some(&pi))?
        }
    })
}

fn caps_config(ctx: &mut Ctx, caps: &Caps) {
    ctx.set("slice_cap", json!(caps.slice_cap));
    ctx.set("pi_cap", json!(caps.pi_cap));
}

fn null_gens(
    mut ctx: Ctx,
    target: TargetArg,
    pi: Option<&str>,
    bound: Option<usize>,
    caps: &Caps,
) -> anyhow::Result<Outcome> {
    ctx.set("target", json!(target_of(target).name()));
    ctx.set("pi", json!(pi));
    ctx.set("bound", json!(bound));
    caps_config(&mut ctx, caps);
    let ideal = structured_ideal(&ctx, target, pi)?;
    let t = target_of(target);
    let r = &ctx.ring;
    let vanishing =
        ideal.expanded_gens().iter().map(|g| vanishes_on(r, g, &t, r.e())).collect::<Result<Vec<_>, _>>()?;
    let mut ok = vanishing.iter().all(Vanishing::holds);
    let slice = match bound {
        Some(d) => {
            let cap = caps.slice_cap as u128;
            let oracle = exhaustive_null_slice(r, &t, r.e(), d, cap, &ctx.exec)?;
            let structured = ideal_slice(r, &ideal, d, cap, &ctx.exec)?;
            let report = compare_slices(r, &t, &oracle, &structured);
            ok &= report.certified();
            Some(slice_json(&ctx, &report))
        }
        None => None,
    };
    let mut result = ideal_json(&ctx, &ideal);
    result["status"] = json!(if ok { "verified" } else { "failed" });
    result["slice"] = json!(slice);
    Ok(ctx.finish(result, ok))
}

fn membership(mut ctx: Ctx, target: TargetArg, poly: &str, pi: Option<&str>) -> anyhow::Result<Outcome> {
    ctx.set("target", json!(target_of(target).name()));
    ctx.set("poly", json!(poly));
    ctx.set("pi", json!(pi));
    let f = ctx.parse(poly)?;
    let ideal = structured_ideal(&ctx, target, pi)?;
    let r = &ctx.ring;
    let verdict = ideal_membership(r, &f, &ideal)?;
    let rule = MembershipRule::new(r, &ideal)?;
    let direct = vanishes_on(r, &f, &target_of(target), r.e())?;
    let ok = direct.holds() == verdict.member;
    let witness = match direct {
        Vanishing::Holds => Value::Null,
        Vanishing::Fails { point, value } => json!({ "point": ctx.label(point), "value": ctx.label(value) }),
    };
    let result = json!({
        "poly": ctx.render(&f),
        "ideal": ideal_json(&ctx, &ideal),
        "member": verdict.member,
        "expansion": ctx.renders(&verdict.expansion),
        "thresholds": rule.thresholds(),
        "violation": verdict.violation.map(|v| json!({
            "digit": v.digit,
            "coefficient": v.coefficient,
            "valuation": v.valuation,
            "required": v.required,
            "combined": v.combined,
        })),
        "evaluation_agrees": ok,
        "evaluation_witness": witness,
    });
    Ok(ctx.finish(result, ok))
}

fn trace_json(ctx: &Ctx, t: &TeichmullerTrace) -> Value {
    let steps: Vec<Value> = t
        .iterates
        .iter()
        .enumerate()
        .map(|(n, &a)| {
            let v = if n == 0 { Value::Null } else { json!(t.diff_valuations[n - 1]) };
            json!({ "step": n, "element": ctx.label(a), "diff_valuation": v })
        })
        .collect();
    json!({
        "start": ctx.label(t.start),
        "root": ctx.label(t.root),
        "stabilized_at": t.stabilized_at,
        "cauchy": t.cauchy_holds(ctx.ring.e()),
        "steps": steps,
    })
}

fn factorization_text(ctx: &Ctx, roots: &[Elem]) -> String {
    roots
        .iter()
        .map(|&d| if d == ctx.ring.zero() { "x".to_string() } else { format!("(x - {})", ctx.ring.label(d)) })
        .collect::<Vec<_>>()
        .join("*")
}

fn factor(mut ctx: Ctx, poly: &str) -> anyhow::Result<Outcome> {
    ctx.set("poly", json!(poly));
    let f = ctx.parse(poly)?;
    let r = &ctx.ring;
    let e = r.e() as usize;
    let (traces, roots, factorization, matches) = if is_pi_polynomial(r, &f) {
        let fac = factor_pi_polynomial(r, &f, &ctx.exec)?;
        let text = factorization_text(&ctx, &fac.roots);
        (fac.traces, fac.roots, Some(text), Some(fac.product == f))
    } else {
        let traces = r.reps().iter().map(|&c| teichmuller_lift(r, &f, c)).collect::<Result<Vec<_>, _>>()?;
        let roots = traces.iter().map(|t| t.root).collect();
        (traces, roots, None, None)
    };
    let ok = traces.iter().all(|t| t.cauchy_holds(r.e()) && t.stabilized_at < e.max(1));
    let result = json!({
        "poly": ctx.render(&f),
        "is_pi_polynomial": factorization.is_some(),
        "traces": traces.iter().map(|t| trace_json(&ctx, t)).collect::<Vec<_>>(),
        "roots": ctx.labels(&roots),
        "factorization": factorization,
        "product_matches": matches,
    });
    Ok(ctx.finish(result, ok))
}

fn decompose(mut ctx: Ctx, poly: Option<&str>, pi: Option<&str>) -> anyhow::Result<Outcome> {
    ctx.set("poly", json!(poly));
    ctx.set("pi", json!(pi));
    let r = &ctx.ring;
    if let Some(text) = poly {
        let f = ctx.parse(text)?;
        let pi = ctx.pi(pi)?;
        let d = decompose_zero_function(r, &f, &pi)?;
        let result = json!({
            "poly": ctx.render(&f),
            "pi": ctx.render(&pi),
            "parts": ctx.renders(&d.parts),
            "parts_vanish_on_m": d.part_checks.iter().map(Vanishing::holds).collect::<Vec<_>>(),
            "reconstructs": d.reconstructs,
            "certified": d.certified(),
        });
        let ok = d.certified();
        return Ok(ctx.finish(result, ok));
    }
    let d = primary_decomposition(r, None, ctx.reps.as_deref())?;
    let reps = ctx.reps.clone().unwrap_or_else(|| r.reps().to_vec());
    let mut ok = true;
    let witnesses: Vec<Value> = d
        .minimality_witnesses
        .iter()
        .map(|w| {
            let unit = r.is_unit(w.value);
            let vanish_elsewhere = reps
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != w.index)
                .all(|(_, &c)| vanishes_on(r, &w.h, &Target::Coset(c), r.e()).is_ok_and(|v| v.holds()));
            ok &= unit && vanish_elsewhere;
            json!({
                "index": w.index,
                "h": ctx.render(&w.h),
                "value": ctx.label(w.value),
                "unit": unit,
                "vanishes_on_other_cosets": vanish_elsewhere,
            })
        })
        .collect();
    let result = json!({
        "components": d.components.iter().map(|c| json!({
            "center": ctx.label(c.center),
            "generators": ctx.renders(c.generators()),
            "associated_prime": ctx.renders(&c.associated_prime_gens),
        })).collect::<Vec<_>>(),
        "minimality_witnesses": witnesses,
    });
    Ok(ctx.finish(result, ok))
}

fn intersect(mut ctx: Ctx, poly: &str, sample: Option<u64>, seed: u64, caps: &Caps) -> anyhow::Result<Outcome> {
    ctx.set("poly", json!(poly));
    ctx.set("sample", json!(sample));
    ctx.set("seed", json!(seed));
    caps_config(&mut ctx, caps);
    let f = ctx.parse(poly)?;
    let r = &ctx.ring;
    let mode = match sample {
        Some(count) => SampleMode::Sample { count, seed },
        None => SampleMode::Exhaustive { cap: caps.pi_cap as u128 },
    };
    let check = pi_intersection_check(r, &f, mode)?;
    let vanishes = vanishes_on(r, &f, &Target::WholeRing, r.e())?.holds();
    // exhaustively, divisibility by every pi is the same as vanishing on R
    let ok = sample.is_some() || check.holds == vanishes;
    let result = json!({
        "poly": ctx.render(&f),
        "mode": if sample.is_some() { "sample" } else { "exhaustive" },
        "holds": check.holds,
        "checked": check.checked,
        "total": num(check.total),
        "vanishes_on_ring": vanishes,
        "witness": check.witness.map(|w| json!({
            "reps": ctx.labels(&w.reps),
            "pi": ctx.render(&w.pi),
            "remainder": ctx.render(&w.remainder),
        })),
    });
    Ok(ctx.finish(result, ok))
}

fn count(mut ctx: Ctx, method: CountArg, bound: Option<usize>, caps: &Caps) -> anyhow::Result<Outcome> {
    let r = &ctx.ring;
    let d = bound.unwrap_or((r.e() * r.q()) as usize + 1);
    ctx.set("method", json!(format!("{method:?}").to_lowercase()));
    ctx.set("bound", json!(d));
    caps_config(&mut ctx, caps);
    let r = &ctx.ring;
    let normal = match method {
        CountArg::Exhaustive => None,
        _ => Some(normal_form_count(r)),
    };
    let exhaustive = match method {
        CountArg::NormalForm => None,
        _ => Some(count_polynomial_functions(
            r,
            CountMethod::Exhaustive { bound: Some(d), cap: caps.slice_cap as u128 },
            &ctx.exec,
        )),
    };
    let (normal, exhaustive) = match (normal, exhaustive) {
        (Some(Err(e)), None) | (None, Some(Err(e))) | (Some(Err(_)), Some(Err(e))) => return Err(e.into()),
        (n, x) => (n, x),
    };
    let show = |v: &Option<Result<u128, Error>>| match v {
        Some(Ok(n)) => num(*n),
        Some(Err(e)) => json!({ "skipped": e.name(), "message": e.to_string() }),
        None => Value::Null,
    };
    let agree = match (&normal, &exhaustive) {
        (Some(Ok(a)), Some(Ok(b))) => Some(a == b),
        _ => None,
    };
    let result = json!({
        "normal_form": show(&normal),
        "exhaustive": show(&exhaustive),
        "agree": agree,
    });
    Ok(ctx.finish(result, agree != Some(false)))
}

fn classify(ctx: Ctx) -> anyhow::Result<Outcome> {
    let c = classify_ring_nullideal(&ctx.ring)?;
    let result = json!({
        "is_field": c.is_field,
        "pi": ctx.render(&c.pi),
        "ring": {
            "nonzero": c.zfr_nonzero,
            "has_regular": c.zfr_has_regular,
            "principal": c.zfr_principal,
            "nonzero_witness": ctx.render(&c.zfr_nonzero_witness),
            "regular_witness": ctx.render(&c.zfr_regular_witness),
            "generator": c.principal_generators.as_ref().map(|g| ctx.render(&g.0)),
        },
        "maximal": {
            "nonzero": c.zfm_nonzero,
            "has_regular": c.zfm_has_regular,
            "principal": c.zfm_principal,
            "nonzero_witness": ctx.render(&c.zfm_nonzero_witness),
            "regular_witness": ctx.render(&c.zfm_regular_witness),
            "generator": c.principal_generators.as_ref().map(|g| ctx.render(&g.1)),
        },
        "annihilator_of_m": ctx.label(c.annihilator),
        "non_principal_witness": c.non_principal_witness.map(|(r, v)| json!({
            "point": ctx.label(r),
            "pi_value": ctx.label(v),
        })),
    });
    Ok(ctx.finish(result, true))
}

fn suite_json(ctx: &Ctx, report: &SuiteReport) -> Value {
    json!({
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| {
            let reason = match &c.status {
                nullideal_core::oracle::CheckStatus::Skipped { reason } => json!(reason),
                _ => Value::Null,
            };
            json!({
                "id": c.id,
                "name": c.name,
                "status": c.status.tag(),
                "reason": reason,
                "summary": c.summary,
                "witness": c.witness,
                "slices": c.slices.iter().map(|s| slice_json(ctx, s)).collect::<Vec<_>>(),
            })
        }).collect::<Vec<_>>(),
    })
}

fn verify(
    mut ctx: Ctx,
    bound: Option<usize>,
    seed: u64,
    caps: &Caps,
    lifts: u64,
    maximal_gens: Option<&str>,
) -> anyhow::Result<Outcome> {
    let maximal_gens =
        maximal_gens.map(|t| t.split(';').map(|g| ctx.parse(g)).collect::<anyhow::Result<Vec<_>>>()).transpose()?;
    let opts = SuiteOptions {
        bound,
        slice_cap: caps.slice_cap as u128,
        pi_cap: caps.pi_cap as u128,
        lift_count: lifts,
        seed,
        maximal_gens,
    };
    let report = verify_suite(&ctx.ring, &opts, &ctx.exec)?;
    ctx.set("bound", json!(report.bound));
    ctx.set("seed", json!(seed));
    caps_config(&mut ctx, caps);
    ctx.set("lifts", json!(lifts));
    ctx.set("maximal_gens", json!(opts.maximal_gens.as_ref().map(|g| ctx.renders(g))));
    let result = suite_json(&ctx, &report);
    let ok = report.passed();
    Ok(ctx.finish(result, ok))
}
