//! Finite commutative local rings.
//!
//! Three presentations are supported: `Z/p^n`, chain rings
//! `F_{p^r}[t]/(t^e)`, and rings given by explicit operation tables. All of
//! them are validated on construction and carry their residue structure:
//! the residue cardinality `q`, the nilpotency index `e` of the maximal ideal,
//! canonical coset representatives and the `m`-adic valuation of every
//! element.

mod chain;
mod table;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default cap on the ring order.
pub const DEFAULT_SIZE_CAP: u64 = 4096;

/// Identity of a constructed ring; elements and polynomials carry it so that
/// mixing rings is caught.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

impl RingId {
    fn fresh() -> Self {
        RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// Element index inside its ring. Arithmetic on bare indices goes through
/// the owning [`FiniteLocalRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

/// An element tagged with the ring it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub ring: RingId,
    pub elem: Elem,
}

/// Raw operation tables, all indices 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub order: u32,
    pub add: Vec<Vec<u32>>,
    pub mul: Vec<Vec<u32>>,
    pub zero: u32,
    pub one: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zpn {
        p: u64,
        n: u32,
    },
    /// `F_{p^r}[t]/(t^e)`; without a modulus the least irreducible is used.
    ChainPoly {
        p: u64,
        r: u32,
        e: u32,
        modulus: Option<Vec<u32>>,
    },
    Table(TableSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    Zpn { p: u32, n: u32 },
    ChainPoly { p: u32, r: u32, e: u32, field_modulus: Vec<u32> },
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingOptions {
    pub size_cap: u64,
}

impl Default for RingOptions {
    fn default() -> Self {
        RingOptions { size_cap: DEFAULT_SIZE_CAP }
    }
}

/// Ring axiom reported by a failed table validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    IndexRange,
    NontrivialOne,
    AdditiveIdentity,
    MultiplicativeIdentity,
    AdditiveInverse,
    AddCommutative,
    MulCommutative,
    AddAssociative,
    MulAssociative,
    Distributive,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::IndexRange => "index range",
            Axiom::NontrivialOne => "one != zero",
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::AddCommutative => "commutativity of +",
            Axiom::MulCommutative => "commutativity of *",
            Axiom::AddAssociative => "associativity of +",
            Axiom::MulAssociative => "associativity of *",
            Axiom::Distributive => "distributivity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    Unit,
    ZeroDivisor,
}

#[derive(Debug, Clone)]
enum Arith {
    Modular { n: u32 },
    Table { n: usize, add: Vec<u16>, mul: Vec<u16>, neg: Vec<u16> },
}

/// The residue field `R/m` together with the projection `R -> R/m`.
#[derive(Debug, Clone, Copy)]
pub struct ResidueField<'a> {
    pub field: &'a FiniteLocalRing,
    projection: &'a [Elem],
}

impl ResidueField<'_> {
    pub fn project(&self, a: Elem) -> Elem {
        self.projection[a.0 as usize]
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }
}

/// Residue data returned by [`FiniteLocalRing::residue_structure`].
#[derive(Debug, Clone)]
pub struct ResidueStructure<'a> {
    pub q: u32,
    pub e: u32,
    pub maximal_ideal: &'a [Elem],
    pub reps: &'a [Elem],
    pub residue_field: ResidueField<'a>,
}

#[derive(Debug, Clone)]
pub struct FiniteLocalRing {
    id: RingId,
    kind: RingKind,
    order: u32,
    arith: Arith,
    zero: Elem,
    one: Elem,
    unit: Vec<bool>,
    q: u32,
    e: u32,
    maximal_ideal: Vec<Elem>,
    reps: Vec<Elem>,
    coset: Vec<u32>,
    val: Vec<u32>,
    m_gen: Option<Elem>,
    residue: Option<Box<FiniteLocalRing>>,
    projection: Vec<Elem>,
}

impl FiniteLocalRing {
    pub fn new(spec: RingSpec) -> Result<Self> {
        Self::with_options(spec, RingOptions::default())
    }

    pub fn with_options(spec: RingSpec, options: RingOptions) -> Result<Self> {
        let cap = options.size_cap.min(u16::MAX as u64 + 1);
        let check_order = |order: Option<u64>| match order {
            Some(o) if o <= cap => Ok(o as u32),
            o => Err(Error::SizeLimit { order: o.unwrap_or(u64::MAX), cap }),
        };
        let (kind, arith, zero, one, order) = match spec {
            RingSpec::Zpn { p, n } => {
                if !chain::is_prime(p) {
                    return Err(Error::NotPrime { p });
                }
                if n == 0 {
                    return Err(Error::NotARing { axiom: Axiom::NontrivialOne, a: 0, b: 0, c: 0 });
                }
                let order = check_order(p.checked_pow(n))?;
                (RingKind::Zpn { p: p as u32, n }, Arith::Modular { n: order }, 0, 1, order)
            }
            RingSpec::ChainPoly { p, r, e, modulus } => {
                if !chain::is_prime(p) {
                    return Err(Error::NotPrime { p });
                }
                if r == 0 || e == 0 {
                    return Err(Error::NotARing { axiom: Axiom::NontrivialOne, a: r, b: e, c: 0 });
                }
                let order = check_order(p.checked_pow(r).and_then(|f| f.checked_pow(e)))?;
                let p = p as u32;
                let modulus = match modulus {
                    Some(m) => chain::check_modulus(&m, p, r)?,
                    None => chain::least_irreducible(p, r),
                };
                let t = chain::build_tables(p, r, e, &modulus);
                let arith = table_arith(order as usize, t.add, t.mul, 0);
                (RingKind::ChainPoly { p, r, e, field_modulus: modulus }, arith, 0, 1, order)
            }
            RingSpec::Table(spec) => {
                let order = check_order(Some(spec.order as u64))?;
                let (add, mul) = table::validate(&spec)?;
                let arith = table_arith(order as usize, add, mul, spec.zero as usize);
                (RingKind::Table, arith, spec.zero, spec.one, order)
            }
        };
        Self::from_arith(kind, arith, Elem(zero), Elem(one), order, options)
    }

    fn from_arith(
        kind: RingKind,
        arith: Arith,
        zero: Elem,
        one: Elem,
        order: u32,
        options: RingOptions,
    ) -> Result<Self> {
        let mut ring = FiniteLocalRing {
            id: RingId::fresh(),
            kind,
            order,
            arith,
            zero,
            one,
            unit: Vec::new(),
            q: 0,
            e: 0,
            maximal_ideal: Vec::new(),
            reps: Vec::new(),
            coset: Vec::new(),
            val: Vec::new(),
            m_gen: None,
            residue: None,
            projection: Vec::new(),
        };
        ring.unit = match ring.kind {
            RingKind::Zpn { p, .. } => (0..order).map(|a| a % p != 0).collect(),
            RingKind::ChainPoly { p, r, .. } => (0..order).map(|a| a % p.pow(r) != 0).collect(),
            RingKind::Table => (0..order).map(|a| ring.elements().any(|b| ring.mul(Elem(a), b) == one)).collect(),
        };
        ring.maximal_ideal = ring.elements().filter(|a| !ring.unit[a.0 as usize]).collect();
        if ring.maximal_ideal.is_empty() {
            return Err(Error::NotLocal { a: 0, b: 0 });
        }
        if ring.kind == RingKind::Table {
            for &a in &ring.maximal_ideal {
                for &b in &ring.maximal_ideal {
                    if ring.is_unit(ring.add(a, b)) {
                        return Err(Error::NotLocal { a: a.0, b: b.0 });
                    }
                }
            }
        }
        ring.q = order / ring.maximal_ideal.len() as u32;
        ring.compute_cosets();
        ring.compute_valuations();
        ring.m_gen = ring.find_principal_generator();
        if ring.e > 1 {
            let residue = ring.build_residue(options)?;
            ring.residue = Some(Box::new(residue));
        } else {
            ring.projection = ring.elements().collect();
        }
        Ok(ring)
    }

    fn compute_cosets(&mut self) {
        let mut coset = vec![u32::MAX; self.order as usize];
        let mut reps = Vec::with_capacity(self.q as usize);
        let assign = |start: Elem, ring: &Self, coset: &mut Vec<u32>, reps: &mut Vec<Elem>| {
            let id = reps.len() as u32;
            reps.push(start);
            for &m in &ring.maximal_ideal {
                coset[ring.add(start, m).0 as usize] = id;
            }
        };
        assign(self.zero, self, &mut coset, &mut reps);
        for a in self.elements() {
            if coset[a.0 as usize] == u32::MAX {
                assign(a, self, &mut coset, &mut reps);
            }
        }
        self.coset = coset;
        self.reps = reps;
    }

    /// Builds `m^k` level by level as additive closures of products.
    fn compute_valuations(&mut self) {
        let n = self.order as usize;
        let mut val = vec![0u32; n];
        let mut level: Vec<Elem> = self.maximal_ideal.clone();
        let mut k = 1u32;
        loop {
            for &a in &level {
                val[a.0 as usize] = k;
            }
            if level.len() == 1 {
                // m^k = {0}
                break;
            }
            let products: BTreeSet<Elem> = level
                .iter()
                .flat_map(|&a| self.maximal_ideal.iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.mul(a, b))
                .collect();
            level = self.additive_closure(products.into_iter().collect());
            k += 1;
        }
        self.e = k;
        self.val = val;
    }

    /// Additive subgroup generated by `gens`.
    pub(crate) fn additive_closure(&self, gens: Vec<Elem>) -> Vec<Elem> {
        let mut seen = vec![false; self.order as usize];
        seen[self.zero.0 as usize] = true;
        let mut out = vec![self.zero];
        let mut i = 0;
        while i < out.len() {
            let s = out[i];
            for &g in &gens {
                let t = self.add(s, g);
                if !seen[t.0 as usize] {
                    seen[t.0 as usize] = true;
                    out.push(t);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    fn find_principal_generator(&self) -> Option<Elem> {
        let size = self.maximal_ideal.len();
        self.maximal_ideal.iter().copied().find(|&m| {
            let ideal: BTreeSet<Elem> = self.elements().map(|r| self.mul(m, r)).collect();
            ideal.len() == size
        })
    }

    fn build_residue(&mut self, options: RingOptions) -> Result<FiniteLocalRing> {
        let (spec, projection): (RingSpec, Vec<Elem>) = match &self.kind {
            RingKind::Zpn { p, .. } => {
                (RingSpec::Zpn { p: *p as u64, n: 1 }, self.elements().map(|a| Elem(a.0 % p)).collect())
            }
            RingKind::ChainPoly { p, r, field_modulus, .. } => {
                let field = p.pow(*r);
                (
                    RingSpec::ChainPoly { p: *p as u64, r: *r, e: 1, modulus: Some(field_modulus.clone()) },
                    self.elements().map(|a| Elem(a.0 % field)).collect(),
                )
            }
            RingKind::Table => {
                let q = self.q as usize;
                let table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<u32>> {
                    (0..q)
                        .map(|i| (0..q).map(|j| self.coset[op(self.reps[i], self.reps[j]).0 as usize]).collect())
                        .collect()
                };
                let spec = TableSpec {
                    order: self.q,
                    add: table(&|a, b| self.add(a, b)),
                    mul: table(&|a, b| self.mul(a, b)),
                    zero: 0,
                    one: self.coset[self.one.0 as usize],
                };
                (RingSpec::Table(spec), self.coset.iter().map(|&c| Elem(c)).collect())
            }
        };
        self.projection = projection;
        FiniteLocalRing::with_options(spec, options)
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Residue-field cardinality `|R/m|`.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Least `e` with `m^e = 0`.
    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn maximal_ideal(&self) -> &[Elem] {
        &self.maximal_ideal
    }

    /// Canonical coset representatives: zero first, then the least-index
    /// element of each remaining coset in ascending index order.
    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    /// Index into [`reps`](Self::reps) of the coset containing `a`.
    pub fn coset_of(&self, a: Elem) -> usize {
        self.coset[a.0 as usize] as usize
    }

    /// All elements of the coset `c + m`, in index order.
    pub fn coset_elements(&self, c: Elem) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.maximal_ideal.iter().map(|&m| self.add(c, m)).collect();
        v.sort();
        v
    }

    /// Generator of a principal maximal ideal (`0` for a field), or `None`
    /// when no single element generates `m`.
    pub fn maximal_generator(&self) -> Option<Elem> {
        self.m_gen
    }

    /// A small ideal-generating set of `m`, chosen greedily in index order.
    pub fn maximal_ideal_generators(&self) -> Vec<Elem> {
        if let Some(m) = self.m_gen {
            return if m == self.zero { Vec::new() } else { vec![m] };
        }
        let mut gens = Vec::new();
        let mut covered = vec![false; self.order as usize];
        covered[self.zero.0 as usize] = true;
        for &m in &self.maximal_ideal {
            if covered[m.0 as usize] {
                continue;
            }
            gens.push(m);
            let products: Vec<Elem> =
                gens.iter().flat_map(|&g| self.elements().map(move |r| (g, r))).map(|(g, r)| self.mul(g, r)).collect();
            for a in self.additive_closure(products) {
                covered[a.0 as usize] = true;
            }
        }
        gens
    }

    pub fn residue_field(&self) -> ResidueField<'_> {
        ResidueField { field: self.residue.as_deref().unwrap_or(self), projection: &self.projection }
    }

    pub fn residue_structure(&self) -> ResidueStructure<'_> {
        ResidueStructure {
            q: self.q,
            e: self.e,
            maximal_ideal: &self.maximal_ideal,
            reps: &self.reps,
            residue_field: self.residue_field(),
        }
    }

    pub fn is_field(&self) -> bool {
        self.e == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone + '_ {
        (0..self.order).map(Elem)
    }

    pub fn element(&self, a: Elem) -> RingElement {
        debug_assert!(a.0 < self.order);
        RingElement { ring: self.id, elem: a }
    }

    /// Unwraps a tagged element after checking it belongs here.
    pub fn check(&self, a: RingElement) -> Result<Elem> {
        if a.ring != self.id || a.elem.0 >= self.order {
            return Err(Error::ForeignElement);
        }
        Ok(a.elem)
    }

    /// `m`-adic valuation with `val(0) = e`.
    pub fn m_valuation(&self, a: RingElement) -> Result<u32> {
        Ok(self.val(self.check(a)?))
    }

    pub fn val(&self, a: Elem) -> u32 {
        self.val[a.0 as usize]
    }

    /// Number of elements of `m^k` (with `m^0 = R`).
    pub fn power_size(&self, k: u32) -> usize {
        self.val.iter().filter(|&&v| v >= k).count()
    }

    pub fn element_classify(&self, a: RingElement) -> Result<ElementClass> {
        let a = self.check(a)?;
        Ok(if self.is_unit(a) { ElementClass::Unit } else { ElementClass::ZeroDivisor })
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.unit[a.0 as usize]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.arith {
            Arith::Modular { n } => {
                let s = a.0 + b.0;
                Elem(if s >= *n { s - n } else { s })
            }
            Arith::Table { n, add, .. } => Elem(add[a.0 as usize * n + b.0 as usize] as u32),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.arith {
            Arith::Modular { n } => Elem(((a.0 as u64 * b.0 as u64) % *n as u64) as u32),
            Arith::Table { n, mul, .. } => Elem(mul[a.0 as usize * n + b.0 as usize] as u32),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.arith {
            Arith::Modular { n } => Elem(if a.0 == 0 { 0 } else { n - a.0 }),
            Arith::Table { neg, .. } => Elem(neg[a.0 as usize] as u32),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        if !self.is_unit(a) {
            return None;
        }
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    /// The image of the integer `n` under `Z -> R`.
    pub fn from_int(&self, n: i64) -> Elem {
        if let Arith::Modular { n: m } = self.arith {
            return Elem(n.rem_euclid(m as i64) as u32);
        }
        // characteristic divides the order
        let k = n.rem_euclid(self.order as i64) as u64;
        let mut acc = self.zero;
        let mut base = self.one;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Named generators usable in polynomial text: `t` and `a` for chain rings.
    pub(crate) fn named_element(&self, name: &str) -> Option<Elem> {
        match (&self.kind, name) {
            (RingKind::ChainPoly { p, r, e, .. }, "t") => Some(if *e > 1 { Elem(p.pow(*r)) } else { self.zero }),
            (RingKind::ChainPoly { p, r, .. }, "a") if *r > 1 => Some(Elem(*p)),
            _ => None,
        }
    }

    /// Canonical text label of an element.
    pub fn label(&self, a: Elem) -> String {
        match &self.kind {
            RingKind::Zpn { .. } => a.0.to_string(),
            RingKind::ChainPoly { p, r, e, .. } => chain::label(a.0, *p, *r, *e),
            RingKind::Table if a == self.zero => String::from("0"),
            RingKind::Table if a == self.one => String::from("1"),
            RingKind::Table => alloc::format!("e{}", a.0),
        }
    }

    /// Short description, e.g. `Z/3^2` or `F4[t]/t^3`.
    pub fn describe(&self) -> String {
        match &self.kind {
            RingKind::Zpn { p, n } => alloc::format!("Z/{p}^{n}"),
            RingKind::ChainPoly { p, r, e, .. } => alloc::format!("F{}[t]/t^{e}", p.pow(*r)),
            RingKind::Table => alloc::format!("table(order {})", self.order),
        }
    }

    /// Whether the reps are pairwise non-congruent and cover every coset.
    pub fn check_reps(&self, reps: &[Elem]) -> Result<()> {
        if reps.len() != self.q as usize {
            return Err(Error::BadRepresentatives {
                reason: alloc::format!("expected {} representatives, got {}", self.q, reps.len()),
            });
        }
        let mut seen: Vec<Option<usize>> = vec![None; self.q as usize];
        for (i, &c) in reps.iter().enumerate() {
            if c.0 >= self.order {
                return Err(Error::ForeignElement);
            }
            let k = self.coset_of(c);
            if let Some(j) = seen[k] {
                return Err(Error::BadRepresentatives {
                    reason: alloc::format!("{} and {} are congruent mod m", self.label(reps[j]), self.label(c)),
                });
            }
            seen[k] = Some(i);
        }
        Ok(())
    }
}

fn table_arith(n: usize, add: Vec<u16>, mul: Vec<u16>, zero: usize) -> Arith {
    let neg = (0..n).map(|a| (0..n).find(|&b| add[a * n + b] as usize == zero).unwrap() as u16).collect();
    Arith::Table { n, add, mul, neg }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Parses `Z/p^n`, `Z/N`, `F{q}[t]/t^e`, `F{p^r}[t]/t^e` and `F{q}`.
    /// Table rings come from files and are resolved by the caller.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse { pos: 0, msg: alloc::format!("{msg}: `{s}`") };
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad("expected an integer"));
        let prime_pow = |t: &str| -> Result<(u64, u32)> {
            let t = t.trim().trim_start_matches('{').trim_end_matches('}');
            match t.split_once('^') {
                Some((p, k)) => {
                    let p = num(p)?;
                    if !chain::is_prime(p) {
                        return Err(Error::NotPrime { p });
                    }
                    Ok((p, num(k)? as u32))
                }
                None => {
                    let n = num(t)?;
                    chain::prime_power(n).ok_or(Error::NotPrime { p: n })
                }
            }
        };
        if let Some(rest) = s.strip_prefix("Z/") {
            let (p, n) = prime_pow(rest)?;
            return Ok(RingSpec::Zpn { p, n });
        }
        if let Some(rest) = s.strip_prefix('F') {
            let (field, e) = match rest.split_once("[t]") {
                Some((f, tail)) => {
                    let tail = tail.trim().strip_prefix('/').ok_or_else(|| bad("expected `/t^e`"))?;
                    let tail = tail.trim().trim_start_matches('(').trim_end_matches(')');
                    let e = match tail.strip_prefix("t^") {
                        Some(k) => num(k)? as u32,
                        None if tail == "t" => 1,
                        None => return Err(bad("expected `t^e`")),
                    };
                    (f, e)
                }
                None => (rest, 1),
            };
            let (p, r) = prime_pow(field)?;
            return Ok(RingSpec::ChainPoly { p, r, e, modulus: None });
        }
        Err(bad("unknown ring"))
    }
}

/// Table presentations of small rings that are not chain rings.
pub mod presets {
    use super::TableSpec;

    /// `F_2[s,u]/(s,u)^2`, with element index `c0 + 2 c1 + 4 c2` for
    /// `c0 + c1 s + c2 u`. Its maximal ideal `(s, u)` is not principal.
    pub fn f2_su_squared() -> TableSpec {
        let dec = |i: u32| [(i & 1), (i >> 1) & 1, (i >> 2) & 1];
        let enc = |v: [u32; 3]| v[0] | (v[1] << 1) | (v[2] << 2);
        let add = (0..8)
            .map(|a| {
                (0..8).map(|b| enc([dec(a)[0] ^ dec(b)[0], dec(a)[1] ^ dec(b)[1], dec(a)[2] ^ dec(b)[2]])).collect()
            })
            .collect();
        let mul = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (x, y) = (dec(a), dec(b));
                        enc([x[0] & y[0], (x[0] & y[1]) ^ (x[1] & y[0]), (x[0] & y[2]) ^ (x[2] & y[0])])
                    })
                    .collect()
            })
            .collect();
        TableSpec { order: 8, add, mul, zero: 0, one: 1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteLocalRing {
        FiniteLocalRing::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn z9_structure() {
        let r = ring("Z/3^2");
        assert_eq!((r.order(), r.q(), r.e()), (9, 3, 2));
        assert_eq!(r.maximal_ideal(), &[Elem(0), Elem(3), Elem(6)]);
        assert_eq!(r.reps(), &[Elem(0), Elem(1), Elem(2)]);
        assert_eq!(r.maximal_generator(), Some(Elem(3)));
        assert!(!r.is_field());
    }

    #[test]
    fn z8_structure() {
        let r = ring("Z/8");
        assert_eq!((r.q(), r.e()), (2, 3));
        assert_eq!(r.reps(), &[Elem(0), Elem(1)]);
        assert_eq!(r.m_valuation(r.element(Elem(4))).unwrap(), 2);
        assert_eq!(r.m_valuation(r.element(Elem(0))).unwrap(), 3);
        assert_eq!(r.m_valuation(r.element(Elem(1))).unwrap(), 0);
    }

    #[test]
    fn chain_ring_structure() {
        let r = ring("F2[t]/t^3");
        assert_eq!((r.order(), r.q(), r.e()), (8, 2, 3));
        let t = r.named_element("t").unwrap();
        assert_eq!(r.maximal_generator(), Some(t));
        let t2 = r.mul(t, t);
        assert_eq!(r.val(t2), 2);
        assert_eq!(r.label(t2), "[t^2]");
        assert_eq!(r.mul(t2, t), r.zero());

        let f4 = ring("F4");
        assert_eq!((f4.order(), f4.q(), f4.e()), (4, 4, 1));
        assert!(f4.is_field());
        let a = f4.named_element("a").unwrap();
        // a^2 = a + 1 under x^2 + x + 1
        assert_eq!(f4.mul(a, a), f4.add(a, f4.one()));
    }

    #[test]
    fn table_ring_f2su() {
        let r = FiniteLocalRing::new(RingSpec::Table(presets::f2_su_squared())).unwrap();
        assert_eq!((r.order(), r.q(), r.e()), (8, 2, 2));
        assert_eq!(r.maximal_ideal().len(), 4);
        assert_eq!(r.maximal_generator(), None);
        assert_eq!(r.maximal_ideal_generators(), vec![Elem(2), Elem(4)]);
        assert_eq!(r.residue_field().order(), 2);
    }

    #[test]
    fn element_classes() {
        let r = ring("Z/9");
        assert_eq!(r.element_classify(r.element(Elem(2))).unwrap(), ElementClass::Unit);
        assert_eq!(r.element_classify(r.element(Elem(3))).unwrap(), ElementClass::ZeroDivisor);
        assert!(ring("Z/5").is_field());
        assert!(!ring("Z/25").is_field());
        let other = ring("Z/9");
        assert_eq!(r.element_classify(other.element(Elem(2))), Err(Error::ForeignElement));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FiniteLocalRing::new(RingSpec::Zpn { p: 6, n: 1 }).unwrap_err(), Error::NotPrime { p: 6 });
        assert!(matches!(
            FiniteLocalRing::new(RingSpec::Zpn { p: 2, n: 13 }),
            Err(Error::SizeLimit { order: 8192, cap: 4096 })
        ));
        // Z/6 is a ring but not local: 2 and 3 are non-units with unit sum 5.
        let z6 = TableSpec {
            order: 6,
            add: (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect(),
            mul: (0..6).map(|a| (0..6).map(|b| (a * b) % 6).collect()).collect(),
            zero: 0,
            one: 1,
        };
        assert_eq!(FiniteLocalRing::new(RingSpec::Table(z6)).unwrap_err(), Error::NotLocal { a: 2, b: 3 });
        let mut broken = presets::f2_su_squared();
        broken.mul[2][4] = 1;
        assert!(matches!(
            FiniteLocalRing::new(RingSpec::Table(broken)),
            Err(Error::NotARing { axiom: Axiom::MulCommutative, .. })
        ));
    }

    #[test]
    fn ring_spec_grammar() {
        assert_eq!("Z/3^2".parse::<RingSpec>().unwrap(), RingSpec::Zpn { p: 3, n: 2 });
        assert_eq!("Z/125".parse::<RingSpec>().unwrap(), RingSpec::Zpn { p: 5, n: 3 });
        assert_eq!("F4[t]/t^3".parse::<RingSpec>().unwrap(), RingSpec::ChainPoly { p: 2, r: 2, e: 3, modulus: None });
        assert_eq!(
            "F{2^2}[t]/t^3".parse::<RingSpec>().unwrap(),
            RingSpec::ChainPoly { p: 2, r: 2, e: 3, modulus: None }
        );
        assert_eq!("F5".parse::<RingSpec>().unwrap(), RingSpec::ChainPoly { p: 5, r: 1, e: 1, modulus: None });
        assert!("Z/12".parse::<RingSpec>().is_err());
        assert!("Q".parse::<RingSpec>().is_err());
    }

    #[test]
    fn valuation_and_locality_invariants() {
        for s in ["Z/8", "Z/9", "Z/27", "F2[t]/t^3", "F4[t]/t^2", "Z/25"] {
            let r = ring(s);
            let nonunits: Vec<Elem> = r.elements().filter(|&a| !r.is_unit(a)).collect();
            for &a in &nonunits {
                for &b in &nonunits {
                    assert!(!r.is_unit(r.add(a, b)));
                }
            }
            for a in r.elements() {
                let zd = r.elements().any(|b| b != r.zero() && r.mul(a, b) == r.zero());
                assert!(r.is_unit(a) ^ zd, "{s}: {a:?}");
                for b in r.elements() {
                    let v = r.val(r.mul(a, b));
                    let bound = (r.val(a) + r.val(b)).min(r.e());
                    // chain rings: equality
                    assert_eq!(v, bound, "{s}");
                }
            }
            assert_eq!(r.q() as usize * r.maximal_ideal().len(), r.order() as usize);
            let mut covered: Vec<Elem> = r.reps().iter().flat_map(|&c| r.coset_elements(c)).collect();
            covered.sort();
            assert_eq!(covered, r.elements().collect::<Vec<_>>());
        }
    }
}
