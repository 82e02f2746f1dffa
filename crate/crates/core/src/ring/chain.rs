//! Chain rings `F_{p^r}[t]/(t^e)` and the prime-field polynomial helpers
//! needed to build them.
//!
//! An element is stored as its `e * r` digits over `F_p`: digit `i * r + k`
//! is the coefficient of `t^i a^k`, where `a` generates `F_{p^r}` over `F_p`.
//! The element index is the base-`p` number formed by those digits, so the
//! indices below `p^r` are exactly the residue-field constants.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `n = p^k` with `p` prime, if possible.
pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let (mut m, mut k) = (n, 0u32);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn trim(f: &mut Vec<u32>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Remainder of `f` modulo `g` over `F_p`; `g` must be nonzero.
fn rem_fp(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    trim(&mut r);
    let dg = g.len() - 1;
    let inv = inv_mod(g[dg], p);
    while r.len() > dg {
        let shift = r.len() - 1 - dg;
        let c = (*r.last().unwrap() as u64 * inv as u64 % p as u64) as u32;
        for (i, &gi) in g.iter().enumerate() {
            let sub = (c as u64 * gi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

/// Trial division against every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut c = code;
            for gi in g.iter_mut().take(d) {
                *gi = (c % p as u64) as u32;
                c /= p as u64;
            }
            g[d] = 1;
            if rem_fp(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Least monic irreducible of degree `r`, scanning lower coefficients as a
/// base-`p` counter with the `a^{r-1}` coefficient most significant.
pub(crate) fn least_irreducible(p: u32, r: u32) -> Vec<u32> {
    let r = r as usize;
    let count = (p as u64).pow(r as u32);
    for code in 0..count {
        let mut f = vec![0u32; r + 1];
        let mut c = code;
        for fi in f.iter_mut().take(r) {
            *fi = (c % p as u64) as u32;
            c /= p as u64;
        }
        f[r] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Validates a caller-supplied modulus and returns it made monic.
pub(crate) fn check_modulus(modulus: &[u32], p: u32, r: u32) -> Result<Vec<u32>> {
    let mut f: Vec<u32> = modulus.iter().map(|&c| c % p).collect();
    trim(&mut f);
    if f.len() != r as usize + 1 {
        return Err(Error::DegreeMismatch { expected: r as usize, found: f.len().saturating_sub(1) });
    }
    let inv = inv_mod(f[r as usize], p);
    for c in f.iter_mut() {
        *c = (*c as u64 * inv as u64 % p as u64) as u32;
    }
    if !is_irreducible(&f, p) {
        return Err(Error::NotIrreducible { p, modulus: f });
    }
    Ok(f)
}

/// Add and multiply tables of a chain ring, indexed by element index.
pub(crate) struct ChainTables {
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
}

pub(crate) fn build_tables(p: u32, r: u32, e: u32, modulus: &[u32]) -> ChainTables {
    let (r, e) = (r as usize, e as usize);
    let field = p.pow(r as u32) as usize;
    let order = field.pow(e as u32);
    let digits = |mut idx: usize, len: usize| {
        let mut d = vec![0u32; len];
        for di in d.iter_mut() {
            *di = (idx % p as usize) as u32;
            idx /= p as usize;
        }
        d
    };
    // F_{p^r} multiplication: polynomial product in `a` reduced by the modulus.
    let mut fmul = vec![0usize; field * field];
    for x in 0..field {
        let dx = digits(x, r);
        for y in 0..field {
            let dy = digits(y, r);
            let mut prod = vec![0u32; 2 * r];
            for (i, &a) in dx.iter().enumerate() {
                for (j, &b) in dy.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + a as u64 * b as u64) % p as u64) as u32;
                }
            }
            let red = rem_fp(&prod, modulus, p);
            fmul[x * field + y] = red.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize);
        }
    }
    let fadd = |x: usize, y: usize| {
        let (dx, dy) = (digits(x, r), digits(y, r));
        dx.iter().zip(&dy).rev().fold(0usize, |acc, (&a, &b)| acc * p as usize + ((a + b) % p) as usize)
    };
    let mut fadd_t = vec![0usize; field * field];
    for x in 0..field {
        for y in 0..field {
            fadd_t[x * field + y] = fadd(x, y);
        }
    }
    // t-coefficients of every element, each an F_{p^r} index.
    let tcoeffs: Vec<Vec<usize>> = (0..order)
        .map(|mut idx| {
            let mut c = vec![0usize; e];
            for ci in c.iter_mut() {
                *ci = idx % field;
                idx /= field;
            }
            c
        })
        .collect();
    let encode = |c: &[usize]| c.iter().rev().fold(0usize, |acc, &x| acc * field + x);
    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut buf = vec![0usize; e];
    for x in 0..order {
        for y in 0..order {
            for i in 0..e {
                buf[i] = fadd_t[tcoeffs[x][i] * field + tcoeffs[y][i]];
            }
            add[x * order + y] = encode(&buf) as u16;
            buf.iter_mut().for_each(|b| *b = 0);
            for i in 0..e {
                let a = tcoeffs[x][i];
                if a == 0 {
                    continue;
                }
                for j in 0..e - i {
                    let b = tcoeffs[y][j];
                    if b != 0 {
                        buf[i + j] = fadd_t[buf[i + j] * field + fmul[a * field + b]];
                    }
                }
            }
            mul[x * order + y] = encode(&buf) as u16;
        }
    }
    ChainTables { add, mul }
}

/// Renders an element as a polynomial in `t` whose coefficients are
/// polynomials in `a` over `F_p`.
pub(crate) fn label(idx: u32, p: u32, r: u32, e: u32) -> String {
    let field = p.pow(r);
    let mut rest = idx;
    let mut tco = Vec::with_capacity(e as usize);
    for _ in 0..e {
        tco.push(rest % field);
        rest /= field;
    }
    let field_label = |mut c: u32| {
        let mut terms: Vec<String> = Vec::new();
        for k in 0..r {
            let d = c % p;
            c /= p;
            if d == 0 {
                continue;
            }
            let mut s = String::new();
            match (k, d) {
                (0, d) => write!(s, "{d}").unwrap(),
                (1, 1) => s.push('a'),
                (1, d) => write!(s, "{d}*a").unwrap(),
                (k, 1) => write!(s, "a^{k}").unwrap(),
                (k, d) => write!(s, "{d}*a^{k}").unwrap(),
            }
            terms.push(s);
        }
        terms.reverse();
        (terms.join("+"), terms.len())
    };
    let mut terms: Vec<String> = Vec::new();
    for (i, &c) in tco.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let (cl, nterms) = field_label(c);
        let tpart = match i {
            0 => String::new(),
            1 => String::from("t"),
            i => alloc::format!("t^{i}"),
        };
        let term = if i == 0 {
            cl
        } else if cl == "1" {
            tpart
        } else if nterms > 1 {
            alloc::format!("({cl})*{tpart}")
        } else {
            alloc::format!("{cl}*{tpart}")
        };
        terms.push(term);
    }
    if terms.is_empty() {
        return String::from("0");
    }
    let body = terms.join("+");
    if idx < p {
        body
    } else {
        alloc::format!("[{body}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_prime_powers() {
        assert!(is_prime(2) && is_prime(5) && is_prime(127));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(125), Some((5, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn least_irreducibles_small_degrees() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(least_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over F_2
        assert!(matches!(check_modulus(&[1, 0, 1], 2, 2), Err(Error::NotIrreducible { .. })));
        assert_eq!(check_modulus(&[2, 0, 2], 3, 2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn labels() {
        assert_eq!(label(0, 2, 1, 3), "0");
        assert_eq!(label(1, 2, 1, 3), "1");
        assert_eq!(label(2, 2, 1, 3), "[t]");
        assert_eq!(label(5, 2, 1, 3), "[t^2+1]");
        // F_4[t]/(t^2): index 2 is a, index 3 is a+1, index 4 is t
        assert_eq!(label(3, 2, 2, 2), "[a+1]");
        assert_eq!(label(3 * 4 + 2, 2, 2, 2), "[(a+1)*t+a]");
    }
}
