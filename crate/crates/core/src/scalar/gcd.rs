//! Multivariate polynomial gcd over the integers.
//!
//! Content-and-primitive-part with a primitive pseudo-remainder sequence in
//! one main variable; coefficient gcds recurse on the remaining variables.
//! Monomial and constant inputs take closed-form shortcuts, which covers the
//! Laurent denominators that dominate in practice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Poly;

/// Greatest common divisor with positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if a == b {
        return normalize_sign(a.clone());
    }
    let int_gcd = a.content().gcd(&b.content());
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::constant(int_gcd);
    }
    let mono = a.monomial_content().gcd(&b.monomial_content());
    if a.is_monomial() || b.is_monomial() {
        return Poly::monomial(mono, int_gcd);
    }
    let a = strip(a);
    let b = strip(b);
    let core = gcd_primitive(&a, &b);
    normalize_sign(core.mul_term(&mono, &int_gcd))
}

/// Removes the integer content and the monomial content.
fn strip(p: &Poly) -> Poly {
    let c = p.content();
    let m = p.monomial_content();
    p.div_exact(&Poly::monomial(m, c)).expect("content divides")
}

/// gcd of inputs that have unit integer content and no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a == b || a == &b.neg() {
        return normalize_sign(a.clone());
    }
    let nvars = a.nvars().max(b.nvars());
    let Some(var) = (0..nvars).rev().find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0) else {
        return Poly::one();
    };
    let da = a.degree_in(var);
    let db = b.degree_in(var);
    if da == 0 {
        return gcd(a, &content_in(&b.to_univariate(var)));
    }
    if db == 0 {
        return gcd(&content_in(&a.to_univariate(var)), b);
    }
    let ua = a.to_univariate(var);
    let ub = b.to_univariate(var);
    let ca = content_in(&ua);
    let cb = content_in(&ub);
    let cont = gcd(&ca, &cb);
    let pa = divide_coeffs(&ua, &ca);
    let pb = divide_coeffs(&ub, &cb);
    let g = prs_gcd(pa, pb);
    normalize_sign(Poly::from_univariate(var, &g).mul(&cont))
}

/// gcd of the coefficients of a univariate polynomial.
fn content_in(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_coeffs(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    coeffs.iter().map(|c| c.div_exact(d).expect("content divides every coefficient")).collect()
}

fn trim(mut v: Vec<Poly>) -> Vec<Poly> {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
    v
}

fn primitive(v: Vec<Poly>) -> Vec<Poly> {
    let v = trim(v);
    if v.is_empty() {
        return v;
    }
    let c = content_in(&v);
    let mut out = divide_coeffs(&v, &c);
    if out.last().is_some_and(Poly::lead_is_negative) {
        out = out.iter().map(Poly::neg).collect();
    }
    out
}

/// Pseudo-remainder of `f` by `g` (both nonzero, univariate over a polynomial ring).
fn prem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let dg = g.len() - 1;
    let lc = &g[dg];
    let mut r: Vec<Poly> = f.to_vec();
    if r.len() < g.len() {
        return r;
    }
    let mut e = r.len() - g.len() + 1;
    while r.len() >= g.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        let mut next: Vec<Poly> = r.iter().map(|c| c.mul(lc)).collect();
        for (k, gk) in g.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&gk.mul(&lr));
        }
        r = trim(next);
        e -= 1;
    }
    if e > 0 {
        let factor = lc.pow(e as u32);
        r = r.iter().map(|c| c.mul(&factor)).collect();
    }
    r
}

/// gcd of two primitive univariate polynomials via the primitive PRS.
fn prs_gcd(a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    let (mut f, mut g) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    loop {
        if g.is_empty() {
            return primitive(f);
        }
        if g.len() == 1 {
            return vec![Poly::one()];
        }
        let r = primitive(prem(&f, &g));
        f = g;
        g = r;
    }
}

fn normalize_sign(p: Poly) -> Poly {
    if p.lead_is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Integer gcd helper used by scalar normalization.
pub(crate) fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let g = a.gcd(b);
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}
