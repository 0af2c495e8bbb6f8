//! Sparse multivariate polynomials over the integers.
//!
//! Terms are kept in strictly descending graded-lexicographic order with no
//! zero coefficients, so structural equality is polynomial equality. Exponent
//! vectors are trimmed of trailing zeros, which makes polynomials over
//! different prefixes of the same variable list directly compatible.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

/// A power product `v_0^{e_0} v_1^{e_1} ...` with nonnegative exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(index: usize, exp: u32) -> Self {
        let mut v: SmallVec<[u32; 4]> = SmallVec::from_elem(0, index + 1);
        v[index] = exp;
        let mut m = Monomial(v);
        m.trim();
        m
    }

    pub fn from_exponents<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        let mut m = Monomial(exps.into_iter().collect());
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        Monomial::from_exponents((0..len).map(|i| self.exponent(i) + other.exponent(i)))
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            if out[i] < e {
                return None;
            }
            out[i] -= e;
        }
        let mut m = Monomial(out);
        m.trim();
        Some(m)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().min(other.0.len());
        Monomial::from_exponents((0..len).map(|i| self.0[i].min(other.0[i])))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(index: usize) -> Self {
        Poly::monomial(Monomial::var(index, 1), BigInt::one())
    }

    /// Collects arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Poly { terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term under graded-lex order. Panics on zero.
    pub fn lead(&self) -> (&Monomial, &BigInt) {
        let (m, c) = &self.terms[0];
        (m, c)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.exponents().len()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // multiplication by a monomial preserves the term order
        Poly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_monomial() {
            let (m, c) = other.lead();
            return self.mul_term(m, c);
        }
        if self.is_monomial() {
            let (m, c) = self.lead();
            return other.mul_term(m, c);
        }
        Poly::from_terms(
            self.terms.iter().flat_map(|(ma, ca)| other.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))),
        )
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if let Some(c) = divisor.as_constant() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, d) in &self.terms {
                let (q, r) = d.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((m.clone(), q));
            }
            return Some(Poly { terms });
        }
        let (bm, bc) = divisor.lead();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.lead();
            let m = rm.div(bm)?;
            let (c, r) = rc.div_rem(bc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&divisor.mul_term(&m, &c));
            quot.push((m, c));
        }
        Some(Poly { terms: quot })
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// The monomial gcd of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Coefficients with respect to `var`, indexed by degree.
    pub fn to_univariate(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let mut exps: SmallVec<[u32; 4]> = m.exponents().into();
            if e > 0 {
                exps[var] = 0;
            }
            buckets[e as usize].push((Monomial::from_exponents(exps), c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_univariate(var: usize, coeffs: &[Poly]) -> Poly {
        Poly::from_terms(coeffs.iter().enumerate().flat_map(|(d, p)| {
            let shift = Monomial::var(var, d as u32);
            p.terms.iter().map(move |(m, c)| (m.mul(&shift), c.clone()))
        }))
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn lead_is_negative(&self) -> bool {
        !self.is_zero() && self.terms[0].1.is_negative()
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = format_monomial(m, names);
            if mono.is_empty() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                write!(out, "{abs}*{mono}").unwrap();
            }
        }
        out
    }
}

pub(crate) fn var_name(names: &[String], i: usize) -> String {
    names.get(i).cloned().unwrap_or_else(|| format!("v{i}"))
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(var_name(names, i)),
            _ => parts.push(format!("{}^{}", var_name(names, i), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(0)
    }

    fn int(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::from_exponents([2, 0]);
        let b = Monomial::from_exponents([0, 3]);
        let c = Monomial::from_exponents([1, 1]);
        assert!(b > a);
        assert!(a > c);
        assert_eq!(Monomial::from_exponents([1, 0, 0]), Monomial::var(0, 1));
    }

    #[test]
    fn exact_division() {
        let num = q().pow(2).sub(&int(1));
        let den = q().sub(&int(1));
        assert_eq!(num.div_exact(&den), Some(q().add(&int(1))));
        assert_eq!(q().div_exact(&q().add(&int(1))), None);
    }

    #[test]
    fn univariate_round_trip() {
        let c = Poly::var(1);
        let p = q().pow(2).mul(&c).add(&c.pow(3)).sub(&int(4));
        let coeffs = p.to_univariate(0);
        assert_eq!(coeffs.len(), 3);
        assert_eq!(Poly::from_univariate(0, &coeffs), p);
    }

    #[test]
    fn formatting() {
        let names = vec!["q".to_string(), "c".to_string()];
        let p = q().pow(2).scale(&BigInt::from(3)).sub(&Poly::var(1)).add(&int(1));
        assert_eq!(p.format(&names), "3*q^2 - c + 1");
    }
}
