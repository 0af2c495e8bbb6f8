use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::parse::{self, Expr};
use crate::scalar::{Assignment, GammaMonomial, ParameterSpace, Scalar};

/// Exponent vector of a PBW monomial `x_1^{m_1} ... x_n^{m_n}`.
pub type Exponents = Vec<i32>;

/// A sparse element in PBW normal form.
///
/// Keys compare lexicographically with the first generator most significant,
/// which is the filtration order; the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    n: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Element::constant(n, Scalar::one())
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Element::monomial(vec![0; n], c)
    }

    pub fn monomial(exps: Exponents, c: Scalar) -> Self {
        let n = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Element { n, terms }
    }

    /// The generator `x_{i+1}` (0-based index `i`) raised to `exp`.
    pub fn generator_pow(n: usize, i: usize, exp: i32) -> Self {
        let mut e = vec![0; n];
        e[i] = exp;
        Element::monomial(e, Scalar::one())
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Element::generator_pow(n, i, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Scalar)>>(n: usize, terms: I) -> Self {
        let mut e = Element::zero(n);
        for (m, c) in terms {
            assert_eq!(m.len(), n, "exponent vector length");
            e.add_term(m, &c);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lex-maximal term.
    pub fn leading(&self) -> Option<(&Exponents, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: Exponents, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), &d.mul(c));
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.n);
        }
        Element { n: self.n, terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect() }
    }

    pub fn scale_gamma(&self, g: &GammaMonomial) -> Element {
        self.scale(&g.to_scalar())
    }

    /// Lowest generator index carrying a nonzero exponent, if any.
    pub fn min_generator(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.iter().position(|&e| e != 0)).min()
    }

    /// True if every term only involves generators with index `> j`.
    pub fn supported_above(&self, j: usize) -> bool {
        self.terms.keys().all(|m| m[..=j].iter().all(|&e| e == 0))
    }

    pub fn involves(&self, j: usize) -> bool {
        self.terms.keys().any(|m| m[j] != 0)
    }

    /// The filtration degree in the first `window` generators: the lex-maximum
    /// of the truncated exponent vectors, which is `min { m : a ∈ R(m) }`.
    pub fn degree(&self, window: usize) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut best: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            if m[..window].iter().any(|&e| e < 0) {
                return Err(Error::Malformed("negative exponent inside the degree window".to_string()));
            }
            let t: Vec<u32> = m[..window].iter().map(|&e| e as u32).collect();
            if best.as_ref().is_none_or(|b| t > *b) {
                best = Some(t);
            }
        }
        Ok(best.expect("nonzero element"))
    }

    pub fn specialize(&self, point: &Assignment) -> Result<Element> {
        let mut out = Element::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &Scalar::from_rational(&c.eval(point)?));
        }
        Ok(out)
    }

    /// Formats as `c*x1^a*x3^-1 + ...` in descending filtration order.
    pub fn format(&self, params: &ParameterSpace) -> String {
        self.format_with(params, None)
    }

    /// Like [`Element::format`] with `names[i]` for generator `i`. The
    /// result is for display; [`Element::parse`] only reads `x1, x2, ...`.
    pub fn format_named(&self, params: &ParameterSpace, names: &[String]) -> String {
        self.format_with(params, Some(names))
    }

    fn format_with(&self, params: &ParameterSpace, names: Option<&[String]>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative_leading();
            let c = if negative { c.neg() } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = match names {
                Some(names) => format_monomial_named(m, names),
                None => format_monomial(m),
            };
            if mono.is_empty() {
                let s = c.format(params);
                if (k > 0 || negative) && (s.contains(' ')) {
                    out.push_str(&format!("({s})"));
                } else {
                    out.push_str(&s);
                }
            } else if c.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&c.format_factor(params));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Parses the element text format. Products must already be in PBW order.
    pub fn parse(text: &str, params: &ParameterSpace, n: usize) -> Result<Element> {
        let e = parse::parse_expr(text)?;
        eval_element(&e, text, params, n)
    }
}

pub(crate) fn format_monomial(m: &[i32]) -> String {
    let names: Vec<String> = (1..=m.len()).map(|i| format!("x{i}")).collect();
    format_monomial_named(m, &names)
}

fn format_monomial_named(m: &[i32], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

fn as_scalar(e: &Element) -> Option<Scalar> {
    match e.terms.len() {
        0 => Some(Scalar::zero()),
        1 => {
            let (m, c) = e.leading().expect("one term");
            m.iter().all(|&x| x == 0).then(|| c.clone())
        }
        _ => None,
    }
}

fn eval_element(e: &Expr, text: &str, params: &ParameterSpace, n: usize) -> Result<Element> {
    let ev = |x: &Expr| eval_element(x, text, params, n);
    Ok(match e {
        Expr::Int(_) => Element::constant(n, parse::eval_scalar(e, text, params)?),
        Expr::Ident(name, at) => {
            if let Some(k) = parse::generator_index(name) {
                if k > n {
                    return Err(parse::error_at(text, *at, format!("generator {name} out of range (n = {n})")));
                }
                Element::generator(n, k - 1)
            } else {
                Element::constant(n, parse::eval_scalar(e, text, params)?)
            }
        }
        Expr::Neg(a) => ev(a)?.neg(),
        Expr::Add(a, b) => ev(a)?.add(&ev(b)?),
        Expr::Sub(a, b) => ev(a)?.sub(&ev(b)?),
        Expr::Mul(a, b) => {
            let (a, b) = (ev(a)?, ev(b)?);
            let mut out = Element::zero(n);
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    let last = ma.iter().rposition(|&x| x != 0);
                    let first = mb.iter().position(|&x| x != 0);
                    if let (Some(l), Some(f)) = (last, first) {
                        if l > f {
                            return Err(parse::error_at(
                                text,
                                0,
                                format!("product x{} * x{} is not in PBW order", l + 1, f + 1),
                            ));
                        }
                    }
                    let m: Exponents = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                    out.add_term(m, &ca.mul(cb));
                }
            }
            out
        }
        Expr::Div(a, b, at) => {
            let denom = as_scalar(&ev(b)?).ok_or_else(|| parse::error_at(text, *at, "can only divide by a scalar"))?;
            let inv = denom.inv().map_err(|_| parse::error_at(text, *at, "division by zero"))?;
            ev(a)?.scale(&inv)
        }
        Expr::Pow(a, k, at) => {
            let base = ev(a)?;
            if let Some(s) = as_scalar(&base) {
                let p = s.pow(*k).map_err(|_| parse::error_at(text, *at, "zero raised to a negative power"))?;
                Element::constant(n, p)
            } else {
                let (m, c) = base.leading().expect("nonzero");
                let nonzero: Vec<usize> = (0..n).filter(|&i| m[i] != 0).collect();
                if base.len() != 1 || !c.is_one() || nonzero.len() != 1 || m[nonzero[0]] != 1 {
                    return Err(parse::error_at(text, *at, "powers apply to single generators or scalars"));
                }
                let k32 = i32::try_from(*k).map_err(|_| parse::error_at(text, *at, "exponent too large"))?;
                Element::generator_pow(n, nonzero[0], k32)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp() -> ParameterSpace {
        ParameterSpace::new(["c"]).unwrap()
    }

    #[test]
    fn parse_and_format() {
        let p = sp();
        let e = Element::parse("x1 - c/(c - 1)*x2^-1", &p, 2).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.format(&p), "x1 - (c/(c - 1))*x2^-1");
        assert_eq!(Element::parse(&e.format(&p), &p, 2).unwrap(), e);
        let f = Element::parse("c*x1*x2 - c", &p, 2).unwrap();
        assert_eq!(f.format(&p), "c*x1*x2 - c");
        assert_eq!(Element::parse("(1 - c)*x1 + (c - 1)", &p, 2).unwrap().format(&p), "-(c - 1)*x1 + (c - 1)");
    }

    #[test]
    fn parse_rejects_unordered_products() {
        let p = sp();
        assert!(Element::parse("x2*x1", &p, 2).is_err());
        assert!(Element::parse("x3", &p, 2).is_err());
        assert!(Element::parse("(x1 + x2)^2", &p, 2).is_err());
        assert!(Element::parse("x1 / x2", &p, 2).is_err());
    }

    #[test]
    fn degree_examples() {
        let p = sp();
        let a = Element::parse("x1*x2 + x2^5", &p, 2).unwrap();
        assert_eq!(a.degree(2).unwrap(), vec![1, 1]);
        let b = Element::parse("x2^3", &p, 2).unwrap();
        assert_eq!(b.degree(2).unwrap(), vec![0, 3]);
        assert_eq!(Element::zero(2).degree(2), Err(Error::ZeroElement));
    }
}
