//! The coefficient field k(Q): exact rational functions over the rationals
//! in a declared list of parameters.
//!
//! A [`Scalar`] is always kept in canonical form, numerator and denominator
//! coprime in Z[params] with the denominator's leading coefficient positive,
//! so derived equality and hashing agree with field equality.

mod gamma;
mod gcd;
pub mod parse;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use gamma::GammaMonomial;
pub use gcd::gcd as poly_gcd;
pub use poly::{Monomial, Poly};

/// Ordered, duplicate-free parameter names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct ParameterSpace {
    names: Vec<String>,
}

impl ParameterSpace {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !parse::is_identifier(name) {
                return Err(Error::InvalidParameters(format!("`{name}` is not an identifier")));
            }
            if parse::is_generator_name(name) {
                return Err(Error::InvalidParameters(format!("`{name}` collides with generator names x1, x2, ...")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidParameters(format!("duplicate parameter `{name}`")));
            }
        }
        Ok(ParameterSpace { names })
    }

    pub fn empty() -> Self {
        ParameterSpace::default()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The parameter `name` as a scalar.
    pub fn param(&self, name: &str) -> Result<Scalar> {
        self.index_of(name).map(Scalar::param).ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }

    /// Parses a scalar in the text grammar (`(q^2 - 1)/(q - 1)`).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        parse::parse_scalar(text, self)
    }

    pub fn parse_gamma(&self, text: &str) -> Result<GammaMonomial> {
        let s = self.parse_scalar(text)?;
        GammaMonomial::from_scalar(&s).ok_or_else(|| Error::NotGamma(text.to_string()))
    }
}

impl TryFrom<Vec<String>> for ParameterSpace {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        ParameterSpace::new(v)
    }
}

impl From<ParameterSpace> for Vec<String> {
    fn from(p: ParameterSpace) -> Self {
        p.names
    }
}

/// An element of k(Q) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { num: Poly::constant(BigInt::from(n)), den: Poly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Scalar { num: Poly::constant(r.numer().clone()), den: Poly::constant(r.denom().clone()) }.sign_fixed()
    }

    /// The parameter with the given index.
    pub fn param(index: usize) -> Self {
        Scalar { num: Poly::var(index), den: Poly::one() }
    }

    /// Canonical quotient `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(d) = den.as_constant() {
            let g = gcd::int_gcd(&num.content(), &d);
            let num = num.div_exact(&Poly::constant(g.clone())).expect("content");
            return Scalar { num, den: Poly::constant(d / g) }.sign_fixed();
        }
        let g = gcd::gcd(&num, &den);
        if g.is_one() {
            return Scalar { num, den }.sign_fixed();
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        Scalar { num, den }.sign_fixed()
    }

    fn sign_fixed(self) -> Self {
        if self.den.lead_is_negative() {
            Scalar { num: self.num.neg(), den: self.den.neg() }
        } else {
            self
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        let g = gcd::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Scalar { num, den: self.den.mul(&other.den) }.normalized_zero().sign_fixed();
        }
        let b1 = self.den.div_exact(&g).expect("gcd");
        let d1 = other.den.div_exact(&g).expect("gcd");
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        let den = b1.mul(&other.den);
        if num.is_zero() {
            return Scalar::zero();
        }
        let g2 = gcd::gcd(&num, &g);
        if g2.is_one() {
            return Scalar { num, den }.sign_fixed();
        }
        Scalar { num: num.div_exact(&g2).expect("gcd"), den: den.div_exact(&g2).expect("gcd") }.sign_fixed()
    }

    fn normalized_zero(self) -> Self {
        if self.num.is_zero() {
            Scalar::zero()
        } else {
            self
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g1 = gcd::gcd(&self.num, &other.den);
        let g2 = gcd::gcd(&other.num, &self.den);
        let (a, d) = cancel(&self.num, &other.den, &g1);
        let (c, b) = cancel(&other.num, &self.den, &g2);
        Scalar { num: a.mul(&c), den: b.mul(&d) }.sign_fixed()
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar { num: self.den.clone(), den: self.num.clone() }.sign_fixed())
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs() as u32;
        Ok(Scalar { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Evaluates at a point; fails if the canonical denominator vanishes there.
    pub fn eval(&self, point: &Assignment) -> Result<BigRational> {
        let values = point.values();
        let d = self.den.eval(values);
        if d.is_zero() {
            return Err(Error::InadmissiblePoint(format!(
                "denominator {} vanishes",
                self.den.format(point.space().names())
            )));
        }
        Ok(self.num.eval(values) / d)
    }

    /// Formats in the scalar text grammar.
    pub fn format(&self, params: &ParameterSpace) -> String {
        let names = params.names();
        let num = self.num.format(names);
        if self.den.is_one() {
            return num;
        }
        let num = if self.num.len() > 1 { format!("({num})") } else { num };
        let den = self.den.format(names);
        let den_atomic = self.den.len() == 1 && !den.contains('*') && !den.starts_with('-');
        if den_atomic {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }

    /// Wraps in parentheses when the formatted text is not a single factor.
    pub fn format_factor(&self, params: &ParameterSpace) -> String {
        let s = self.format(params);
        if self.den.is_one() && self.num.len() == 1 && !s.starts_with('-') {
            s
        } else if s.contains(' ') || s.contains('/') || s.starts_with('-') {
            format!("({s})")
        } else {
            s
        }
    }

    /// True if the numerator's leading coefficient is negative.
    pub fn is_negative_leading(&self) -> bool {
        self.num.lead_is_negative()
    }

    pub fn display<'a>(&'a self, params: &'a ParameterSpace) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Scalar, &'a ParameterSpace);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, params)
    }
}

fn cancel(a: &Poly, b: &Poly, g: &Poly) -> (Poly, Poly) {
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(g).expect("gcd"), b.div_exact(g).expect("gcd"))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// A point in parameter space: every parameter mapped to a nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    space: ParameterSpace,
    values: Vec<BigRational>,
}

impl Assignment {
    pub fn new<'a, I>(space: &ParameterSpace, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, BigRational)>,
    {
        let mut values: Vec<Option<BigRational>> = vec![None; space.len()];
        for (name, v) in pairs {
            let i = space.index_of(name).ok_or_else(|| Error::UnknownParameter(name.to_string()))?;
            if v.is_zero() {
                return Err(Error::InadmissiblePoint(format!("parameter {name} assigned 0")));
            }
            values[i] = Some(v);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::InadmissiblePoint(format!("parameter {} is unassigned", space.names()[i])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Assignment { space: space.clone(), values })
    }

    /// Convenience constructor from integer values.
    pub fn from_ints(space: &ParameterSpace, pairs: &[(&str, i64)]) -> Result<Self> {
        Assignment::new(space, pairs.iter().map(|&(n, v)| (n, BigRational::from_integer(BigInt::from(v)))))
    }

    /// Parses `name=value` items; values are integers or fractions `a/b`.
    pub fn parse(space: &ParameterSpace, items: &[String]) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in items {
            let (name, value) = item.split_once('=').ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected name=value, got `{item}`"),
            })?;
            let v = parse::parse_rational(value.trim()).ok_or_else(|| Error::Parse {
                line: 1,
                column: name.len() + 2,
                message: format!("`{value}` is not a rational number"),
            })?;
            pairs.push((name.trim().to_string(), v));
        }
        Assignment::new(space, pairs.iter().map(|(n, v)| (n.as_str(), v.clone())))
    }

    pub fn space(&self) -> &ParameterSpace {
        &self.space
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, name: &str) -> Option<&BigRational> {
        self.space.index_of(name).map(|i| &self.values[i])
    }
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", -r.numer(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space() -> ParameterSpace {
        ParameterSpace::new(["q", "c"]).unwrap()
    }

    fn s(text: &str) -> Scalar {
        space().parse_scalar(text).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let q = Poly::var(0);
        let one = Poly::one();
        let qm1 = q.sub(&one);
        assert_eq!(Scalar::new(qm1.clone(), qm1.clone()).unwrap(), Scalar::one());
        assert_eq!(Scalar::new(Poly::zero(), q.clone()).unwrap(), Scalar::zero());
        // (q+1)(q-1) = q^2 - 1
        let q2m1 = q.mul(&q).sub(&one);
        assert_eq!(q.add(&one).mul(&qm1), q2m1);
        assert_eq!(Scalar::new(q2m1, qm1).unwrap(), s("q + 1"));
        assert_eq!(Scalar::new(q, Poly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        assert!(s("q").add(&s("-q")).is_zero());
        assert_eq!(s("q").mul(&s("1/q")), Scalar::one());
        assert_eq!(s("q^2 - 1").div(&s("q + 1")).unwrap(), s("q - 1"));
        assert_eq!(s("q").div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = s("(2*q)/(-4*c)");
        assert_eq!(a.format(&space()), "-q/(2*c)");
        assert_eq!(a.denominator().lead().1, &BigInt::from(2));
        assert_eq!(s("6/4"), s("3/2"));
    }

    #[test]
    fn specialize_examples() {
        let sp = ParameterSpace::new(["q"]).unwrap();
        let at = |v| Assignment::from_ints(&sp, &[("q", v)]).unwrap();
        let p = |t: &str| sp.parse_scalar(t).unwrap();
        assert_eq!(p("q + 1").eval(&at(2)).unwrap(), BigRational::from_integer(3.into()));
        assert!(matches!(p("1/(q - 1)").eval(&at(1)), Err(Error::InadmissiblePoint(_))));
        assert_eq!(p("(q^2 - 1)/(q - 1)").eval(&at(1)).unwrap(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn assignment_requires_every_parameter() {
        let sp = space();
        assert!(Assignment::from_ints(&sp, &[("q", 2)]).is_err());
        assert!(Assignment::from_ints(&sp, &[("q", 2), ("c", 0)]).is_err());
        let a = Assignment::parse(&sp, &["q=2".into(), "c=-3/4".into()]).unwrap();
        assert_eq!(a.get("c").unwrap(), &BigRational::new((-3).into(), 4.into()));
    }

    #[test]
    fn parameter_space_rejects_bad_names() {
        assert!(ParameterSpace::new(["q", "q"]).is_err());
        assert!(ParameterSpace::new(["x1"]).is_err());
        assert!(ParameterSpace::new(["2q"]).is_err());
        assert!(ParameterSpace::new(["q_1_2", "p_1_2", "c"]).is_ok());
    }
}
