use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Assignment, Monomial, ParameterSpace, Poly, Scalar};

/// A unit of k[Q]: a nonzero rational times a Laurent monomial in the parameters.
///
/// These are the elements of the group Γ; every semicommutation factor and
/// every eigenvalue of an adjoint action is one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GammaMonomial {
    coeff: BigRational,
    exps: Vec<i64>,
}

impl GammaMonomial {
    /// Panics if `coeff` is zero.
    pub fn new(coeff: BigRational, exps: Vec<i64>) -> Self {
        assert!(!coeff.is_zero(), "Γ-monomials have nonzero coefficient");
        let mut g = GammaMonomial { coeff, exps };
        while g.exps.last() == Some(&0) {
            g.exps.pop();
        }
        g
    }

    pub fn one() -> Self {
        GammaMonomial { coeff: BigRational::one(), exps: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        GammaMonomial::new(c, Vec::new())
    }

    pub fn from_int(c: i64) -> Self {
        GammaMonomial::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `param^exp`.
    pub fn param(index: usize, exp: i64) -> Self {
        let mut exps = vec![0; index + 1];
        exps[index] = exp;
        GammaMonomial::new(BigRational::one(), exps)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> i64 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty() && self.coeff.is_one()
    }

    pub fn mul(&self, other: &GammaMonomial) -> GammaMonomial {
        let len = self.exps.len().max(other.exps.len());
        GammaMonomial::new(&self.coeff * &other.coeff, (0..len).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    pub fn inv(&self) -> GammaMonomial {
        GammaMonomial::new(self.coeff.recip(), self.exps.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, e: i64) -> GammaMonomial {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs() as usize;
        GammaMonomial::new(num_traits::pow(base.coeff.clone(), k), base.exps.iter().map(|x| x * k as i64).collect())
    }

    pub fn to_scalar(&self) -> Scalar {
        let pos = Monomial::from_exponents(self.exps.iter().map(|&e| e.max(0) as u32));
        let neg = Monomial::from_exponents(self.exps.iter().map(|&e| (-e).max(0) as u32));
        // numerator and denominator are coprime by construction
        let num = Poly::monomial(pos, self.coeff.numer().clone());
        let den = Poly::monomial(neg, self.coeff.denom().clone());
        Scalar::new(num, den).expect("nonzero denominator")
    }

    /// Recognizes a scalar of the form `r * monomial`, r rational, monomial Laurent.
    pub fn from_scalar(s: &Scalar) -> Option<GammaMonomial> {
        let (num, den) = (s.numerator(), s.denominator());
        if !num.is_monomial() || !den.is_monomial() {
            return None;
        }
        let (nm, nc) = num.lead();
        let (dm, dc) = den.lead();
        let len = nm.exponents().len().max(dm.exponents().len());
        let exps = (0..len).map(|i| nm.exponent(i) as i64 - dm.exponent(i) as i64).collect();
        Some(GammaMonomial::new(BigRational::new(nc.clone(), dc.clone()), exps))
    }

    /// Value at a point; never zero because assignments are nonzero.
    pub fn eval(&self, point: &Assignment) -> BigRational {
        let mut v = self.coeff.clone();
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                let x = &point.values()[i];
                let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
                v *= if e < 0 { p.recip() } else { p };
            }
        }
        v
    }

    pub fn format(&self, params: &ParameterSpace) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            let name = super::poly::var_name(params.names(), i);
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        let mono = parts.join("*");
        if mono.is_empty() {
            return format_rational(&self.coeff);
        }
        if self.coeff.is_one() {
            mono
        } else if (-&self.coeff).is_one() {
            format!("-{mono}")
        } else if self.coeff.is_negative() && self.coeff.denom().is_one() {
            format!("{}*{mono}", self.coeff.numer())
        } else {
            format!("{}*{mono}", format_rational(&self.coeff))
        }
    }

    pub fn display<'a>(&'a self, params: &'a ParameterSpace) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GammaMonomial, &'a ParameterSpace);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn space() -> ParameterSpace {
        ParameterSpace::new(["q", "c"]).unwrap()
    }

    #[test]
    fn as_gamma_examples() {
        let sp = space();
        let g = GammaMonomial::from_scalar(&sp.parse_scalar("3*q^2").unwrap()).unwrap();
        assert_eq!(g, GammaMonomial::new(BigRational::from_integer(3.into()), vec![2]));
        assert!(GammaMonomial::from_scalar(&sp.parse_scalar("q + 1").unwrap()).is_none());
        let g = GammaMonomial::from_scalar(&sp.parse_scalar("(q^2)/(q^5)").unwrap()).unwrap();
        assert_eq!(g, GammaMonomial::param(0, -3));
        assert!(GammaMonomial::from_scalar(&Scalar::zero()).is_none());
    }

    #[test]
    fn formatting_round_trips() {
        let sp = space();
        for text in ["q^-1", "-2/3*q*c^-2", "5", "-1", "-4*c"] {
            let g = sp.parse_gamma(text).unwrap();
            assert_eq!(g.format(&sp), text);
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in -20i64..20, d in 1i64..20, e0 in -4i64..5, e1 in -4i64..5) {
            prop_assume!(n != 0);
            let g = GammaMonomial::new(BigRational::new(n.into(), d.into()), vec![e0, e1]);
            prop_assert_eq!(GammaMonomial::from_scalar(&g.to_scalar()), Some(g.clone()));
            prop_assert_eq!(g.mul(&g.inv()), GammaMonomial::one());
            let sp = space();
            prop_assert_eq!(sp.parse_gamma(&g.format(&sp)).unwrap(), g);
        }
    }
}
