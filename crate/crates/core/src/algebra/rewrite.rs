use std::collections::BTreeMap;
use std::fmt;

use super::element::Element;
use super::Presentation;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A coefficient times a product of generators and inverse generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    letters: Vec<(usize, i32)>,
    coeff: Scalar,
}

impl Word {
    pub fn new(coeff: Scalar, letters: Vec<(usize, i32)>) -> Self {
        Word { letters, coeff }
    }

    /// A word with coefficient 1; every letter is a generator index.
    pub fn of(gens: &[usize]) -> Self {
        Word::new(Scalar::one(), gens.iter().map(|&g| (g, 1)).collect())
    }

    /// The ordered monomial `x^m` spelled out letter by letter.
    pub fn from_monomial(m: &[i32]) -> Self {
        Word::new(Scalar::one(), monomial_letters(m))
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    pub fn coeff(&self) -> &Scalar {
        &self.coeff
    }

    pub fn check(&self, pres: &Presentation) -> Result<()> {
        for &(g, e) in &self.letters {
            if g >= pres.n() {
                return Err(Error::Malformed(format!("letter x{} out of range", g + 1)));
            }
            match e {
                1 => {}
                -1 if pres.is_invertible(g) => {}
                -1 => return Err(Error::Malformed(format!("x{} is not invertible", g + 1))),
                _ => return Err(Error::Malformed(format!("letter exponent {e} is not ±1"))),
            }
        }
        Ok(())
    }
}

fn monomial_letters(m: &[i32]) -> Vec<(usize, i32)> {
    let mut out = Vec::new();
    for (g, &e) in m.iter().enumerate() {
        for _ in 0..e.unsigned_abs() {
            out.push((g, e.signum()));
        }
    }
    out
}

type Letters = Vec<(usize, i32)>;

fn reducible(w: &[(usize, i32)]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&p| {
            let ((a, e), (b, f)) = (w[p], w[p + 1]);
            a > b || (a == b && e == -f)
        })
        .collect()
}

/// One rewriting step at position `pos`, as a sum of words.
fn rewrite_at(pres: &Presentation, w: &[(usize, i32)], pos: usize) -> Result<Vec<(Letters, Scalar)>> {
    let ((k, e), (l, f)) = (w[pos], w[pos + 1]);
    let splice = |middle: Vec<(usize, i32)>| {
        let mut v = w[..pos].to_vec();
        v.extend(middle);
        v.extend_from_slice(&w[pos + 2..]);
        v
    };
    if k == l {
        return Ok(vec![(splice(Vec::new()), Scalar::one())]);
    }
    let q = pres.q(l, k);
    let tail = pres.relation(l, k);
    let Some(r) = tail else {
        let c = q.pow(-(e as i64) * (f as i64)).to_scalar();
        return Ok(vec![(splice(vec![(l, f), (k, e)]), c)]);
    };
    let mut out = Vec::new();
    match (e, f) {
        (1, 1) => {
            let qi = q.inv().to_scalar();
            out.push((splice(vec![(l, 1), (k, 1)]), qi.clone()));
            for (m, c) in r.terms() {
                out.push((splice(monomial_letters(m)), c.mul(&qi).neg()));
            }
        }
        (-1, 1) => {
            out.push((splice(vec![(l, 1), (k, -1)]), q.to_scalar()));
            for (m, c) in r.terms() {
                let mut mid = vec![(k, -1)];
                mid.extend(monomial_letters(m));
                mid.push((k, -1));
                out.push((splice(mid), c.clone()));
            }
        }
        _ => {
            return Err(Error::StageShapeViolation(format!(
                "x{} has a nonzero tail with x{} but is inverted",
                l + 1,
                k + 1
            )))
        }
    }
    Ok(out)
}

fn collect(w: &[(usize, i32)], n: usize) -> Vec<i32> {
    let mut m = vec![0; n];
    for &(g, e) in w {
        m[g] += e;
    }
    m
}

/// Rewrites until no out-of-order or cancelling pair remains. Within the
/// current word, `choose(k)` selects one of the `k` reducible positions.
pub(crate) fn reduce(pres: &Presentation, w: &Word, choose: &mut dyn FnMut(usize) -> usize) -> Result<Element> {
    w.check(pres)?;
    reduce_steps(pres, w, None, choose)
}

fn reduce_steps(
    pres: &Presentation,
    w: &Word,
    mut first: Option<usize>,
    choose: &mut dyn FnMut(usize) -> usize,
) -> Result<Element> {
    let n = pres.n();
    let mut out = Element::zero(n);
    let mut work: BTreeMap<Letters, Scalar> = BTreeMap::new();
    work.insert(w.letters.clone(), w.coeff.clone());
    while let Some((letters, coeff)) = work.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let spots = reducible(&letters);
        if spots.is_empty() {
            out.add_term(collect(&letters, n), &coeff);
            continue;
        }
        let pos = match first.take() {
            Some(p) => p,
            None => spots[choose(spots.len()).min(spots.len() - 1)],
        };
        for (next, c) in rewrite_at(pres, &letters, pos)? {
            let c = c.mul(&coeff);
            let slot = work.entry(next).or_insert_with(Scalar::zero);
            *slot = slot.add(&c);
        }
    }
    Ok(out)
}

/// A failed overlap: the word `x_l x_j x_i` reduced two ways.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    /// `(i, j, l)` with `i < j < l`, 0-based.
    pub triple: (usize, usize, usize),
    /// Normal form when `x_l x_j` is resolved first.
    pub first: Element,
    /// Normal form when `x_j x_i` is resolved first.
    pub second: Element,
    pub first_text: String,
    pub second_text: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, l) = self.triple;
        write!(f, "overlap x{} x{} x{}: {} vs {}", l + 1, j + 1, i + 1, self.first_text, self.second_text)
    }
}

/// Diamond-lemma overlap check over every triple `i < j < l`.
pub fn check_pbw_consistency(pres: &Presentation) -> std::result::Result<(), Box<Counterexample>> {
    let n = pres.n();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let w = Word::of(&[l, j, i]);
                let a = reduce_steps(pres, &w, Some(0), &mut |_| 0);
                let b = reduce_steps(pres, &w, Some(1), &mut |_| 0);
                let (a, b) = match (a, b) {
                    (Ok(a), Ok(b)) => (a, b),
                    (a, b) => {
                        let text = |r: &Result<Element>| match r {
                            Ok(e) => e.format(pres.params()),
                            Err(e) => e.to_string(),
                        };
                        let (ta, tb) = (text(&a), text(&b));
                        return Err(Box::new(Counterexample {
                            triple: (i, j, l),
                            first: a.unwrap_or_else(|_| Element::zero(n)),
                            second: b.unwrap_or_else(|_| Element::zero(n)),
                            first_text: ta,
                            second_text: tb,
                        }));
                    }
                };
                if a != b {
                    return Err(Box::new(Counterexample {
                        triple: (i, j, l),
                        first_text: a.format(pres.params()),
                        second_text: b.format(pres.params()),
                        first: a,
                        second: b,
                    }));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParameterSpace;

    fn sl3(tail: &str) -> Presentation {
        let params = ParameterSpace::new(["q"]).unwrap();
        let mut p = Presentation::new(params.clone(), 3);
        p.set_q(0, 1, params.parse_gamma("q").unwrap());
        p.set_q(1, 2, params.parse_gamma("q").unwrap());
        p.set_q(0, 2, params.parse_gamma("q^-1").unwrap());
        p.set_relation(0, 2, Element::parse(tail, &params, 3).unwrap());
        p
    }

    #[test]
    fn leftmost_normal_form() {
        let p = sl3("x2");
        let nf = reduce(&p, &Word::of(&[2, 0]), &mut |_| 0).unwrap();
        assert_eq!(nf.format(p.params()), "q*x1*x3 - q*x2");
        let nf = reduce(&p, &Word::of(&[0, 0]), &mut |_| 0).unwrap();
        assert_eq!(nf, Element::generator_pow(3, 0, 2));
    }

    #[test]
    fn diamond_accepts_and_rejects() {
        assert!(check_pbw_consistency(&sl3("x2")).is_ok());
        // x2 commutes with x2^2, so this tail is still consistent
        assert!(check_pbw_consistency(&sl3("x2^2")).is_ok());
        let bad = check_pbw_consistency(&sl3("x2*x3")).unwrap_err();
        assert_eq!(bad.triple, (0, 1, 2));
        assert_ne!(bad.first, bad.second);
    }

    #[test]
    fn inverse_letters_cancel() {
        let mut p = sl3("x2");
        p.set_relation(0, 2, Element::zero(3));
        p.set_invertible(2, true);
        let w = Word::new(Scalar::one(), vec![(2, -1), (0, 1), (2, 1)]);
        let nf = reduce(&p, &w, &mut |_| 0).unwrap();
        let qi = p.params().parse_scalar("q^-1").unwrap();
        assert_eq!(nf, Element::monomial(vec![1, 0, 0], qi));
        assert!(Word::new(Scalar::one(), vec![(1, -1)]).check(&p).is_err());
    }
}
