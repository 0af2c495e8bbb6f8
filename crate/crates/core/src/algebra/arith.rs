use std::collections::HashMap;
use std::sync::Mutex;

use super::element::{Element, Exponents};
use super::rewrite::{self, Word};
use super::Presentation;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type SwapKey = (usize, i32, usize, i32);

/// Multiplication context for a validated presentation.
///
/// Products of PBW monomials are computed by moving the last generator of
/// the left factor past the first generator of the right factor, with the
/// results of both the generator swaps and the monomial products memoized.
/// The caches are behind mutexes, so an `Algebra` can be shared across
/// threads.
#[derive(Debug)]
pub struct Algebra {
    pres: Presentation,
    swaps: Mutex<HashMap<SwapKey, Element>>,
    products: Mutex<HashMap<(Exponents, Exponents), Element>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::from_valid(self.pres.clone())
    }
}

impl Algebra {
    pub fn new(pres: Presentation) -> Result<Self> {
        let diags = pres.validate();
        if !diags.is_empty() {
            return Err(Error::InvalidPresentation(diags));
        }
        Ok(Algebra::from_valid(pres))
    }

    fn from_valid(pres: Presentation) -> Self {
        Algebra { pres, swaps: Mutex::new(HashMap::new()), products: Mutex::new(HashMap::new()) }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn n(&self) -> usize {
        self.pres.n()
    }

    pub fn generator(&self, i: usize) -> Element {
        Element::generator(self.n(), i)
    }

    pub fn inverse_generator(&self, i: usize) -> Result<Element> {
        if !self.pres.is_invertible(i) {
            return Err(Error::Malformed(format!("x{} is not invertible", i + 1)));
        }
        Ok(Element::generator_pow(self.n(), i, -1))
    }

    /// Checks that an element belongs to this algebra.
    pub fn check(&self, a: &Element) -> Result<()> {
        if a.n() != self.n() {
            return Err(Error::Malformed(format!("element over {} generators, algebra has {}", a.n(), self.n())));
        }
        for (m, _) in a.terms() {
            if let Some(k) = (0..self.n()).find(|&k| m[k] < 0 && !self.pres.is_invertible(k)) {
                return Err(Error::Malformed(format!("negative power of non-invertible x{}", k + 1)));
            }
        }
        Ok(())
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero(self.n());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let c = ca.mul(cb);
                out.add_scaled(&self.mul_monomials(ma, mb), &c);
            }
        }
        out
    }

    pub fn mul_all<'a, I: IntoIterator<Item = &'a Element>>(&self, factors: I) -> Element {
        let mut acc = Element::one(self.n());
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut acc = Element::one(self.n());
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `a b - q b a` for a unit-like scalar `q`.
    pub fn q_commutator(&self, a: &Element, b: &Element, q: &Scalar) -> Element {
        self.mul(a, b).sub(&self.mul(b, a).scale(q))
    }

    /// Normal form of a word by the leftmost rewriting strategy.
    pub fn normal_form(&self, w: &Word) -> Result<Element> {
        rewrite::reduce(&self.pres, w, &mut |_| 0)
    }

    /// Normal form of a word; `choose(k)` picks which of the `k` reducible
    /// positions to rewrite next.
    pub fn normal_form_with(&self, w: &Word, choose: &mut dyn FnMut(usize) -> usize) -> Result<Element> {
        rewrite::reduce(&self.pres, w, choose)
    }

    /// Normal form of a word computed as a product of single letters.
    pub fn evaluate_word(&self, w: &Word) -> Result<Element> {
        w.check(&self.pres)?;
        let mut acc = Element::constant(self.n(), w.coeff().clone());
        for &(g, e) in w.letters() {
            acc = self.mul(&acc, &Element::generator_pow(self.n(), g, e));
        }
        Ok(acc)
    }

    pub fn mul_monomials(&self, a: &[i32], b: &[i32]) -> Element {
        let last = a.iter().rposition(|&e| e != 0);
        let first = b.iter().position(|&e| e != 0);
        let (k, l) = match (last, first) {
            (Some(k), Some(l)) if k > l => (k, l),
            _ => {
                let m: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
                return Element::monomial(m, Scalar::one());
            }
        };
        let key = (a.to_vec(), b.to_vec());
        if let Some(hit) = self.products.lock().expect("cache").get(&key) {
            return hit.clone();
        }
        let mut head = a.to_vec();
        let e = std::mem::take(&mut head[k]);
        let mut tail = b.to_vec();
        let f = std::mem::take(&mut tail[l]);
        let middle = self.swap(k, e, l, f);
        let mut out = Element::zero(self.n());
        for (t, c) in middle.terms() {
            let left = self.mul_monomials(&head, t);
            for (u, d) in left.terms() {
                out.add_scaled(&self.mul_monomials(u, &tail), &c.mul(d));
            }
        }
        self.products.lock().expect("cache").insert(key, out.clone());
        out
    }

    /// Normal form of `x_k^e x_l^f` for `k > l`.
    fn swap(&self, k: usize, e: i32, l: usize, f: i32) -> Element {
        let key = (k, e, l, f);
        if let Some(hit) = self.swaps.lock().expect("cache").get(&key) {
            return hit.clone();
        }
        let n = self.n();
        let q = self.pres.q(l, k);
        let ordered = |fl: i32, ek: i32| {
            let mut m = vec![0; n];
            m[l] = fl;
            m[k] = ek;
            m
        };
        let out = match self.pres.relation(l, k) {
            // x_l x_k = q x_k x_l  =>  x_k^e x_l^f = q^{-ef} x_l^f x_k^e
            None => Element::monomial(ordered(f, e), q.pow(-(e as i64) * (f as i64)).to_scalar()),
            Some(r) => {
                let gk = |p: i32| Element::generator_pow(n, k, p);
                let gl = |p: i32| Element::generator_pow(n, l, p);
                match (e, f) {
                    (1, 1) => {
                        // x_k x_l = q^{-1} (x_l x_k - r)
                        let qi = q.inv().to_scalar();
                        Element::monomial(ordered(1, 1), Scalar::one()).sub(r).scale(&qi)
                    }
                    (-1, 1) => {
                        // x_k^{-1} x_l = q x_l x_k^{-1} + x_k^{-1} r x_k^{-1}
                        let conj = self.mul(&self.mul(&gk(-1), r), &gk(-1));
                        Element::monomial(ordered(1, -1), q.to_scalar()).add(&conj)
                    }
                    (e, f) if e > 1 && f > 0 => self.mul(&gk(e - 1), &self.swap(k, 1, l, f)),
                    (e, f) if e < -1 && f > 0 => self.mul(&gk(e + 1), &self.swap(k, -1, l, f)),
                    (e, f) if f > 1 && (e == 1 || e == -1) => self.mul(&self.swap(k, e, l, 1), &gl(f - 1)),
                    _ => panic!(
                        "x{}^{} x{}^{} cannot be reordered: nonzero tail with an inverted lower generator",
                        k + 1,
                        e,
                        l + 1,
                        f
                    ),
                }
            }
        };
        self.swaps.lock().expect("cache").insert(key, out.clone());
        out
    }
}
