#![allow(dead_code)]

use qgk::algebra::{Algebra, Element, Presentation};
use qgk::catalog;
use qgk::gk;
use qgk::scalar::{GammaMonomial, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every catalog family at the sizes the tests exercise.
pub fn catalog_inputs() -> Vec<(String, Presentation)> {
    vec![
        ("quantum_weyl 1".into(), catalog::build("quantum_weyl", 1).unwrap()),
        ("quantum_weyl 2".into(), catalog::build("quantum_weyl", 2).unwrap()),
        ("quantum_matrices 2".into(), catalog::build("quantum_matrices", 2).unwrap()),
        ("uq_sl3".into(), catalog::uq_nplus_sl3()),
    ]
}

/// `(stage input, pivot)` for every stage the transform visits.
pub fn pivot_stages(p: &Presentation) -> Vec<(Presentation, usize)> {
    let r = gk::gk_transform(p).unwrap();
    (0..r.stages.len()).map(|k| (r.stage_input(k), r.stages[k].pivot)).collect()
}

pub fn coefficient(rng: &mut ChaCha8Rng, pres: &Presentation) -> Scalar {
    let mut c = Scalar::from_int(*[-3i64, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).unwrap());
    let np = pres.params().len();
    if np > 0 && rng.gen_bool(0.5) {
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        c = c.mul(&GammaMonomial::param(rng.gen_range(0..np), e).to_scalar());
    }
    c
}

/// A sparse element whose exponents below and at `pivot` are nonnegative
/// with total at most 3; generators above the pivot may carry exponent -1
/// when invertible. `pivot_inverse` also allows `x_pivot^-1`.
pub fn random_element(rng: &mut ChaCha8Rng, pres: &Presentation, pivot: usize, pivot_inverse: bool) -> Element {
    let n = pres.n();
    let mut e = Element::zero(n);
    while e.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let mut m = vec![0i32; n];
            let mut budget = rng.gen_range(0..=3);
            while budget > 0 {
                let g = rng.gen_range(0..=pivot);
                m[g] += 1;
                budget -= 1;
            }
            if pivot_inverse && pres.is_invertible(pivot) && rng.gen_bool(0.3) {
                m[pivot] -= 1;
            }
            for (k, slot) in m.iter_mut().enumerate().skip(pivot + 1) {
                let lo = if pres.is_invertible(k) { -1 } else { 0 };
                *slot = rng.gen_range(lo..=1);
            }
            e.add_term(m, &coefficient(rng, pres));
        }
    }
    e
}

/// A random element over all generators, inverse powers on invertible ones.
pub fn random_any(rng: &mut ChaCha8Rng, pres: &Presentation) -> Element {
    let n = pres.n();
    let mut e = Element::zero(n);
    while e.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let m: Vec<i32> = (0..n)
                .map(|k| {
                    let lo = if pres.is_invertible(k) { -1 } else { 0 };
                    rng.gen_range(lo..=1)
                })
                .collect();
            e.add_term(m, &coefficient(rng, pres));
        }
    }
    e
}

pub fn algebra(p: &Presentation) -> Algebra {
    Algebra::new(p.clone()).unwrap()
}
