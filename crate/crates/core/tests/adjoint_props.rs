mod common;

use common::{algebra, catalog_inputs, pivot_stages, random_element};
use proptest::prelude::*;
use qgk::adjoint::{ad, apply_ad_product, eigen_decompose, fa_roots, minimal_ad_polynomial, ore_left_shift, MinimalAd};
use qgk::algebra::{Algebra, Element, Presentation};
use qgk::scalar::Assignment;
use qgk::{catalog, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `(name, stage input, localized stage, pivot)` for every catalog stage.
fn stages() -> Vec<(String, Presentation, Algebra, usize)> {
    let mut out = Vec::new();
    for (name, p) in catalog_inputs() {
        for (si, pivot) in pivot_stages(&p) {
            let loc = si.localize(pivot).unwrap();
            out.push((format!("{name} at x{}", pivot + 1), si, algebra(&loc), pivot));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn annihilator_kills_y_in_any_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, _, alg, p) in stages() {
            let y = random_element(&mut rng, alg.presentation(), p, true);
            let roots = fa_roots(&alg, p, &y).unwrap();
            prop_assert!(apply_ad_product(&alg, p, roots.roots(), &y).unwrap().is_zero(), "{}", name);
            let mut rev = roots.roots().to_vec();
            rev.reverse();
            prop_assert!(apply_ad_product(&alg, p, &rev, &y).unwrap().is_zero(), "{}", name);
        }
    }

    #[test]
    fn minimal_roots_divide_annihilator(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, _, alg, p) in stages() {
            let y = random_element(&mut rng, alg.presentation(), p, true);
            let fa = fa_roots(&alg, p, &y).unwrap();
            let MinimalAd::Diagonalizable(mu) = minimal_ad_polynomial(&alg, p, &y).unwrap() else {
                panic!("{name}: generic parameters gave a Jordan block");
            };
            for r in mu.distinct() {
                prop_assert!(mu.multiplicity(&r) <= fa.multiplicity(&r), "{}", name);
            }
            prop_assert!(apply_ad_product(&alg, p, mu.roots(), &y).unwrap().is_zero(), "{}", name);
        }
    }

    #[test]
    fn decomposition_reconstructs_y(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, _, alg, p) in stages() {
            let y = random_element(&mut rng, alg.presentation(), p, true);
            let dec = eigen_decompose(&alg, p, &y).unwrap();
            let mut sum = Element::zero(alg.n());
            for c in &dec.components {
                prop_assert_eq!(ad(&alg, p, &c.element).unwrap(), c.element.scale_gamma(&c.eigenvalue), "{}", name);
                sum = sum.add(&c.element);
            }
            prop_assert_eq!(sum, y, "{}", name);
        }
    }

    #[test]
    fn ore_shift_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, si, _, p) in stages() {
            let alg = algebra(&si);
            let y = random_element(&mut rng, &si, p, false);
            let (n, b1) = ore_left_shift(&alg, p, &y).unwrap();
            let x = alg.generator(p);
            prop_assert_eq!(alg.mul(&alg.pow(&x, n), &y), alg.mul(&b1, &x), "{}", name);
        }
    }
}

#[test]
fn generators_below_pivot_have_their_relation_unit_as_root() {
    for (name, _, alg, p) in stages() {
        let pres = alg.presentation();
        for j in 0..p {
            let y = Element::generator(alg.n(), j);
            let gamma = pres.q(p, j);
            let MinimalAd::Diagonalizable(mu) = minimal_ad_polynomial(&alg, p, &y).unwrap() else {
                panic!("{name}");
            };
            assert!(mu.multiplicity(gamma) >= 1, "{name}: x{}", j + 1);
            let dec = eigen_decompose(&alg, p, &y).unwrap();
            for c in dec.components.iter().filter(|c| &c.eigenvalue != gamma) {
                assert!(c.element.supported_above(j), "{name}: x{} component", j + 1);
            }
        }
    }
}

#[test]
fn classical_weyl_yields_verified_certificate() {
    let p = catalog::build("quantum_weyl", 1).unwrap();
    let pt = Assignment::from_ints(p.params(), &[("c", 1)]).unwrap();
    let loc = p.specialize(&pt).unwrap().localize(1).unwrap();
    let alg = algebra(&loc);
    let y = alg.generator(0);
    match minimal_ad_polynomial(&alg, 1, &y).unwrap() {
        MinimalAd::NonDiagonalizable(cert) => cert.verify().unwrap(),
        other => panic!("expected a Jordan pair, got {other:?}"),
    }
    assert!(matches!(eigen_decompose(&alg, 1, &y), Err(Error::WeylDetected(_))));
}

#[test]
fn weyl_roots_for_quantum_plane_pivot() {
    // Ad_x y = c y - c x^-1: roots c and 1 with y - (c/(c-1)) x^-1 in the c-eigenspace.
    let p = catalog::build("quantum_weyl", 1).unwrap().localize(1).unwrap();
    let alg = algebra(&p);
    let y = alg.generator(0);
    let roots = fa_roots(&alg, 1, &y).unwrap();
    assert_eq!(roots.format(p.params()), "(t - c)(t - 1)");
    let dec = eigen_decompose(&alg, 1, &y).unwrap();
    let c = p.params().parse_gamma("c").unwrap();
    let sel = dec.components.iter().find(|k| k.eigenvalue == c).unwrap();
    assert_eq!(sel.element, Element::parse("x1 - c/(c - 1)*x2^-1", p.params(), 2).unwrap());
}
