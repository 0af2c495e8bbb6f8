use qgk::algebra::Element;
use qgk::catalog::{self, MultiParamSpec};
use qgk::gk::{gk_transform, verify_twisted};
use qgk::scalar::GammaMonomial;

const SIZES: [(&str, usize); 6] = [
    ("quantum_weyl", 1),
    ("quantum_weyl", 2),
    ("quantum_weyl", 3),
    ("quantum_matrices", 2),
    ("quantum_matrices", 3),
    ("uq_sl3", 1),
];

#[test]
fn builders_pass_validation_and_overlaps() {
    for (family, n) in SIZES {
        catalog::check(&catalog::build(family, n).unwrap()).unwrap_or_else(|e| panic!("{family} {n}: {e}"));
    }
    assert!(catalog::check(&catalog::uq_nplus_sl3_tampered()).is_err());
}

#[test]
fn graded_and_final_units_match_the_listed_twisted_form() {
    for (family, n) in SIZES {
        let p = catalog::build(family, n).unwrap();
        let want = catalog::expected_twisted(family, n).unwrap();
        assert_eq!(p.associated_graded().q_upper(), want.q_upper(), "{family} {n}");
        let r = gk_transform(&p).unwrap();
        assert_eq!(r.final_presentation.q_upper(), want.q_upper(), "{family} {n}");
        assert!(verify_twisted(&r, &p).passed(), "{family} {n}");
    }
}

#[test]
fn quantum_matrix_two_by_two_relations() {
    // a_11 a_22 - a_22 a_11 = (p^-1 - q) a_21 a_12 with q = c/p; same row
    // a_11 a_12 = q^-1 a_12 a_11, same column a_11 a_21 = p^-1 a_21 a_11.
    let p = catalog::build("quantum_matrices", 2).unwrap();
    let sp = p.params();
    assert_eq!(p.names(), ["a_11", "a_12", "a_21", "a_22"]);
    assert!(p.q(0, 3).is_one());
    assert_eq!(p.q(0, 1), &sp.parse_gamma("p_1_2*c^-1").unwrap());
    assert_eq!(p.q(0, 2), &sp.parse_gamma("p_1_2^-1").unwrap());
    let alg = qgk::algebra::Algebra::new(p.clone()).unwrap();
    let lhs = alg.q_commutator(&alg.generator(0), &alg.generator(3), &p.q(0, 3).to_scalar());
    let a21_a12 = alg.mul(&alg.generator(2), &alg.generator(1));
    let coeff = sp.parse_scalar("p_1_2^-1 - c*p_1_2^-1").unwrap();
    assert_eq!(lhs, a21_a12.scale(&coeff));
}

#[test]
fn weyl_cross_relation() {
    // y_i x_i - c^-1 x_i y_i = 1 + (c^-1 - 1) Σ_{k>i} x_k y_k; the sum is empty for n = 1.
    let p = catalog::build("quantum_weyl", 1).unwrap();
    assert_eq!(p.relation(0, 1), Some(&Element::one(2)));
    assert_eq!(p.relation_text(0, 1), "y x - (c^-1)*x y = 1");
}

#[test]
fn spec_constraints_are_enforced() {
    let mut spec = MultiParamSpec::generic(2);
    spec.q[0][1] = GammaMonomial::from_int(2);
    assert!(MultiParamSpec::new(spec.params.clone(), spec.p.clone(), spec.q.clone(), spec.c.clone()).is_err());
    assert!(catalog::quantum_matrices(&spec).is_err());
    assert!(catalog::build("nope", 1).is_err());
}
