//! One PASS/FAIL line per acceptance criterion. Exits nonzero on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{algebra, pivot_stages, random_any, random_element};
use qgk::adjoint::{
    ad, apply_ad_product, check_weyl_criterion, eigen_decompose, fa_roots, ore_left_shift, search_weyl_witness,
    WeylCriterionWitness,
};
use qgk::algebra::{check_pbw_consistency, Element, Presentation};
use qgk::catalog::{self, RootDatum3};
use qgk::gk::{admissible, difference_text, gk_transform, vanishing_denominator, verify_twisted};
use qgk::scalar::{Assignment, GammaMonomial, Scalar};
use qgk::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: u64) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < Duration::from_secs(limit), || format!("took {t:?}, limit {limit} s"))?;
    Ok(t)
}

fn err(e: Error) -> String {
    e.to_string()
}

/// `a = g b` for some `g` in Γ.
fn gamma_multiple(a: &Element, b: &Element) -> bool {
    let (Some((ka, ca)), Some((kb, cb))) = (a.leading(), b.leading()) else {
        return false;
    };
    if ka != kb {
        return false;
    }
    let Ok(ratio) = ca.div(cb) else { return false };
    GammaMonomial::from_scalar(&ratio).is_some_and(|g| b.scale_gamma(&g) == *a)
}

fn sample_inputs() -> Vec<(&'static str, Presentation)> {
    vec![
        ("quantum_matrices 2", catalog::build("quantum_matrices", 2).unwrap()),
        ("quantum_weyl 1", catalog::build("quantum_weyl", 1).unwrap()),
        ("quantum_weyl 2", catalog::build("quantum_weyl", 2).unwrap()),
        ("uq_sl3", catalog::uq_nplus_sl3()),
    ]
}

fn weyl_end_to_end() -> Outcome {
    let start = Instant::now();
    let p = catalog::build("quantum_weyl", 1).map_err(err)?;
    let r = gk_transform(&p).map_err(err)?;
    let t = within(start, 5)?;
    let fin = &r.final_presentation;
    ensure(fin.n() == 2 && fin.is_invertible(0) && fin.is_invertible(1), || "generators not invertible".into())?;
    ensure(fin.is_twisted(), || "nonzero tail".into())?;
    let want = catalog::expected_twisted("quantum_weyl", 1).map_err(err)?;
    ensure(fin.q_upper() == want.q_upper(), || "q-matrix differs from the listed form".into())?;
    let text = fin.relation_text(0, 1);
    ensure(text == "Y x = (c^-1)*x Y", || format!("relation `{text}`"))?;
    let oracle = Element::parse("x1 - c/(c - 1)*x2^-1", p.params(), 2).map_err(err)?;
    let expr = &r.stages[0].generators[0].expression;
    ensure(gamma_multiple(expr, &oracle), || format!("stage expression {}", expr.format(p.params())))?;
    ensure(verify_twisted(&r, &p).passed(), || "replay failed".into())?;
    Ok(format!("{t:?}"))
}

fn quantum_matrices_two() -> Outcome {
    let start = Instant::now();
    let p = catalog::build("quantum_matrices", 2).map_err(err)?;
    let r = gk_transform(&p).map_err(err)?;
    let t = within(start, 60)?;
    let want = catalog::expected_twisted("quantum_matrices", 2).map_err(err)?;
    ensure(r.final_presentation.q_upper() == want.q_upper(), || "q-matrix differs".into())?;
    let report = verify_twisted(&r, &p);
    ensure(report.passed() && report.checks.len() == 3, || report.to_string())?;
    Ok(format!("{t:?}"))
}

fn sl3() -> Outcome {
    let start = Instant::now();
    let p = catalog::uq_nplus_sl3();
    let r = gk_transform(&p).map_err(err)?;
    let t = within(start, 30)?;
    let q = GammaMonomial::param(0, 1);
    let fin = r.final_presentation.q_upper();
    ensure(fin == vec![q.clone(), q.inv(), q.clone()], || "q-matrix is not (q, q^-1, q)".into())?;
    let roots = RootDatum3::default();
    let pairing: Vec<_> = [(0, 1), (0, 2), (1, 2)].iter().map(|&(i, j)| q.pow(roots.pairing(i, j))).collect();
    ensure(fin == pairing, || "q-matrix differs from the root pairing".into())?;
    let oracle = Element::parse("x1 - q*(q - q^-1)^-1*x2*x3^-1", p.params(), 3).map_err(err)?;
    let e1 = &r.stages[0].generators[0].expression;
    ensure(*e1 == oracle, || format!("E1 component {}", e1.format(p.params())))?;
    let pivot = r.stages[0].pivot;
    let loc = algebra(&r.stage_input(0).localize(pivot).map_err(err)?);
    let lhs = ad(&loc, pivot, e1).map_err(err)?;
    ensure(lhs == e1.scale_gamma(loc.presentation().q(pivot, 0)), || "eigen-equation fails".into())?;
    Ok(format!("{t:?}"))
}

fn conservation() -> Outcome {
    for (name, p) in sample_inputs() {
        let r = gk_transform(&p).map_err(err)?;
        ensure(r.final_presentation.q_upper() == p.associated_graded().q_upper(), || name.to_string())?;
    }
    Ok("4 inputs".into())
}

const SAMPLES: usize = 25;

fn annihilator() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let (mut tested, mut failures) = (0, Vec::new());
    for (name, p) in sample_inputs() {
        for (si, pivot) in pivot_stages(&p) {
            let alg = algebra(&si.localize(pivot).map_err(err)?);
            for _ in 0..SAMPLES {
                let y = random_element(&mut rng, alg.presentation(), pivot, true);
                tested += 1;
                let roots = fa_roots(&alg, pivot, &y).map_err(err)?;
                let killed = apply_ad_product(&alg, pivot, roots.roots(), &y).map_err(err)?.is_zero();
                let dec = eigen_decompose(&alg, pivot, &y).map_err(err)?;
                let mut sum = Element::zero(alg.n());
                let mut eigen = true;
                for c in &dec.components {
                    eigen &= ad(&alg, pivot, &c.element).map_err(err)? == c.element.scale_gamma(&c.eigenvalue);
                    sum = sum.add(&c.element);
                }
                if !(killed && eigen && sum == y) {
                    failures.push(format!("{name} at x{}: {}", pivot + 1, y.format(alg.presentation().params())));
                }
            }
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{tested} samples"))
}

fn ore() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let (mut tested, mut failures) = (0, Vec::new());
    for (name, p) in sample_inputs() {
        for (si, pivot) in pivot_stages(&p) {
            let alg = algebra(&si);
            let x = alg.generator(pivot);
            for _ in 0..SAMPLES {
                let y = random_element(&mut rng, &si, pivot, false);
                tested += 1;
                let (n, b1) = ore_left_shift(&alg, pivot, &y).map_err(err)?;
                if alg.mul(&alg.pow(&x, n), &y) != alg.mul(&b1, &x) {
                    failures.push(format!("{name} at x{}: {}", pivot + 1, y.format(si.params())));
                }
            }
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{tested} samples"))
}

fn classical_weyl() -> Result<Presentation, String> {
    let p = catalog::build("quantum_weyl", 1).map_err(err)?;
    let one = Assignment::from_ints(p.params(), &[("c", 1)]).map_err(err)?;
    p.specialize(&one).map_err(err)
}

fn weyl_detection() -> Outcome {
    let start = Instant::now();
    let w = classical_weyl()?;
    match gk_transform(&w) {
        Err(Error::WeylDetected(cert)) => {
            let t = within(start, 5)?;
            cert.verify().map_err(err)?;
            Ok(format!("{t:?}, u = {}, v = {}", cert.u.format(w.params()), cert.v.format(w.params())))
        }
        Err(e) => Err(e.to_string()),
        Ok(_) => Err("transform succeeded".into()),
    }
}

fn specialization() -> Outcome {
    let p = catalog::build("quantum_weyl", 1).map_err(err)?;
    let r = gk_transform(&p).map_err(err)?;
    for c in [2, 3, 5] {
        let pt = Assignment::from_ints(p.params(), &[("c", c)]).map_err(err)?;
        ensure(admissible(&r.trace(), &pt), || format!("c = {c} rejected"))?;
        let later = r.specialize(&pt).map_err(err)?;
        let earlier = gk_transform(&p.specialize(&pt).map_err(err)?).map_err(err)?;
        ensure(later.final_presentation == earlier.final_presentation, || format!("c = {c} differs"))?;
    }
    let one = Assignment::from_ints(p.params(), &[("c", 1)]).map_err(err)?;
    ensure(!admissible(&r.trace(), &one), || "c = 1 accepted".into())?;
    let (a, b) = vanishing_denominator(&r.trace(), &one).ok_or("no vanishing denominator")?;
    let named = difference_text(&a, &b, p.params());
    ensure(named == "c - 1", || format!("named `{named}`"))?;
    Ok("c = 2, 3, 5 agree; c = 1 names c - 1".into())
}

fn consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut failures = Vec::new();
    for (name, p) in sample_inputs() {
        if let Err(c) = check_pbw_consistency(&p) {
            failures.push(format!("{name}: {c}"));
        }
        let alg = algebra(&p);
        for _ in 0..100 {
            let (a, b, c) = (random_any(&mut rng, &p), random_any(&mut rng, &p), random_any(&mut rng, &p));
            if alg.mul(&alg.mul(&a, &b), &c) != alg.mul(&a, &alg.mul(&b, &c)) {
                failures.push(format!("{name}: associativity"));
            }
        }
    }
    let tampered = match check_pbw_consistency(&catalog::uq_nplus_sl3_tampered()) {
        Ok(()) => return Err("tampered sl3 passed".into()),
        Err(c) => c,
    };
    ensure(failures.is_empty(), || failures.join("; "))?;
    let (i, j, l) = tampered.triple;
    Ok(format!("400 triples; tampered variant fails at x{} x{} x{}", l + 1, j + 1, i + 1))
}

fn weyl_criterion() -> Outcome {
    let w = classical_weyl()?;
    let alg = algebra(&w);
    let one = Element::one(2);
    ensure(!check_weyl_criterion(&alg, &WeylCriterionWitness::constant(one.clone())).map_err(err)?, || {
        "all ones passed".into()
    })?;
    let mut two = WeylCriterionWitness::constant(one);
    two.a = Element::constant(2, Scalar::from_int(2));
    ensure(!check_weyl_criterion(&alg, &two).map_err(err)?, || "a = 2 passed".into())?;
    let start = Instant::now();
    let mut candidates = Vec::new();
    for total in 0..=2 {
        for ey in (0..=total).rev() {
            candidates.push(Element::monomial(vec![ey, total - ey], Scalar::one()));
        }
    }
    let found = search_weyl_witness(&alg, &candidates).ok_or("no witness found")?;
    let t = within(start, 60)?;
    ensure(check_weyl_criterion(&alg, &found).map_err(err)?, || "found witness fails".into())?;
    Ok(format!("{t:?} over {} candidates", candidates.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("quantum Weyl n=1 end to end", weyl_end_to_end),
        ("quantum matrices n=2", quantum_matrices_two),
        ("U_q(n+) of sl3", sl3),
        ("q-matrix conservation", conservation),
        ("annihilator and decomposition", annihilator),
        ("Ore shift", ore),
        ("Weyl detection", weyl_detection),
        ("specialization commutes", specialization),
        ("consistency suite", consistency),
        ("Weyl criterion checker", weyl_criterion),
    ];
    let mut failed = 0;
    for (k, (label, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {label}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {label}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
