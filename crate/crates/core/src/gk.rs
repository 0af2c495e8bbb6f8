//! The stagewise transform to semicommuting Laurent generators.
//!
//! Stage `p` localizes the pivot `x_p`, replaces every lower generator `x_j`
//! by its `Ad_{x_p}`-eigencomponent `z_j` with eigenvalue `q_pj`, and
//! rewrites the relations among the `z_j` in the new generators. After the
//! stage at `x_1` every generator is invertible and every tail is zero.

use crate::adjoint::eigen_decompose;
use crate::algebra::{check_pbw_consistency, Algebra, Element, Exponents, Presentation};
use crate::error::{Error, Result};
use crate::scalar::{Assignment, GammaMonomial, Scalar};

/// A generator of a stage, expressed in the previous stage's localized algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct StageGenerator {
    pub name: String,
    pub expression: Element,
    /// Eigenvalue of the selected component; `None` for the pivot and above.
    pub eigenvalue: Option<GammaMonomial>,
    /// Eigenvalues of all components of the replaced generator.
    pub eigenvalues: Vec<GammaMonomial>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GkStage {
    /// The generator localized at this stage.
    pub pivot: usize,
    /// The presentation after the replacement; its pivot is `pivot - 1`.
    pub presentation: Presentation,
    pub generators: Vec<StageGenerator>,
    /// Differences `γ - γ'` divided by in the eigen-projectors.
    pub denominators: Vec<(GammaMonomial, GammaMonomial)>,
}

/// Per-stage eigenvalues and denominators.
#[derive(Clone, Debug, PartialEq)]
pub struct GkTrace {
    pub stages: Vec<TraceStage>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStage {
    pub pivot: usize,
    pub eigenvalues: Vec<Vec<GammaMonomial>>,
    pub denominators: Vec<(GammaMonomial, GammaMonomial)>,
}

impl GkTrace {
    pub fn denominators(&self) -> impl Iterator<Item = &(GammaMonomial, GammaMonomial)> {
        self.stages.iter().flat_map(|s| s.denominators.iter())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GkResult {
    pub input: Presentation,
    pub stages: Vec<GkStage>,
    pub final_presentation: Presentation,
}

impl GkResult {
    pub fn trace(&self) -> GkTrace {
        GkTrace {
            stages: self
                .stages
                .iter()
                .map(|s| TraceStage {
                    pivot: s.pivot,
                    eigenvalues: s.generators.iter().map(|g| g.eigenvalues.clone()).collect(),
                    denominators: s.denominators.clone(),
                })
                .collect(),
        }
    }

    /// The presentation each stage starts from, pivot not yet localized.
    pub fn stage_input(&self, k: usize) -> Presentation {
        if k == 0 {
            start(&self.input)
        } else {
            self.stages[k - 1].presentation.clone()
        }
    }

    /// Evaluates every coefficient at an admissible point.
    pub fn specialize(&self, point: &Assignment) -> Result<GkResult> {
        if let Some((a, b)) = vanishing_denominator(&self.trace(), point) {
            return Err(Error::InadmissiblePoint(format!(
                "denominator {} vanishes",
                difference_text(&a, &b, point.space())
            )));
        }
        let g = |x: &GammaMonomial| GammaMonomial::constant(x.eval(point));
        let mut stages = Vec::new();
        for s in &self.stages {
            let mut generators = Vec::new();
            for gen in &s.generators {
                generators.push(StageGenerator {
                    name: gen.name.clone(),
                    expression: gen.expression.specialize(point)?,
                    eigenvalue: gen.eigenvalue.as_ref().map(g),
                    eigenvalues: gen.eigenvalues.iter().map(g).collect(),
                });
            }
            stages.push(GkStage {
                pivot: s.pivot,
                presentation: s.presentation.specialize(point)?,
                generators,
                denominators: s.denominators.iter().map(|(a, b)| (g(a), g(b))).collect(),
            });
        }
        Ok(GkResult {
            input: self.input.specialize(point)?,
            stages,
            final_presentation: self.final_presentation.specialize(point)?,
        })
    }
}

/// `γ - γ'` as a scalar expression.
pub fn difference_text(a: &GammaMonomial, b: &GammaMonomial, params: &crate::scalar::ParameterSpace) -> String {
    a.to_scalar().sub(&b.to_scalar()).format(params)
}

fn start(p: &Presentation) -> Presentation {
    p.with_pivot(p.n().checked_sub(1))
}

/// Name of a generator after it has been replaced by a new one.
fn renamed(name: &str) -> String {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => c.to_ascii_uppercase().to_string() + chars.as_str(),
        _ => format!("{name}'"),
    }
}

/// Writes an element of the old algebra in the new generators, repeatedly
/// removing the leading term with the product of new generators that
/// leads with it.
fn rebase(alg: &Algebra, gens: &[Element], t: &Element, limit: usize) -> Result<Element> {
    let n = alg.n();
    let mut rest = t.clone();
    let mut out = Element::zero(n);
    let mut steps = 0;
    while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        steps += 1;
        if steps > limit {
            return Err(Error::RebaseFailure(format!("no termination after {limit} steps")));
        }
        let prod = monomial_in(alg, gens, &m);
        match prod.leading() {
            Some((lm, lc)) if *lm == m && lc.is_one() => {}
            _ => {
                return Err(Error::RebaseFailure(format!(
                    "product of new generators for {} does not lead with it",
                    crate::algebra::format_monomial(&m)
                )))
            }
        }
        rest.add_scaled(&prod, &c.neg());
        out.add_term(m, &c);
    }
    Ok(out)
}

/// `Π gens[g]^{m_g}` in increasing generator order.
fn monomial_in(alg: &Algebra, gens: &[Element], m: &Exponents) -> Element {
    let n = alg.n();
    let mut acc = Element::one(n);
    for (g, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let base = if e > 0 {
            gens[g].clone()
        } else {
            // only generators that are monomials are ever inverted
            let (mono, c) = gens[g].leading().expect("nonzero generator");
            assert_eq!(gens[g].len(), 1, "inverse of a non-monomial generator");
            let inv: Exponents = mono.iter().map(|x| -x).collect();
            let c = c.inv().expect("nonzero");
            // (c x^a)^{-1} = c^{-1} x^{-a} for single generators
            Element::monomial(inv, c)
        };
        acc = alg.mul(&acc, &alg.pow(&base, e.unsigned_abs()));
    }
    acc
}

/// Substitutes `gens` for the generators of `e`.
pub fn substitute(alg: &Algebra, gens: &[Element], e: &Element) -> Element {
    let mut out = Element::zero(alg.n());
    for (m, c) in e.terms() {
        out.add_scaled(&monomial_in(alg, gens, m), c);
    }
    out
}

/// One stage: localize the pivot of `prev` and replace the lower generators.
pub fn gk_step(prev: &Presentation) -> Result<GkStage> {
    let p = prev.pivot().ok_or_else(|| Error::StageShapeViolation("presentation has no pivot".to_string()))?;
    let n = prev.n();
    let loc = prev.localize(p)?;
    let alg = Algebra::new(loc.clone())?;
    let params = loc.params().clone();
    let mut generators = Vec::new();
    let mut denominators: Vec<(GammaMonomial, GammaMonomial)> = Vec::new();
    for j in 0..p {
        let xj = Element::generator(n, j);
        let dec = eigen_decompose(&alg, p, &xj)?;
        let gamma = loc.q(p, j).clone();
        let Some(sel) = dec.components.iter().position(|c| c.eigenvalue == gamma) else {
            return Err(Error::RebaseFailure(format!(
                "x{} has no component with eigenvalue {}",
                j + 1,
                gamma.format(&params)
            )));
        };
        for (m, c) in dec.components.iter().enumerate() {
            if m != sel && !c.element.supported_above(j) {
                return Err(Error::RebaseFailure(format!(
                    "component of x{} with eigenvalue {} is not supported above x{}",
                    j + 1,
                    c.eigenvalue.format(&params),
                    j + 1
                )));
            }
        }
        for d in dec.denominators {
            if !denominators.iter().any(|e| *e == d || (e.0 == d.1 && e.1 == d.0)) {
                denominators.push(d);
            }
        }
        let z = dec.components[sel].element.clone();
        let name = if z == xj { loc.names()[j].clone() } else { renamed(&loc.names()[j]) };
        generators.push(StageGenerator {
            name,
            expression: z,
            eigenvalue: Some(gamma),
            eigenvalues: dec.components.iter().map(|c| c.eigenvalue.clone()).collect(),
        });
    }
    for k in p..n {
        generators.push(StageGenerator {
            name: loc.names()[k].clone(),
            expression: Element::generator(n, k),
            eigenvalue: None,
            eigenvalues: Vec::new(),
        });
    }
    let exprs: Vec<Element> = generators.iter().map(|g| g.expression.clone()).collect();
    for j in 0..p {
        for k in p..n {
            let q = loc.q(j, k).to_scalar();
            if !alg.q_commutator(&exprs[j], &exprs[k], &q).is_zero() {
                return Err(Error::RebaseFailure(format!("new x{} does not semicommute with x{}", j + 1, k + 1)));
            }
        }
    }
    // pairs meeting x_p or above were just checked to semicommute
    let mut next = loc.associated_graded();
    for j in 0..p {
        for l in j + 1..p {
            let q = loc.q(j, l).to_scalar();
            let t = alg.q_commutator(&exprs[j], &exprs[l], &q);
            let tail = rebase(&alg, &exprs, &t, 10_000)?;
            next.set_relation(j, l, tail);
        }
    }
    next.set_names(generators.iter().map(|g| g.name.clone()).collect());
    next.set_pivot(p.checked_sub(1));
    let diags = next.validate();
    if !diags.is_empty() {
        return Err(Error::RebaseFailure(diags.join("; ")));
    }
    check_pbw_consistency(&next).map_err(Error::Inconsistent)?;
    Ok(GkStage { pivot: p, presentation: next, generators, denominators })
}

/// Runs the stages at `x_n, x_{n-1}, ..., x_1`.
pub fn gk_transform(p: &Presentation) -> Result<GkResult> {
    let diags = p.validate();
    if !diags.is_empty() {
        return Err(Error::InvalidPresentation(diags));
    }
    check_pbw_consistency(p).map_err(Error::Inconsistent)?;
    let mut cur = start(p);
    let diags = cur.validate();
    if !diags.is_empty() {
        return Err(Error::StageShapeViolation(diags.join("; ")));
    }
    let mut stages = Vec::new();
    while cur.pivot().is_some() {
        let stage = gk_step(&cur)?;
        cur = stage.presentation.clone();
        stages.push(stage);
    }
    Ok(GkResult { input: p.clone(), stages, final_presentation: cur })
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", c.label, c.detail)?;
        }
        Ok(())
    }
}

/// Re-checks a transform result against the presentation it came from:
/// (a) the final presentation is twisted Laurent, (b) its units are those
/// of the associated graded algebra, (c) every stage replays exactly.
pub fn verify_twisted(result: &GkResult, original: &Presentation) -> VerifyReport {
    let fin = &result.final_presentation;
    let mut checks = Vec::new();
    let mut problems = Vec::new();
    for (&(i, j), _) in fin.relations() {
        problems.push(format!("tail of ({}, {}) is nonzero", i + 1, j + 1));
    }
    for k in 0..fin.n() {
        if !fin.is_invertible(k) {
            problems.push(format!("x{} is not invertible", k + 1));
        }
    }
    checks.push(Check {
        label: "(a) twisted Laurent".to_string(),
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            "all tails zero, all generators invertible".to_string()
        } else {
            problems.join("; ")
        },
    });

    let graded = original.associated_graded();
    let mut problems = Vec::new();
    if graded.n() != fin.n() {
        problems.push(format!("{} generators, expected {}", fin.n(), graded.n()));
    } else if graded.params() != fin.params() {
        problems.push("parameter lists differ".to_string());
    } else {
        for i in 0..fin.n() {
            for j in i + 1..fin.n() {
                if graded.q(i, j) != fin.q(i, j) {
                    problems.push(format!(
                        "q_{}_{} is {}, expected {}",
                        i + 1,
                        j + 1,
                        fin.q(i, j).format(fin.params()),
                        graded.q(i, j).format(fin.params())
                    ));
                }
            }
        }
    }
    checks.push(Check {
        label: "(b) q-matrix".to_string(),
        passed: problems.is_empty(),
        detail: if problems.is_empty() { "equals the associated graded".to_string() } else { problems.join("; ") },
    });

    let problems = replay(result, original);
    checks.push(Check {
        label: "(c) replay".to_string(),
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{} stages reproduce their relations", result.stages.len())
        } else {
            problems.join("; ")
        },
    });
    VerifyReport { checks }
}

fn replay(result: &GkResult, original: &Presentation) -> Vec<String> {
    let mut problems = Vec::new();
    if &result.input != original {
        problems.push("recorded input differs from the original".to_string());
        return problems;
    }
    let mut expected_pivot = original.n().checked_sub(1);
    for (k, stage) in result.stages.iter().enumerate() {
        if Some(stage.pivot) != expected_pivot {
            problems.push(format!("stage {} has pivot x{}", k + 1, stage.pivot + 1));
            return problems;
        }
        expected_pivot = stage.pivot.checked_sub(1);
        let prev = result.stage_input(k);
        let alg = match prev.localize(stage.pivot).and_then(Algebra::new) {
            Ok(a) => a,
            Err(e) => {
                problems.push(format!("stage {}: {e}", k + 1));
                return problems;
            }
        };
        let new = &stage.presentation;
        if new.n() != prev.n() || stage.generators.len() != new.n() {
            problems.push(format!("stage {} has the wrong number of generators", k + 1));
            return problems;
        }
        if let Err(e) = stage.generators.iter().try_for_each(|g| alg.check(&g.expression)) {
            problems.push(format!("stage {}: {e}", k + 1));
            continue;
        }
        let exprs: Vec<Element> = stage.generators.iter().map(|g| g.expression.clone()).collect();
        for i in 0..new.n() {
            for j in i + 1..new.n() {
                let q: Scalar = new.q(i, j).to_scalar();
                let lhs = alg.q_commutator(&exprs[i], &exprs[j], &q);
                let rhs = match new.relation(i, j) {
                    Some(t) => substitute(&alg, &exprs, t),
                    None => Element::zero(new.n()),
                };
                if lhs != rhs {
                    problems.push(format!("stage {}: relation ({}, {}) does not replay", k + 1, i + 1, j + 1));
                }
            }
        }
    }
    if expected_pivot.is_some() {
        problems.push("transform stopped before the last stage".to_string());
    } else if let Some(last) = result.stages.last() {
        if last.presentation != result.final_presentation {
            problems.push("final presentation differs from the last stage".to_string());
        }
    } else if result.final_presentation != start(original) {
        problems.push("final presentation differs from the input".to_string());
    }
    problems
}

/// The first recorded denominator that vanishes at `point`, if any.
pub fn vanishing_denominator(trace: &GkTrace, point: &Assignment) -> Option<(GammaMonomial, GammaMonomial)> {
    trace.denominators().find(|(a, b)| a.eval(point) == b.eval(point)).cloned()
}

/// True iff no recorded denominator vanishes at `point`.
pub fn admissible(trace: &GkTrace, point: &Assignment) -> bool {
    vanishing_denominator(trace, point).is_none()
}
