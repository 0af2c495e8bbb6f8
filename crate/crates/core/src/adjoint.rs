//! The adjoint action `Ad_x(y) = x y x^{-1}` of a pivot generator.
//!
//! Everything here works at a stage: a pivot `x = x_p` such that every
//! generator above it is invertible and semicommutes with all generators.
//! Functions that apply `Ad_x` need the pivot itself localized.

use std::collections::HashMap;

use crate::algebra::{Algebra, Element, Exponents, Presentation};
use crate::error::{Error, Result};
use crate::scalar::{GammaMonomial, ParameterSpace, Scalar};

/// `f(t) = Π (t - β_s)`, roots listed with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPolynomial {
    roots: Vec<GammaMonomial>,
}

impl SplitPolynomial {
    pub fn new(roots: Vec<GammaMonomial>) -> Self {
        SplitPolynomial { roots }
    }

    pub fn roots(&self) -> &[GammaMonomial] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn multiplicity(&self, g: &GammaMonomial) -> usize {
        self.roots.iter().filter(|r| *r == g).count()
    }

    /// Distinct roots in first-occurrence order.
    pub fn distinct(&self) -> Vec<GammaMonomial> {
        let mut out: Vec<GammaMonomial> = Vec::new();
        for r in &self.roots {
            if !out.contains(r) {
                out.push(r.clone());
            }
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.distinct().len() == self.roots.len()
    }

    /// Least common multiple: each root with its larger multiplicity.
    pub fn lcm(&self, other: &SplitPolynomial) -> SplitPolynomial {
        let mut roots = self.roots.clone();
        for g in other.distinct() {
            for _ in self.multiplicity(&g)..other.multiplicity(&g) {
                roots.push(g.clone());
            }
        }
        SplitPolynomial { roots }
    }

    /// Monomial coefficients, constant term first.
    pub fn coefficients(&self) -> Vec<Scalar> {
        let mut c = vec![Scalar::one()];
        for r in &self.roots {
            c = mul_linear(&c, &r.to_scalar());
        }
        c
    }

    pub fn format(&self, params: &ParameterSpace) -> String {
        self.roots.iter().map(|r| format!("(t - {})", r.format(params))).collect::<Vec<_>>().join("")
    }
}

/// `c(t) * (t - a)`.
fn mul_linear(c: &[Scalar], a: &Scalar) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); c.len() + 1];
    for (i, ci) in c.iter().enumerate() {
        out[i + 1] = out[i + 1].add(ci);
        out[i] = out[i].sub(&ci.mul(a));
    }
    out
}

/// Divides by `t - a` if it is a root; `c` is constant term first.
fn div_linear(c: &[Scalar], a: &Scalar) -> Option<Vec<Scalar>> {
    let d = c.len() - 1;
    let mut q = vec![Scalar::zero(); d];
    let mut carry = Scalar::zero();
    for k in (1..=d).rev() {
        carry = c[k].add(&carry.mul(a));
        q[k - 1] = carry.clone();
    }
    c[0].add(&carry.mul(a)).is_zero().then_some(q)
}

/// An eigenvector of `Ad_x` with its eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenComponent {
    pub eigenvalue: GammaMonomial,
    pub element: Element,
}

/// A Jordan pair of `Ad_x`: `Ad u = α u` and `Ad v = u + α v`.
///
/// `Y = α u^{-1} v x^{-1}` then satisfies `x Y - Y x = 1` in the skew field
/// of fractions, so the algebra contains a copy of the Weyl algebra. `Y` is
/// not constructed. `presentation` is the localized stage the pair lives in.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylCertificate {
    pub pivot: usize,
    pub u: Element,
    pub v: Element,
    pub alpha: GammaMonomial,
    pub presentation: Presentation,
}

impl WeylCertificate {
    /// Re-checks both Jordan identities by arithmetic.
    pub fn verify(&self) -> Result<()> {
        let alg = Algebra::new(self.presentation.clone())?;
        weyl_certificate(&alg, self.pivot, &self.u, &self.v, &self.alpha).map(|_| ())
    }

    pub fn format(&self) -> String {
        let params = self.presentation.params();
        let name = &self.presentation.names()[self.pivot];
        let generic = format!("x{}", self.pivot + 1);
        let pivot = if *name == generic { generic } else { format!("{generic} ({name})") };
        format!(
            "pivot: {pivot}\nu: {}\nv: {}\nalpha: {}",
            self.u.format(params),
            self.v.format(params),
            self.alpha.format(params)
        )
    }
}

/// Minimal polynomial of `Ad_x` on the span of `y, Ad y, Ad² y, ...`.
#[derive(Clone, Debug, PartialEq)]
pub enum MinimalAd {
    Diagonalizable(SplitPolynomial),
    NonDiagonalizable(Box<WeylCertificate>),
}

fn require_stage(alg: &Algebra, p: usize) -> Result<()> {
    let pres = alg.presentation();
    if p >= pres.n() {
        return Err(Error::StageShapeViolation(format!("no generator x{}", p + 1)));
    }
    for k in p + 1..pres.n() {
        if !pres.is_invertible(k) || !pres.semicommutes(k) {
            return Err(Error::StageShapeViolation(format!(
                "x{} above pivot x{} is not an invertible semicommuting generator",
                k + 1,
                p + 1
            )));
        }
    }
    Ok(())
}

fn require_localized(alg: &Algebra, p: usize) -> Result<()> {
    require_stage(alg, p)?;
    if !alg.presentation().is_invertible(p) {
        return Err(Error::StageShapeViolation(format!("pivot x{} is not localized", p + 1)));
    }
    Ok(())
}

/// `x_p y x_p^{-1}`.
pub fn ad(alg: &Algebra, p: usize, y: &Element) -> Result<Element> {
    require_localized(alg, p)?;
    Ok(ad_unchecked(alg, p, y))
}

fn ad_unchecked(alg: &Algebra, p: usize, y: &Element) -> Element {
    let n = alg.n();
    let x = Element::generator(n, p);
    let xi = Element::generator_pow(n, p, -1);
    alg.mul(&alg.mul(&x, y), &xi)
}

/// The unit `β` with `x_p t = β t x_p + (lower terms)` for a monomial `t`.
fn leading_unit(pres: &Presentation, p: usize, m: &[i32]) -> GammaMonomial {
    let mut beta = GammaMonomial::one();
    for (g, &e) in m.iter().enumerate() {
        if e != 0 && g != p {
            beta = beta.mul(&pres.q(p, g).pow(e as i64));
        }
    }
    beta
}

fn below_pivot_free(m: &[i32], p: usize) -> bool {
    m[..p].iter().all(|&e| e == 0)
}

/// `x_p t - β t x_p` for the monomial `t`.
fn shift_tail(alg: &Algebra, p: usize, m: &Exponents, beta: &GammaMonomial) -> Element {
    let n = alg.n();
    let t = Element::monomial(m.clone(), Scalar::one());
    let x = Element::generator(n, p);
    alg.mul(&x, &t).sub(&alg.mul(&t, &x).scale_gamma(beta))
}

/// `N` and `b1` with `x_p^N y = b1 x_p`.
pub fn ore_left_shift(alg: &Algebra, p: usize, y: &Element) -> Result<(u32, Element)> {
    require_stage(alg, p)?;
    let mut memo = HashMap::new();
    Ok(shift_element(alg, p, y, &mut memo))
}

fn shift_element(
    alg: &Algebra,
    p: usize,
    y: &Element,
    memo: &mut HashMap<Exponents, (u32, Element)>,
) -> (u32, Element) {
    let n = alg.n();
    let parts: Vec<_> = y
        .terms()
        .map(|(m, c)| {
            let (k, b) = shift_monomial(alg, p, m, memo);
            (k, b.scale(c))
        })
        .collect();
    let big = parts.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let mut b1 = Element::zero(n);
    for (k, b) in parts {
        b1 = b1.add(&alg.mul(&alg.pow(&Element::generator(n, p), big - k), &b));
    }
    (big, b1)
}

fn shift_monomial(
    alg: &Algebra,
    p: usize,
    m: &Exponents,
    memo: &mut HashMap<Exponents, (u32, Element)>,
) -> (u32, Element) {
    if let Some(hit) = memo.get(m) {
        return hit.clone();
    }
    let n = alg.n();
    let pres = alg.presentation();
    let beta = leading_unit(pres, p, m);
    let t = Element::monomial(m.clone(), Scalar::one());
    let out = if below_pivot_free(m, p) {
        (1, t.scale_gamma(&beta))
    } else {
        let b = shift_tail(alg, p, m, &beta);
        if b.is_zero() {
            (1, t.scale_gamma(&beta))
        } else {
            // x^{l+1} t = x^l (β t x + b) = (β x^l t + b') x
            let (l, b_prime) = shift_element(alg, p, &b, memo);
            let lifted = alg.mul(&alg.pow(&Element::generator(n, p), l), &t);
            (l + 1, lifted.scale_gamma(&beta).add(&b_prime))
        }
    };
    memo.insert(m.clone(), out.clone());
    out
}

/// A split polynomial `f` with `f(Ad_x) y = 0`.
pub fn fa_roots(alg: &Algebra, p: usize, y: &Element) -> Result<SplitPolynomial> {
    require_stage(alg, p)?;
    if y.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut memo = HashMap::new();
    Ok(roots_element(alg, p, y, &mut memo))
}

fn roots_element(
    alg: &Algebra,
    p: usize,
    y: &Element,
    memo: &mut HashMap<Exponents, SplitPolynomial>,
) -> SplitPolynomial {
    let mut f = SplitPolynomial::new(Vec::new());
    for (m, _) in y.terms() {
        f = f.lcm(&roots_monomial(alg, p, m, memo));
    }
    f
}

fn roots_monomial(
    alg: &Algebra,
    p: usize,
    m: &Exponents,
    memo: &mut HashMap<Exponents, SplitPolynomial>,
) -> SplitPolynomial {
    if let Some(hit) = memo.get(m) {
        return hit.clone();
    }
    let beta = leading_unit(alg.presentation(), p, m);
    let mut roots = vec![beta.clone()];
    if !below_pivot_free(m, p) {
        let b = shift_tail(alg, p, m, &beta);
        if !b.is_zero() {
            // (Ad - β) t = b x^{-1}, and b x^{-1} is annihilated by whatever kills b
            roots.extend(roots_element(alg, p, &b, memo).roots);
        }
    }
    let f = SplitPolynomial::new(roots);
    memo.insert(m.clone(), f.clone());
    f
}

/// `Π (Ad - β_s)` applied to `y`, factors taken in the order given.
pub fn apply_ad_product(alg: &Algebra, p: usize, roots: &[GammaMonomial], y: &Element) -> Result<Element> {
    require_localized(alg, p)?;
    let mut z = y.clone();
    for r in roots {
        z = ad_unchecked(alg, p, &z).sub(&z.scale_gamma(r));
    }
    Ok(z)
}

/// Krylov data: `y, Ad y, ...` and the first linear dependence among them.
struct Krylov {
    images: Vec<Element>,
    /// Monic minimal polynomial, constant term first.
    mu: Vec<Scalar>,
}

impl Krylov {
    fn apply(&self, poly: &[Scalar]) -> Element {
        let n = self.images[0].n();
        let mut out = Element::zero(n);
        for (c, v) in poly.iter().zip(&self.images) {
            out.add_scaled(v, c);
        }
        out
    }
}

fn krylov(alg: &Algebra, p: usize, y: &Element, bound: usize) -> Result<Krylov> {
    // echelon rows: (reduced vector, combination of images), keyed by leading monomial
    let mut rows: Vec<(Element, Vec<Scalar>)> = Vec::new();
    let mut pivots: HashMap<Exponents, usize> = HashMap::new();
    let mut images = vec![y.clone()];
    for k in 0..=bound {
        let mut w = images[k].clone();
        let mut combo = vec![Scalar::zero(); k + 1];
        combo[k] = Scalar::one();
        while let Some((lead, c)) = w.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let Some(&r) = pivots.get(&lead) else { break };
            let (row, rc) = &rows[r];
            let f = c.div(row.leading().expect("nonzero row").1).expect("nonzero pivot");
            w.add_scaled(row, &f.neg());
            for (a, b) in combo.iter_mut().zip(rc) {
                *a = a.sub(&b.mul(&f));
            }
        }
        if w.is_zero() {
            images.truncate(k + 1);
            return Ok(Krylov { images, mu: combo });
        }
        pivots.insert(w.leading().expect("nonzero").0.clone(), rows.len());
        rows.push((w, combo));
        images.push(ad_unchecked(alg, p, &images[k]));
    }
    Err(Error::FactorizationGap(format!("no linear dependence among the first {} adjoint images", bound + 1)))
}

/// Factors a monic polynomial by trial division against candidate roots.
fn split_against(mu: &[Scalar], candidates: &[GammaMonomial]) -> (Vec<GammaMonomial>, Vec<Scalar>) {
    let mut rest = mu.to_vec();
    let mut roots = Vec::new();
    for g in candidates {
        let a = g.to_scalar();
        while rest.len() > 1 {
            match div_linear(&rest, &a) {
                Some(q) => {
                    rest = q;
                    roots.push(g.clone());
                }
                None => break,
            }
        }
    }
    (roots, rest)
}

struct MinimalData {
    krylov: Krylov,
    roots: Vec<GammaMonomial>,
}

fn minimal_data(alg: &Algebra, p: usize, y: &Element) -> Result<MinimalData> {
    require_localized(alg, p)?;
    if y.is_zero() {
        return Err(Error::ZeroElement);
    }
    let f = fa_roots(alg, p, y)?;
    let kr = krylov(alg, p, y, f.degree())?;
    let (roots, rest) = split_against(&kr.mu, &f.distinct());
    if rest.len() > 1 {
        let params = alg.presentation().params();
        let text: Vec<String> = rest.iter().map(|c| c.format(params)).collect();
        return Err(Error::FactorizationGap(format!(
            "minimal polynomial factor with coefficients [{}] has no root among {}",
            text.join(", "),
            f.format(params)
        )));
    }
    Ok(MinimalData { krylov: kr, roots })
}

/// Minimal polynomial of `Ad_x` on `W(y)`, or a Jordan pair when it has a
/// repeated root.
pub fn minimal_ad_polynomial(alg: &Algebra, p: usize, y: &Element) -> Result<MinimalAd> {
    let data = minimal_data(alg, p, y)?;
    let mu = SplitPolynomial::new(data.roots);
    let Some(alpha) = mu.distinct().into_iter().find(|g| mu.multiplicity(g) > 1) else {
        return Ok(MinimalAd::Diagonalizable(mu));
    };
    // v = [μ / (t - α)²](Ad) y, u = (Ad - α) v
    let a = alpha.to_scalar();
    let once = div_linear(&data.krylov.mu, &a).expect("root");
    let twice = div_linear(&once, &a).expect("double root");
    let v = data.krylov.apply(&twice);
    let u = ad_unchecked(alg, p, &v).sub(&v.scale_gamma(&alpha));
    let cert = weyl_certificate(alg, p, &u, &v, &alpha)?;
    Ok(MinimalAd::NonDiagonalizable(Box::new(cert)))
}

/// Eigen-decomposition of `y` together with the denominators introduced.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub components: Vec<EigenComponent>,
    /// Pairs `(γ_m, γ_k)` whose difference was divided by.
    pub denominators: Vec<(GammaMonomial, GammaMonomial)>,
}

/// `y = Σ x^(m)` with `Ad x^(m) = γ_m x^(m)`, using the projectors
/// `x^(m) = μ_m(Ad) y / Π_{k≠m} (γ_m - γ_k)`.
pub fn eigen_decompose(alg: &Algebra, p: usize, y: &Element) -> Result<Decomposition> {
    let data = minimal_data(alg, p, y)?;
    let mu = SplitPolynomial::new(data.roots.clone());
    if !mu.is_squarefree() {
        return match minimal_ad_polynomial(alg, p, y)? {
            MinimalAd::NonDiagonalizable(cert) => Err(Error::WeylDetected(cert)),
            MinimalAd::Diagonalizable(_) => unreachable!("repeated root"),
        };
    }
    let gammas = mu.roots();
    let mut components = Vec::new();
    let mut denominators: Vec<(GammaMonomial, GammaMonomial)> = Vec::new();
    for (m, gm) in gammas.iter().enumerate() {
        let others: Vec<GammaMonomial> =
            gammas.iter().enumerate().filter(|&(k, _)| k != m).map(|(_, g)| g.clone()).collect();
        let mut denom = Scalar::one();
        for gk in &others {
            denom = denom.mul(&gm.to_scalar().sub(&gk.to_scalar()));
            let seen = denominators.iter().any(|(a, b)| (a == gm && b == gk) || (a == gk && b == gm));
            if !seen {
                denominators.push((gm.clone(), gk.clone()));
            }
        }
        let proj = SplitPolynomial::new(others).coefficients();
        let element = data.krylov.apply(&proj).scale(&denom.inv()?);
        components.push(EigenComponent { eigenvalue: gm.clone(), element });
    }
    let mut total = Element::zero(alg.n());
    for c in &components {
        total = total.add(&c.element);
        if ad_unchecked(alg, p, &c.element) != c.element.scale_gamma(&c.eigenvalue) {
            return Err(Error::FactorizationGap("eigen-equation failed".to_string()));
        }
    }
    if &total != y {
        return Err(Error::FactorizationGap("components do not sum to the input".to_string()));
    }
    Ok(Decomposition { components, denominators })
}

/// Packages a Jordan pair after checking `Ad u = α u` and `Ad v = u + α v`.
pub fn weyl_certificate(
    alg: &Algebra,
    p: usize,
    u: &Element,
    v: &Element,
    alpha: &GammaMonomial,
) -> Result<WeylCertificate> {
    require_localized(alg, p)?;
    if u.is_zero() {
        return Err(Error::InvalidJordanPair("u is zero".to_string()));
    }
    if ad_unchecked(alg, p, u) != u.scale_gamma(alpha) {
        return Err(Error::InvalidJordanPair("Ad u != alpha u".to_string()));
    }
    if ad_unchecked(alg, p, v) != u.add(&v.scale_gamma(alpha)) {
        return Err(Error::InvalidJordanPair("Ad v != u + alpha v".to_string()));
    }
    Ok(WeylCertificate {
        pivot: p,
        u: u.clone(),
        v: v.clone(),
        alpha: alpha.clone(),
        presentation: alg.presentation().clone(),
    })
}

/// Twelve elements tested against
/// `av = sd`, `ub = ct`, `zu = ps`, `vq = tw`, `pabw - zcdq = zuvq`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylCriterionWitness {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub d: Element,
    pub u: Element,
    pub v: Element,
    pub s: Element,
    pub t: Element,
    pub z: Element,
    pub p: Element,
    pub w: Element,
    pub q: Element,
}

impl WeylCriterionWitness {
    /// All twelve letters equal to `e`.
    pub fn constant(e: Element) -> Self {
        WeylCriterionWitness {
            a: e.clone(),
            b: e.clone(),
            c: e.clone(),
            d: e.clone(),
            u: e.clone(),
            v: e.clone(),
            s: e.clone(),
            t: e.clone(),
            z: e.clone(),
            p: e.clone(),
            w: e.clone(),
            q: e,
        }
    }

    fn letters(&self) -> [(&'static str, &Element); 12] {
        [
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("d", &self.d),
            ("u", &self.u),
            ("v", &self.v),
            ("s", &self.s),
            ("t", &self.t),
            ("z", &self.z),
            ("p", &self.p),
            ("w", &self.w),
            ("q", &self.q),
        ]
    }
}

pub fn check_weyl_criterion(alg: &Algebra, w: &WeylCriterionWitness) -> Result<bool> {
    for (name, e) in w.letters() {
        if e.is_zero() {
            return Err(Error::ZeroWitness(name.to_string()));
        }
        alg.check(e)?;
    }
    let m = |a: &Element, b: &Element| alg.mul(a, b);
    let m4 = |a: &Element, b: &Element, c: &Element, d: &Element| alg.mul_all([a, b, c, d]);
    Ok(m(&w.a, &w.v) == m(&w.s, &w.d)
        && m(&w.u, &w.b) == m(&w.c, &w.t)
        && m(&w.z, &w.u) == m(&w.p, &w.s)
        && m(&w.v, &w.q) == m(&w.t, &w.w)
        && m4(&w.p, &w.a, &w.b, &w.w).sub(&m4(&w.z, &w.c, &w.d, &w.q)) == m4(&w.z, &w.u, &w.v, &w.q))
}

/// Backtracking search for a witness with every letter drawn from
/// `candidates`; the four binomial identities prune before the last one is
/// tested.
pub fn search_weyl_witness(alg: &Algebra, candidates: &[Element]) -> Option<WeylCriterionWitness> {
    let k = candidates.len();
    let mut prod: HashMap<(usize, usize), Element> = HashMap::new();
    let mut pair = |i: usize, j: usize| -> Element {
        prod.entry((i, j)).or_insert_with(|| alg.mul(&candidates[i], &candidates[j])).clone()
    };
    // (a, v, s, d) with av = sd, and likewise for (u, b, c, t)
    let mut quads = Vec::new();
    for a in 0..k {
        for v in 0..k {
            let av = pair(a, v);
            for s in 0..k {
                for d in 0..k {
                    if pair(s, d) == av {
                        quads.push((a, v, s, d));
                    }
                }
            }
        }
    }
    for &(a, v, s, d) in &quads {
        for u in 0..k {
            for b in 0..k {
                let ub = pair(u, b);
                for c in 0..k {
                    for t in 0..k {
                        if pair(c, t) != ub {
                            continue;
                        }
                        for z in 0..k {
                            for p in 0..k {
                                if pair(z, u) != pair(p, s) {
                                    continue;
                                }
                                for q in 0..k {
                                    for w in 0..k {
                                        if pair(v, q) != pair(t, w) {
                                            continue;
                                        }
                                        let lhs =
                                            alg.mul(&pair(p, a), &pair(b, w)).sub(&alg.mul(&pair(z, c), &pair(d, q)));
                                        if lhs == alg.mul(&pair(z, u), &pair(v, q)) {
                                            let e = |i: usize| candidates[i].clone();
                                            return Some(WeylCriterionWitness {
                                                a: e(a),
                                                b: e(b),
                                                c: e(c),
                                                d: e(d),
                                                u: e(u),
                                                v: e(v),
                                                s: e(s),
                                                t: e(t),
                                                z: e(z),
                                                p: e(p),
                                                w: e(w),
                                                q: e(q),
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Assignment;

    fn weyl(c_is_one: bool) -> Algebra {
        let params = ParameterSpace::new(["c"]).unwrap();
        let mut p = Presentation::new(params.clone(), 2);
        p.set_q(0, 1, params.parse_gamma("c^-1").unwrap());
        p.set_relation(0, 1, Element::one(2));
        let mut p = p.localize(1).unwrap();
        if c_is_one {
            p = p.specialize(&Assignment::from_ints(&params, &[("c", 1)]).unwrap()).unwrap();
        }
        Algebra::new(p).unwrap()
    }

    fn el(alg: &Algebra, s: &str) -> Element {
        Element::parse(s, alg.presentation().params(), alg.n()).unwrap()
    }

    #[test]
    fn ad_of_y() {
        let alg = weyl(false);
        assert_eq!(ad(&alg, 1, &el(&alg, "x1")).unwrap(), el(&alg, "c*x1 - c*x2^-1"));
        assert_eq!(ad(&alg, 1, &el(&alg, "x2")).unwrap(), el(&alg, "x2"));
    }

    #[test]
    fn ore_shift_of_y() {
        let alg = weyl(false);
        let (n, b1) = ore_left_shift(&alg, 1, &el(&alg, "x1")).unwrap();
        assert_eq!(n, 2);
        assert_eq!(b1, el(&alg, "c^2*x1*x2 - c^2 - c"));
        assert_eq!(ore_left_shift(&alg, 1, &el(&alg, "x2")).unwrap(), (1, el(&alg, "x2")));
        assert_eq!(ore_left_shift(&alg, 1, &el(&alg, "3")).unwrap(), (1, el(&alg, "3")));
    }

    #[test]
    fn roots_and_decomposition() {
        let alg = weyl(false);
        let sp = alg.presentation().params().clone();
        let y = el(&alg, "x1");
        let f = fa_roots(&alg, 1, &y).unwrap();
        assert_eq!(f.roots(), &[sp.parse_gamma("c").unwrap(), GammaMonomial::one()]);
        let d = eigen_decompose(&alg, 1, &y).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].element, el(&alg, "x1 - (c/(c - 1))*x2^-1"));
        assert_eq!(d.components[1].element, el(&alg, "(c/(c - 1))*x2^-1"));
        assert_eq!(d.denominators.len(), 1);
    }

    #[test]
    fn jordan_pair_at_c_one() {
        let alg = weyl(true);
        match minimal_ad_polynomial(&alg, 1, &el(&alg, "x1")).unwrap() {
            MinimalAd::NonDiagonalizable(cert) => {
                assert_eq!(cert.u, el(&alg, "-x2^-1"));
                assert_eq!(cert.v, el(&alg, "x1"));
                assert!(cert.alpha.is_one());
                cert.verify().unwrap();
            }
            other => panic!("expected a Jordan pair, got {other:?}"),
        }
        let x = el(&alg, "x2");
        assert!(matches!(weyl_certificate(&alg, 1, &x, &x, &GammaMonomial::one()), Err(Error::InvalidJordanPair(_))));
    }

    #[test]
    fn criterion_forced_outcomes() {
        let alg = weyl(true);
        let one = Element::one(2);
        assert!(!check_weyl_criterion(&alg, &WeylCriterionWitness::constant(one.clone())).unwrap());
        let mut w = WeylCriterionWitness::constant(one.clone());
        w.a = el(&alg, "2");
        assert!(!check_weyl_criterion(&alg, &w).unwrap());
        w.b = Element::zero(2);
        assert_eq!(check_weyl_criterion(&alg, &w), Err(Error::ZeroWitness("b".to_string())));
    }
}
