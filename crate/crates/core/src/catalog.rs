//! Builders for quantum matrices, quantum Weyl algebras and U_q(n⁺) of sl₃,
//! with the twisted presentations the transform is expected to reach.
//!
//! U_q(n⁺) uses `E_12 = E_1 E_2 - q^{-1} E_2 E_1` in the convex order
//! `E_1, E_12, E_2`. With this convention the semicommutation units are
//! `q^{(β_i, β_j)}` for the pairing of [`RootDatum3`]; conventions that
//! swap `q` and `q^{-1}` give the inverse matrix.

use crate::algebra::{Algebra, Element, Presentation};
use crate::error::{Error, Result};
use crate::scalar::{GammaMonomial, ParameterSpace};

pub const NAMES: [&str; 3] = ["quantum_matrices", "quantum_weyl", "uq_sl3"];

/// Matrices `P`, `Q` and the scalar `c` with `p_ij q_ij = c^{sgn(j-i)}` and
/// `p_ij p_ji = q_ij q_ji = p_ii = q_ii = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiParamSpec {
    pub n: usize,
    pub params: ParameterSpace,
    pub p: Vec<Vec<GammaMonomial>>,
    pub q: Vec<Vec<GammaMonomial>>,
    pub c: GammaMonomial,
}

impl MultiParamSpec {
    pub fn new(
        params: ParameterSpace,
        p: Vec<Vec<GammaMonomial>>,
        q: Vec<Vec<GammaMonomial>>,
        c: GammaMonomial,
    ) -> Result<Self> {
        let spec = MultiParamSpec { n: p.len(), params, p, q, c };
        spec.verify()?;
        Ok(spec)
    }

    /// Free parameters `p_i_j` for `i < j` and `c`; `q_ij = c p_ij^{-1}`.
    pub fn generic(n: usize) -> Self {
        let mut names = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                names.push(format!("p_{i}_{j}"));
            }
        }
        names.push("c".to_string());
        let params = ParameterSpace::new(names).expect("generic parameter names");
        let c = GammaMonomial::param(params.len() - 1, 1);
        let mut p = vec![vec![GammaMonomial::one(); n]; n];
        let mut q = vec![vec![GammaMonomial::one(); n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                let pij = GammaMonomial::param(k, 1);
                let qij = c.mul(&pij.inv());
                p[j][i] = pij.inv();
                q[j][i] = qij.inv();
                p[i][j] = pij;
                q[i][j] = qij;
                k += 1;
            }
        }
        MultiParamSpec { n, params, p, q, c }
    }

    pub fn verify(&self) -> Result<()> {
        let n = self.n;
        let mut bad = Vec::new();
        if self.p.len() != n || self.q.len() != n || self.p.iter().chain(&self.q).any(|r| r.len() != n) {
            return Err(Error::SpecViolation("P and Q must be n x n".to_string()));
        }
        for i in 0..n {
            if !self.p[i][i].is_one() || !self.q[i][i].is_one() {
                bad.push(format!("p_{0}{0} and q_{0}{0} must be 1", i + 1));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let want = if j > i { self.c.clone() } else { self.c.inv() };
                if self.p[i][j].mul(&self.q[i][j]) != want {
                    bad.push(format!("p_{0}{1} q_{0}{1} != c^sgn", i + 1, j + 1));
                }
                if !self.p[i][j].mul(&self.p[j][i]).is_one() || !self.q[i][j].mul(&self.q[j][i]).is_one() {
                    bad.push(format!("entries ({}, {}) are not reciprocal", i + 1, j + 1));
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::SpecViolation(bad.join("; ")))
        }
    }
}

/// The convex order `β_1 = α_1, β_2 = α_1 + α_2, β_3 = α_2` of A_2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum3 {
    /// Coordinates of `β_s` in the simple roots.
    pub roots: [[i64; 2]; 3],
}

impl Default for RootDatum3 {
    fn default() -> Self {
        RootDatum3 { roots: [[1, 0], [1, 1], [0, 1]] }
    }
}

impl RootDatum3 {
    /// `(β_i, β_j)` from the Cartan matrix of A_2.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        const CARTAN: [[i64; 2]; 2] = [[2, -1], [-1, 2]];
        let (a, b) = (self.roots[i], self.roots[j]);
        let mut s = 0;
        for k in 0..2 {
            for l in 0..2 {
                s += a[k] * CARTAN[k][l] * b[l];
            }
        }
        s
    }
}

fn quantum_matrix_index(n: usize, row: usize, col: usize) -> usize {
    row * n + col
}

/// The unit of `a_ti a_sj` (first factor lower in row-major order), and
/// whether the pair has the tail `(p_ts^{-1} - q_ts) a_si a_tj`.
///
/// The tail coefficient uses the row pair `(t, s)` twice; with `q_ij` in
/// place of `q_ts` the overlaps fail the diamond check from `n = 3` on.
fn quantum_matrix_unit(spec: &MultiParamSpec, (t, i): (usize, usize), (s, j): (usize, usize)) -> (GammaMonomial, bool) {
    let (p, q) = (&spec.p, &spec.q);
    if (i < j && t < s) || (i > j && t > s) {
        (q[t][s].mul(&q[i][j].inv()), true)
    } else {
        (p[t][s].inv().mul(&q[i][j].inv()), false)
    }
}

/// Quantum matrices `M_{P,Q,c}(n)` on `a_11, a_12, ..., a_nn`.
pub fn quantum_matrices(spec: &MultiParamSpec) -> Result<Presentation> {
    spec.verify()?;
    let n = spec.n;
    let size = n * n;
    let mut pres = Presentation::new(spec.params.clone(), size);
    let mut names = Vec::new();
    for t in 0..n {
        for i in 0..n {
            names.push(format!("a_{}{}", t + 1, i + 1));
        }
    }
    pres.set_names(names);
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|t| (0..n).map(move |i| (t, i))).collect();
    // units first: tails are normal-ordered with them
    for (a, &ga) in cells.iter().enumerate() {
        for &gb in &cells[a + 1..] {
            let (unit, _) = quantum_matrix_unit(spec, ga, gb);
            pres.set_q(quantum_matrix_index(n, ga.0, ga.1), quantum_matrix_index(n, gb.0, gb.1), unit);
        }
    }
    for (a, &(t, i)) in cells.iter().enumerate() {
        for &(s, j) in &cells[a + 1..] {
            let (_, tail) = quantum_matrix_unit(spec, (t, i), (s, j));
            if !tail {
                continue;
            }
            // a_si a_tj with a_tj the lower generator: a_si a_tj = q(lo, hi)^{-1} a_tj a_si
            let lo = quantum_matrix_index(n, t, j);
            let hi = quantum_matrix_index(n, s, i);
            let coeff = spec.p[t][s].inv().to_scalar().sub(&spec.q[t][s].to_scalar());
            let coeff = coeff.mul(&pres.q(lo, hi).inv().to_scalar());
            let mut m = vec![0; size];
            m[lo] = 1;
            m[hi] = 1;
            pres.set_relation(
                quantum_matrix_index(n, t, i),
                quantum_matrix_index(n, s, j),
                Element::monomial(m, coeff),
            );
        }
    }
    Ok(pres)
}

fn weyl_names(n: usize) -> Vec<String> {
    if n == 1 {
        return vec!["y".to_string(), "x".to_string()];
    }
    let ys = (1..=n).map(|i| format!("y_{i}"));
    ys.chain((1..=n).map(|i| format!("x_{i}"))).collect()
}

/// Quantum Weyl algebra `A_{P,Q,c}(n)` on `y_1, ..., y_n, x_1, ..., x_n`.
pub fn quantum_weyl(spec: &MultiParamSpec) -> Result<Presentation> {
    spec.verify()?;
    let n = spec.n;
    let size = 2 * n;
    let (y, x) = (|i: usize| i, |i: usize| n + i);
    let mut pres = Presentation::new(spec.params.clone(), size);
    pres.set_names(weyl_names(n));
    for i in 0..n {
        for j in i + 1..n {
            pres.set_q(x(i), x(j), spec.q[i][j].inv());
            pres.set_q(y(i), y(j), spec.p[i][j].clone());
        }
        for j in 0..n {
            let unit = match i.cmp(&j) {
                std::cmp::Ordering::Less => spec.p[j][i].clone(),
                std::cmp::Ordering::Greater => spec.q[i][j].clone(),
                std::cmp::Ordering::Equal => spec.c.inv(),
            };
            pres.set_q(y(i), x(j), unit);
        }
    }
    let one = crate::scalar::Scalar::one();
    let c = spec.c.to_scalar();
    let ci = spec.c.inv().to_scalar();
    // tails[i] = T_i, and x_i y_i = c y_i x_i - c T_i
    let mut tails: Vec<Element> = vec![Element::zero(size); n];
    for i in (0..n).rev() {
        let mut t = Element::one(size);
        for a in i + 1..n {
            let mut m = vec![0; size];
            m[y(a)] = 1;
            m[x(a)] = 1;
            let xy = Element::monomial(m, c.clone()).sub(&tails[a].scale(&c));
            t = t.add(&xy.scale(&ci.sub(&one)));
        }
        tails[i] = t;
    }
    for (i, t) in tails.into_iter().enumerate() {
        pres.set_relation(y(i), x(i), t);
    }
    Ok(pres)
}

/// U_q(n⁺) of sl₃ on `E_1, E_12, E_2`.
pub fn uq_nplus_sl3() -> Presentation {
    sl3_with_tail("x2")
}

/// The sl₃ presentation with the tail of `(E_1, E_2)` replaced by
/// `E_12 E_2`, which breaks PBW consistency at the only triple.
///
/// Replacing the tail by any polynomial in `E_12` alone, `E_12²` say, keeps
/// the presentation consistent: both reductions of `E_2 E_12 E_1` differ by
/// `E_12 r - r E_12`.
pub fn uq_nplus_sl3_tampered() -> Presentation {
    sl3_with_tail("x2*x3")
}

/// The sl₃ presentation with an arbitrary tail for `(E_1, E_2)`.
pub fn uq_nplus_sl3_with_tail(tail: &Element) -> Presentation {
    let mut p = uq_nplus_sl3();
    p.set_relation(0, 2, tail.clone());
    p
}

fn sl3_with_tail(tail: &str) -> Presentation {
    let params = ParameterSpace::new(["q"]).expect("q");
    let mut p = Presentation::new(params.clone(), 3);
    p.set_names(vec!["E1".into(), "E12".into(), "E2".into()]);
    let q = GammaMonomial::param(0, 1);
    p.set_q(0, 1, q.clone());
    p.set_q(1, 2, q.clone());
    p.set_q(0, 2, q.inv());
    p.set_relation(0, 2, Element::parse(tail, &params, 3).expect("tail"));
    p
}

/// The twisted Laurent presentation listed for a family, built from the
/// twisted relations directly.
pub fn expected_twisted(name: &str, n: usize) -> Result<Presentation> {
    let mut pres = match name {
        "quantum_matrices" => {
            let spec = MultiParamSpec::generic(n);
            let mut pres = Presentation::new(spec.params.clone(), n * n);
            let cells: Vec<(usize, usize)> = (0..n).flat_map(|t| (0..n).map(move |i| (t, i))).collect();
            for (a, &(t, i)) in cells.iter().enumerate() {
                for (b, &(s, j)) in cells.iter().enumerate().skip(a + 1) {
                    // y_ti y_sj = q_ts q_ij^{-1} y_sj y_ti, or p_ts^{-1} q_ij^{-1}
                    let unit = if (i < j && t < s) || (i > j && t > s) {
                        spec.q[t][s].mul(&spec.q[i][j].inv())
                    } else {
                        spec.p[t][s].inv().mul(&spec.q[i][j].inv())
                    };
                    pres.set_q(a, b, unit);
                }
            }
            pres
        }
        "quantum_weyl" => {
            let spec = MultiParamSpec::generic(n);
            let mut pres = Presentation::new(spec.params.clone(), 2 * n);
            for i in 0..n {
                for j in 0..n {
                    if i < j {
                        pres.set_q(n + i, n + j, spec.q[i][j].inv());
                        pres.set_q(i, j, spec.p[i][j].clone());
                        pres.set_q(i, n + j, spec.p[j][i].clone());
                    } else if i > j {
                        pres.set_q(i, n + j, spec.q[i][j].clone());
                    } else {
                        // Y_i X_i = c^{-1} X_i Y_i
                        pres.set_q(i, n + i, spec.c.inv());
                    }
                }
            }
            pres
        }
        "uq_sl3" => {
            let params = ParameterSpace::new(["q"]).expect("q");
            let mut pres = Presentation::new(params, 3);
            let roots = RootDatum3::default();
            for i in 0..3 {
                for j in i + 1..3 {
                    pres.set_q(i, j, GammaMonomial::param(0, roots.pairing(i, j)));
                }
            }
            pres
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    for k in 0..pres.n() {
        pres.set_invertible(k, true);
    }
    Ok(pres)
}

/// Builds a catalog entry by name; `n` is ignored for `uq_sl3`.
pub fn build(name: &str, n: usize) -> Result<Presentation> {
    match name {
        "quantum_matrices" => quantum_matrices(&MultiParamSpec::generic(n)),
        "quantum_weyl" => quantum_weyl(&MultiParamSpec::generic(n)),
        "uq_sl3" => Ok(uq_nplus_sl3()),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Validation diagnostics plus the overlap check, as one result.
pub fn check(p: &Presentation) -> Result<()> {
    let diags = p.validate();
    if !diags.is_empty() {
        return Err(Error::InvalidPresentation(diags));
    }
    Algebra::new(p.clone())?;
    crate::algebra::check_pbw_consistency(p).map_err(Error::Inconsistent)
}
