//! Presentations of Q-solvable algebras and arithmetic in PBW normal form.
//!
//! A presentation with generators `x_1, ..., x_n` (0-based indices in the
//! API, 1-based in text) carries, for every pair `i < j`, a unit `q_ij ∈ Γ`
//! and a tail `r_ij` in the subalgebra generated by `x_{i+1}, ..., x_n`:
//!
//! ```text
//! x_i x_j - q_ij x_j x_i = r_ij
//! ```
//!
//! Generators may be marked invertible. Invertible generators above the
//! pivot must semicommute with everything (zero tails); the pivot itself may
//! keep tails with lower generators.

mod arith;
mod element;
mod rewrite;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{Assignment, GammaMonomial, ParameterSpace};

pub use arith::Algebra;
pub(crate) use element::format_monomial;
pub use element::{Element, Exponents};
pub use rewrite::{check_pbw_consistency, Counterexample, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n: usize,
    params: ParameterSpace,
    names: Vec<String>,
    qmat: Vec<Vec<GammaMonomial>>,
    relations: BTreeMap<(usize, usize), Element>,
    invertible: Vec<bool>,
    pivot: Option<usize>,
}

fn pair_label(i: usize, j: usize) -> String {
    if i < 9 && j < 9 {
        format!("r_{}{}", i + 1, j + 1)
    } else {
        format!("r_{}_{}", i + 1, j + 1)
    }
}

impl Presentation {
    /// `n` commuting generators with no relations.
    pub fn new(params: ParameterSpace, n: usize) -> Self {
        Presentation {
            n,
            params,
            names: (1..=n).map(|i| format!("x{i}")).collect(),
            qmat: vec![vec![GammaMonomial::one(); n]; n],
            relations: BTreeMap::new(),
            invertible: vec![false; n],
            pivot: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &ParameterSpace {
        &self.params
    }

    /// Display names; these default to `x1, ..., xn`.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn set_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.n);
        self.names = names;
    }

    /// `q_ij` for any ordered pair; `q_ji = q_ij^{-1}` and `q_ii = 1`.
    pub fn q(&self, i: usize, j: usize) -> &GammaMonomial {
        &self.qmat[i][j]
    }

    /// Sets `q_ij` (and `q_ji` to its inverse). Requires `i != j`.
    pub fn set_q(&mut self, i: usize, j: usize, g: GammaMonomial) {
        assert_ne!(i, j);
        self.qmat[j][i] = g.inv();
        self.qmat[i][j] = g;
    }

    /// Entries `q_ij` for `i < j`, row-major.
    pub fn q_upper(&self) -> Vec<GammaMonomial> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(self.qmat[i][j].clone());
            }
        }
        out
    }

    /// The tail `r_ij` for `i < j`, `None` when it is zero.
    pub fn relation(&self, i: usize, j: usize) -> Option<&Element> {
        debug_assert!(i < j);
        self.relations.get(&(i, j))
    }

    pub fn relations(&self) -> impl Iterator<Item = (&(usize, usize), &Element)> {
        self.relations.iter()
    }

    /// Sets the tail `r_ij` for `i < j`; zero removes it.
    pub fn set_relation(&mut self, i: usize, j: usize, tail: Element) {
        assert!(i < j && j < self.n, "relation index out of range");
        assert_eq!(tail.n(), self.n, "tail over the wrong number of generators");
        if tail.is_zero() {
            self.relations.remove(&(i, j));
        } else {
            self.relations.insert((i, j), tail);
        }
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.invertible[i]
    }

    pub fn invertible(&self) -> &[bool] {
        &self.invertible
    }

    pub fn set_invertible(&mut self, i: usize, flag: bool) {
        self.invertible[i] = flag;
    }

    pub fn pivot(&self) -> Option<usize> {
        self.pivot
    }

    pub fn set_pivot(&mut self, pivot: Option<usize>) {
        self.pivot = pivot;
    }

    pub fn with_pivot(&self, pivot: Option<usize>) -> Presentation {
        let mut p = self.clone();
        p.pivot = pivot;
        p
    }

    /// True if `x_i` has a zero tail with every other generator.
    pub fn semicommutes(&self, i: usize) -> bool {
        (0..self.n).all(|k| k == i || self.relation(i.min(k), i.max(k)).is_none())
    }

    pub fn is_twisted(&self) -> bool {
        self.relations.is_empty()
    }

    /// Every violated structural constraint; empty iff the presentation is valid.
    pub fn validate(&self) -> Vec<String> {
        let mut diags = Vec::new();
        let n = self.n;
        if self.names.len() != n || self.invertible.len() != n || self.qmat.len() != n {
            diags.push("inconsistent generator count".to_string());
            return diags;
        }
        for i in 0..n {
            if !self.qmat[i][i].is_one() {
                diags.push(format!("q_{}{} must be 1", i + 1, i + 1));
            }
            for j in i + 1..n {
                if self.qmat[i][j].mul(&self.qmat[j][i]) != GammaMonomial::one() {
                    diags.push(format!("q_{}{} q_{}{} != 1", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
        for (&(i, j), tail) in &self.relations {
            let label = pair_label(i, j);
            if tail.n() != n {
                diags.push(format!("{label} has the wrong length"));
                continue;
            }
            if !tail.supported_above(i) {
                diags.push(format!("{label} not in R_{}", i + 2));
            }
            for (m, _) in tail.terms() {
                if let Some(k) = (0..n).find(|&k| m[k] < 0 && !self.invertible[k]) {
                    diags.push(format!("{label} has a negative power of non-invertible x{}", k + 1));
                    break;
                }
            }
        }
        if let Some(p) = self.pivot {
            if p >= n {
                diags.push(format!("pivot x{} out of range", p + 1));
                return diags;
            }
            for k in p + 1..n {
                if !self.invertible[k] {
                    diags.push(format!("x{} above the pivot is not invertible", k + 1));
                }
            }
        }
        for k in 0..n {
            if self.invertible[k] && Some(k) != self.pivot && !self.semicommutes(k) {
                diags.push(format!("invertible x{} does not semicommute with all generators", k + 1));
            }
        }
        diags
    }

    /// The associated graded algebra: same units, all tails dropped.
    pub fn associated_graded(&self) -> Presentation {
        let mut p = self.clone();
        p.relations.clear();
        p
    }

    /// Marks the pivot `x_i` invertible; every generator above it must
    /// already be invertible and semicommuting.
    pub fn localize(&self, i: usize) -> Result<Presentation> {
        if i >= self.n {
            return Err(Error::StageShapeViolation(format!("no generator x{}", i + 1)));
        }
        for k in i + 1..self.n {
            if !self.invertible[k] || !self.semicommutes(k) {
                return Err(Error::StageShapeViolation(format!(
                    "x{} above pivot x{} is not an invertible semicommuting generator",
                    k + 1,
                    i + 1
                )));
            }
        }
        let mut p = self.clone();
        p.invertible[i] = true;
        p.pivot = Some(i);
        let diags = p.validate();
        if !diags.is_empty() {
            return Err(Error::StageShapeViolation(diags.join("; ")));
        }
        Ok(p)
    }

    /// Evaluates every coefficient at `point`; the parameter list becomes empty.
    pub fn specialize(&self, point: &Assignment) -> Result<Presentation> {
        if point.space() != &self.params {
            return Err(Error::InadmissiblePoint("assignment is over a different parameter list".to_string()));
        }
        let mut p = self.clone();
        p.params = ParameterSpace::empty();
        for i in 0..self.n {
            for j in 0..self.n {
                p.qmat[i][j] = GammaMonomial::constant(self.qmat[i][j].eval(point));
            }
        }
        p.relations.clear();
        for (&(i, j), tail) in &self.relations {
            p.set_relation(i, j, tail.specialize(point)?);
        }
        Ok(p)
    }

    /// The defining relation of a pair as readable text.
    pub fn relation_text(&self, i: usize, j: usize) -> String {
        let (a, b) = (&self.names[i], &self.names[j]);
        let q = self.q(i, j);
        let qs = if q.is_one() { String::new() } else { format!("({})*", q.format(&self.params)) };
        match self.relation(i, j) {
            None => format!("{a} {b} = {qs}{b} {a}"),
            Some(t) => format!("{a} {b} - {qs}{b} {a} = {}", t.format_named(&self.params, &self.names)),
        }
    }
}
