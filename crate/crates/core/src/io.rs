//! JSON file formats. Generator indices are 1-based in files.
//!
//! A presentation:
//!
//! ```json
//! {
//!   "params": ["c"],
//!   "n": 2,
//!   "names": ["y", "x"],
//!   "q": [{ "i": 1, "j": 2, "gamma": "c^-1" }],
//!   "relations": [{ "i": 1, "j": 2, "element": "1" }],
//!   "invertible": []
//! }
//! ```
//!
//! A transform result holds `input`, `final` and `stages`; each stage lists
//! its `pivot`, the `presentation` it produces, the new `generators` with
//! their expressions in the previous stage, and the `denominators` used,
//! written `"(γ) - (γ')"`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, Presentation};
use crate::error::{Error, Result};
use crate::gk::{GkResult, GkStage, StageGenerator};
use crate::scalar::{GammaMonomial, ParameterSpace};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct QEntry {
    pub i: usize,
    pub j: usize,
    pub gamma: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RelationEntry {
    pub i: usize,
    pub j: usize,
    pub element: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub params: Vec<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default)]
    pub q: Vec<QEntry>,
    #[serde(default)]
    pub relations: Vec<RelationEntry>,
    #[serde(default)]
    pub invertible: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivot: Option<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    pub expression: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalue: Option<String>,
    #[serde(default)]
    pub eigenvalues: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct StageEntry {
    pub pivot: usize,
    pub presentation: PresentationFile,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub denominators: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    pub input: PresentationFile,
    #[serde(rename = "final")]
    pub final_presentation: PresentationFile,
    pub stages: Vec<StageEntry>,
}

/// Either kind of document.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Presentation(Presentation),
    Result(Box<GkResult>),
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

fn context(what: String) -> impl FnOnce(Error) -> Error {
    move |e| Error::Format(format!("{what}: {e}"))
}

impl PresentationFile {
    pub fn from_presentation(p: &Presentation) -> Self {
        let n = p.n();
        let params = p.params();
        let default_names = (1..=n).all(|i| p.names()[i - 1] == format!("x{i}"));
        let mut q = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !p.q(i, j).is_one() {
                    q.push(QEntry { i: i + 1, j: j + 1, gamma: p.q(i, j).format(params) });
                }
            }
        }
        let relations =
            p.relations().map(|(&(i, j), t)| RelationEntry { i: i + 1, j: j + 1, element: t.format(params) }).collect();
        PresentationFile {
            params: params.names().to_vec(),
            n,
            names: (!default_names).then(|| p.names().to_vec()),
            q,
            relations,
            invertible: (0..n).filter(|&k| p.is_invertible(k)).map(|k| k + 1).collect(),
            pivot: p.pivot().map(|k| k + 1),
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        let params = ParameterSpace::new(self.params.clone())?;
        let n = self.n;
        let mut p = Presentation::new(params.clone(), n);
        let pair = |i: usize, j: usize, what: &str| -> Result<(usize, usize)> {
            if i == 0 || j == 0 || i > n || j > n || i >= j {
                return Err(Error::Format(format!("{what} ({i}, {j}): need 1 <= i < j <= {n}")));
            }
            Ok((i - 1, j - 1))
        };
        if let Some(names) = &self.names {
            if names.len() != n {
                return Err(Error::Format(format!("{} names for {n} generators", names.len())));
            }
            p.set_names(names.clone());
        }
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.q {
            let (i, j) = pair(e.i, e.j, "q entry")?;
            if !seen.insert((i, j)) {
                return Err(Error::Format(format!("q entry ({}, {}) given twice", e.i, e.j)));
            }
            let g = params.parse_gamma(&e.gamma).map_err(context(format!("q entry ({}, {})", e.i, e.j)))?;
            p.set_q(i, j, g);
        }
        let mut seen = std::collections::BTreeSet::new();
        for r in &self.relations {
            let (i, j) = pair(r.i, r.j, "relation")?;
            if !seen.insert((i, j)) {
                return Err(Error::Format(format!("relation ({}, {}) given twice", r.i, r.j)));
            }
            let t = Element::parse(&r.element, &params, n).map_err(context(format!("relation ({}, {})", r.i, r.j)))?;
            p.set_relation(i, j, t);
        }
        for &k in &self.invertible {
            if k == 0 || k > n {
                return Err(Error::Format(format!("invertible index {k} out of range")));
            }
            p.set_invertible(k - 1, true);
        }
        if let Some(k) = self.pivot {
            if k == 0 || k > n {
                return Err(Error::Format(format!("pivot {k} out of range")));
            }
            p.set_pivot(Some(k - 1));
        }
        Ok(p)
    }
}

fn denominator_text(a: &GammaMonomial, b: &GammaMonomial, params: &ParameterSpace) -> String {
    format!("({}) - ({})", a.format(params), b.format(params))
}

fn parse_denominator(text: &str, params: &ParameterSpace) -> Result<(GammaMonomial, GammaMonomial)> {
    let bad = || Error::Format(format!("denominator `{text}` is not of the form (g) - (h)"));
    let inner = text.trim().strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    let (a, b) = inner.split_once(") - (").ok_or_else(bad)?;
    Ok((params.parse_gamma(a)?, params.parse_gamma(b)?))
}

impl ResultFile {
    pub fn from_result(r: &GkResult) -> Self {
        let params = r.input.params();
        let stages = r
            .stages
            .iter()
            .map(|s| StageEntry {
                pivot: s.pivot + 1,
                presentation: PresentationFile::from_presentation(&s.presentation),
                generators: s
                    .generators
                    .iter()
                    .map(|g| GeneratorEntry {
                        name: g.name.clone(),
                        expression: g.expression.format(params),
                        eigenvalue: g.eigenvalue.as_ref().map(|e| e.format(params)),
                        eigenvalues: g.eigenvalues.iter().map(|e| e.format(params)).collect(),
                    })
                    .collect(),
                denominators: s.denominators.iter().map(|(a, b)| denominator_text(a, b, params)).collect(),
            })
            .collect();
        ResultFile {
            input: PresentationFile::from_presentation(&r.input),
            final_presentation: PresentationFile::from_presentation(&r.final_presentation),
            stages,
        }
    }

    pub fn to_result(&self) -> Result<GkResult> {
        let input = self.input.to_presentation().map_err(context("input".to_string()))?;
        let params = input.params().clone();
        let n = input.n();
        let mut stages = Vec::new();
        for (k, s) in self.stages.iter().enumerate() {
            let what = format!("stage {}", k + 1);
            if s.pivot == 0 || s.pivot > n {
                return Err(Error::Format(format!("{what}: pivot {} out of range", s.pivot)));
            }
            let presentation = s.presentation.to_presentation().map_err(context(what.clone()))?;
            let mut generators = Vec::new();
            for g in &s.generators {
                let ctx = || context(format!("{what}, generator {}", g.name));
                generators.push(StageGenerator {
                    name: g.name.clone(),
                    expression: Element::parse(&g.expression, &params, n).map_err(ctx())?,
                    eigenvalue: g.eigenvalue.as_ref().map(|e| params.parse_gamma(e)).transpose().map_err(ctx())?,
                    eigenvalues: g
                        .eigenvalues
                        .iter()
                        .map(|e| params.parse_gamma(e))
                        .collect::<Result<_>>()
                        .map_err(ctx())?,
                });
            }
            let denominators = s
                .denominators
                .iter()
                .map(|d| parse_denominator(d, &params))
                .collect::<Result<_>>()
                .map_err(context(what))?;
            stages.push(GkStage { pivot: s.pivot - 1, presentation, generators, denominators });
        }
        let final_presentation = self.final_presentation.to_presentation().map_err(context("final".to_string()))?;
        Ok(GkResult { input, stages, final_presentation })
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn presentation_to_json(p: &Presentation) -> String {
    pretty(&PresentationFile::from_presentation(p))
}

pub fn presentation_from_json(text: &str) -> Result<Presentation> {
    let f: PresentationFile = serde_json::from_str(text).map_err(json_error)?;
    f.to_presentation()
}

pub fn result_to_json(r: &GkResult) -> String {
    pretty(&ResultFile::from_result(r))
}

pub fn result_from_json(text: &str) -> Result<GkResult> {
    let f: ResultFile = serde_json::from_str(text).map_err(json_error)?;
    f.to_result()
}

/// Parses either a presentation or a transform result.
pub fn document_from_json(text: &str) -> Result<Document> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    if v.get("final").is_some() {
        Ok(Document::Result(Box::new(result_from_json(text)?)))
    } else {
        Ok(Document::Presentation(presentation_from_json(text)?))
    }
}
