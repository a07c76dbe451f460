//! Command payloads and their text, JSON and LaTeX renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::charalg::{irr_character, weyl_dim, DecompositionList};
use crate::e6;
use crate::error::Result;
use crate::graded::{expand_graded, GradedDecomposition, PsiClassification, PsiVerdict};
use crate::lweight::{LFactor, MinimalAffinization, Orientation};
use crate::rootsys::{e6_coords_to_bourbaki, DynkinDiagram, WeightVec};
use crate::verify::SuiteReport;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Terminal settings for text output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TextStyle {
    pub width: usize,
    pub color: bool,
}

impl Default for TextStyle {
    fn default() -> Self {
        Self { width: 100, color: false }
    }
}

impl TextStyle {
    fn paint(&self, s: &str, good: bool) -> String {
        if !self.color {
            return s.to_string();
        }
        let code = if good { 32 } else { 31 };
        format!("\x1b[{code}m{s}\x1b[0m")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document<P> {
    pub schema_version: String,
    pub command: String,
    pub payload: P,
}

impl<P: Serialize> Document<P> {
    pub fn new(command: &str, payload: P) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            payload,
        }
    }

    /// Pretty JSON with object keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("payloads serialize");
        serde_json::to_string_pretty(&value).expect("values serialize")
    }
}

/// Text and LaTeX renderings shared by all payloads.
pub trait Render {
    fn text(&self, style: &TextStyle) -> String;

    fn latex(&self) -> String {
        format!("\\begin{{verbatim}}\n{}\\end{{verbatim}}\n", self.text(&TextStyle::default()))
    }
}

pub fn render<P: Serialize + Render>(doc: &Document<P>, format: Format, style: &TextStyle) -> String {
    match format {
        Format::Json => doc.to_json() + "\n",
        Format::Text => doc.payload.text(style),
        Format::Latex => doc.payload.latex(),
    }
}

/// Columns padded to a common width; numeric-looking cells right aligned.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| {
                if c.parse::<f64>().is_ok() {
                    format!("{c:>w$}")
                } else {
                    format!("{c:<w$}")
                }
            })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = line(headers.to_vec()) + "\n";
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out += &(rule.join("  ") + "\n");
    for row in rows {
        out += &(line(row.iter().map(String::as_str).collect()) + "\n");
    }
    out
}

/// Greedy word wrap.
fn wrap(text: &str, width: usize, indent: &str) -> String {
    let mut out = String::new();
    let mut line = String::from(indent);
    for word in text.split_whitespace() {
        if line.len() > indent.len() && line.len() + 1 + word.len() > width {
            out += line.trim_end();
            out.push('\n');
            line = String::from(indent);
        }
        if line.len() > indent.len() {
            line.push(' ');
        }
        line += word;
    }
    out += line.trim_end();
    out.push('\n');
    out
}

fn vec_str(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// `2\alpha_1-\alpha_3`, or `0` for the zero vector.
fn latex_combination(coords: &[i64], symbol: &str) -> String {
    let mut out = String::new();
    for (k, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = c.unsigned_abs();
        let coef = if mag == 1 { String::new() } else { mag.to_string() };
        let _ = write!(out, "{sign}{coef}\\{symbol}_{}", k + 1);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// ----------------------------------------------------------------- roots

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    pub index: usize,
    pub root: Vec<i64>,
    pub weight: Vec<i64>,
    pub height: i64,
    pub label: Option<String>,
    pub beta_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsPayload {
    pub diagram: String,
    pub rank: usize,
    pub bourbaki: bool,
    pub roots: Vec<RootRecord>,
}

impl RootsPayload {
    pub fn build(d: &DynkinDiagram, only_nonsimple: bool, bourbaki: bool) -> Result<Self> {
        let e6_labels = d.is_e6_preset();
        let mut roots = Vec::new();
        for (k, r) in d.positive_roots().iter().enumerate() {
            if only_nonsimple && r.height() == 1 {
                continue;
            }
            let w = d.root_to_weight(r)?;
            let (root, weight) = if bourbaki && e6_labels {
                (e6_coords_to_bourbaki(r.coords()), e6_coords_to_bourbaki(w.coords()))
            } else {
                (r.coords().to_vec(), w.coords().to_vec())
            };
            roots.push(RootRecord {
                index: k + 1,
                root,
                weight,
                height: r.height(),
                label: if e6_labels { e6::label(r) } else { None },
                beta_index: if e6_labels { e6::beta_index(r) } else { None },
            });
        }
        if e6_labels {
            roots.sort_by_key(|r| (r.beta_index.is_some(), r.beta_index, r.index));
        }
        Ok(Self {
            diagram: d.name().unwrap_or("custom").to_string(),
            rank: d.rank(),
            bourbaki: bourbaki && e6_labels,
            roots,
        })
    }
}

impl Render for RootsPayload {
    fn text(&self, _style: &TextStyle) -> String {
        let rows: Vec<Vec<String>> = self
            .roots
            .iter()
            .map(|r| {
                vec![
                    r.index.to_string(),
                    r.label.clone().unwrap_or_default(),
                    vec_str(&r.root),
                    vec_str(&r.weight),
                    r.height.to_string(),
                ]
            })
            .collect();
        let mut out = format!(
            "{} positive roots of {} (rank {}){}\n",
            self.roots.len(),
            self.diagram,
            self.rank,
            if self.bourbaki { ", Bourbaki order" } else { "" }
        );
        out += &table(&["#", "label", "root", "weight", "height"], &rows);
        out
    }

    fn latex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{lll}\n & simple roots & fundamental weights \\\\\n\\hline\n");
        for r in &self.roots {
            let label = match (&r.label, r.beta_index) {
                (_, Some(j)) => format!("\\beta_{{{j}}}"),
                (Some(l), None) => format!("\\{}", l.replace('_', "_{") + "}"),
                (None, None) => format!("\\gamma_{{{}}}", r.index),
            };
            let _ = writeln!(
                out,
                "${label}$ & ${}$ & ${}$ \\\\",
                latex_combination(&r.root, "alpha"),
                latex_combination(&r.weight, "omega")
            );
        }
        out += "\\end{tabular}\n";
        out
    }
}

// ------------------------------------------------------------- characters

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub weight: Vec<i64>,
    pub mult: String,
    pub orbit_size: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPayload {
    pub diagram: String,
    pub highest_weight: Vec<i64>,
    pub dim: String,
    pub weight: Option<Vec<i64>>,
    pub multiplicity: Option<String>,
    pub dominant_weights: Option<Vec<WeightRecord>>,
}

fn weight_records(d: &DynkinDiagram, mults: &std::collections::BTreeMap<WeightVec, BigInt>) -> Result<Vec<WeightRecord>> {
    let mut v: Vec<_> = mults.iter().collect();
    v.sort_by(|a, b| {
        crate::charalg::height_key(d, b.0)
            .cmp(&crate::charalg::height_key(d, a.0))
            .then_with(|| b.0.cmp(a.0))
    });
    v.into_iter()
        .map(|(mu, m)| {
            Ok(WeightRecord {
                weight: mu.coords().to_vec(),
                mult: m.to_string(),
                orbit_size: d.orbit_size(mu)?.to_string(),
            })
        })
        .collect()
}

impl CharPayload {
    pub fn build(d: &DynkinDiagram, lambda: &WeightVec, mu: Option<&WeightVec>) -> Result<Self> {
        let dim = weyl_dim(d, lambda)?;
        let ch = irr_character(d, lambda)?;
        let (weight, multiplicity, dominant_weights) = match mu {
            Some(mu) => (Some(mu.coords().to_vec()), Some(ch.mult(d, mu)?.to_string()), None),
            None => (None, None, Some(weight_records(d, &ch.mults)?)),
        };
        Ok(Self {
            diagram: d.name().unwrap_or("custom").to_string(),
            highest_weight: lambda.coords().to_vec(),
            dim: dim.to_string(),
            weight,
            multiplicity,
            dominant_weights,
        })
    }
}

impl Render for CharPayload {
    fn text(&self, _style: &TextStyle) -> String {
        let mut out = format!("V{} of {}: dim {}\n", vec_str(&self.highest_weight), self.diagram, self.dim);
        if let (Some(w), Some(m)) = (&self.weight, &self.multiplicity) {
            let _ = writeln!(out, "multiplicity of {}: {m}", vec_str(w));
        }
        if let Some(ws) = &self.dominant_weights {
            let rows: Vec<Vec<String>> = ws
                .iter()
                .map(|w| vec![vec_str(&w.weight), w.mult.clone(), w.orbit_size.clone()])
                .collect();
            out += &table(&["dominant weight", "mult", "orbit"], &rows);
        }
        out
    }

    fn latex(&self) -> String {
        let mut out = format!(
            "% V({}), dim {}\n\\begin{{tabular}}{{lrr}}\nweight & mult & orbit \\\\\n\\hline\n",
            latex_combination(&self.highest_weight, "omega"),
            self.dim
        );
        if let (Some(w), Some(m)) = (&self.weight, &self.multiplicity) {
            let _ = writeln!(out, "${}$ & {m} & \\\\", latex_combination(w, "omega"));
        }
        for w in self.dominant_weights.iter().flatten() {
            let _ = writeln!(
                out,
                "${}$ & {} & {} \\\\",
                latex_combination(&w.weight, "omega"),
                w.mult,
                w.orbit_size
            );
        }
        out += "\\end{tabular}\n";
        out
    }
}

// ----------------------------------------------------------------- graded

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedComponent {
    pub hw: Vec<i64>,
    pub mult: u64,
    pub dim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDegree {
    pub t: u64,
    pub components: Vec<GradedComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandedDegree {
    pub t: u64,
    pub dominant_weights: Vec<WeightRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPayload {
    pub lambda: Vec<i64>,
    pub status: String,
    pub degrees: Vec<GradedDegree>,
    pub dimension_polynomial: Option<String>,
    pub dimension_total: Option<String>,
    pub expanded: Option<Vec<ExpandedDegree>>,
}

impl GradedPayload {
    pub fn build(gd: &GradedDecomposition, dims: bool, expand: bool) -> Result<Self> {
        let e6 = DynkinDiagram::e6();
        let mut degrees = Vec::new();
        for (t, list) in &gd.degrees {
            degrees.push(GradedDegree {
                t: *t,
                components: components(&e6, list)?,
            });
        }
        let (dimension_polynomial, dimension_total) = if dims {
            let p = gd.dimension_polynomial()?;
            (Some(p.to_string()), Some(p.at_one().to_string()))
        } else {
            (None, None)
        };
        let expanded = if expand {
            let ex = expand_graded(&gd.lambda)?;
            let mut v = Vec::new();
            for (t, map) in &ex.degrees {
                v.push(ExpandedDegree {
                    t: *t,
                    dominant_weights: weight_records(&e6, map)?,
                });
            }
            Some(v)
        } else {
            None
        };
        Ok(Self {
            lambda: gd.lambda.m.to_vec(),
            status: gd.status.as_str().to_string(),
            degrees,
            dimension_polynomial,
            dimension_total,
            expanded,
        })
    }
}

fn components(d: &DynkinDiagram, list: &DecompositionList) -> Result<Vec<GradedComponent>> {
    list.iter()
        .map(|(mu, m)| {
            Ok(GradedComponent {
                hw: mu.coords().to_vec(),
                mult: m.to_u64().unwrap_or(u64::MAX),
                dim: weyl_dim(d, mu)?.to_string(),
            })
        })
        .collect()
}

impl Render for GradedPayload {
    fn text(&self, style: &TextStyle) -> String {
        let good = self.status == "proved";
        let mut out = format!(
            "graded character for lambda = {}  [{}]\n",
            vec_str(&self.lambda),
            style.paint(&self.status, good)
        );
        let mut rows = Vec::new();
        for d in &self.degrees {
            for c in &d.components {
                rows.push(vec![d.t.to_string(), vec_str(&c.hw), c.mult.to_string(), c.dim.clone()]);
            }
        }
        out += &table(&["t", "highest weight", "mult", "dim"], &rows);
        if let (Some(p), Some(total)) = (&self.dimension_polynomial, &self.dimension_total) {
            let _ = writeln!(out, "dimensions: {p}  (t = 1: {total})");
        }
        for e in self.expanded.iter().flatten() {
            let _ = writeln!(out, "degree {}:", e.t);
            let rows: Vec<Vec<String>> = e
                .dominant_weights
                .iter()
                .map(|w| vec![vec_str(&w.weight), w.mult.clone(), w.orbit_size.clone()])
                .collect();
            out += &table(&["dominant weight", "mult", "orbit"], &rows);
        }
        out
    }

    fn latex(&self) -> String {
        let mut out = format!(
            "% lambda = {}, status {}\n\\begin{{tabular}}{{rlrr}}\n$t$ & highest weight & mult & dim \\\\\n\\hline\n",
            latex_combination(&self.lambda, "omega"),
            self.status
        );
        for d in &self.degrees {
            for c in &d.components {
                let _ = writeln!(
                    out,
                    "{} & ${}$ & {} & {} \\\\",
                    d.t,
                    latex_combination(&c.hw, "omega"),
                    c.mult,
                    c.dim
                );
            }
        }
        out += "\\end{tabular}\n";
        out
    }
}

// -------------------------------------------------------------------- psi

pub const NOT_COVERED_NOTE: &str =
    "Psi^lambda is nonempty and differs from Psi_nu for every weight nu; no projectivity criterion applies.";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiPayload {
    pub lambda: Vec<i64>,
    pub psi: Vec<usize>,
    pub roots: Vec<Vec<i64>>,
    pub verdict: String,
    pub note: Option<String>,
}

impl PsiPayload {
    pub fn build(lambda: &[i64], c: &PsiClassification) -> Self {
        let mut pairs: Vec<(usize, Vec<i64>)> = c
            .psi
            .iter()
            .map(|r| (e6::beta_index(r).unwrap_or(0), r.coords().to_vec()))
            .collect();
        pairs.sort();
        Self {
            lambda: lambda.to_vec(),
            psi: pairs.iter().map(|p| p.0).collect(),
            roots: pairs.into_iter().map(|p| p.1).collect(),
            verdict: c.verdict.as_str().to_string(),
            note: (c.verdict == PsiVerdict::NotCovered).then(|| NOT_COVERED_NOTE.to_string()),
        }
    }
}

impl Render for PsiPayload {
    fn text(&self, style: &TextStyle) -> String {
        let mut out = format!("lambda = {}\n", vec_str(&self.lambda));
        let list: Vec<String> = self.psi.iter().map(|j| format!("beta_{j}")).collect();
        let body = if list.is_empty() { "(empty)".to_string() } else { list.join(", ") };
        out += &wrap(&format!("Psi = {{{body}}}"), style.width, "");
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if let Some(n) = &self.note {
            out += &wrap(n, style.width, "");
        }
        out
    }

    fn latex(&self) -> String {
        let items: Vec<String> = self.psi.iter().map(|j| format!("\\beta_{{{j}}}")).collect();
        format!(
            "$\\Psi^\\lambda=\\{{{}\\}}$ % verdict: {}\n",
            items.join(","),
            self.verdict
        )
    }
}

// ----------------------------------------------------------------- minaff

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterRecord {
    pub node: usize,
    pub s: i64,
    pub m: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinAffPayload {
    pub diagram: String,
    pub lambda: Vec<i64>,
    pub orientation: i64,
    pub base: i64,
    pub path: Vec<usize>,
    pub centers: Vec<CenterRecord>,
    pub lweight: Vec<LFactor>,
    pub display: String,
}

impl MinAffPayload {
    pub fn build(d: &DynkinDiagram, lambda: &WeightVec, eps: Orientation, base: i64, ma: &MinimalAffinization) -> Self {
        Self {
            diagram: d.name().unwrap_or("custom").to_string(),
            lambda: lambda.coords().to_vec(),
            orientation: eps.sign(),
            base,
            path: ma.path.clone(),
            centers: ma
                .centers
                .iter()
                .map(|&(node, s)| CenterRecord { node, s, m: lambda[node - 1] })
                .collect(),
            lweight: ma.lweight.factors().collect(),
            display: ma.lweight.to_string(),
        }
    }
}

impl Render for MinAffPayload {
    fn text(&self, style: &TextStyle) -> String {
        let mut out = format!(
            "minimal affinization of V{} on {} (orientation {:+}, base {})\n",
            vec_str(&self.lambda),
            self.diagram,
            self.orientation,
            self.base
        );
        let rows: Vec<Vec<String>> = self
            .centers
            .iter()
            .map(|c| vec![c.node.to_string(), c.m.to_string(), c.s.to_string()])
            .collect();
        out += &table(&["node", "m", "center"], &rows);
        out += &wrap(&format!("l-weight: {}", self.display), style.width, "");
        out
    }
}

// ----------------------------------------------------------------- tensor

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorComponent {
    pub hw: Vec<i64>,
    pub mult: String,
    pub dim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorPayload {
    pub diagram: String,
    pub left: Vec<i64>,
    pub right: Vec<i64>,
    pub components: Vec<TensorComponent>,
    pub total_dim: String,
}

impl TensorPayload {
    pub fn build(d: &DynkinDiagram, a: &WeightVec, b: &WeightVec, list: &DecompositionList) -> Result<Self> {
        let mut components = Vec::new();
        for (mu, m) in list.iter() {
            components.push(TensorComponent {
                hw: mu.coords().to_vec(),
                mult: m.to_string(),
                dim: weyl_dim(d, mu)?.to_string(),
            });
        }
        Ok(Self {
            diagram: d.name().unwrap_or("custom").to_string(),
            left: a.coords().to_vec(),
            right: b.coords().to_vec(),
            components,
            total_dim: list.dim(d)?.to_string(),
        })
    }
}

impl Render for TensorPayload {
    fn text(&self, _style: &TextStyle) -> String {
        let mut out = format!(
            "V{} (x) V{} on {}: total dim {}\n",
            vec_str(&self.left),
            vec_str(&self.right),
            self.diagram,
            self.total_dim
        );
        let rows: Vec<Vec<String>> = self
            .components
            .iter()
            .map(|c| vec![vec_str(&c.hw), c.mult.clone(), c.dim.clone()])
            .collect();
        out += &table(&["highest weight", "mult", "dim"], &rows);
        out
    }

    fn latex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{lrr}\nhighest weight & mult & dim \\\\\n\\hline\n");
        for c in &self.components {
            let _ = writeln!(out, "${}$ & {} & {} \\\\", latex_combination(&c.hw, "omega"), c.mult, c.dim);
        }
        out += "\\end{tabular}\n";
        out
    }
}

// ----------------------------------------------------------------- verify

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub max_coord: i64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyPayload {
    pub fn new(max_coord: i64, suites: Vec<SuiteReport>) -> Self {
        Self {
            max_coord,
            passed: suites.iter().all(SuiteReport::passed),
            suites,
        }
    }
}

impl Render for VerifyPayload {
    fn text(&self, style: &TextStyle) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let tag = if s.passed() { style.paint("PASS", true) } else { style.paint("FAIL", false) };
            let _ = writeln!(
                out,
                "{tag} {:<18} {:>8} checks {:>7} ms  {}",
                s.suite, s.checks, s.elapsed_ms, s.summary
            );
            for f in &s.failures {
                out += &wrap(f, style.width, "    ");
            }
            if s.failure_count > s.failures.len() as u64 {
                let _ = writeln!(out, "    ... {} failures in total", s.failure_count);
            }
        }
        out
    }
}
