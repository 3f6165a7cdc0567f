//! The machine-readable report and its plain-text rendering.

use serde::Serialize;
use serde_json::Value;

use zdci::ci::{CIReport, MinorReport};
use zdci::groebner::HilbertData;
use zdci::poly::Polynomial;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub input_digest: String,
    pub ring: String,
    pub ideal: String,
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minors: Option<Vec<MinorJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locus: Option<LocusJson>,
    /// Command-specific data, keys sorted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub timing: Option<TimingJson>,
    pub seed: u64,
}

impl Report {
    pub fn new(command: &str, input_digest: String, ring: String, ideal: String, seed: u64) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            input_digest,
            ring,
            ideal,
            verdict: None,
            failure_reason: None,
            minors: None,
            witnesses: None,
            hilbert: None,
            components: None,
            locus: None,
            details: None,
            timing: None,
            seed,
        }
    }

    /// Fills verdict, minors, witnesses, hilbert and the W matrix from a
    /// complete-intersection report.
    pub fn with_ci(mut self, rep: &CIReport, generators: &[Polynomial]) -> Self {
        self.verdict = Some(rep.verdict);
        self.failure_reason = rep.failure_reason.as_ref().map(|r| r.to_string());
        self.minors = Some(rep.minors.iter().map(MinorJson::from).collect());
        self.witnesses = Some(witnesses(rep, generators));
        self.hilbert = rep.hilbert.as_ref().map(HilbertJson::from);
        if let Some(w) = &rep.matrix {
            let mut d = serde_json::Map::new();
            d.insert("matrix".into(), Value::from(w.entries.iter().map(|r| strings(r)).collect::<Vec<_>>()));
            d.insert("matrix_rows".into(), Value::from(strings(&w.row_labels)));
            d.insert("matrix_columns".into(), Value::from(strings(&w.col_labels)));
            self.details = Some(Value::Object(d));
        }
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorJson {
    /// 1-based indices.
    pub subset: Vec<usize>,
    pub residue: String,
    pub nonzero: bool,
}

impl From<&MinorReport> for MinorJson {
    fn from(m: &MinorReport) -> Self {
        MinorJson { subset: one_based(&m.column_subset), residue: m.residue.to_string(), nonzero: m.nonzero }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub subset: Vec<usize>,
    pub label: String,
    pub generators: Vec<String>,
    pub full_generation: Option<bool>,
}

fn witnesses(rep: &CIReport, generators: &[Polynomial]) -> Vec<WitnessJson> {
    rep.witnesses
        .iter()
        .zip(&rep.full_generation)
        .map(|(w, full)| WitnessJson {
            subset: one_based(w),
            label: subset_label(w),
            generators: w.iter().map(|&j| generators[j].to_string()).collect(),
            full_generation: *full,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertJson {
    pub mu: usize,
    pub hilbert_function: Vec<usize>,
    pub castelnuovo: Vec<usize>,
    pub regularity_index: usize,
    pub symmetric: bool,
}

impl From<&HilbertData> for HilbertJson {
    fn from(h: &HilbertData) -> Self {
        HilbertJson {
            mu: h.mu,
            hilbert_function: h.hf.clone(),
            castelnuovo: h.castelnuovo.clone(),
            regularity_index: h.ri,
            symmetric: h.is_symmetric(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentJson {
    pub component: Vec<String>,
    pub radical: Vec<String>,
    pub multiplicity: usize,
    pub triangular_generators: Vec<String>,
    pub primitive_element: String,
    pub minimal_polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusJson {
    pub conditions: Vec<String>,
    pub description: String,
    pub generic_only: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TimingJson {
    pub total_ms: f64,
}

pub fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn one_based(subset: &[usize]) -> Vec<usize> {
    subset.iter().map(|j| j + 1).collect()
}

/// `{2,4}` for the 0-based subset `[1, 3]`.
pub fn subset_label(subset: &[usize]) -> String {
    let inner: Vec<String> = subset.iter().map(|j| (j + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn verdict_text(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "TRUE",
        Some(false) => "FALSE",
        None => "none",
    }
}

fn tuple(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|k| k.to_string()).collect();
    format!("({})", inner.join(", "))
}

/// Human-readable rendering; carries the same content as the JSON.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("command: {}", r.command));
    line(format!("ring: {}", r.ring));
    line(format!("ideal: {}", r.ideal));
    line(format!("verdict: {}", verdict_text(r.verdict)));
    if let Some(reason) = &r.failure_reason {
        line(format!("reason: {reason}"));
    }
    if let Some(h) = &r.hilbert {
        line(format!(
            "hilbert: mu = {}, HF = {}, castelnuovo = {}, ri = {}, {}",
            h.mu,
            tuple(&h.hilbert_function),
            tuple(&h.castelnuovo),
            h.regularity_index,
            if h.symmetric { "symmetric" } else { "not symmetric" }
        ));
    }
    if let Some(d) = &r.details {
        render_value(&mut line, d, "");
    }
    if let Some(ms) = &r.minors {
        line("minors:".into());
        for m in ms {
            let label = subset_label(&m.subset.iter().map(|j| j - 1).collect::<Vec<_>>());
            line(format!("  {label}  {}", m.residue));
        }
    }
    match &r.witnesses {
        Some(ws) if ws.is_empty() => line("witnesses: none".into()),
        Some(_) => line("witnesses:".into()),
        None => {}
    }
    if let Some(ws) = &r.witnesses {
        for w in ws {
            let full = match w.full_generation {
                Some(b) => b.to_string(),
                None => "undecided".into(),
            };
            line(format!("  {}  full_generation = {full}", w.label));
            for g in &w.generators {
                line(format!("    {g}"));
            }
        }
    }
    if let Some(cs) = &r.components {
        line("components:".into());
        for (k, c) in cs.iter().enumerate() {
            let v = c.verdict.map(|v| format!("  verdict {}", verdict_text(Some(v)))).unwrap_or_default();
            line(format!("  [{}] multiplicity {}{v}", k + 1, c.multiplicity));
            line(format!("    Q = <{}>", c.component.join(", ")));
            line(format!("    M = <{}>", c.triangular_generators.join(", ")));
            line(format!("    primitive element {}, minimal polynomial {}", c.primitive_element, c.minimal_polynomial));
            if let Some(ws) = &c.witnesses {
                let ws = if ws.is_empty() { "none".to_string() } else { ws.join(" ") };
                line(format!("    witnesses {ws}"));
            }
        }
    }
    if let Some(l) = &r.locus {
        line(format!("locus: {}", l.description));
        if l.generic_only {
            line("  (generic fiber; specializations are not checked)".into());
        }
    }
    if let Some(t) = &r.timing {
        line(format!("time: {:.3} ms", t.total_ms));
    }
    out
}

fn render_value(line: &mut impl FnMut(String), v: &Value, indent: &str) {
    let Value::Object(map) = v else { return };
    for (k, v) in map {
        match v {
            Value::Array(items) if items.is_empty() => line(format!("{indent}{k}: none")),
            Value::Array(items) => {
                line(format!("{indent}{k}:"));
                for it in items {
                    match it {
                        Value::Array(row) => {
                            let cells: Vec<String> = row.iter().map(plain).collect();
                            line(format!("{indent}  [ {} ]", cells.join(" | ")));
                        }
                        other => line(format!("{indent}  {}", plain(other))),
                    }
                }
            }
            Value::Object(_) => {
                line(format!("{indent}{k}:"));
                render_value(line, v, &format!("{indent}  "));
            }
            other => line(format!("{indent}{k}: {}", plain(other))),
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("<{}>", items.iter().map(plain).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k} = {}", plain(v))).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}
