//! Form-spec files, result documents and the commands behind the `ghw` binary.
//!
//! A form spec is JSON:
//!
//! ```json
//! { "q_exponent": 1, "degree": 4, "modulus": [1, 1, 0, 0, 1],
//!   "monomials": [ { "i": 0, "j": 1, "lambda": "w^1" } ],
//!   "a": "1" }
//! ```
//!
//! `modulus` is optional and little-endian. `lambda` is `"w^k"` (a power of the
//! designated primitive element, `k` reduced mod `q^m - 1`), `"0"`, `"1"`, or a
//! little-endian bit list of length at most `e·m`. The target `a` is `"0"`, `"1"`
//! or `"w^k"`, which must lie in `GF(q)`.
//!
//! Every command produces a [`ResultDocument`]. JSON is the canonical rendering;
//! [`render`] derives the table and CSV views from that JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{BasisOverFq, Field, FieldElement, FieldSpec};
use crate::ghw::{self, Audit, GhwOptions, HierarchyReport, Mismatch, WeightHierarchy, Which};
use crate::limits::Limits;
use crate::quadform::{Classification, DoPolynomial, QuadraticForm, StandardType};
use crate::DefiningSet;

/// A coefficient given either as a string (`"w^k"`, `"0"`, `"1"`) or as bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Text(String),
    Bits(Vec<u8>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialSpec {
    pub i: u32,
    pub j: u32,
    pub lambda: ElementSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpecFile {
    pub q_exponent: u32,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u8>>,
    pub monomials: Vec<MonomialSpec>,
    pub a: String,
}

/// A form spec turned into field, form and target.
#[derive(Debug, Clone)]
pub struct ResolvedSpec {
    pub field: Field,
    pub form: QuadraticForm,
    pub a: FieldElement,
}

fn parse_power(text: &str) -> Option<i64> {
    text.trim().strip_prefix("w^")?.trim().parse().ok()
}

fn resolve_element(field: &Field, spec: &ElementSpec, at: &str) -> Result<FieldElement> {
    match spec {
        ElementSpec::Text(t) => match t.trim() {
            "0" => Ok(FieldElement::ZERO),
            "1" => Ok(FieldElement::ONE),
            other => {
                let k = parse_power(other)
                    .ok_or_else(|| Error::spec(at, format!("expected \"w^k\", \"0\" or \"1\", got {other:?}")))?;
                let order = field.spec().order() as i64 - 1;
                Ok(field.w_pow(k.rem_euclid(order) as u64))
            }
        },
        ElementSpec::Bits(bits) => {
            let degree = field.spec().degree() as usize;
            if bits.len() > degree {
                return Err(Error::spec(at, format!("{} coefficients for degree {degree}", bits.len())));
            }
            let mut value = 0u32;
            for (k, &b) in bits.iter().enumerate() {
                match b {
                    0 => {}
                    1 => value |= 1 << k,
                    _ => return Err(Error::spec(at, format!("coefficient {b} is not 0 or 1"))),
                }
            }
            field.element(value).map_err(|e| Error::spec(at, e.to_string()))
        }
    }
}

impl FormSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::spec("<document>", e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::spec("--spec", format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn resolve(&self) -> Result<ResolvedSpec> {
        let spec = match &self.modulus {
            Some(coeffs) => FieldSpec::from_coefficients(self.q_exponent, self.degree, coeffs)
                .map_err(|e| Error::spec("modulus", e.to_string()))?,
            None => FieldSpec::new(self.q_exponent, self.degree)
                .map_err(|e| Error::spec("degree", e.to_string()))?,
        };
        let field = Field::new(spec).map_err(|e| Error::spec("modulus", e.to_string()))?;
        let m = self.degree;
        let mut terms = Vec::with_capacity(self.monomials.len());
        for (idx, mono) in self.monomials.iter().enumerate() {
            for (name, v) in [("i", mono.i), ("j", mono.j)] {
                if v >= m {
                    return Err(Error::spec(
                        format!("monomials[{idx}].{name}"),
                        format!("{v} is not below degree {m}"),
                    ));
                }
            }
            let coeff = resolve_element(&field, &mono.lambda, &format!("monomials[{idx}].lambda"))?;
            terms.push((mono.i, mono.j, coeff));
        }
        let poly = DoPolynomial::new(&field, terms).map_err(|e| Error::spec("monomials", e.to_string()))?;
        let basis = BasisOverFq::polynomial(&field)?;
        let form = QuadraticForm::new(poly, basis);
        let a = resolve_element(&field, &ElementSpec::Text(self.a.clone()), "a")?;
        if !field.in_base_field(a) {
            return Err(Error::spec("a", format!("{} is not in GF({})", self.a, field.q())));
        }
        Ok(ResolvedSpec { field, form, a })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldDoc {
    pub q: u64,
    pub m: usize,
    /// Little-endian modulus coefficients.
    pub modulus: Vec<u8>,
}

impl FieldDoc {
    fn of(field: &Field) -> Self {
        let spec = field.spec();
        FieldDoc {
            q: field.q(),
            m: field.m(),
            modulus: (0..=spec.degree()).map(|k| ((spec.modulus() >> k) & 1) as u8).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationDoc {
    pub t: usize,
    #[serde(rename = "type")]
    pub form_type: u8,
    pub standard: String,
    pub s: usize,
    pub degenerate: bool,
    pub dim_ker_bilinear: usize,
    pub dim_ker_form: usize,
}

impl From<&Classification> for ClassificationDoc {
    fn from(c: &Classification) -> Self {
        ClassificationDoc {
            t: c.rank,
            form_type: c.form_type,
            standard: c.standard.to_string(),
            s: c.s,
            degenerate: c.degenerate,
            dim_ker_bilinear: c.dim_ker_bilinear,
            dim_ker_form: c.dim_ker_form,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleDiff {
    pub r: usize,
    pub expected: u64,
    pub formula: Option<u64>,
    pub brute: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleOutcome {
    pub name: String,
    pub m: usize,
    pub family: String,
    pub required_t: usize,
    pub required_standard: String,
    /// The first `w^k` whose form has the required classification.
    pub lambda: Option<String>,
    pub expected: Vec<u64>,
    pub formula: Option<Vec<u64>>,
    pub brute: Option<Vec<u64>>,
    pub pass: bool,
    pub diff: Vec<ExampleDiff>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEntry {
    pub i: u32,
    pub lambda: String,
    pub classification: ClassificationDoc,
    pub n: usize,
    pub k: usize,
    /// `None` when the closed form does not apply (`a = 0` or `k < m`).
    pub verified: Option<bool>,
    pub hierarchies: BTreeMap<String, Vec<u64>>,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepGroup {
    pub t: usize,
    pub standard: String,
    pub forms: usize,
    pub verified: usize,
    pub mismatched: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepDoc {
    pub q: u64,
    pub m: usize,
    pub families: Vec<u32>,
    pub a: String,
    pub forms: Vec<SweepEntry>,
    pub summary: Vec<SweepGroup>,
}

/// The JSON document every command emits. Absent parts are omitted, never null.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultDocument {
    pub command: String,
    /// `pass`, `mismatch` or `ok` (classification only).
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<FormSpecFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub hierarchies: BTreeMap<String, Vec<u64>>,
    /// Per `r`, the basis rows (as `GF(q)` labels) of the maximising subspace.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<Vec<u8>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatches: Option<Vec<Mismatch>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<Audit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub examples: Option<Vec<ExampleOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, f64>>,
}

impl ResultDocument {
    fn new(command: &str) -> Self {
        ResultDocument {
            command: command.to_string(),
            status: "ok".to_string(),
            spec: None,
            field: None,
            classification: None,
            n: None,
            k: None,
            hierarchies: BTreeMap::new(),
            witnesses: None,
            mismatches: None,
            notes: Vec::new(),
            audit: None,
            examples: None,
            sweep: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// A document and the process exit code it implies.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub document: ResultDocument,
    pub exit_code: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Brute,
    Both,
}

impl From<MethodArg> for Which {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => Which::Formula,
            MethodArg::Brute => Which::Brute,
            MethodArg::Both => Which::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

/// Settings shared by all commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub witnesses: bool,
    pub audit: bool,
    pub max_subspaces: u128,
    pub timing: bool,
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            witnesses: false,
            audit: false,
            max_subspaces: Limits::default().max_subspaces,
            timing: true,
            threads: 1,
        }
    }
}

impl RunConfig {
    pub fn options(&self) -> GhwOptions {
        GhwOptions {
            limits: Limits::default().with_max_subspaces(self.max_subspaces),
            threads: self.threads,
            witnesses: self.witnesses,
            audit: self.audit,
        }
    }
}

fn hierarchy_key(h: &WeightHierarchy) -> String {
    serde_json::to_value(h.method)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn witness_rows(h: &WeightHierarchy) -> Option<Vec<Vec<Vec<u8>>>> {
    h.witnesses
        .as_ref()
        .map(|ws| ws.iter().map(|w| w.basis().to_vec()).collect())
}

fn timings(report: &HierarchyReport) -> BTreeMap<String, f64> {
    let t = &report.timings;
    BTreeMap::from([
        ("classify".to_string(), t.classify_ms),
        ("defining_set".to_string(), t.defining_set_ms),
        ("formula".to_string(), t.formula_ms),
        ("brute".to_string(), t.brute_ms),
    ])
}

pub fn cmd_classify(spec: &FormSpecFile, cfg: &RunConfig) -> Result<Outcome> {
    let resolved = spec.resolve()?;
    let start = Instant::now();
    let c = resolved.form.classify(&cfg.options().limits)?;
    if c.rank == 0 {
        return Err(Error::InvalidClassification("zero form".into()));
    }
    let mut doc = ResultDocument::new("classify");
    doc.spec = Some(spec.clone());
    doc.field = Some(FieldDoc::of(&resolved.field));
    doc.classification = Some((&c).into());
    if cfg.timing {
        doc.timing_ms = Some(BTreeMap::from([(
            "classify".to_string(),
            start.elapsed().as_secs_f64() * 1e3,
        )]));
    }
    Ok(Outcome {
        document: doc,
        exit_code: 0,
    })
}

pub fn cmd_hierarchy(spec: &FormSpecFile, method: MethodArg, cfg: &RunConfig) -> Result<Outcome> {
    let resolved = spec.resolve()?;
    let report = ghw::analyze(&resolved.form, resolved.a, method.into(), &cfg.options())?;
    let mut doc = ResultDocument::new("hierarchy");
    doc.spec = Some(spec.clone());
    doc.field = Some(FieldDoc::of(&resolved.field));
    doc.classification = Some((&report.classification).into());
    doc.n = Some(report.n);
    doc.k = Some(report.code_dimension);
    for h in report.formula.iter().chain(&report.brute) {
        doc.hierarchies.insert(hierarchy_key(h), h.values.clone());
    }
    doc.witnesses = report.brute.as_ref().and_then(witness_rows);
    if report.formula.is_some() && report.brute.is_some() {
        doc.mismatches = Some(report.mismatches.clone());
    }
    doc.notes = report.notes.clone();
    doc.audit = report.audit.clone();
    if cfg.timing {
        doc.timing_ms = Some(timings(&report));
    }
    let pass = report.agrees();
    doc.status = if pass { "pass" } else { "mismatch" }.to_string();
    Ok(Outcome {
        document: doc,
        exit_code: if pass { 0 } else { 1 },
    })
}

/// One of the six worked examples: a monomial family `x^(1 + q^j)`, the
/// classification the closed form needs, and the hierarchy it must produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkedExample {
    pub name: &'static str,
    pub m: usize,
    pub j: u32,
    pub rank: usize,
    pub standard: StandardType,
    pub expected: &'static [u64],
}

pub const WORKED_EXAMPLES: [WorkedExample; 6] = [
    WorkedExample { name: "example-1", m: 4, j: 1, rank: 4, standard: StandardType::I, expected: &[2, 3, 5, 6] },
    WorkedExample { name: "example-2", m: 6, j: 1, rank: 6, standard: StandardType::II, expected: &[16, 24, 30, 33, 35, 36] },
    WorkedExample { name: "example-3", m: 5, j: 1, rank: 5, standard: StandardType::III, expected: &[6, 10, 13, 15, 16] },
    WorkedExample { name: "example-4", m: 6, j: 1, rank: 4, standard: StandardType::I, expected: &[8, 12, 18, 21, 23, 24] },
    WorkedExample { name: "example-5", m: 4, j: 1, rank: 2, standard: StandardType::II, expected: &[6, 9, 11, 12] },
    WorkedExample { name: "example-6", m: 6, j: 2, rank: 5, standard: StandardType::III, expected: &[12, 20, 26, 29, 31, 32] },
];

/// Signature of [`ghw::hierarchy_formula`]; swappable so the harness can be
/// checked against a deliberately broken formula.
pub type FormulaFn = fn(u64, usize, &Classification) -> Result<WeightHierarchy>;

/// Scans `λ = w^k`, `k = 0, 1, …`, for the first binary form `Tr(λ x^(1+2^j))`
/// with the required classification and a full-dimensional code, then compares
/// both hierarchies with the expected one.
pub fn run_worked_example(ex: &WorkedExample, formula: FormulaFn, cfg: &RunConfig) -> Result<ExampleOutcome> {
    let start = Instant::now();
    let field = Field::with_default_modulus(1, ex.m as u32)?;
    let opts = cfg.options();
    let order = field.spec().order() - 1;
    let mut found = None;
    for k in 0..order {
        let form = QuadraticForm::monomial(&field, field.w_pow(k), 0, ex.j)?;
        let c = form.classify(&opts.limits)?;
        if c.rank != ex.rank || c.standard != ex.standard {
            continue;
        }
        let d = DefiningSet::new(&form, FieldElement::ONE, &opts.limits)?;
        let code = crate::LinearCode::from_defining_set(&d, form.basis())?;
        if code.has_full_dimension() {
            found = Some((k, c, d));
            break;
        }
    }
    let mut outcome = ExampleOutcome {
        name: ex.name.to_string(),
        m: ex.m,
        family: format!("x^{}", 1 + (1u64 << ex.j)),
        required_t: ex.rank,
        required_standard: ex.standard.to_string(),
        lambda: None,
        expected: ex.expected.to_vec(),
        formula: None,
        brute: None,
        pass: false,
        diff: Vec::new(),
        elapsed_ms: None,
    };
    if let Some((k, c, d)) = found {
        outcome.lambda = Some(format!("w^{k}"));
        outcome.formula = formula(2, ex.m, &c).ok().map(|h| h.values);
        outcome.brute = Some(ghw::hierarchy_via_subspaces(&d, &opts)?.values);
    }
    for (idx, &expected) in ex.expected.iter().enumerate() {
        let f = outcome.formula.as_ref().and_then(|v| v.get(idx).copied());
        let b = outcome.brute.as_ref().and_then(|v| v.get(idx).copied());
        if f != Some(expected) || b != Some(expected) {
            outcome.diff.push(ExampleDiff {
                r: idx + 1,
                expected,
                formula: f,
                brute: b,
            });
        }
    }
    outcome.pass = outcome.lambda.is_some() && outcome.diff.is_empty();
    if cfg.timing {
        outcome.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(outcome)
}

pub fn cmd_examples_with(formula: FormulaFn, cfg: &RunConfig) -> Result<Outcome> {
    let outcomes = WORKED_EXAMPLES
        .iter()
        .map(|ex| run_worked_example(ex, formula, cfg))
        .collect::<Result<Vec<_>>>()?;
    let pass = outcomes.iter().all(|o| o.pass);
    let mut doc = ResultDocument::new("examples");
    doc.notes.push(format!(
        "{}/{} examples pass",
        outcomes.iter().filter(|o| o.pass).count(),
        outcomes.len()
    ));
    doc.examples = Some(outcomes);
    doc.status = if pass { "pass" } else { "mismatch" }.to_string();
    Ok(Outcome {
        document: doc,
        exit_code: if pass { 0 } else { 1 },
    })
}

pub fn cmd_examples(cfg: &RunConfig) -> Result<Outcome> {
    cmd_examples_with(ghw::hierarchy_formula, cfg)
}

/// Verifies every form `Tr(λ x^(q^i + 1))`, `λ ≠ 0`, `i` in `families`.
pub fn cmd_sweep(e: u32, m: u32, families: &[u32], a: &str, cfg: &RunConfig) -> Result<Outcome> {
    if families.is_empty() {
        return Err(Error::spec("families", "empty family list"));
    }
    let field = Field::with_default_modulus(e, m).map_err(|err| Error::spec("degree", err.to_string()))?;
    for &i in families {
        if i == 0 || i >= m {
            return Err(Error::spec("families", format!("exponent index {i} must lie in 1..{m}")));
        }
    }
    let target = resolve_element(&field, &ElementSpec::Text(a.to_string()), "a")?;
    if !field.in_base_field(target) {
        return Err(Error::spec("a", format!("{a} is not in GF({})", field.q())));
    }
    let start = Instant::now();
    let opts = cfg.options();
    let order = field.spec().order() - 1;
    let mut forms = Vec::new();
    let mut groups: BTreeMap<(usize, String), SweepGroup> = BTreeMap::new();
    for &i in families {
        for k in 0..order {
            let form = QuadraticForm::monomial(&field, field.w_pow(k), 0, i)?;
            let zero = form.classify(&opts.limits)?.rank == 0;
            let report = if zero {
                None
            } else {
                Some(ghw::analyze(&form, target, Which::Both, &opts)?)
            };
            let c = match &report {
                Some(r) => r.classification,
                None => form.classify(&opts.limits)?,
            };
            let verified = report
                .as_ref()
                .and_then(|r| r.formula.as_ref().map(|_| r.agrees()));
            let group = groups
                .entry((c.rank, c.standard.to_string()))
                .or_insert_with(|| SweepGroup {
                    t: c.rank,
                    standard: c.standard.to_string(),
                    forms: 0,
                    verified: 0,
                    mismatched: 0,
                    not_applicable: 0,
                });
            group.forms += 1;
            match verified {
                Some(true) => group.verified += 1,
                Some(false) => group.mismatched += 1,
                None => group.not_applicable += 1,
            }
            let mut hierarchies = BTreeMap::new();
            if let Some(r) = &report {
                for h in r.formula.iter().chain(&r.brute) {
                    hierarchies.insert(hierarchy_key(h), h.values.clone());
                }
            }
            forms.push(SweepEntry {
                i,
                lambda: format!("w^{k}"),
                classification: (&c).into(),
                n: report.as_ref().map_or(0, |r| r.n),
                k: report.as_ref().map_or(0, |r| r.code_dimension),
                verified,
                hierarchies,
                mismatches: report.map(|r| r.mismatches).unwrap_or_default(),
            });
        }
    }
    let pass = forms.iter().all(|f| f.verified != Some(false));
    let zero_forms = forms.iter().filter(|f| f.classification.t == 0).count();
    let mut doc = ResultDocument::new("sweep");
    doc.field = Some(FieldDoc::of(&field));
    doc.sweep = Some(SweepDoc {
        q: field.q(),
        m: field.m(),
        families: families.to_vec(),
        a: a.to_string(),
        forms,
        summary: groups.into_values().collect(),
    });
    if cfg.timing {
        doc.timing_ms = Some(BTreeMap::from([(
            "total".to_string(),
            start.elapsed().as_secs_f64() * 1e3,
        )]));
    }
    if zero_forms > 0 {
        doc.notes.push(format!("{zero_forms} zero forms skipped"));
    }
    doc.status = if pass { "pass" } else { "mismatch" }.to_string();
    Ok(Outcome {
        document: doc,
        exit_code: if pass { 0 } else { 1 },
    })
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => "-".to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

fn column(doc: &Value, method: &str, idx: usize) -> Option<Value> {
    doc.get("hierarchies")?.get(method)?.get(idx).cloned()
}

fn brute_column(doc: &Value, idx: usize) -> Option<Value> {
    column(doc, "brute", idx).or_else(|| column(doc, "direct", idx))
}

fn per_r_rows(doc: &Value) -> Vec<[String; 4]> {
    let len = doc
        .get("hierarchies")
        .and_then(Value::as_object)
        .and_then(|h| h.values().filter_map(Value::as_array).map(Vec::len).max())
        .unwrap_or(0);
    (0..len)
        .map(|idx| {
            let f = column(doc, "formula", idx);
            let b = brute_column(doc, idx);
            let matched = match (&f, &b) {
                (Some(x), Some(y)) => (x == y).to_string(),
                _ => "-".to_string(),
            };
            [(idx + 1).to_string(), cell(f.as_ref()), cell(b.as_ref()), matched]
        })
        .collect()
}

fn table_of(doc: &Value) -> String {
    let mut out = String::new();
    let get = |k: &str| doc.get(k);
    let _ = writeln!(out, "command: {}   status: {}", cell(get("command")), cell(get("status")));
    if let Some(f) = get("field") {
        let _ = writeln!(out, "field:   q = {}, m = {}, modulus = {}", cell(f.get("q")), cell(f.get("m")), cell(f.get("modulus")));
    }
    if let Some(c) = get("classification") {
        let _ = writeln!(
            out,
            "class:   t = {}, type = {}, standard {}, s = {}, degenerate = {}",
            cell(c.get("t")),
            cell(c.get("type")),
            cell(c.get("standard")),
            cell(c.get("s")),
            cell(c.get("degenerate"))
        );
    }
    if get("n").is_some() {
        let _ = writeln!(out, "code:    n = {}, k = {}", cell(get("n")), cell(get("k")));
    }
    let rows = per_r_rows(doc);
    if !rows.is_empty() {
        let _ = writeln!(out, "{:>3}  {:>10}  {:>10}  {:>6}", "r", "formula", "brute", "match");
        for [r, f, b, m] in rows {
            let _ = writeln!(out, "{r:>3}  {f:>10}  {b:>10}  {m:>6}");
        }
    }
    if let Some(audit) = get("audit") {
        let _ = writeln!(out, "uncorrected: {}", cell(audit.get("uncorrected")));
        let _ = writeln!(out, "  disagrees at r = {}", cell(audit.get("disagrees_at")));
        let _ = writeln!(out, "  non-integral at r = {}", cell(audit.get("non_integral_at")));
    }
    if let Some(examples) = get("examples").and_then(Value::as_array) {
        let _ = writeln!(out, "{:<10}  {:>2}  {:<5}  {:<8}  {:<7}  {:<4}  expected", "example", "m", "fam", "class", "lambda", "pass");
        for ex in examples {
            let _ = writeln!(
                out,
                "{:<10}  {:>2}  {:<5}  {:<8}  {:<7}  {:<4}  {}",
                cell(ex.get("name")),
                cell(ex.get("m")),
                cell(ex.get("family")),
                format!("({}, {})", cell(ex.get("required_t")), cell(ex.get("required_standard"))),
                cell(ex.get("lambda")),
                cell(ex.get("pass")),
                cell(ex.get("expected"))
            );
            for d in ex.get("diff").and_then(Value::as_array).into_iter().flatten() {
                let _ = writeln!(
                    out,
                    "    r = {}: expected {}, formula {}, brute {}",
                    cell(d.get("r")),
                    cell(d.get("expected")),
                    cell(d.get("formula")),
                    cell(d.get("brute"))
                );
            }
        }
    }
    if let Some(sweep) = get("sweep") {
        let _ = writeln!(out, "{:>3}  {:<8}  {:>5}  {:>8}  {:>10}  {:>6}", "t", "standard", "forms", "verified", "mismatched", "n/a");
        for g in sweep.get("summary").and_then(Value::as_array).into_iter().flatten() {
            let _ = writeln!(
                out,
                "{:>3}  {:<8}  {:>5}  {:>8}  {:>10}  {:>6}",
                cell(g.get("t")),
                cell(g.get("standard")),
                cell(g.get("forms")),
                cell(g.get("verified")),
                cell(g.get("mismatched")),
                cell(g.get("not_applicable"))
            );
        }
    }
    for note in get("notes").and_then(Value::as_array).into_iter().flatten() {
        let _ = writeln!(out, "note: {}", cell(Some(note)));
    }
    out
}

fn csv_of(doc: &Value) -> String {
    let mut out = String::new();
    if let Some(examples) = doc.get("examples").and_then(Value::as_array) {
        out.push_str("example,r,expected,d_formula,d_brute,match\n");
        for ex in examples {
            let name = cell(ex.get("name"));
            for (idx, e) in ex.get("expected").and_then(Value::as_array).into_iter().flatten().enumerate() {
                let f = ex.get("formula").and_then(|v| v.get(idx));
                let b = ex.get("brute").and_then(|v| v.get(idx));
                let matched = f == Some(e) && b == Some(e);
                let _ = writeln!(out, "{name},{},{},{},{},{matched}", idx + 1, e, cell(f), cell(b));
            }
        }
        return out;
    }
    if let Some(forms) = doc.get("sweep").and_then(|s| s.get("forms")).and_then(Value::as_array) {
        out.push_str("i,lambda,t,standard,r,d_formula,d_brute,match\n");
        for f in forms {
            let c = f.get("classification");
            let prefix = format!(
                "{},{},{},{}",
                cell(f.get("i")),
                cell(f.get("lambda")),
                cell(c.and_then(|c| c.get("t"))),
                cell(c.and_then(|c| c.get("standard")))
            );
            for [r, df, db, m] in per_r_rows(f) {
                let _ = writeln!(out, "{prefix},{r},{df},{db},{m}");
            }
        }
        return out;
    }
    out.push_str("r,d_formula,d_brute,match\n");
    for [r, f, b, m] in per_r_rows(doc) {
        let _ = writeln!(out, "{r},{f},{b},{m}");
    }
    out
}

/// Renders a document. Table and CSV are views of the JSON value.
pub fn render(doc: &ResultDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json() + "\n",
        Format::Table => table_of(&serde_json::to_value(doc).expect("documents serialize")),
        Format::Csv => csv_of(&serde_json::to_value(doc).expect("documents serialize")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "ghw", version, about = "Weight hierarchies of codes from quadratic forms over GF(2^m)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Report a maximising subspace for every r.
    #[arg(long, global = true)]
    pub witnesses: bool,
    /// Also evaluate the uncorrected closed forms and report where they fail.
    #[arg(long, global = true)]
    pub audit_typos: bool,
    #[arg(long, global = true, value_name = "N")]
    pub max_subspaces: Option<u128>,
    /// Omit timing fields so that output is reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    pub threads: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, type and standard type of the form in a spec file.
    Classify {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
    },
    /// Weight hierarchy of the code of a spec file.
    Hierarchy {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// The six built-in worked examples.
    Examples,
    /// Every nonzero λ for the monomial families x^(q^i + 1).
    Sweep {
        #[arg(long = "q-exponent", default_value_t = 1)]
        e: u32,
        #[arg(long)]
        m: u32,
        /// Comma-separated exponent indices i; all of 1..=m/2 when omitted.
        #[arg(long)]
        families: Option<String>,
        #[arg(long, default_value = "1")]
        a: String,
    },
}

fn parse_families(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::spec("families", format!("{s:?} is not an integer"))))
        .collect()
}

impl Cli {
    fn config(&self) -> RunConfig {
        let g = &self.global;
        RunConfig {
            witnesses: g.witnesses,
            audit: g.audit_typos,
            max_subspaces: g.max_subspaces.unwrap_or(Limits::default().max_subspaces),
            timing: !g.no_timing,
            threads: g.threads,
        }
    }

    pub fn execute(&self) -> Result<Outcome> {
        let cfg = self.config();
        match &self.command {
            Command::Classify { spec } => cmd_classify(&FormSpecFile::load(spec)?, &cfg),
            Command::Hierarchy { spec, method } => cmd_hierarchy(&FormSpecFile::load(spec)?, *method, &cfg),
            Command::Examples => cmd_examples(&cfg),
            Command::Sweep { e, m, families, a } => {
                let families = match families {
                    Some(text) => parse_families(text)?,
                    None => (1..=m / 2).collect(),
                };
                cmd_sweep(*e, *m, &families, a, &cfg)
            }
        }
    }
}

/// Parses `args`, runs the command and returns `(stdout, stderr, exit code)`.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                (e.to_string(), String::new(), 0)
            } else {
                (String::new(), e.to_string(), code)
            };
        }
    };
    match cli.execute() {
        Ok(outcome) => (render(&outcome.document, cli.global.format), String::new(), outcome.exit_code),
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}
