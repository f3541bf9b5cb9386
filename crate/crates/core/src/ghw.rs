//! Weight hierarchies of `C_{D_f}`: exhaustive maximisation of `|D ∩ K|` over
//! subspaces, the closed forms indexed by classification, and a verifier that
//! runs both and lists disagreements.
//!
//! For a code of full dimension `m`,
//! `d_r = n - max { |D ∩ K| : K an (m-r)-dimensional subspace }`. Maximising over
//! all `(m-r)`-dimensional `K` is the same as maximising over duals of
//! `r`-dimensional subspaces, since any non-degenerate pairing makes duality a
//! bijection between the two Grassmannians.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{DefiningSet, LinearCode};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::limits::Limits;
use crate::quadform::{count_solutions_formula, Classification, QuadraticForm, StandardType};
use crate::subspace::{gaussian_binomial, PatternIter, Subspace, SubspaceLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Closed form from the classification.
    Formula,
    /// Maximum intersection of the defining set with subspaces.
    Brute,
    /// Minimum support over subcodes.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightHierarchy {
    pub values: Vec<u64>,
    pub method: Method,
    /// Per `r`, the first maximising `(m-r)`-dimensional subspace (brute only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Subspace>>,
}

impl WeightHierarchy {
    fn new(values: Vec<u64>, method: Method) -> Self {
        WeightHierarchy {
            values,
            method,
            witnesses: None,
        }
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }
}

/// Knobs shared by the exhaustive searches.
#[derive(Debug, Clone)]
pub struct GhwOptions {
    pub limits: Limits,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub threads: usize,
    pub witnesses: bool,
    /// Also evaluate the closed forms exactly as first stated (see [`uncorrected_hierarchy`]).
    pub audit: bool,
}

impl Default for GhwOptions {
    fn default() -> Self {
        GhwOptions {
            limits: Limits::default(),
            threads: 1,
            witnesses: false,
            audit: false,
        }
    }
}

impl GhwOptions {
    /// Runs `f` once per pivot pattern of `r`-dimensional subspaces and returns the
    /// results in pattern order, regardless of how many threads ran them.
    pub(crate) fn map_patterns<T, F>(&self, lattice: &SubspaceLattice, r: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(PatternIter) -> T + Sync + Send,
    {
        let patterns = lattice.pivot_patterns(r);
        if self.threads <= 1 {
            return Ok(patterns.iter().map(|p| f(lattice.with_pivots(p))).collect());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        Ok(pool.install(|| patterns.par_iter().map(|p| f(lattice.with_pivots(p))).collect()))
    }
}

fn qpow(q: u64, exp: usize) -> i128 {
    (q as i128).pow(exp as u32)
}

/// `|D_f ∩ H|` for a `d`-dimensional `H` on which `f` restricts to rank `R` with
/// the given standard type, the target being nonzero.
pub fn count_from_restriction(
    d: usize,
    rank: usize,
    standard: StandardType,
    a: u8,
    q: u64,
) -> Result<u64> {
    if a == 0 {
        return Err(Error::InvalidArgument("target must be nonzero".into()));
    }
    if rank > d {
        return Err(Error::InvalidArgument(format!("rank {rank} exceeds dimension {d}")));
    }
    if d == 0 {
        return Ok(0);
    }
    let c = Classification::from_rank(d, rank, standard)
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(count_solutions_formula(q, d, &c, a))
}

/// `d_r = n - max |D ∩ K|` over `(m-r)`-dimensional `K`, with the first maximiser
/// in enumeration order.
///
/// Meaningful only when the code of `D` has dimension `m`.
pub fn ghw_via_subspaces(d: &DefiningSet, r: usize, opts: &GhwOptions) -> Result<(u64, Subspace)> {
    let field = d.form().field();
    let m = field.m();
    if r > m {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds m = {m}")));
    }
    let dim = m - r;
    let count = gaussian_binomial(m, dim, field.q());
    Limits::check("subspace enumeration", count, opts.limits.max_subspaces)?;
    let lattice = SubspaceLattice::new(field.base(), m);
    let parts = opts.map_patterns(&lattice, dim, |subspaces| {
        let mut best: Option<(u64, Subspace)> = None;
        for k in subspaces {
            let hits = d.intersection_count(&k);
            if best.as_ref().is_none_or(|(b, _)| hits > *b) {
                best = Some((hits, k));
            }
        }
        best
    })?;
    let mut best: Option<(u64, Subspace)> = None;
    for part in parts.into_iter().flatten() {
        if best.as_ref().is_none_or(|(b, _)| part.0 > *b) {
            best = Some(part);
        }
    }
    let (hits, witness) = best.ok_or_else(|| Error::Internal("no subspaces enumerated".into()))?;
    Ok((d.len() as u64 - hits, witness))
}

/// `(d_1, …, d_m)` by [`ghw_via_subspaces`].
pub fn hierarchy_via_subspaces(d: &DefiningSet, opts: &GhwOptions) -> Result<WeightHierarchy> {
    let m = d.form().field().m();
    let mut values = Vec::with_capacity(m);
    let mut witnesses = Vec::with_capacity(m);
    for r in 1..=m {
        let (v, w) = ghw_via_subspaces(d, r, opts)?;
        values.push(v);
        witnesses.push(w);
    }
    Ok(WeightHierarchy {
        values,
        method: Method::Brute,
        witnesses: opts.witnesses.then_some(witnesses),
    })
}

/// Closed-form hierarchy for a nonzero target, from rank `t`, `s = ⌊t/2⌋` and the
/// standard type, with `n` the solution count for `a ≠ 0`:
///
/// * I:   `d_1 = n - q^(m-2)`; `d_r = n - q^(m-r-1) - q^(m-s-2)` for `2 ≤ r ≤ s`;
/// * II:  `d_r = n - q^(m-s-1) - q^(m-r-1)` for `1 ≤ r ≤ s-1`;
/// * III: `d_r = n - q^(m-r-1) - q^(m-s-2)` for `1 ≤ r ≤ s`;
///
/// and in every type `d_r = n - q^(m-r-1) - q^(m-r-2)` for the remaining
/// `r < m-1`, `d_(m-1) = n - 1`, `d_m = n`.
pub fn hierarchy_formula(q: u64, m: usize, c: &Classification) -> Result<WeightHierarchy> {
    if c.rank == 0 {
        return Err(Error::InvalidClassification("zero form has no defining set".into()));
    }
    let checked = Classification::from_rank(m, c.rank, c.standard)?;
    if (checked.rank, checked.standard, checked.m) != (c.rank, c.standard, c.m) {
        return Err(Error::InvalidClassification(format!("inconsistent {c:?}")));
    }
    let n = count_solutions_formula(q, m, c, 1) as i128;
    let s = c.s;
    let tail = |r: usize| n - qpow(q, m - r - 1) - qpow(q, m - r - 2);
    let values: Vec<i128> = (1..=m)
        .map(|r| {
            if r == m {
                return n;
            }
            if r == m - 1 {
                return n - 1;
            }
            match c.standard {
                StandardType::I if r == 1 => n - qpow(q, m - 2),
                StandardType::I if r <= s => n - qpow(q, m - r - 1) - qpow(q, m - s - 2),
                StandardType::II if r < s => n - qpow(q, m - s - 1) - qpow(q, m - r - 1),
                StandardType::III if r <= s => n - qpow(q, m - r - 1) - qpow(q, m - s - 2),
                _ => tail(r),
            }
        })
        .collect();
    if let Some(r) = values.iter().position(|&v| v <= 0) {
        return Err(Error::InvalidClassification(format!(
            "closed form gives d_{} = {} for {c:?}; the code cannot have full dimension",
            r + 1,
            values[r]
        )));
    }
    Ok(WeightHierarchy::new(
        values.into_iter().map(|v| v as u64).collect(),
        Method::Formula,
    ))
}

/// A closed-form value that may fail to be an integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum LiteralValue {
    Exact(i64),
    NonIntegral { non_integral: String },
}

/// `±q^(twice/2)` as one term of a closed form.
#[derive(Debug, Clone, Copy)]
struct Term {
    sign: i8,
    twice_exp: i64,
}

fn plus(twice_exp: i64) -> Term {
    Term { sign: 1, twice_exp }
}
fn minus(twice_exp: i64) -> Term {
    Term { sign: -1, twice_exp }
}

fn evaluate(q: u64, terms: &[Term]) -> LiteralValue {
    let mut acc: i128 = 0;
    for t in terms {
        if t.twice_exp < 0 || t.twice_exp % 2 != 0 {
            let render = terms
                .iter()
                .map(|t| {
                    let sign = if t.sign < 0 { "-" } else { "+" };
                    if t.twice_exp % 2 == 0 {
                        format!("{sign} q^{}", t.twice_exp / 2)
                    } else {
                        format!("{sign} q^({}/2)", t.twice_exp)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ");
            return LiteralValue::NonIntegral {
                non_integral: render.trim_start_matches("+ ").to_string(),
            };
        }
        acc += t.sign as i128 * (q as i128).pow((t.twice_exp / 2) as u32);
    }
    LiteralValue::Exact(acc as i64)
}

/// The six piecewise closed forms exactly as first stated, selected by
/// degeneracy and standard type.
///
/// They agree with [`hierarchy_formula`] except in two places: the degenerate
/// Type II family carries `q^(s-1)` where `q^(m-s-1)` belongs, and the degenerate
/// Type III family has the half-integral exponent `m - (2s+3)/2` where `m - s - 2`
/// belongs.
pub fn uncorrected_hierarchy(q: u64, m: usize, c: &Classification) -> Result<Vec<LiteralValue>> {
    if c.rank == 0 {
        return Err(Error::InvalidClassification("zero form".into()));
    }
    let mi = m as i64;
    let s = c.s as i64;
    let e = |x: i64| 2 * x;
    let values = (1..=mi)
        .map(|r| {
            let terms: Vec<Term> = match (c.degenerate, c.standard) {
                (false, StandardType::I) => {
                    let lead = [plus(e(mi - 1)), minus(mi - 2)];
                    let rest: Vec<Term> = if r == 1 {
                        vec![minus(e(mi - 2))]
                    } else if 2 * r <= mi {
                        vec![minus(e(mi - r - 1)), minus(mi - 4)]
                    } else if r < mi - 1 {
                        vec![minus(e(mi - r - 1)), minus(e(mi - r - 2))]
                    } else if r == mi - 1 {
                        vec![minus(0)]
                    } else {
                        vec![]
                    };
                    lead.into_iter().chain(rest).collect()
                }
                (false, StandardType::II) => {
                    if r <= mi / 2 - 1 {
                        vec![plus(e(mi - 1)), minus(e(mi - r - 1))]
                    } else {
                        let lead = [plus(e(mi - 1)), plus(mi - 2)];
                        let rest: Vec<Term> = if r < mi - 1 {
                            vec![minus(e(mi - r - 1)), minus(e(mi - r - 2))]
                        } else if r == mi - 1 {
                            vec![minus(0)]
                        } else {
                            vec![]
                        };
                        lead.into_iter().chain(rest).collect()
                    }
                }
                (false, StandardType::III) => {
                    if 2 * r <= mi - 1 {
                        vec![plus(e(mi - 1)), minus(e(mi - r - 1)), minus(mi - 3)]
                    } else if r < mi - 1 {
                        vec![plus(e(mi - 1)), minus(e(mi - r - 1)), minus(e(mi - r - 2))]
                    } else if r == mi - 1 {
                        vec![plus(e(mi - 1)), minus(0)]
                    } else {
                        vec![plus(e(mi - 1))]
                    }
                }
                (true, StandardType::I) => {
                    let lead = [plus(e(mi - 1)), minus(e(mi - s - 1))];
                    let rest: Vec<Term> = if r == 1 {
                        vec![minus(e(mi - 2))]
                    } else if r <= s {
                        vec![minus(e(mi - r - 1)), minus(e(mi - s - 2))]
                    } else if r < mi - 1 {
                        vec![minus(e(mi - r - 1)), minus(e(mi - r - 2))]
                    } else if r == mi - 1 {
                        vec![minus(0)]
                    } else {
                        vec![]
                    };
                    lead.into_iter().chain(rest).collect()
                }
                (true, StandardType::II) => {
                    let lead = [plus(e(mi - 1)), plus(e(s - 1))];
                    let rest: Vec<Term> = if r <= s - 1 {
                        vec![minus(e(mi - r - 1)), minus(e(mi - s - 1))]
                    } else if r < mi - 1 {
                        vec![minus(e(mi - r - 1)), minus(e(mi - r - 2))]
                    } else if r == mi - 1 {
                        vec![minus(0)]
                    } else {
                        vec![]
                    };
                    lead.into_iter().chain(rest).collect()
                }
                (true, StandardType::III) => {
                    if r <= s {
                        vec![plus(e(mi - 1)), minus(e(mi - r - 1)), minus(2 * mi - (2 * s + 3))]
                    } else if r < mi - 1 {
                        vec![plus(e(mi - 1)), minus(e(mi - r - 1)), minus(e(mi - r - 2))]
                    } else if r == mi - 1 {
                        vec![plus(e(mi - 1)), minus(0)]
                    } else {
                        vec![plus(e(mi - 1))]
                    }
                }
            };
            evaluate(q, &terms)
        })
        .collect();
    Ok(values)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub r: usize,
    pub formula: u64,
    pub brute: u64,
}

/// The uncorrected closed forms next to the exhaustive hierarchy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub uncorrected: Vec<LiteralValue>,
    /// `r` where the uncorrected value is an integer different from the exhaustive one.
    pub disagrees_at: Vec<usize>,
    /// `r` where the uncorrected value is not an integer.
    pub non_integral_at: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct StageTimings {
    pub classify_ms: f64,
    pub defining_set_ms: f64,
    pub formula_ms: f64,
    pub brute_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HierarchyReport {
    pub classification: Classification,
    pub n: usize,
    pub code_dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<WeightHierarchy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<WeightHierarchy>,
    pub mismatches: Vec<Mismatch>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<Audit>,
    pub timings: StageTimings,
}

impl HierarchyReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Which hierarchies [`analyze`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Formula,
    Brute,
    Both,
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

pub const NOTE_NO_CLOSED_FORM_A0: &str = "no closed form for a=0; use brute";
pub const NOTE_NOT_FULL_DIMENSION: &str =
    "code dimension is below m: formula not applicable, brute only (subcode enumeration)";

/// Classifies `f`, builds `D_f` and its code, and computes the requested
/// hierarchies. With both requested, disagreements are listed per `r`.
pub fn analyze(f: &QuadraticForm, a: FieldElement, which: Which, opts: &GhwOptions) -> Result<HierarchyReport> {
    let field = f.field();
    let (q, m) = (field.q(), field.m());
    let a_label = field
        .base()
        .label(a)
        .ok_or_else(|| Error::InvalidArgument(format!("target {a} is not in the base field")))?;
    let mut timings = StageTimings::default();

    let t0 = Instant::now();
    let classification = f.classify(&opts.limits)?;
    timings.classify_ms = elapsed_ms(t0);
    if classification.rank == 0 {
        return Err(Error::InvalidClassification("zero form".into()));
    }

    let t0 = Instant::now();
    let d = DefiningSet::new(f, a, &opts.limits)?;
    let code = LinearCode::from_defining_set(&d, f.basis())?;
    timings.defining_set_ms = elapsed_ms(t0);

    let mut notes = Vec::new();
    let full = code.has_full_dimension();
    let want_formula = matches!(which, Which::Formula | Which::Both);
    let want_brute = matches!(which, Which::Brute | Which::Both);
    let mut formula_allowed = true;
    if a_label == 0 {
        if which == Which::Formula {
            return Err(Error::InvalidArgument(NOTE_NO_CLOSED_FORM_A0.into()));
        }
        notes.push(NOTE_NO_CLOSED_FORM_A0.to_string());
        formula_allowed = false;
    }
    if !full {
        if which == Which::Formula {
            return Err(Error::InvalidArgument(NOTE_NOT_FULL_DIMENSION.into()));
        }
        notes.push(NOTE_NOT_FULL_DIMENSION.to_string());
        formula_allowed = false;
    }

    let t0 = Instant::now();
    let formula = if want_formula && formula_allowed {
        Some(hierarchy_formula(q, m, &classification)?)
    } else {
        None
    };
    timings.formula_ms = elapsed_ms(t0);

    let t0 = Instant::now();
    let brute = if want_brute || !formula_allowed {
        Some(if full {
            hierarchy_via_subspaces(&d, opts)?
        } else {
            WeightHierarchy::new(code.hierarchy_direct(opts)?, Method::Direct)
        })
    } else {
        None
    };
    timings.brute_ms = elapsed_ms(t0);

    let mismatches = match (&formula, &brute) {
        (Some(fh), Some(bh)) => fh
            .values
            .iter()
            .zip(&bh.values)
            .enumerate()
            .filter(|(_, (x, y))| x != y)
            .map(|(i, (&x, &y))| Mismatch {
                r: i + 1,
                formula: x,
                brute: y,
            })
            .collect(),
        _ => Vec::new(),
    };

    let audit = if opts.audit && a_label != 0 {
        let uncorrected = uncorrected_hierarchy(q, m, &classification)?;
        let reference = brute.as_ref().or(formula.as_ref()).map(|h| h.values.clone());
        let mut disagrees_at = Vec::new();
        let mut non_integral_at = Vec::new();
        for (i, v) in uncorrected.iter().enumerate() {
            match v {
                LiteralValue::NonIntegral { .. } => non_integral_at.push(i + 1),
                LiteralValue::Exact(x) => {
                    if let Some(reference) = &reference {
                        if reference.get(i).map(|&y| y as i64) != Some(*x) {
                            disagrees_at.push(i + 1);
                        }
                    }
                }
            }
        }
        Some(Audit {
            uncorrected,
            disagrees_at,
            non_integral_at,
        })
    } else {
        None
    };

    Ok(HierarchyReport {
        classification,
        n: d.len(),
        code_dimension: code.dimension(),
        formula,
        brute,
        mismatches,
        notes,
        audit,
        timings,
    })
}

/// Formula and exhaustive hierarchies side by side.
pub fn verify_hierarchy(f: &QuadraticForm, a: FieldElement, opts: &GhwOptions) -> Result<HierarchyReport> {
    analyze(f, a, Which::Both, opts)
}
