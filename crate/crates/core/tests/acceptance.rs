//! Acceptance criteria 1 to 11, one line each. Exits non-zero if any fails.

#![allow(clippy::type_complexity)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use ghw_core::ghw::{analyze, hierarchy_formula, hierarchy_via_subspaces, Which};
use ghw_core::quadform::count_solutions_formula;
use ghw_core::subspace::gaussian_binomial;
use ghw_core::{
    DefiningSet, Field, FieldElement, GhwOptions, Limits, LinearCode, QuadraticForm, StandardType, SubspaceLattice,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;

/// A computed hierarchy with the code parameters needed for the structural checks.
struct Seen {
    label: String,
    values: Vec<u64>,
    n: u64,
    k: usize,
}

static SEEN: Mutex<Vec<Seen>> = Mutex::new(Vec::new());

fn record(label: impl Into<String>, values: &[u64], n: usize, k: usize) {
    SEEN.lock().unwrap().push(Seen {
        label: label.into(),
        values: values.to_vec(),
        n: n as u64,
        k,
    });
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Scans `λ = w^k` for the first binary form `Tr(λ x^(1+2^j))` with the given
/// rank and standard type, and returns both hierarchies.
fn worked(m: u32, j: u32, t: usize, st: StandardType, expected: &[u64], budget: Duration) -> Check {
    let start = Instant::now();
    let field = Field::with_default_modulus(1, m).map_err(|e| e.to_string())?;
    let limits = Limits::default();
    let opts = GhwOptions::default();
    for k in 0..field.spec().order() - 1 {
        let f = QuadraticForm::monomial(&field, field.w_pow(k), 0, j).unwrap();
        let c = f.classify(&limits).unwrap();
        if (c.rank, c.standard) != (t, st) {
            continue;
        }
        let d = DefiningSet::new(&f, FieldElement::ONE, &limits).unwrap();
        let code = LinearCode::from_defining_set(&d, f.basis()).unwrap();
        if !code.has_full_dimension() {
            continue;
        }
        let formula = hierarchy_formula(2, m as usize, &c).map_err(|e| e.to_string())?.values;
        let brute = hierarchy_via_subspaces(&d, &opts).map_err(|e| e.to_string())?.values;
        record(format!("m={m} w^{k}"), &brute, d.len(), code.dimension());
        let elapsed = start.elapsed();
        ensure(formula == expected, || format!("formula {formula:?} != {expected:?}"))?;
        ensure(brute == expected, || format!("brute {brute:?} != {expected:?}"))?;
        ensure(elapsed < budget, || format!("took {elapsed:?}, budget {budget:?}"))?;
        return Ok(format!("λ = w^{k}, ({t}, {st}) -> {brute:?} in {elapsed:.2?}"));
    }
    Err(format!("no λ gives ({t}, {st}) with a full-dimensional code"))
}

fn c1() -> Check {
    worked(4, 1, 4, StandardType::I, &[2, 3, 5, 6], Duration::from_secs(1))
}
fn c2() -> Check {
    worked(6, 1, 6, StandardType::II, &[16, 24, 30, 33, 35, 36], Duration::from_secs(30))
}
fn c3() -> Check {
    worked(5, 1, 5, StandardType::III, &[6, 10, 13, 15, 16], Duration::from_secs(5))
}
fn c4() -> Check {
    worked(6, 1, 4, StandardType::I, &[8, 12, 18, 21, 23, 24], Duration::from_secs(30))
}

/// Finds the first form of the family with the classification and runs the
/// verifier in audit mode.
fn audited(m: u32, j: u32, t: usize, st: StandardType) -> Result<ghw_core::HierarchyReport, String> {
    let field = Field::with_default_modulus(1, m).unwrap();
    let opts = GhwOptions {
        audit: true,
        ..GhwOptions::default()
    };
    for k in 0..field.spec().order() - 1 {
        let f = QuadraticForm::monomial(&field, field.w_pow(k), 0, j).unwrap();
        let c = f.classify(&opts.limits).unwrap();
        if (c.rank, c.standard) == (t, st) {
            let report = analyze(&f, FieldElement::ONE, Which::Both, &opts).map_err(|e| e.to_string())?;
            if report.code_dimension == m as usize {
                return Ok(report);
            }
        }
    }
    Err(format!("no λ gives ({t}, {st})"))
}

fn c5() -> Check {
    let report = audited(4, 1, 2, StandardType::II)?;
    let brute = report.brute.as_ref().unwrap().values.clone();
    let formula = report.formula.as_ref().unwrap().values.clone();
    record("example 5", &brute, report.n, report.code_dimension);
    ensure(brute == [6, 9, 11, 12], || format!("brute {brute:?}"))?;
    ensure(formula == brute, || format!("formula {formula:?}"))?;
    let audit = report.audit.unwrap();
    ensure(audit.disagrees_at == [1, 2, 3, 4], || format!("uncorrected disagrees at {:?}", audit.disagrees_at))?;
    Ok(format!("brute = formula = {brute:?}; uncorrected {:?} disagrees at r = 1..4", audit.uncorrected))
}

fn c6() -> Check {
    let report = audited(6, 2, 5, StandardType::III)?;
    let s = report.classification.s;
    let brute = report.brute.as_ref().unwrap().values.clone();
    let formula = report.formula.as_ref().unwrap().values.clone();
    record("example 6", &brute, report.n, report.code_dimension);
    ensure(brute == [12, 20, 26, 29, 31, 32], || format!("brute {brute:?}"))?;
    ensure(formula[..s] == brute[..s], || format!("formula {formula:?} at r <= {s}"))?;
    ensure(formula == brute, || format!("formula {formula:?}"))?;
    let audit = report.audit.unwrap();
    let expected: Vec<usize> = (1..=s).collect();
    ensure(audit.non_integral_at == expected, || format!("non-integral at {:?}", audit.non_integral_at))?;
    Ok(format!("brute = formula = {brute:?}; uncorrected exponent non-integral at r = {:?}", audit.non_integral_at))
}

fn c7() -> Check {
    let start = Instant::now();
    let opts = GhwOptions::default();
    let (mut verified, mut zero, mut partial) = (0, 0, 0);
    for m in 2..=6u32 {
        let field = Field::with_default_modulus(1, m).unwrap();
        for i in 1..=m / 2 {
            for k in 0..field.spec().order() - 1 {
                let f = QuadraticForm::monomial(&field, field.w_pow(k), 0, i).unwrap();
                if f.classify(&opts.limits).unwrap().rank == 0 {
                    zero += 1;
                    continue;
                }
                let report = analyze(&f, FieldElement::ONE, Which::Both, &opts).map_err(|e| e.to_string())?;
                if report.code_dimension < m as usize {
                    partial += 1;
                    continue;
                }
                let brute = &report.brute.as_ref().unwrap().values;
                record(format!("sweep m={m} i={i} w^{k}"), brute, report.n, report.code_dimension);
                ensure(report.agrees(), || format!("m={m} i={i} w^{k}: {:?}", report.mismatches))?;
                verified += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(15 * 60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{verified} forms agree; {zero} zero forms and {partial} with k < m excluded; {elapsed:.2?}"
    ))
}

fn c8() -> Check {
    let corpus = common::corpus();
    let mut checks = 0;
    for c in &corpus {
        let f = &c.form;
        let cl = f.classify(&Limits::default()).unwrap();
        let fq = f.field().base();
        for a in fq.labels() {
            let exhaustive = common::count_by_field(f, fq.element(a));
            let formula = count_solutions_formula(f.field().q(), f.field().m(), &cl, a);
            ensure(exhaustive == formula, || format!("{} a={a}: {exhaustive} vs {formula}", c.name))?;
            checks += 1;
        }
    }
    Ok(format!("{} forms, {checks} (form, a) pairs", corpus.len()))
}

fn c9() -> Check {
    let corpus = common::corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checks = 0;
    for c in &corpus {
        let f = &c.form;
        let m = f.field().m();
        let lattice = SubspaceLattice::new(f.field().base(), m);
        let fq = f.field().base();
        for n in 0..200 {
            let h = common::random_subspace(&lattice, n % (m + 1), &mut rng);
            let restricted = f.restrict(&h);
            for a in fq.labels() {
                let direct = common::intersection_by_field(f, fq.element(a), &h);
                let via = restricted.count_solutions(a, &Limits::default()).unwrap();
                ensure(direct == via, || format!("{} dim {}: {direct} vs {via}", c.name, h.dim()))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} forms x 200 subspaces, {checks} counts", corpus.len()))
}

fn c11() -> Check {
    let opts = GhwOptions::default();
    let (mut codes, mut skipped) = (0, 0);
    for c in common::corpus() {
        let f = &c.form;
        let fq = f.field().base();
        if f.classify(&opts.limits).unwrap().rank == 0 {
            skipped += 1;
            continue;
        }
        for a in fq.labels().filter(|&a| a != 0) {
            let d = DefiningSet::new(f, fq.element(a), &opts.limits).unwrap();
            let code = LinearCode::from_defining_set(&d, f.basis()).unwrap();
            let k = code.dimension();
            if !code.has_full_dimension() || (fq.q() as u64).pow(k as u32) > 1 << 12 {
                skipped += 1;
                continue;
            }
            let direct = code.hierarchy_direct(&opts).map_err(|e| e.to_string())?;
            let via = hierarchy_via_subspaces(&d, &opts).map_err(|e| e.to_string())?.values;
            ensure(direct == via, || format!("{} a={a}: {direct:?} vs {via:?}", c.name))?;
            record(format!("{} a={a}", c.name), &via, d.len(), k);
            codes += 1;
        }
    }
    Ok(format!("{codes} codes agree; {skipped} with k < m or q^k > 2^12 excluded (zero forms count once)"))
}

fn c10() -> Check {
    let seen = SEEN.lock().unwrap();
    for s in seen.iter() {
        let k = s.k as u64;
        ensure(s.values.windows(2).all(|w| w[0] < w[1]), || format!("{}: not increasing {:?}", s.label, s.values))?;
        for (idx, &d) in s.values.iter().enumerate() {
            let r = idx as u64 + 1;
            ensure(d <= s.n - k + r, || format!("{}: d_{r} = {d} > n - k + r", s.label))?;
        }
        ensure(s.values.last() == Some(&s.n), || format!("{}: d_m != n", s.label))?;
    }
    let mut counted = 0;
    for (e, q) in [(1u32, 2u64), (2, 4)] {
        for m in 1..=6u32 {
            let field = Field::with_default_modulus(e, m).unwrap();
            let lattice = SubspaceLattice::new(field.base(), m as usize);
            for r in 0..=m as usize {
                let len = lattice.enumerate(r, &Limits::default()).unwrap().count() as u128;
                let expected = gaussian_binomial(m as usize, r, q);
                ensure(len == expected, || format!("q={q} m={m} r={r}: {len} vs {expected}"))?;
                counted += len;
            }
        }
    }
    ensure(!seen.is_empty(), || "no hierarchies recorded".into())?;
    Ok(format!("{} hierarchies; {counted} subspaces enumerated", seen.len()))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Check); 11] = [
        (1, "example 1 (m=4, t=4, I)", c1),
        (2, "example 2 (m=6, t=6, II)", c2),
        (3, "example 3 (m=5, t=5, III)", c3),
        (4, "example 4 (m=6, t=4, I)", c4),
        (5, "example 5 and the q^(s-1) term", c5),
        (6, "example 6 and the m-(2s+3)/2 exponent", c6),
        (7, "full monomial sweep m=2..6", c7),
        (8, "solution counts for every corpus form and target", c8),
        (9, "restriction counts on random subspaces", c9),
        (11, "subcode supports against subspace search", c11),
        (10, "monotonicity, Singleton, d_m = n, subspace counts", c10),
    ];
    let mut lines = Vec::new();
    for (id, name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        lines.push((id, name, outcome));
    }
    lines.sort_by_key(|(id, _, _)| *id);
    let mut failed = 0;
    for (id, name, outcome) in &lines {
        match outcome {
            Ok(detail) => println!("criterion {id:>2}: PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL  {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", lines.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
