use ghw_core::ghw::{
    count_from_restriction, ghw_via_subspaces, hierarchy_formula, hierarchy_via_subspaces, uncorrected_hierarchy, LiteralValue,
};
use ghw_core::{
    Classification, DefiningSet, Field, FieldElement, FormMatrix, GhwOptions, Limits, LinearCode, QuadraticForm, StandardType,
};

mod common;

const TYPES: [StandardType; 3] = [StandardType::I, StandardType::II, StandardType::III];

#[test]
fn restriction_counts_match_canonical_instances() {
    for (e, max_d) in [(1u32, 6usize), (2, 5)] {
        for d in 1..=max_d {
            let field = Field::with_default_modulus(e, d as u32).unwrap();
            let fq = field.base();
            for r in 0..=d {
                for st in TYPES {
                    let Ok(c) = Classification::from_rank(d, r, st) else { continue };
                    let mat = FormMatrix::canonical(fq, d, &c).unwrap();
                    for a in fq.labels().filter(|&a| a != 0) {
                        let exhaustive = mat.count_solutions(a, &Limits::default()).unwrap();
                        let predicted = count_from_restriction(d, r, st, a, fq.q() as u64).unwrap();
                        assert_eq!(predicted, exhaustive, "q={} d={d} R={r} {st} a={a}", fq.q());
                    }
                }
            }
        }
    }
}

fn exact(values: &[LiteralValue]) -> Option<Vec<u64>> {
    values
        .iter()
        .map(|v| match v {
            LiteralValue::Exact(x) => u64::try_from(*x).ok(),
            LiteralValue::NonIntegral { .. } => None,
        })
        .collect()
}

#[test]
fn unified_family_reproduces_the_nondegenerate_forms() {
    for q in [2u64, 4] {
        for m in 3..=8usize {
            for st in TYPES {
                let Ok(c) = Classification::from_rank(m, m, st) else { continue };
                let unified = hierarchy_formula(q, m, &c).unwrap().values;
                let literal = exact(&uncorrected_hierarchy(q, m, &c).unwrap()).unwrap();
                assert_eq!(unified, literal, "q={q} m={m} {st}");
            }
        }
    }
}

#[test]
fn uncorrected_degenerate_forms_differ_only_where_expected() {
    for q in [2u64, 4] {
        for m in 3..=8usize {
            for t in 1..m {
                for st in TYPES {
                    let Ok(c) = Classification::from_rank(m, t, st) else { continue };
                    let Ok(unified) = hierarchy_formula(q, m, &c) else { continue };
                    let literal = uncorrected_hierarchy(q, m, &c).unwrap();
                    match st {
                        StandardType::I => assert_eq!(exact(&literal).unwrap(), unified.values),
                        StandardType::II => {
                            // The leading term q^(s-1) stands in for q^(m-s-1) in every row.
                            let gap = q.pow((m - c.s - 1) as u32) as i64 - q.pow((c.s - 1) as u32) as i64;
                            for (lit, uni) in literal.iter().zip(&unified.values) {
                                let LiteralValue::Exact(x) = lit else { panic!("integral") };
                                let r_gap = *uni as i64 - *x;
                                assert_eq!(r_gap, gap, "m={m} t={t}: {lit:?} vs {uni}");
                            }
                        }
                        StandardType::III => {
                            for (idx, lit) in literal.iter().enumerate() {
                                let r = idx + 1;
                                let non_integral = matches!(lit, LiteralValue::NonIntegral { .. });
                                assert_eq!(non_integral, r <= c.s && r < m - 1, "m={m} t={t} r={r}");
                                if !non_integral {
                                    assert_eq!(*lit, LiteralValue::Exact(unified.values[idx] as i64));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

fn defining_set(m: u32, k: u64, j: u32) -> DefiningSet {
    let field = Field::with_default_modulus(1, m).unwrap();
    let f = QuadraticForm::monomial(&field, field.w_pow(k), 0, j).unwrap();
    DefiningSet::new(&f, FieldElement::ONE, &Limits::default()).unwrap()
}

#[test]
fn single_weights() {
    let opts = GhwOptions::default();
    assert_eq!(ghw_via_subspaces(&defining_set(6, 1, 1), 1, &opts).unwrap().0, 16);
    assert_eq!(ghw_via_subspaces(&defining_set(6, 1, 2), 3, &opts).unwrap().0, 26);
    let d = defining_set(5, 1, 1);
    let (v, w) = ghw_via_subspaces(&d, 5, &opts).unwrap();
    assert_eq!((v, w.dim()), (d.len() as u64, 0));
}

#[test]
fn witnesses_attain_the_maximum_with_the_predicted_type() {
    let opts = GhwOptions {
        witnesses: true,
        ..GhwOptions::default()
    };
    for (m, k, j) in [(4u32, 1u64, 1u32), (5, 1, 1), (6, 1, 1), (6, 3, 1), (4, 0, 1), (6, 0, 2)] {
        let d = defining_set(m, k, j);
        let f = d.form();
        let h = hierarchy_via_subspaces(&d, &opts).unwrap();
        for (idx, w) in h.witnesses.unwrap().iter().enumerate() {
            let r = idx + 1;
            let dim = m as usize - r;
            assert_eq!(w.dim(), dim);
            let hits = d.intersection_count(w);
            assert_eq!(d.len() as u64 - hits, h.values[idx]);
            assert_eq!(hits, common::intersection_by_field(f, FieldElement::ONE, w));
            let c = f.restrict(w).classify(&Limits::default()).unwrap();
            if c.rank % 2 == 0 && c.rank > 0 {
                let plus = 2u64.pow(dim as u32 - 1) + 2u64.pow((dim - (c.rank + 2) / 2) as u32);
                if hits == plus {
                    assert_eq!(c.standard, StandardType::II, "m={m} w^{k} r={r}");
                }
            }
        }
    }
}

#[test]
fn subcode_supports_agree_with_subspace_search() {
    let opts = GhwOptions::default();
    for (m, k, j) in [(4u32, 1u64, 1u32), (4, 0, 1), (5, 3, 1), (6, 0, 2), (6, 5, 1)] {
        let d = defining_set(m, k, j);
        let code = LinearCode::from_defining_set(&d, d.form().basis()).unwrap();
        assert!(code.has_full_dimension());
        let direct = code.hierarchy_direct(&opts).unwrap();
        let via = hierarchy_via_subspaces(&d, &opts).unwrap().values;
        assert_eq!(direct, via, "m={m} w^{k} j={j}");
        let dmin = code.minimum_distance(&Limits::default()).unwrap().unwrap();
        assert_eq!(dmin as u64, via[0]);
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let d = defining_set(6, 1, 1);
    let one = GhwOptions {
        witnesses: true,
        ..GhwOptions::default()
    };
    for threads in [2, 3, 8] {
        let many = GhwOptions { threads, ..one.clone() };
        assert_eq!(hierarchy_via_subspaces(&d, &one).unwrap(), hierarchy_via_subspaces(&d, &many).unwrap());
        let code = LinearCode::from_defining_set(&d, d.form().basis()).unwrap();
        assert_eq!(code.hierarchy_direct(&one).unwrap(), code.hierarchy_direct(&many).unwrap());
    }
}

#[test]
fn hierarchies_over_gf4() {
    let opts = GhwOptions::default();
    let field = Field::with_default_modulus(2, 3).unwrap();
    for k in [0u64, 1, 5, 21] {
        for j in [1u32, 2] {
            let f = QuadraticForm::monomial(&field, field.w_pow(k), 0, j).unwrap();
            let c = f.classify(&Limits::default()).unwrap();
            for a in 1..4u8 {
                let target = field.base().element(a);
                let d = DefiningSet::new(&f, target, &Limits::default()).unwrap();
                let code = LinearCode::from_defining_set(&d, f.basis()).unwrap();
                if !code.has_full_dimension() {
                    continue;
                }
                let brute = hierarchy_via_subspaces(&d, &opts).unwrap();
                assert_eq!(code.hierarchy_direct(&opts).unwrap(), brute.values);
                assert!(brute.is_strictly_increasing());
                assert_eq!(hierarchy_formula(4, 3, &c).unwrap().values, brute.values, "w^{k} j={j} a={a}");
            }
        }
    }
}

#[test]
fn short_codes_fall_back_to_subcode_search() {
    use ghw_core::ghw::{analyze, Method, Which, NOTE_NOT_FULL_DIMENSION};
    use ghw_core::DoPolynomial;
    let field = Field::with_default_modulus(1, 4).unwrap();
    let opts = GhwOptions::default();
    let mut found = None;
    'search: for k1 in 0..15 {
        for k2 in 0..15 {
            let terms = [(0, 0, field.w_pow(k1)), (0, 1, field.w_pow(k2))];
            let poly = DoPolynomial::new(&field, terms).unwrap();
            let f = QuadraticForm::new(poly, ghw_core::BasisOverFq::polynomial(&field).unwrap());
            let c = f.classify(&opts.limits).unwrap();
            if (c.rank, c.standard) == (2, StandardType::I) {
                found = Some(f);
                break 'search;
            }
        }
    }
    let f = found.expect("a rank-2 Type I form on GF(16)");
    let report = analyze(&f, FieldElement::ONE, Which::Both, &opts).unwrap();
    assert_eq!(report.code_dimension, 3);
    assert!(report.formula.is_none());
    assert!(report.notes.iter().any(|n| n == NOTE_NOT_FULL_DIMENSION));
    let direct = report.brute.unwrap();
    assert_eq!(direct.method, Method::Direct);
    assert_eq!(direct.values.len(), 3);
    assert!(direct.is_strictly_increasing());
    assert_eq!(*direct.values.last().unwrap(), report.n as u64);
    assert!(analyze(&f, FieldElement::ONE, Which::Formula, &opts).is_err());
}
