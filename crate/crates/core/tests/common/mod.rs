//! Test corpus and independent oracles shared by the integration tests.
#![allow(dead_code, clippy::type_complexity)]

use ghw_core::linalg::CoordVec;
use ghw_core::{BasisOverFq, Field, FieldElement, Limits, QuadraticForm, Subspace, SubspaceLattice};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct CorpusForm {
    pub name: String,
    pub form: QuadraticForm,
}

fn push(out: &mut Vec<CorpusForm>, name: String, form: QuadraticForm) {
    if !form.poly().is_zero() {
        out.push(CorpusForm { name, form });
    }
}

fn lambdas(field: &Field, step: u64) -> impl Iterator<Item = (u64, FieldElement)> + '_ {
    let order = field.spec().order() - 1;
    (0..order).step_by(step as usize).map(move |k| (k, field.w_pow(k)))
}

/// A basis of random field elements, drawn until independent.
pub fn random_basis(field: &Field, seed: u64) -> BasisOverFq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = field.spec().order();
    loop {
        let elems = (0..field.m())
            .map(|_| field.element(rng.random_range(1..order) as u32).unwrap())
            .collect();
        if let Ok(b) = BasisOverFq::new(field, elems) {
            return b;
        }
    }
}

/// Monomial and multi-term forms over GF(2) and GF(4), in polynomial and random
/// bases. Zero forms are left out.
pub fn corpus() -> Vec<CorpusForm> {
    let mut out = Vec::new();
    for m in 2..=6u32 {
        let field = Field::with_default_modulus(1, m).unwrap();
        let step = if m <= 4 { 1 } else { 5 };
        for j in 0..=m / 2 {
            for (k, lambda) in lambdas(&field, step) {
                let f = QuadraticForm::monomial(&field, lambda, 0, j).unwrap();
                push(&mut out, format!("q2 m{m} w^{k} x^(1+2^{j})"), f);
            }
        }
    }
    for m in 2..=3u32 {
        let field = Field::with_default_modulus(2, m).unwrap();
        for j in 0..m {
            for (k, lambda) in lambdas(&field, 7) {
                let f = QuadraticForm::monomial(&field, lambda, 0, j).unwrap();
                push(&mut out, format!("q4 m{m} w^{k} x^(1+4^{j})"), f);
            }
        }
    }
    let multi: [(u32, u32, &[(u32, u32, u64)]); 5] = [
        (1, 5, &[(0, 1, 1), (0, 2, 0)]),
        (1, 6, &[(0, 1, 0), (0, 2, 5), (0, 3, 1)]),
        (1, 6, &[(1, 2, 3), (0, 0, 2)]),
        (2, 3, &[(0, 0, 1), (0, 1, 0)]),
        (2, 3, &[(0, 1, 9), (1, 2, 4), (0, 2, 1)]),
    ];
    for (e, m, terms) in multi {
        let field = Field::with_default_modulus(e, m).unwrap();
        let t: Vec<_> = terms.iter().map(|&(i, j, k)| (i, j, field.w_pow(k))).collect();
        let poly = ghw_core::DoPolynomial::new(&field, t).unwrap();
        let basis = BasisOverFq::polynomial(&field).unwrap();
        push(&mut out, format!("q{} m{m} {terms:?}", 1 << e), QuadraticForm::new(poly.clone(), basis));
        let basis = random_basis(&field, 17 * m as u64 + e as u64);
        push(&mut out, format!("q{} m{m} {terms:?} random basis", 1 << e), QuadraticForm::new(poly, basis));
    }
    out
}

/// A random `d`-dimensional subspace of `GF(q)^m`.
pub fn random_subspace(lattice: &SubspaceLattice, d: usize, rng: &mut impl Rng) -> Subspace {
    let q = lattice.base().q() as u8;
    let m = lattice.ambient();
    loop {
        let rows: Vec<CoordVec> = (0..d)
            .map(|_| (0..m).map(|_| rng.random_range(0..q)).collect())
            .collect();
        let h = lattice.canonicalize(rows);
        if h.dim() == d {
            return h;
        }
    }
}

/// `|{x ∈ F : f(x) = a}|` by evaluating the trace polynomial at every element.
pub fn count_by_field(f: &QuadraticForm, a: FieldElement) -> u64 {
    f.field()
        .elements(&Limits::default())
        .unwrap()
        .filter(|&x| f.eval(x) == a)
        .count() as u64
}

/// `|D_f ∩ H|` element by element: map each vector of `H` into the field and
/// evaluate the trace polynomial.
pub fn intersection_by_field(f: &QuadraticForm, a: FieldElement, h: &Subspace) -> u64 {
    let lattice = SubspaceLattice::new(f.field().base(), f.field().m());
    lattice
        .elements(h, &Limits::default())
        .unwrap()
        .filter(|v| f.eval(f.basis().from_coords(v)) == a)
        .count() as u64
}

/// Number of `r`-dimensional subspaces of `GF(q)^m` by the q-Pascal recursion.
pub fn q_pascal(m: usize, r: usize, q: u128) -> u128 {
    let mut row = vec![1u128];
    for n in 1..=m {
        let mut next = vec![1u128; n + 1];
        for k in 1..n {
            next[k] = row[k - 1] + q.pow(k as u32) * row[k];
        }
        row = next;
    }
    if r <= m {
        row[r]
    } else {
        0
    }
}
