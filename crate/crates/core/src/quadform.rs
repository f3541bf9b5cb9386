//! Quadratic forms `f(x) = Tr(F(x))` on `GF(q^m)`, `F` a Dembowski–Ostrom polynomial.
//!
//! A form has two faces here. [`QuadraticForm`] evaluates through the field
//! (Frobenius powers and the relative trace); [`FormMatrix`] is the same form in
//! coordinates, `x M xᵀ` with `M` upper triangular. Every structural question
//! (kernels, rank, type, standard type, restriction) is answered on the matrix.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{BaseField, BasisOverFq, Field, FieldElement};
use crate::limits::{pow_sat, Limits};
use crate::linalg::{self, CoordVec};
use crate::subspace::{Subspace, SubspaceLattice};

/// `coeff · x^(q^i + q^j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub coeff: FieldElement,
}

/// A Dembowski–Ostrom polynomial `Σ λ_ij x^(q^i + q^j)`, `0 ≤ i ≤ j < m`.
///
/// Terms are kept sorted by `(i, j)` with repeated index pairs merged and zero
/// coefficients dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DoPolynomial {
    terms: Vec<Monomial>,
}

impl DoPolynomial {
    pub fn new<I>(field: &Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, FieldElement)>,
    {
        let m = field.m() as u32;
        let mut out: Vec<Monomial> = Vec::new();
        for (i, j, coeff) in terms {
            field.element(coeff.bits())?;
            if i >= m || j >= m {
                return Err(Error::InvalidArgument(format!(
                    "monomial index pair ({i}, {j}) out of range for m = {m}"
                )));
            }
            let (i, j) = (i.min(j), i.max(j));
            match out.iter_mut().find(|t| t.i == i && t.j == j) {
                Some(t) => t.coeff = field.add(t.coeff, coeff),
                None => out.push(Monomial { i, j, coeff }),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        out.sort_by_key(|t| (t.i, t.j));
        Ok(DoPolynomial { terms: out })
    }

    /// `coeff · x^(q^i + q^j)`.
    pub fn monomial(field: &Field, coeff: FieldElement, i: u32, j: u32) -> Result<Self> {
        Self::new(field, [(i, j, coeff)])
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, field: &Field, x: FieldElement) -> FieldElement {
        let e = field.spec().e();
        let mut powers = Vec::with_capacity(field.m());
        let mut y = x;
        for _ in 0..field.m() {
            powers.push(y);
            y = field.frobenius(y, e);
        }
        self.terms.iter().fold(FieldElement::ZERO, |acc, t| {
            let v = field.mul(powers[t.i as usize], powers[t.j as usize]);
            field.add(acc, field.mul(t.coeff, v))
        })
    }
}

/// Standard type of a quadratic form in characteristic two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StandardType {
    I,
    II,
    III,
}

impl fmt::Display for StandardType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            StandardType::I => "I",
            StandardType::II => "II",
            StandardType::III => "III",
        })
    }
}

/// Rank, type and standard type of a quadratic form on `m` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Classification {
    /// Number of variables.
    pub m: usize,
    /// `rank f = m - dim ker f`.
    pub rank: usize,
    /// `dim(ker ℓ_f / ker f)`, 0 or 1.
    pub form_type: u8,
    pub standard: StandardType,
    /// `⌊rank / 2⌋`.
    pub s: usize,
    pub dim_ker_bilinear: usize,
    pub dim_ker_form: usize,
    pub degenerate: bool,
}

impl Classification {
    /// The classification implied by rank and standard type alone.
    pub fn from_rank(m: usize, rank: usize, standard: StandardType) -> Result<Self> {
        if rank > m {
            return Err(Error::InvalidClassification(format!(
                "rank {rank} exceeds {m} variables"
            )));
        }
        let odd = rank % 2 == 1;
        match (odd, standard) {
            (true, StandardType::III) | (false, StandardType::I) => {}
            (false, StandardType::II) if rank >= 2 => {}
            _ => {
                return Err(Error::InvalidClassification(format!(
                    "rank {rank} cannot have standard type {standard}"
                )))
            }
        }
        let form_type = odd as u8;
        Ok(Classification {
            m,
            rank,
            form_type,
            standard,
            s: rank / 2,
            dim_ker_bilinear: m - rank + form_type as usize,
            dim_ker_form: m - rank,
            degenerate: rank < m,
        })
    }
}

fn delta_term(q: u64, a: u8) -> i128 {
    if a == 0 {
        q as i128 - 1
    } else {
        -1
    }
}

/// Number of solutions of `f(x) = a` from rank and standard type alone.
///
/// Only whether `a` is zero matters; `a` is a base-field label.
pub fn count_solutions_formula(q: u64, m: usize, c: &Classification, a: u8) -> u64 {
    if m == 0 {
        return (a == 0) as u64;
    }
    let qi = q as i128;
    let main = qi.pow(m as u32 - 1);
    let value = match c.standard {
        StandardType::III => main,
        t => {
            let tail = qi.pow((m - (c.rank + 2) / 2) as u32) * delta_term(q, a);
            if t == StandardType::I {
                main + tail
            } else {
                main - tail
            }
        }
    };
    value as u64
}

/// A quadratic form `x M xᵀ` over `GF(q)` with `M` upper triangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatrix {
    fq: BaseField,
    entries: Vec<CoordVec>,
}

impl FormMatrix {
    /// Validates that `entries` is square and upper triangular.
    pub fn from_upper(fq: &BaseField, entries: Vec<CoordVec>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument("form matrix is not square".into()));
            }
            if row[..i].iter().any(|&x| x != 0) {
                return Err(Error::InvalidArgument(
                    "form matrix has entries below the diagonal".into(),
                ));
            }
            if row.iter().any(|&x| x as usize >= fq.q()) {
                return Err(Error::InvalidArgument("entry outside the base field".into()));
            }
        }
        Ok(FormMatrix {
            fq: fq.clone(),
            entries,
        })
    }

    /// Folds an arbitrary square matrix `A` into the upper-triangular matrix of
    /// the same quadratic form: `(i,j) ← A_ij + A_ji` above the diagonal.
    pub fn from_square(fq: &BaseField, a: &[CoordVec]) -> Self {
        let n = a.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Greater => 0,
                        std::cmp::Ordering::Equal => a[i][i],
                        std::cmp::Ordering::Less => fq.add(a[i][j], a[j][i]),
                    })
                    .collect()
            })
            .collect();
        FormMatrix {
            fq: fq.clone(),
            entries,
        }
    }

    pub fn zero(fq: &BaseField, n: usize) -> Self {
        FormMatrix {
            fq: fq.clone(),
            entries: vec![vec![0; n]; n],
        }
    }

    /// The standard form of a classification, padded with trailing zero
    /// rows and columns for the degenerate part:
    /// `x1x2 + … + x(t-1)xt` (I), the same with the last pair replaced by
    /// `α x(t-1)² + x(t-1)xt + α xt²` (II), or `x1x2 + … + x(t-2)x(t-1) + xt²` (III).
    /// `α` is the least base-field element with absolute trace one.
    pub fn canonical(fq: &BaseField, m: usize, c: &Classification) -> Result<Self> {
        let checked = Classification::from_rank(m, c.rank, c.standard)?;
        if checked != *c {
            return Err(Error::InvalidClassification(format!(
                "inconsistent classification {c:?}"
            )));
        }
        let t = c.rank;
        let mut entries = vec![vec![0u8; m]; m];
        let pairs = t / 2;
        for p in 0..pairs {
            entries[2 * p][2 * p + 1] = 1;
        }
        match c.standard {
            StandardType::I => {}
            StandardType::II => {
                let alpha = fq.least_trace_one();
                entries[t - 2][t - 2] = alpha;
                entries[t - 1][t - 1] = alpha;
            }
            StandardType::III => entries[t - 1][t - 1] = 1,
        }
        Ok(FormMatrix {
            fq: fq.clone(),
            entries,
        })
    }

    pub fn base(&self) -> &BaseField {
        &self.fq
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[CoordVec] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| linalg::is_zero(row))
    }

    /// `x M xᵀ` as a base-field label.
    pub fn eval(&self, x: &[u8]) -> u8 {
        let fq = &self.fq;
        let mut acc = 0u8;
        for (i, row) in self.entries.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            let partial = row[i..]
                .iter()
                .zip(&x[i..])
                .fold(0u8, |s, (&mij, &xj)| fq.add(s, fq.mul(mij, xj)));
            acc = fq.add(acc, fq.mul(x[i], partial));
        }
        acc
    }

    /// `B = M + Mᵀ`, alternating and symmetric.
    pub fn bilinear_matrix(&self) -> Vec<CoordVec> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            0
                        } else {
                            self.fq.add(self.entries[i][j], self.entries[j][i])
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn bilinear(&self, x: &[u8], y: &[u8]) -> u8 {
        let xb = linalg::vec_mat(&self.fq, x, &self.bilinear_matrix(), self.dim());
        linalg::dot(&self.fq, &xb, y)
    }

    /// `ker ℓ_f`: the nullspace of `B`.
    pub fn radical(&self) -> Subspace {
        let lattice = SubspaceLattice::new(&self.fq, self.dim());
        lattice.canonicalize(linalg::nullspace(
            &self.fq,
            &self.bilinear_matrix(),
            self.dim(),
        ))
    }

    /// `ker f = {x ∈ ker ℓ_f : f(x) = 0}`.
    ///
    /// On the radical `f` is additive and `x ↦ √f(x)` is `GF(q)`-linear, so the
    /// kernel is the nullspace of that functional in radical coordinates.
    pub fn kernel(&self) -> Subspace {
        let radical = self.radical();
        let functional: CoordVec = radical
            .basis()
            .iter()
            .map(|v| self.fq.sqrt(self.eval(v)))
            .collect();
        let lattice = SubspaceLattice::new(&self.fq, self.dim());
        if linalg::is_zero(&functional) {
            return radical;
        }
        let combos = linalg::nullspace(&self.fq, &[functional], radical.dim());
        lattice.canonicalize(
            combos
                .iter()
                .map(|c| linalg::vec_mat(&self.fq, c, radical.basis(), self.dim())),
        )
    }

    /// Number of `x ∈ GF(q)^n` with `x M xᵀ = a`.
    pub fn count_solutions(&self, a: u8, limits: &Limits) -> Result<u64> {
        Ok(self.value_counts(limits)?[a as usize])
    }

    fn value_counts(&self, limits: &Limits) -> Result<Vec<u64>> {
        let q = self.fq.q();
        let n = self.dim();
        let total = pow_sat(q as u128, n as u32);
        Limits::check("coordinate enumeration", total, limits.max_field_elements)?;
        let mut counts = vec![0u64; q];
        let mut x = vec![0u8; n];
        loop {
            counts[self.eval(&x) as usize] += 1;
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(counts);
                }
                i -= 1;
                if (x[i] as usize) + 1 < q {
                    x[i] += 1;
                    break;
                }
                x[i] = 0;
            }
        }
    }

    /// Rank, type and standard type. Standard types I and II are told apart by
    /// counting the zeros of the form.
    pub fn classify(&self, limits: &Limits) -> Result<Classification> {
        let m = self.dim();
        let q = self.fq.q() as u64;
        let dim_ker_bilinear = self.radical().dim();
        let dim_ker_form = self.kernel().dim();
        let form_type = (dim_ker_bilinear - dim_ker_form) as u8;
        let rank = m - dim_ker_form;
        let rank_b = linalg::rank(&self.fq, &self.bilinear_matrix(), m);
        if rank != rank_b + form_type as usize || form_type > 1 {
            return Err(Error::Internal(format!(
                "rank {rank} != rank(B) {rank_b} + type {form_type}"
            )));
        }
        let standard = if rank % 2 == 1 {
            StandardType::III
        } else {
            let zeros = self.count_solutions(0, limits)?;
            let as_type_i = Classification::from_rank(m, rank, StandardType::I)?;
            if zeros == count_solutions_formula(q, m, &as_type_i, 0) {
                StandardType::I
            } else if rank >= 2
                && zeros
                    == count_solutions_formula(
                        q,
                        m,
                        &Classification::from_rank(m, rank, StandardType::II)?,
                        0,
                    )
            {
                StandardType::II
            } else {
                return Err(Error::Internal(format!(
                    "{zeros} zeros match neither even-rank standard type at rank {rank}"
                )));
            }
        };
        Ok(Classification {
            m,
            rank,
            form_type,
            standard,
            s: rank / 2,
            dim_ker_bilinear,
            dim_ker_form,
            degenerate: rank < m,
        })
    }

    /// The form induced on `h`, in the coordinates of `h`'s basis: `P M Pᵀ`
    /// folded back to upper-triangular shape.
    pub fn restrict(&self, h: &Subspace) -> FormMatrix {
        let n = self.dim();
        let p = h.basis();
        let pm = linalg::mat_mul(&self.fq, p, &self.entries, n);
        let square: Vec<CoordVec> = pm
            .iter()
            .map(|row| p.iter().map(|col| linalg::dot(&self.fq, row, col)).collect())
            .collect();
        FormMatrix::from_square(&self.fq, &square)
    }
}

/// `f(x) = Tr(F(x))` with a fixed basis for coordinates.
#[derive(Debug, Clone)]
pub struct QuadraticForm {
    poly: DoPolynomial,
    basis: BasisOverFq,
    matrix: FormMatrix,
}

impl QuadraticForm {
    pub fn new(poly: DoPolynomial, basis: BasisOverFq) -> Self {
        let field = basis.field().clone();
        let base = field.base().clone();
        let m = field.m();
        let eval = |x: FieldElement| {
            base.label(field.rel_trace(poly.eval(&field, x)))
                .expect("trace lies in the base field")
        };
        let eps = basis.elements();
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Greater => 0,
                        std::cmp::Ordering::Equal => eval(eps[i]),
                        std::cmp::Ordering::Less => {
                            let s = eval(field.add(eps[i], eps[j]));
                            base.add(s, base.add(eval(eps[i]), eval(eps[j])))
                        }
                    })
                    .collect()
            })
            .collect();
        QuadraticForm {
            matrix: FormMatrix {
                fq: base.clone(),
                entries,
            },
            poly,
            basis,
        }
    }

    /// `Tr(λ x^(q^i + q^j))` in the polynomial basis.
    pub fn monomial(field: &Field, coeff: FieldElement, i: u32, j: u32) -> Result<Self> {
        Ok(Self::new(
            DoPolynomial::monomial(field, coeff, i, j)?,
            BasisOverFq::polynomial(field)?,
        ))
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn poly(&self) -> &DoPolynomial {
        &self.poly
    }

    pub fn basis(&self) -> &BasisOverFq {
        &self.basis
    }

    /// Matrix with respect to the form's basis.
    pub fn matrix(&self) -> &FormMatrix {
        &self.matrix
    }

    /// `Tr(F(x))`, an element of the base field.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let field = self.field();
        field.rel_trace(self.poly.eval(field, x))
    }

    /// `ℓ_f(x, y) = f(x + y) + f(x) + f(y)`.
    pub fn bilinear(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let field = self.field();
        let s = self.eval(field.add(x, y));
        field.add(s, field.add(self.eval(x), self.eval(y)))
    }

    pub fn radical(&self) -> Subspace {
        self.matrix.radical()
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn classify(&self, limits: &Limits) -> Result<Classification> {
        self.matrix.classify(limits)
    }

    /// `|{x ∈ GF(q^m) : f(x) = a}|`, by evaluating through the field.
    pub fn count_solutions_exhaustive(&self, a: FieldElement, limits: &Limits) -> Result<u64> {
        let field = self.field();
        let mut count = 0u64;
        for x in field.elements(limits)? {
            if self.eval(x) == a {
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn restrict(&self, h: &Subspace) -> FormMatrix {
        self.matrix.restrict(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(e: u32, m: u32) -> Field {
        Field::with_default_modulus(e, m).unwrap()
    }

    fn mono(f: &Field, k: u64, i: u32, j: u32) -> QuadraticForm {
        QuadraticForm::monomial(f, f.w_pow(k), i, j).unwrap()
    }

    #[test]
    fn polynomial_normalisation() {
        let f = field(1, 4);
        let w = f.primitive_element();
        let p = DoPolynomial::new(&f, [(1, 0, w), (0, 1, w), (2, 2, FieldElement::ONE)]).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].i, 2);
        assert!(DoPolynomial::new(&f, [(0, 4, w)]).is_err());
        assert!(DoPolynomial::monomial(&f, FieldElement::ZERO, 0, 1).unwrap().is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let f = field(1, 4);
        let form = mono(&f, 1, 0, 1);
        assert_eq!(form.eval(FieldElement::ZERO), FieldElement::ZERO);
        assert_eq!(form.eval(FieldElement::ONE), FieldElement::ZERO);
        assert_eq!(form.eval(f.primitive_element()), FieldElement::ZERO);
    }

    #[test]
    fn matrix_reproduces_field_evaluation() {
        for (e, m, k, i) in [(1, 4, 1, 1), (1, 4, 3, 1), (1, 6, 1, 2), (2, 3, 5, 1), (1, 2, 1, 1)] {
            let f = field(e, m);
            let form = mono(&f, k, 0, i);
            let base = f.base();
            for x in f.elements(&Limits::default()).unwrap() {
                let coords = form.basis().coords(x);
                assert_eq!(base.element(form.matrix().eval(&coords)), form.eval(x));
            }
        }
    }

    #[test]
    fn zero_form() {
        let f = field(1, 4);
        let form = QuadraticForm::monomial(&f, FieldElement::ZERO, 0, 1).unwrap();
        assert!(form.matrix().is_zero());
        let limits = Limits::default();
        assert_eq!(form.count_solutions_exhaustive(FieldElement::ONE, &limits).unwrap(), 0);
        assert_eq!(form.count_solutions_exhaustive(FieldElement::ZERO, &limits).unwrap(), 16);
        let c = form.classify(&limits).unwrap();
        assert_eq!((c.rank, c.standard), (0, StandardType::I));
    }

    #[test]
    fn kernels() {
        let f4 = field(1, 4);
        let f6 = field(1, 6);
        let a = mono(&f4, 3, 0, 1);
        assert_eq!(a.radical().dim(), 2);
        assert_eq!(a.kernel().dim(), 2);
        let b = mono(&f6, 1, 0, 2);
        assert_eq!(b.radical().dim(), 2);
        assert_eq!(b.kernel().dim(), 1);
        let c = mono(&f4, 1, 0, 1);
        assert_eq!(c.radical().dim(), 0);
        assert_eq!(c.kernel().dim(), 0);
    }

    #[test]
    fn kernel_matches_filtered_radical() {
        let f = field(2, 3);
        let limits = Limits::default();
        for k in 0..63 {
            let form = QuadraticForm::new(
                DoPolynomial::new(&f, [(0, 1, f.w_pow(k)), (0, 0, f.w_pow(2 * k + 1))]).unwrap(),
                BasisOverFq::polynomial(&f).unwrap(),
            );
            let m = form.matrix();
            let lattice = SubspaceLattice::new(f.base(), 3);
            let radical = m.radical();
            let filtered: Vec<_> = lattice
                .elements(&radical, &limits)
                .unwrap()
                .filter(|v| m.eval(v) == 0)
                .collect();
            let kernel = m.kernel();
            assert_eq!(filtered.len() as u64, f.q().pow(kernel.dim() as u32));
            assert!(filtered.iter().all(|v| lattice.contains(&kernel, v)));
        }
    }

    #[test]
    fn classifications() {
        let limits = Limits::default();
        let c = mono(&field(1, 5), 1, 0, 1).classify(&limits).unwrap();
        assert_eq!((c.rank, c.form_type, c.standard), (5, 1, StandardType::III));
        let c = mono(&field(1, 6), 3, 0, 1).classify(&limits).unwrap();
        assert_eq!((c.rank, c.form_type, c.standard, c.degenerate), (4, 0, StandardType::I, true));
        let c = mono(&field(1, 4), 3, 0, 1).classify(&limits).unwrap();
        assert_eq!((c.rank, c.form_type, c.standard, c.degenerate), (2, 0, StandardType::II, true));
    }

    #[test]
    fn solution_count_formula() {
        let nondeg_i = Classification::from_rank(4, 4, StandardType::I).unwrap();
        assert_eq!(count_solutions_formula(2, 4, &nondeg_i, 1), 6);
        assert_eq!(count_solutions_formula(2, 4, &nondeg_i, 0), 10);
        let iii = Classification::from_rank(5, 3, StandardType::III).unwrap();
        assert_eq!(count_solutions_formula(2, 5, &iii, 1), 16);
        assert_eq!(count_solutions_formula(2, 5, &iii, 0), 16);
        let f = field(1, 6);
        assert_eq!(
            mono(&f, 1, 0, 1)
                .count_solutions_exhaustive(FieldElement::ONE, &Limits::default())
                .unwrap(),
            36
        );
    }

    #[test]
    fn canonical_matrices() {
        let f = field(1, 2);
        let fq = f.base();
        let c = Classification::from_rank(2, 2, StandardType::I).unwrap();
        assert_eq!(FormMatrix::canonical(fq, 2, &c).unwrap().entries(), &[vec![0, 1], vec![0, 0]]);
        let c = Classification::from_rank(2, 2, StandardType::II).unwrap();
        assert_eq!(FormMatrix::canonical(fq, 2, &c).unwrap().entries(), &[vec![1, 1], vec![0, 1]]);
        let f3 = field(1, 3);
        let c = Classification::from_rank(3, 1, StandardType::III).unwrap();
        assert_eq!(
            FormMatrix::canonical(f3.base(), 3, &c).unwrap().entries(),
            &[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]
        );
        assert!(Classification::from_rank(3, 3, StandardType::I).is_err());
        let mut bad = Classification::from_rank(3, 2, StandardType::I).unwrap();
        bad.standard = StandardType::III;
        assert!(FormMatrix::canonical(f3.base(), 3, &bad).is_err());
    }

    #[test]
    fn restriction_basics() {
        let f = field(1, 4);
        let form = mono(&f, 1, 0, 1);
        assert_eq!(&form.restrict(&Subspace::full(4)), form.matrix());
        let g = mono(&f, 3, 0, 1);
        assert!(g.restrict(&g.kernel()).is_zero());
        let lattice = SubspaceLattice::new(f.base(), 4);
        let v = vec![1, 0, 1, 1];
        let line = lattice.canonicalize([v.clone()]);
        assert_eq!(form.restrict(&line).entries(), &[vec![form.matrix().eval(&v)]]);
    }

    #[test]
    fn upper_triangular_validation() {
        let f = field(1, 2);
        assert!(FormMatrix::from_upper(f.base(), vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(FormMatrix::from_upper(f.base(), vec![vec![0, 1], vec![0, 0]]).is_ok());
        assert!(FormMatrix::from_upper(f.base(), vec![vec![0, 1]]).is_err());
    }
}
