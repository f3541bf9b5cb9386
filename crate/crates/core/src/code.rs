//! Defining sets `D_f = {x : f(x) = a}` and the codes
//! `C_D = {(Tr(x d))_{d ∈ D} : x ∈ GF(q^m)}` built from them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{BaseField, BasisOverFq, FieldElement};
use crate::ghw::GhwOptions;
use crate::limits::{pow_sat, Limits};
use crate::linalg::{self, CoordVec};
use crate::quadform::{count_solutions_formula, QuadraticForm};
use crate::subspace::{gaussian_binomial, Subspace, SubspaceLattice};

/// Solutions of `f(x) = a` in increasing element order.
#[derive(Debug, Clone)]
pub struct DefiningSet {
    form: QuadraticForm,
    target: FieldElement,
    elements: Vec<FieldElement>,
}

impl DefiningSet {
    /// Collects every solution of `f(x) = a` and checks the count against the
    /// closed-form solution count of `f`'s classification.
    pub fn new(form: &QuadraticForm, a: FieldElement, limits: &Limits) -> Result<Self> {
        let field = form.field();
        let label = field.base().label(a).ok_or_else(|| {
            Error::InvalidArgument(format!("target {a} is not in the base field"))
        })?;
        let elements: Vec<FieldElement> = field
            .elements(limits)?
            .filter(|&x| form.eval(x) == a)
            .collect();
        let c = form.classify(limits)?;
        let expected = count_solutions_formula(field.q(), field.m(), &c, label);
        if elements.len() as u64 != expected {
            return Err(Error::Internal(format!(
                "defining set has {} elements, classification predicts {expected}",
                elements.len()
            )));
        }
        Ok(DefiningSet {
            form: form.clone(),
            target: a,
            elements,
        })
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn target(&self) -> FieldElement {
        self.target
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `|D ∩ K|` for a subspace `K` given in the coordinates of the form's basis.
    pub fn intersection_count(&self, k: &Subspace) -> u64 {
        let basis = self.form.basis();
        let fq = basis.field().base();
        // multiples[i][c] = c · (row i as a field element)
        let multiples: Vec<Vec<u32>> = k
            .basis()
            .iter()
            .map(|row| {
                fq.labels()
                    .map(|c| {
                        row.iter()
                            .enumerate()
                            .fold(0u32, |acc, (j, &x)| acc ^ basis.scaled(j, fq.mul(c, x)))
                    })
                    .collect()
            })
            .collect();
        self.count_span(&multiples, 0, 0)
    }

    fn count_span(&self, multiples: &[Vec<u32>], depth: usize, acc: u32) -> u64 {
        if depth == multiples.len() {
            return self.contains(FieldElement::from_raw(acc)) as u64;
        }
        multiples[depth]
            .iter()
            .map(|&v| self.count_span(multiples, depth + 1, acc ^ v))
            .sum()
    }
}

/// A linear code over `GF(q)`.
#[derive(Debug, Clone)]
pub struct LinearCode {
    fq: BaseField,
    n: usize,
    /// `m × n` trace matrix `(Tr(ε_i d_j))`.
    raw: Vec<CoordVec>,
    /// `k × n`, independent rows; equal to `raw` when `k = m`.
    generator: Vec<CoordVec>,
}

impl LinearCode {
    /// The code of `D` with respect to `Ω`: column `j` is `(Tr(ε_i d_j))_i`.
    pub fn from_defining_set(d: &DefiningSet, basis: &BasisOverFq) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::InvalidArgument("defining set is empty".into()));
        }
        let field = basis.field();
        let fq = field.base().clone();
        let raw: Vec<CoordVec> = basis
            .elements()
            .iter()
            .map(|&eps| {
                d.elements()
                    .iter()
                    .map(|&x| {
                        fq.label(field.rel_trace(field.mul(eps, x)))
                            .expect("trace lies in the base field")
                    })
                    .collect()
            })
            .collect();
        Ok(Self::from_rows(&fq, raw))
    }

    /// Code spanned by the given rows (which need not be independent).
    pub fn from_rows(fq: &BaseField, raw: Vec<CoordVec>) -> Self {
        let n = raw.first().map_or(0, Vec::len);
        let k = linalg::rank(fq, &raw, n);
        let generator = if k == raw.len() {
            raw.clone()
        } else {
            linalg::rref(fq, raw.clone(), n).0
        };
        LinearCode {
            fq: fq.clone(),
            n,
            raw,
            generator,
        }
    }

    pub fn base(&self) -> &BaseField {
        &self.fq
    }
    pub fn len(&self) -> usize {
        self.n
    }
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
    pub fn dimension(&self) -> usize {
        self.generator.len()
    }
    pub fn raw_matrix(&self) -> &[CoordVec] {
        &self.raw
    }
    pub fn generator(&self) -> &[CoordVec] {
        &self.generator
    }

    /// Whether the trace matrix has full rank, the precondition for computing the
    /// hierarchy from intersections with the defining set.
    pub fn has_full_dimension(&self) -> bool {
        self.generator.len() == self.raw.len()
    }

    /// Number of coordinates that are not identically zero.
    pub fn support_len(&self) -> usize {
        (0..self.n)
            .filter(|&j| self.generator.iter().any(|row| row[j] != 0))
            .count()
    }

    /// Exhaustive weight enumeration.
    pub fn weight_distribution(&self, limits: &Limits) -> Result<BTreeMap<usize, u64>> {
        let k = self.dimension();
        let total = pow_sat(self.fq.q() as u128, k as u32);
        Limits::check("codeword enumeration", total, limits.max_codewords)?;
        let mut dist = BTreeMap::new();
        let mut word = vec![0u8; self.n];
        self.weights_rec(0, &mut word, &mut dist);
        Ok(dist)
    }

    fn weights_rec(&self, depth: usize, word: &mut Vec<u8>, dist: &mut BTreeMap<usize, u64>) {
        if depth == self.generator.len() {
            let w = word.iter().filter(|&&x| x != 0).count();
            *dist.entry(w).or_insert(0) += 1;
            return;
        }
        let row = &self.generator[depth];
        for c in self.fq.labels() {
            let saved = word.clone();
            linalg::axpy(&self.fq, word, c, row);
            self.weights_rec(depth + 1, word, dist);
            *word = saved;
        }
    }

    /// Minimum nonzero weight, if the code is nonzero.
    pub fn minimum_distance(&self, limits: &Limits) -> Result<Option<usize>> {
        Ok(self
            .weight_distribution(limits)?
            .keys()
            .copied()
            .find(|&w| w > 0))
    }

    /// `d_r` as the least support of an `r`-dimensional subcode, enumerating the
    /// subspaces of the message space.
    pub fn ghw_direct(&self, r: usize, opts: &GhwOptions) -> Result<u64> {
        let k = self.dimension();
        if r == 0 || r > k {
            return Err(Error::InvalidArgument(format!(
                "subcode dimension {r} outside 1..={k}"
            )));
        }
        let count = gaussian_binomial(k, r, self.fq.q() as u64);
        Limits::check("subcode enumeration", count, opts.limits.max_subspaces)?;
        let lattice = SubspaceLattice::new(&self.fq, k);
        let words = self.n.div_ceil(64);
        let best = opts.map_patterns(&lattice, r, |subspaces| {
            let mut best = u64::MAX;
            let mut support = vec![0u64; words];
            for h in subspaces {
                support.iter_mut().for_each(|w| *w = 0);
                for u in h.basis() {
                    let word = linalg::vec_mat(&self.fq, u, &self.generator, self.n);
                    for (j, &x) in word.iter().enumerate() {
                        if x != 0 {
                            support[j / 64] |= 1 << (j % 64);
                        }
                    }
                }
                let size: u64 = support.iter().map(|w| w.count_ones() as u64).sum();
                best = best.min(size);
            }
            best
        })?;
        Ok(best.into_iter().min().unwrap_or(u64::MAX))
    }

    /// `(d_1, …, d_k)` by [`LinearCode::ghw_direct`].
    pub fn hierarchy_direct(&self, opts: &GhwOptions) -> Result<Vec<u64>> {
        (1..=self.dimension())
            .map(|r| self.ghw_direct(r, opts))
            .collect()
    }
}
