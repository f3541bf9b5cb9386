//! Subspaces of `GF(q)^m` in canonical reduced echelon form.
//!
//! Enumeration visits pivot-column sets in lexicographic order and, inside one
//! pattern, the free entries as a base-`q` counter (row-major, last entry least
//! significant). Each pivot pattern is an independent sub-stream, which is how the
//! exhaustive searches split work across threads.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::BaseField;
use crate::limits::{pow_sat, Limits};
use crate::linalg::{self, CoordVec};
use crate::quadform::QuadraticForm;

/// An `r`-dimensional subspace stored as its reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<CoordVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![0u8; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[CoordVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).expect("echelon rows are nonzero"))
            .collect()
    }
}

/// Number of `r`-dimensional subspaces of `GF(q)^m`, saturating at `u128::MAX`.
pub fn gaussian_binomial(m: usize, r: usize, q: u64) -> u128 {
    if r > m {
        return 0;
    }
    let q = q as u128;
    let mut acc: u128 = 1;
    for i in 0..r {
        let num = pow_sat(q, (m - i) as u32).saturating_sub(1);
        let den = pow_sat(q, (i + 1) as u32) - 1;
        // Each partial product is itself a Gaussian binomial, so division is exact.
        acc = match acc.checked_mul(num) {
            Some(v) => v / den,
            None => return u128::MAX,
        };
    }
    acc
}

/// Lattice operations on subspaces of `GF(q)^m`.
#[derive(Debug, Clone)]
pub struct SubspaceLattice {
    fq: BaseField,
    m: usize,
}

impl SubspaceLattice {
    pub fn new(fq: &BaseField, m: usize) -> Self {
        SubspaceLattice { fq: fq.clone(), m }
    }

    pub fn base(&self) -> &BaseField {
        &self.fq
    }

    pub fn ambient(&self) -> usize {
        self.m
    }

    /// Span of `vectors` in canonical form.
    pub fn canonicalize<I>(&self, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = CoordVec>,
    {
        let rows: Vec<CoordVec> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|v| v.len() == self.m));
        let (rows, _) = linalg::rref(&self.fq, rows, self.m);
        Subspace {
            ambient: self.m,
            rows,
        }
    }

    /// Pivot-column sets of size `r`, lexicographic.
    pub fn pivot_patterns(&self, r: usize) -> Vec<Vec<usize>> {
        fn rec(start: usize, m: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == r {
                out.push(cur.clone());
                return;
            }
            for c in start..m {
                if m - c < r - cur.len() {
                    break;
                }
                cur.push(c);
                rec(c + 1, m, r, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if r <= self.m {
            rec(0, self.m, r, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All subspaces whose echelon basis has exactly these pivot columns.
    pub fn with_pivots(&self, pivots: &[usize]) -> PatternIter {
        PatternIter::new(self.fq.q(), self.m, pivots)
    }

    /// Every `r`-dimensional subspace exactly once.
    pub fn enumerate(
        &self,
        r: usize,
        limits: &Limits,
    ) -> Result<impl Iterator<Item = Subspace> + '_> {
        if r > self.m {
            return Err(Error::InvalidArgument(format!(
                "dimension {r} exceeds ambient dimension {}",
                self.m
            )));
        }
        let count = gaussian_binomial(self.m, r, self.fq.q() as u64);
        Limits::check("subspace enumeration", count, limits.max_subspaces)?;
        Ok(self
            .pivot_patterns(r)
            .into_iter()
            .flat_map(move |p| self.with_pivots(&p)))
    }

    /// All vectors of `h`, lexicographic in the combination coefficients.
    pub fn elements<'a>(
        &'a self,
        h: &'a Subspace,
        limits: &Limits,
    ) -> Result<impl Iterator<Item = CoordVec> + 'a> {
        let count = pow_sat(self.fq.q() as u128, h.dim() as u32);
        Limits::check("subspace elements", count, limits.max_span_elements)?;
        let q = self.fq.q();
        let r = h.dim();
        Ok((0..count).map(move |mut index| {
            let mut v = vec![0u8; self.m];
            for i in (0..r).rev() {
                let c = (index % q as u128) as u8;
                index /= q as u128;
                linalg::axpy(&self.fq, &mut v, c, &h.rows[i]);
            }
            v
        }))
    }

    pub fn contains(&self, h: &Subspace, v: &[u8]) -> bool {
        let mut rest = v.to_vec();
        for (row, p) in h.rows.iter().zip(h.pivots()) {
            let c = rest[p];
            linalg::axpy(&self.fq, &mut rest, c, row);
        }
        linalg::is_zero(&rest)
    }

    pub fn is_subspace_of(&self, h: &Subspace, w: &Subspace) -> bool {
        h.rows.iter().all(|v| self.contains(w, v))
    }

    pub fn sum(&self, h: &Subspace, w: &Subspace) -> Subspace {
        self.canonicalize(h.rows.iter().chain(&w.rows).cloned())
    }

    /// Annihilator under the standard dot product.
    pub fn annihilator(&self, h: &Subspace) -> Subspace {
        self.canonicalize(linalg::nullspace(&self.fq, &h.rows, self.m))
    }

    pub fn intersect(&self, h: &Subspace, w: &Subspace) -> Subspace {
        let a = self.annihilator(h);
        let b = self.annihilator(w);
        let constraints: Vec<CoordVec> = a.rows.into_iter().chain(b.rows).collect();
        self.canonicalize(linalg::nullspace(&self.fq, &constraints, self.m))
    }

    /// `{x : x B hᵀ = 0 for all h ∈ H}` for a symmetric matrix `B`.
    pub fn dual_under(&self, b: &[CoordVec], h: &Subspace) -> Subspace {
        let constraints: Vec<CoordVec> = h
            .rows
            .iter()
            .map(|row| linalg::vec_mat(&self.fq, row, b, self.m))
            .collect();
        self.canonicalize(linalg::nullspace(&self.fq, &constraints, self.m))
    }
}

/// Subspaces sharing one pivot pattern, free entries counted in base `q`.
#[derive(Debug, Clone)]
pub struct PatternIter {
    q: usize,
    m: usize,
    pivots: Vec<usize>,
    slots: Vec<(usize, usize)>,
    digits: Vec<u8>,
    done: bool,
}

impl PatternIter {
    fn new(q: usize, m: usize, pivots: &[usize]) -> Self {
        let slots = pivots
            .iter()
            .enumerate()
            .flat_map(|(row, &p)| {
                (p + 1..m)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (row, c))
            })
            .collect::<Vec<_>>();
        PatternIter {
            q,
            m,
            digits: vec![0; slots.len()],
            slots,
            pivots: pivots.to_vec(),
            done: false,
        }
    }

    /// Number of subspaces with this pattern.
    pub fn len_hint(&self) -> u128 {
        pow_sat(self.q as u128, self.slots.len() as u32)
    }
}

impl Iterator for PatternIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let mut rows = vec![vec![0u8; self.m]; self.pivots.len()];
        for (row, &p) in self.pivots.iter().enumerate() {
            rows[row][p] = 1;
        }
        for (&(row, col), &d) in self.slots.iter().zip(&self.digits) {
            rows[row][col] = d;
        }
        // advance the counter
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if (self.digits[i] as usize) + 1 < self.q {
                self.digits[i] += 1;
                break;
            }
            self.digits[i] = 0;
        }
        Some(Subspace {
            ambient: self.m,
            rows,
        })
    }
}

/// An `r`-dimensional subspace that is totally isotropic for the bilinear form of
/// a non-degenerate `f`.
///
/// Greedy: extend by a vector of the current dual outside the current span,
/// preferring singular vectors (`f(v) = 0`).
pub fn find_isotropic(f: &QuadraticForm, r: usize, limits: &Limits) -> Result<Subspace> {
    let m = f.field().m();
    if r == 0 || 2 * r >= m {
        return Err(Error::Precondition(format!(
            "isotropic search needs 0 < 2r < m, got r = {r}, m = {m}"
        )));
    }
    let matrix = f.matrix();
    if matrix.kernel().dim() != 0 {
        return Err(Error::Precondition(
            "isotropic search needs a non-degenerate form".into(),
        ));
    }
    let lattice = SubspaceLattice::new(f.field().base(), m);
    let b = matrix.bilinear_matrix();
    let mut h = Subspace::zero(m);
    while h.dim() < r {
        let dual = lattice.dual_under(&b, &h);
        let mut fallback = None;
        let mut chosen = None;
        for v in lattice.elements(&dual, limits)? {
            if lattice.contains(&h, &v) {
                continue;
            }
            if matrix.eval(&v) == 0 {
                chosen = Some(v);
                break;
            }
            fallback.get_or_insert(v);
        }
        let v = chosen.or(fallback).ok_or_else(|| {
            Error::Internal("no isotropic extension found below half dimension".into())
        })?;
        h = lattice.sum(&h, &lattice.canonicalize([v]));
    }
    if !lattice.is_subspace_of(&h, &lattice.dual_under(&b, &h)) {
        return Err(Error::Internal("isotropic search produced a non-isotropic span".into()));
    }
    Ok(h)
}
