use super::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::linalg::CoordVec;

/// A basis `ε_1 … ε_m` of `GF(q^m)` over `GF(q)`.
///
/// Coordinates are computed through the `GF(2)`-basis `{β_j ε_i}`, where `β_j`
/// runs over a fixed `GF(2)`-basis of `GF(q)`; that `e·m`-square bit matrix is
/// inverted once at construction.
#[derive(Debug, Clone)]
pub struct BasisOverFq {
    field: Field,
    elements: Vec<FieldElement>,
    /// Row `k` selects the bits of `x` whose parity is F_2-coordinate `k`.
    inverse_rows: Vec<u32>,
    /// `scaled[i][label] = label · ε_i`.
    scaled: Vec<Vec<u32>>,
}

impl BasisOverFq {
    pub fn new(field: &Field, elements: Vec<FieldElement>) -> Result<Self> {
        let m = field.m();
        let e = field.spec().e() as usize;
        if elements.len() != m {
            return Err(Error::InvalidBasis(format!(
                "expected {m} elements, got {}",
                elements.len()
            )));
        }
        for &x in &elements {
            field.element(x.bits())?;
        }
        let base = field.base();
        let n = m * e;
        // Column (i*e + j) of A is β_j ε_i; rows of A are bit positions of x.
        let columns: Vec<u32> = elements
            .iter()
            .flat_map(|&eps| {
                base.f2_basis()
                    .iter()
                    .map(move |&beta| field.mul(FieldElement(beta), eps).bits())
            })
            .collect();
        let rows: Vec<u32> = (0..n)
            .map(|r| {
                (0..n)
                    .filter(|&k| columns[k] >> r & 1 == 1)
                    .fold(0u32, |acc, k| acc | 1 << k)
            })
            .collect();
        let inverse_rows = invert_gf2(&rows, n).ok_or_else(|| {
            Error::InvalidBasis("elements are linearly dependent over GF(q)".into())
        })?;
        let scaled = elements
            .iter()
            .map(|&eps| {
                base.labels()
                    .map(|l| field.mul(base.element(l), eps).bits())
                    .collect()
            })
            .collect();
        Ok(BasisOverFq {
            field: field.clone(),
            elements,
            inverse_rows,
            scaled,
        })
    }

    /// The polynomial basis `1, w, …, w^(m-1)` in the designated primitive element.
    pub fn polynomial(field: &Field) -> Result<Self> {
        let elements = (0..field.m() as u64).map(|k| field.w_pow(k)).collect();
        Self::new(field, elements)
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    /// Coordinates of `x` as base-field labels.
    pub fn coords(&self, x: FieldElement) -> CoordVec {
        let e = self.field.spec().e() as usize;
        let base = self.field.base();
        (0..self.elements.len())
            .map(|i| {
                let pattern = (0..e).fold(0usize, |acc, j| {
                    let bit = (self.inverse_rows[i * e + j] & x.bits()).count_ones() & 1;
                    acc | (bit as usize) << j
                });
                base.label_of_pattern(pattern)
            })
            .collect()
    }

    /// `Σ v_i ε_i`.
    pub fn from_coords(&self, v: &[u8]) -> FieldElement {
        debug_assert_eq!(v.len(), self.elements.len());
        FieldElement(
            v.iter()
                .zip(&self.scaled)
                .fold(0u32, |acc, (&l, row)| acc ^ row[l as usize]),
        )
    }

    /// `label · ε_i` without going through a coordinate vector.
    pub(crate) fn scaled(&self, i: usize, label: u8) -> u32 {
        self.scaled[i][label as usize]
    }
}

/// Inverse of an `n×n` bit matrix given by rows (bit `k` = column `k`).
fn invert_gf2(rows: &[u32], n: usize) -> Option<Vec<u32>> {
    let mut a: Vec<u64> = rows
        .iter()
        .enumerate()
        .map(|(r, &row)| row as u64 | (1u64 << (n + r)))
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r] >> col & 1 == 1)?;
        a.swap(col, pivot);
        for r in 0..n {
            if r != col && a[r] >> col & 1 == 1 {
                a[r] ^= a[col];
            }
        }
    }
    Some(a.iter().map(|&row| (row >> n) as u32).collect())
}
