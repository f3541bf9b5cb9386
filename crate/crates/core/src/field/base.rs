use std::fmt;
use std::sync::Arc;

use super::{poly, FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// Largest base-field exponent with table-driven arithmetic.
pub const MAX_BASE_EXPONENT: u32 = 8;

struct Tables {
    q: usize,
    e: u32,
    /// Subfield elements in increasing integer order; index = label.
    elements: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    sqrt: Vec<u8>,
    abs_trace: Vec<u8>,
    /// Big-field images of an F_2-basis of GF(q).
    f2_basis: Vec<u32>,
    /// Label of `Σ_j bit_j(pattern) f2_basis[j]`.
    label_of_pattern: Vec<u8>,
}

/// The base field `GF(q)` as the subfield `{y : y^q = y}` of `GF(q^m)`.
///
/// Values are addressed by small labels: label `i` is the `i`-th subfield element
/// in big-field element order, so label 0 is zero and label 1 is one. All tables
/// are computed with the big field's own multiplication.
#[derive(Clone)]
pub struct BaseField(Arc<Tables>);

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.elements == other.0.elements
    }
}
impl Eq for BaseField {}

impl BaseField {
    pub(crate) fn embedded(spec: &FieldSpec, generator: FieldElement) -> Result<Self> {
        let e = spec.e();
        if e > MAX_BASE_EXPONENT {
            return Err(Error::InvalidField(format!(
                "base field GF(2^{e}) is larger than the supported GF(2^{MAX_BASE_EXPONENT})"
            )));
        }
        let q = 1usize << e;
        let modulus = spec.modulus();
        let mul = |a: u32, b: u32| poly::mulmod(a as u64, b as u64, modulus) as u32;
        let pow = |x: u32, k: u64| {
            let (mut acc, mut base, mut k) = (1u32, x, k);
            while k > 0 {
                if k & 1 == 1 {
                    acc = mul(acc, base);
                }
                base = mul(base, base);
                k >>= 1;
            }
            acc
        };

        let g = pow(generator.bits(), (spec.order() - 1) / (q as u64 - 1));
        let mut elements = vec![0u32];
        let mut y = 1u32;
        for _ in 0..q - 1 {
            elements.push(y);
            y = mul(y, g);
        }
        elements.sort_unstable();
        elements.dedup();
        if elements.len() != q {
            return Err(Error::Internal("subfield construction failed".into()));
        }
        let label = |v: u32| elements.binary_search(&v).expect("closed under field ops") as u8;

        let mut add = vec![0u8; q * q];
        let mut mult = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = label(elements[a] ^ elements[b]);
                mult[a * q + b] = label(mul(elements[a], elements[b]));
            }
        }
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mult[a * q + b] == 1).unwrap() as u8;
        }
        // y -> y^(q/2) inverts squaring on GF(q).
        let sqrt: Vec<u8> = (0..q).map(|a| label(pow(elements[a], q as u64 / 2))).collect();
        let abs_trace: Vec<u8> = (0..q)
            .map(|a| {
                let mut acc = 0;
                let mut y = elements[a];
                for _ in 0..e {
                    acc ^= y;
                    y = mul(y, y);
                }
                label(acc)
            })
            .collect();
        let f2_basis: Vec<u32> = (0..e).map(|j| pow(g, j as u64)).collect();
        let label_of_pattern: Vec<u8> = (0..q)
            .map(|pattern| {
                let v = (0..e as usize)
                    .filter(|j| pattern >> j & 1 == 1)
                    .fold(0u32, |acc, j| acc ^ f2_basis[j]);
                label(v)
            })
            .collect();

        Ok(BaseField(Arc::new(Tables {
            q,
            e,
            elements,
            add,
            mul: mult,
            inv,
            sqrt,
            abs_trace,
            f2_basis,
            label_of_pattern,
        })))
    }

    pub fn q(&self) -> usize {
        self.0.q
    }
    pub fn e(&self) -> u32 {
        self.0.e
    }

    /// Labels `0..q` in element order.
    pub fn labels(&self) -> impl Iterator<Item = u8> + Clone {
        (0..self.0.q).map(|l| l as u8)
    }

    /// Big-field element carried by a label.
    pub fn element(&self, label: u8) -> FieldElement {
        FieldElement(self.0.elements[label as usize])
    }

    /// Label of a base-field value, or `None` if `y` is not in `GF(q)`.
    pub fn label(&self, y: FieldElement) -> Option<u8> {
        self.0.elements.binary_search(&y.bits()).ok().map(|i| i as u8)
    }

    pub(crate) fn label_of_pattern(&self, pattern: usize) -> u8 {
        self.0.label_of_pattern[pattern]
    }

    pub(crate) fn f2_basis(&self) -> &[u32] {
        &self.0.f2_basis
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.0.add[a as usize * self.0.q + b as usize]
    }
    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.0.mul[a as usize * self.0.q + b as usize]
    }
    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            Err(Error::Domain("inverse of zero in the base field".into()))
        } else {
            Ok(self.0.inv[a as usize])
        }
    }
    /// Unique square root (squaring is bijective in characteristic 2).
    pub fn sqrt(&self, a: u8) -> u8 {
        self.0.sqrt[a as usize]
    }
    /// Absolute trace to GF(2), as 0 or 1.
    pub fn abs_trace(&self, a: u8) -> u8 {
        self.0.abs_trace[a as usize]
    }

    /// Whether `alpha` lies outside `{x^2 + x : x ∈ GF(q)}`, by direct scan.
    pub fn outside_artin_schreier_image(&self, alpha: u8) -> bool {
        self.labels()
            .all(|x| self.add(self.mul(x, x), x) != alpha)
    }

    /// Least label with absolute trace one.
    pub fn least_trace_one(&self) -> u8 {
        self.labels()
            .find(|&a| self.abs_trace(a) == 1)
            .expect("absolute trace is onto GF(2)")
    }
}

#[cfg(test)]
mod tests {
    use crate::field::Field;

    #[test]
    fn gf4_inside_gf16() {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let b = f.base();
        assert_eq!(b.q(), 4);
        for l in b.labels() {
            assert!(f.in_base_field(b.element(l)));
            assert_eq!(b.mul(b.sqrt(l), b.sqrt(l)), l);
        }
        assert_eq!(b.element(0).bits(), 0);
        assert_eq!(b.element(1).bits(), 1);
        // The two descriptions of the Type II constant coincide.
        for a in b.labels() {
            assert_eq!(b.outside_artin_schreier_image(a), b.abs_trace(a) == 1);
        }
        assert_eq!(b.abs_trace(b.least_trace_one()), 1);
    }

    #[test]
    fn binary_base_field() {
        let f = Field::with_default_modulus(1, 5).unwrap();
        let b = f.base();
        assert_eq!(b.q(), 2);
        assert_eq!(b.add(1, 1), 0);
        assert_eq!(b.mul(1, 1), 1);
        assert_eq!(b.least_trace_one(), 1);
        assert!(b.inv(0).is_err());
    }
}
