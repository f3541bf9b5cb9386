//! Arithmetic in `GF(2^(e·m))` as an extension of degree `m` over `GF(q)`, `q = 2^e`.
//!
//! Elements are coefficient bit vectors modulo an irreducible polynomial of degree
//! `e·m`, with the coefficient of `z^0` in bit 0. The integer value of that bit
//! vector is the element order used everywhere (enumeration, defining sets, base
//! field labels).

mod base;
mod basis;
pub(crate) mod poly;

pub use base::BaseField;
pub use basis::BasisOverFq;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Primitive trinomials/pentanomials for degrees 1..=24, low bit = `z^0`.
const DEFAULT_MODULI: [u64; 24] = [
    0b11,                                   // z + 1
    0b111,                                  // z^2 + z + 1
    0b1011,                                 // z^3 + z + 1
    0b10011,                                // z^4 + z + 1
    0b100101,                               // z^5 + z^2 + 1
    0b1000011,                              // z^6 + z + 1
    0b10000011,                             // z^7 + z + 1
    0b100011101,                            // z^8 + z^4 + z^3 + z^2 + 1
    (1 << 9) | (1 << 4) | 1,                // z^9 + z^4 + 1
    (1 << 10) | (1 << 3) | 1,               // z^10 + z^3 + 1
    (1 << 11) | (1 << 2) | 1,               // z^11 + z^2 + 1
    (1 << 12) | (1 << 6) | (1 << 4) | 0b11, // z^12 + z^6 + z^4 + z + 1
    (1 << 13) | (1 << 4) | (1 << 3) | 0b11,
    (1 << 14) | (1 << 10) | (1 << 6) | 0b11,
    (1 << 15) | 0b11,
    (1 << 16) | (1 << 12) | (1 << 3) | 0b11,
    (1 << 17) | (1 << 3) | 1,
    (1 << 18) | (1 << 7) | 1,
    (1 << 19) | (1 << 5) | (1 << 2) | 0b11,
    (1 << 20) | (1 << 3) | 1,
    (1 << 21) | (1 << 2) | 1,
    (1 << 22) | 0b11,
    (1 << 23) | (1 << 5) | 1,
    (1 << 24) | (1 << 7) | (1 << 2) | 0b11,
];

/// Largest supported total degree `e·m`.
pub const MAX_DEGREE: u32 = 31;

/// Shape of the tower `GF(2) ⊂ GF(q) ⊂ GF(q^m)` and its defining modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    e: u32,
    m: u32,
    modulus: u64,
    primitive: bool,
}

impl FieldSpec {
    /// Spec with the built-in primitive modulus of degree `e·m`.
    pub fn new(e: u32, m: u32) -> Result<Self> {
        let n = Self::check_shape(e, m)?;
        let modulus = DEFAULT_MODULI
            .get(n as usize - 1)
            .copied()
            .ok_or_else(|| Error::InvalidField(format!("no default modulus of degree {n}")))?;
        Self::with_modulus(e, m, modulus, true)
    }

    /// Spec with an explicit modulus. With `primitive` set, the class of `z` must
    /// generate the multiplicative group.
    pub fn with_modulus(e: u32, m: u32, modulus: u64, primitive: bool) -> Result<Self> {
        let n = Self::check_shape(e, m)?;
        if poly::degree(modulus) != Some(n) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:#b} does not have degree e*m = {n}"
            )));
        }
        if !poly::is_irreducible(modulus) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:#b} is reducible over GF(2)"
            )));
        }
        let spec = FieldSpec {
            e,
            m,
            modulus,
            primitive,
        };
        if primitive && !spec.is_generator(poly::rem(0b10, modulus)) {
            return Err(Error::InvalidField(format!(
                "z does not generate the multiplicative group modulo {modulus:#b}"
            )));
        }
        Ok(spec)
    }

    /// Builds a spec from a little-endian coefficient list, e.g. `[1,1,0,0,1]` for
    /// `z^4 + z + 1`. Primitivity is detected, not required.
    pub fn from_coefficients(e: u32, m: u32, coefficients: &[u8]) -> Result<Self> {
        if coefficients.len() > 64 {
            return Err(Error::InvalidField("modulus has too many coefficients".into()));
        }
        let mut modulus = 0u64;
        for (i, &c) in coefficients.iter().enumerate() {
            match c {
                0 => {}
                1 => modulus |= 1 << i,
                other => {
                    return Err(Error::InvalidField(format!(
                        "modulus coefficient {other} at position {i} is not a bit"
                    )))
                }
            }
        }
        let spec = Self::with_modulus(e, m, modulus, false)?;
        let primitive = spec.is_generator(poly::rem(0b10, modulus));
        Ok(FieldSpec { primitive, ..spec })
    }

    fn check_shape(e: u32, m: u32) -> Result<u32> {
        if e == 0 || m == 0 {
            return Err(Error::InvalidField("e and m must be positive".into()));
        }
        let n = e
            .checked_mul(m)
            .filter(|&n| n <= MAX_DEGREE)
            .ok_or_else(|| Error::InvalidField(format!("e*m exceeds {MAX_DEGREE}")))?;
        Ok(n)
    }

    fn is_generator(&self, g: u64) -> bool {
        let n = self.degree();
        let order = (1u64 << n) - 1;
        if g == 0 {
            return false;
        }
        if order == 1 {
            return g == 1;
        }
        let pow = |x: u64, k: u64| {
            let (mut acc, mut base, mut k) = (1u64, x, k);
            while k > 0 {
                if k & 1 == 1 {
                    acc = poly::mulmod(acc, base, self.modulus);
                }
                base = poly::mulmod(base, base, self.modulus);
                k >>= 1;
            }
            acc
        };
        pow(g, order) == 1
            && poly::prime_factors(order)
                .into_iter()
                .all(|p| pow(g, order / p) != 1)
    }

    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u64 {
        1 << self.e
    }
    /// Total degree `e·m` over GF(2).
    pub fn degree(&self) -> u32 {
        self.e * self.m
    }
    /// Number of field elements `q^m`.
    pub fn order(&self) -> u64 {
        1 << self.degree()
    }
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
    pub fn is_primitive(&self) -> bool {
        self.primitive
    }
}

/// An element of `GF(q^m)`: its coefficient bit vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u32 {
        self.0
    }
    pub(crate) const fn from_raw(bits: u32) -> Self {
        FieldElement(bits)
    }
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

struct Inner {
    spec: FieldSpec,
    primitive_element: FieldElement,
    base: BaseField,
}

/// The field `GF(q^m)` together with its embedded base field `GF(q)`.
///
/// Cheap to clone; all state is immutable and shared.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("spec", &self.0.spec).finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let primitive_element = if spec.primitive {
            FieldElement(poly::rem(0b10, spec.modulus) as u32)
        } else {
            (1..spec.order())
                .find(|&g| spec.is_generator(g))
                .map(|g| FieldElement(g as u32))
                .ok_or_else(|| Error::Internal("field has no primitive element".into()))?
        };
        let base = BaseField::embedded(&spec, primitive_element)?;
        Ok(Field(Arc::new(Inner {
            spec,
            primitive_element,
            base,
        })))
    }

    /// `GF(2^(e·m))` with the built-in primitive modulus.
    pub fn with_default_modulus(e: u32, m: u32) -> Result<Self> {
        Field::new(FieldSpec::new(e, m)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }
    pub fn q(&self) -> u64 {
        self.0.spec.q()
    }
    pub fn m(&self) -> usize {
        self.0.spec.m as usize
    }
    pub fn base(&self) -> &BaseField {
        &self.0.base
    }

    /// The designated primitive element `w`: the class of `z` for primitive moduli,
    /// otherwise the least generator in element order.
    pub fn primitive_element(&self) -> FieldElement {
        self.0.primitive_element
    }

    /// `w^k` for the designated primitive element.
    pub fn w_pow(&self, k: u64) -> FieldElement {
        self.pow(self.primitive_element(), k)
    }

    /// Validates a raw bit vector as an element of this field.
    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if (bits as u64) < self.0.spec.order() {
            Ok(FieldElement(bits))
        } else {
            Err(Error::Domain(format!(
                "{bits:#x} has bits beyond degree {}",
                self.0.spec.degree()
            )))
        }
    }


    /// Wraps an element together with this field for checked arithmetic.
    pub fn bind(&self, x: FieldElement) -> Result<Elem<'_>> {
        self.element(x.0).map(|value| Elem { field: self, value })
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(x.0 ^ y.0)
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(poly::mulmod(x.0 as u64, y.0 as u64, self.0.spec.modulus) as u32)
    }

    pub fn square(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    pub fn pow(&self, x: FieldElement, k: u64) -> FieldElement {
        let (mut acc, mut base, mut k) = (FieldElement::ONE, x, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(self.pow(x, self.0.spec.order() - 2))
    }

    /// `x^(2^k)`.
    pub fn frobenius(&self, x: FieldElement, k: u32) -> FieldElement {
        let k = k % self.0.spec.degree();
        (0..k).fold(x, |y, _| self.square(y))
    }

    /// Relative trace `Tr(x) = Σ_{i<m} x^(q^i)`, a value of the base field.
    pub fn rel_trace(&self, x: FieldElement) -> FieldElement {
        let e = self.0.spec.e;
        let mut acc = FieldElement::ZERO;
        let mut y = x;
        for _ in 0..self.0.spec.m {
            acc = self.add(acc, y);
            y = self.frobenius(y, e);
        }
        acc
    }

    /// Whether `y^q = y`.
    pub fn in_base_field(&self, y: FieldElement) -> bool {
        self.frobenius(y, self.0.spec.e) == y
    }

    /// All `q^m` elements in increasing integer order.
    pub fn elements(&self, limits: &Limits) -> Result<impl Iterator<Item = FieldElement>> {
        let order = self.0.spec.order();
        Limits::check("field enumeration", order as u128, limits.max_field_elements)?;
        Ok((0..order).map(|v| FieldElement(v as u32)))
    }
}

/// An element bound to its field, for arithmetic that checks both operands
/// come from the same field.
#[derive(Debug, Clone, Copy)]
pub struct Elem<'f> {
    field: &'f Field,
    value: FieldElement,
}

impl<'f> Elem<'f> {
    pub fn value(&self) -> FieldElement {
        self.value
    }

    fn same_field(&self, other: &Elem<'_>) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!(
                "{:?} vs {:?}",
                self.field.spec(),
                other.field.spec()
            )))
        }
    }

    pub fn add(&self, other: &Elem<'_>) -> Result<Elem<'f>> {
        self.same_field(other)?;
        Ok(Elem {
            field: self.field,
            value: self.field.add(self.value, other.value),
        })
    }

    pub fn mul(&self, other: &Elem<'_>) -> Result<Elem<'f>> {
        self.same_field(other)?;
        Ok(Elem {
            field: self.field,
            value: self.field.mul(self.value, other.value),
        })
    }

    pub fn inv(&self) -> Result<Elem<'f>> {
        Ok(Elem {
            field: self.field,
            value: self.field.inv(self.value)?,
        })
    }

    pub fn pow(&self, k: u64) -> Elem<'f> {
        Elem {
            field: self.field,
            value: self.field.pow(self.value, k),
        }
    }
}
