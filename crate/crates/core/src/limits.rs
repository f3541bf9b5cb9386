use crate::error::{Error, Result};

/// Enumeration bounds shared by every exhaustive routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest field that may be enumerated element by element.
    pub max_field_elements: u128,
    /// Largest number of subspaces a single enumeration may visit.
    pub max_subspaces: u128,
    /// Largest number of vectors listed out of one subspace.
    pub max_span_elements: u128,
    /// Largest number of codewords a weight distribution may visit.
    pub max_codewords: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_field_elements: 1 << 24,
            max_subspaces: 10_000_000,
            max_span_elements: 1 << 24,
            max_codewords: 1 << 24,
        }
    }
}

impl Limits {
    pub fn with_max_subspaces(mut self, bound: u128) -> Self {
        self.max_subspaces = bound;
        self
    }

    pub(crate) fn check(what: &'static str, needed: u128, bound: u128) -> Result<()> {
        if needed > bound {
            Err(Error::capacity(what, needed, bound))
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u128, exp: u32) -> u128 {
    base.checked_pow(exp).unwrap_or(u128::MAX)
}
