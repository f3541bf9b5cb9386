//! Defining-set codes from quadratic forms over fields of characteristic two,
//! and their generalized Hamming weights.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: arithmetic in `GF(2^(e·m))` seen as an `m`-dimensional space over
//!   `GF(q)`, `q = 2^e`, with the relative trace and coordinates in a basis.
//! * [`linalg`]: dense row reduction over `GF(q)` on coordinate vectors.
//! * [`quadform`]: quadratic forms `Tr(F(x))` with `F` a Dembowski–Ostrom polynomial,
//!   their matrices, kernels, rank/type and standard type.
//! * [`subspace`]: canonical subspaces of `GF(q)^m`, enumeration by echelon pattern,
//!   duals under an alternating form and isotropic subspaces.
//! * [`code`]: the code `C_D` of a defining set, weight distributions and subcode
//!   support minimisation.
//! * [`ghw`]: weight hierarchies by exhaustive subspace search and by closed form,
//!   and a verifier that compares the two.
//! * [`cli`]: the JSON form-spec format, result documents and the commands behind
//!   the `ghw` binary.

pub mod cli;
pub mod code;
mod error;
pub mod field;
pub mod ghw;
mod limits;
pub mod linalg;
pub mod quadform;
pub mod subspace;

pub use error::{Error, Result};
pub use limits::Limits;

pub use code::{DefiningSet, LinearCode};
pub use field::{BaseField, BasisOverFq, Field, FieldElement, FieldSpec};
pub use ghw::{GhwOptions, HierarchyReport, Method, WeightHierarchy};
pub use quadform::{Classification, DoPolynomial, FormMatrix, QuadraticForm, StandardType};
pub use subspace::{Subspace, SubspaceLattice};
