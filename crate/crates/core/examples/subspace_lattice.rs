//! Counting and enumerating subspaces, duals and isotropic subspaces.
//!
//! ```bash
//! cargo run --example subspace_lattice
//! ```

use ghw_core::subspace::{find_isotropic, gaussian_binomial};
use ghw_core::{Field, Limits, QuadraticForm, Result, SubspaceLattice};

pub fn run() -> Result<()> {
    let limits = Limits::default();
    for q in [2u64, 4] {
        let row: Vec<String> = (0..=6).map(|r| gaussian_binomial(6, r, q).to_string()).collect();
        println!("[6 choose r]_{q}: {}", row.join(" "));
    }

    let field = Field::with_default_modulus(1, 4)?;
    let lattice = SubspaceLattice::new(field.base(), 4);
    println!("pivot patterns of 2-dim subspaces of GF(2)^4: {:?}", lattice.pivot_patterns(2));
    let first: Vec<_> = lattice.enumerate(2, &limits)?.take(3).collect();
    for h in &first {
        println!("  {:?}", h.basis());
    }

    let f = QuadraticForm::monomial(&Field::with_default_modulus(1, 5)?, Field::with_default_modulus(1, 5)?.w_pow(1), 0, 1)?;
    let m = f.field().m();
    let big = SubspaceLattice::new(f.field().base(), m);
    let b = f.matrix().bilinear_matrix();
    let h = find_isotropic(&f, 2, &limits)?;
    let dual = big.dual_under(&b, &h);
    println!("isotropic H of dim {} for Tr(w x^3) on GF(32): {:?}", h.dim(), h.basis());
    println!("  H inside its dual (dim {}): {}", dual.dim(), big.is_subspace_of(&h, &dual));
    Ok(())
}

fn main() {
    run().expect("subspace example");
}
