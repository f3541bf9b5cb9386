//! Rank, type and standard type of a few quadratic forms `Tr(λ x^(2^i + 1))`.
//!
//! ```bash
//! cargo run --example classify_forms
//! ```

use ghw_core::{Field, Limits, QuadraticForm, Result};

pub fn run() -> Result<()> {
    let limits = Limits::default();
    let cases = [(4u32, 1u64, 1u32), (5, 1, 1), (6, 1, 1), (6, 3, 1), (4, 3, 1), (6, 1, 2)];
    println!("{:>2}  {:>6}  {:>6}  {:>2}  {:>4}  {:>8}  degenerate", "m", "lambda", "x^e", "t", "type", "standard");
    for (m, k, i) in cases {
        let field = Field::with_default_modulus(1, m)?;
        let f = QuadraticForm::monomial(&field, field.w_pow(k), 0, i)?;
        let c = f.classify(&limits)?;
        println!(
            "{m:>2}  {:>6}  {:>6}  {:>2}  {:>4}  {:>8}  {}",
            format!("w^{k}"),
            format!("x^{}", 1 + (1u32 << i)),
            c.rank,
            c.form_type,
            c.standard,
            c.degenerate
        );
    }

    let field = Field::with_default_modulus(1, 4)?;
    let f = QuadraticForm::monomial(&field, field.w_pow(3), 0, 1)?;
    println!("Tr(w^3 x^3) on GF(16):");
    println!("  radical of the bilinear form: {:?}", f.radical().basis());
    println!("  kernel of the form:           {:?}", f.kernel().basis());
    println!("  matrix: {:?}", f.matrix().entries());
    Ok(())
}

fn main() {
    run().expect("classification example");
}
