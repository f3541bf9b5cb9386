//! The code of a defining set: generator matrix, dimension and weight distribution.
//!
//! ```bash
//! cargo run --example build_code
//! ```

use ghw_core::{DefiningSet, Field, FieldElement, Limits, LinearCode, QuadraticForm, Result};

pub fn run() -> Result<()> {
    let limits = Limits::default();
    let field = Field::with_default_modulus(1, 4)?;
    let f = QuadraticForm::monomial(&field, field.w_pow(1), 0, 1)?;
    let d = DefiningSet::new(&f, FieldElement::ONE, &limits)?;
    println!("D = {{x : Tr(w x^3) = 1}} in GF(16):");
    let shown: Vec<String> = d.elements().iter().map(|x| x.to_string()).collect();
    println!("  {}", shown.join(" "));

    let code = LinearCode::from_defining_set(&d, f.basis())?;
    println!("[n, k] = [{}, {}]", code.len(), code.dimension());
    for row in code.raw_matrix() {
        println!("  {row:?}");
    }
    println!("weight distribution: {:?}", code.weight_distribution(&limits)?);
    println!("minimum distance:    {:?}", code.minimum_distance(&limits)?);
    Ok(())
}

fn main() {
    run().expect("code example");
}
