//! Closed-form and exhaustive weight hierarchies side by side, with witnesses and
//! the uncorrected closed forms.
//!
//! ```bash
//! cargo run --example weight_hierarchy
//! ```

use ghw_core::ghw::{verify_hierarchy, LiteralValue};
use ghw_core::{Field, FieldElement, GhwOptions, QuadraticForm, Result};

pub fn run() -> Result<()> {
    let opts = GhwOptions {
        witnesses: true,
        audit: true,
        ..GhwOptions::default()
    };
    let field = Field::with_default_modulus(1, 6)?;
    let f = QuadraticForm::monomial(&field, field.w_pow(1), 0, 2)?;
    let report = verify_hierarchy(&f, FieldElement::ONE, &opts)?;
    let c = &report.classification;
    println!("Tr(w x^5) on GF(64): t = {}, standard {}, n = {}, k = {}", c.rank, c.standard, report.n, report.code_dimension);
    let formula = report.formula.as_ref().expect("closed form applies");
    let brute = report.brute.as_ref().expect("exhaustive search ran");
    println!("formula: {:?}", formula.values);
    println!("brute:   {:?}", brute.values);
    for (r, w) in brute.witnesses.iter().flatten().enumerate() {
        println!("  r = {}: maximiser of dim {} with rows {:?}", r + 1, w.dim(), w.basis());
    }
    if let Some(audit) = &report.audit {
        let shown: Vec<String> = audit
            .uncorrected
            .iter()
            .map(|v| match v {
                LiteralValue::Exact(x) => x.to_string(),
                LiteralValue::NonIntegral { non_integral } => format!("({non_integral})"),
            })
            .collect();
        println!("uncorrected closed form: {}", shown.join(", "));
        println!("  non-integral at r = {:?}", audit.non_integral_at);
    }
    Ok(())
}

fn main() {
    run().expect("hierarchy example");
}
