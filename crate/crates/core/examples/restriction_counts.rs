//! `|D_f ∩ H|` three ways: element by element, by counting on the restricted
//! form, and from the restricted rank alone.
//!
//! ```bash
//! cargo run --example restriction_counts
//! ```

use ghw_core::ghw::count_from_restriction;
use ghw_core::{DefiningSet, Field, FieldElement, Limits, QuadraticForm, Result, SubspaceLattice};

pub fn run() -> Result<()> {
    let limits = Limits::default();
    let field = Field::with_default_modulus(1, 6)?;
    let f = QuadraticForm::monomial(&field, field.w_pow(1), 0, 1)?;
    let d = DefiningSet::new(&f, FieldElement::ONE, &limits)?;
    let lattice = SubspaceLattice::new(field.base(), 6);
    println!("|D| = {} for Tr(w x^3) on GF(64)", d.len());
    println!("{:>28}  {:>6}  {:>6}  {:>5}", "H (first rows)", "direct", "f|_H", "rank");
    for h in lattice.enumerate(3, &limits)?.step_by(97).take(8) {
        let direct = d.intersection_count(&h);
        let restricted = f.restrict(&h);
        let c = restricted.classify(&limits)?;
        let by_count = restricted.count_solutions(1, &limits)?;
        let by_rank = count_from_restriction(h.dim(), c.rank, c.standard, 1, 2)?;
        assert_eq!(direct, by_count);
        assert_eq!(direct, by_rank);
        println!("{:>28}  {direct:>6}  {by_count:>6}  {:>5}", format!("{:?}", &h.basis()[..2]), c.rank);
    }
    Ok(())
}

fn main() {
    run().expect("restriction example");
}
