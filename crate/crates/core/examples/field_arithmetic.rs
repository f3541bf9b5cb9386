//! Arithmetic in GF(16) and in GF(16) viewed over GF(4).
//!
//! ```bash
//! cargo run --example field_arithmetic
//! ```

use ghw_core::{BasisOverFq, Field, Result};

pub fn run() -> Result<()> {
    let f16 = Field::with_default_modulus(1, 4)?;
    let w = f16.primitive_element();
    println!("GF(16) modulo z^4 + z + 1, w = {w}");
    for k in [1u64, 3, 4, 8, 15] {
        let x = f16.w_pow(k);
        println!("  w^{k:<2} = {x}  Tr(w^{k}) = {}", f16.rel_trace(x));
    }
    let x = f16.w_pow(7);
    let inv = f16.inv(x)?;
    println!("  w^7 * (w^7)^-1 = {}", f16.mul(x, inv));

    let basis = BasisOverFq::polynomial(&f16)?;
    println!("  coordinates of w^4 in 1, w, w^2, w^3: {:?}", basis.coords(f16.w_pow(4)));

    let over4 = Field::with_default_modulus(2, 2)?;
    let fq = over4.base();
    println!("GF(16) over GF({}): {} elements, labels of GF(4):", over4.q(), over4.spec().order());
    for label in fq.labels() {
        println!("  label {label} = {}", fq.element(label));
    }
    let y = over4.w_pow(2);
    println!("  Tr_(16/4)(w^2) = {} (label {:?})", over4.rel_trace(y), fq.label(over4.rel_trace(y)));
    Ok(())
}

fn main() {
    run().expect("field arithmetic example");
}
