//! Formula against exhaustive search for every monomial form on GF(2^m), m = 2..5.
//!
//! ```bash
//! cargo run --release --example sweep
//! ```

use ghw_core::cli::{cmd_sweep, render, Format, RunConfig};
use ghw_core::Result;

pub fn run() -> Result<()> {
    let cfg = RunConfig {
        timing: false,
        ..RunConfig::default()
    };
    for m in 2..=5u32 {
        let families: Vec<u32> = (1..=m / 2).collect();
        let outcome = cmd_sweep(1, m, &families, "1", &cfg)?;
        print!("{}", render(&outcome.document, Format::Table));
        assert_eq!(outcome.exit_code, 0);
    }
    Ok(())
}

fn main() {
    run().expect("sweep");
}
