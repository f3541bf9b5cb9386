//! The six worked examples, each found by scanning `λ = w^k` for the required
//! classification.
//!
//! ```bash
//! cargo run --example worked_examples
//! ```

use ghw_core::cli::{cmd_examples, render, Format, RunConfig};
use ghw_core::Result;

pub fn run() -> Result<()> {
    let cfg = RunConfig {
        timing: false,
        ..RunConfig::default()
    };
    let outcome = cmd_examples(&cfg)?;
    print!("{}", render(&outcome.document, Format::Table));
    assert_eq!(outcome.exit_code, 0);
    Ok(())
}

fn main() {
    run().expect("worked examples");
}
