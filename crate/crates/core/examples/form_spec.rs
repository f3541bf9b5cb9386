//! Reading a JSON form spec and rendering one document as JSON, table and CSV.
//!
//! ```bash
//! cargo run --example form_spec
//! ```

use ghw_core::cli::{cmd_hierarchy, render, Format, FormSpecFile, MethodArg, RunConfig};
use ghw_core::Result;

const SPEC: &str = r#"{
  "q_exponent": 1,
  "degree": 4,
  "modulus": [1, 1, 0, 0, 1],
  "monomials": [ { "i": 0, "j": 1, "lambda": "w^3" } ],
  "a": "1"
}"#;

pub fn run() -> Result<()> {
    let spec = FormSpecFile::from_json(SPEC)?;
    let cfg = RunConfig {
        timing: false,
        audit: true,
        ..RunConfig::default()
    };
    let outcome = cmd_hierarchy(&spec, MethodArg::Both, &cfg)?;
    for format in [Format::Json, Format::Table, Format::Csv] {
        println!("--- {format:?}");
        print!("{}", render(&outcome.document, format));
    }
    Ok(())
}

fn main() {
    run().expect("form spec example");
}
