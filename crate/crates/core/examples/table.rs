//! Relative-distance bounds as a function of rate.
//!
//! ```text
//! cargo run --example table
//! cargo run --example table -- 0.05 singleton,2:2,2:4,4:4
//! ```

use batchcode::cli::{parse_columns, parse_decimal, TableSpec};

fn main() -> batchcode::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut spec = TableSpec::default();
    if let Some(step) = args.next() {
        spec = spec.with_step(parse_decimal(&step)?)?;
    }
    if let Some(cols) = args.next() {
        spec.columns = parse_columns(&cols)?;
    }
    print!("{}", spec.render()?);
    Ok(())
}
