//! Every bound for the simplex code, including the Plotkin check that it
//! meets with equality.

use batchcode::bounds::{bounds_report, plotkin_condition, CodeParams};
use batchcode::cli::render_bounds;

fn main() -> batchcode::Result<()> {
    let params = CodeParams { k: 3, n: Some(7), d: Some(4), r: 2, t: 4, q: Some(2), systematic: true };
    print!("{}", render_bounds(&bounds_report(&params)?));

    // one step in: three coordinates removed, one extra free dimension
    let p = plotkin_condition(2, 3, 4, 7, 3, 1, 2)?;
    println!("after one step: {} (lhs {} vs rhs {})", p.status, p.lhs, p.rhs);
    Ok(())
}
