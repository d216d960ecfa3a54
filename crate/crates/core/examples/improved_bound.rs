//! The refined length bound for k = 12, d = 3, r = 2, t = 3.
//!
//! Prints every admissible (beta, epsilon, lambda) with its three terms, then
//! the overall report.

use batchcode::bounds::{bounds_report, improved_beta_cap, improved_terms, CodeParams};
use batchcode::cli::render_bounds;

fn main() -> batchcode::Result<()> {
    let (k, d, r, t) = (12, 3, 2, 3);
    let cap = improved_beta_cap(k, r, t).expect("k is large enough");
    for beta in 1..=cap {
        let top = r * beta - beta;
        for epsilon in 1..=top {
            for lambda in 1..=top {
                let terms = improved_terms(k, d, r, beta, epsilon, lambda)?;
                println!(
                    "beta={beta} eps={epsilon} lambda={lambda}: A={} B={} C={} -> {}",
                    terms.a,
                    terms.b,
                    terms.c,
                    terms.min()
                );
            }
        }
    }
    println!();
    let report = bounds_report(&CodeParams { k, n: None, d: Some(d), r, t, q: None, systematic: false })?;
    print!("{}", render_bounds(&report));
    Ok(())
}
