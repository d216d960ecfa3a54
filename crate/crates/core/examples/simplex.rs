//! The binary simplex code of length 7, end to end.
//!
//! Loads `examples/data/simplex.txt`, lists the small recovery sets of every
//! symbol, and finds the largest query count the code serves with r = 2.
//!
//! ```text
//! cargo run --example simplex
//! ```

use batchcode::batch::{max_t, verify_batch_with_witnesses};
use batchcode::cli::parse_matrix_file;
use batchcode::RecoveryCatalog;

fn main() -> batchcode::Result<()> {
    let text = include_str!("data/simplex.txt");
    let code = parse_matrix_file(text)?;
    println!("[{}, {}, {}] binary code", code.n(), code.k(), code.min_distance()?);

    let r = 2;
    let catalog = RecoveryCatalog::build(&code, r)?;
    for i in 0..code.k() {
        let sets: Vec<String> = catalog.sets(i).iter().map(ToString::to_string).collect();
        println!("x{}: {}", i + 1, sets.join(" "));
    }

    let t = max_t(&code, r, 8)?;
    println!("serves every multiset of {t} queries with r = {r}");

    let verdict = verify_batch_with_witnesses(&code, r, t)?;
    for w in verdict.witnesses.iter().flatten().take(3) {
        let sets: Vec<String> = w.sets.iter().map(|s| s.coords.to_string()).collect();
        println!("  {} <- {}", w.query, sets.join(" "));
    }

    let next = verify_batch_with_witnesses(&code, r, t + 1)?;
    if let Some(bad) = next.counterexample {
        println!("t = {} fails on {bad}", t + 1);
    }
    Ok(())
}
