//! Systematic codes with pairwise parities: (k, k + ceil(k/2), 2, 2) batch
//! codes that meet the systematic length bound with equality.

use batchcode::batch::verify_batch;
use batchcode::bounds::{cor1_n_lower, cor2_n_lower};
use batchcode::cli::render_matrix_file;
use batchcode::constructions::systematic_parity;

fn main() -> batchcode::Result<()> {
    for k in 4..=7 {
        let code = systematic_parity(k)?;
        let d = code.min_distance()?;
        let general = cor1_n_lower(k, d, 2, 2)?;
        let systematic = cor2_n_lower(k, d, 2, 2)?.expect("t = 2 admits beta = 2");
        println!(
            "k={k} n={} d={d} batch(2,2)={} general bound {} systematic bound {}",
            code.n(),
            verify_batch(&code, 2, 2)?.holds,
            general.value,
            systematic.value,
        );
        if k == 5 {
            print!("{}", render_matrix_file(&code));
        }
    }
    Ok(())
}
