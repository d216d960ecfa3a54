//! Replicating each symbol t times gives a (k, kt, 1, t) batch code whose
//! distance meets the distance bound exactly.

use batchcode::batch::verify_batch;
use batchcode::bounds::{singleton_d, thm1_d_upper};
use batchcode::constructions::replication;
use batchcode::Field;

fn main() -> batchcode::Result<()> {
    println!("{:>2} {:>2} {:>3} {:>5} {:>2} {:>5} {:>9}", "k", "t", "n", "batch", "d", "bound", "singleton");
    for k in 2..=4 {
        for t in 2..=4 {
            let code = replication(Field::binary(), k, t)?;
            let n = code.n();
            println!(
                "{k:>2} {t:>2} {n:>3} {:>5} {:>2} {:>5} {:>9}",
                verify_batch(&code, 1, t)?.holds,
                code.min_distance()?,
                thm1_d_upper(n, k, 1, t)?,
                singleton_d(n, k)?,
            );
        }
    }
    Ok(())
}
