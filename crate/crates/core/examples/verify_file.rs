//! Checks a generator-matrix file for the batch property.
//!
//! ```text
//! cargo run --example verify_file -- examples/data/simplex.txt 2 4
//! ```

use batchcode::batch::verify_batch;
use batchcode::cli::load_code;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [path, r, t] = args.as_slice() else {
        eprintln!("usage: verify_file FILE R T");
        std::process::exit(2);
    };
    let (Ok(r), Ok(t)) = (r.parse(), t.parse()) else {
        eprintln!("R and T must be positive integers");
        std::process::exit(2);
    };
    let code = match load_code(path.as_ref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    match verify_batch(&code, r, t) {
        Ok(v) if v.holds => println!("({}, {}, {r}, {t}) batch code", code.k(), code.n()),
        Ok(v) => {
            println!("not a batch code; first failing query {}", v.counterexample.unwrap());
            std::process::exit(1);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
}
