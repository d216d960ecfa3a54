//! The subcode construction on the simplex code.
//!
//! First with a scripted first step (read x1 twice from {1} and {2,4}, keep
//! the pattern 101), then with the default chooser.

use batchcode::cli::{parse_choices, parse_matrix_file};
use batchcode::subcode::{run_algorithm, DefaultChooser, ScriptedChooser};

fn main() -> batchcode::Result<()> {
    let code = parse_matrix_file(include_str!("data/simplex.txt"))?;
    let script = parse_choices(include_str!("data/simplex_choices.txt"))?;

    let trace = run_algorithm(&code, 2, 2, &mut ScriptedChooser::new(script))?;
    print!("{trace}");
    for check in trace.plotkin_checks()? {
        println!("plotkin after {} steps: {}", check.j, check.status);
    }
    println!("valid={}\n", trace.is_valid());

    let trace = run_algorithm(&code, 2, 4, &mut DefaultChooser)?;
    print!("{trace}");
    println!("valid={}", trace.is_valid());
    Ok(())
}
