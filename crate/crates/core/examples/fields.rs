//! Non-binary codes: GF(4) arithmetic and a ternary code's recovery sets.

use batchcode::algebra::format_word;
use batchcode::batch::max_t;
use batchcode::recovery::minimal_recovery_sets;
use batchcode::{Field, LinearCode};

fn main() -> batchcode::Result<()> {
    let gf4 = Field::new(4)?;
    println!("GF(4), modulus {:?}", gf4.modulus());
    for a in gf4.elements() {
        let row: Vec<String> = gf4.elements().map(|b| gf4.mul(a, b).to_string()).collect();
        println!("  {a} * _ = {}", row.join(" "));
    }

    // x1, x2, x1+x2, x1+2x2 over GF(3)
    let gf3 = Field::new(3)?;
    let code = LinearCode::from_rows(gf3, &[[1, 0, 1, 1], [0, 1, 1, 2]])?;
    println!("ternary [4,2,{}] code", code.min_distance()?);
    for word in code.codewords()?.words() {
        print!("{} ", format_word(word, 3));
    }
    println!();
    for i in 0..code.k() {
        let sets: Vec<String> = minimal_recovery_sets(&code, i, 2)?.iter().map(|s| s.coords.to_string()).collect();
        println!("x{}: {}", i + 1, sets.join(" "));
    }
    println!("max t with r = 2: {}", max_t(&code, 2, 4)?);
    Ok(())
}
