//! Block lists of the semiorthogonal decompositions.

use mf_ainfinity::report::to_canonical_json;
use mf_ainfinity::sod::{lefschetz_blocks, orlov_case, relative_ci, veronese_branch};

fn main() -> mf_ainfinity::Result<()> {
    for (n, d) in [(5, 3), (4, 4), (3, 5)] {
        println!("hypersurface N = {}, d = {}: {}", n, d, orlov_case(n, d)?.to_text());
    }
    println!("relative (3; 2, 3): {}", relative_ci(3, &[2, 3])?.to_text());
    let l = lefschetz_blocks(5, 2)?;
    println!("lefschetz rank 5, d = 2: i = {}, k = {}", l.i, l.k);
    for b in veronese_branch(6, 3, 2)? {
        println!("{}", to_canonical_json(&b));
    }
    Ok(())
}
