//! Enumerate ribbon trees and find the ones that contribute.

use mf_ainfinity::trees::{contributing_m, enumerate_trees, theta_basis, tree_count};
use mf_ainfinity::verify::nonzero_trees;
use mf_ainfinity::Context;

fn main() -> mf_ainfinity::Result<()> {
    for k in 2..=5 {
        let counts: Vec<String> = (0..=3).map(|m| tree_count(k, m).to_string()).collect();
        println!("k = {}: trees with m = 0..3 bivalent vertices: {}", k, counts.join(", "));
    }
    for t in enumerate_trees(3, 1) {
        println!("  {}", t);
    }

    let ctx = Context::parse("x1*x2*x3", 3)?;
    println!("contributing m for k = 3, d = 3: {:?}", contributing_m(3, 3, 4).values);
    for t in nonzero_trees(&ctx, 3, 1, &theta_basis(3, 1)) {
        println!("nonzero at arity 3: {}", t);
    }
    Ok(())
}
