//! Contraction data between `B` and its cohomology `A`.

use mf_ainfinity::endo::{BKey, BVector};
use mf_ainfinity::report::to_canonical_json;
use mf_ainfinity::transfer::{homotopy_h, incl_i, proj_p, side_conditions};
use mf_ainfinity::Context;

fn main() -> mf_ainfinity::Result<()> {
    let ctx = Context::parse("x1^2 + x2^2", 2)?;
    let a = mf_ainfinity::transfer::a_basis(&[1], 2)?;
    let i = incl_i(&a, 2);
    println!("i(v1)    = {}", i);
    println!("p(i(v1)) = {}", proj_p(&i));

    let b = BVector::basis(BKey::from_parts(2, &[], &[1, 1], 0, &[2])?);
    println!("h{} = {}", b, homotopy_h(&b));

    let report = side_conditions(&ctx, 2);
    for r in &report.identities {
        println!("{:<20} {} ({} cases)", r.identity, r.status, r.checked);
    }
    if std::env::args().any(|a| a == "--json") {
        println!("{}", to_canonical_json(&report));
    }
    Ok(())
}
