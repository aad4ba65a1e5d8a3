//! Parse a potential, print its canonical form, gradient and Euler defect.

use mf_ainfinity::poly::de_rham;
use mf_ainfinity::{parse, Context};

fn main() -> mf_ainfinity::Result<()> {
    let src = std::env::args().nth(1).unwrap_or_else(|| "x1^3 - 3/2*x1*x2^2 + x2^3".into());
    let p = parse::parse_potential(&src, 2)?;
    println!("p = {} (degree {})", parse::pretty_print(&p), p.d());
    for (i, g) in de_rham(p.polynomial()) {
        println!("  dp/dx{} = {}", i, g);
    }
    let ctx = Context::new(p);
    println!("sum x_i dp/dx_i - d p = {}", ctx.euler_defect());

    match parse::parse_potential("x1^2 + x2", 2) {
        Err(e) => println!("rejected: {}", e),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
