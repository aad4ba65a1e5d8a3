//! At degree 2 the transferred product is a Clifford multiplication.

use mf_ainfinity::transfer::a_basis;
use mf_ainfinity::trees::{render_avector, mu_k};
use mf_ainfinity::Context;

fn main() -> mf_ainfinity::Result<()> {
    let n = 3;
    let ctx = Context::parse("x1^2 + 4*x1*x2 - x2^2 + 3*x3^2", n)?;
    let v: Vec<_> = (1..=n).map(|i| a_basis(&[i], n)).collect::<Result<_, _>>()?;
    for i in 0..n {
        for j in 0..n {
            let ij = mu_k(&ctx, &[v[i].clone(), v[j].clone()]);
            let ji = mu_k(&ctx, &[v[j].clone(), v[i].clone()]);
            println!(
                "v{} v{} = {:<16} v{}v{} + v{}v{} = {}",
                i + 1,
                j + 1,
                render_avector(&ij),
                i + 1,
                j + 1,
                j + 1,
                i + 1,
                render_avector(&ij.plus(&ji))
            );
        }
    }
    Ok(())
}
