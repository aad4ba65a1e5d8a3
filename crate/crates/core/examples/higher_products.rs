//! `μ^d` on generators against the mixed partials of `p`.

use mf_ainfinity::exterior::Multivector;
use mf_ainfinity::trees::{render_avector, tuples, Engine, MuTable, TransferOptions};
use mf_ainfinity::verify::predicted_mu_d;
use mf_ainfinity::Context;

fn main() -> mf_ainfinity::Result<()> {
    let src = std::env::args().nth(1).unwrap_or_else(|| "x1^4 - 2*x1^2*x2*x3 + 3*x2^3*x3 + x3^4".into());
    let ctx = Context::parse(&src, 3)?;
    let d = ctx.d() as usize;
    let table = MuTable::compute(&Engine::new(&ctx, TransferOptions::default()), d, 1);
    let gens: Vec<Multivector> = (0..3).map(|i| Multivector::from_indices(&[i + 1], 3)).collect::<Result<_, _>>()?;
    for t in tuples(&gens, d) {
        let got = table.get(&t).unwrap();
        if got.is_zero() {
            continue;
        }
        let idx: Vec<usize> = t.iter().map(|m| m.indices()[0]).collect();
        let expected = predicted_mu_d(&ctx, &idx);
        println!("mu{}{:?} = {:<10} predicted {}", d, idx, render_avector(got), render_avector(&expected));
    }
    Ok(())
}
